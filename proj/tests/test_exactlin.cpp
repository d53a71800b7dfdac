#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hlx/subspace.hpp"

using namespace hlx;

namespace {

const Field Q = rationals();

Matrix mat(Field f, const std::vector<std::vector<long>>& rows, size_t cols) {
  std::vector<Vec> vr;
  for (const auto& r : rows) {
    Vec v;
    for (long x : r) v.push_back(FieldElement(f, x));
    vr.push_back(v);
  }
  return Matrix::from_rows(f, cols, vr);
}

Vec vec(Field f, const std::vector<long>& xs) {
  Vec v;
  for (long x : xs) v.push_back(FieldElement(f, x));
  return v;
}

Matrix random_matrix(Field f, size_t rows, size_t cols, std::mt19937_64& rng, long lo, long hi) {
  Matrix m(f, rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j)
      m.at(i, j) = FieldElement(f, lo + static_cast<long>(rng() % (hi - lo + 1)));
  return m;
}

}  // namespace

TEST_CASE("field arithmetic basics") {
  FieldElement a(Q, 6, 4);
  CHECK(a.str() == "3/2");
  CHECK((a + a).str() == "3");
  CHECK((a - a).is_zero());
  CHECK((a * a.inverse()).is_one());
  CHECK(FieldElement::parse(Q, "-2/6").str() == "-1/3");

  Field f5 = prime_field(5);
  FieldElement b(f5, 7);
  CHECK(b.residue() == 2);
  CHECK((b * b).residue() == 4);
  CHECK(b.inverse().residue() == 3);  // 2*3 = 6 = 1 mod 5
  CHECK((-b).residue() == 3);
  CHECK_THROWS_AS(Field(6), Error);
  CHECK_THROWS_AS(FieldElement(Q, 1) + b, Error);
}

TEST_CASE("rref: identity, rank-1 over Q, characteristic 2") {
  auto id3 = Matrix::identity(Q, 3);
  auto r = rref(id3);
  CHECK(r.mat == id3);
  CHECK(r.pivots == std::vector<size_t>{0, 1, 2});

  auto r2 = rref(mat(Q, {{2, 4}, {1, 2}}, 2));
  CHECK(r2.mat == mat(Q, {{1, 2}, {0, 0}}, 2));
  CHECK(r2.pivots == std::vector<size_t>{0});

  Field f2 = prime_field(2);
  auto r3 = rref(mat(f2, {{1, 1}, {1, 1}}, 2));
  CHECK(r3.mat == mat(f2, {{1, 1}, {0, 0}}, 2));
  CHECK(r3.pivots == std::vector<size_t>{0});
}

TEST_CASE("rref is idempotent on random matrices") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 30; ++t) {
    Matrix m = random_matrix(Q, 3 + t % 3, 2 + t % 4, rng, -4, 4);
    auto once = rref(m);
    auto twice = rref(once.mat);
    CHECK(once.mat == twice.mat);
    CHECK(once.pivots == twice.pivots);
  }
}

TEST_CASE("kernel: zero, identity, coordinate projection") {
  CHECK(kernel(Matrix(Q, 2, 2)) == Subspace::full(Q, 2));
  CHECK(kernel(Matrix::identity(Q, 4)) == Subspace::zero(Q, 4));
  auto k = kernel(mat(Q, {{1, 0, 0}, {0, 1, 0}}, 3));
  CHECK(k == Subspace::span(Q, 3, {vec(Q, {0, 0, 1})}));
}

TEST_CASE("rank-nullity on random matrices over Q and F_p") {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 40; ++t) {
    Field f = (t % 2 == 0) ? Q : prime_field(5);
    Matrix m = random_matrix(f, 2 + t % 4, 2 + (t / 2) % 4, rng, -3, 3);
    CHECK(kernel(m).dim() + rank(m) == m.cols());
  }
}

TEST_CASE("F_p pipeline agrees with Q pipeline on random integer matrices") {
  // Entries are small and the prime is large, so no pivot is killed mod p.
  std::mt19937_64 rng(56);
  Field fp = prime_field(65521);
  for (int t = 0; t < 20; ++t) {
    Matrix mq = random_matrix(Q, 3, 4, rng, -2, 2);
    Matrix mp(fp, 3, 4);
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 4; ++j)
        mp.at(i, j) = FieldElement::parse(fp, mq.at(i, j).str());
    auto rq = rref(mq);
    auto rp = rref(mp);
    REQUIRE(rq.pivots == rp.pivots);
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 4; ++j)
        CHECK(FieldElement::parse(fp, rq.mat.at(i, j).str()) == rp.mat.at(i, j));
  }
}

TEST_CASE("complement: trivial, pivot-greedy choice, equal spaces") {
  auto full3 = Subspace::full(Q, 3);
  CHECK(complement(Subspace::zero(Q, 3), full3) == full3);

  auto u = Subspace::span(Q, 3, {vec(Q, {0, 0, 1})});
  CHECK(complement(u, full3) == Subspace::span(Q, 3, {vec(Q, {1, 0, 0}), vec(Q, {0, 1, 0})}));
  CHECK(complement(u, u) == Subspace::zero(Q, 3));

  auto w = Subspace::span(Q, 3, {vec(Q, {1, 1, 0})});
  CHECK_THROWS_AS(complement(w, u), Error);
}

TEST_CASE("complement splits the enclosing space") {
  std::mt19937_64 rng(78);
  for (int t = 0; t < 30; ++t) {
    Matrix vm = random_matrix(Q, 3, 4, rng, -2, 2);
    Subspace v = Subspace::row_space(vm);
    Matrix um = random_matrix(Q, 2, v.dim() == 0 ? 1 : v.dim(), rng, -2, 2);
    // Span random combinations of v's basis to get u inside v.
    std::vector<Vec> uvecs;
    for (size_t i = 0; i < um.rows() && v.dim() > 0; ++i) uvecs.push_back(v.from_coords(um.row(i)));
    Subspace u = Subspace::span(Q, 4, uvecs);
    Subspace w = complement(u, v);
    CHECK(u.dim() + w.dim() == v.dim());
    CHECK(sum(u, w) == v);
  }
}

TEST_CASE("invariant complement: identity twist, eigenspace split, Jordan block") {
  auto full2 = Subspace::full(Q, 2);
  auto u = Subspace::span(Q, 2, {vec(Q, {1, 0})});

  auto any = invariant_complement(u, full2, Matrix::identity(Q, 2));
  REQUIRE(any.has_value());
  CHECK(*any == Subspace::span(Q, 2, {vec(Q, {0, 1})}));

  auto diag = invariant_complement(u, full2, mat(Q, {{1, 0}, {0, 2}}, 2));
  REQUIRE(diag.has_value());
  CHECK(*diag == Subspace::span(Q, 2, {vec(Q, {0, 1})}));

  auto jordan = invariant_complement(u, full2, mat(Q, {{1, 1}, {0, 1}}, 2));
  CHECK(!jordan.has_value());

  CHECK_THROWS_AS(invariant_complement(u, full2, mat(Q, {{0, 1}, {1, 0}}, 2)), Error);
}

TEST_CASE("Jordan block has no invariant line complement: exhaustion over F_5") {
  // Any complement of span{e1} in F^2 is spanned by (t, 1); invariance of the
  // line under [[1,1],[0,1]] forces t+1 = t. Checked exhaustively mod 5.
  Field f5 = prime_field(5);
  Matrix a = mat(f5, {{1, 1}, {0, 1}}, 2);
  auto u = Subspace::span(f5, 2, {vec(f5, {1, 0})});
  for (long t = 0; t < 5; ++t) {
    Vec cand = vec(f5, {t, 1});
    Subspace line = Subspace::span(f5, 2, {cand});
    CHECK(sum(u, line).dim() == 2);
    CHECK(!line.contains(a.apply(cand)));
  }
  CHECK(!invariant_complement(u, Subspace::full(f5, 2), a).has_value());
}

TEST_CASE("invariant complement result is invariant and splits") {
  std::mt19937_64 rng(90);
  for (int t = 0; t < 25; ++t) {
    // Diagonal twists keep coordinate subspaces invariant.
    Field f = (t % 2 == 0) ? Q : prime_field(3);
    Matrix a(f, 3, 3);
    for (size_t i = 0; i < 3; ++i) a.at(i, i) = FieldElement(f, 1 + static_cast<long>(rng() % 2));
    std::vector<Vec> uv;
    for (size_t i = 0; i < 3; ++i)
      if (rng() % 2) uv.push_back(unit_vec(f, 3, i));
    Subspace u = Subspace::span(f, 3, uv);
    auto w = invariant_complement(u, Subspace::full(f, 3), a);
    REQUIRE(w.has_value());
    CHECK(u.dim() + w->dim() == 3);
    CHECK(w->contains(map_subspace(a, *w)));
  }
}

TEST_CASE("solve: identity, free variable zeroed, inconsistent") {
  auto b = vec(Q, {3, -1});
  auto x = solve(Matrix::identity(Q, 2), b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  auto x2 = solve(mat(Q, {{1, 1}}, 2), vec(Q, {2}));
  REQUIRE(x2.has_value());
  CHECK(*x2 == vec(Q, {2, 0}));

  CHECK(!solve(mat(Q, {{0}}, 1), vec(Q, {1})).has_value());
}

TEST_CASE("inverse round trip and singular rejection") {
  auto m = mat(Q, {{2, 1}, {1, 1}}, 2);
  auto mi = inverse(m);
  REQUIRE(mi.has_value());
  CHECK((m * *mi).is_identity());
  CHECK(!inverse(mat(Q, {{1, 2}, {2, 4}}, 2)).has_value());
}

TEST_CASE("subspace canonical form gives O(1) equality") {
  auto s1 = Subspace::span(Q, 3, {vec(Q, {1, 1, 0}), vec(Q, {0, 0, 2})});
  auto s2 = Subspace::span(Q, 3, {vec(Q, {1, 1, 2}), vec(Q, {1, 1, 1})});
  CHECK(s1 == s2);
  CHECK(s1.basis() == mat(Q, {{1, 1, 0}, {0, 0, 1}}, 3));
}

TEST_CASE("intersection and sum are lattice operations") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 25; ++t) {
    Subspace a = Subspace::row_space(random_matrix(Q, 2, 4, rng, -2, 2));
    Subspace b = Subspace::row_space(random_matrix(Q, 2, 4, rng, -2, 2));
    Subspace i = intersect(a, b);
    Subspace s = sum(a, b);
    CHECK(a.contains(i));
    CHECK(b.contains(i));
    CHECK(s.contains(a));
    CHECK(s.contains(b));
    CHECK(i.dim() + s.dim() == a.dim() + b.dim());
  }
}
