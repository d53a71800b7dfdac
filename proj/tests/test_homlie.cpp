#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hlx/catalog.hpp"

using namespace hlx;

namespace {

const Field Q = rationals();

Vec vec(Field f, const std::vector<long>& xs) {
  Vec v;
  for (long x : xs) v.push_back(FieldElement(f, x));
  return v;
}

// Direct evaluation of the twisted Jacobi sum from the raw tensor; kept
// separate from validate() so the two can disagree.
Vec jacobi_sum(const HomLieAlgebra& L, size_t i, size_t j, size_t k) {
  Vec t = L.bracket(L.alpha().col(i), L.bracket_basis(j, k));
  t = add(t, L.bracket(L.alpha().col(j), L.bracket_basis(k, i)));
  return add(t, L.bracket(L.alpha().col(k), L.bracket_basis(i, j)));
}

}  // namespace

TEST_CASE("validate accepts the abelian and Heisenberg algebras") {
  CHECK(validate(HomLieAlgebra::abelian(Q, 3)).ok());

  HomLieAlgebra h3 = heisenberg(Q);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j)
      for (size_t k = 0; k < 3; ++k) CHECK(is_zero_vec(jacobi_sum(h3, i, j, k)));
  CHECK(validate(h3).ok());
}

TEST_CASE("validate flags broken skew-symmetry with its witness") {
  HomLieAlgebra bad = heisenberg(Q);
  bad.set_c(1, 0, 2, FieldElement(Q, 1));  // now c(0,1,2) == c(1,0,2) == 1
  auto r = validate(bad);
  CHECK(!r.ok());
  REQUIRE(r.find("skew") != nullptr);
  CHECK(!r.find("skew")->ok);
  CHECK(r.find("skew")->witness == "(e1,e2)");
}

TEST_CASE("validate flags a singular twist") {
  Matrix alpha(Q, 2, 2);
  alpha.at(0, 0) = FieldElement(Q, 1);
  auto r = validate(HomLieAlgebra::abelian_twisted(Q, 2, alpha));
  CHECK(!r.find("regular")->ok);
  CHECK(r.find("skew")->ok);
}

TEST_CASE("every catalog algebra validates and has an invertible twist") {
  for (const auto& entry : algebra_catalog()) {
    INFO(entry.name);
    CHECK(validate(entry.algebra).ok());
    auto inv = inverse(entry.algebra.alpha());
    REQUIRE(inv.has_value());
    CHECK((entry.algebra.alpha() * *inv).is_identity());
  }
}

TEST_CASE("single-entry mutations stay valid or fail exactly the right classes") {
  std::mt19937_64 rng(7);
  for (const auto& entry : algebra_catalog()) {
    const size_t n = entry.algebra.dim();
    if (n == 0) continue;
    for (int t = 0; t < 50; ++t) {
      HomLieAlgebra m = entry.algebra;
      size_t i = rng() % n, j = rng() % n, k = rng() % n;
      m.set_c(i, j, k, m.c(i, j, k) + FieldElement(m.field(), 1 + static_cast<long>(rng() % 3)));

      // Independent recomputation of which families break.
      bool skew_bad = false;
      for (size_t a = 0; a < n; ++a)
        for (size_t b = a; b < n; ++b)
          for (size_t c = 0; c < n; ++c)
            skew_bad |= (a == b) ? !m.c(a, a, c).is_zero() : !(m.c(a, b, c) == -m.c(b, a, c));
      bool jac_bad = false;
      for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
          for (size_t c = 0; c < n; ++c) jac_bad |= !is_zero_vec(jacobi_sum(m, a, b, c));
      bool mult_bad = false;
      for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
          mult_bad |= !(m.alpha().apply(m.bracket_basis(a, b)) ==
                        m.bracket(m.alpha().col(a), m.alpha().col(b)));

      auto r = validate(m);
      INFO(entry.name << " mutation #" << t);
      CHECK(r.find("skew")->ok == !skew_bad);
      CHECK(r.find("hom_jacobi")->ok == !jac_bad);
      CHECK(r.find("multiplicative")->ok == !mult_bad);
      CHECK(r.find("regular")->ok);
    }
  }
}

TEST_CASE("bracket_vec: tensor contraction, alternation, abelian") {
  HomLieAlgebra h3 = heisenberg(Q);
  CHECK(h3.bracket(vec(Q, {1, 0, 0}), vec(Q, {0, 1, 0})) == vec(Q, {0, 0, 1}));

  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    Vec x = vec(Q, {static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 7) - 3,
                    static_cast<long>(rng() % 7) - 3});
    CHECK(is_zero_vec(h3.bracket(x, x)));
  }

  HomLieAlgebra ab = HomLieAlgebra::abelian(Q, 3);
  CHECK(is_zero_vec(ab.bracket(vec(Q, {1, 2, 3}), vec(Q, {4, 5, 6}))));
  CHECK_THROWS_AS(h3.bracket(vec(Q, {1, 0}), vec(Q, {0, 1, 0})), Error);
}

TEST_CASE("center: abelian, Heisenberg, twisted solvable") {
  CHECK(center(HomLieAlgebra::abelian(Q, 4)) == Subspace::full(Q, 4));
  CHECK(center(heisenberg(Q)) == Subspace::span(Q, 3, {vec(Q, {0, 0, 1})}));
  CHECK(center(solvable2(Q, 2)) == Subspace::zero(Q, 2));
}

TEST_CASE("derived: abelian, Heisenberg, solvable") {
  CHECK(derived(HomLieAlgebra::abelian(Q, 3)) == Subspace::zero(Q, 3));
  CHECK(derived(heisenberg(Q)) == Subspace::span(Q, 3, {vec(Q, {0, 0, 1})}));
  CHECK(derived(solvable2(Q, 2)) == Subspace::span(Q, 2, {vec(Q, {0, 1})}));
}

TEST_CASE("center and derived are ideals on identity-twist catalog algebras") {
  for (const auto& entry : algebra_catalog()) {
    if (!entry.algebra.alpha().is_identity()) continue;
    INFO(entry.name);
    CHECK(is_ideal(entry.algebra, center(entry.algebra)).yes);
    CHECK(is_ideal(entry.algebra, derived(entry.algebra)).yes);
  }
}

TEST_CASE("is_ideal: center, non-ideal line, full space") {
  HomLieAlgebra h3 = heisenberg(Q);
  CHECK(is_ideal(h3, center(h3)).yes);

  auto bad = is_ideal(h3, Subspace::span(Q, 3, {vec(Q, {1, 0, 0})}));
  CHECK(!bad.yes);
  CHECK(bad.witness == "[u1,e2] escapes");

  CHECK(is_ideal(h3, Subspace::full(Q, 3)).yes);
}

TEST_CASE("quotient: by zero, by everything, Heisenberg mod its center") {
  HomLieAlgebra h3 = heisenberg(Q);

  auto q0 = quotient(h3, Subspace::zero(Q, 3));
  CHECK(q0.algebra == h3);
  CHECK(q0.projection.matrix.is_identity());

  auto qfull = quotient(h3, Subspace::full(Q, 3));
  CHECK(qfull.algebra.dim() == 0);

  auto qz = quotient(h3, center(h3));
  CHECK(qz.algebra.dim() == 2);
  CHECK(qz.algebra == HomLieAlgebra::abelian(Q, 2));
  CHECK(is_morphism(qz.projection).yes);

  CHECK_THROWS_AS(quotient(h3, Subspace::span(Q, 3, {vec(Q, {1, 0, 0})})), Error);
}

TEST_CASE("is_morphism: identity, zero, basis swap") {
  HomLieAlgebra h3 = heisenberg(Q);
  CHECK(is_morphism(identity_map(h3)).yes);

  LinearMap zero{h3, HomLieAlgebra::abelian(Q, 2), Matrix(Q, 2, 3)};
  CHECK(is_morphism(zero).yes);

  Matrix swap(Q, 3, 3);
  swap.at(0, 1) = FieldElement(Q, 1);
  swap.at(1, 0) = FieldElement(Q, 1);
  swap.at(2, 2) = FieldElement(Q, 1);
  auto r = is_morphism(LinearMap{h3, h3, swap});
  CHECK(!r.yes);
  CHECK(r.witness == "bracket at (e1,e2)");
}

TEST_CASE("direct sums: unit, abelian join, block center and derived") {
  HomLieAlgebra h3 = heisenberg(Q);
  CHECK(direct_sum(h3, HomLieAlgebra::abelian(Q, 0)) == h3);
  CHECK(direct_sum(HomLieAlgebra::abelian(Q, 1), HomLieAlgebra::abelian(Q, 1)) ==
        HomLieAlgebra::abelian(Q, 2));

  HomLieAlgebra s = direct_sum(h3, HomLieAlgebra::abelian(Q, 1));
  CHECK(center(s) == Subspace::span(Q, 4, {vec(Q, {0, 0, 1, 0}), vec(Q, {0, 0, 0, 1})}));
  CHECK(derived(s) == Subspace::span(Q, 4, {vec(Q, {0, 0, 1, 0})}));

  for (const auto& a : algebra_catalog()) {
    for (const auto& b : algebra_catalog()) {
      if (!(a.algebra.field() == b.algebra.field())) continue;
      HomLieAlgebra d = direct_sum(a.algebra, b.algebra);
      const size_t n1 = a.algebra.dim();
      Subspace cd = center(d);
      Subspace c1 = center(a.algebra), c2 = center(b.algebra);
      CHECK(cd.dim() == c1.dim() + c2.dim());
      Subspace dd = derived(d);
      CHECK(dd.dim() == derived(a.algebra).dim() + derived(b.algebra).dim());
      // Block embedding of the first summand's center sits inside center(d).
      for (size_t i = 0; i < c1.dim(); ++i) {
        Vec embedded = zero_vec(d.field(), d.dim());
        Vec src = c1.basis_vector(i);
        for (size_t j = 0; j < n1; ++j) embedded[j] = src[j];
        CHECK(cd.contains(embedded));
      }
    }
  }
  CHECK_THROWS_AS(direct_sum(heisenberg(Q), HomLieAlgebra::abelian(prime_field(2), 1)), Error);
}

TEST_CASE("restriction materializes subalgebras in their own coordinates") {
  HomLieAlgebra h3 = heisenberg(Q);
  auto r = restrict_to_subalgebra(h3, Subspace::span(Q, 3, {vec(Q, {0, 1, 0}), vec(Q, {0, 0, 1})}));
  CHECK(r.algebra == HomLieAlgebra::abelian(Q, 2));
  CHECK(is_morphism(r.inclusion).yes);

  CHECK_THROWS_AS(restrict_to_subalgebra(
                      heisenberg(Q), Subspace::span(Q, 3, {vec(Q, {1, 0, 0}), vec(Q, {0, 1, 0})})),
                  Error);
}
