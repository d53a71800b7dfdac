#include "hlx/isoclinism.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <memory>
#include <thread>

namespace hlx {

namespace {

// Coordinates of v in sub, required to exist.
Vec coords_in(const Subspace& sub, const Vec& v, const char* what) {
  auto c = sub.coords_of(v);
  require(c.has_value(), Errc::InvalidWitness, std::string(what) + " escaped its subspace");
  return *c;
}

uint64_t ipow_capped(uint64_t base, uint64_t exp, uint64_t cap) {
  uint64_t r = 1;
  for (uint64_t i = 0; i < exp; ++i) {
    if (r > cap / (base ? base : 1)) return cap + 1;
    r *= base;
  }
  return r;
}

std::vector<std::vector<size_t>> permutations(size_t n) {
  std::vector<size_t> p(n);
  for (size_t i = 0; i < n; ++i) p[i] = i;
  std::vector<std::vector<size_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

Matrix matrix_from_index(Field f, size_t rows, size_t cols, uint64_t idx) {
  require(!f.is_rational(), Errc::InvalidField, "index enumeration needs a finite field");
  Matrix m(f, rows, cols);
  for (size_t e = rows * cols; e-- > 0;) {
    m.at(e / cols, e % cols) = FieldElement(f, static_cast<long>(idx % f.p));
    idx /= f.p;
  }
  return m;
}

size_t search_threads() {
  size_t n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (n > 4) n = 4;
  if (const char* env = std::getenv("HLX_THREADS")) {
    long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && static_cast<size_t>(cap) < n) n = static_cast<size_t>(cap);
    if (cap >= 1 && n == 0) n = 1;
  }
  return n;
}

std::optional<uint64_t> parallel_min_index(uint64_t total,
                                           const std::function<bool(uint64_t)>& pred) {
  const size_t workers = search_threads();
  if (workers <= 1 || total < 2048) {
    for (uint64_t i = 0; i < total; ++i)
      if (pred(i)) return i;
    return std::nullopt;
  }
  constexpr uint64_t kBlock = 512;
  std::atomic<uint64_t> next{0};
  std::atomic<uint64_t> best{UINT64_MAX};
  auto run = [&] {
    for (;;) {
      uint64_t base = next.fetch_add(kBlock);
      if (base >= total || base > best.load()) return;
      uint64_t end = std::min(base + kBlock, total);
      for (uint64_t i = base; i < end; ++i) {
        if (i >= best.load()) break;
        if (pred(i)) {
          uint64_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          break;
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (size_t t = 0; t < workers; ++t) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  uint64_t found = best.load();
  if (found == UINT64_MAX) return std::nullopt;
  return found;
}

ExtInvariants ext_invariants(const RelCentralExt& e) {
  Subspace ker = rce_kernel(e);
  Subspace comm = l_commutator(e);
  return {e.codomain.dim(),
          e.target.dim(),
          comm.dim(),
          l_center(e).dim(),
          ker.dim(),
          intersect(ker, comm).dim(),
          center(e.codomain).dim(),
          derived(e.codomain).dim()};
}

bool isoclinism_filter_match(const ExtInvariants& a, const ExtInvariants& b) {
  return a.dim_l == b.dim_l && a.dim_target == b.dim_target &&
         a.dim_commutator == b.dim_commutator &&
         a.dim_kernel_in_commutator == b.dim_kernel_in_commutator &&
         a.dim_center_l == b.dim_center_l && a.dim_derived_l == b.dim_derived_l;
}

YesNo witness_validate(const IsoclinismWitness& w) {
  const RelCentralExt& e1 = w.source;
  const RelCentralExt& e2 = w.dest;
  require(e1.domain.field() == e2.domain.field(), Errc::FieldMismatch,
          "witness between extensions over different fields");

  Subspace c1 = l_commutator(e1), c2 = l_commutator(e2);
  require(w.gamma.rows() == e2.codomain.dim() && w.gamma.cols() == e1.codomain.dim() &&
              w.beta_prime.rows() == c2.dim() && w.beta_prime.cols() == c1.dim(),
          Errc::DimensionMismatch, "witness matrix shapes");

  YesNo g = is_morphism(LinearMap{e1.codomain, e2.codomain, w.gamma});
  if (!g.yes) return {false, "gamma: " + g.witness};
  if (!inverse(w.gamma)) return {false, "gamma is not invertible"};
  if (!(map_subspace(w.gamma, e1.target) == e2.target))
    return {false, "gamma does not carry the target onto its counterpart"};
  if (!inverse(w.beta_prime)) return {false, "beta_prime is not invertible"};

  const size_t nl = e1.codomain.dim(), nm = e1.domain.dim();
  Matrix alpha2_inv = *inverse(e2.codomain.alpha());
  Matrix rhs_map = e2.sigma * e2.domain.alpha();  // sigma2 alpha2*
  Matrix lhs_map = w.gamma * e1.sigma * e1.domain.alpha();

  // Independence of the chosen compatible element: the action must kill
  // alpha2* of Ker(sigma2 alpha2*).
  Subspace amb = kernel(rhs_map);
  for (size_t k = 0; k < amb.dim(); ++k) {
    Vec ak = e2.domain.alpha().apply(amb.basis_vector(k));
    for (size_t i = 0; i < e2.codomain.dim(); ++i)
      if (!is_zero_vec(e2.action.act_basis(i, ak)))
        return {false, "choice of compatible element is not independent at k" +
                           std::to_string(k + 1) + "," + basis_name(i)};
  }

  for (size_t i = 0; i < nl; ++i) {
    Vec l2 = alpha2_inv.apply(w.gamma.apply(e1.codomain.alpha().col(i)));
    for (size_t j = 0; j < nm; ++j) {
      Vec v = e1.action.act_basis(i, e1.domain.alpha().col(j));
      auto vc = c1.coords_of(v);
      if (!vc) return {false, "commutator coordinates missing"};
      Vec mapped = c2.from_coords(w.beta_prime.apply(*vc));
      auto m2 = solve(rhs_map, lhs_map.col(j));
      if (!m2) return {false, "no compatible element for " + basis_name(j)};
      Vec rhs = e2.action.act(l2, e2.domain.alpha().apply(*m2));
      if (!(mapped == rhs))
        return {false, "compatibility breaks at (" + basis_name(i) + "," + basis_name(j) + ")"};
    }
  }
  return {true, ""};
}

ValidationReport witness_consequences(const IsoclinismWitness& w) {
  YesNo ok = witness_validate(w);
  require(ok.yes, Errc::InvalidWitness, ok.witness);

  const RelCentralExt& e1 = w.source;
  const RelCentralExt& e2 = w.dest;
  Subspace c1 = l_commutator(e1), c2 = l_commutator(e2);
  ValidationReport r;

  Check part1{"sigma_compat_on_commutator", true, ""};
  for (size_t i = 0; i < c1.dim(); ++i) {
    Vec x = c1.basis_vector(i);
    Vec lhs = w.gamma.apply(e1.sigma.apply(x));
    Vec rhs = e2.sigma.apply(c2.from_coords(w.beta_prime.apply(unit_vec(e1.domain.field(), c1.dim(), i))));
    if (!(lhs == rhs)) {
      part1.ok = false;
      part1.witness = "x" + std::to_string(i + 1);
      break;
    }
  }
  r.checks.push_back(part1);

  Check part2{"kernel_correspondence", true, ""};
  {
    Subspace k1 = intersect(rce_kernel(e1), c1);
    Subspace k2 = intersect(rce_kernel(e2), c2);
    std::vector<Vec> mapped;
    for (size_t i = 0; i < k1.dim(); ++i)
      mapped.push_back(c2.from_coords(
          w.beta_prime.apply(coords_in(c1, k1.basis_vector(i), "kernel vector"))));
    Subspace image = Subspace::span(e2.domain.field(), e2.domain.dim(), mapped);
    if (!(image == k2)) {
      part2.ok = false;
      part2.witness = "images differ";
    }
  }
  r.checks.push_back(part2);

  Check part3{"action_equivariance", true, ""};
  {
    Matrix alpha2_inv = *inverse(e2.codomain.alpha());
    for (size_t i = 0; i < e1.codomain.dim() && part3.ok; ++i) {
      Vec l2 = alpha2_inv.apply(w.gamma.apply(e1.codomain.alpha().col(i)));
      for (size_t j = 0; j < c1.dim(); ++j) {
        Vec x = c1.basis_vector(j);
        Vec lhs_amb = e1.action.act_basis(i, x);
        Vec lhs = c2.from_coords(w.beta_prime.apply(coords_in(c1, lhs_amb, "acted commutator")));
        Vec bx = c2.from_coords(w.beta_prime.apply(unit_vec(e1.domain.field(), c1.dim(), j)));
        Vec rhs = e2.action.act(l2, bx);
        if (!(lhs == rhs)) {
          part3.ok = false;
          part3.witness = "(" + basis_name(i) + ",x" + std::to_string(j + 1) + ")";
          break;
        }
      }
    }
  }
  r.checks.push_back(part3);

  return r;
}

std::optional<IsoclinismWitness> witness_from_gamma(const RelCentralExt& e1,
                                                    const RelCentralExt& e2,
                                                    const Matrix& gamma) {
  Subspace c1 = l_commutator(e1), c2 = l_commutator(e2);
  if (c1.dim() != c2.dim()) return std::nullopt;
  const size_t nl = e1.codomain.dim(), nm = e1.domain.dim();
  auto alpha2_inv = inverse(e2.codomain.alpha());
  if (!alpha2_inv) return std::nullopt;
  Matrix rhs_map = e2.sigma * e2.domain.alpha();
  Matrix lhs_map = gamma * e1.sigma * e1.domain.alpha();

  std::vector<Vec> xs, ys;
  for (size_t j = 0; j < nm; ++j) {
    auto m2 = solve(rhs_map, lhs_map.col(j));
    if (!m2) return std::nullopt;
    Vec am2 = e2.domain.alpha().apply(*m2);
    for (size_t i = 0; i < nl; ++i) {
      Vec v = e1.action.act_basis(i, e1.domain.alpha().col(j));
      auto vc = c1.coords_of(v);
      if (!vc) return std::nullopt;
      Vec l2 = alpha2_inv->apply(gamma.apply(e1.codomain.alpha().col(i)));
      Vec w = e2.action.act(l2, am2);
      auto wc = c2.coords_of(w);
      if (!wc) return std::nullopt;
      xs.push_back(*vc);
      ys.push_back(*wc);
    }
  }
  if (c1.dim() == 0) {
    return IsoclinismWitness{e1, e2, gamma, Matrix(e1.domain.field(), 0, 0)};
  }
  // Row r of Xrows * beta_prime^T = Yrows is the r-th spanning constraint.
  Matrix xrows = Matrix::from_rows(e1.domain.field(), c1.dim(), xs);
  Matrix yrows = Matrix::from_rows(e1.domain.field(), c2.dim(), ys);
  auto bt = solve_matrix(xrows, yrows);
  if (!bt) return std::nullopt;
  Matrix b = bt->transpose();
  if (!inverse(b)) return std::nullopt;
  return IsoclinismWitness{e1, e2, gamma, std::move(b)};
}

IsoclinismWitness restrict_morphism(const ExtMorphism& m) {
  Subspace c1 = l_commutator(m.source), c2 = l_commutator(m.dest);
  Matrix b(m.source.domain.field(), c2.dim(), c1.dim());
  for (size_t j = 0; j < c1.dim(); ++j) {
    Vec img = m.beta.apply(c1.basis_vector(j));
    Vec c = coords_in(c2, img, "restricted morphism value");
    for (size_t i = 0; i < c2.dim(); ++i) b.at(i, j) = c[i];
  }
  return {m.source, m.dest, m.gamma, std::move(b)};
}

YesNo is_isoclinic_morphism(const ExtMorphism& m) {
  MorphismCheck mc = morphism_validate(m);
  if (!mc.yes) return {false, "not a morphism: " + mc.witness};
  return witness_validate(restrict_morphism(m));
}

namespace {

bool gamma_admissible(const RelCentralExt& e1, const RelCentralExt& e2, const Matrix& g) {
  if (!inverse(g)) return false;
  if (!is_morphism(LinearMap{e1.codomain, e2.codomain, g}).yes) return false;
  return map_subspace(g, e1.target) == e2.target;
}

// Deterministic gamma-candidate stream shared by the searches.
struct GammaCandidates {
  uint64_t total = 0;
  std::function<Matrix(uint64_t)> make;
  bool complete = false;  // true when the stream covers all invertible maps
};

GammaCandidates gamma_candidates(const RelCentralExt& e1, const SearchBudget& budget) {
  const Field f = e1.domain.field();
  const size_t n = e1.codomain.dim();
  GammaCandidates out;
  if (budget.mode == SearchBudget::Mode::exhaustive && !f.is_rational()) {
    uint64_t total = ipow_capped(f.p, n * n, budget.max_candidates);
    if (total > budget.max_candidates) return out;  // budget refuses the space
    out.total = total;
    out.make = [f, n](uint64_t idx) { return matrix_from_index(f, n, n, idx); };
    out.complete = true;
    return out;
  }
  if (budget.mode == SearchBudget::Mode::heuristic ||
      (budget.mode == SearchBudget::Mode::exhaustive && f.is_rational())) {
    if (budget.mode == SearchBudget::Mode::exhaustive) return out;  // no complete stream over Q
    auto perms = std::make_shared<std::vector<std::vector<size_t>>>(permutations(n));
    const uint64_t signs = (f.p == 2) ? 1 : (uint64_t{1} << n);
    out.total = std::min<uint64_t>(perms->size() * signs, budget.max_candidates);
    out.make = [f, n, perms, signs](uint64_t idx) {
      const auto& p = (*perms)[idx / signs];
      uint64_t s = idx % signs;
      Matrix m(f, n, n);
      for (size_t j = 0; j < n; ++j) {
        long sign = (s >> j) & 1 ? -1 : 1;
        m.at(p[j], j) = FieldElement(f, sign);
      }
      return m;
    };
    return out;
  }
  return out;
}

}  // namespace

IsoclinismSearch search_isoclinism(const RelCentralExt& e1, const RelCentralExt& e2,
                                   const SearchBudget& budget) {
  require(e1.domain.field() == e2.domain.field(), Errc::FieldMismatch,
          "search over different fields");
  if (!isoclinism_filter_match(ext_invariants(e1), ext_invariants(e2)))
    return {SearchStatus::not_found, std::nullopt};

  GammaCandidates cand = gamma_candidates(e1, budget);
  if (cand.total == 0)
    return {cand.complete ? SearchStatus::not_found : SearchStatus::budget_exhausted,
            std::nullopt};

  auto pred = [&](uint64_t idx) {
    Matrix g = cand.make(idx);
    if (!gamma_admissible(e1, e2, g)) return false;
    auto w = witness_from_gamma(e1, e2, g);
    return w.has_value() && witness_validate(*w).yes;
  };
  auto found = parallel_min_index(cand.total, pred);
  if (!found)
    return {cand.complete ? SearchStatus::not_found : SearchStatus::budget_exhausted,
            std::nullopt};
  return {SearchStatus::found, witness_from_gamma(e1, e2, cand.make(*found))};
}

IsomorphismSearch search_isomorphism(const RelCentralExt& e1, const RelCentralExt& e2,
                                     const SearchBudget& budget) {
  require(e1.domain.field() == e2.domain.field(), Errc::FieldMismatch,
          "search over different fields");
  if (e1.domain.dim() != e2.domain.dim()) return {SearchStatus::not_found, std::nullopt};
  if (!(ext_invariants(e1) == ext_invariants(e2))) return {SearchStatus::not_found, std::nullopt};

  const Field f = e1.domain.field();
  const size_t m1 = e1.domain.dim();
  Subspace ker2 = rce_kernel(e2);
  const size_t freedom = ker2.dim() * m1;

  GammaCandidates cand = gamma_candidates(e1, budget);
  if (cand.total == 0)
    return {cand.complete ? SearchStatus::not_found : SearchStatus::budget_exhausted,
            std::nullopt};

  // Per gamma: beta = particular solution of sigma2 beta = gamma sigma1 plus
  // kernel-direction corrections, enumerated deterministically.
  const uint64_t beta_base = f.is_rational() ? 3 : f.p;
  uint64_t beta_total = ipow_capped(beta_base, freedom, budget.max_candidates);
  bool beta_complete = !f.is_rational();
  if (beta_total > budget.max_candidates) {
    if (!f.is_rational()) return {SearchStatus::budget_exhausted, std::nullopt};
    beta_total = budget.max_candidates;
  }

  auto beta_for = [&](const Matrix& g, uint64_t bidx) -> std::optional<Matrix> {
    auto b0 = solve_matrix(e2.sigma, g * e1.sigma);
    if (!b0) return std::nullopt;
    Matrix b = *b0;
    for (size_t r = 0; r < ker2.dim(); ++r)
      for (size_t c = 0; c < m1; ++c) {
        uint64_t digit = bidx % beta_base;
        bidx /= beta_base;
        if (digit == 0) continue;
        long coeff = f.is_rational() ? (digit == 1 ? 1 : -1) : static_cast<long>(digit);
        Vec dir = scale(FieldElement(f, coeff), ker2.basis_vector(r));
        for (size_t i = 0; i < b.rows(); ++i) b.at(i, c) += dir[i];
      }
    return b;
  };

  auto check_beta = [&](const Matrix& g, const Matrix& b) {
    if (!inverse(b)) return false;
    ExtMorphism m{e1, e2, g, b};
    return morphism_validate(m).yes;
  };

  auto pred = [&](uint64_t idx) {
    Matrix g = cand.make(idx / beta_total);
    if (!gamma_admissible(e1, e2, g)) return false;
    auto b = beta_for(g, idx % beta_total);
    return b.has_value() && check_beta(g, *b);
  };

  uint64_t total = cand.total * beta_total;
  if (total / beta_total != cand.total || total > budget.max_candidates)
    return {SearchStatus::budget_exhausted, std::nullopt};
  auto found = parallel_min_index(total, pred);
  if (!found)
    return {(cand.complete && beta_complete) ? SearchStatus::not_found
                                             : SearchStatus::budget_exhausted,
            std::nullopt};
  Matrix g = cand.make(*found / beta_total);
  Matrix b = *beta_for(g, *found % beta_total);
  return {SearchStatus::found, ExtMorphism{e1, e2, std::move(g), std::move(b)}};
}

PairIsoclinismSearch pair_search_isoclinism(const Pair& p1, const Pair& p2,
                                            const SearchBudget& budget) {
  require(p1.ambient.field() == p2.ambient.field(), Errc::FieldMismatch,
          "search over different fields");
  PairFrame f1 = pair_frame(p1), f2 = pair_frame(p2);
  if (f1.quot.algebra.dim() != f2.quot.algebra.dim() ||
      f1.ideal_image.dim() != f2.ideal_image.dim() ||
      f1.commutator.space.dim() != f2.commutator.space.dim() ||
      center(f1.quot.algebra).dim() != center(f2.quot.algebra).dim() ||
      derived(f1.quot.algebra).dim() != derived(f2.quot.algebra).dim())
    return {SearchStatus::not_found, std::nullopt, std::nullopt};

  const Field f = p1.ambient.field();
  const size_t q = f1.quot.algebra.dim();

  uint64_t total = 0;
  std::function<Matrix(uint64_t)> make;
  bool complete = false;
  if (budget.mode == SearchBudget::Mode::exhaustive && !f.is_rational()) {
    total = ipow_capped(f.p, q * q, budget.max_candidates);
    if (total > budget.max_candidates)
      return {SearchStatus::budget_exhausted, std::nullopt, std::nullopt};
    make = [f, q](uint64_t idx) { return matrix_from_index(f, q, q, idx); };
    complete = true;
  } else if (budget.mode == SearchBudget::Mode::heuristic) {
    auto perms = std::make_shared<std::vector<std::vector<size_t>>>(permutations(q));
    const uint64_t signs = (f.p == 2) ? 1 : (uint64_t{1} << q);
    total = std::min<uint64_t>(perms->size() * signs, budget.max_candidates);
    make = [f, q, perms, signs](uint64_t idx) {
      const auto& p = (*perms)[idx / signs];
      uint64_t s = idx % signs;
      Matrix m(f, q, q);
      for (size_t j = 0; j < q; ++j)
        m.at(p[j], j) = FieldElement(f, (s >> j) & 1 ? -1 : 1);
      return m;
    };
  } else {
    return {SearchStatus::budget_exhausted, std::nullopt, std::nullopt};
  }

  auto pred = [&](uint64_t idx) {
    Matrix phi = make(idx);
    if (!inverse(phi)) return false;
    if (!is_morphism(LinearMap{f1.quot.algebra, f2.quot.algebra, phi}).yes) return false;
    if (!(map_subspace(phi, f1.ideal_image) == f2.ideal_image)) return false;
    auto theta = induced_pair_theta(p1, p2, f1, f2, phi);
    if (!theta || !inverse(theta->matrix)) return false;
    LinearMap phi_map{f1.quot.algebra, f2.quot.algebra, phi};
    return pair_isoclinism_validate(p1, p2, phi_map, *theta).yes;
  };

  auto found = parallel_min_index(total, pred);
  if (!found)
    return {complete ? SearchStatus::not_found : SearchStatus::budget_exhausted, std::nullopt,
            std::nullopt};
  Matrix phi = make(*found);
  LinearMap theta = *induced_pair_theta(p1, p2, f1, f2, phi);
  return {SearchStatus::found, LinearMap{f1.quot.algebra, f2.quot.algebra, std::move(phi)},
          std::move(theta)};
}

Decomposition decompose_family(const RelCentralExt& e, bool use_derived_split) {
  StemReduction red = stem_reduce(e, use_derived_split);
  require(!red.twist_obstructed, Errc::TwistObstructed,
          "kernel split needs a twist-invariant complement");

  const Subspace dsub = use_derived_split ? derived(e.domain) : l_commutator(e);
  const Subspace n = red.removed_space;
  Subspace dn = sum(dsub, n);
  auto w = invariant_complement(dn, Subspace::full(e.domain.field(), e.domain.dim()),
                                e.domain.alpha());
  require(w.has_value(), Errc::TwistObstructed,
          "no twist-invariant complement above the split subalgebra");
  Subspace t = sum(dsub, *w);

  SubalgebraExt sub = [&] {
    try {
      return subalgebra_ext(e, t);
    } catch (const Error& err) {
      fail(Errc::CertificationFailed, std::string("restriction step failed: ") + err.what());
    }
  }();
  require(is_stem(sub.ext), Errc::CertificationFailed, "restricted part is not stem");

  HomLieAlgebra abelian_part = restrict_to_subalgebra(e.domain, n).algebra;
  ProductExt prod = product_with_abelian(sub.ext, abelian_part);

  // Coordinates of M* in the split basis T + N.
  Matrix basis = t.basis().transpose().hstack(n.basis().transpose());
  auto pinv = inverse(basis);
  require(pinv.has_value(), Errc::CertificationFailed, "split basis is singular");
  ExtMorphism iso{e, prod.ext, Matrix::identity(e.codomain.field(), e.codomain.dim()), *pinv};
  MorphismCheck mc = morphism_validate(iso);
  require(mc.yes && mc.cls == MorphClass::iso, Errc::CertificationFailed,
          "constructed split map failed validation: " + mc.witness);

  return {std::move(sub.ext), std::move(abelian_part), std::move(prod.ext), std::move(iso)};
}

ProductEmbeddings product_embeddings(const IsoclinismWitness& w) {
  YesNo ok = witness_validate(w);
  require(ok.yes, Errc::InvalidWitness, ok.witness);
  PullbackExt pb = pullback(w.source, w.dest, w.gamma);

  Subspace comm = l_commutator(pb.ext);
  Quotient aquot = quotient(pb.ext.domain, comm);
  const HomLieAlgebra& a = aquot.algebra;
  ProductExt prod1 = product_with_abelian(w.source, a);
  ProductExt prod2 = product_with_abelian(w.dest, a);

  auto embed = [&](const Matrix& proj_i) {
    return proj_i.vstack(aquot.projection.matrix);
  };
  ExtMorphism into1{pb.ext, prod1.ext, pb.onto_first.gamma, embed(pb.onto_first.beta)};
  ExtMorphism into2{pb.ext, prod2.ext, pb.onto_second.gamma, embed(pb.onto_second.beta)};
  return {std::move(pb), std::move(prod1), std::move(prod2), std::move(into1), std::move(into2)};
}

CommonQuotient common_quotient_embedding(const IsoclinismWitness& w) {
  YesNo ok = witness_validate(w);
  require(ok.yes, Errc::InvalidWitness, ok.witness);
  const RelCentralExt& e1 = w.source;
  const RelCentralExt& e2 = w.dest;
  const Field f = e1.domain.field();
  const size_t m1 = e1.domain.dim(), m2 = e2.domain.dim();

  PullbackExt pb = pullback(e1, e2, w.gamma);
  Subspace comm = l_commutator(pb.ext);
  Quotient aquot = quotient(pb.ext.domain, comm);
  const HomLieAlgebra& a = aquot.algebra;
  ProductExt prod = product_with_abelian(e1, a);

  // Coordinates in the joint space of a product-space vector.
  Matrix joint_basis = pb.onto_first.beta.vstack(pb.onto_second.beta);  // (m1+m2) x dim
  auto joint_coords = [&](const Vec& v1, const Vec& v2) {
    Vec v = v1;
    v.insert(v.end(), v2.begin(), v2.end());
    auto c = solve(joint_basis, v);
    require(c.has_value(), Errc::CertificationFailed, "element escaped the joint space");
    return *c;
  };

  Subspace ker1 = rce_kernel(e1);
  std::vector<Vec> t_rows;
  for (size_t r = 0; r < ker1.dim(); ++r) {
    Vec x = ker1.basis_vector(r);
    Vec apart = aquot.projection.matrix.apply(joint_coords(x, zero_vec(f, m2)));
    Vec row = x;
    row.insert(row.end(), apart.begin(), apart.end());
    t_rows.push_back(std::move(row));
  }
  Subspace t = Subspace::span(f, m1 + a.dim(), t_rows);

  QuotientExt q = quotient_ext(prod.ext, t);

  Matrix delta1 = q.epi.beta * Matrix::identity(f, m1).vstack(Matrix(f, a.dim(), m1));
  Matrix rhs_map = e2.sigma * e2.domain.alpha();
  Matrix lhs_map = w.gamma * e1.sigma * e1.domain.alpha();
  Matrix delta2(f, q.ext.domain.dim(), m2);
  for (size_t j = 0; j < m2; ++j) {
    auto m1v = solve(lhs_map, rhs_map.col(j));
    require(m1v.has_value(), Errc::CertificationFailed, "no compatible first component");
    Vec apart = aquot.projection.matrix.apply(joint_coords(*m1v, unit_vec(f, m2, j)));
    Vec prod_vec = *m1v;
    prod_vec.insert(prod_vec.end(), apart.begin(), apart.end());
    Vec img = q.epi.beta.apply(prod_vec);
    for (size_t i = 0; i < delta2.rows(); ++i) delta2.at(i, j) = img[i];
  }

  auto gamma_inv = inverse(w.gamma);
  require(gamma_inv.has_value(), Errc::InvalidWitness, "gamma not invertible");
  ExtMorphism from1{e1, q.ext, Matrix::identity(f, e1.codomain.dim()), std::move(delta1)};
  ExtMorphism from2{e2, q.ext, *gamma_inv, std::move(delta2)};
  return {std::move(q.ext), std::move(from1), std::move(from2)};
}

}  // namespace hlx
