#include "hlx/pairact.hpp"

namespace hlx {

Pair make_pair(HomLieAlgebra ambient, Subspace ideal) {
  YesNo ok = is_ideal(ambient, ideal);
  require(ok.yes, Errc::NotAnIdeal, "pair ideal check failed: " + ok.witness);
  return {std::move(ambient), std::move(ideal)};
}

Subspace pair_center(const Pair& p) {
  const HomLieAlgebra& L = p.ambient;
  const size_t n = L.dim(), m = p.ideal.dim();
  // Coefficients c with sum_i c_i [mu_i, e_j] = 0 for every j.
  Matrix stacked(L.field(), n * n, m);
  for (size_t i = 0; i < m; ++i) {
    Vec mu = p.ideal.basis_vector(i);
    for (size_t j = 0; j < n; ++j) {
      Vec br = L.bracket(mu, unit_vec(L.field(), n, j));
      for (size_t k = 0; k < n; ++k) stacked.at(j * n + k, i) = br[k];
    }
  }
  Subspace coeffs = kernel(stacked);
  std::vector<Vec> rows;
  for (size_t i = 0; i < coeffs.dim(); ++i)
    rows.push_back(p.ideal.from_coords(coeffs.basis_vector(i)));
  return Subspace::span(L.field(), n, rows);
}

Subspace pair_commutator(const Pair& p) {
  const HomLieAlgebra& L = p.ambient;
  std::vector<Vec> rows;
  for (size_t i = 0; i < p.ideal.dim(); ++i)
    for (size_t j = 0; j < L.dim(); ++j)
      rows.push_back(L.bracket(p.ideal.basis_vector(i), unit_vec(L.field(), L.dim(), j)));
  return Subspace::span(L.field(), L.dim(), rows);
}

HomAction::HomAction(HomLieAlgebra actor, HomLieAlgebra acted, std::vector<FieldElement> tensor)
    : actor_(std::move(actor)), acted_(std::move(acted)), a_(std::move(tensor)) {
  require(actor_.field() == acted_.field(), Errc::FieldMismatch,
          "action between algebras over different fields");
  require(a_.size() == actor_.dim() * acted_.dim() * acted_.dim(), Errc::DimensionMismatch,
          "action tensor must have dimL * dimK^2 entries");
  for (const auto& x : a_)
    require(x.field() == actor_.field(), Errc::FieldMismatch, "action entry over wrong field");
}

HomAction HomAction::zero(HomLieAlgebra actor, HomLieAlgebra acted) {
  std::vector<FieldElement> t(actor.dim() * acted.dim() * acted.dim(),
                              FieldElement(actor.field()));
  return HomAction(std::move(actor), std::move(acted), std::move(t));
}

void HomAction::set_a(size_t i, size_t j, size_t k, FieldElement v) {
  require(v.field() == actor_.field(), Errc::FieldMismatch, "entry over wrong field");
  a_[(i * acted_.dim() + j) * acted_.dim() + k] = std::move(v);
}

Vec HomAction::act_basis(size_t i, const Vec& k) const {
  require(k.size() == acted_.dim(), Errc::DimensionMismatch, "acted vector length mismatch");
  Vec v = zero_vec(actor_.field(), acted_.dim());
  for (size_t j = 0; j < acted_.dim(); ++j) {
    if (k[j].is_zero()) continue;
    for (size_t t = 0; t < acted_.dim(); ++t) v[t] += k[j] * a(i, j, t);
  }
  return v;
}

Vec HomAction::act(const Vec& x, const Vec& k) const {
  require(x.size() == actor_.dim(), Errc::DimensionMismatch, "actor vector length mismatch");
  Vec v = zero_vec(actor_.field(), acted_.dim());
  for (size_t i = 0; i < actor_.dim(); ++i) {
    if (x[i].is_zero()) continue;
    Vec w = act_basis(i, k);
    for (size_t t = 0; t < acted_.dim(); ++t) v[t] += x[i] * w[t];
  }
  return v;
}

bool HomAction::operator==(const HomAction& o) const {
  return actor_ == o.actor_ && acted_ == o.acted_ && a_ == o.a_;
}

ValidationReport action_validate(const HomAction& a) {
  const HomLieAlgebra& L = a.actor();
  const HomLieAlgebra& K = a.acted();
  const size_t n = L.dim(), m = K.dim();
  ValidationReport r;

  Check ax1{"action_bracket", true, ""};
  for (size_t i = 0; i < n && ax1.ok; ++i)
    for (size_t j = 0; j < n && ax1.ok; ++j)
      for (size_t t = 0; t < m; ++t) {
        Vec lhs = a.act(L.bracket_basis(i, j), K.alpha().col(t));
        Vec rhs = sub(a.act(L.alpha().col(i), a.act_basis(j, unit_vec(L.field(), m, t))),
                      a.act(L.alpha().col(j), a.act_basis(i, unit_vec(L.field(), m, t))));
        if (!(lhs == rhs)) {
          ax1.ok = false;
          ax1.witness = "(" + basis_name(i) + "," + basis_name(j) + ";" + basis_name(t) + ")";
          break;
        }
      }
  r.checks.push_back(ax1);

  Check ax2{"action_leibniz", true, ""};
  for (size_t i = 0; i < n && ax2.ok; ++i)
    for (size_t s = 0; s < m && ax2.ok; ++s)
      for (size_t t = 0; t < m; ++t) {
        Vec lhs = a.act(L.alpha().col(i), K.bracket_basis(s, t));
        Vec rhs = add(K.bracket(a.act_basis(i, unit_vec(L.field(), m, s)), K.alpha().col(t)),
                      K.bracket(K.alpha().col(s), a.act_basis(i, unit_vec(L.field(), m, t))));
        if (!(lhs == rhs)) {
          ax2.ok = false;
          ax2.witness = "(" + basis_name(i) + ";" + basis_name(s) + "," + basis_name(t) + ")";
          break;
        }
      }
  r.checks.push_back(ax2);

  Check ax3{"action_twist", true, ""};
  for (size_t i = 0; i < n && ax3.ok; ++i)
    for (size_t t = 0; t < m; ++t) {
      Vec lhs = K.alpha().apply(a.act_basis(i, unit_vec(L.field(), m, t)));
      Vec rhs = a.act(L.alpha().col(i), K.alpha().col(t));
      if (!(lhs == rhs)) {
        ax3.ok = false;
        ax3.witness = "(" + basis_name(i) + ";" + basis_name(t) + ")";
        break;
      }
    }
  r.checks.push_back(ax3);

  return r;
}

HomAction multiplication_action(const HomLieAlgebra& L, const Subspace& k_sub) {
  YesNo ok = is_ideal(L, k_sub);
  require(ok.yes, Errc::NotAnIdeal, "bracket action needs an ideal: " + ok.witness);
  Restriction r = restrict_to_subalgebra(L, k_sub);
  HomAction a = HomAction::zero(L, r.algebra);
  for (size_t i = 0; i < L.dim(); ++i)
    for (size_t j = 0; j < k_sub.dim(); ++j) {
      Vec br = L.bracket(unit_vec(L.field(), L.dim(), i), k_sub.basis_vector(j));
      auto coords = k_sub.coords_of(br);
      require(coords.has_value(), Errc::NotAnIdeal, "bracket value escapes the ideal");
      for (size_t k = 0; k < k_sub.dim(); ++k) a.set_a(i, j, k, (*coords)[k]);
    }
  return a;
}

PairFrame pair_frame(const Pair& p) {
  Subspace z = pair_center(p);
  Quotient q = quotient(p.ambient, z);
  Subspace ideal_image = map_subspace(q.projection.matrix, p.ideal);
  Restriction comm = restrict_to_subalgebra(p.ambient, pair_commutator(p));
  return {std::move(q), std::move(ideal_image), std::move(comm)};
}

namespace {

// A representative in M of a coset in the central quotient, or nothing.
std::optional<Vec> lift_into(const Subspace& m_sub, const Matrix& proj, const Vec& coset) {
  Matrix onto = proj * m_sub.basis().transpose();
  auto c = solve(onto, coset);
  if (!c) return std::nullopt;
  return m_sub.from_coords(*c);
}

}  // namespace

std::optional<LinearMap> induced_pair_theta(const Pair& p1, const Pair& p2, const PairFrame& f1,
                                            const PairFrame& f2, const Matrix& phi) {
  const Field f = p1.ambient.field();
  const Subspace& c1 = f1.commutator.space;
  const Subspace& c2 = f2.commutator.space;
  const size_t q = f1.quot.algebra.dim();
  if (c1.dim() == 0) {
    if (c2.dim() != 0) return std::nullopt;
    return LinearMap{f1.commutator.algebra, f2.commutator.algebra, Matrix(f, 0, 0)};
  }
  std::vector<Vec> xs, ys;
  for (size_t i = 0; i < p1.ideal.dim(); ++i) {
    Vec m1 = p1.ideal.basis_vector(i);
    Vec mbar2 = phi.apply(f1.quot.projection.matrix.apply(m1));
    auto m2 = lift_into(p2.ideal, f2.quot.projection.matrix, mbar2);
    if (!m2) return std::nullopt;
    for (size_t j = 0; j < q; ++j) {
      Vec l1 = f1.quot.section.col(j);
      Vec l2 = f2.quot.section.apply(phi.apply(unit_vec(f, q, j)));
      auto x = c1.coords_of(p1.ambient.bracket(m1, l1));
      auto y = c2.coords_of(p2.ambient.bracket(*m2, l2));
      if (!x || !y) return std::nullopt;
      xs.push_back(*x);
      ys.push_back(*y);
    }
  }
  Matrix xrows = Matrix::from_rows(f, c1.dim(), xs);
  Matrix yrows = Matrix::from_rows(f, c2.dim(), ys);
  auto tt = solve_matrix(xrows, yrows);
  if (!tt) return std::nullopt;
  return LinearMap{f1.commutator.algebra, f2.commutator.algebra, tt->transpose()};
}

YesNo pair_isoclinism_validate(const Pair& p1, const Pair& p2, const LinearMap& phi,
                               const LinearMap& theta) {
  require(p1.ambient.field() == p2.ambient.field(), Errc::FieldMismatch,
          "pairs over different fields");
  PairFrame f1 = pair_frame(p1), f2 = pair_frame(p2);
  require(phi.matrix.rows() == f2.quot.algebra.dim() && phi.matrix.cols() == f1.quot.algebra.dim(),
          Errc::DomainMismatch, "phi must map the central quotients");
  require(theta.matrix.rows() == f2.commutator.algebra.dim() &&
              theta.matrix.cols() == f1.commutator.algebra.dim(),
          Errc::DomainMismatch, "theta must map the commutator subalgebras");

  if (!is_morphism(LinearMap{f1.quot.algebra, f2.quot.algebra, phi.matrix}).yes)
    return {false, "phi is not a morphism"};
  if (!inverse(phi.matrix)) return {false, "phi is not invertible"};
  if (!is_morphism(LinearMap{f1.commutator.algebra, f2.commutator.algebra, theta.matrix}).yes)
    return {false, "theta is not a morphism"};
  if (!inverse(theta.matrix)) return {false, "theta is not invertible"};
  if (!(map_subspace(phi.matrix, f1.ideal_image) == f2.ideal_image))
    return {false, "phi does not carry the ideal image onto its counterpart"};

  // Commuting square on the spanning set (ideal image basis) x (quotient basis).
  const size_t q1 = f1.quot.algebra.dim();
  for (size_t i = 0; i < f1.ideal_image.dim(); ++i) {
    Vec mbar = f1.ideal_image.basis_vector(i);
    auto m1 = lift_into(p1.ideal, f1.quot.projection.matrix, mbar);
    if (!m1) return {false, "ideal image lift failed"};
    auto m2 = lift_into(p2.ideal, f2.quot.projection.matrix, phi.matrix.apply(mbar));
    if (!m2) return {false, "ideal image lift failed on the far side"};
    for (size_t j = 0; j < q1; ++j) {
      Vec l1 = f1.quot.section.col(j);
      Vec lbar2 = phi.matrix.apply(unit_vec(p1.ambient.field(), q1, j));
      Vec l2v = f2.quot.section.apply(lbar2);
      Vec w1 = p1.ambient.bracket(*m1, l1);
      auto w1c = f1.commutator.space.coords_of(w1);
      if (!w1c) return {false, "commutator value escaped its subspace"};
      Vec mapped = f2.commutator.space.from_coords(theta.matrix.apply(*w1c));
      Vec w2 = p2.ambient.bracket(*m2, l2v);
      if (!(mapped == w2))
        return {false, "square breaks at (m" + std::to_string(i + 1) + "," + basis_name(j) + ")"};
    }
  }
  return {true, ""};
}

}  // namespace hlx
