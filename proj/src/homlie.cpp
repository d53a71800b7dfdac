#include "hlx/homlie.hpp"

namespace hlx {

bool ValidationReport::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

const Check* ValidationReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::string s = "fails:";
  for (const auto& c : checks)
    if (!c.ok) s += " " + c.name + (c.witness.empty() ? "" : " at " + c.witness);
  return s;
}

std::string basis_name(size_t i) { return "e" + std::to_string(i + 1); }

HomLieAlgebra::HomLieAlgebra(Field f, size_t dim, std::vector<FieldElement> bracket_tensor,
                             Matrix alpha)
    : field_(f), dim_(dim), c_(std::move(bracket_tensor)), alpha_(std::move(alpha)) {
  require(c_.size() == dim * dim * dim, Errc::DimensionMismatch,
          "bracket tensor must have dim^3 entries");
  for (const auto& x : c_)
    require(x.field() == f, Errc::FieldMismatch, "bracket entry over wrong field");
  require(alpha_.rows() == dim && alpha_.cols() == dim, Errc::DimensionMismatch,
          "twist must be dim x dim");
  require(alpha_.field() == f, Errc::FieldMismatch, "twist over wrong field");
}

HomLieAlgebra HomLieAlgebra::abelian(Field f, size_t dim) {
  return abelian_twisted(f, dim, Matrix::identity(f, dim));
}

HomLieAlgebra HomLieAlgebra::abelian_twisted(Field f, size_t dim, Matrix alpha) {
  return HomLieAlgebra(f, dim, std::vector<FieldElement>(dim * dim * dim, FieldElement(f)),
                       std::move(alpha));
}

void HomLieAlgebra::set_c(size_t i, size_t j, size_t k, FieldElement v) {
  require(v.field() == field_, Errc::FieldMismatch, "entry over wrong field");
  c_[(i * dim_ + j) * dim_ + k] = std::move(v);
}

Vec HomLieAlgebra::bracket_basis(size_t i, size_t j) const {
  Vec v = zero_vec(field_, dim_);
  for (size_t k = 0; k < dim_; ++k) v[k] = c(i, j, k);
  return v;
}

Vec HomLieAlgebra::bracket(const Vec& x, const Vec& y) const {
  require(x.size() == dim_ && y.size() == dim_, Errc::DimensionMismatch,
          "bracket arguments must have length dim");
  Vec v = zero_vec(field_, dim_);
  for (size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      FieldElement xy = x[i] * y[j];
      for (size_t k = 0; k < dim_; ++k) v[k] += xy * c(i, j, k);
    }
  }
  return v;
}

bool HomLieAlgebra::operator==(const HomLieAlgebra& o) const {
  return field_ == o.field_ && dim_ == o.dim_ && c_ == o.c_ && alpha_ == o.alpha_;
}

ValidationReport validate(const HomLieAlgebra& L) {
  const size_t n = L.dim();
  ValidationReport r;

  Check skew{"skew", true, ""};
  for (size_t i = 0; i < n && skew.ok; ++i)
    for (size_t j = i; j < n && skew.ok; ++j)
      for (size_t k = 0; k < n; ++k) {
        bool bad = (i == j) ? !L.c(i, i, k).is_zero() : !(L.c(i, j, k) == -L.c(j, i, k));
        if (bad) {
          skew.ok = false;
          skew.witness = "(" + basis_name(i) + "," + basis_name(j) + ")";
          break;
        }
      }
  r.checks.push_back(skew);

  Check jac{"hom_jacobi", true, ""};
  for (size_t i = 0; i < n && jac.ok; ++i)
    for (size_t j = 0; j < n && jac.ok; ++j)
      for (size_t k = 0; k < n && jac.ok; ++k) {
        Vec ai = L.alpha().col(i), aj = L.alpha().col(j), ak = L.alpha().col(k);
        Vec t = L.bracket(ai, L.bracket_basis(j, k));
        t = add(t, L.bracket(aj, L.bracket_basis(k, i)));
        t = add(t, L.bracket(ak, L.bracket_basis(i, j)));
        if (!is_zero_vec(t)) {
          jac.ok = false;
          jac.witness =
              "(" + basis_name(i) + "," + basis_name(j) + "," + basis_name(k) + ")";
        }
      }
  r.checks.push_back(jac);

  Check mult{"multiplicative", true, ""};
  for (size_t i = 0; i < n && mult.ok; ++i)
    for (size_t j = 0; j < n && mult.ok; ++j) {
      Vec lhs = L.alpha().apply(L.bracket_basis(i, j));
      Vec rhs = L.bracket(L.alpha().col(i), L.alpha().col(j));
      if (!(lhs == rhs)) {
        mult.ok = false;
        mult.witness = "(" + basis_name(i) + "," + basis_name(j) + ")";
      }
    }
  r.checks.push_back(mult);

  Check reg{"regular", true, ""};
  if (!inverse(L.alpha())) {
    reg.ok = false;
    reg.witness = "twist is singular";
  }
  r.checks.push_back(reg);

  return r;
}

Subspace center(const HomLieAlgebra& L) {
  const size_t n = L.dim();
  // x is central iff for every j the vector sum_i x_i [e_i, e_j] vanishes.
  Matrix stacked(L.field(), n * n, n);
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i)
      for (size_t k = 0; k < n; ++k) stacked.at(j * n + k, i) = L.c(i, j, k);
  return kernel(stacked);
}

Subspace derived(const HomLieAlgebra& L) {
  std::vector<Vec> rows;
  for (size_t i = 0; i < L.dim(); ++i)
    for (size_t j = i + 1; j < L.dim(); ++j) rows.push_back(L.bracket_basis(i, j));
  return Subspace::span(L.field(), L.dim(), rows);
}

YesNo is_ideal(const HomLieAlgebra& L, const Subspace& u) {
  require(u.ambient_dim() == L.dim(), Errc::DimensionMismatch, "subspace/algebra mismatch");
  for (size_t b = 0; b < u.dim(); ++b) {
    Vec ub = u.basis_vector(b);
    for (size_t j = 0; j < L.dim(); ++j)
      if (!u.contains(L.bracket(ub, unit_vec(L.field(), L.dim(), j))))
        return {false, "[u" + std::to_string(b + 1) + "," + basis_name(j) + "] escapes"};
    if (!u.contains(L.alpha().apply(ub)))
      return {false, "alpha(u" + std::to_string(b + 1) + ") escapes"};
  }
  return {true, ""};
}

LinearMap identity_map(const HomLieAlgebra& L) {
  return {L, L, Matrix::identity(L.field(), L.dim())};
}

LinearMap compose(const LinearMap& g, const LinearMap& f) {
  require(g.domain.dim() == f.codomain.dim() && g.domain.field() == f.codomain.field(),
          Errc::DomainMismatch, "composition domains do not line up");
  return {f.domain, g.codomain, g.matrix * f.matrix};
}

YesNo is_morphism(const LinearMap& f) {
  require(f.matrix.rows() == f.codomain.dim() && f.matrix.cols() == f.domain.dim(),
          Errc::DimensionMismatch, "map matrix shape mismatch");
  require(f.domain.field() == f.codomain.field(), Errc::FieldMismatch,
          "map between algebras over different fields");
  for (size_t i = 0; i < f.domain.dim(); ++i)
    for (size_t j = i + 1; j < f.domain.dim(); ++j) {
      Vec lhs = f.apply(f.domain.bracket_basis(i, j));
      Vec rhs = f.codomain.bracket(f.matrix.col(i), f.matrix.col(j));
      if (!(lhs == rhs))
        return {false, "bracket at (" + basis_name(i) + "," + basis_name(j) + ")"};
    }
  if (!(f.matrix * f.domain.alpha() == f.codomain.alpha() * f.matrix))
    return {false, "twist does not commute"};
  return {true, ""};
}

Quotient quotient(const HomLieAlgebra& L, const Subspace& ideal) {
  YesNo ok = is_ideal(L, ideal);
  require(ok.yes, Errc::NotAnIdeal, "quotient by a non-ideal: " + ok.witness);
  const size_t n = L.dim();
  Subspace comp = complement(ideal, Subspace::full(L.field(), n));
  const size_t q = comp.dim();
  Matrix section = comp.basis().transpose();  // n x q
  // Change of basis [section | ideal^T]; the projection reads off the first
  // q coordinates.
  Matrix cb = section.hstack(ideal.basis().transpose());
  auto cbi = inverse(cb);
  require(cbi.has_value(), Errc::CertificationFailed, "complement did not complete a basis");
  Matrix proj = cbi->submatrix(0, 0, q, n);

  std::vector<FieldElement> tensor(q * q * q, FieldElement(L.field()));
  HomLieAlgebra Q(L.field(), q, tensor, proj * L.alpha() * section);
  for (size_t i = 0; i < q; ++i)
    for (size_t j = 0; j < q; ++j) {
      Vec br = proj.apply(L.bracket(section.col(i), section.col(j)));
      for (size_t k = 0; k < q; ++k) Q.set_c(i, j, k, br[k]);
    }
  LinearMap projection{L, Q, proj};
  YesNo morph = is_morphism(projection);
  require(morph.yes, Errc::CertificationFailed, "quotient projection not a morphism: " + morph.witness);
  return {std::move(Q), std::move(projection), std::move(section)};
}

HomLieAlgebra direct_sum(const HomLieAlgebra& a, const HomLieAlgebra& b) {
  require(a.field() == b.field(), Errc::FieldMismatch, "direct sum over different fields");
  const size_t n = a.dim() + b.dim();
  HomLieAlgebra s = HomLieAlgebra::abelian_twisted(a.field(), n, Matrix::identity(a.field(), n));
  Matrix alpha(a.field(), n, n);
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < a.dim(); ++j) alpha.at(i, j) = a.alpha().at(i, j);
  for (size_t i = 0; i < b.dim(); ++i)
    for (size_t j = 0; j < b.dim(); ++j) alpha.at(a.dim() + i, a.dim() + j) = b.alpha().at(i, j);
  std::vector<FieldElement> tensor(n * n * n, FieldElement(a.field()));
  HomLieAlgebra out(a.field(), n, std::move(tensor), std::move(alpha));
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < a.dim(); ++j)
      for (size_t k = 0; k < a.dim(); ++k) out.set_c(i, j, k, a.c(i, j, k));
  for (size_t i = 0; i < b.dim(); ++i)
    for (size_t j = 0; j < b.dim(); ++j)
      for (size_t k = 0; k < b.dim(); ++k)
        out.set_c(a.dim() + i, a.dim() + j, a.dim() + k, b.c(i, j, k));
  return out;
}

Restriction restrict_to_subalgebra(const HomLieAlgebra& L, const Subspace& s) {
  require(s.ambient_dim() == L.dim(), Errc::DimensionMismatch, "subspace/algebra mismatch");
  const size_t m = s.dim();
  std::vector<FieldElement> tensor(m * m * m, FieldElement(L.field()));
  Matrix alpha(L.field(), m, m);
  for (size_t i = 0; i < m; ++i) {
    auto ai = s.coords_of(L.alpha().apply(s.basis_vector(i)));
    require(ai.has_value(), Errc::NotASubalgebra, "twist does not preserve the subspace");
    for (size_t k = 0; k < m; ++k) alpha.at(k, i) = (*ai)[k];
  }
  HomLieAlgebra sub(L.field(), m, std::move(tensor), std::move(alpha));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      auto br = s.coords_of(L.bracket(s.basis_vector(i), s.basis_vector(j)));
      require(br.has_value(), Errc::NotASubalgebra, "subspace is not bracket-closed");
      for (size_t k = 0; k < m; ++k) sub.set_c(i, j, k, (*br)[k]);
    }
  LinearMap incl{sub, L, s.basis().transpose()};
  return {std::move(sub), std::move(incl), s};
}

}  // namespace hlx
