#include "hlx/subspace.hpp"

namespace hlx {

Subspace Subspace::zero(Field f, size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(f, 0, ambient);
  return s;
}

Subspace Subspace::full(Field f, size_t ambient) {
  return row_space(Matrix::identity(f, ambient));
}

Subspace Subspace::row_space(const Matrix& rows) {
  RrefResult rr = rref(rows);
  Subspace s;
  s.ambient_ = rows.cols();
  s.basis_ = rr.mat.submatrix(0, 0, rr.pivots.size(), rows.cols());
  s.pivots_ = std::move(rr.pivots);
  return s;
}

Subspace Subspace::span(Field f, size_t ambient, const std::vector<Vec>& vecs) {
  return row_space(Matrix::from_rows(f, ambient, vecs));
}

bool Subspace::contains(const Vec& v) const {
  require(v.size() == ambient_, Errc::DimensionMismatch, "vector/ambient mismatch");
  Vec r = v;
  for (size_t i = 0; i < basis_.rows(); ++i) {
    const FieldElement c = r[pivots_[i]];  // copy: the loop below overwrites r
    if (c.is_zero()) continue;
    for (size_t j = 0; j < ambient_; ++j) r[j] -= c * basis_.at(i, j);
  }
  return is_zero_vec(r);
}

bool Subspace::contains(const Subspace& o) const {
  require(o.ambient_ == ambient_, Errc::DimensionMismatch, "ambient dims differ");
  for (size_t i = 0; i < o.dim(); ++i)
    if (!contains(o.basis_vector(i))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

std::optional<Vec> Subspace::coords_of(const Vec& v) const {
  require(v.size() == ambient_, Errc::DimensionMismatch, "vector/ambient mismatch");
  Vec c = zero_vec(field(), dim());
  Vec r = v;
  for (size_t i = 0; i < basis_.rows(); ++i) {
    c[i] = r[pivots_[i]];
    if (c[i].is_zero()) continue;
    for (size_t j = 0; j < ambient_; ++j) r[j] -= c[i] * basis_.at(i, j);
  }
  if (!is_zero_vec(r)) return std::nullopt;
  return c;
}

Vec Subspace::from_coords(const Vec& c) const {
  require(c.size() == dim(), Errc::DimensionMismatch, "coordinate length != dim");
  Vec v = zero_vec(field(), ambient_);
  for (size_t i = 0; i < dim(); ++i)
    for (size_t j = 0; j < ambient_; ++j) v[j] += c[i] * basis_.at(i, j);
  return v;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require(a.ambient_dim() == b.ambient_dim(), Errc::DimensionMismatch, "ambient dims differ");
  return Subspace::row_space(a.basis().vstack(b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require(a.ambient_dim() == b.ambient_dim(), Errc::DimensionMismatch, "ambient dims differ");
  // Zassenhaus: row-reduce [A|A; B|0]; rows with zero left block carry the
  // intersection in the right block.
  const size_t n = a.ambient_dim();
  Matrix top = a.basis().hstack(a.basis());
  Matrix bottom = b.basis().hstack(Matrix(a.field(), b.dim(), n));
  RrefResult rr = rref(top.vstack(bottom));
  std::vector<Vec> rows;
  for (size_t i = 0; i < rr.mat.rows(); ++i) {
    bool left_zero = true;
    for (size_t j = 0; j < n && left_zero; ++j) left_zero = rr.mat.at(i, j).is_zero();
    if (!left_zero) continue;
    Vec right = zero_vec(a.field(), n);
    bool nonzero = false;
    for (size_t j = 0; j < n; ++j) {
      right[j] = rr.mat.at(i, n + j);
      nonzero = nonzero || !right[j].is_zero();
    }
    if (nonzero) rows.push_back(std::move(right));
  }
  return Subspace::span(a.field(), n, rows);
}

Subspace column_space(const Matrix& m) { return Subspace::row_space(m.transpose()); }

Subspace kernel(const Matrix& m) { return Subspace::row_space(kernel_basis(m)); }

Subspace map_subspace(const Matrix& m, const Subspace& s) {
  require(m.cols() == s.ambient_dim(), Errc::DimensionMismatch, "map/subspace mismatch");
  std::vector<Vec> rows;
  for (size_t i = 0; i < s.dim(); ++i) rows.push_back(m.apply(s.basis_vector(i)));
  return Subspace::span(m.field(), m.rows(), rows);
}

Subspace complement(const Subspace& u, const Subspace& v) {
  require(u.ambient_dim() == v.ambient_dim() && u.field() == v.field(), Errc::DimensionMismatch,
          "complement arguments live in different spaces");
  require(v.contains(u), Errc::NotContained, "first space is not inside the second");
  std::vector<Vec> picked;
  Subspace current = u;
  for (size_t i = 0; i < v.dim() && current.dim() < v.dim(); ++i) {
    Vec cand = v.basis_vector(i);
    if (current.contains(cand)) continue;
    picked.push_back(cand);
    current = sum(current, Subspace::span(v.field(), v.ambient_dim(), {cand}));
  }
  return Subspace::span(v.field(), v.ambient_dim(), picked);
}

Subspace cyclic_closure(const Vec& v, const Matrix& a) {
  require(a.rows() == a.cols() && a.cols() == v.size(), Errc::DimensionMismatch,
          "operator/vector mismatch");
  Subspace s = Subspace::span(a.field(), v.size(), {v});
  Vec cur = v;
  for (size_t step = 0; step < v.size(); ++step) {
    cur = a.apply(cur);
    if (s.contains(cur)) break;
    s = sum(s, Subspace::span(a.field(), v.size(), {cur}));
  }
  return s;
}

std::optional<Subspace> invariant_complement(const Subspace& u, const Subspace& v,
                                             const Matrix& a) {
  require(v.contains(u), Errc::NotContained, "first space is not inside the second");
  require(a.rows() == a.cols() && a.rows() == v.ambient_dim(), Errc::DimensionMismatch,
          "operator shape mismatch");
  require(u.contains(map_subspace(a, u)), Errc::NotInvariant,
          "first space is not invariant under the operator");
  require(v.contains(map_subspace(a, v)), Errc::NotInvariant,
          "second space is not invariant under the operator");
  Subspace fixed = complement(u, v);
  Subspace w = Subspace::zero(v.field(), v.ambient_dim());
  Subspace uw = u;
  for (size_t i = 0; i < fixed.dim(); ++i) {
    Subspace closure = cyclic_closure(fixed.basis_vector(i), a);
    if (sum(uw, closure).dim() == uw.dim() + closure.dim()) {
      w = sum(w, closure);
      uw = sum(uw, closure);
    }
  }
  if (uw.dim() < v.dim()) return std::nullopt;
  return w;
}

}  // namespace hlx
