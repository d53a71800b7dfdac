#pragma once

#include <optional>

#include "hlx/matrix.hpp"

namespace hlx {

/// Subspace in canonical form: the basis rows are the RREF of any spanning set,
/// so two subspaces are equal iff their basis matrices are entry-wise equal.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(Field f, size_t ambient);
  static Subspace full(Field f, size_t ambient);
  static Subspace row_space(const Matrix& rows);
  static Subspace span(Field f, size_t ambient, const std::vector<Vec>& vecs);

  Field field() const { return basis_.field(); }
  size_t ambient_dim() const { return ambient_; }
  size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<size_t>& pivots() const { return pivots_; }
  Vec basis_vector(size_t i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;
  bool operator==(const Subspace& o) const;

  /// Coefficients of v in the basis rows, or nothing if v is outside.
  std::optional<Vec> coords_of(const Vec& v) const;
  Vec from_coords(const Vec& c) const;

 private:
  size_t ambient_ = 0;
  Matrix basis_;  // RREF, full row rank
  std::vector<size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace column_space(const Matrix& m);
Subspace kernel(const Matrix& m);

/// Image of s under the linear map m (acting on column coordinate vectors).
Subspace map_subspace(const Matrix& m, const Subspace& s);

/// Deterministic direct complement of u in v: extend u greedily by v's basis
/// rows in pivot order. Requires u inside v.
Subspace complement(const Subspace& u, const Subspace& v);

/// a-invariant complement of u in v, if the greedy cyclic-closure sweep finds
/// one. Requires u inside v and both a-invariant; absorbs the a-cyclic closure
/// of each complement basis vector whenever the sum stays direct.
std::optional<Subspace> invariant_complement(const Subspace& u, const Subspace& v, const Matrix& a);

/// Span of v, a v, a^2 v, ... (stabilizes after at most ambient_dim steps).
Subspace cyclic_closure(const Vec& v, const Matrix& a);

}  // namespace hlx
