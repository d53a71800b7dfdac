#pragma once

#include "hlx/isoclinism.hpp"

// Straight-line re-implementations of the defining conditions, enumerating
// every matrix over F_p. Deliberately shares no code with the search engine.
namespace hlx::testing {

inline bool oracle_gamma_ok(const RelCentralExt& e1, const RelCentralExt& e2, const Matrix& g) {
  if (!inverse(g)) return false;
  const size_t n = e1.codomain.dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (!(g.apply(e1.codomain.bracket_basis(i, j)) ==
            e2.codomain.bracket(g.col(i), g.col(j))))
        return false;
  if (!(g * e1.codomain.alpha() == e2.codomain.alpha() * g)) return false;
  return map_subspace(g, e1.target) == e2.target;
}

// The defining isoclinism property for a concrete (gamma, beta_prime),
// checked on every basis pair and every compatible m2 over F_p.
inline bool oracle_isoclinism_holds(const RelCentralExt& e1, const RelCentralExt& e2, const Matrix& g,
                             const Subspace& c1, const Subspace& c2, const Matrix& bp) {
  Field f = e1.domain.field();
  Matrix a2inv = *inverse(e2.codomain.alpha());
  const size_t nl = e1.codomain.dim(), nm1 = e1.domain.dim(), nm2 = e2.domain.dim();
  uint64_t total2 = 1;
  for (size_t t = 0; t < nm2; ++t) total2 *= f.p;
  for (size_t i = 0; i < nl; ++i) {
    Vec l2 = a2inv.apply(g.apply(e1.codomain.alpha().col(i)));
    for (size_t j = 0; j < nm1; ++j) {
      Vec v = e1.action.act_basis(i, e1.domain.alpha().col(j));
      auto vc = c1.coords_of(v);
      if (!vc) return false;
      Vec mapped = c2.from_coords(bp.apply(*vc));
      Vec lhs_sig = g.apply(e1.sigma.apply(e1.domain.alpha().col(j)));
      bool any = false;
      for (uint64_t code = 0; code < total2; ++code) {
        Vec m2 = zero_vec(f, nm2);
        uint64_t c = code;
        for (size_t t = 0; t < nm2; ++t) {
          m2[t] = FieldElement(f, static_cast<long>(c % f.p));
          c /= f.p;
        }
        Vec am2 = e2.domain.alpha().apply(m2);
        if (!(e2.sigma.apply(am2) == lhs_sig)) continue;
        any = true;
        if (!(e2.action.act(l2, am2) == mapped)) return false;
      }
      if (!any) return false;
    }
  }
  return true;
}

inline bool oracle_isoclinic(const RelCentralExt& e1, const RelCentralExt& e2) {
  Field f = e1.domain.field();
  Subspace c1 = l_commutator(e1), c2 = l_commutator(e2);
  if (c1.dim() != c2.dim()) return false;
  const size_t n = e1.codomain.dim();
  if (n != e2.codomain.dim()) return false;
  uint64_t gtotal = 1;
  for (size_t t = 0; t < n * n; ++t) gtotal *= f.p;
  uint64_t btotal = 1;
  for (size_t t = 0; t < c1.dim() * c2.dim(); ++t) btotal *= f.p;
  for (uint64_t gi = 0; gi < gtotal; ++gi) {
    Matrix g = matrix_from_index(f, n, n, gi);
    if (!oracle_gamma_ok(e1, e2, g)) continue;
    for (uint64_t bi = 0; bi < btotal; ++bi) {
      Matrix bp = matrix_from_index(f, c2.dim(), c1.dim(), bi);
      if (c1.dim() > 0 && !inverse(bp)) continue;
      if (oracle_isoclinism_holds(e1, e2, g, c1, c2, bp)) return true;
    }
  }
  return false;
}

inline bool oracle_isomorphic(const RelCentralExt& e1, const RelCentralExt& e2) {
  Field f = e1.domain.field();
  const size_t n = e1.codomain.dim(), m1 = e1.domain.dim(), m2 = e2.domain.dim();
  if (n != e2.codomain.dim() || m1 != m2) return false;
  uint64_t gtotal = 1;
  for (size_t t = 0; t < n * n; ++t) gtotal *= f.p;
  uint64_t btotal = 1;
  for (size_t t = 0; t < m1 * m2; ++t) btotal *= f.p;
  for (uint64_t gi = 0; gi < gtotal; ++gi) {
    Matrix g = matrix_from_index(f, n, n, gi);
    if (!oracle_gamma_ok(e1, e2, g)) continue;
    for (uint64_t bi = 0; bi < btotal; ++bi) {
      Matrix b = matrix_from_index(f, m2, m1, bi);
      if (!inverse(b)) continue;
      bool morph = true;
      for (size_t i = 0; i < m1 && morph; ++i)
        for (size_t j = 0; j < m1 && morph; ++j)
          morph = b.apply(e1.domain.bracket_basis(i, j)) == e2.domain.bracket(b.col(i), b.col(j));
      if (!morph) continue;
      if (!(b * e1.domain.alpha() == e2.domain.alpha() * b)) continue;
      if (!(g * e1.sigma == e2.sigma * b)) continue;
      if (!(map_subspace(b, l_commutator(e1)) == l_commutator(e2))) continue;
      return true;
    }
  }
  return false;
}

}  // namespace hlx::testing
