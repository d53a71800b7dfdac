#pragma once

#include <vector>

#include "hlx/catalog.hpp"
#include "hlx/extension.hpp"

namespace hlx::testing {

inline Vec vec(Field f, const std::vector<long>& xs) {
  Vec v;
  for (long x : xs) v.push_back(FieldElement(f, x));
  return v;
}

inline Matrix mat(Field f, const std::vector<std::vector<long>>& rows, size_t cols) {
  std::vector<Vec> vr;
  for (const auto& r : rows) vr.push_back(vec(f, r));
  return Matrix::from_rows(f, cols, vr);
}

/// sigma: h3 -> abelian(2), e1 -> x, e2 -> y, e3 -> 0, with the bracket-lift
/// action; the standard stem example with kernel = span{e3}.
inline RelCentralExt h3_stem(Field f) {
  HomLieAlgebra mstar = heisenberg(f);
  HomLieAlgebra l = HomLieAlgebra::abelian(f, 2);
  Matrix sigma = mat(f, {{1, 0, 0}, {0, 1, 0}}, 3);
  HomAction act = HomAction::zero(l, mstar);
  act.set_a(0, 1, 2, FieldElement(f, 1));   // ^x e2 = e3
  act.set_a(1, 0, 2, FieldElement(f, -1));  // ^y e1 = -e3
  return {std::move(mstar), std::move(l), std::move(sigma), std::move(act),
          Subspace::full(f, 2)};
}

/// sigma: abelian(1) -> h3 hitting the center, zero action.
inline RelCentralExt center_line_ext(Field f) {
  HomLieAlgebra mstar = HomLieAlgebra::abelian(f, 1);
  HomLieAlgebra l = heisenberg(f);
  Matrix sigma = mat(f, {{0}, {0}, {1}}, 1);
  HomAction act = HomAction::zero(l, mstar);
  return {std::move(mstar), std::move(l), std::move(sigma), std::move(act),
          Subspace::span(f, 3, {vec(f, {0, 0, 1})})};
}

/// Kernel = span{k1,k2} with Jordan twist gluing k2 to k1 = [M*,L]; the
/// kernel split along the commutator has no twist-invariant complement.
inline RelCentralExt twist_obstructed_ext(Field f) {
  const size_t n = 4;  // k1, k2, x, y
  HomLieAlgebra total = HomLieAlgebra::abelian(f, n);
  Matrix alpha = Matrix::identity(f, n);
  alpha.at(0, 1) = FieldElement(f, 1);  // k2 -> k1 + k2
  total = HomLieAlgebra::abelian_twisted(f, n, std::move(alpha));
  total.set_c(2, 3, 0, FieldElement(f, 1));
  total.set_c(3, 2, 0, FieldElement(f, -1));
  HomLieAlgebra l = HomLieAlgebra::abelian(f, 2);
  Matrix sigma = mat(f, {{0, 0, 1, 0}, {0, 0, 0, 1}}, 4);
  HomAction act = HomAction::zero(l, total);
  act.set_a(0, 3, 0, FieldElement(f, 1));   // ^x yhat = k1
  act.set_a(1, 2, 0, FieldElement(f, -1));  // ^y xhat = -k1
  return {std::move(total), std::move(l), std::move(sigma), std::move(act),
          Subspace::full(f, 2)};
}

}  // namespace hlx::testing
