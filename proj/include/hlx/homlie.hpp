#pragma once

#include <string>
#include <string_view>

#include "hlx/subspace.hpp"

namespace hlx {

struct Check {
  std::string name;
  bool ok = true;
  std::string witness;
};

/// Named per-axiom results; a failed check always carries a concrete witness.
struct ValidationReport {
  std::vector<Check> checks;
  bool ok() const;
  const Check* find(std::string_view name) const;
  std::string summary() const;
};

struct YesNo {
  bool yes = false;
  std::string witness;
  explicit operator bool() const { return yes; }
};

/// Hom-Lie algebra as structure-constant data: [e_i, e_j] = sum_k c(i,j,k) e_k
/// together with the twist matrix alpha. Construction checks shapes only;
/// the axioms are checked by validate().
class HomLieAlgebra {
 public:
  HomLieAlgebra() = default;
  HomLieAlgebra(Field f, size_t dim, std::vector<FieldElement> bracket_tensor, Matrix alpha);
  static HomLieAlgebra abelian(Field f, size_t dim);
  static HomLieAlgebra abelian_twisted(Field f, size_t dim, Matrix alpha);

  Field field() const { return field_; }
  size_t dim() const { return dim_; }
  const Matrix& alpha() const { return alpha_; }
  const std::vector<FieldElement>& tensor() const { return c_; }

  const FieldElement& c(size_t i, size_t j, size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }
  void set_c(size_t i, size_t j, size_t k, FieldElement v);

  Vec bracket_basis(size_t i, size_t j) const;
  Vec bracket(const Vec& x, const Vec& y) const;

  bool operator==(const HomLieAlgebra& o) const;

 private:
  Field field_;
  size_t dim_ = 0;
  std::vector<FieldElement> c_;  // dim^3, row-major (i, j, k)
  Matrix alpha_;
};

/// Checks skew-symmetry, the twisted Jacobi identity, multiplicativity of the
/// twist, and regularity, with a first witness per failing family.
ValidationReport validate(const HomLieAlgebra& L);

inline Vec bracket_vec(const HomLieAlgebra& L, const Vec& x, const Vec& y) {
  return L.bracket(x, y);
}

Subspace center(const HomLieAlgebra& L);
Subspace derived(const HomLieAlgebra& L);

/// Ideal test: bracket absorption and twist invariance.
YesNo is_ideal(const HomLieAlgebra& L, const Subspace& u);

struct LinearMap {
  HomLieAlgebra domain, codomain;
  Matrix matrix;  // codomain.dim x domain.dim, columns = images of basis vectors
  Vec apply(const Vec& x) const { return matrix.apply(x); }
};

LinearMap identity_map(const HomLieAlgebra& L);
LinearMap compose(const LinearMap& g, const LinearMap& f);
YesNo is_morphism(const LinearMap& f);

struct Quotient {
  HomLieAlgebra algebra;
  LinearMap projection;
  Matrix section;  // ambient x q; columns are the chosen coset representatives
};

Quotient quotient(const HomLieAlgebra& L, const Subspace& ideal);

HomLieAlgebra direct_sum(const HomLieAlgebra& a, const HomLieAlgebra& b);

struct Restriction {
  HomLieAlgebra algebra;
  LinearMap inclusion;
  Subspace space;
};

/// Materializes a bracket-closed, twist-invariant subspace in its own
/// coordinates (the canonical basis rows of the subspace).
Restriction restrict_to_subalgebra(const HomLieAlgebra& L, const Subspace& s);

std::string basis_name(size_t i);  // one-based: e1, e2, ...

}  // namespace hlx
