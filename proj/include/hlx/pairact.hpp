#pragma once

#include "hlx/homlie.hpp"

namespace hlx {

/// A pair (M, L): an ideal M inside the Hom-Lie algebra L.
struct Pair {
  HomLieAlgebra ambient;  // L
  Subspace ideal;         // M
};

/// Checks the ideal condition and builds the pair.
Pair make_pair(HomLieAlgebra ambient, Subspace ideal);

/// Z(M,L) = { m in M : [m,l] = 0 for all l }, always inside M.
Subspace pair_center(const Pair& p);

/// [M,L] = span of [m,l], always inside M.
Subspace pair_commutator(const Pair& p);

/// Action tensor of `actor` on `acted`: ^{e_i} e_j = sum_k a(i,j,k) e_k.
/// Stored extensionally; the axioms are checked by action_validate.
class HomAction {
 public:
  HomAction() = default;
  HomAction(HomLieAlgebra actor, HomLieAlgebra acted, std::vector<FieldElement> tensor);
  static HomAction zero(HomLieAlgebra actor, HomLieAlgebra acted);

  const HomLieAlgebra& actor() const { return actor_; }
  const HomLieAlgebra& acted() const { return acted_; }
  const std::vector<FieldElement>& tensor() const { return a_; }

  const FieldElement& a(size_t i, size_t j, size_t k) const {
    return a_[(i * acted_.dim() + j) * acted_.dim() + k];
  }
  void set_a(size_t i, size_t j, size_t k, FieldElement v);

  Vec act_basis(size_t i, const Vec& k) const;  // ^{e_i} k
  Vec act(const Vec& x, const Vec& k) const;    // bilinear extension

  bool operator==(const HomAction& o) const;

 private:
  HomLieAlgebra actor_, acted_;
  std::vector<FieldElement> a_;  // actor.dim x acted.dim x acted.dim
};

/// Checks the three Hom-action axioms on all basis tuples.
ValidationReport action_validate(const HomAction& a);

/// The bracket action ^x k = [x, k] of L on an ideal, expressed in the
/// ideal's own coordinates.
HomAction multiplication_action(const HomLieAlgebra& L, const Subspace& k_sub);

/// Checks a candidate pair isoclinism (phi on the central quotients, theta on
/// the commutators) including the commuting square on a spanning set.
YesNo pair_isoclinism_validate(const Pair& p1, const Pair& p2, const LinearMap& phi,
                               const LinearMap& theta);

/// The quotient data pair_isoclinism_validate expects phi/theta to live on.
struct PairFrame {
  Quotient quot;            // L / Z(M,L)
  Subspace ideal_image;     // image of M in the quotient
  Restriction commutator;   // [M,L] as an algebra
};
PairFrame pair_frame(const Pair& p);

/// theta forced on the commutator spanning set by phi through the defining
/// square; nothing when the linear system is inconsistent.
std::optional<LinearMap> induced_pair_theta(const Pair& p1, const Pair& p2, const PairFrame& f1,
                                            const PairFrame& f2, const Matrix& phi);

}  // namespace hlx
