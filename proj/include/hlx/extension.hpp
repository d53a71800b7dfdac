#pragma once

#include "hlx/pairact.hpp"

namespace hlx {

/// Relative central extension sigma: M* -> L of the pair (L, target), with an
/// action of L on M*. The target is stored explicitly and checked against
/// image(sigma) so corrupted inputs are detected.
struct RelCentralExt {
  HomLieAlgebra domain;    // M*
  HomLieAlgebra codomain;  // L
  Matrix sigma;            // codomain.dim x domain.dim
  HomAction action;        // actor = codomain, acted = domain
  Subspace target;         // M inside L

  LinearMap sigma_map() const { return {domain, codomain, sigma}; }
};

/// Full validation: sigma is a morphism, the action axioms, the three
/// extension conditions, the pair condition on (L, M), and the two kernel
/// centrality properties. Failures are data, not errors.
ValidationReport rce_validate(const RelCentralExt& e);

Subspace rce_kernel(const RelCentralExt& e);

/// [M*,L]: span of ^{e_i} alpha*(e_j).
Subspace l_commutator(const RelCentralExt& e);

/// Z(M*,L): all m with ^{l} alpha*(m) = 0.
Subspace l_center(const RelCentralExt& e);

/// Ker sigma inside [M*,L].
bool is_stem(const RelCentralExt& e);

enum class MorphClass { general, mono, epi, iso };

struct ExtMorphism {
  RelCentralExt source, dest;
  Matrix gamma;  // L1 -> L2
  Matrix beta;   // M1* -> M2*
};

struct MorphismCheck {
  bool yes = false;
  MorphClass cls = MorphClass::general;
  std::string witness;
  explicit operator bool() const { return yes; }
};

/// Checks gamma and beta are morphisms with gamma sigma1 = sigma2 beta,
/// gamma(M1) = M2 and beta([M1*,L1]) = [M2*,L2]; classifies by rank.
MorphismCheck morphism_validate(const ExtMorphism& m);

ExtMorphism identity_morphism(const RelCentralExt& e);

/// The inclusion M -> L with the bracket action. Only validates for
/// identity-like twists; the caller re-checks with rce_validate.
RelCentralExt inclusion_extension(const Pair& p);

struct StemReduction {
  RelCentralExt reduced;
  ExtMorphism epi;             // (1_L, quotient projection)
  HomLieAlgebra removed;       // N as an abelian algebra
  Subspace removed_space;      // N inside M*
  bool twist_obstructed = false;
  bool certificate_ok = false;  // no kernel closure avoids the commutator
};

/// Quotients away a maximal twist-invariant subspace N of Ker sigma with
/// N meet [M*,L] = 0 (or N meet (M*)^2 with use_derived_split). When the
/// greedy sweep cannot reach the full complement the best invariant N is
/// used and twist_obstructed is set instead of failing.
StemReduction stem_reduce(const RelCentralExt& e, bool use_derived_split = false);

struct ProductExt {
  RelCentralExt ext;
  ExtMorphism epi;   // (1_L, projection)
  ExtMorphism mono;  // (1_L, inclusion)
};

/// sigma pi on M* x A for abelian A, action ^l(m,a) = (^l m, 0).
ProductExt product_with_abelian(const RelCentralExt& e, const HomLieAlgebra& a);

struct QuotientExt {
  RelCentralExt ext;
  ExtMorphism epi;
};

/// M*/N -> L for an ideal N inside Ker sigma, with the induced action.
QuotientExt quotient_ext(const RelCentralExt& e, const Subspace& n);

struct SubalgebraExt {
  RelCentralExt ext;
  ExtMorphism mono;
};

/// Restriction to a subalgebra T with T + Ker sigma = M* and sigma(T) = M.
/// The action must close on T (it does whenever T contains [M*,L]).
SubalgebraExt subalgebra_ext(const RelCentralExt& e, const Subspace& t);

struct PullbackExt {
  RelCentralExt ext;
  ExtMorphism onto_first;
  ExtMorphism onto_second;
};

/// The joint extension on {(m1,m2) : gamma sigma1 alpha1*(m1) = sigma2 alpha2*(m2)}
/// with the component-wise action, plus the two projection morphisms.
PullbackExt pullback(const RelCentralExt& e1, const RelCentralExt& e2, const Matrix& gamma);

ExtMorphism compose_morphisms(const ExtMorphism& outer, const ExtMorphism& inner);
ExtMorphism invert_morphism(const ExtMorphism& m);  // both components invertible

/// The same extension written in new coordinates: p on the domain, q on the
/// codomain. Returns the rewritten extension and the isomorphism (q, p) onto it.
struct ConjugatedExt {
  RelCentralExt ext;
  ExtMorphism iso;  // from the original onto the rewritten extension
};
ConjugatedExt conjugate_extension(const RelCentralExt& e, const Matrix& p, const Matrix& q);

}  // namespace hlx
