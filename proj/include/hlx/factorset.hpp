#pragma once

#include "hlx/isoclinism.hpp"

namespace hlx {

/// Skew bilinear map L x L -> K supported on M: it factors through the
/// projection onto M along the pivot-greedy complement, and satisfies the
/// twisted cyclic identity. K is an abstract abelian algebra carrying the
/// kernel twist, so factor sets are usable standalone.
struct FactorSet {
  HomLieAlgebra base;          // L
  HomLieAlgebra kernel_space;  // K
  Subspace support;            // M inside L
  std::vector<FieldElement> tensor;  // dimL x dimL x dimK

  const FieldElement& t(size_t i, size_t j, size_t k) const {
    return tensor[(i * base.dim() + j) * kernel_space.dim() + k];
  }
  void set_t(size_t i, size_t j, size_t k, FieldElement v);

  Vec value(size_t i, size_t j) const;               // f(e_i, e_j), K coordinates
  Vec value_vec(const Vec& x, const Vec& y) const;   // bilinear extension
};

FactorSet zero_factorset(HomLieAlgebra base, HomLieAlgebra kernel_space, Subspace support);

/// Builds the dense tensor from values on support coordinates:
/// f(x, y) = fm(pi x, pi y) with pi the projection onto M.
FactorSet factorset_from_support_tensor(HomLieAlgebra base, HomLieAlgebra kernel_space,
                                        Subspace support,
                                        const std::vector<FieldElement>& fm);

/// Checks skew/diagonal, support, the cyclic identity, the kernel-space
/// shape, and (as an auxiliary slot) twist equivariance f(ax,ay) = aK f(x,y).
ValidationReport factorset_validate(const FactorSet& f);

/// The extension sigma_f on (K x M): bracket (f(m1,m2), [m1,m2]), twist
/// (aK, aL), projection sigma, action ^l(x,m) = (f(l,m), [l,m]). The result
/// must pass rce_validate in full or InvalidFactorSet is raised.
RelCentralExt extension_from_factorset(const FactorSet& f, const Pair& pair);

struct FactorSetExtraction {
  FactorSet fs;
  RelCentralExt reconstruction;  // sigma_f built from fs
  ExtMorphism iso;               // (1_L, x + t_m): reconstruction -> e
};

/// Extracts the factor set of e through a twist-invariant transversal of
/// Ker sigma; NoInvariantComplement when the greedy sweep finds none.
FactorSetExtraction factorset_from_extension(const RelCentralExt& e);

struct TransportedFactorSet {
  FactorSet g;                 // factor set transported to the witness source
  RelCentralExt built_source;  // sigma_{g}
  RelCentralExt built_dest;    // sigma_{h}
  ExtMorphism theta;           // (gamma, (x,m) -> (beta'(x), gamma m))
};

/// Pulls a factor set h of the witness destination back along a validated
/// isoclinism between stem extensions.
TransportedFactorSet transport_factorset(const FactorSet& h, const IsoclinismWitness& w);

/// The isomorphism (gamma, lambda): sigma_f -> sigma_g induced by a witness
/// between them, with lambda = beta' on Ker sigma_f and (d(m), gamma m) on M.
ExtMorphism factorset_iso(const FactorSet& f, const FactorSet& g, const IsoclinismWitness& w);

}  // namespace hlx
