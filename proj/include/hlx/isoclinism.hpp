#pragma once

#include <cstdint>
#include <functional>

#include "hlx/extension.hpp"

namespace hlx {

/// Isoclinism data between two extensions: gamma on the base algebras and
/// beta_prime between the commutator subspaces, the latter written in
/// commutator-subspace coordinates (canonical basis rows of [Mi*, Li]).
struct IsoclinismWitness {
  RelCentralExt source, dest;
  Matrix gamma;       // L1 -> L2
  Matrix beta_prime;  // dim[M2*,L2] x dim[M1*,L1]
};

/// Full witness check: gamma an isomorphism carrying the target across,
/// beta_prime an isomorphism, the defining compatibility on all basis pairs,
/// and independence of the compatible-element choice.
YesNo witness_validate(const IsoclinismWitness& w);

/// Consequences every valid witness satisfies: sigma-compatibility on the
/// commutator, the kernel correspondence, and action equivariance.
/// Requires witness_validate to pass.
ValidationReport witness_consequences(const IsoclinismWitness& w);

/// beta_prime determined linearly by gamma on the spanning set, or nothing
/// when the system is inconsistent or the solution is singular.
std::optional<IsoclinismWitness> witness_from_gamma(const RelCentralExt& e1,
                                                    const RelCentralExt& e2, const Matrix& gamma);

/// Restriction of an extension morphism to the commutator subspaces.
IsoclinismWitness restrict_morphism(const ExtMorphism& m);

/// morphism_validate plus witness_validate of the restriction.
YesNo is_isoclinic_morphism(const ExtMorphism& m);

struct SearchBudget {
  enum class Mode { verify, exhaustive, heuristic };
  Mode mode = Mode::exhaustive;
  uint64_t max_candidates = 10'000'000;
  uint64_t seed = 0;
};

enum class SearchStatus { found, not_found, budget_exhausted };

/// The eight dimensions reported by the CLI and compared before searches.
struct ExtInvariants {
  size_t dim_l = 0, dim_target = 0, dim_commutator = 0, dim_l_center = 0, dim_kernel = 0,
         dim_kernel_in_commutator = 0, dim_center_l = 0, dim_derived_l = 0;
  bool operator==(const ExtInvariants&) const = default;
};
ExtInvariants ext_invariants(const RelCentralExt& e);

/// The subset preserved by isoclinisms. Kernel and action-center dimensions
/// move under abelian padding, so only isomorphism searches compare them.
bool isoclinism_filter_match(const ExtInvariants& a, const ExtInvariants& b);

struct IsoclinismSearch {
  SearchStatus status = SearchStatus::not_found;
  std::optional<IsoclinismWitness> witness;
};
IsoclinismSearch search_isoclinism(const RelCentralExt& e1, const RelCentralExt& e2,
                                   const SearchBudget& budget);

struct IsomorphismSearch {
  SearchStatus status = SearchStatus::not_found;
  std::optional<ExtMorphism> morphism;
};
IsomorphismSearch search_isomorphism(const RelCentralExt& e1, const RelCentralExt& e2,
                                     const SearchBudget& budget);

struct PairIsoclinismSearch {
  SearchStatus status = SearchStatus::not_found;
  std::optional<LinearMap> phi, theta;
};
PairIsoclinismSearch pair_search_isoclinism(const Pair& p1, const Pair& p2,
                                            const SearchBudget& budget);

struct Decomposition {
  RelCentralExt stem;
  HomLieAlgebra abelian_part;
  RelCentralExt product;  // stem x abelian_part
  ExtMorphism iso;        // from the input onto the product
};

/// Splits an extension as (stem) x (abelian) following the kernel split
/// along [M*,L] (or along the derived subalgebra with use_derived_split).
Decomposition decompose_family(const RelCentralExt& e, bool use_derived_split = false);

struct ProductEmbeddings {
  PullbackExt pb;
  ProductExt prod1, prod2;
  ExtMorphism into_first;   // pullback -> sigma1 x A
  ExtMorphism into_second;  // pullback -> sigma2 x A
};

/// Embeds the joint extension of a validated witness into the two abelian
/// products via x -> (beta_i(x), x + [joint, L1]).
ProductEmbeddings product_embeddings(const IsoclinismWitness& w);

struct CommonQuotient {
  RelCentralExt quotient;   // (M1* x A)/T
  ExtMorphism from_first;   // sigma1 -> quotient, base map 1
  ExtMorphism from_second;  // sigma2 -> quotient, base map gamma^{-1}
};

/// Builds T = {(x, (x,0) + [joint,L1]) : x in Ker sigma1} and the two
/// monomorphisms into (M1* x A)/T. Requires a validated witness.
CommonQuotient common_quotient_embedding(const IsoclinismWitness& w);

/// Candidate-matrix enumeration order used by exhaustive searches: base-p
/// digits of idx, row-major, entry (0,0) most significant, so ascending idx
/// is lexicographic on entries.
Matrix matrix_from_index(Field f, size_t rows, size_t cols, uint64_t idx);

/// Smallest index in [0, total) accepted by pred; deterministic regardless of
/// the worker count (HLX_THREADS caps the fan-out).
std::optional<uint64_t> parallel_min_index(uint64_t total,
                                           const std::function<bool(uint64_t)>& pred);

size_t search_threads();

}  // namespace hlx
