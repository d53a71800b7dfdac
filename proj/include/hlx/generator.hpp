#pragma once

#include "hlx/factorset.hpp"

namespace hlx {

struct GeneratorBounds {
  size_t max_dim_l = 4;
  size_t max_dim_mstar = 6;
};

/// Deterministic catalog-driven extension sampler: inclusion extensions,
/// factor-set builds (including the genuine plane cocycle), abelian products
/// and kernel quotients. Every output passes rce_validate; the same seed
/// always yields the same extension.
RelCentralExt generate_extension(uint64_t seed, const GeneratorBounds& bounds = {},
                                 Field field = {});

/// Small stem extensions over F_2 (dim L <= 2, dim M* <= 3) used to cross
/// check the searches against brute force.
const std::vector<std::pair<std::string, RelCentralExt>>& stem_pool_f2();

/// The factor set f(x,y) = c k on the abelian plane; at c != 0 the built
/// extension is the Heisenberg stem case in disguise.
FactorSet plane_cocycle(Field f, long c);

}  // namespace hlx
