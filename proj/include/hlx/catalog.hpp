#pragma once

#include "hlx/homlie.hpp"

namespace hlx {

/// Heisenberg algebra h3: [e1,e2] = e3, identity twist.
HomLieAlgebra heisenberg(Field f);

/// Two-dimensional solvable algebra [e1,e2] = e2 with twist diag(1, lambda).
/// lambda must be a unit in the field.
HomLieAlgebra solvable2(Field f, long lambda);

struct CatalogEntry {
  std::string name;
  HomLieAlgebra algebra;
};

/// Named algebras used by the test harness and the generator; every entry
/// passes validate().
const std::vector<CatalogEntry>& algebra_catalog();

}  // namespace hlx
