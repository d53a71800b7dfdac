#include "hlx/catalog.hpp"

namespace hlx {

HomLieAlgebra heisenberg(Field f) {
  HomLieAlgebra h = HomLieAlgebra::abelian(f, 3);
  h.set_c(0, 1, 2, FieldElement(f, 1));
  h.set_c(1, 0, 2, FieldElement(f, -1));
  return h;
}

HomLieAlgebra solvable2(Field f, long lambda) {
  Matrix alpha = Matrix::identity(f, 2);
  alpha.at(1, 1) = FieldElement(f, lambda);
  require(!alpha.at(1, 1).is_zero(), Errc::InvalidField, "twist weight vanishes in this field");
  HomLieAlgebra a = HomLieAlgebra::abelian_twisted(f, 2, std::move(alpha));
  a.set_c(0, 1, 1, FieldElement(f, 1));
  a.set_c(1, 0, 1, FieldElement(f, -1));
  return a;
}

const std::vector<CatalogEntry>& algebra_catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    const Field q = rationals();
    const Field f2 = prime_field(2);
    const Field f3 = prime_field(3);
    std::vector<CatalogEntry> v;
    v.push_back({"abelian1", HomLieAlgebra::abelian(q, 1)});
    v.push_back({"abelian2", HomLieAlgebra::abelian(q, 2)});
    v.push_back({"abelian3", HomLieAlgebra::abelian(q, 3)});
    v.push_back({"abelian4", HomLieAlgebra::abelian(q, 4)});
    v.push_back({"h3", heisenberg(q)});
    v.push_back({"h3_plus_abelian1", direct_sum(heisenberg(q), HomLieAlgebra::abelian(q, 1))});
    v.push_back({"solvable2_w2", solvable2(q, 2)});
    v.push_back({"solvable2_w3", solvable2(q, 3)});
    v.push_back({"abelian2_f2", HomLieAlgebra::abelian(f2, 2)});
    v.push_back({"h3_f2", heisenberg(f2)});
    v.push_back({"h3_f3", heisenberg(f3)});
    v.push_back({"solvable2_w2_f3", solvable2(f3, 2)});
    return v;
  }();
  return entries;
}

}  // namespace hlx
