#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hlx/generator.hpp"
#include "hlx/harness.hpp"
#include "oracle_support.hpp"
#include "test_support.hpp"

using namespace hlx;
using hlx::testing::h3_stem;
using hlx::testing::mat;
using hlx::testing::vec;

namespace {
const Field Q = rationals();
}  // namespace

TEST_CASE("witness validation: identity, product padding, scaled beta_prime") {
  RelCentralExt stem = h3_stem(Q);
  IsoclinismWitness id{stem, stem, Matrix::identity(Q, 2), Matrix::identity(Q, 1)};
  CHECK(witness_validate(id).yes);

  ProductExt prod = product_with_abelian(stem, HomLieAlgebra::abelian(Q, 1));
  IsoclinismWitness w = restrict_morphism(prod.mono);
  CHECK(witness_validate(w).yes);

  IsoclinismWitness scaled = id;
  scaled.beta_prime.at(0, 0) = FieldElement(Q, 2);
  auto res = witness_validate(scaled);
  CHECK(!res.yes);
  CHECK(res.witness.find("compatibility breaks") == 0);
}

TEST_CASE("witness consequences hold for produced witnesses") {
  RelCentralExt stem = h3_stem(Q);
  ProductExt prod = product_with_abelian(stem, HomLieAlgebra::abelian(Q, 1));
  for (const ExtMorphism& m : {prod.mono, prod.epi}) {
    IsoclinismWitness w = restrict_morphism(m);
    REQUIRE(witness_validate(w).yes);
    CHECK(witness_consequences(w).ok());
  }
  IsoclinismWitness bad{stem, stem, Matrix::identity(Q, 2), Matrix(Q, 1, 1)};
  CHECK_THROWS_AS(witness_consequences(bad), Error);
}

TEST_CASE("isoclinic morphism check covers the canonical product maps") {
  RelCentralExt stem = h3_stem(Q);
  ProductExt prod = product_with_abelian(stem, HomLieAlgebra::abelian(Q, 2));
  CHECK(is_isoclinic_morphism(prod.mono).yes);
  CHECK(is_isoclinic_morphism(prod.epi).yes);
  CHECK(is_isoclinic_morphism(identity_morphism(stem)).yes);
}

TEST_CASE("invariant filters distinguish the obvious cases") {
  RelCentralExt stem = h3_stem(Q);
  ProductExt prod = product_with_abelian(stem, HomLieAlgebra::abelian(Q, 1));
  ExtInvariants a = ext_invariants(stem);
  ExtInvariants b = ext_invariants(prod.ext);
  CHECK(a.dim_l == b.dim_l);
  CHECK(a.dim_commutator == b.dim_commutator);
  CHECK(a.dim_kernel != b.dim_kernel);  // padding grows the kernel
  CHECK(isoclinism_filter_match(a, b));
  CHECK(!(a == b));
}

TEST_CASE("search finds the identity class on itself") {
  const Field f2 = prime_field(2);
  FactorSet fs = plane_cocycle(f2, 1);
  RelCentralExt e = extension_from_factorset(fs, Pair{fs.base, fs.support});
  SearchBudget budget;
  auto res = search_isoclinism(e, e, budget);
  REQUIRE(res.status == SearchStatus::found);
  CHECK(witness_validate(*res.witness).yes);
  auto iso = search_isomorphism(e, e, budget);
  REQUIRE(iso.status == SearchStatus::found);
  CHECK(morphism_validate(*iso.morphism).cls == MorphClass::iso);
}

TEST_CASE("search over Q uses the signed-permutation stream") {
  RelCentralExt stem = h3_stem(Q);
  ProductExt prod = product_with_abelian(stem, HomLieAlgebra::abelian(Q, 1));
  SearchBudget heur;
  heur.mode = SearchBudget::Mode::heuristic;
  auto res = search_isoclinism(stem, prod.ext, heur);
  REQUIRE(res.status == SearchStatus::found);
  CHECK(witness_validate(*res.witness).yes);
  CHECK(witness_consequences(*res.witness).ok());

  auto iso = search_isomorphism(stem, prod.ext, heur);
  CHECK(iso.status == SearchStatus::not_found);  // dim M* differs

  auto self_iso = search_isomorphism(stem, stem, heur);
  REQUIRE(self_iso.status == SearchStatus::found);
  CHECK(morphism_validate(*self_iso.morphism).cls == MorphClass::iso);
}

TEST_CASE("filter mismatch returns a definitive no before any enumeration") {
  const Field f2 = prime_field(2);
  FactorSet fs = plane_cocycle(f2, 1);
  RelCentralExt stem = extension_from_factorset(fs, Pair{fs.base, fs.support});
  // Trivial extension with zero action over the same pair data.
  HomLieAlgebra mstar = HomLieAlgebra::abelian(f2, 2);
  RelCentralExt trivial{mstar, fs.base, Matrix::identity(f2, 2),
                        HomAction::zero(fs.base, mstar), Subspace::full(f2, 2)};
  REQUIRE(rce_validate(trivial).ok());
  SearchBudget budget;
  CHECK(search_isoclinism(stem, trivial, budget).status == SearchStatus::not_found);
  CHECK(search_isomorphism(stem, trivial, budget).status == SearchStatus::not_found);
}

TEST_CASE("searches agree with the brute-force oracle across the stem pool") {
  const auto& pool = stem_pool_f2();
  REQUIRE(pool.size() >= 6);
  SearchBudget budget;
  size_t positives = 0;
  for (const auto& [name1, e1] : pool)
    for (const auto& [name2, e2] : pool) {
      INFO(name1 << " vs " << name2);
      bool icl = hlx::testing::oracle_isoclinic(e1, e2);
      bool iso = hlx::testing::oracle_isomorphic(e1, e2);
      auto sicl = search_isoclinism(e1, e2, budget);
      auto siso = search_isomorphism(e1, e2, budget);
      REQUIRE(sicl.status != SearchStatus::budget_exhausted);
      REQUIRE(siso.status != SearchStatus::budget_exhausted);
      CHECK((sicl.status == SearchStatus::found) == icl);
      CHECK((siso.status == SearchStatus::found) == iso);
      CHECK(icl == iso);  // all pool members are stem
      if (sicl.status == SearchStatus::found) {
        ++positives;
        CHECK(witness_validate(*sicl.witness).yes);
        CHECK(witness_consequences(*sicl.witness).ok());
        CHECK(isoclinism_filter_match(ext_invariants(e1), ext_invariants(e2)));
        CHECK(rce_kernel(e1).dim() == rce_kernel(e2).dim());
        CHECK(e1.domain.dim() == e2.domain.dim());
      }
      if (siso.status == SearchStatus::found) {
        // An isomorphism restricts to an isoclinism witness.
        CHECK(witness_validate(restrict_morphism(*siso.morphism)).yes);
      }
    }
  CHECK(positives > pool.size());  // at least one positive off-diagonal pair
}

TEST_CASE("pair search: identity, padded ambient, commutator obstruction") {
  HomLieAlgebra h3 = heisenberg(Q);
  Pair p1 = make_pair(h3, Subspace::full(Q, 3));
  SearchBudget heur;
  heur.mode = SearchBudget::Mode::heuristic;

  auto self = pair_search_isoclinism(p1, p1, heur);
  REQUIRE(self.status == SearchStatus::found);
  CHECK(pair_isoclinism_validate(p1, p1, *self.phi, *self.theta).yes);

  Pair p2 = make_pair(direct_sum(h3, HomLieAlgebra::abelian(Q, 1)), Subspace::full(Q, 4));
  auto padded = pair_search_isoclinism(p1, p2, heur);
  REQUIRE(padded.status == SearchStatus::found);
  CHECK(pair_isoclinism_validate(p1, p2, *padded.phi, *padded.theta).yes);

  Pair p3 = make_pair(HomLieAlgebra::abelian(Q, 3), Subspace::full(Q, 3));
  CHECK(pair_search_isoclinism(p1, p3, heur).status == SearchStatus::not_found);
}

TEST_CASE("decomposition: stem input, padded input, twist obstruction") {
  RelCentralExt stem = h3_stem(Q);
  Decomposition d1 = decompose_family(stem);
  CHECK(d1.abelian_part.dim() == 0);
  CHECK(is_stem(d1.stem));
  CHECK(morphism_validate(d1.iso).cls == MorphClass::iso);

  ProductExt prod = product_with_abelian(stem, HomLieAlgebra::abelian(Q, 2));
  Decomposition d2 = decompose_family(prod.ext);
  CHECK(d2.abelian_part.dim() == 2);
  CHECK(is_stem(d2.stem));
  CHECK(derived(d2.abelian_part).dim() == 0);
  CHECK(morphism_validate(d2.iso).cls == MorphClass::iso);
  CHECK(l_commutator(d2.stem).dim() == l_commutator(stem).dim());

  CHECK_THROWS_AS(decompose_family(hlx::testing::twist_obstructed_ext(Q)), Error);
}

TEST_CASE("decomposition along the derived subalgebra agrees here") {
  RelCentralExt stem = h3_stem(Q);
  ProductExt prod = product_with_abelian(stem, HomLieAlgebra::abelian(Q, 1));
  // For this extension the derived subalgebra of M* equals [M*,L].
  REQUIRE(derived(prod.ext.domain) == l_commutator(prod.ext));
  Decomposition a = decompose_family(prod.ext, false);
  Decomposition b = decompose_family(prod.ext, true);
  CHECK(a.abelian_part.dim() == b.abelian_part.dim());
  CHECK(is_stem(b.stem));
}

TEST_CASE("generator is deterministic and always emits valid extensions") {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    RelCentralExt e1 = generate_extension(seed);
    RelCentralExt e2 = generate_extension(seed);
    CHECK(e1.domain == e2.domain);
    CHECK(e1.sigma == e2.sigma);
    CHECK(e1.action == e2.action);
    CHECK(rce_validate(e1).ok());
    CHECK(e1.domain.dim() <= 6);
    CHECK(e1.codomain.dim() <= 4);
  }
}

TEST_CASE("generated extensions cover stem and non-stem shapes") {
  size_t stems = 0, non_stems = 0, with_kernel = 0;
  for (uint64_t seed = 0; seed < 40; ++seed) {
    RelCentralExt e = generate_extension(seed);
    (is_stem(e) ? stems : non_stems)++;
    if (rce_kernel(e).dim() > 0) ++with_kernel;
  }
  CHECK(stems > 0);
  CHECK(non_stems > 5);
  CHECK(with_kernel > 10);
}

TEST_CASE("verify suite: zero count, smoke run, determinism") {
  SuiteReport empty = verify_suite(1, 0);
  CHECK(empty.hard_failures() == 0);
  for (const auto& c : empty.claims) CHECK(c.pass + c.fail + c.skipped == 0);

  SuiteReport r1 = verify_suite(1, 4);
  CHECK(r1.hard_failures() == 0);
  size_t passes = 0;
  for (const auto& c : r1.claims) passes += c.pass;
  CHECK(passes > 20);

  SuiteReport r2 = verify_suite(1, 4);
  CHECK(r1.findings == r2.findings);
  REQUIRE(r1.claims.size() == r2.claims.size());
  for (size_t i = 0; i < r1.claims.size(); ++i) {
    CHECK(r1.claims[i].pass == r2.claims[i].pass);
    CHECK(r1.claims[i].skipped == r2.claims[i].skipped);
    CHECK(r1.claims[i].notes == r2.claims[i].notes);
  }
}

TEST_CASE("parallel minimum-index search is deterministic") {
  auto pred = [](uint64_t i) { return i % 977 == 431; };
  auto r = parallel_min_index(100000, pred);
  REQUIRE(r.has_value());
  CHECK(*r == 431);
  CHECK(!parallel_min_index(400, pred).has_value());
}
