#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hlx/generator.hpp"
#include "hlx/serialize.hpp"
#include "test_support.hpp"

using namespace hlx;
using hlx::testing::h3_stem;
using hlx::testing::vec;

namespace {
const Field Q = rationals();
}

TEST_CASE("algebra documents round-trip byte for byte") {
  for (const auto& entry : algebra_catalog()) {
    INFO(entry.name);
    std::string text = emit_algebra(entry.algebra);
    Document d = parse_document(text);
    REQUIRE(d.kind == "algebra");
    REQUIRE(d.algebra.has_value());
    CHECK(*d.algebra == entry.algebra);
    CHECK(emit_algebra(*d.algebra) == text);
  }
}

TEST_CASE("extension, pair, factorset, witness, morphism and map documents round-trip") {
  RelCentralExt stem = h3_stem(Q);
  std::string ext_text = emit_extension(stem);
  Document de = parse_document(ext_text);
  REQUIRE(de.extension.has_value());
  CHECK(emit_extension(*de.extension) == ext_text);
  CHECK(rce_validate(*de.extension).ok());

  Pair p{heisenberg(Q), center(heisenberg(Q))};
  std::string pair_text = emit_pair(p);
  Document dp = parse_document(pair_text);
  REQUIRE(dp.pair.has_value());
  CHECK(emit_pair(*dp.pair) == pair_text);

  FactorSet fs = plane_cocycle(Q, 1);
  std::string fs_text = emit_factorset(fs);
  Document df = parse_document(fs_text);
  REQUIRE(df.factorset.has_value());
  CHECK(emit_factorset(*df.factorset) == fs_text);
  CHECK(df.factorset->tensor == fs.tensor);

  IsoclinismWitness w{stem, stem, Matrix::identity(Q, 2), Matrix::identity(Q, 1)};
  std::string w_text = emit_witness(w);
  Document dw = parse_document(w_text);
  REQUIRE(dw.witness.has_value());
  CHECK(emit_witness(*dw.witness) == w_text);
  CHECK(witness_validate(*dw.witness).yes);

  ExtMorphism m = identity_morphism(stem);
  std::string m_text = emit_morphism(m);
  Document dm = parse_document(m_text);
  REQUIRE(dm.morphism.has_value());
  CHECK(emit_morphism(*dm.morphism) == m_text);

  Matrix g = Matrix::identity(Q, 2);
  std::string g_text = emit_map(Q, g);
  Document dg = parse_document(g_text);
  REQUIRE(dg.map.has_value());
  CHECK(*dg.map == g);
  CHECK(emit_map(Q, *dg.map) == g_text);
}

TEST_CASE("generated extensions round-trip over Q and F_2") {
  for (uint64_t seed : {0, 1, 2, 3, 4, 5}) {
    RelCentralExt e = generate_extension(seed);
    std::string text = emit_extension(e);
    Document d = parse_document(text);
    CHECK(emit_extension(*d.extension) == text);
  }
  RelCentralExt e2 = generate_extension(7, GeneratorBounds{}, prime_field(2));
  std::string text = emit_extension(e2);
  Document d = parse_document(text);
  CHECK(emit_extension(*d.extension) == text);
  CHECK(d.field == prime_field(2));
}

TEST_CASE("schema errors carry the offending path") {
  std::string text = emit_algebra(heisenberg(Q));

  auto expect_schema_error = [](const std::string& doc, const std::string& needle) {
    try {
      parse_document(doc);
      FAIL("expected a schema error");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::SchemaError);
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };

  // Missing alpha.
  {
    auto pos = text.find("\"alpha\"");
    std::string broken = text;
    broken.replace(pos, 7, "\"alpaca\"");
    expect_schema_error(broken, "alpaca");
  }
  // Wrong bracket arity: drop one coefficient list.
  {
    RelCentralExt stem = h3_stem(Q);
    std::string ext = emit_extension(stem);
    expect_schema_error(ext.substr(0, ext.size() / 2), "not valid JSON");
  }
  expect_schema_error("{}", "$.format");
  expect_schema_error(R"({"format":"hlx/2","kind":"algebra","field":"Q"})", "$.format");
  expect_schema_error(
      R"({"format":"hlx/1","kind":"algebra","field":"Fp:4","dim":0,"alpha":[],"bracket":[]})",
      "$.field");
  expect_schema_error(
      R"({"format":"hlx/1","kind":"algebra","field":"Q","dim":1,"alpha":[["1"]],"bracket":[[["0"]]],"extra":1})",
      "$.extra");
  expect_schema_error(
      R"({"format":"hlx/1","kind":"algebra","field":"Q","dim":1,"alpha":[["1/0"]],"bracket":[[["0"]]]})",
      "$.alpha");
  expect_schema_error(
      R"({"format":"hlx/1","kind":"algebra","field":"Fp:5","dim":1,"alpha":[[7]],"bracket":[[[0]]]})",
      "modulus");
  expect_schema_error(
      R"({"format":"hlx/1","kind":"algebra","field":"Fp:5","dim":1,"alpha":[[-1]],"bracket":[[[0]]]})",
      "integers in [0, p)");
  expect_schema_error(
      R"({"format":"hlx/1","kind":"algebra","field":"Q","dim":2,"alpha":[["1","0"],["0","1"]],"bracket":[[["0"],["0"]],[["0"],["0"]]]})",
      "$.bracket[0][0]");
}

TEST_CASE("subspace rows are canonicalized on parse") {
  // A pair whose ideal is written with a redundant, non-reduced spanning set.
  std::string doc = R"({
  "algebra": {"alpha": [["1","0"],["0","1"]], "bracket": [[["0","0"],["0","0"]],[["0","0"],["0","0"]]], "dim": 2},
  "field": "Q",
  "format": "hlx/1",
  "ideal": [["2","2"],["1","1"]],
  "kind": "pair"
})";
  Document d = parse_document(doc);
  REQUIRE(d.pair.has_value());
  CHECK(d.pair->ideal.dim() == 1);
  CHECK(d.pair->ideal.basis_vector(0) == vec(Q, {1, 1}));
  // Emitting gives the canonical form, which then round-trips exactly.
  std::string canon = emit_pair(*d.pair);
  CHECK(emit_pair(*parse_document(canon).pair) == canon);
}

TEST_CASE("report emission is deterministic") {
  SuiteReport r1 = verify_suite(3, 2);
  SuiteReport r2 = verify_suite(3, 2);
  CHECK(emit_report(r1) == emit_report(r2));
  CHECK(emit_report(r1).find("\"hard_failures\": 0") != std::string::npos);
}
