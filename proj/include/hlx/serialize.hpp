#pragma once

#include <optional>
#include <string>

#include "hlx/factorset.hpp"
#include "hlx/harness.hpp"

namespace hlx {

/// Parsed "hlx/1" document. Parsing is strict on schema (unknown keys,
/// shapes, scalar syntax) but does not run the algebraic validators, so
/// invalid algebras can be loaded and then reported on.
struct Document {
  std::string kind;  // algebra | pair | extension | factorset | witness | morphism | map
  Field field;
  std::optional<HomLieAlgebra> algebra;
  std::optional<Pair> pair;
  std::optional<RelCentralExt> extension;
  std::optional<FactorSet> factorset;
  std::optional<IsoclinismWitness> witness;
  std::optional<ExtMorphism> morphism;
  std::optional<Matrix> map;
};

/// Strict parse; SchemaError carries a path-qualified message.
Document parse_document(const std::string& text);

std::string emit_algebra(const HomLieAlgebra& a);
std::string emit_pair(const Pair& p);
std::string emit_extension(const RelCentralExt& e);
std::string emit_factorset(const FactorSet& f);
std::string emit_witness(const IsoclinismWitness& w);
std::string emit_morphism(const ExtMorphism& m);
std::string emit_map(Field f, const Matrix& m);
std::string emit_report(const SuiteReport& r);
std::string emit_validation(const ValidationReport& r);
std::string emit_invariants(const ExtInvariants& inv);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace hlx
