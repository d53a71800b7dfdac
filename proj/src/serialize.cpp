#include "hlx/serialize.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace hlx {

using nlohmann::json;

namespace {

constexpr const char* kFormat = "hlx/1";

[[noreturn]] void schema_fail(const std::string& path, const std::string& reason) {
  fail(Errc::SchemaError, path + ": " + reason);
}

const json& need(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) schema_fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_fail(path + "." + key, "missing");
  return *it;
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed) ok = ok || it.key() == k;
    if (!ok) schema_fail(path + "." + it.key(), "unknown key");
  }
}

size_t need_count(const json& v, const std::string& path) {
  if (!v.is_number_unsigned()) schema_fail(path, "expected a non-negative integer");
  return v.get<size_t>();
}

json scalar_to_json(const FieldElement& x) {
  if (x.field().is_rational()) return x.str();
  return x.residue();
}

FieldElement scalar_from_json(Field f, const json& v, const std::string& path) {
  if (f.is_rational()) {
    if (!v.is_string()) schema_fail(path, "rational scalars are strings like \"a/b\"");
    try {
      return FieldElement::parse(f, v.get<std::string>());
    } catch (const Error& e) {
      schema_fail(path, e.what());
    }
  }
  if (!v.is_number_unsigned()) schema_fail(path, "prime-field scalars are integers in [0, p)");
  uint64_t r = v.get<uint64_t>();
  if (r >= f.p) schema_fail(path, "residue exceeds the modulus");
  return FieldElement(f, static_cast<long>(r));
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(Field f, const json& v, size_t rows, size_t cols,
                        const std::string& path) {
  if (!v.is_array() || v.size() != rows) schema_fail(path, "expected " + std::to_string(rows) + " rows");
  Matrix m(f, rows, cols);
  for (size_t i = 0; i < rows; ++i) {
    const json& row = v[i];
    std::string rpath = path + "[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != cols)
      schema_fail(rpath, "expected " + std::to_string(cols) + " entries");
    for (size_t j = 0; j < cols; ++j)
      m.at(i, j) = scalar_from_json(f, row[j], rpath + "[" + std::to_string(j) + "]");
  }
  return m;
}

// Basis rows of a subspace; any spanning rows are accepted and canonicalized.
json subspace_to_json(const Subspace& s) { return matrix_to_json(s.basis()); }

Subspace subspace_from_json(Field f, const json& v, size_t ambient, const std::string& path) {
  if (!v.is_array()) schema_fail(path, "expected an array of basis rows");
  return Subspace::row_space(matrix_from_json(f, v, v.size(), ambient, path));
}

json algebra_to_json(const HomLieAlgebra& a) {
  json o;
  o["dim"] = a.dim();
  o["alpha"] = matrix_to_json(a.alpha());
  json bracket = json::array();
  for (size_t i = 0; i < a.dim(); ++i) {
    json bi = json::array();
    for (size_t j = 0; j < a.dim(); ++j) {
      json bij = json::array();
      for (size_t k = 0; k < a.dim(); ++k) bij.push_back(scalar_to_json(a.c(i, j, k)));
      bi.push_back(std::move(bij));
    }
    bracket.push_back(std::move(bi));
  }
  o["bracket"] = std::move(bracket);
  return o;
}

HomLieAlgebra algebra_from_json(Field f, const json& v, const std::string& path) {
  check_keys(v, {"dim", "alpha", "bracket"}, path);
  size_t n = need_count(need(v, "dim", path), path + ".dim");
  Matrix alpha = matrix_from_json(f, need(v, "alpha", path), n, n, path + ".alpha");
  const json& bracket = need(v, "bracket", path);
  if (!bracket.is_array() || bracket.size() != n)
    schema_fail(path + ".bracket", "expected dim slices");
  std::vector<FieldElement> tensor(n * n * n, FieldElement(f));
  for (size_t i = 0; i < n; ++i) {
    const json& bi = bracket[i];
    std::string ipath = path + ".bracket[" + std::to_string(i) + "]";
    if (!bi.is_array() || bi.size() != n) schema_fail(ipath, "expected dim rows");
    for (size_t j = 0; j < n; ++j) {
      const json& bij = bi[j];
      std::string jpath = ipath + "[" + std::to_string(j) + "]";
      if (!bij.is_array() || bij.size() != n) schema_fail(jpath, "expected dim coefficients");
      for (size_t k = 0; k < n; ++k)
        tensor[(i * n + j) * n + k] =
            scalar_from_json(f, bij[k], jpath + "[" + std::to_string(k) + "]");
    }
  }
  return HomLieAlgebra(f, n, std::move(tensor), std::move(alpha));
}

json action_to_json(const HomAction& a) {
  json o = json::array();
  for (size_t i = 0; i < a.actor().dim(); ++i) {
    json ai = json::array();
    for (size_t j = 0; j < a.acted().dim(); ++j) {
      json aij = json::array();
      for (size_t k = 0; k < a.acted().dim(); ++k) aij.push_back(scalar_to_json(a.a(i, j, k)));
      ai.push_back(std::move(aij));
    }
    o.push_back(std::move(ai));
  }
  return o;
}

HomAction action_from_json(Field f, const json& v, const HomLieAlgebra& actor,
                           const HomLieAlgebra& acted, const std::string& path) {
  const size_t nl = actor.dim(), nm = acted.dim();
  if (!v.is_array() || v.size() != nl) schema_fail(path, "expected one slice per actor basis vector");
  HomAction a = HomAction::zero(actor, acted);
  for (size_t i = 0; i < nl; ++i) {
    const json& ai = v[i];
    std::string ipath = path + "[" + std::to_string(i) + "]";
    if (!ai.is_array() || ai.size() != nm) schema_fail(ipath, "expected dimK rows");
    for (size_t j = 0; j < nm; ++j) {
      const json& aij = ai[j];
      std::string jpath = ipath + "[" + std::to_string(j) + "]";
      if (!aij.is_array() || aij.size() != nm) schema_fail(jpath, "expected dimK coefficients");
      for (size_t k = 0; k < nm; ++k)
        a.set_a(i, j, k, scalar_from_json(f, aij[k], jpath + "[" + std::to_string(k) + "]"));
    }
  }
  return a;
}

json extension_to_json(const RelCentralExt& e) {
  json o;
  o["domain"] = algebra_to_json(e.domain);
  o["codomain"] = algebra_to_json(e.codomain);
  o["sigma"] = matrix_to_json(e.sigma);
  o["action"] = action_to_json(e.action);
  o["target"] = subspace_to_json(e.target);
  return o;
}

RelCentralExt extension_from_json(Field f, const json& v, const std::string& path) {
  check_keys(v, {"domain", "codomain", "sigma", "action", "target"}, path);
  HomLieAlgebra dom = algebra_from_json(f, need(v, "domain", path), path + ".domain");
  HomLieAlgebra cod = algebra_from_json(f, need(v, "codomain", path), path + ".codomain");
  Matrix sigma =
      matrix_from_json(f, need(v, "sigma", path), cod.dim(), dom.dim(), path + ".sigma");
  HomAction act = action_from_json(f, need(v, "action", path), cod, dom, path + ".action");
  Subspace target = subspace_from_json(f, need(v, "target", path), cod.dim(), path + ".target");
  return {std::move(dom), std::move(cod), std::move(sigma), std::move(act), std::move(target)};
}

json factorset_to_json(const FactorSet& fs) {
  json o;
  o["base"] = algebra_to_json(fs.base);
  o["kernel_space"] = algebra_to_json(fs.kernel_space);
  o["support"] = subspace_to_json(fs.support);
  json t = json::array();
  for (size_t i = 0; i < fs.base.dim(); ++i) {
    json ti = json::array();
    for (size_t j = 0; j < fs.base.dim(); ++j) {
      json tij = json::array();
      for (size_t k = 0; k < fs.kernel_space.dim(); ++k) tij.push_back(scalar_to_json(fs.t(i, j, k)));
      ti.push_back(std::move(tij));
    }
    t.push_back(std::move(ti));
  }
  o["tensor"] = std::move(t);
  return o;
}

FactorSet factorset_from_json(Field f, const json& v, const std::string& path) {
  check_keys(v, {"base", "kernel_space", "support", "tensor"}, path);
  HomLieAlgebra base = algebra_from_json(f, need(v, "base", path), path + ".base");
  HomLieAlgebra ks = algebra_from_json(f, need(v, "kernel_space", path), path + ".kernel_space");
  Subspace support =
      subspace_from_json(f, need(v, "support", path), base.dim(), path + ".support");
  const json& t = need(v, "tensor", path);
  const size_t n = base.dim(), k = ks.dim();
  if (!t.is_array() || t.size() != n) schema_fail(path + ".tensor", "expected dimL slices");
  FactorSet fs = zero_factorset(std::move(base), std::move(ks), std::move(support));
  for (size_t i = 0; i < n; ++i) {
    const json& ti = t[i];
    std::string ipath = path + ".tensor[" + std::to_string(i) + "]";
    if (!ti.is_array() || ti.size() != n) schema_fail(ipath, "expected dimL rows");
    for (size_t j = 0; j < n; ++j) {
      const json& tij = ti[j];
      std::string jpath = ipath + "[" + std::to_string(j) + "]";
      if (!tij.is_array() || tij.size() != k) schema_fail(jpath, "expected dimK coefficients");
      for (size_t c = 0; c < k; ++c)
        fs.set_t(i, j, c, scalar_from_json(f, tij[c], jpath + "[" + std::to_string(c) + "]"));
    }
  }
  return fs;
}

json envelope(const std::string& kind, Field f) {
  json o;
  o["format"] = kFormat;
  o["kind"] = kind;
  o["field"] = f.name();
  return o;
}

std::string dump(const json& o) { return o.dump(2) + "\n"; }

}  // namespace

Document parse_document(const std::string& text) {
  json o;
  try {
    o = json::parse(text);
  } catch (const json::exception& e) {
    schema_fail("$", std::string("not valid JSON: ") + e.what());
  }
  if (!o.is_object()) schema_fail("$", "expected an object");
  const json& fmt = need(o, "format", "$");
  if (!fmt.is_string() || fmt.get<std::string>() != kFormat)
    schema_fail("$.format", "expected \"hlx/1\"");
  const json& kindv = need(o, "kind", "$");
  if (!kindv.is_string()) schema_fail("$.kind", "expected a string");
  const json& fieldv = need(o, "field", "$");
  if (!fieldv.is_string()) schema_fail("$.field", "expected a field descriptor string");
  Field f;
  try {
    f = Field::parse(fieldv.get<std::string>());
  } catch (const Error& e) {
    schema_fail("$.field", e.what());
  }

  Document d;
  d.kind = kindv.get<std::string>();
  d.field = f;
  if (d.kind == "algebra") {
    check_keys(o, {"format", "kind", "field", "dim", "alpha", "bracket"}, "$");
    json payload = o;
    payload.erase("format");
    payload.erase("kind");
    payload.erase("field");
    d.algebra = algebra_from_json(f, payload, "$");
  } else if (d.kind == "pair") {
    check_keys(o, {"format", "kind", "field", "algebra", "ideal"}, "$");
    HomLieAlgebra a = algebra_from_json(f, need(o, "algebra", "$"), "$.algebra");
    Subspace ideal = subspace_from_json(f, need(o, "ideal", "$"), a.dim(), "$.ideal");
    d.pair = Pair{std::move(a), std::move(ideal)};
  } else if (d.kind == "extension") {
    check_keys(o, {"format", "kind", "field", "domain", "codomain", "sigma", "action", "target"},
               "$");
    json payload = o;
    payload.erase("format");
    payload.erase("kind");
    payload.erase("field");
    d.extension = extension_from_json(f, payload, "$");
  } else if (d.kind == "factorset") {
    check_keys(o, {"format", "kind", "field", "base", "kernel_space", "support", "tensor"}, "$");
    json payload = o;
    payload.erase("format");
    payload.erase("kind");
    payload.erase("field");
    d.factorset = factorset_from_json(f, payload, "$");
  } else if (d.kind == "witness" || d.kind == "morphism") {
    check_keys(o, {"format", "kind", "field", "source", "dest", "gamma", "beta_prime", "beta"},
               "$");
    RelCentralExt src = extension_from_json(f, need(o, "source", "$"), "$.source");
    RelCentralExt dst = extension_from_json(f, need(o, "dest", "$"), "$.dest");
    Matrix gamma = matrix_from_json(f, need(o, "gamma", "$"), dst.codomain.dim(),
                                    src.codomain.dim(), "$.gamma");
    if (d.kind == "witness") {
      if (o.contains("beta")) schema_fail("$.beta", "unknown key");
      size_t c1 = l_commutator(src).dim(), c2 = l_commutator(dst).dim();
      Matrix bp = matrix_from_json(f, need(o, "beta_prime", "$"), c2, c1, "$.beta_prime");
      d.witness = IsoclinismWitness{std::move(src), std::move(dst), std::move(gamma), std::move(bp)};
    } else {
      if (o.contains("beta_prime")) schema_fail("$.beta_prime", "unknown key");
      Matrix beta = matrix_from_json(f, need(o, "beta", "$"), dst.domain.dim(), src.domain.dim(),
                                     "$.beta");
      d.morphism = ExtMorphism{std::move(src), std::move(dst), std::move(gamma), std::move(beta)};
    }
  } else if (d.kind == "map") {
    check_keys(o, {"format", "kind", "field", "rows", "cols", "matrix"}, "$");
    size_t rows = need_count(need(o, "rows", "$"), "$.rows");
    size_t cols = need_count(need(o, "cols", "$"), "$.cols");
    d.map = matrix_from_json(f, need(o, "matrix", "$"), rows, cols, "$.matrix");
  } else {
    schema_fail("$.kind", "unknown kind '" + d.kind + "'");
  }
  return d;
}

std::string emit_algebra(const HomLieAlgebra& a) {
  json o = envelope("algebra", a.field());
  json payload = algebra_to_json(a);
  o.update(payload);
  return dump(o);
}

std::string emit_pair(const Pair& p) {
  json o = envelope("pair", p.ambient.field());
  o["algebra"] = algebra_to_json(p.ambient);
  o["ideal"] = subspace_to_json(p.ideal);
  return dump(o);
}

std::string emit_extension(const RelCentralExt& e) {
  json o = envelope("extension", e.domain.field());
  o.update(extension_to_json(e));
  return dump(o);
}

std::string emit_factorset(const FactorSet& f) {
  json o = envelope("factorset", f.base.field());
  o.update(factorset_to_json(f));
  return dump(o);
}

std::string emit_witness(const IsoclinismWitness& w) {
  json o = envelope("witness", w.source.domain.field());
  o["source"] = extension_to_json(w.source);
  o["dest"] = extension_to_json(w.dest);
  o["gamma"] = matrix_to_json(w.gamma);
  o["beta_prime"] = matrix_to_json(w.beta_prime);
  return dump(o);
}

std::string emit_morphism(const ExtMorphism& m) {
  json o = envelope("morphism", m.source.domain.field());
  o["source"] = extension_to_json(m.source);
  o["dest"] = extension_to_json(m.dest);
  o["gamma"] = matrix_to_json(m.gamma);
  o["beta"] = matrix_to_json(m.beta);
  return dump(o);
}

std::string emit_map(Field f, const Matrix& m) {
  json o = envelope("map", f);
  o["rows"] = m.rows();
  o["cols"] = m.cols();
  o["matrix"] = matrix_to_json(m);
  return dump(o);
}

std::string emit_report(const SuiteReport& r) {
  json o = envelope("report", rationals());
  o["seed"] = r.seed;
  o["count"] = r.count;
  json claims = json::array();
  for (const auto& c : r.claims) {
    json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["fail"] = c.fail;
    cj["skipped"] = c.skipped;
    cj["notes"] = c.notes;
    claims.push_back(std::move(cj));
  }
  o["claims"] = std::move(claims);
  o["findings"] = r.findings;
  o["twist_obstructions"] = r.twist_obstructions;
  o["hard_failures"] = r.hard_failures();
  return dump(o);
}

std::string emit_validation(const ValidationReport& r) {
  json o;
  o["ok"] = r.ok();
  json checks = json::array();
  for (const auto& c : r.checks) {
    json cj;
    cj["name"] = c.name;
    cj["ok"] = c.ok;
    cj["witness"] = c.witness;
    checks.push_back(std::move(cj));
  }
  o["checks"] = std::move(checks);
  return dump(o);
}

std::string emit_invariants(const ExtInvariants& inv) {
  json o;
  o["dim_l"] = inv.dim_l;
  o["dim_target"] = inv.dim_target;
  o["dim_commutator"] = inv.dim_commutator;
  o["dim_l_center"] = inv.dim_l_center;
  o["dim_kernel"] = inv.dim_kernel;
  o["dim_kernel_in_commutator"] = inv.dim_kernel_in_commutator;
  o["dim_center_l"] = inv.dim_center_l;
  o["dim_derived_l"] = inv.dim_derived_l;
  return dump(o);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), Errc::SchemaError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), Errc::SchemaError, "cannot write '" + path + "'");
  out << text;
}

}  // namespace hlx
