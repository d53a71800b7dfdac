#include <CLI11.hpp>
#include <iostream>

#include "hlx/catalog.hpp"
#include "hlx/serialize.hpp"

using namespace hlx;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

void print_validation(const ValidationReport& r, bool as_json) {
  if (as_json) {
    std::cout << emit_validation(r);
    return;
  }
  for (const auto& c : r.checks)
    std::cout << (c.ok ? "pass  " : "FAIL  ") << c.name
              << (c.witness.empty() ? "" : "  " + c.witness) << "\n";
}

Document load(const std::string& path) { return parse_document(read_file(path)); }

RelCentralExt load_extension(const std::string& path) {
  Document d = load(path);
  require(d.extension.has_value(), Errc::SchemaError,
          "'" + path + "' does not hold an extension document");
  return *d.extension;
}

SearchBudget make_budget(const std::string& mode, uint64_t budget, Field field) {
  SearchBudget b;
  b.max_candidates = budget;
  if (mode == "exhaustive") {
    b.mode = SearchBudget::Mode::exhaustive;
  } else if (mode == "heuristic") {
    b.mode = SearchBudget::Mode::heuristic;
  } else if (mode == "verify") {
    b.mode = SearchBudget::Mode::verify;
  } else {  // auto
    b.mode = field.is_rational() ? SearchBudget::Mode::heuristic : SearchBudget::Mode::exhaustive;
  }
  return b;
}

int exit_for(const Error& e) {
  switch (e.code()) {
    case Errc::SchemaError:
    case Errc::InvalidField:
      return kExitUsage;
    default:
      return kExitNo;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computer algebra for relative central extensions of Hom-Lie algebra pairs"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable JSON result on stdout");

  std::string v_file;
  CLI::App* cmd_validate = app.add_subcommand("validate", "validate a document");
  cmd_validate->add_option("file", v_file)->required();

  std::string i_file;
  CLI::App* cmd_inv = app.add_subcommand("invariants", "print the search filter dimensions");
  cmd_inv->add_option("file", i_file)->required();

  std::string sr_in, sr_out;
  CLI::App* cmd_sr = app.add_subcommand("stem-reduce", "quotient to a stem extension");
  cmd_sr->add_option("ext", sr_in)->required();
  cmd_sr->add_option("-o,--output", sr_out)->required();

  CLI::App* cmd_fs = app.add_subcommand("factorset", "factor set operations");
  cmd_fs->require_subcommand(1);
  std::string fx_in, fx_out;
  CLI::App* cmd_fx = cmd_fs->add_subcommand("extract", "factor set of an extension");
  cmd_fx->add_option("ext", fx_in)->required();
  cmd_fx->add_option("-o,--output", fx_out)->required();
  std::string fb_pair, fb_fs, fb_out;
  CLI::App* cmd_fb = cmd_fs->add_subcommand("build", "extension from a factor set");
  cmd_fb->add_option("pair", fb_pair)->required();
  cmd_fb->add_option("factorset", fb_fs)->required();
  cmd_fb->add_option("-o,--output", fb_out)->required();

  std::string ic_e1, ic_e2, ic_mode = "auto", ic_witness, ic_out;
  uint64_t ic_budget = 10000000;
  CLI::App* cmd_ic = app.add_subcommand("isoclinic", "decide or verify isoclinism");
  cmd_ic->add_option("e1", ic_e1)->required();
  cmd_ic->add_option("e2", ic_e2)->required();
  cmd_ic->add_option("--mode", ic_mode)
      ->check(CLI::IsMember({"auto", "verify", "exhaustive", "heuristic"}));
  cmd_ic->add_option("--witness", ic_witness);
  cmd_ic->add_option("--budget", ic_budget);
  cmd_ic->add_option("-o,--output", ic_out);

  std::string im_e1, im_e2, im_mode = "auto", im_witness, im_out;
  uint64_t im_budget = 10000000;
  CLI::App* cmd_im = app.add_subcommand("isomorphic", "decide or verify isomorphism");
  cmd_im->add_option("e1", im_e1)->required();
  cmd_im->add_option("e2", im_e2)->required();
  cmd_im->add_option("--mode", im_mode)
      ->check(CLI::IsMember({"auto", "verify", "exhaustive", "heuristic"}));
  cmd_im->add_option("--witness", im_witness);
  cmd_im->add_option("--budget", im_budget);
  cmd_im->add_option("-o,--output", im_out);

  std::string pb_e1, pb_e2, pb_gamma, pb_out;
  CLI::App* cmd_pb = app.add_subcommand("pullback", "joint extension along gamma");
  cmd_pb->add_option("e1", pb_e1)->required();
  cmd_pb->add_option("e2", pb_e2)->required();
  cmd_pb->add_option("--gamma", pb_gamma)->required();
  cmd_pb->add_option("-o,--output", pb_out)->required();

  std::string dc_in, dc_out;
  bool dc_derived = false;
  CLI::App* cmd_dc = app.add_subcommand("decompose", "split as stem x abelian");
  cmd_dc->add_option("ext", dc_in)->required();
  cmd_dc->add_flag("--derived-split", dc_derived,
                   "split the kernel along (M*)^2 instead of [M*,L]");
  cmd_dc->add_option("-o,--output", dc_out)->required();

  uint64_t vs_seed = 0;
  size_t vs_count = 10;
  CLI::App* cmd_vs = app.add_subcommand("verify-suite", "instance-check the constructive claims");
  cmd_vs->add_option("--seed", vs_seed);
  cmd_vs->add_option("--count", vs_count);

  uint64_t g_seed = 0;
  std::string g_field = "Q", g_out;
  CLI::App* cmd_gen = app.add_subcommand("generate", "emit a generated extension");
  cmd_gen->add_option("--seed", g_seed);
  cmd_gen->add_option("--field", g_field);
  cmd_gen->add_option("-o,--output", g_out)->required();

  std::string cat_name, cat_out;
  bool cat_list = false;
  CLI::App* cmd_cat = app.add_subcommand("catalog", "emit a named catalog algebra");
  cmd_cat->add_option("name", cat_name);
  cmd_cat->add_flag("--list", cat_list);
  cmd_cat->add_option("-o,--output", cat_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_validate->parsed()) {
      Document d = load(v_file);
      ValidationReport r;
      if (d.algebra) {
        r = validate(*d.algebra);
      } else if (d.pair) {
        r = validate(d.pair->ambient);
        YesNo ideal = is_ideal(d.pair->ambient, d.pair->ideal);
        r.checks.push_back({"ideal", ideal.yes, ideal.witness});
      } else if (d.extension) {
        r = rce_validate(*d.extension);
      } else if (d.factorset) {
        r = factorset_validate(*d.factorset);
      } else if (d.witness) {
        YesNo ok = witness_validate(*d.witness);
        r.checks.push_back({"witness", ok.yes, ok.witness});
      } else if (d.morphism) {
        MorphismCheck mc = morphism_validate(*d.morphism);
        r.checks.push_back({"morphism", mc.yes, mc.witness});
      } else {
        fail(Errc::SchemaError, "document kind cannot be validated");
      }
      print_validation(r, as_json);
      return r.ok() ? kExitYes : kExitNo;
    }

    if (cmd_inv->parsed()) {
      Document d = load(i_file);
      if (d.extension) {
        ExtInvariants inv = ext_invariants(*d.extension);
        if (as_json) {
          std::cout << emit_invariants(inv);
        } else {
          std::cout << "dim_l " << inv.dim_l << "\ndim_target " << inv.dim_target
                    << "\ndim_commutator " << inv.dim_commutator << "\ndim_l_center "
                    << inv.dim_l_center << "\ndim_kernel " << inv.dim_kernel
                    << "\ndim_kernel_in_commutator " << inv.dim_kernel_in_commutator
                    << "\ndim_center_l " << inv.dim_center_l << "\ndim_derived_l "
                    << inv.dim_derived_l << "\n";
        }
        return kExitYes;
      }
      if (d.algebra) {
        std::cout << "dim " << d.algebra->dim() << "\ndim_center " << center(*d.algebra).dim()
                  << "\ndim_derived " << derived(*d.algebra).dim() << "\n";
        return kExitYes;
      }
      if (d.pair) {
        std::cout << "dim_l " << d.pair->ambient.dim() << "\ndim_ideal " << d.pair->ideal.dim()
                  << "\ndim_pair_center " << pair_center(*d.pair).dim()
                  << "\ndim_pair_commutator " << pair_commutator(*d.pair).dim() << "\n";
        return kExitYes;
      }
      fail(Errc::SchemaError, "invariants needs an algebra, pair, or extension document");
    }

    if (cmd_sr->parsed()) {
      RelCentralExt e = load_extension(sr_in);
      StemReduction red = stem_reduce(e);
      write_file(sr_out, emit_extension(red.reduced));
      std::cerr << "removed abelian directions: " << red.removed_space.dim()
                << (red.twist_obstructed ? " (twist obstructed, result may not be stem)" : "")
                << "\n";
      if (as_json)
        std::cout << "{\n  \"removed\": " << red.removed_space.dim()
                  << ",\n  \"stem\": " << (is_stem(red.reduced) ? "true" : "false")
                  << ",\n  \"twist_obstructed\": " << (red.twist_obstructed ? "true" : "false")
                  << "\n}\n";
      return kExitYes;
    }

    if (cmd_fx->parsed()) {
      RelCentralExt e = load_extension(fx_in);
      FactorSetExtraction ex = factorset_from_extension(e);
      write_file(fx_out, emit_factorset(ex.fs));
      return kExitYes;
    }

    if (cmd_fb->parsed()) {
      Document dp = load(fb_pair);
      require(dp.pair.has_value(), Errc::SchemaError, "'" + fb_pair + "' is not a pair document");
      Document df = load(fb_fs);
      require(df.factorset.has_value(), Errc::SchemaError,
              "'" + fb_fs + "' is not a factorset document");
      RelCentralExt e = extension_from_factorset(*df.factorset, *dp.pair);
      write_file(fb_out, emit_extension(e));
      return kExitYes;
    }

    if (cmd_ic->parsed()) {
      RelCentralExt e1 = load_extension(ic_e1), e2 = load_extension(ic_e2);
      if (!ic_witness.empty() || ic_mode == "verify") {
        require(!ic_witness.empty(), Errc::SchemaError, "verify mode needs --witness");
        Document dw = load(ic_witness);
        require(dw.witness.has_value(), Errc::SchemaError, "--witness must be a witness document");
        YesNo ok = witness_validate(*dw.witness);
        if (!ok.yes) std::cout << ok.witness << "\n";
        return ok.yes ? kExitYes : kExitNo;
      }
      SearchBudget b = make_budget(ic_mode, ic_budget, e1.domain.field());
      IsoclinismSearch res = search_isoclinism(e1, e2, b);
      if (res.status == SearchStatus::found) {
        std::string doc = emit_witness(*res.witness);
        if (!ic_out.empty()) write_file(ic_out, doc);
        std::cout << doc;
        return kExitYes;
      }
      if (res.status == SearchStatus::not_found) {
        ExtInvariants a = ext_invariants(e1), bb = ext_invariants(e2);
        std::cout << (isoclinism_filter_match(a, bb)
                          ? "no isoclinism: enumeration exhausted\n"
                          : "no isoclinism: invariant dimensions differ\n");
        return kExitNo;
      }
      std::cout << "inconclusive: candidate budget exhausted\n";
      return kExitInconclusive;
    }

    if (cmd_im->parsed()) {
      RelCentralExt e1 = load_extension(im_e1), e2 = load_extension(im_e2);
      if (!im_witness.empty() || im_mode == "verify") {
        require(!im_witness.empty(), Errc::SchemaError, "verify mode needs --witness");
        Document dw = load(im_witness);
        require(dw.morphism.has_value(), Errc::SchemaError,
                "--witness must be a morphism document");
        MorphismCheck mc = morphism_validate(*dw.morphism);
        bool ok = mc.yes && mc.cls == MorphClass::iso;
        if (!ok) std::cout << (mc.yes ? "not bijective" : mc.witness) << "\n";
        return ok ? kExitYes : kExitNo;
      }
      SearchBudget b = make_budget(im_mode, im_budget, e1.domain.field());
      IsomorphismSearch res = search_isomorphism(e1, e2, b);
      if (res.status == SearchStatus::found) {
        std::string doc = emit_morphism(*res.morphism);
        if (!im_out.empty()) write_file(im_out, doc);
        std::cout << doc;
        return kExitYes;
      }
      if (res.status == SearchStatus::not_found) {
        std::cout << "no isomorphism\n";
        return kExitNo;
      }
      std::cout << "inconclusive: candidate budget exhausted\n";
      return kExitInconclusive;
    }

    if (cmd_pb->parsed()) {
      RelCentralExt e1 = load_extension(pb_e1), e2 = load_extension(pb_e2);
      Document dg = load(pb_gamma);
      require(dg.map.has_value() || dg.witness.has_value(), Errc::SchemaError,
              "--gamma must be a map or witness document");
      Matrix gamma = dg.map ? *dg.map : dg.witness->gamma;
      PullbackExt pb = pullback(e1, e2, gamma);
      write_file(pb_out, emit_extension(pb.ext));
      std::cerr << "joint dimension: " << pb.ext.domain.dim() << "\n";
      return kExitYes;
    }

    if (cmd_dc->parsed()) {
      RelCentralExt e = load_extension(dc_in);
      Decomposition dec = decompose_family(e, dc_derived);
      write_file(dc_out + "/stem.json", emit_extension(dec.stem));
      write_file(dc_out + "/abelian.json", emit_algebra(dec.abelian_part));
      write_file(dc_out + "/product.json", emit_extension(dec.product));
      write_file(dc_out + "/iso.json", emit_morphism(dec.iso));
      std::cerr << "stem dim " << dec.stem.domain.dim() << ", abelian dim "
                << dec.abelian_part.dim() << "\n";
      return kExitYes;
    }

    if (cmd_vs->parsed()) {
      SuiteReport r = verify_suite(vs_seed, vs_count);
      std::cout << emit_report(r);
      return r.hard_failures() == 0 ? kExitYes : kExitNo;
    }

    if (cmd_gen->parsed()) {
      Field f = Field::parse(g_field);
      RelCentralExt e = generate_extension(g_seed, GeneratorBounds{}, f);
      write_file(g_out, emit_extension(e));
      return kExitYes;
    }

    if (cmd_cat->parsed()) {
      if (cat_list) {
        for (const auto& entry : algebra_catalog()) std::cout << entry.name << "\n";
        return kExitYes;
      }
      require(!cat_name.empty(), Errc::SchemaError, "catalog needs a name or --list");
      for (const auto& entry : algebra_catalog()) {
        if (entry.name == cat_name) {
          std::string doc = emit_algebra(entry.algebra);
          if (!cat_out.empty())
            write_file(cat_out, doc);
          else
            std::cout << doc;
          return kExitYes;
        }
      }
      fail(Errc::SchemaError, "no catalog algebra named '" + cat_name + "'");
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
