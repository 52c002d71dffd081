// g3trr: exact reconstruction and verification of the genus-3 topological
// recursion relation for Gromov-Witten invariants of the point and CP1,
// with the companion stable-graph and r-spin checks.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "g3trr/report.hpp"

namespace {

using namespace g3trr;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitVerifyFailed = 2;

Insertion parse_insertion_token(const std::string& token) {
  auto sep = token.find_first_of(",:");
  try {
    if (sep == std::string::npos) return {std::stoi(token), 0};
    return {std::stoi(token.substr(0, sep)), std::stoi(token.substr(sep + 1))};
  } catch (const std::exception&) {
    throw ParseError("bad insertion '" + token + "' (want n or n,a)");
  }
}

std::vector<Insertion> parse_insertion_list(const std::string& text) {
  std::vector<Insertion> out;
  std::string token;
  for (char c : text + ";") {
    if (c == ';' || c == ' ') {
      if (!token.empty()) out.push_back(parse_insertion_token(token));
      token.clear();
    } else {
      token += c;
    }
  }
  return out;
}

Theory parse_theory(const std::string& name) {
  if (name == "point") return Theory::Point;
  if (name == "cp1") return Theory::CP1;
  throw ParseError("unknown theory '" + name + "' (want point or cp1)");
}

// Seed tables honor an explicit override file first, then the directory
// named by G3TRR_SEED_DIR (point_seeds.json / cp1_seeds.json).
SeedTable seeds_for(Theory t, const std::optional<std::string>& file) {
  if (file) return load_seed_table(t, file);
  if (const char* dir = std::getenv("G3TRR_SEED_DIR")) {
    std::string path = std::string(dir) + "/" +
                       (t == Theory::Point ? "point_seeds.json"
                                           : "cp1_seeds.json");
    std::ifstream probe(path);
    if (probe) return load_seed_table(t, path);
  }
  return load_seed_table(t, std::nullopt);
}

struct GlobalOptions {
  bool json_output = false;
  std::optional<std::string> point_seed_file;
  std::optional<std::string> cp1_seed_file;
};

Oracles make_oracles(const GlobalOptions& opts) {
  return Oracles::from_tables(seeds_for(Theory::Point, opts.point_seed_file),
                              seeds_for(Theory::CP1, opts.cp1_seed_file));
}

void emit(const GlobalOptions& opts, const json& doc,
          const std::string& text) {
  if (opts.json_output)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

json error_record(const std::exception& e) {
  std::string kind = "error";
  if (dynamic_cast<const IrreducibleCorrelator*>(&e))
    kind = "irreducible_correlator";
  else if (dynamic_cast<const ParseError*>(&e))
    kind = "parse_error";
  else if (dynamic_cast<const SingularSystem*>(&e))
    kind = "singular_system";
  else if (dynamic_cast<const InconsistentSystem*>(&e))
    kind = "inconsistent_system";
  else if (dynamic_cast<const InvalidKey*>(&e))
    kind = "invalid_key";
  else if (dynamic_cast<const ConflictingSeed*>(&e))
    kind = "conflicting_seed";
  else if (dynamic_cast<const UnstableGraph*>(&e))
    kind = "unstable_graph";
  json out;
  out["error"] = kind;
  out["message"] = e.what();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact genus-3 topological recursion relation engine"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  app.add_flag("--json", opts.json_output, "structured JSON output");
  app.add_option("--point-seeds", opts.point_seed_file,
                 "seed override file for the point theory");
  app.add_option("--cp1-seeds", opts.cp1_seed_file,
                 "seed override file for CP1");

  // corr THEORY GENUS [DEGREE] INSERTIONS...
  auto* corr_cmd = app.add_subcommand(
      "corr", "evaluate one primitive correlator exactly");
  std::string corr_theory;
  std::vector<std::string> corr_args;
  corr_cmd->add_option("theory", corr_theory)->required();
  corr_cmd->add_option("values", corr_args,
                       "genus, degree (cp1 only), then insertions");

  // relation [INDEX] or explicit entry
  auto* rel_cmd =
      app.add_subcommand("relation", "derive one linear relation");
  int rel_index = 0;
  std::string rel_theory, rel_dirs, rel_arg;
  int rel_degree = 0;
  rel_cmd->add_option("index", rel_index,
                      "1-based row of the default manifest");
  rel_cmd->add_option("--theory", rel_theory);
  rel_cmd->add_option("--dirs", rel_dirs, "directions, e.g. '2,0;2,0'");
  rel_cmd->add_option("--arg", rel_arg, "argument insertion, e.g. '1,1'");
  rel_cmd->add_option("--degree", rel_degree, "Novikov degree to extract");

  auto* sys_cmd = app.add_subcommand(
      "system", "assemble and solve the 29-relation linear system");
  std::optional<std::string> sys_manifest;
  sys_cmd->add_option("--manifest", sys_manifest, "manifest file");

  auto* verify_cmd = app.add_subcommand(
      "verify", "verify the solved identity on derivative sweeps");
  int verify_max_derivs = -1;
  verify_cmd->add_option("--max-derivatives", verify_max_derivs,
                         "override sweep derivative bound");

  auto* rspin_cmd =
      app.add_subcommand("rspin", "admissible r-spin correlators");
  int spin_r = 2, spin_genus = 3, spin_points = 1;
  rspin_cmd->add_option("--r", spin_r)->required();
  rspin_cmd->add_option("--genus", spin_genus);
  rspin_cmd->add_option("--points", spin_points);

  auto* graphs_cmd = app.add_subcommand(
      "graphs", "automorphism orders and coefficient translation");
  std::optional<std::string> graphs_file;
  std::optional<std::string> pairing_file;
  graphs_cmd->add_option("file", graphs_file, "graph relation file");
  graphs_cmd->add_option("--pairing", pairing_file,
                         "explicit graph-to-unknown bijection file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (corr_cmd->parsed()) {
      Theory theory = parse_theory(corr_theory);
      size_t fixed = theory == Theory::CP1 ? 2 : 1;
      if (corr_args.size() < fixed)
        throw ParseError("corr: need genus (and degree for cp1)");
      int genus = std::stoi(corr_args[0]);
      int degree = theory == Theory::CP1 ? std::stoi(corr_args[1]) : 0;
      std::vector<Insertion> ins;
      for (size_t i = fixed; i < corr_args.size(); ++i)
        ins.push_back(parse_insertion_token(corr_args[i]));
      Oracles oracles = make_oracles(opts);
      CorrelatorKey key(theory, genus, std::move(ins), degree);
      Rational value = oracles.get(theory).evaluate(key);
      json doc;
      doc["key"] = key.str();
      doc["value"] = value.str();
      emit(opts, doc, value.str() + "\n");
      return kExitOk;
    }

    if (rel_cmd->parsed()) {
      ManifestEntry entry;
      if (rel_index > 0) {
        auto manifest = default_manifest();
        if (rel_index > static_cast<int>(manifest.size()))
          throw ParseError("relation: index out of range");
        entry = manifest[rel_index - 1];
      } else {
        if (rel_theory.empty() || rel_arg.empty())
          throw ParseError("relation: give an index or --theory/--arg");
        entry.theory = parse_theory(rel_theory);
        entry.directions = parse_insertion_list(rel_dirs);
        entry.argument = parse_insertion_token(rel_arg);
        entry.q_degree = rel_degree;
      }
      Oracles oracles = make_oracles(opts);
      Relation rel = derive_relation(entry, oracles);
      emit(opts, relation_json(rel), relation_text(rel));
      return kExitOk;
    }

    if (sys_cmd->parsed()) {
      Oracles oracles = make_oracles(opts);
      auto manifest =
          sys_manifest ? load_manifest(*sys_manifest) : default_manifest();
      LinearSystem sys = assemble_system(manifest, oracles);
      auto solved = solve_coefficients(sys);
      emit(opts, system_json(sys, solved), system_text(solved));
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      Oracles oracles = make_oracles(opts);
      auto coeffs = solve_default_coefficients(oracles);
      VerifyReport manifest_report =
          verify_manifest(default_manifest(), coeffs, oracles);
      SweepSpec point_sweep = default_point_sweep();
      SweepSpec cp1_sweep = default_cp1_sweep();
      if (verify_max_derivs >= 0) {
        point_sweep.max_derivatives = verify_max_derivs;
        cp1_sweep.max_derivatives = verify_max_derivs;
      }
      VerifyReport point_report =
          verify_identity(Theory::Point, point_sweep, coeffs, oracles);
      VerifyReport cp1_report =
          verify_identity(Theory::CP1, cp1_sweep, coeffs, oracles);

      bool failed = manifest_report.failures || point_report.failures ||
                    cp1_report.failures;
      json doc;
      doc["manifest"] = verify_json(manifest_report);
      doc["point_sweep"] = verify_json(point_report);
      doc["cp1_sweep"] = verify_json(cp1_report);
      doc["result"] = failed ? "FAIL" : "PASS";
      std::string text = verify_text("manifest", manifest_report) +
                         verify_text("point sweep", point_report) +
                         verify_text("cp1 sweep", cp1_report) +
                         std::string("result: ") +
                         (failed ? "FAIL" : "PASS") + "\n";
      emit(opts, doc, text);
      return failed ? kExitVerifyFailed : kExitOk;
    }

    if (rspin_cmd->parsed()) {
      SpinSpec spec(spin_r);
      emit(opts, rspin_json(spec, spin_genus, spin_points),
           rspin_text(spec, spin_genus, spin_points));
      return kExitOk;
    }

    if (graphs_cmd->parsed()) {
      std::vector<GraphRelationEntry> relation =
          graphs_file ? load_graph_relation(*graphs_file)
                      : builtin_graph_relation();
      std::optional<std::vector<int>> pairing;
      if (pairing_file)
        pairing = load_graph_pairing(*pairing_file);
      else if (!graphs_file)
        pairing = builtin_graph_pairing();
      Oracles oracles = make_oracles(opts);
      auto coeffs = solve_default_coefficients(oracles);
      TranslationReport report =
          translate_and_match(relation, coeffs, pairing);
      emit(opts, graphs_json(relation, report),
           graphs_text(relation, report));
      bool ok = report.multiset_ok &&
                (!report.used_pairing || report.pairing_ok);
      return ok ? kExitOk : kExitVerifyFailed;
    }
  } catch (const std::exception& e) {
    std::cerr << error_record(e).dump() << "\n";
    return kExitError;
  }
  return kExitError;
}
