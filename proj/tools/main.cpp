// Command-line front end: build groups, run realizability checks and
// refutation searches, reproduce the built-in case catalog, and re-verify
// certificate documents.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fuchs/engine.hpp"
#include "fuchs/errors.hpp"
#include "recipe.hpp"

namespace {

using namespace fuchs;
using cli::BuiltGroup;

constexpr int kExitVerdict = 1;    // checked but not fully realizable / inconclusive
constexpr int kExitUsage = 2;      // bad recipes, files, arguments
constexpr int kExitResource = 3;   // a configured size cap was exceeded

struct OutputTarget {
  std::string path;
  std::ofstream file;
  std::ostream& stream() {
    if (path.empty()) return std::cout;
    if (!file.is_open()) {
      file.open(path);
      if (!file) throw dimension_error("cannot open output file '" + path + "'");
    }
    return file;
  }
};

void print_fingerprint(std::ostream& os, const groups::Fingerprint& fp) {
  os << to_string(fp) << "\n";
}

std::vector<groupring::RingElem> ideal_from_flags(
    const BuiltGroup& bg, const std::string& ideal_recipe,
    const std::string& ideal_file, const std::vector<std::string>& gens) {
  std::vector<groupring::RingElem> out;
  int sources = !ideal_recipe.empty() + !ideal_file.empty() + !gens.empty();
  if (sources != 1)
    throw dimension_error(
        "exactly one of --ideal, --ideal-file, --gen must be given");
  if (!ideal_file.empty()) {
    std::ifstream in(ideal_file);
    if (!in) throw dimension_error("cannot open ideal file '" + ideal_file + "'");
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      out.push_back(groupring::parse_elem(bg.group, line));
    }
    return out;
  }
  if (!gens.empty()) {
    for (const auto& g : gens) out.push_back(groupring::parse_elem(bg.group, g));
    return out;
  }
  // Action-aware recipes; standard-basis masks for the module part.
  auto standard_basis = [&]() {
    std::vector<unsigned> basis;
    int na = bg.action->target->order();
    for (unsigned m = 1; static_cast<int>(m) < na; m <<= 1) basis.push_back(m);
    std::reverse(basis.begin(), basis.end());
    return basis;
  };
  if (ideal_recipe == "elementary")
    return engine::elementary_abelian_ideal(bg.group);
  if (!bg.action)
    throw dimension_error("ideal recipe '" + ideal_recipe +
                          "' needs a group built with sdp:<module-kind>");
  if (ideal_recipe == "sdp_c3")
    return engine::sdp_c3_ideal(bg.group, *bg.action, standard_basis());
  if (ideal_recipe == "sdp_c4")
    return engine::sdp_c4_ideal(bg.group, *bg.action, standard_basis());
  if (ideal_recipe == "c6")
    return engine::c6_ideal(bg.group, *bg.action);
  throw dimension_error("unknown ideal recipe '" + ideal_recipe +
                        "' (elementary|sdp_c3|sdp_c4|c6)");
}

void print_certificate(std::ostream& os, const engine::Certificate& cert,
                       const groups::GroupPtr& g, bool full) {
  os << "verdict: " << to_string(cert.verdict) << "\n";
  os << "group: " << to_string(cert.group_fingerprint) << "\n";
  os << "ideal generators: " << cert.ideal_generators.size()
     << ", quotient dim: " << cert.quotient_dim << "\n";
  os << "embeds: " << (cert.embeds ? "yes" : "no");
  if (cert.collision)
    os << "  (collision: " << g->label(cert.collision->first) << " = "
       << g->label(cert.collision->second) << " mod I)";
  os << "\n";
  os << "units: " << cert.unit_count
     << (cert.units_are_group ? " (exactly the image of the group)"
                              : " (NOT the image of the group)");
  if (cert.interloper)
    os << "  interloper: " << groupring::to_string(*cert.interloper);
  os << "\n";
  os << "End-invariant: " << (cert.invariant ? "yes" : "no") << "\n";
  if (cert.violation) {
    os << "violating endomorphism image table:";
    for (int v : cert.violation->endo.image) os << " " << v;
    os << "\n  sends " << groupring::to_string(cert.violation->generator)
       << " to " << groupring::to_string(cert.violation->image)
       << " (escapes the ideal)\n";
  }
  if (full) {
    os << "unit inverse witnesses:\n";
    for (const auto& [u, v] : cert.unit_inverses)
      os << "  " << groupring::to_string(u) << "  ~  "
         << groupring::to_string(v) << "\n";
  }
}

int count_leaves(const engine::RefutationTree& t, engine::LeafReason r) {
  int n = 0;
  for (const auto& b : t.branches) {
    if (b.leaf && *b.leaf == r) ++n;
    if (b.child) n += count_leaves(*b.child, r);
  }
  return n;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"group-algebra realizability toolkit: decides and certifies "
               "whether an ideal of F2[G] fully realizes a finite group G"};
  app.require_subcommand(1);

  int jobs = 1;
  std::size_t cap_dim = 22;
  int endo_cap = 128;
  bool json_out = false;
  std::string out_path;
  app.add_option("--jobs", jobs, "worker threads");
  app.add_option("--cap-dim", cap_dim, "unit enumeration dimension cap");
  app.add_option("--cap-order", endo_cap, "endomorphism enumeration order cap");
  app.add_flag("--json", json_out, "emit a JSON document (schema: 1)");
  app.add_option("--out", out_path, "write output to a file instead of stdout");

  // group <expr>
  auto* cmd_group = app.add_subcommand("group", "build a group and report on it");
  std::string group_expr;
  bool info = false;
  cmd_group->add_option("expr", group_expr, "group recipe")->required();
  cmd_group->add_flag("--info", info, "print the structural fingerprint");

  // check <expr> --ideal/--ideal-file/--gen
  auto* cmd_check = app.add_subcommand(
      "check", "build an ideal and certify full realizability");
  std::string check_expr, ideal_recipe, ideal_file;
  std::vector<std::string> gen_texts;
  bool full = false;
  cmd_check->add_option("expr", check_expr, "group recipe")->required();
  cmd_check->add_option("--ideal", ideal_recipe,
                        "ideal recipe (elementary|sdp_c3|sdp_c4|c6)");
  cmd_check->add_option("--ideal-file", ideal_file,
                        "file with one generator per line (1+x+y or {0,1,2})");
  cmd_check->add_option("--gen", gen_texts, "inline ideal generator (repeatable)");
  cmd_check->add_flag("--full", full, "also print every unit/inverse witness");

  // refute <expr> --depth k
  auto* cmd_refute = app.add_subcommand(
      "refute", "search for a proof that no ideal fully realizes the group");
  std::string refute_expr;
  int depth = 1;
  unsigned seed = 0;
  std::vector<std::string> seed_texts;
  cmd_refute->add_option("expr", refute_expr, "group recipe")->required();
  cmd_refute->add_option("--depth", depth, "maximum branching depth");
  cmd_refute->add_option("--seed-unit", seed_texts,
                         "seed unit (repeatable; default: all 1+g+h units)");
  cmd_refute->add_option("--seed", seed,
                         "shuffle seed-unit order with this RNG seed (0 = off)");

  // repro <case>|--all
  auto* cmd_repro = app.add_subcommand(
      "repro", "run the built-in case catalog against expected results");
  std::string case_name;
  bool all_cases = false;
  cmd_repro->add_option("case", case_name, "case name");
  cmd_repro->add_flag("--all", all_cases, "run every case");

  // verify <cert.json>
  auto* cmd_verify = app.add_subcommand(
      "verify", "re-check all witnesses of a certificate document");
  std::string cert_path, verify_expr;
  cmd_verify->add_option("file", cert_path, "certificate JSON file")->required();
  cmd_verify->add_option("--group", verify_expr,
                         "group recipe (default: the one stored in the file)");

  // Global options are accepted after the subcommand too.
  for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  OutputTarget target{out_path, {}};
  engine::CheckOptions opts{cap_dim, endo_cap, jobs};

  try {
    if (cmd_group->parsed()) {
      BuiltGroup bg = cli::parse_group_recipe(group_expr);
      std::ostream& os = target.stream();
      if (!out_path.empty()) {
        groups::save_cayley(*bg.group, os);
        if (info) print_fingerprint(std::cout, bg.group->fingerprint());
      } else if (json_out) {
        auto fp = bg.group->fingerprint();
        nlohmann::json doc{{"schema", 1},
                           {"type", "group"},
                           {"recipe", bg.recipe},
                           {"order", fp.order},
                           {"abelian", fp.abelian},
                           {"center_size", fp.center_size},
                           {"exponent", fp.exponent}};
        os << doc.dump(2) << "\n";
      } else {
        print_fingerprint(os, bg.group->fingerprint());
      }
      return 0;
    }

    if (cmd_check->parsed()) {
      BuiltGroup bg = cli::parse_group_recipe(check_expr);
      auto gens = ideal_from_flags(bg, ideal_recipe, ideal_file, gen_texts);
      engine::Certificate cert = engine::check_full(bg.group, std::move(gens), opts);
      std::ostream& os = target.stream();
      if (json_out) {
        nlohmann::json doc = engine::to_json(cert, bg.group);
        doc["group_recipe"] = bg.recipe;
        os << doc.dump(2) << "\n";
      } else {
        print_certificate(os, cert, bg.group, full);
      }
      return cert.verdict == engine::Verdict::FULLY_REALIZES ? 0 : kExitVerdict;
    }

    if (cmd_refute->parsed()) {
      BuiltGroup bg = cli::parse_group_recipe(refute_expr);
      std::vector<groupring::RingElem> seeds;
      if (seed_texts.empty()) {
        seeds = engine::default_refutation_seeds(bg.group);
      } else {
        for (const auto& t : seed_texts)
          seeds.push_back(groupring::parse_elem(bg.group, t));
      }
      if (seed != 0) {
        std::mt19937 rng(seed);
        std::shuffle(seeds.begin(), seeds.end(), rng);
      }
      auto proof = engine::refute_full(bg.group, std::move(seeds), depth, opts);
      std::ostream& os = target.stream();
      if (json_out) {
        nlohmann::json doc{{"schema", 1},
                           {"type", "refutation"},
                           {"group_recipe", bg.recipe},
                           {"depth", depth},
                           {"proof", proof.has_value()}};
        if (proof) doc["tree"] = engine::to_json(*proof, bg.group);
        os << doc.dump(2) << "\n";
      } else if (proof) {
        os << "proof: no ideal fully realizes this group\n"
           << "root unit: " << groupring::to_string(proof->root_unit) << "\n"
           << "branches: " << proof->branches.size() << "  (embed failures: "
           << count_leaves(*proof, engine::LeafReason::EMBED_FAIL)
           << ", invariance failures: "
           << count_leaves(*proof, engine::LeafReason::INVARIANCE_FAIL) << ")\n";
      } else {
        os << "inconclusive at depth " << depth << "\n";
      }
      return proof ? 0 : kExitVerdict;
    }

    if (cmd_repro->parsed()) {
      std::vector<std::string> names;
      if (all_cases)
        names = engine::catalog_names();
      else if (!case_name.empty())
        names.push_back(case_name);
      else
        throw dimension_error("repro: give a case name or --all");
      std::ostream& os = target.stream();
      bool ok = true;
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& n : names) {
        auto t0 = std::chrono::steady_clock::now();
        engine::CaseResult r = engine::run_catalog_case(n, opts);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        ok = ok && r.pass;
        if (json_out) {
          rows.push_back({{"case", r.name},
                          {"pass", r.pass},
                          {"expected", r.expected},
                          {"observed", r.observed},
                          {"ms", ms}});
        } else {
          os << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  (" << ms
             << " ms)\n      expected: " << r.expected
             << "\n      observed: " << r.observed << "\n";
        }
      }
      if (json_out)
        os << nlohmann::json{{"schema", 1}, {"type", "repro"}, {"cases", rows}}
                  .dump(2)
           << "\n";
      else
        os << (ok ? "all cases PASS" : "some cases FAILED") << "\n";
      return ok ? 0 : kExitVerdict;
    }

    if (cmd_verify->parsed()) {
      std::ifstream in(cert_path);
      if (!in) throw dimension_error("cannot open '" + cert_path + "'");
      nlohmann::json doc = nlohmann::json::parse(in);
      std::string recipe = verify_expr.empty()
                               ? doc.value("group_recipe", std::string{})
                               : verify_expr;
      if (recipe.empty())
        throw dimension_error(
            "certificate has no group_recipe; pass --group <expr>");
      BuiltGroup bg = cli::parse_group_recipe(recipe);
      std::string why;
      bool ok = engine::verify_certificate_json(doc, bg.group, &why);
      std::ostream& os = target.stream();
      os << (ok ? "certificate verified" : "certificate INVALID: " + why) << "\n";
      return ok ? 0 : kExitVerdict;
    }
  } catch (const resource_limit_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const cli::recipe_error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
