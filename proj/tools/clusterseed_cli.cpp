// Command-line front end: explore, quotient, verify, serve.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "clusterseed/errors.hpp"
#include "clusterseed/explore.hpp"
#include "clusterseed/fingerprint.hpp"
#include "clusterseed/io.hpp"
#include "clusterseed/quotient.hpp"
#include "clusterseed/service.hpp"
#include "clusterseed/verify.hpp"

using namespace clusterseed;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotClosed = 3;

std::size_t default_budget() {
  if (const char* env = std::getenv("CLUSTERSEED_BUDGET")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid CLUSTERSEED_BUDGET '" << env << "'\n";
  }
  return kDefaultBudget;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
}

void emit(const Json& j, const std::string& path) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
  } else {
    write_text(path, text);
  }
}

ExplorationReport run_level(const IceQuiver& q, const std::string& level, std::size_t budget) {
  if (level == "seed") return explore_seeds(LabelledSeed::initial(q), budget);
  if (level == "fingerprint") return explore_fingerprints(SeedFingerprint::initial(q), budget);
  if (level == "quiver") return explore_quivers(q, budget);
  throw InvalidArgument("unknown level '" + level + "' (expected seed, fingerprint or quiver)");
}

void print_summary(const SuiteReport& r) {
  for (const auto& c : r.results) {
    std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.name << ": expected " << c.expected << ", observed "
              << c.observed;
    if (!c.note.empty()) std::cout << " (" << c.note << ")";
    std::cout << "\n";
  }
  std::cout << r.suite << ": " << r.results.size() - r.failures() << "/" << r.results.size() << " passed\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Labelled seeds, mutation classes and their automorphism groups"};
  app.require_subcommand(1);
  const std::size_t budget_default = default_budget();

  std::string input, level = "seed", dot_path, annotate = "none", out_path, relation = "same-quiver";
  std::size_t budget = budget_default;
  bool summary_only = false;

  auto* explore = app.add_subcommand("explore", "Enumerate the mutation class of a preset or quiver JSON file");
  explore->add_option("input", input, "Preset name or quiver JSON file")->required();
  explore->add_option("--budget", budget, "Maximum number of vertices to discover")->capture_default_str();
  explore->add_option("--level", level, "seed, fingerprint or quiver")->capture_default_str();
  explore->add_option("--dot", dot_path, "Write the mutation graph as DOT");
  explore->add_option("--annotate", annotate, "DOT vertex notes: none, quiver or seed")->capture_default_str();
  explore->add_option("--out", out_path, "Write the JSON report here instead of stdout");
  explore->add_flag("--summary", summary_only, "Omit per-vertex quivers and clusters");

  std::string qlevel = "auto";
  auto* quotient = app.add_subcommand("quotient", "Quotient graph and group of a mutation class");
  quotient->add_option("input", input, "Preset name or quiver JSON file")->required();
  quotient->add_option("--relation", relation, "same-quiver, similar or same-stabilizer")->capture_default_str();
  quotient->add_option("--budget", budget, "Exploration budget")->capture_default_str();
  quotient->add_option("--level", qlevel,
                       "auto (seeds when the class closes, else quivers), seed, fingerprint or quiver")
      ->capture_default_str();
  quotient->add_option("--dot", dot_path, "Write the quotient graph as DOT");
  quotient->add_option("--annotate", annotate, "DOT vertex notes: none, quiver or seed")->capture_default_str();
  quotient->add_option("--out", out_path, "Write the JSON report here instead of stdout");

  std::string suite;
  unsigned power_bound = 50, depth = 6;
  std::size_t cases = 1000;
  std::uint64_t rng_seed = 1;
  bool as_json = false;
  auto* verify = app.add_subcommand("verify", "Run a verification suite; exits nonzero on any failure");
  verify->add_option("suite", suite, "lemmas, markov, mainthm or properties")
      ->required()
      ->check(CLI::IsMember({"lemmas", "markov", "mainthm", "properties"}));
  verify->add_option("--power-bound", power_bound, "Largest power N tried for the double-arrow check")
      ->capture_default_str();
  verify->add_option("--depth", depth, "Markov word depth (at most 12)")->capture_default_str();
  verify->add_option("--cases", cases, "Random cases per property")->capture_default_str();
  verify->add_option("--seed", rng_seed, "Random seed for the property suite")->capture_default_str();
  verify->add_option("--budget", budget, "Exploration budget for mainthm")->capture_default_str();
  verify->add_flag("--json", as_json, "Print the report as JSON instead of a summary");

  std::string host = "127.0.0.1";
  int port = 8080;
  std::size_t class_budget = 5000;
  auto* serve_cmd = app.add_subcommand("serve", "Run the session JSON API over HTTP");
  serve_cmd->add_option("--host", host, "Address to bind")->capture_default_str();
  serve_cmd->add_option("--port", port, "Port to listen on")->capture_default_str();
  serve_cmd->add_option("--class-budget", class_budget, "Seed budget behind /classinfo")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*explore) {
      const IceQuiver q = load_quiver(input);
      const ExplorationReport r = run_level(q, level, budget);
      emit(to_json(r, !summary_only), out_path);
      if (!dot_path.empty()) write_text(dot_path, to_dot(r.graph, vertex_notes(r, parse_annotation(annotate))));
      return 0;
    }
    if (*quotient) {
      const RelationKind rel = parse_relation(relation);
      const IceQuiver q = load_quiver(input);
      const DotAnnotation note = parse_annotation(annotate);
      ExplorationReport r;
      if (qlevel == "auto") {
        r = explore_fingerprints(SeedFingerprint::initial(q), budget);
        if (r.closed()) {
          r = explore_seeds(LabelledSeed::initial(q), budget);
        } else if (rel != RelationKind::SameStabilizer) {
          r = explore_quivers(q, budget);
        }
      } else {
        r = run_level(q, qlevel, budget);
      }
      if (!r.closed()) {
        std::cerr << "error: the " << to_string(r.level) << " class did not close within " << budget
                  << " vertices\n";
        return kExitNotClosed;
      }
      const Partition p = partition(r, rel);
      Json j;
      j["relation"] = to_string(rel);
      j["level"] = to_string(r.level);
      j["explored"] = r.size();
      j["classes"] = p.count();
      j["members"] = p.members;
      j["graph"] = to_json(quotient_graph(r, p));
      if (r.level != Level::Quiver) {
        j["group"] = to_json(compute_group(r, rel));
      }
      emit(j, out_path);
      if (!dot_path.empty()) write_text(dot_path, to_dot(quotient_graph(r, p), class_notes(r, p, note)));
      return 0;
    }
    if (*verify) {
      SuiteReport rep;
      if (suite == "lemmas") rep = run_lemma_suite(power_bound);
      if (suite == "markov") rep = check_markov(depth);
      if (suite == "mainthm") rep = run_mainthm_suite(mainthm_presets(), budget);
      if (suite == "properties") {
        rep = run_property_suite(cases, rng_seed);
        for (const char* name : {"A2", "A3-linear", "A2xA1", "A1xA1"}) {
          for (auto& c : check_stabilizer_determines_quiver(name, power_bound).results) rep.results.push_back(c);
        }
      }
      if (as_json) {
        emit(to_json(rep), "");
      } else {
        print_summary(rep);
      }
      return rep.all_passed() ? 0 : kExitFailure;
    }
    if (*serve_cmd) {
      std::cerr << "listening on " << host << ":" << port << "\n";
      if (!serve(host, port, class_budget)) {
        std::cerr << "error: cannot listen on " << host << ":" << port << "\n";
        return kExitFailure;
      }
      return 0;
    }
  } catch (const NotClosed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotClosed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
