// Command-line front end: exact graph parameters (alpha, omega, delta, chi,
// cm, eta), isomorph-free enumeration of the alpha <= 2 universe, and the
// conjecture-verification campaign over that universe.
//
// Exit codes: 0 clean, 1 a verified predicate failed, 2 usage or input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "seagull/enumerate.hpp"
#include "seagull/graph6.hpp"
#include "seagull/invariants.hpp"
#include "seagull/oracles.hpp"
#include "seagull/verify.hpp"

namespace {

using namespace seagull;

// A positional source is a graph6 literal or a file of graph6 lines; with
// no source, graphs are read from stdin (one per line).
std::vector<Graph> load_graphs(const std::string& source) {
  std::vector<Graph> out;
  auto take = [&](std::size_t, Graph g) { out.push_back(std::move(g)); };
  if (source.empty()) {
    read_graph6_stream(std::cin, take);
  } else if (std::filesystem::exists(source)) {
    std::ifstream in(source);
    if (!in) throw std::runtime_error("cannot open " + source);
    read_graph6_stream(in, take);
  } else {
    out.push_back(parse_graph6(source));
  }
  return out;
}

std::string collection_json(const ConnectedCollection& c) {
  nlohmann::json arr = nlohmann::json::array();
  for (const VertexSet& part : c.parts) arr.push_back(part.to_vector());
  return arr.dump();
}

std::string report_json(const std::string& g6, const InvariantReport& r) {
  nlohmann::ordered_json j;
  j["g6"] = g6;
  j["n"] = r.n;
  j["alpha"] = r.alpha;
  j["omega"] = r.omega;
  j["delta"] = r.delta;
  j["chi"] = r.chi ? nlohmann::ordered_json(*r.chi) : nlohmann::ordered_json("skipped");
  j["cm"] = r.cm;
  j["eta"] = r.eta ? nlohmann::ordered_json(*r.eta) : nlohmann::ordered_json("skipped");
  return j.dump();
}

int run(int argc, char** argv) {
  CLI::App app{"seagull: exact small-graph solvers for clique minors, connected matchings and the alpha=2 universe"};
  app.require_subcommand(1);

  std::string source;
  bool witness = false;
  int eta_limit = 10;

  auto* cmd_invariants = app.add_subcommand("invariants", "print the full invariant report as JSON");
  cmd_invariants->add_option("source", source, "graph6 string or file (stdin when absent)");
  cmd_invariants->add_option("--skip-eta-above", eta_limit, "skip the eta search above this order")
      ->capture_default_str();

  auto* cmd_cm = app.add_subcommand("cm", "maximum connected matching size");
  cmd_cm->add_option("source", source, "graph6 string or file (stdin when absent)");
  cmd_cm->add_flag("--witness", witness, "also print the witness collection");

  auto* cmd_eta = app.add_subcommand("eta", "Hadwiger number");
  cmd_eta->add_option("source", source, "graph6 string or file (stdin when absent)");
  cmd_eta->add_flag("--witness", witness, "also print the branch sets");

  auto* cmd_chi = app.add_subcommand("chi", "chromatic number (alpha <= 2 fast path)");
  cmd_chi->add_option("source", source, "graph6 string or file (stdin when absent)");

  int enum_n = 0;
  bool strict_alpha2 = false;
  auto* cmd_enumerate = app.add_subcommand("enumerate", "emit one graph6 line per isomorphism class with alpha <= 2");
  cmd_enumerate->add_option("--n", enum_n, "number of vertices")->required()->check(CLI::Range(1, kEnumerateMaxVertices));
  cmd_enumerate->add_flag("--strict-alpha2", strict_alpha2, "drop the alpha = 1 class (the complete graph)");

  int extremal_t = 0;
  auto* cmd_extremal = app.add_subcommand("extremal", "emit the two-clique sharpness graph for parameter t");
  cmd_extremal->add_option("--t", extremal_t, "parameter t (order 4t-2)")->required();

  int verify_n = 0, jobs = 1;
  std::string input_file, out_file;
  bool include_alpha1 = false;
  auto* cmd_verify = app.add_subcommand("verify", "evaluate every predicate over a universe of graphs");
  auto* opt_n = cmd_verify->add_option("--n", verify_n, "verify all alpha <= 2 classes on n vertices")
                    ->check(CLI::Range(1, kEnumerateMaxVertices));
  auto* opt_in = cmd_verify->add_option("--input", input_file, "verify the graph6 lines of this file");
  opt_n->excludes(opt_in);
  cmd_verify->add_option("--skip-eta-above", eta_limit, "skip the eta search above this order")->capture_default_str();
  cmd_verify->add_option("--jobs", jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  cmd_verify->add_option("--out", out_file, "write JSON-lines records here instead of stdout");
  cmd_verify->add_flag("--include-alpha1", include_alpha1, "read alpha=2 hypotheses as alpha<=2");

  std::string oracle_name;
  int oracle_n = 0;
  auto* cmd_oracle = app.add_subcommand("oracle", "run a brute-force oracle (test support)");
  cmd_oracle->add_option("name", oracle_name, "one of: alpha, chi, cm, eta, matching, enumerate")->required();
  cmd_oracle->add_option("source", source, "graph6 string or file (stdin when absent)");
  cmd_oracle->add_option("--n", oracle_n, "order for the enumerate oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_invariants->parsed()) {
      for (const Graph& g : load_graphs(source))
        std::cout << report_json(to_graph6(g), compute_report(g, VerifyOptions{.eta_limit = eta_limit})) << "\n";
    } else if (cmd_cm->parsed()) {
      for (const Graph& g : load_graphs(source)) {
        const auto r = max_connected_matching(g);
        std::cout << r.size;
        if (witness) std::cout << " " << collection_json(r.witness);
        std::cout << "\n";
      }
    } else if (cmd_eta->parsed()) {
      for (const Graph& g : load_graphs(source)) {
        const auto r = hadwiger_number(g);
        std::cout << r.eta;
        if (witness) std::cout << " " << collection_json(r.certificate.collection);
        std::cout << "\n";
      }
    } else if (cmd_chi->parsed()) {
      for (const Graph& g : load_graphs(source)) std::cout << chromatic_number_alpha2(g) << "\n";
    } else if (cmd_enumerate->parsed()) {
      enumerate_alpha2(enum_n, [&](const Graph& g) {
        if (strict_alpha2 && independence_number(g) < 2) return;
        std::cout << to_graph6(g) << "\n";
      });
    } else if (cmd_extremal->parsed()) {
      std::cout << to_graph6(extremal_graph(extremal_t)) << "\n";
    } else if (cmd_verify->parsed()) {
      if (verify_n == 0 && input_file.empty()) throw std::runtime_error("verify needs --n or --input");
      std::vector<Graph> universe;
      if (verify_n > 0) {
        universe = enumerate_alpha2(verify_n);
      } else {
        std::ifstream in(input_file);
        if (!in) throw std::runtime_error("cannot open " + input_file);
        read_graph6_stream(in, [&](std::size_t, Graph g) { universe.push_back(std::move(g)); });
      }
      const VerifyOptions opts{.eta_limit = eta_limit, .include_alpha1 = include_alpha1};
      std::ofstream out_stream;
      if (!out_file.empty()) {
        out_stream.open(out_file);
        if (!out_stream) throw std::runtime_error("cannot open " + out_file);
      }
      std::ostream& records = out_file.empty() ? std::cout : out_stream;
      const CampaignSummary summary =
          run_campaign(universe, opts, jobs, [&](const VerdictRecord& rec) { records << to_json_line(rec) << "\n"; });
      print_summary(std::cerr, summary);
      return summary.any_failure() ? 1 : 0;
    } else if (cmd_oracle->parsed()) {
      if (oracle_name == "enumerate") {
        if (oracle_n == 0) throw std::runtime_error("oracle enumerate needs --n");
        brute_force_enumerate(oracle_n, [](const Graph& g) { std::cout << to_graph6(g) << "\n"; });
      } else {
        for (const Graph& g : load_graphs(source)) {
          if (oracle_name == "alpha")
            std::cout << independence_bruteforce(g) << "\n";
          else if (oracle_name == "chi")
            std::cout << chromatic_number_bruteforce(g) << "\n";
          else if (oracle_name == "cm")
            std::cout << cm_bruteforce(g) << "\n";
          else if (oracle_name == "eta")
            std::cout << hadwiger_bruteforce(g) << "\n";
          else if (oracle_name == "matching")
            std::cout << max_matching_bruteforce(g) << "\n";
          else
            throw std::runtime_error("unknown oracle '" + oracle_name + "'");
        }
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
