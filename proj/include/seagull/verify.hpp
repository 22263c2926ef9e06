#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "seagull/collections.hpp"
#include "seagull/graph6.hpp"
#include "seagull/hadwiger.hpp"
#include "seagull/invariants.hpp"

namespace seagull {

enum class Verdict { holds, fails, vacuous, not_applicable, skipped };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::vacuous: return "vacuous";
    case Verdict::not_applicable: return "not-applicable";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

/// Per-graph outcome of every tracked predicate.
///  - conj3: n = 4t-1 and alpha = 2 imply cm >= t
///  - lemma1: alpha = 2, n = 4t-1, cm <= t-1 imply omega <= cm
///  - lemma2: same hypothesis implies k1+k2 <= cm for vertex+edge collections
///  - seagull: alpha = 2 implies eta >= n/2
///  - hadwiger_vs_chi: eta >= chi
/// lemma1/lemma2 are vacuous unless their hypothesis holds, which requires a
/// conj3 counterexample; conj3 is not-applicable off the n = 4t-1 orders.
struct VerdictRecord {
  std::string g6;
  InvariantReport report;
  Verdict conj3 = Verdict::not_applicable;
  Verdict lemma1 = Verdict::vacuous;
  Verdict lemma2 = Verdict::vacuous;
  Verdict seagull = Verdict::not_applicable;
  Verdict hadwiger_vs_chi = Verdict::skipped;
  std::string sharpness_note;  // set for the extremal two-clique graphs
};

struct VerifyOptions {
  int eta_limit = 10;           // skip the eta search for larger orders
  bool include_alpha1 = false;  // read "alpha = 2" hypotheses as alpha <= 2
  int chi_brute_limit = kChromaticBruteforceMaxVertices;
};

namespace detail {

inline bool conj3_applicable(int n, int alpha, const VerifyOptions& opts) {
  if (n % 4 != 3) return false;
  return opts.include_alpha1 ? alpha <= 2 : alpha == 2;
}

inline bool lemma_hypothesis(int n, int alpha, int cm) {
  if (n % 4 != 3 || alpha != 2) return false;
  const int t = (n + 1) / 4;
  return cm <= t - 1;
}

// The extremal family K_{2t-1} + K_{2t-1}: two components, both complete,
// of equal odd order.
inline std::optional<int> extremal_parameter(const Graph& g) {
  const auto comps = components(g);
  if (comps.size() != 2) return std::nullopt;
  const int a = comps[0].size(), b = comps[1].size();
  if (a != b || a % 2 == 0) return std::nullopt;
  for (const VertexSet& comp : comps)
    for (int v : comp)
      if ((g.neighbors(v) & comp).size() != a - 1) return std::nullopt;
  return (a + 1) / 2;
}

}  // namespace detail

/// Full scalar report; chi and eta stay empty beyond their size guards.
inline InvariantReport compute_report(const Graph& g, const VerifyOptions& opts = {}) {
  InvariantReport r;
  r.n = g.n();
  r.alpha = independence_number(g);
  r.omega = clique_number(g);
  r.delta = min_degree(g);
  r.cm = max_connected_matching(g).size;
  if (r.alpha <= 2)
    r.chi = chromatic_number_alpha2(g);
  else if (g.n() <= opts.chi_brute_limit)
    r.chi = chromatic_number_bruteforce(g);
  if (g.n() <= opts.eta_limit) r.eta = hadwiger_number(g).eta;
  return r;
}

/// Computes the invariant report and evaluates every predicate, with
/// explicit vacuity and skip bookkeeping. Never throws on solver guards;
/// guarded fields surface as skipped.
inline VerdictRecord verify_graph(const Graph& g, const VerifyOptions& opts = {}) {
  VerdictRecord rec;
  rec.g6 = to_graph6(g);
  rec.report = compute_report(g, opts);
  const InvariantReport& r = rec.report;

  // Coloring sanity: alpha = 2 forces color classes of size <= 2.
  if (r.alpha == 2 && r.chi && 2 * *r.chi < g.n())
    throw std::logic_error("verify_graph: chi below n/2 on an alpha=2 graph; coloring solver is broken");

  const int t = (g.n() + 1) / 4;
  if (detail::conj3_applicable(g.n(), r.alpha, opts))
    rec.conj3 = r.cm >= t ? Verdict::holds : Verdict::fails;

  if (detail::lemma_hypothesis(g.n(), r.alpha, r.cm)) {
    rec.lemma1 = r.omega <= r.cm ? Verdict::holds : Verdict::fails;
    const CollectionProfile p = max_vertex_edge_collection(g).profile;
    rec.lemma2 = p.k1 + p.k2 <= r.cm ? Verdict::holds : Verdict::fails;
  }

  const bool seagull_applies = opts.include_alpha1 ? r.alpha <= 2 : r.alpha == 2;
  if (seagull_applies) rec.seagull = r.eta ? (2 * *r.eta >= g.n() ? Verdict::holds : Verdict::fails) : Verdict::skipped;

  if (r.eta && r.chi) rec.hadwiger_vs_chi = *r.eta >= *r.chi ? Verdict::holds : Verdict::fails;

  if (auto et = detail::extremal_parameter(g))
    rec.sharpness_note = "extremal K_" + std::to_string(2 * *et - 1) + "+K_" + std::to_string(2 * *et - 1) +
                         ": cm attains the sharp value " + std::to_string(*et - 1);
  return rec;
}

/// Structural consistency of a record, recomputed from its scalar fields:
/// conj3 must match n/alpha/cm, lemma vacuity must match its hypothesis, and
/// a non-vacuous lemma forces conj3 = fails. Returns a description of the
/// first inconsistency, or nothing.
inline std::optional<std::string> cross_check_violation(const VerdictRecord& rec, const VerifyOptions& opts = {}) {
  const int n = rec.report.n, alpha = rec.report.alpha, cm = rec.report.cm;
  const int t = (n + 1) / 4;
  const Verdict expected_conj3 = detail::conj3_applicable(n, alpha, opts)
                                     ? (cm >= t ? Verdict::holds : Verdict::fails)
                                     : Verdict::not_applicable;
  if (rec.conj3 != expected_conj3)
    return std::string("conj3 is '") + to_string(rec.conj3) + "' but n/alpha/cm imply '" + to_string(expected_conj3) + "'";
  const bool hyp = detail::lemma_hypothesis(n, alpha, cm);
  if (!hyp && rec.lemma1 != Verdict::vacuous) return "lemma1 not vacuous although its hypothesis fails";
  if (!hyp && rec.lemma2 != Verdict::vacuous) return "lemma2 not vacuous although its hypothesis fails";
  if (hyp && rec.lemma1 == Verdict::vacuous) return "lemma1 vacuous although its hypothesis holds";
  if (hyp && rec.lemma2 == Verdict::vacuous) return "lemma2 vacuous although its hypothesis holds";
  if ((rec.lemma1 != Verdict::vacuous || rec.lemma2 != Verdict::vacuous) && rec.conj3 != Verdict::fails)
    return "non-vacuous lemma without a failing conj3";
  return std::nullopt;
}

inline bool record_has_failure(const VerdictRecord& rec) {
  return rec.conj3 == Verdict::fails || rec.lemma1 == Verdict::fails || rec.lemma2 == Verdict::fails ||
         rec.seagull == Verdict::fails || rec.hadwiger_vs_chi == Verdict::fails;
}

/// One JSON-lines record; key order is fixed for byte-stable output.
inline std::string to_json_line(const VerdictRecord& rec) {
  nlohmann::ordered_json j;
  j["g6"] = rec.g6;
  j["n"] = rec.report.n;
  j["alpha"] = rec.report.alpha;
  j["omega"] = rec.report.omega;
  j["delta"] = rec.report.delta;
  j["chi"] = rec.report.chi ? nlohmann::ordered_json(*rec.report.chi) : nlohmann::ordered_json("skipped");
  j["cm"] = rec.report.cm;
  j["eta"] = rec.report.eta ? nlohmann::ordered_json(*rec.report.eta) : nlohmann::ordered_json("skipped");
  j["conj3"] = to_string(rec.conj3);
  j["lemma1"] = to_string(rec.lemma1);
  j["lemma2"] = to_string(rec.lemma2);
  j["seagull"] = to_string(rec.seagull);
  j["hadwiger_vs_chi"] = to_string(rec.hadwiger_vs_chi);
  if (!rec.sharpness_note.empty()) j["sharpness_note"] = rec.sharpness_note;
  return j.dump();
}

struct PredicateTally {
  std::size_t holds = 0, fails = 0, vacuous = 0, not_applicable = 0, skipped = 0;

  void add(Verdict v) {
    switch (v) {
      case Verdict::holds: ++holds; break;
      case Verdict::fails: ++fails; break;
      case Verdict::vacuous: ++vacuous; break;
      case Verdict::not_applicable: ++not_applicable; break;
      case Verdict::skipped: ++skipped; break;
    }
  }
};

struct CampaignSummary {
  std::size_t total = 0;
  PredicateTally conj3, lemma1, lemma2, seagull, hadwiger_vs_chi;
  std::vector<std::string> failing_g6;

  bool any_failure() const { return !failing_g6.empty(); }
};

inline void print_summary(std::ostream& os, const CampaignSummary& s) {
  auto line = [&](const char* name, const PredicateTally& t) {
    os << name << ": holds=" << t.holds << " fails=" << t.fails << " vacuous=" << t.vacuous
       << " not-applicable=" << t.not_applicable << " skipped=" << t.skipped << "\n";
  };
  os << "graphs: " << s.total << "\n";
  line("conj3", s.conj3);
  line("lemma1", s.lemma1);
  line("lemma2", s.lemma2);
  line("seagull", s.seagull);
  line("hadwiger_vs_chi", s.hadwiger_vs_chi);
  for (const std::string& g6 : s.failing_g6) os << "FAIL " << g6 << "\n";
}

/// Verifies every universe graph, optionally across worker threads, and
/// hands records to the sink in universe order regardless of the thread
/// count. Throws std::logic_error if the structural cross-check fires.
template <typename Sink>
CampaignSummary run_campaign(const std::vector<Graph>& universe, const VerifyOptions& opts, int jobs, Sink&& sink) {
  std::vector<VerdictRecord> records(universe.size());
  if (jobs < 1) jobs = 1;
  if (jobs == 1) {
    for (std::size_t i = 0; i < universe.size(); ++i) records[i] = verify_graph(universe[i], opts);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= universe.size()) break;
            records[i] = verify_graph(universe[i], opts);
          }
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    }
    for (auto& th : workers) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  CampaignSummary summary;
  summary.total = records.size();
  for (VerdictRecord& rec : records) {
    if (auto bad = cross_check_violation(rec, opts))
      throw std::logic_error("verdict cross-check fired for " + rec.g6 + ": " + *bad);
    summary.conj3.add(rec.conj3);
    summary.lemma1.add(rec.lemma1);
    summary.lemma2.add(rec.lemma2);
    summary.seagull.add(rec.seagull);
    summary.hadwiger_vs_chi.add(rec.hadwiger_vs_chi);
    if (record_has_failure(rec)) summary.failing_g6.push_back(rec.g6);
    sink(rec);
  }
  return summary;
}

}  // namespace seagull
