#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <vector>

#include <json.hpp>

#include "helpers.hpp"
#include "seagull/enumerate.hpp"
#include "seagull/verify.hpp"

using namespace seagull;

namespace {
const Graph kTwoTriangles = disjoint_union(Graph::complete(3), Graph::complete(3));

std::string campaign_lines(const std::vector<Graph>& universe, const VerifyOptions& opts, int jobs) {
  std::ostringstream out;
  run_campaign(universe, opts, jobs, [&](const VerdictRecord& rec) { out << to_json_line(rec) << "\n"; });
  return out.str();
}
}  // namespace

TEST_CASE("verify_graph on the two-triangle graph") {
  const VerdictRecord rec = verify_graph(kTwoTriangles);
  CHECK(rec.report.n == 6);
  CHECK(rec.report.alpha == 2);
  CHECK(rec.report.omega == 3);
  CHECK(rec.report.cm == 1);
  REQUIRE(rec.report.chi.has_value());
  CHECK(*rec.report.chi == 3);
  REQUIRE(rec.report.eta.has_value());
  CHECK(*rec.report.eta == 3);
  CHECK(rec.conj3 == Verdict::not_applicable);  // 6 is not 4t-1
  CHECK(rec.lemma1 == Verdict::vacuous);
  CHECK(rec.lemma2 == Verdict::vacuous);
  CHECK(rec.seagull == Verdict::holds);
  CHECK(rec.hadwiger_vs_chi == Verdict::holds);
  CHECK(rec.sharpness_note.find("K_3+K_3") != std::string::npos);
  CHECK(!cross_check_violation(rec).has_value());
}

TEST_CASE("verify_graph handles graphs outside the alpha<=2 universe") {
  const VerdictRecord rec = verify_graph(Graph::cycle(7));
  CHECK(rec.report.alpha == 3);
  CHECK(rec.conj3 == Verdict::not_applicable);
  CHECK(rec.seagull == Verdict::not_applicable);
  REQUIRE(rec.report.chi.has_value());
  CHECK(*rec.report.chi == 3);  // brute-force fallback
  CHECK(rec.hadwiger_vs_chi == Verdict::holds);
}

TEST_CASE("strict versus inclusive alpha handling on K7") {
  const Graph k7 = Graph::complete(7);
  const VerdictRecord strict = verify_graph(k7);
  CHECK(strict.report.cm == 3);
  CHECK(strict.conj3 == Verdict::not_applicable);

  VerifyOptions inclusive;
  inclusive.include_alpha1 = true;
  const VerdictRecord incl = verify_graph(k7, inclusive);
  CHECK(incl.conj3 == Verdict::holds);  // cm = 3 >= t = 2
  CHECK(incl.seagull == Verdict::holds);
  CHECK(!cross_check_violation(incl, inclusive).has_value());
}

TEST_CASE("eta skipping cascades into dependent verdicts") {
  VerifyOptions opts;
  opts.eta_limit = 3;
  const VerdictRecord rec = verify_graph(Graph::cycle(5), opts);
  CHECK(!rec.report.eta.has_value());
  CHECK(rec.seagull == Verdict::skipped);
  CHECK(rec.hadwiger_vs_chi == Verdict::skipped);
  CHECK(to_json_line(rec).find("\"eta\":\"skipped\"") != std::string::npos);
}

TEST_CASE("campaign over the 5-vertex universe") {
  const auto universe = enumerate_alpha2(5);
  REQUIRE(universe.size() == 14);
  std::size_t seen = 0;
  const CampaignSummary summary = run_campaign(universe, {}, 1, [&](const VerdictRecord&) { ++seen; });
  CHECK(seen == universe.size());
  CHECK(summary.total == universe.size());
  CHECK(!summary.any_failure());
  // 5 is not congruent 3 mod 4, so conj3 never applies.
  CHECK(summary.conj3.not_applicable == universe.size());
  CHECK(summary.seagull.fails == 0);
  // exactly one alpha=1 class (K5) sits outside the strict seagull scope
  CHECK(summary.seagull.holds == universe.size() - 1);
  CHECK(summary.seagull.not_applicable == 1);
}

TEST_CASE("campaign over the 7-vertex universe holds conj3 with vacuous lemmas") {
  const auto universe = enumerate_alpha2(7);
  REQUIRE(universe.size() == 107);
  const CampaignSummary summary = run_campaign(universe, {}, 1, [](const VerdictRecord&) {});
  CHECK(!summary.any_failure());
  CHECK(summary.conj3.holds == 106);
  CHECK(summary.conj3.not_applicable == 1);  // K7
  CHECK(summary.conj3.fails == 0);
  CHECK(summary.lemma1.vacuous == universe.size());
  CHECK(summary.lemma2.vacuous == universe.size());
}

TEST_CASE("empty universe yields an all-zero summary") {
  const CampaignSummary summary = run_campaign({}, {}, 1, [](const VerdictRecord&) {});
  CHECK(summary.total == 0);
  CHECK(!summary.any_failure());
  CHECK(summary.conj3.holds == 0);
}

TEST_CASE("campaign output is deterministic and independent of the job count") {
  const auto universe = enumerate_alpha2(6);
  const std::string once = campaign_lines(universe, {}, 1);
  CHECK(once == campaign_lines(universe, {}, 1));
  CHECK(once == campaign_lines(universe, {}, 4));
  CHECK(!once.empty());
}

TEST_CASE("records serialize with the fixed key order") {
  const std::string line = to_json_line(verify_graph(Graph::cycle(5)));
  const auto j = nlohmann::json::parse(line);
  const std::vector<std::string> keys = {"g6",  "n",  "alpha", "omega",  "delta",  "chi",
                                         "cm",  "eta", "conj3", "lemma1", "lemma2", "seagull",
                                         "hadwiger_vs_chi"};
  for (const auto& k : keys) CHECK(j.contains(k));
  CHECK(j["n"] == 5);
  CHECK(j["chi"] == 3);
  CHECK(j["eta"] == 3);
  CHECK(j["conj3"] == "not-applicable");
  CHECK(line.rfind("{\"g6\":", 0) == 0);  // key order is stable
}

TEST_CASE("cross-check trips on forged records") {
  // A real 7-vertex alpha=2 record, then forge cm down to 1 so the lemma
  // hypothesis holds while the stored verdicts still claim otherwise.
  const Graph g = complement(Graph::cycle(7));  // alpha=2, n=7
  VerdictRecord rec = verify_graph(g);
  REQUIRE(rec.report.alpha == 2);
  REQUIRE(rec.report.cm >= 2);
  CHECK(!cross_check_violation(rec).has_value());

  VerdictRecord forged = rec;
  forged.report.cm = 1;
  const auto violation = cross_check_violation(forged);
  REQUIRE(violation.has_value());

  // Forged verdicts must also trip the recomputation checks.
  VerdictRecord flipped = rec;
  flipped.conj3 = Verdict::fails;
  CHECK(cross_check_violation(flipped).has_value());

  VerdictRecord nonvacuous = rec;
  nonvacuous.lemma1 = Verdict::holds;
  CHECK(cross_check_violation(nonvacuous).has_value());
}

TEST_CASE("failure detection feeds the campaign exit contract") {
  VerdictRecord rec = verify_graph(kTwoTriangles);
  CHECK(!record_has_failure(rec));
  rec.seagull = Verdict::fails;
  CHECK(record_has_failure(rec));
}

TEST_CASE("summary printing matches the documented shape") {
  const CampaignSummary summary = run_campaign(enumerate_alpha2(5), {}, 1, [](const VerdictRecord&) {});
  std::ostringstream os;
  print_summary(os, summary);
  CHECK(os.str().find("graphs: 14") != std::string::npos);
  CHECK(os.str().find("conj3: holds=0 fails=0 vacuous=0 not-applicable=14 skipped=0") != std::string::npos);
}
