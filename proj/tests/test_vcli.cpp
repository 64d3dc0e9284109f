#include <doctest.h>

#include <algorithm>
#include <set>

#include "vcli/suites.hpp"

using vcli::CaseStatus;
using vcli::SuiteParams;
using vcli::SuiteReport;

namespace {

nlohmann::ordered_json canonical(SuiteReport r) {
  for (vcli::CaseRecord& c : r.cases) c.elapsed_ms = 0;
  return vcli::report_json(r);
}

const vcli::CaseRecord& find_case(const SuiteReport& r, const std::string& id) {
  auto it = std::find_if(r.cases.begin(), r.cases.end(),
                         [&id](const vcli::CaseRecord& c) {
                           return c.case_id == id;
                         });
  REQUIRE(it != r.cases.end());
  return *it;
}

}  // namespace

TEST_SUITE("vcli") {

TEST_CASE("the suite roster is fixed") {
  const auto& names = vcli::suite_names();
  CHECK(names.size() == 18);
  CHECK(names.front() == "group-orders");
  CHECK(names.back() == "ik24-exploratory");
  std::set<std::string> unique(names.begin(), names.end());
  CHECK(unique.size() == names.size());
}

TEST_CASE("unknown suites and unusable parameters are rejected") {
  CHECK_THROWS_AS(vcli::run_suite("unknown", {}, 0), vcli::UnknownSuite);
  SuiteParams p13;
  p13.p = 7;
  CHECK_THROWS_AS(vcli::run_suite("cubic-valuation", p13, 0),
                  vcli::BadParameters);
  SuiteParams cap;
  cap.level_cap = 40;
  CHECK_THROWS_AS(vcli::run_suite("group-orders", cap, 0),
                  vcli::BadParameters);
  SuiteParams ell;
  ell.ell = 4;
  CHECK_THROWS_AS(vcli::run_suite("s-subgroup", ell, 0), vcli::BadParameters);
  SuiteParams inst;
  inst.instances = 0;
  CHECK_THROWS_AS(vcli::run_suite("disc-lemma", inst, 0), vcli::BadParameters);
}

TEST_CASE("three-torsion at p = 7 has four passing cases") {
  SuiteParams params;
  params.p = 7;
  SuiteReport r = vcli::run_suite("three-torsion", params, 0);
  CHECK(r.cases.size() == 4);
  CHECK(r.count(CaseStatus::kPass) == 4);
  CHECK(r.all_passed());
}

TEST_CASE("invariant-planes passes at l = 3 and finds no common plane") {
  SuiteParams params;
  params.ell = 3;
  SuiteReport r = vcli::run_suite("invariant-planes", params, 0);
  CHECK(r.all_passed());
  const auto& common = find_case(r, "common-planes-l3");
  CHECK(common.observed.find("0 plane(s)") != std::string::npos);
}

TEST_CASE("invariant-planes fails exactly the two refuted claims at l = 2") {
  SuiteReport r = vcli::run_suite("invariant-planes", {}, 0);
  CHECK(r.cases.size() == 20);
  CHECK(r.count(CaseStatus::kFail) == 2);
  CHECK_FALSE(r.all_passed());
  CHECK(find_case(r, "m1-plane-count-l2").status == CaseStatus::kFail);
  CHECK(find_case(r, "common-planes-l2").status == CaseStatus::kFail);
}

TEST_CASE("report cases carry values without gating the outcome") {
  SuiteReport rp = vcli::run_suite("remark-product", {}, 0);
  CHECK(rp.cases.size() == 2);
  CHECK(rp.count(CaseStatus::kReport) == 1);
  CHECK(rp.all_passed());
  const auto& printed = find_case(rp, "printed-generators");
  CHECK(printed.observed.find("order 24") != std::string::npos);
  CHECK(printed.observed.find("query present") != std::string::npos);

  SuiteParams p13;
  p13.p = 13;
  SuiteReport ik = vcli::run_suite("ik24-exploratory", p13, 0);
  CHECK(ik.cases.size() == 8);
  CHECK(ik.count(CaseStatus::kPass) == 1);
  CHECK(ik.count(CaseStatus::kReport) == 7);
  CHECK(ik.all_passed());
  CHECK(find_case(ik, "mu-valuation-p13").observed == "v_h(mu) = -5");
  CHECK(find_case(ik, "ratio-valuation-i6-p13").expected == "-1");
  CHECK(find_case(ik, "ratio-valuation-i6-p13").observed == "v_h = -1");
}

TEST_CASE("reruns with one seed agree and the level cap narrows the range") {
  SuiteReport a = vcli::run_suite("disc-lemma", {}, 7);
  SuiteReport b = vcli::run_suite("disc-lemma", {}, 7);
  CHECK(canonical(a) == canonical(b));

  SuiteParams cap;
  cap.level_cap = 5;
  SuiteReport g = vcli::run_suite("group-orders", cap, 0);
  CHECK(g.cases.size() == 5);
  CHECK(g.all_passed());
}

TEST_CASE("json reports follow the pinned schema") {
  SuiteReport r = vcli::run_suite("commutators", {}, 3);
  nlohmann::ordered_json j = vcli::report_json(r);
  CHECK(j["artifact_version"] == vcli::kArtifactVersion);
  CHECK(j["seed"] == 3);
  CHECK(j["suite"] == "commutators");
  REQUIRE(j["cases"].is_array());
  for (const auto& c : j["cases"]) {
    CHECK(c.contains("case_id"));
    CHECK(c["params"].is_object());
    CHECK((c["status"] == "pass" || c["status"] == "fail" ||
           c["status"] == "report"));
    CHECK(c.contains("expected"));
    CHECK(c.contains("observed"));
    CHECK(c["elapsed_ms"].is_number_integer());
  }
}

TEST_CASE("emit_report renders both formats and rejects others") {
  SuiteReport r = vcli::run_suite("kummer", {}, 0);
  CHECK(r.all_passed());
  std::string text = vcli::emit_report(r, "text");
  CHECK(text.find("[pass] pairs-q13-l2") != std::string::npos);
  CHECK(text.find("failures 0") != std::string::npos);
  std::string json = vcli::emit_report(r, "json");
  CHECK(nlohmann::ordered_json::parse(json)["suite"] == "kummer");
  CHECK_THROWS_AS(vcli::emit_report(r, "yaml"), std::invalid_argument);

  SuiteReport empty;
  empty.suite = "empty";
  nlohmann::ordered_json je =
      nlohmann::ordered_json::parse(vcli::emit_report(empty, "json"));
  CHECK(je.is_object());
  CHECK(je["cases"].empty());
  CHECK(je["artifact_version"] == vcli::kArtifactVersion);
}

}
