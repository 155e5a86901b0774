#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permspec/report.hpp"

using namespace permspec;
using namespace permspec::report;

namespace {

VerificationReport run(const std::string &target, std::optional<int> n = std::nullopt) {
  VerifyOptions o;
  o.target = target;
  o.n = n;
  return verify(o);
}

const CheckRecord &find(const VerificationReport &r, const std::string &id) {
  for (const auto &c : r.checks)
    if (c.id == id)
      return c;
  FAIL("missing check " << id);
  return r.checks.front();
}

} // namespace

TEST_CASE("default n and ranges") {
  CHECK(n_range("theorem1", false).default_n == 5);
  CHECK(n_range("theorem1", false).max == 6);
  CHECK(n_range("theorem2", false).default_n == 4);
  CHECK(n_range("theorem2", false).max == 5);
  CHECK(n_range("theorem2", true).max == 6);
  CHECK(n_range("lemma4.2", false).default_n == 4);
  CHECK_THROWS_AS(n_range("theorem9", false), UsageError);
  CHECK_THROWS_AS(run("lemma4.1", 7), UsageError);
  CHECK_THROWS_AS(run("theorem1", 7), UsageError);
  CHECK_THROWS_AS(run("theorem2", 6), UsageError);
  for (const auto &t : targets())
    CHECK_NOTHROW(n_range(t, false));
}

TEST_CASE("theorem1 at n = 5") {
  const auto r = run("theorem1");
  CHECK(r.n == 5);
  CHECK(r.kind == StatisticKind::DesX);
  CHECK(r.exit_code() == 0);
  const auto &c = find(r, "theorem1");
  CHECK(c.status == CheckStatus::Pass);
  std::vector<std::int64_t> m;
  for (const auto &e : c.details["eigenvalues"])
    m.push_back(e["multiplicity"].get<std::int64_t>());
  CHECK(m == std::vector<std::int64_t>{1, 10, 109});
  CHECK(find(r, "theorem1.kernel").status == CheckStatus::Pass);
}

TEST_CASE("theorem2 is flagged, not failed") {
  const auto r = run("theorem2");
  CHECK(r.exit_code() == 0);
  CHECK(find(r, "theorem2").status == CheckStatus::Flagged);
  CHECK(find(r, "theorem2.kernel").status == CheckStatus::Pass);
  REQUIRE(r.discrepancies.size() == 1);
  CHECK(r.discrepancies[0].location == "theorem2.multiplicity(0)");
}

TEST_CASE("lemma targets") {
  const auto r = run("lemma2.3", 3);
  CHECK(r.exit_code() == 0);
  CHECK(r.checks[0].details["value"] == "3*X[1] + 3*X[2]");
  const auto r44 = run("lemma4.4");
  CHECK(r44.checks[0].status == CheckStatus::Pass);
  REQUIRE(r44.discrepancies.size() == 1);
  CHECK(r44.discrepancies[0].location == "lemma4.4.notation");
}

TEST_CASE("prop4.8 reports the witness coefficients") {
  const auto r = run("prop4.8");
  const auto &c = find(r, "prop4.8");
  CHECK(c.details["annihilated"] == true);
  const auto &w = c.details["witness_coefficients"];
  REQUIRE(w.size() == 3);
  CHECK(w[0]["closed_form"] == "-2");
  CHECK(w[1]["closed_form"] == "-32");
  CHECK(w[2]["closed_form"] == "-22");
  CHECK(w[1]["matches"] == true);
  // a mismatch is a failure, never a flag
  const bool all_match = w[0]["matches"] == true && w[2]["matches"] == true;
  CHECK((c.status == CheckStatus::Pass) == all_match);
  CHECK((r.exit_code() == 0) == all_match);
}

TEST_CASE("report json") {
  auto r = run("corollary1");
  const auto j = to_json(r, true);
  CHECK(j["tool_version"] == kToolVersion);
  CHECK(j["target"] == "corollary1");
  CHECK(j["n"] == 4);
  CHECK(j["kind"] == "des");
  CHECK(j["seed"] == 7);
  for (const auto &c : j["checks"]) {
    CHECK(c.contains("wall_time_ms"));
    CHECK(c["status"] == "pass");
    CHECK(c["witness"].is_null());
  }
  const auto quiet = to_json(r, false);
  for (const auto &c : quiet["checks"])
    CHECK_FALSE(c.contains("wall_time_ms"));
  CHECK(to_json(run("prop2.1"), false)["kind"].is_null());
}

TEST_CASE("exit codes") {
  VerificationReport r;
  CHECK(r.exit_code() == 0);
  CheckRecord c;
  c.status = CheckStatus::Flagged;
  r.checks.push_back(c);
  CHECK(r.exit_code() == 0);
  c.status = CheckStatus::Fail;
  r.checks.push_back(c);
  CHECK(r.exit_code() == 1);
}

TEST_CASE("determinism") {
  VerifyOptions o;
  o.target = "all";
  o.n = 4;
  const auto a = to_json(verify(o), false).dump();
  const auto b = to_json(verify(o), false).dump();
  CHECK(a == b);
}

TEST_CASE("spectrum output") {
  CHECK(spectrum_text({StatisticKind::Des, 4}).starts_with("{36: 1, -6: 6, 0: 17}\n"));
  CHECK(spectrum_text({StatisticKind::Maj, 3}).starts_with("{9: 1, -3: 3, 0: 2}\n"));
  CHECK(spectrum_text({StatisticKind::DesX, 2}).starts_with("{X[1]: 1, -X[1]: 1}\n"));
  const auto j = spectrum_json({StatisticKind::Inv, 4});
  CHECK(j["status"] == "flagged");
  CHECK(j["eigenvalues"][0]["eigenvalue"] == "72");
  CHECK(j["eigenvalues"][3]["multiplicity"] == 17);
  CHECK(j["eigenvalues"][3]["stated_multiplicity"] == 14);
  CHECK_THROWS_AS(spectrum_json({StatisticKind::InvX, 6}), UsageError);
  CHECK_THROWS_AS(spectrum_json({StatisticKind::Des, 0}), UsageError);
}

TEST_CASE("matrix export") {
  const auto m = build_matrix(StatisticKind::DesX, 2);
  CHECK(matrix_csv(m) == "\"0\",\"X[1]\"\n\"X[1]\",\"0\"\n");
  const auto j = matrix_json(m, StatisticKind::DesX, 2);
  CHECK(j.dump() == R"({"n":2,"kind":"desx","order":"lex","entries":[["0","X[1]"],["X[1]","0"]]})");
  const auto inv = build_matrix(StatisticKind::Inv, 3);
  for (std::size_t r = 0; r < inv.dim; ++r) {
    std::int64_t sum = 0;
    for (std::size_t c = 0; c < inv.dim; ++c)
      sum += inv(r, c).constant_term().to_int64();
    CHECK(sum == 9);
    CHECK(inv(r, r).to_string() == "0");
  }
}
