// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>

#include "permspec/oracle.hpp"
#include "permspec/report.hpp"
#include "permspec/spectral.hpp"

using namespace permspec;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string &what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

std::int64_t fac(int n) { return static_cast<std::int64_t>(factorial(n)); }

Polynomial X(int k) { return Polynomial::variable(VariableId::single(k)); }
Polynomial X(int i, int j) { return Polynomial::variable(VariableId::pair(i, j)); }

Outcome criterion1() {
  Outcome o;
  for (int n = 3; n <= 6; ++n) {
    const auto roots = stated_minimal_polynomial(StatisticKind::DesX, n).roots;
    PowerTable powers(GroupAlgebraElement::from_statistic(StatisticKind::DesX, n));
    const auto ann = check_annihilation(powers.base(), roots);
    o.require(ann.annihilated, "n=" + std::to_string(n) + ": product is nonzero");
    const auto div = check_proper_divisors_fail(powers, roots);
    o.require(div.subsets.size() == 3 && div.all_subsets_nonzero(),
              "n=" + std::to_string(n) + ": a proper factor subset vanishes");
  }
  if (o.ok)
    o.note = "annihilated with all proper subsets nonzero, n = 3..6";
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (int n = 3; n <= 6; ++n) {
    std::mt19937_64 rng(report::kDefaultSeed);
    PowerTable powers(GroupAlgebraElement::from_statistic(StatisticKind::DesX, n));
    const auto claim = stated_spectrum(StatisticKind::DesX, n);
    const auto m = verify_multiplicities(powers, claim.eigenvalues, rng);
    const std::int64_t c = binomial(n, 2);
    o.require(m.verified && m.multiplicities ==
                                std::vector<std::int64_t>{1, c, fac(n) - c - 1},
              "n=" + std::to_string(n) + ": moment multiplicities " + m.failure);
  }
  for (const auto kind : {StatisticKind::Des, StatisticKind::Maj})
    for (int n = 3; n <= 4; ++n) {
      std::mt19937_64 rng(report::kDefaultSeed);
      const auto s = spectrum_report(kind, n, std::nullopt, rng);
      const auto k = report::kernel_check("kernel", s.verified, report::kDefaultSeed);
      o.require(s.status == CheckStatus::Pass && k.status == CheckStatus::Pass,
                to_string(kind) + " n=" + std::to_string(n) + ": " +
                    k.witness.value_or("spectrum check failed"));
    }
  std::mt19937_64 rng(report::kDefaultSeed);
  const auto des4 = spectrum_report(StatisticKind::Des, 4, std::nullopt, rng);
  o.require(des4.verified.eigenvalues ==
                    std::vector<Polynomial>{Polynomial::constant(36),
                                            Polynomial::constant(-6), Polynomial{}} &&
                des4.verified.multiplicities == std::vector<std::int64_t>{1, 6, 17},
            "des at n=4 is not {36: 1, -6: 6, 0: 17}");
  if (o.ok)
    o.note = "(1, C(n,2), n!-C(n,2)-1) for n = 3..6; kernel dimensions agree for des, maj at n = 3, 4";
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::ostringstream values;
  for (int n = 4; n <= 5; ++n) {
    const auto roots = stated_minimal_polynomial(StatisticKind::InvX, n).roots;
    PowerTable powers(GroupAlgebraElement::from_statistic(StatisticKind::InvX, n));
    o.require(check_annihilation(powers.base(), roots).annihilated,
              "n=" + std::to_string(n) + ": four-factor product is nonzero");
    const auto div = check_proper_divisors_fail(powers, roots);
    o.require(div.all_subsets_nonzero(),
              "n=" + std::to_string(n) + ": a proper factor subset vanishes");
    values << " n=" << n << ":";
    for (const auto &w : div.witnesses) {
      values << " " << w.label << " " << w.computed.to_string() << " vs "
             << w.closed_form.to_string();
      o.require(w.matches(), "");
    }
  }
  o.note = (o.ok ? "annihilated; witnesses match:" : "witness coefficients differ from the closed forms:") +
           values.str();
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (int n = 4; n <= 5; ++n) {
    report::VerifyOptions opts;
    opts.target = "theorem2";
    opts.n = n;
    const auto r = report::verify(opts);
    const auto &c = r.checks.at(0);
    o.require(c.status != CheckStatus::Fail, "n=" + std::to_string(n) + ": theorem2 failed");
    const auto &eig = c.details["eigenvalues"];
    o.require(eig.size() == 4, "n=" + std::to_string(n) + ": expected four eigenvalues");
    if (!o.ok)
      return o;
    const auto lambda = named(NamedPolynomial::Lambda, n);
    const auto delta = named(NamedPolynomial::Delta, n);
    for (const auto &e : eig) {
      const auto value = e["eigenvalue"].get<std::string>();
      const auto m = e["multiplicity"].get<std::int64_t>();
      if (value == (-lambda).to_string())
        o.require(m == n - 1, "m(-Lambda) != n-1");
      else if (value == (-delta).to_string())
        o.require(m == binomial(n - 1, 2), "m(-Delta) != C(n-1,2)");
      else if (value == "0")
        o.require(m == fac(n) - binomial(n, 2) - 1, "m(0) unexpected");
    }
    bool flagged = false;
    for (const auto &d : r.discrepancies)
      flagged |= d.location == "theorem2.multiplicity(0)";
    o.require(flagged, "n=" + std::to_string(n) + ": V(0) discrepancy not flagged");
    if (n == 4) {
      bool kernel_ok = false;
      for (const auto &k : r.checks)
        if (k.id == "theorem2.kernel")
          kernel_ok = k.status == CheckStatus::Pass &&
                      k.details["specialization"] == "X = 1";
      o.require(kernel_ok, "n=4: kernel dimension at X = 1 disagrees");
    }
  }
  if (o.ok)
    o.note = "m(-Lambda) = n-1, m(-Delta) = C(n-1,2), m(0) = n!-C(n,2)-1 (flagged); kernel at X = 1 agrees";
  return o;
}

Outcome criterion5() {
  Outcome o;
  struct Fixture {
    StatisticKind kind;
    int n;
    std::vector<Polynomial> eigenvalues;
    std::vector<std::int64_t> multiplicities;
  };
  const Polynomial x12 = X(1, 2), x13 = X(1, 3), x23 = X(2, 3);
  const std::vector<Fixture> fixtures = {
      {StatisticKind::DesX, 1, {Polynomial{}}, {1}},
      {StatisticKind::DesX, 2, {X(1), -X(1)}, {1, 1}},
      {StatisticKind::InvX, 1, {Polynomial{}}, {1}},
      {StatisticKind::InvX, 2, {x12, -x12}, {1, 1}},
      {StatisticKind::InvX,
       3,
       {Integer(3) * (x12 + x13 + x23), -x12 - Integer(2) * x13 - x23, -x12 + x13 - x23, Polynomial{}},
       {1, 2, 1, 2}},
  };
  for (const auto &f : fixtures) {
    const auto where = to_string(f.kind) + " n=" + std::to_string(f.n);
    const auto stated = stated_spectrum(f.kind, f.n);
    std::map<std::string, std::int64_t> want, have;
    for (std::size_t i = 0; i < f.eigenvalues.size(); ++i)
      want[f.eigenvalues[i].to_string()] = f.multiplicities[i];
    for (std::size_t i = 0; i < stated.eigenvalues.size(); ++i)
      have[stated.eigenvalues[i].to_string()] = stated.multiplicities[i];
    o.require(want == have, where + ": stated list differs");
    std::mt19937_64 rng(report::kDefaultSeed);
    const auto s = spectrum_report(f.kind, f.n, std::nullopt, rng);
    o.require(s.status == CheckStatus::Pass, where + ": spectrum not verified");
    const auto k = report::kernel_check("kernel", s.verified, report::kDefaultSeed);
    o.require(k.status == CheckStatus::Pass, where + ": " + k.witness.value_or(""));
  }
  if (o.ok)
    o.note = "D_1, D_2, I_1, I_2, I_3 verified by moments and kernel dimensions";
  return o;
}

Outcome criterion6() {
  Outcome o;
  const std::vector<std::string> lemmas = {"lemma2.3", "lemma2.4", "lemma3.1", "lemma3.2",
                                           "lemma4.1", "lemma4.2", "lemma4.3", "lemma4.4",
                                           "lemma4.5", "lemma4.6", "lemma4.7"};
  const auto start = std::chrono::steady_clock::now();
  int runs = 0;
  for (const auto &id : lemmas)
    for (int n = 4; n <= 5; ++n) {
      const auto range = report::n_range(id, false);
      if (n > range.max)
        continue;
      report::VerifyOptions opts;
      opts.target = id;
      opts.n = n;
      const auto r = report::verify(opts);
      ++runs;
      o.require(r.checks.at(0).status == CheckStatus::Pass,
                id + " n=" + std::to_string(n) + ": " + r.checks.at(0).witness.value_or(""));
    }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < 120, "lemma suite took longer than 2 minutes");
  if (o.ok)
    o.note = std::to_string(runs) + " lemma runs at n = 4, 5 passed";
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto c = report::cross_validate(4);
  o.require(c.status == CheckStatus::Pass, c.witness.value_or(""));
  if (o.ok)
    o.note = "f2 = S^2, f3 = S^3, Pi_n = S_desX^2 at all 24 permutations";
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (const auto kind : {StatisticKind::DesX, StatisticKind::InvX})
    for (int n = 3; n <= 5; ++n) {
      std::mt19937_64 rng(report::kDefaultSeed);
      const auto r = row_sum_eigen_check(kind, n, rng);
      o.require(r.passed() && r.rank.primes.size() >= 3,
                to_string(kind) + " n=" + std::to_string(n) + ": rank " +
                    std::to_string(r.rank.rank) + " of " + std::to_string(r.dimension));
    }
  if (o.ok)
    o.note = "equal row sums, all-ones eigenvector, one-dimensional eigenspace at 3 primes";
  return o;
}

std::string capture(const std::string &command) {
  std::array<char, 4096> buf{};
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE *)> pipe(popen(command.c_str(), "r"), pclose);
  if (!pipe)
    return {};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0)
    out.append(buf.data(), got);
  return out;
}

Outcome criterion9(const std::string &cli) {
  Outcome o;
  std::string a, b;
  if (!cli.empty()) {
    const std::string cmd = "\"" + cli + "\" verify all --n 4 --seed 7 --no-timing";
    a = capture(cmd);
    b = capture(cmd);
    o.require(!a.empty(), "CLI produced no output");
  } else {
    report::VerifyOptions opts;
    opts.target = "all";
    opts.n = 4;
    a = report::to_json(report::verify(opts), false).dump(2);
    b = report::to_json(report::verify(opts), false).dump(2);
  }
  o.require(a == b, "reports differ");
  if (o.ok)
    o.note = "byte-identical reports (" + std::to_string(a.size()) + " bytes)";
  return o;
}

} // namespace

int main(int argc, char **argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"minimal polynomial of the descent element", criterion1},
      {"descent multiplicities", criterion2},
      {"minimal polynomial of the inversion element", criterion3},
      {"inversion multiplicities", criterion4},
      {"small-case spectra", criterion5},
      {"lemma suite", criterion6},
      {"oracle cross-validation", criterion7},
      {"row sums and the all-ones eigenspace", criterion8},
      {"determinism", [&] { return criterion9(cli); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception &e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    failed += !o.ok;
    std::cout << "criterion " << i + 1 << ": " << (o.ok ? "PASS" : "FAIL") << "  "
              << criteria[i].first << " - " << o.note << std::endl;
  }
  return failed ? 1 : 0;
}
