#include "permspec/report.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "permspec/oracle.hpp"

namespace permspec::report {

namespace {

using CheckList = std::vector<CheckRecord>;
using DiscrepancyList = std::vector<Discrepancy>;

struct Target {
  NRange range;
  NRange slow_range;
  std::optional<StatisticKind> kind;
  std::function<void(int, std::uint64_t, CheckList &, DiscrepancyList &)> run;
};

CheckRecord make_check(std::string id, int n, CheckStatus status) {
  CheckRecord c;
  c.id = std::move(id);
  c.n = n;
  c.status = status;
  return c;
}

Json polynomial_list(std::span<const Polynomial> ps) {
  Json out = Json::array();
  for (const auto &p : ps)
    out.push_back(p.to_string());
  return out;
}

VariableFamily family_of(StatisticKind kind) {
  switch (kind) {
  case StatisticKind::DesX:
    return VariableFamily::Single;
  case StatisticKind::InvX:
    return VariableFamily::Pair;
  default:
    return VariableFamily::None;
  }
}

CheckRecord spectrum_check(const std::string &id, StatisticKind kind, int n,
                           std::uint64_t seed, DiscrepancyList &discrepancies,
                           SpectrumReport *out = nullptr) {
  std::mt19937_64 rng(seed);
  auto s = spectrum_report(kind, n, std::nullopt, rng);
  CheckRecord c = make_check(id, n, s.status);
  Json values = Json::array();
  for (std::size_t i = 0; i < s.stated.eigenvalues.size(); ++i) {
    Json v;
    v["eigenvalue"] = s.stated.eigenvalues[i].to_string();
    v["stated_multiplicity"] = s.stated.multiplicities[i];
    if (s.moments_verified)
      v["multiplicity"] = s.verified.multiplicities[i];
    else
      v["multiplicity"] = nullptr;
    values.push_back(std::move(v));
  }
  c.details["statistic"] = to_string(kind);
  c.details["annihilated"] = s.annihilated;
  c.details["moments_verified"] = s.moments_verified;
  c.details["eigenvalues"] = std::move(values);
  if (s.status == CheckStatus::Fail) {
    if (!s.annihilated)
      c.witness = "the stated eigenvalues do not annihilate the element";
    else if (!s.moments_verified)
      c.witness = "moment identities have no nonnegative integer solution";
    else
      c.witness = "multiplicity mismatch not covered by a known misprint";
  }
  for (const auto &d : s.discrepancies)
    discrepancies.push_back(d);
  if (out)
    *out = std::move(s);
  return c;
}

/// Spectrum plus, for n <= 5, kernel dimensions at a specialization.
void spectral_target(const std::string &id, StatisticKind kind, int n,
                     std::uint64_t seed, CheckList &checks,
                     DiscrepancyList &discrepancies) {
  SpectrumReport s;
  checks.push_back(spectrum_check(id, kind, n, seed, discrepancies, &s));
  if (n <= 5 && s.moments_verified)
    checks.push_back(kernel_check(id + ".kernel", s.verified, seed));
}

CheckRecord minimal_polynomial_check(const std::string &id, StatisticKind kind,
                                     int n, DiscrepancyList &discrepancies) {
  const auto roots = stated_minimal_polynomial(kind, n).roots;
  PowerTable powers(GroupAlgebraElement::from_statistic(kind, n));
  const auto ann = check_annihilation(powers.base(), roots);
  const auto divisors = check_proper_divisors_fail(powers, roots);

  CheckRecord c = make_check(id, n, CheckStatus::Pass);
  c.details["statistic"] = to_string(kind);
  c.details["roots"] = polynomial_list(roots);
  c.details["annihilated"] = ann.annihilated;
  Json subsets = Json::array();
  for (const auto &sub : divisors.subsets) {
    Json j;
    j["omitted_root"] = roots[sub.omitted].to_string();
    j["nonzero"] = sub.witness.has_value();
    if (sub.witness)
      j["witness"] = sub.witness->to_string();
    else
      j["witness"] = nullptr;
    subsets.push_back(std::move(j));
  }
  c.details["proper_divisors"] = std::move(subsets);
  Json witnesses = Json::array();
  for (const auto &w : divisors.witnesses) {
    Json j;
    j["label"] = w.label;
    j["product"] = w.factors;
    j["coefficient"] = "[" + w.monomial.to_string() + "] at the identity";
    j["computed"] = w.computed.to_string();
    j["closed_form"] = w.closed_form.to_string();
    j["matches"] = w.matches();
    witnesses.push_back(std::move(j));
  }
  if (!witnesses.empty())
    c.details["witness_coefficients"] = std::move(witnesses);

  std::vector<std::string> problems;
  if (!ann.annihilated)
    problems.push_back("product over all roots is nonzero: " +
                       ann.witness->to_string());
  for (const auto &sub : divisors.subsets)
    if (!sub.witness)
      problems.push_back("product without root " + roots[sub.omitted].to_string() +
                         " vanishes");
  for (const auto &w : divisors.witnesses)
    if (!w.matches()) {
      problems.push_back(w.label + " [" + w.monomial.to_string() + "] of " +
                         w.factors + ": computed " + w.computed.to_string() +
                         ", closed form " + w.closed_form.to_string());
      discrepancies.push_back({id + "." + w.label,
                               "[" + w.monomial.to_string() + "] of " + w.factors +
                                   " at the identity = " + w.closed_form.to_string(),
                               "exact coefficient = " + w.computed.to_string()});
    }
  if (!problems.empty()) {
    c.status = CheckStatus::Fail;
    std::string joined;
    for (const auto &p : problems)
      joined += (joined.empty() ? "" : "; ") + p;
    c.witness = joined;
  }
  return c;
}

CheckRecord row_sum_check(int n, std::uint64_t seed) {
  CheckRecord c = make_check("prop2.1", n, CheckStatus::Pass);
  std::vector<std::string> problems;
  for (const auto kind : {StatisticKind::DesX, StatisticKind::InvX}) {
    std::mt19937_64 rng(seed);
    const auto r = row_sum_eigen_check(kind, n, rng);
    Json j;
    j["row_sum"] = r.row_sum.to_string();
    j["rows_equal"] = r.rows_equal;
    j["ones_eigenvector"] = r.ones_eigenvector;
    j["dimension"] = r.dimension;
    j["rank"] = r.rank.rank;
    j["primes"] = r.rank.primes;
    j["ranks_agree"] = r.rank.agreed;
    j["eigenspace_dimension_one"] = r.eigenspace_one_dimensional();
    c.details[to_string(kind)] = std::move(j);
    if (!r.passed())
      problems.push_back(to_string(kind) + ": rows_equal=" +
                         (r.rows_equal ? "true" : "false") + ", ones_eigenvector=" +
                         (r.ones_eigenvector ? "true" : "false") + ", rank " +
                         std::to_string(r.rank.rank) + " of " +
                         std::to_string(r.dimension));
  }
  if (!problems.empty()) {
    c.status = CheckStatus::Fail;
    c.witness = problems.front();
  }
  return c;
}

CheckRecord from_lemma(const oracle::LemmaResult &r) {
  CheckRecord c = make_check(r.id, r.n, r.passed ? CheckStatus::Pass : CheckStatus::Fail);
  if (!r.passed)
    c.witness = r.witness;
  c.details["instances"] = r.checked;
  if (!r.value.empty())
    c.details["value"] = r.value;
  return c;
}

std::vector<Polynomial> power_coefficients(int n, int k) {
  const auto s = GroupAlgebraElement::from_statistic(StatisticKind::InvX, n);
  auto p = s;
  for (int i = 1; i < k; ++i)
    p = convolve(p, s);
  return {p.coefficients().begin(), p.coefficients().end()};
}

oracle::LemmaResult lemma_4_5(int n) {
  if (n <= 4)
    return oracle::check_lemma_4_5(n);
  const auto f3 = power_coefficients(n, 3);
  return oracle::check_lemma_4_5(n, f3);
}

oracle::LemmaResult lemma_4_7(int n) {
  if (n <= 4)
    return oracle::check_lemma_4_7(n);
  const auto f2 = power_coefficients(n, 2);
  const auto f3 = power_coefficients(n, 3);
  return oracle::check_lemma_4_7(n, f2, f3);
}

Target lemma_target(NRange range, oracle::LemmaResult (*check)(int),
                    std::optional<Discrepancy> note = std::nullopt) {
  Target t;
  t.range = t.slow_range = range;
  t.run = [check, note](int n, std::uint64_t, CheckList &checks,
                        DiscrepancyList &discrepancies) {
    checks.push_back(from_lemma(check(n)));
    if (note)
      discrepancies.push_back(*note);
  };
  return t;
}

const std::map<std::string, Target> &registry() {
  static const std::map<std::string, Target> table = [] {
    std::map<std::string, Target> t;
    auto spectral = [](const std::string &id, StatisticKind kind, NRange range,
                       NRange slow) {
      Target x;
      x.range = range;
      x.slow_range = slow;
      x.kind = kind;
      x.run = [id, kind](int n, std::uint64_t seed, CheckList &checks,
                         DiscrepancyList &discrepancies) {
        spectral_target(id, kind, n, seed, checks, discrepancies);
      };
      return x;
    };
    t["theorem1"] = spectral("theorem1", StatisticKind::DesX, {5, 1, 6}, {5, 1, 6});
    t["theorem2"] = spectral("theorem2", StatisticKind::InvX, {4, 1, 5}, {4, 1, 6});
    t["corollary1"] = spectral("corollary1", StatisticKind::Des, {4, 1, 6}, {4, 1, 6});
    t["corollary2"] = spectral("corollary2", StatisticKind::Maj, {4, 1, 6}, {4, 1, 6});
    t["corollary3"] = spectral("corollary3", StatisticKind::Inv, {4, 1, 6}, {4, 1, 6});

    Target rows;
    rows.range = rows.slow_range = {4, 1, 6};
    rows.run = [](int n, std::uint64_t seed, CheckList &checks, DiscrepancyList &) {
      checks.push_back(row_sum_check(n, seed));
    };
    t["prop2.1"] = rows;

    auto minimal = [](const std::string &id, StatisticKind kind, NRange range,
                      NRange slow) {
      Target x;
      x.range = range;
      x.slow_range = slow;
      x.kind = kind;
      x.run = [id, kind](int n, std::uint64_t, CheckList &checks,
                         DiscrepancyList &discrepancies) {
        checks.push_back(minimal_polynomial_check(id, kind, n, discrepancies));
      };
      return x;
    };
    t["prop3.3"] = minimal("prop3.3", StatisticKind::DesX, {4, 3, 6}, {4, 3, 6});
    t["prop4.8"] = minimal("prop4.8", StatisticKind::InvX, {4, 4, 5}, {4, 4, 6});

    t["lemma2.3"] = lemma_target({4, 3, 7}, oracle::check_lemma_2_3);
    t["lemma2.4"] = lemma_target({4, 4, 7}, oracle::check_lemma_2_4);
    t["lemma3.1"] = lemma_target({4, 3, 6}, oracle::check_lemma_3_1);
    t["lemma3.2"] = lemma_target({4, 3, 6}, oracle::check_lemma_3_2);
    t["lemma4.1"] = lemma_target({4, 4, 6}, oracle::check_lemma_4_1);
    t["lemma4.2"] = lemma_target({4, 4, 6}, oracle::check_lemma_4_2);
    t["lemma4.3"] = lemma_target({4, 4, 5}, [](int n) {
      return oracle::check_lemma_4_3(n);
    });
    t["lemma4.4"] = lemma_target(
        {4, 4, 5}, oracle::check_lemma_4_4,
        Discrepancy{"lemma4.4.notation",
                    "summand written as #(...) x S^{i3 j3}|(...), a set product",
                    "read as the product of the two cardinalities, following "
                    "the case expansion in the proof; the closed forms hold "
                    "under this reading"});
    t["lemma4.5"] = lemma_target({4, 4, 5}, lemma_4_5);
    t["lemma4.6"] = lemma_target({4, 4, 8}, oracle::check_lemma_4_6);
    t["lemma4.7"] = lemma_target({4, 4, 5}, lemma_4_7);

    Target cross;
    cross.range = cross.slow_range = {4, 3, 4};
    cross.run = [](int n, std::uint64_t, CheckList &checks, DiscrepancyList &) {
      checks.push_back(cross_validate(n));
    };
    t["crossval"] = cross;
    return t;
  }();
  return table;
}

const Target &lookup(const std::string &target) {
  const auto &r = registry();
  const auto it = r.find(target);
  if (it == r.end())
    throw UsageError("unknown target '" + target + "'");
  return it->second;
}

void run_target(const Target &t, int n,
                std::uint64_t seed, VerificationReport &report) {
  CheckList checks;
  const auto start = std::chrono::steady_clock::now();
  t.run(n, seed, checks, report.discrepancies);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  // the target's time is split evenly when it emits several checks
  for (auto &c : checks) {
    c.wall_time_ms = ms / static_cast<std::int64_t>(checks.size());
    report.checks.push_back(std::move(c));
  }
}

} // namespace

bool VerificationReport::any_failed() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckRecord &c) {
    return c.status == CheckStatus::Fail;
  });
}

const std::vector<std::string> &targets() {
  static const std::vector<std::string> order = {
      "theorem1", "theorem2", "corollary1", "corollary2", "corollary3",
      "prop2.1",  "prop3.3",  "prop4.8",    "lemma2.3",   "lemma2.4",
      "lemma3.1", "lemma3.2", "lemma4.1",   "lemma4.2",   "lemma4.3",
      "lemma4.4", "lemma4.5", "lemma4.6",   "lemma4.7",   "crossval",
      "all"};
  return order;
}

NRange n_range(const std::string &target, bool allow_slow) {
  if (target == "all")
    return {4, 4, 5};
  const auto &t = lookup(target);
  return allow_slow ? t.slow_range : t.range;
}

VerificationReport verify(const VerifyOptions &options) {
  const NRange range = n_range(options.target, options.allow_slow);
  const int n = options.n.value_or(range.default_n);
  if (n < range.min || n > range.max)
    throw UsageError("n = " + std::to_string(n) + " is outside " +
                     std::to_string(range.min) + ".." + std::to_string(range.max) +
                     " for target " + options.target);
  VerificationReport report;
  report.target = options.target;
  report.n = n;
  report.seed = options.seed;
  if (options.target != "all") {
    const auto &t = lookup(options.target);
    report.kind = t.kind;
    run_target(t, n, options.seed, report);
    return report;
  }
  for (const auto &name : targets()) {
    if (name == "all")
      continue;
    const auto &t = lookup(name);
    const NRange r = options.allow_slow ? t.slow_range : t.range;
    run_target(t, std::clamp(n, r.min, r.max), options.seed, report);
  }
  return report;
}

Json to_json(const VerificationReport &report, bool timing) {
  Json j;
  j["tool_version"] = kToolVersion;
  j["target"] = report.target;
  j["n"] = report.n;
  if (report.kind)
    j["kind"] = to_string(*report.kind);
  else
    j["kind"] = nullptr;
  j["seed"] = report.seed;
  Json checks = Json::array();
  for (const auto &c : report.checks) {
    Json x;
    x["id"] = c.id;
    x["n"] = c.n;
    x["status"] = to_string(c.status);
    if (c.witness)
      x["witness"] = *c.witness;
    else
      x["witness"] = nullptr;
    if (timing)
      x["wall_time_ms"] = c.wall_time_ms;
    x["details"] = c.details;
    checks.push_back(std::move(x));
  }
  j["checks"] = std::move(checks);
  Json discrepancies = Json::array();
  for (const auto &d : report.discrepancies)
    discrepancies.push_back(
        {{"location", d.location}, {"paper_says", d.paper_says}, {"oracle_says", d.oracle_says}});
  j["discrepancies"] = std::move(discrepancies);
  return j;
}

CheckRecord cross_validate(int n) {
  CheckRecord c = make_check("crossval", n, CheckStatus::Pass);
  const auto elements = permutations(n);
  const auto invx = GroupAlgebraElement::from_statistic(StatisticKind::InvX, n);
  const auto desx = GroupAlgebraElement::from_statistic(StatisticKind::DesX, n);
  const auto inv2 = convolve(invx, invx);
  const auto inv3 = convolve(invx, inv2);
  const auto des2 = convolve(desx, desx);

  std::vector<std::string> problems;
  auto compare = [&](const std::string &what, const Permutation &p,
                     const Polynomial &brute, const Polynomial &engine) {
    if (brute != engine && problems.empty())
      problems.push_back(what + " at " + p.to_string() + ": brute force " +
                         brute.to_string() + ", convolution " + engine.to_string());
    return brute == engine;
  };
  std::size_t f2_ok = 0, f3_ok = 0, pi_ok = 0;
  for (std::size_t r = 0; r < elements.size(); ++r) {
    const auto &p = elements[r];
    f2_ok += compare("f2", p, oracle::compute_f2_brute(p), inv2[r]);
    f3_ok += compare("f3", p, oracle::compute_f3_brute(p), inv3[r]);
    pi_ok += compare("Pi_n", p, oracle::compute_pi_n(p), des2[r]);
  }
  c.details["permutations"] = elements.size();
  c.details["f2_equals_square"] = f2_ok == elements.size();
  c.details["f3_equals_cube"] = f3_ok == elements.size();
  c.details["pi_equals_descent_square"] = pi_ok == elements.size();
  if (!problems.empty()) {
    c.status = CheckStatus::Fail;
    c.witness = problems.front();
  }
  return c;
}

CheckRecord kernel_check(const std::string &id, const SpectrumClaim &claim,
                         std::uint64_t seed) {
  const int n = claim.n;
  CheckRecord c = make_check(id, n, CheckStatus::Pass);
  std::mt19937_64 rng(seed);
  const auto family = family_of(claim.kind);
  auto distinct_at = [&](const Assignment &a) {
    std::set<mpq_class> values;
    for (const auto &l : claim.eigenvalues)
      values.insert(l.specialize(a));
    return values.size() == claim.eigenvalues.size();
  };
  Assignment point = unit_assignment(family, n);
  std::string point_name = family == VariableFamily::None ? "integer matrix" : "X = 1";
  for (int attempt = 0; !distinct_at(point); ++attempt) {
    if (attempt == 8) {
      c.status = CheckStatus::Fail;
      c.witness = "eigenvalues collide at every tried specialization";
      return c;
    }
    point = random_positive_assignment(family, n, rng);
    point_name = "random positive point";
  }
  const auto m = build_matrix(claim.kind, n);
  const auto dims = kernel_dimensions(m, claim.eigenvalues, point, rng);

  Json rows = Json::array();
  std::size_t total = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const auto &d = dims[i];
    total += d.dimension;
    rows.push_back({{"eigenvalue", d.eigenvalue.to_string()},
                    {"value", to_string(d.value)},
                    {"kernel_dimension", d.dimension},
                    {"multiplicity", claim.multiplicities[i]},
                    {"primes", d.rank.primes}});
    if (!c.witness && (!d.rank.agreed || static_cast<std::int64_t>(d.dimension) !=
                                             claim.multiplicities[i])) {
      c.status = CheckStatus::Fail;
      c.witness = "eigenvalue " + d.eigenvalue.to_string() + " = " +
                  to_string(d.value) + ": kernel dimension " +
                  std::to_string(d.dimension) + ", multiplicity " +
                  std::to_string(claim.multiplicities[i]) +
                  (d.rank.agreed ? "" : " (primes disagree)");
    }
  }
  if (!c.witness && total != m.dim) {
    c.status = CheckStatus::Fail;
    c.witness = "kernel dimensions sum to " + std::to_string(total) + ", not " +
                std::to_string(m.dim);
  }
  c.details["statistic"] = to_string(claim.kind);
  c.details["specialization"] = point_name;
  c.details["kernels"] = std::move(rows);
  return c;
}

namespace {

SpectrumReport spectrum_for(const SpectrumOptions &o) {
  const int max = o.kind == StatisticKind::InvX && !o.allow_slow ? 5 : 6;
  if (o.n < 1 || o.n > max)
    throw UsageError("n must be in 1.." + std::to_string(max) + " for " +
                     to_string(o.kind));
  std::mt19937_64 rng(o.seed);
  return spectrum_report(o.kind, o.n, std::nullopt, rng);
}

} // namespace

Json spectrum_json(const SpectrumOptions &options) {
  const auto s = spectrum_for(options);
  Json j;
  j["kind"] = to_string(options.kind);
  j["n"] = options.n;
  j["status"] = to_string(s.status);
  Json values = Json::array();
  for (std::size_t i = 0; i < s.verified.eigenvalues.size(); ++i)
    values.push_back({{"eigenvalue", s.verified.eigenvalues[i].to_string()},
                      {"multiplicity", s.verified.multiplicities[i]},
                      {"stated_multiplicity", s.stated.multiplicities[i]}});
  j["eigenvalues"] = std::move(values);
  Json discrepancies = Json::array();
  for (const auto &d : s.discrepancies)
    discrepancies.push_back(
        {{"location", d.location}, {"paper_says", d.paper_says}, {"oracle_says", d.oracle_says}});
  j["discrepancies"] = std::move(discrepancies);
  return j;
}

std::string spectrum_text(const SpectrumOptions &options) {
  const auto s = spectrum_for(options);
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < s.verified.eigenvalues.size(); ++i)
    out << (i ? ", " : "") << s.verified.eigenvalues[i].to_string() << ": "
        << s.verified.multiplicities[i];
  out << "}\n";
  out << "status: " << to_string(s.status) << "\n";
  for (const auto &d : s.discrepancies)
    out << "discrepancy " << d.location << ": stated " << d.paper_says
        << "; computed " << d.oracle_says << "\n";
  return out.str();
}

std::string matrix_csv(const PolynomialMatrix &m) {
  std::string out;
  for (std::size_t r = 0; r < m.dim; ++r) {
    for (std::size_t c = 0; c < m.dim; ++c) {
      if (c)
        out += ',';
      out += '"';
      out += m(r, c).to_string();
      out += '"';
    }
    out += '\n';
  }
  return out;
}

Json matrix_json(const PolynomialMatrix &m, StatisticKind kind, int n) {
  Json j;
  j["n"] = n;
  j["kind"] = to_string(kind);
  j["order"] = "lex";
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.dim; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.dim; ++c)
      row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

} // namespace permspec::report
