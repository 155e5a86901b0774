#include "permspec/spectral.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace permspec {

namespace {

Integer fact(int n) { return Integer(mpz_class(static_cast<unsigned long>(factorial(n)))); }

Polynomial constant(std::int64_t c) { return Polynomial::constant(Integer(c)); }

bool is_inversion_root_set(std::span<const Polynomial> roots, int n) {
  if (n < 4 || roots.size() != 4)
    return false;
  const std::vector<Polynomial> expected = {
      Polynomial{}, named(NamedPolynomial::Omega, n),
      -named(NamedPolynomial::Lambda, n), -named(NamedPolynomial::Delta, n)};
  return std::all_of(expected.begin(), expected.end(), [&](const Polynomial &e) {
    return std::find(roots.begin(), roots.end(), e) != roots.end();
  });
}

/// Solves a square system over Q; nullopt if singular.
std::optional<std::vector<mpq_class>> solve(std::vector<std::vector<mpq_class>> a,
                                            std::vector<mpq_class> b) {
  const std::size_t r = b.size();
  for (std::size_t c = 0; c < r; ++c) {
    std::size_t pivot = c;
    while (pivot < r && a[pivot][c] == 0)
      ++pivot;
    if (pivot == r)
      return std::nullopt;
    std::swap(a[pivot], a[c]);
    std::swap(b[pivot], b[c]);
    for (std::size_t row = 0; row < r; ++row) {
      if (row == c || a[row][c] == 0)
        continue;
      const mpq_class f = a[row][c] / a[c][c];
      for (std::size_t k = c; k < r; ++k)
        a[row][k] -= f * a[c][k];
      b[row] -= f * b[c];
    }
  }
  std::vector<mpq_class> x(r);
  for (std::size_t i = 0; i < r; ++i)
    x[i] = b[i] / a[i][i];
  return x;
}

} // namespace

// ---------------------------------------------------------------------------
// Claims

SpectrumClaim stated_spectrum(StatisticKind kind, int n) {
  if (n < 1 || n > kMaxDegree)
    throw DomainError("degree out of range: " + std::to_string(n));
  SpectrumClaim c;
  c.kind = kind;
  c.n = n;
  const std::int64_t nf = static_cast<std::int64_t>(factorial(n));
  auto add = [&](Polynomial p, std::int64_t m) {
    c.eigenvalues.push_back(std::move(p));
    c.multiplicities.push_back(m);
  };
  if (n == 1) {
    add(Polynomial{}, 1);
    return c;
  }
  const std::int64_t cn2 = binomial(n, 2);
  switch (kind) {
  case StatisticKind::DesX:
    if (n == 2) {
      const auto x = Polynomial::variable(VariableId::single(1));
      add(x, 1);
      add(-x, 1);
    } else {
      const auto d = named(NamedPolynomial::DescentSum, n);
      add(Integer(nf / 2) * d, 1);
      add(Integer(-static_cast<std::int64_t>(factorial(n - 2))) * d, cn2);
      add(Polynomial{}, nf - cn2 - 1);
    }
    break;
  case StatisticKind::InvX:
    if (n == 2) {
      const auto x = Polynomial::variable(VariableId::pair(1, 2));
      add(x, 1);
      add(-x, 1);
    } else if (n == 3) {
      const auto x12 = Polynomial::variable(VariableId::pair(1, 2));
      const auto x13 = Polynomial::variable(VariableId::pair(1, 3));
      const auto x23 = Polynomial::variable(VariableId::pair(2, 3));
      add(Integer(3) * (x12 + x13 + x23), 1);
      add(-x12 - Integer(2) * x13 - x23, 2);
      add(-x12 + x13 - x23, 1);
      add(Polynomial{}, 2);
    } else {
      add(named(NamedPolynomial::Omega, n), 1);
      add(-named(NamedPolynomial::Lambda, n), n - 1);
      add(-named(NamedPolynomial::Delta, n), binomial(n - 1, 2));
      add(Polynomial{}, nf - cn2 - n);
    }
    break;
  case StatisticKind::Des:
    if (n == 2) {
      add(constant(1), 1);
      add(constant(-1), 1);
    } else {
      const auto f1 = static_cast<std::int64_t>(factorial(n - 1));
      add(constant(cn2 * f1), 1);
      add(constant(-f1), cn2);
      add(Polynomial{}, nf - cn2 - 1);
    }
    break;
  case StatisticKind::Maj:
    if (n == 2) {
      add(constant(1), 1);
      add(constant(-1), 1);
    } else {
      add(constant(cn2 * nf / 2), 1);
      add(constant(-nf / 2), cn2);
      add(Polynomial{}, nf - cn2 - 1);
    }
    break;
  case StatisticKind::Inv:
    if (n == 2) {
      add(constant(1), 1);
      add(constant(-1), 1);
    } else if (n == 3) {
      add(constant(9), 1);
      add(constant(-4), 2);
      add(constant(-1), 1);
      add(Polynomial{}, 2);
    } else {
      // eigenvalues as listed; the multiplicity lines are transcribed
      // literally, including their dropped signs
      add(constant(nf / 2 * cn2), 1);
      add(constant(-static_cast<std::int64_t>(factorial(n + 1)) / 6), n - 1);
      add(constant(-nf / 6), cn2);
      add(Polynomial{}, nf - cn2 - n);
    }
    break;
  }
  return c;
}

MinimalPolynomialClaim stated_minimal_polynomial(StatisticKind kind, int n) {
  if (kind == StatisticKind::DesX && n >= 3 && n <= kMaxDegree) {
    const auto d = named(NamedPolynomial::DescentSum, n);
    return {{Polynomial{},
             Integer(static_cast<std::int64_t>(factorial(n) / 2)) * d,
             Integer(-static_cast<std::int64_t>(factorial(n - 2))) * d}};
  }
  if (kind == StatisticKind::InvX && n >= 4 && n <= kMaxDegree)
    return {{Polynomial{}, -named(NamedPolynomial::Lambda, n),
             -named(NamedPolynomial::Delta, n), named(NamedPolynomial::Omega, n)}};
  throw DomainError("no stated minimal polynomial for " + to_string(kind) +
                    " at n = " + std::to_string(n));
}

// ---------------------------------------------------------------------------
// Products

std::string CoefficientWitness::to_string() const {
  return "coefficient at " + where.to_string() + " is " + value.to_string();
}

std::optional<CoefficientWitness> first_nonzero(const GroupAlgebraElement &e) {
  for (std::size_t r = 0; r < e.size(); ++r)
    if (!e[r].is_zero())
      return CoefficientWitness{Permutation::unrank(e.degree(), r), e[r]};
  return std::nullopt;
}

PowerTable::PowerTable(GroupAlgebraElement base) {
  const int n = base.degree();
  powers_.push_back(GroupAlgebraElement::delta_identity(n));
  powers_.push_back(std::move(base));
}

const GroupAlgebraElement &PowerTable::power(int k) {
  if (k < 0)
    throw DomainError("negative power");
  while (static_cast<int>(powers_.size()) <= k)
    powers_.push_back(convolve(powers_.back(), powers_[1]));
  return powers_[k];
}

std::vector<Polynomial> expand_roots(std::span<const Polynomial> roots) {
  std::vector<Polynomial> e{Polynomial::constant(1)};
  for (const auto &c : roots) {
    // multiply by (x - c)
    std::vector<Polynomial> next(e.size() + 1);
    for (std::size_t k = 0; k < e.size(); ++k) {
      next[k + 1] += e[k];
      next[k] -= c * e[k];
    }
    e = std::move(next);
  }
  return e;
}

GroupAlgebraElement product_via_powers(PowerTable &powers,
                                       std::span<const Polynomial> roots) {
  const auto e = expand_roots(roots);
  auto out = GroupAlgebraElement::zero(powers.degree());
  for (std::size_t k = 0; k < e.size(); ++k)
    if (!e[k].is_zero())
      out += e[k] * powers.power(static_cast<int>(k));
  return out;
}

AnnihilationResult check_annihilation(const GroupAlgebraElement &s,
                                      std::span<const Polynomial> roots) {
  AnnihilationResult result;
  if (roots.empty()) {
    result.witness = first_nonzero(GroupAlgebraElement::delta_identity(s.degree()));
    return result;
  }
  auto product = add_scalar_identity(s, -roots[0]);
  for (std::size_t i = 1; i < roots.size(); ++i)
    product = convolve(product, add_scalar_identity(s, -roots[i]));
  result.witness = first_nonzero(product);
  result.annihilated = !result.witness.has_value();
  return result;
}

bool ProperDivisorResult::all_subsets_nonzero() const {
  return std::all_of(subsets.begin(), subsets.end(),
                     [](const SubsetProduct &s) { return s.witness.has_value(); });
}

bool ProperDivisorResult::witnesses_match() const {
  return std::all_of(witnesses.begin(), witnesses.end(),
                     [](const ClosedFormWitness &w) { return w.matches(); });
}

Integer inversion_witness_closed_form(int which, int n) {
  if (n < 4)
    throw DomainError("closed forms need n >= 4");
  const mpz_class f3 = fact(n - 3).to_mpz();
  const mpz_class f2 = fact(n - 2).to_mpz();
  const mpz_class fn = fact(n).to_mpz();
  const mpz_class m = n;
  switch (which) {
  case 1: {
    const mpz_class poly = m * m * m * m - 8 * m * m * m + 22 * m * m - 36 * m + 44;
    return Integer(mpz_class(f3 * f3 * poly / 2));
  }
  case 2:
    return Integer(mpz_class(-4 * f3 * f2 - f3 * fn));
  case 3:
    return Integer(mpz_class(f2 * f2 / 2 + f2 * fn / 2 - f2 * f2 * fn / 2));
  default:
    throw DomainError("witness index must be 1, 2 or 3");
  }
}

ProperDivisorResult check_proper_divisors_fail(PowerTable &powers,
                                               std::span<const Polynomial> roots) {
  ProperDivisorResult result;
  for (std::size_t omit = 0; omit < roots.size(); ++omit) {
    std::vector<Polynomial> subset;
    for (std::size_t i = 0; i < roots.size(); ++i)
      if (i != omit)
        subset.push_back(roots[i]);
    result.subsets.push_back(
        {omit, first_nonzero(product_via_powers(powers, subset))});
  }

  const int n = powers.degree();
  if (powers.base().family() != VariableFamily::Pair ||
      !is_inversion_root_set(roots, n))
    return result;

  const auto lambda = named(NamedPolynomial::Lambda, n);
  const auto delta = named(NamedPolynomial::Delta, n);
  const auto omega = named(NamedPolynomial::Omega, n);
  auto cube = [](VariableId v) {
    const std::vector<VariableId> vars(3, v);
    return Monomial::from_variables(vars);
  };
  struct Spec {
    std::string label, factors;
    std::vector<Polynomial> roots;
    Monomial monomial;
  };
  const std::vector<Spec> specs = {
      {"witness1", "(S+Lambda)(S-Omega)S", {-lambda, omega, Polynomial{}},
       cube(VariableId::pair(1, 4))},
      {"witness2", "(S+Delta)(S-Omega)S", {-delta, omega, Polynomial{}},
       cube(VariableId::pair(1, 3))},
      {"witness3", "(S+Lambda)(S+Delta)(S-Omega)", {-lambda, -delta, omega},
       cube(VariableId::pair(1, 3))},
  };
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto product = product_via_powers(powers, specs[i].roots);
    result.witnesses.push_back(
        {specs[i].label, specs[i].factors, specs[i].monomial,
         product.at_identity().coefficient_of(specs[i].monomial),
         inversion_witness_closed_form(static_cast<int>(i) + 1, n)});
  }
  return result;
}

// ---------------------------------------------------------------------------
// Specializations

Assignment random_positive_assignment(VariableFamily family, int n,
                                      std::mt19937_64 &rng) {
  Assignment a;
  if (family == VariableFamily::None)
    return a;
  for (const auto v : variables_of(family, n)) {
    const long num = 1 + static_cast<long>(rng() % 9);
    const long den = 1 + static_cast<long>(rng() % 4);
    mpq_class q(num, den);
    q.canonicalize();
    a.emplace(v, q);
  }
  return a;
}

Assignment unit_assignment(VariableFamily family, int n) {
  Assignment a;
  if (family == VariableFamily::None)
    return a;
  for (const auto v : variables_of(family, n))
    a.emplace(v, mpq_class(1));
  return a;
}

Assignment index_assignment(int n) {
  Assignment a;
  for (const auto v : variables_of(VariableFamily::Single, n))
    a.emplace(v, mpq_class(v.index()));
  return a;
}

// ---------------------------------------------------------------------------
// Multiplicities

MultiplicityResult verify_multiplicities(PowerTable &powers,
                                         std::span<const Polynomial> eigenvalues,
                                         std::mt19937_64 &rng) {
  MultiplicityResult result;
  const std::size_t r = eigenvalues.size();
  const int n = powers.degree();
  if (r == 0) {
    result.failure = "no eigenvalues";
    return result;
  }
  VariableFamily family = powers.base().family();
  for (const auto &l : eigenvalues)
    family = join_families(family, l.family());

  std::vector<Polynomial> traces;
  for (std::size_t k = 0; k < r; ++k)
    traces.push_back(trace_of_left_multiplication(powers.power(static_cast<int>(k))));

  std::optional<std::vector<mpq_class>> solution;
  constexpr int kRetries = 8;
  for (int attempt = 0; attempt < kRetries && !solution; ++attempt) {
    const auto point = random_positive_assignment(family, n, rng);
    std::vector<mpq_class> values;
    for (const auto &l : eigenvalues)
      values.push_back(l.specialize(point));
    std::set<mpq_class> distinct(values.begin(), values.end());
    if (distinct.size() != r)
      continue;
    std::vector<std::vector<mpq_class>> a(r, std::vector<mpq_class>(r));
    std::vector<mpq_class> b(r);
    for (std::size_t k = 0; k < r; ++k) {
      for (std::size_t i = 0; i < r; ++i) {
        mpq_class p = 1;
        for (std::size_t e = 0; e < k; ++e)
          p *= values[i];
        a[k][i] = p;
      }
      b[k] = traces[k].specialize(point);
    }
    solution = solve(std::move(a), std::move(b));
    result.specialization = point;
  }
  if (!solution) {
    result.failure = "eigenvalues not distinct at any of " +
                     std::to_string(kRetries) + " random specializations";
    return result;
  }

  for (const auto &m : *solution) {
    if (m.get_den() != 1 || m < 0 || !m.get_num().fits_slong_p()) {
      result.failure = "multiplicity " + m.get_str() + " is not a nonnegative integer";
      return result;
    }
    result.multiplicities.push_back(m.get_num().get_si());
  }

  std::vector<Polynomial> power_of(r, Polynomial::constant(1));
  for (std::size_t k = 0; k < r; ++k) {
    Polynomial lhs;
    for (std::size_t i = 0; i < r; ++i)
      lhs += Integer(result.multiplicities[i]) * power_of[i];
    if (lhs != traces[k]) {
      result.failure = "moment identity fails at k = " + std::to_string(k) +
                       ": " + lhs.to_string() + " vs " + traces[k].to_string();
      return result;
    }
    for (std::size_t i = 0; i < r; ++i)
      power_of[i] = power_of[i] * eigenvalues[i];
  }
  result.verified = true;
  return result;
}

// ---------------------------------------------------------------------------
// Matrices at a specialization

namespace {

std::vector<std::uint64_t> reduce_shifted(const PolynomialMatrix &m,
                                          const Assignment &point,
                                          const mpq_class &shift, std::uint64_t p) {
  const auto res = modular::residues(point, p);
  const std::uint64_t s = modular::residue(shift, p);
  std::vector<std::uint64_t> out(m.entries.size());
  for (std::size_t i = 0; i < m.entries.size(); ++i)
    out[i] = m.entries[i].evaluate_mod(p, res);
  for (std::size_t d = 0; d < m.dim; ++d) {
    auto &x = out[d * m.dim + d];
    x = (x + p - s) % p;
  }
  return out;
}

} // namespace

RowSumResult row_sum_eigen_check(StatisticKind kind, int n, std::mt19937_64 &rng) {
  RowSumResult result;
  const auto m = build_matrix(kind, n);
  result.dimension = m.dim;
  for (const auto &s : permutations(n))
    result.statistic_sum += statistic(kind, s);

  std::vector<Polynomial> sums;
  PolynomialAccumulator acc;
  for (std::size_t r = 0; r < m.dim; ++r) {
    for (std::size_t c = 0; c < m.dim; ++c)
      acc.add(m(r, c));
    sums.push_back(acc.take());
  }
  result.rows_equal = std::all_of(sums.begin(), sums.end(),
                                  [&](const Polynomial &s) { return s == sums[0]; });
  result.row_sum = sums[0];
  result.ones_eigenvector =
      std::all_of(sums.begin(), sums.end(), [&](const Polynomial &s) {
        return s == result.statistic_sum;
      });

  const VariableFamily family = is_multinomial(kind)
                                    ? (kind == StatisticKind::DesX
                                           ? VariableFamily::Single
                                           : VariableFamily::Pair)
                                    : VariableFamily::None;
  result.point = random_positive_assignment(family, n, rng);
  const mpq_class p_value = result.statistic_sum.specialize(result.point);
  result.rank = modular::agreed_rank(
      [&](std::uint64_t p) { return reduce_shifted(m, result.point, p_value, p); },
      m.dim, m.dim, rng);
  return result;
}

std::vector<KernelDimension>
kernel_dimensions(const PolynomialMatrix &m, std::span<const Polynomial> eigenvalues,
                  const Assignment &point, std::mt19937_64 &rng) {
  std::vector<KernelDimension> out;
  for (const auto &l : eigenvalues) {
    KernelDimension k;
    k.eigenvalue = l;
    k.value = l.specialize(point);
    k.rank = modular::agreed_rank(
        [&](std::uint64_t p) { return reduce_shifted(m, point, k.value, p); },
        m.dim, m.dim, rng);
    k.dimension = m.dim - k.rank.rank;
    out.push_back(std::move(k));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reports

std::string to_string(CheckStatus status) {
  switch (status) {
  case CheckStatus::Pass:
    return "pass";
  case CheckStatus::Fail:
    return "fail";
  case CheckStatus::Flagged:
    return "flagged";
  }
  return "fail";
}

std::string to_string(const mpq_class &q) { return q.get_str(); }

SpectrumReport spectrum_report(StatisticKind kind, int n,
                               const std::optional<Assignment> &specialization,
                               std::mt19937_64 &rng) {
  SpectrumReport report;
  report.stated = stated_spectrum(kind, n);
  report.verified = report.stated;

  PowerTable powers(GroupAlgebraElement::from_statistic(kind, n));
  report.annihilated =
      check_annihilation(powers.base(), report.stated.eigenvalues).annihilated;
  const auto moments = verify_multiplicities(powers, report.stated.eigenvalues, rng);
  report.moments_verified = moments.verified;
  if (moments.verified)
    report.verified.multiplicities = moments.multiplicities;

  const std::int64_t nf = static_cast<std::int64_t>(factorial(n));
  const std::int64_t cn2 = n >= 2 ? binomial(n, 2) : 0;
  bool unexplained = false;
  if (moments.verified) {
    for (std::size_t i = 0; i < report.stated.eigenvalues.size(); ++i) {
      const auto said = report.stated.multiplicities[i];
      const auto got = report.verified.multiplicities[i];
      if (said == got)
        continue;
      const auto &lambda = report.stated.eigenvalues[i];
      const bool zero = lambda.is_zero();
      if ((kind == StatisticKind::InvX || kind == StatisticKind::Inv) && n >= 4 &&
          zero) {
        report.discrepancies.push_back(
            {kind == StatisticKind::InvX ? "theorem2.multiplicity(0)"
                                         : "corollary3.multiplicity(0)",
             "V(0) = n! - C(n,2) - n = " + std::to_string(said),
             "V(0) = n! - C(n,2) - 1 = " + std::to_string(got) +
                 " (moment identities; agrees with the derivation in the proof)"});
      } else if (kind == StatisticKind::Inv && n >= 4 &&
                 lambda == constant(-nf / 6)) {
        report.discrepancies.push_back(
            {"corollary3.multiplicity(-n!/6)",
             "V(n!/6) = C(n,2) = " + std::to_string(said),
             "V(-n!/6) = C(n-1,2) = " + std::to_string(got) +
                 " (specialization of the Delta multiplicity)"});
      } else {
        unexplained = true;
        report.discrepancies.push_back(
            {to_string(kind) + ".multiplicity(" + lambda.to_string() + ")",
             std::to_string(said), std::to_string(got)});
      }
    }
  }
  if (kind == StatisticKind::Inv && n >= 4) {
    const auto big = static_cast<std::int64_t>(factorial(n + 1)) / 6;
    report.discrepancies.push_back(
        {"corollary3.signs",
         "V((n+1)!/6) = " + std::to_string(n - 1) + ", V(n!/6) = " +
             std::to_string(cn2) + " (positive arguments)",
         "(n+1)!/6 = " + std::to_string(big) + " and n!/6 = " +
             std::to_string(nf / 6) +
             " are not eigenvalues; the listed eigenvalues are their negatives"});
  }

  if (!report.annihilated || !moments.verified || unexplained)
    report.status = CheckStatus::Fail;
  else if (!report.discrepancies.empty())
    report.status = CheckStatus::Flagged;
  else
    report.status = CheckStatus::Pass;

  if (specialization) {
    report.specialization = specialization;
    for (const auto &l : report.verified.eigenvalues)
      report.specialized_eigenvalues.push_back(l.specialize(*specialization));
  }
  return report;
}

} // namespace permspec
