#include "permspec/oracle.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <utility>

namespace permspec::oracle {

namespace {

using Pair = std::pair<int, int>;

std::int64_t fac(int n) { return static_cast<std::int64_t>(factorial(n)); }

/// a / b, which must divide exactly.
std::int64_t exact(std::int64_t a, std::int64_t b) {
  if (a % b != 0)
    throw std::logic_error("non-integral closed form: " + std::to_string(a) +
                           " / " + std::to_string(b));
  return a / b;
}

std::vector<Pair> all_pairs(int n) {
  std::vector<Pair> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      out.emplace_back(i, j);
  return out;
}

std::string pair_text(Pair p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

Monomial monomial_of(std::initializer_list<Pair> pairs) {
  std::vector<VariableId> vars;
  for (const auto &[i, j] : pairs)
    vars.push_back(VariableId::pair(i, j));
  return Monomial::from_variables(vars);
}

int position_of(const Permutation &s, int value) {
  for (int k = 1; k <= s.degree(); ++k)
    if (s(k) == value)
      return k;
  throw std::logic_error("value not in permutation");
}

void check_range(int n, int lo, int hi, const char *what) {
  if (n < lo || n > hi)
    throw DomainError(std::string(what) + " needs " + std::to_string(lo) +
                      " <= n <= " + std::to_string(hi));
}

/// Whether pi keeps the pair in order, and chi of its image pair sorted.
struct Image {
  bool ascending;
  int chi;
};

Image image(const Permutation &pi, Pair p) {
  const int x = pi(p.first), y = pi(p.second);
  return {x < y, std::abs(y - x) - 1};
}

LemmaResult start(std::string id, int n) {
  LemmaResult r;
  r.id = std::move(id);
  r.n = n;
  return r;
}

} // namespace

// ---------------------------------------------------------------------------
// Subsets

bool SubsetSpec::contains(const Permutation &s) const {
  switch (kind) {
  case Kind::Adjacent:
    return position_of(s, j) - position_of(s, i) == 1;
  case Kind::Separated:
    return position_of(s, j) - position_of(s, i) > 1;
  case Kind::ValueOrder:
    return s(i) > s(j);
  case Kind::PositionOrder:
    return position_of(s, i) > position_of(s, j);
  case Kind::Restricted:
    return s(i) > s(j) && s(a) == i2 && s(b) == j2;
  }
  return false;
}

std::string SubsetSpec::to_string() const {
  const std::string ij = std::to_string(i) + "," + std::to_string(j);
  switch (kind) {
  case Kind::Adjacent:
    return "Adjacent(" + ij + ")";
  case Kind::Separated:
    return "Separated(" + ij + ")";
  case Kind::ValueOrder:
    return "ValueOrder(" + ij + ")";
  case Kind::PositionOrder:
    return "PositionOrder(" + ij + ")";
  case Kind::Restricted:
    return "Restricted(ValueOrder(" + ij + "), " + std::to_string(i2) + "->" +
           std::to_string(a) + ", " + std::to_string(j2) + "->" +
           std::to_string(b) + ")";
  }
  return "?";
}

std::vector<Permutation> enumerate_subset(const SubsetSpec &spec, int n) {
  if (n < 1 || n > kEnumerationLimit)
    throw DomainError("enumeration limited to 1 <= n <= " +
                      std::to_string(kEnumerationLimit));
  auto in_range = [n](int k) { return k >= 1 && k <= n; };
  bool ok = in_range(spec.i) && in_range(spec.j) && spec.i != spec.j;
  if (spec.kind == SubsetSpec::Kind::Restricted)
    ok = ok && in_range(spec.i2) && in_range(spec.j2) && in_range(spec.a) &&
         in_range(spec.b);
  if (!ok)
    throw DomainError("subset indices out of range: " + spec.to_string());
  std::vector<Permutation> out;
  for (const auto &s : permutations(n))
    if (spec.contains(s))
      out.push_back(s);
  return out;
}

std::size_t subset_size(const SubsetSpec &spec, int n) {
  return enumerate_subset(spec, n).size();
}

int Chi::value() const {
  if (i >= j)
    throw DomainError("chi needs i < j");
  return j - i - 1;
}

int chi(int i, int j) { return Chi{i, j}.value(); }

// ---------------------------------------------------------------------------
// Results

void LemmaResult::expect(bool ok, const std::string &where, const Integer &got,
                         const Integer &want) {
  ++checked;
  if (ok || !passed)
    return;
  passed = false;
  witness = where + ": computed " + got.to_string() + ", formula " +
            want.to_string();
}

void LemmaResult::expect(bool ok, const std::string &where,
                         const Polynomial &got, const Polynomial &want) {
  ++checked;
  if (ok || !passed)
    return;
  passed = false;
  witness = where + ": computed " + got.to_string() + ", formula " +
            want.to_string();
}

// ---------------------------------------------------------------------------
// Statistic sums

LemmaResult check_lemma_2_3(int n) {
  check_range(n, 3, kMaxDegree, "lemma2.3");
  LemmaResult r = start("lemma2.3", n);
  Polynomial total;
  std::int64_t des = 0, maj = 0;
  for (const auto &s : permutations(n)) {
    total += statistic(StatisticKind::DesX, s);
    des += statistic(StatisticKind::Des, s).constant_term().to_int64();
    maj += statistic(StatisticKind::Maj, s).constant_term().to_int64();
  }
  Polynomial want;
  for (int k = 1; k < n; ++k)
    want += Polynomial::variable(VariableId::single(k), Integer(fac(n) / 2));
  r.expect(total == want, "sum of desX", total, want);
  const std::int64_t want_des = (n - 1) * fac(n) / 2;
  const std::int64_t want_maj = fac(n) / 2 * binomial(n, 2);
  r.expect(des == want_des, "sum of des", Integer(des), Integer(want_des));
  r.expect(maj == want_maj, "sum of maj", Integer(maj), Integer(want_maj));
  r.value = total.to_string();
  return r;
}

LemmaResult check_lemma_2_4(int n) {
  check_range(n, 4, kMaxDegree, "lemma2.4");
  LemmaResult r = start("lemma2.4", n);
  Polynomial total;
  std::int64_t inv = 0;
  for (const auto &s : permutations(n)) {
    total += statistic(StatisticKind::InvX, s);
    inv += statistic(StatisticKind::Inv, s).constant_term().to_int64();
  }
  Polynomial want;
  for (const auto &[i, j] : all_pairs(n))
    want += Polynomial::variable(VariableId::pair(i, j), Integer(fac(n) / 2));
  r.expect(total == want, "sum of invX", total, want);
  const std::int64_t want_inv = fac(n) / 2 * binomial(n, 2);
  r.expect(inv == want_inv, "sum of inv", Integer(inv), Integer(want_inv));
  r.value = total.to_string();
  return r;
}

// ---------------------------------------------------------------------------
// Descent products

Polynomial compute_pi_n(const Permutation &tau) {
  PolynomialAccumulator acc;
  for (const auto &s : permutations(tau.degree()))
    acc.add_product(statistic(StatisticKind::DesX, compose(tau, s)),
                    statistic(StatisticKind::DesX, s.inverse()));
  return acc.take();
}

LemmaResult check_lemma_3_1(int n) {
  check_range(n, 3, kEnumerationLimit, "lemma3.1");
  LemmaResult r = start("lemma3.1", n);
  const Polynomial dn = named(NamedPolynomial::DescentSum, n);
  // sum over sigma in Adjacent(i, j) of X_{sigma^-1(i)} desX(sigma^-1)
  auto side = [n](int i, int j) {
    Polynomial total;
    for (const auto &s : enumerate_subset(SubsetSpec::adjacent(i, j), n)) {
      const auto inv = s.inverse();
      total += Polynomial::variable(VariableId::single(inv(i))) *
               statistic(StatisticKind::DesX, inv);
    }
    return total;
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const std::string where =
          "(i,j) = (" + std::to_string(i) + "," + std::to_string(j) + ")";
      const Polynomial lhs = side(i, j);
      Polynomial rhs = side(j, i);
      if (j == i + 1)
        rhs -= Integer(fac(n - 2)) *
               (Polynomial::variable(VariableId::single(i)) * dn);
      r.expect(lhs == rhs, where, lhs, rhs);
    }
  return r;
}

LemmaResult check_lemma_3_2(int n) {
  check_range(n, 3, kEnumerationLimit, "lemma3.2");
  LemmaResult r = start("lemma3.2", n);
  const Polynomial dn = named(NamedPolynomial::DescentSum, n);
  const auto elements = permutations(n);
  const Polynomial at_identity = compute_pi_n(elements[0]);
  for (const auto &tau : elements) {
    const Polynomial got = compute_pi_n(tau);
    const Polynomial want =
        at_identity -
        Integer(fac(n - 2)) * (statistic(StatisticKind::DesX, tau) * dn);
    r.expect(got == want, "tau = " + tau.to_string(), got, want);
  }
  r.value = at_identity.to_string();
  return r;
}

// ---------------------------------------------------------------------------
// Counting identities

LemmaResult check_lemma_4_1(int n) {
  check_range(n, 4, kEnumerationLimit, "lemma4.1");
  LemmaResult r = start("lemma4.1", n);
  const std::int64_t f2 = fac(n - 2), f3 = fac(n - 3);
  const auto pairs = all_pairs(n);
  auto count = [n](int i1, int j1, int i2, int a, int j2, int b) {
    return static_cast<std::int64_t>(
        subset_size(SubsetSpec::restricted(i1, j1, i2, a, j2, b), n));
  };
  auto expect = [&r](std::int64_t got, std::int64_t want, const std::string &w) {
    r.expect(got == want, w, Integer(got), Integer(want));
  };
  for (const auto &[i1, j1] : pairs)
    for (const auto &[i2, j2] : pairs) {
      const std::string base = "(i1,j1,i2,j2) = (" + std::to_string(i1) + "," +
                               std::to_string(j1) + "," + std::to_string(i2) +
                               "," + std::to_string(j2) + ")";
      expect(count(i1, j1, i2, j1, j2, i1), f2, base + ", a = j1, b = i1");
      expect(count(j1, i1, i2, i1, j2, j1), f2, base + ", a = i1, b = j1 (reversed)");
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
          if (a == b)
            continue;
          const bool a_in = a == i1 || a == j1;
          const bool b_in = b == i1 || b == j1;
          const std::string w =
              base + ", (a,b) = (" + std::to_string(a) + "," + std::to_string(b) + ")";
          std::int64_t forward = -1, reverse = -1;
          if (!a_in && !b_in) {
            forward = reverse = exact(f2, 2);
          } else if (a == i1 && !b_in) {
            forward = (i2 - 1) * f3;
            reverse = (n - i2 - 1) * f3;
          } else if (!a_in && b == i1) {
            forward = (j2 - 2) * f3;
            reverse = (n - j2) * f3;
          } else if (a == j1 && !b_in) {
            forward = (n - i2 - 1) * f3;
            reverse = (i2 - 1) * f3;
          } else if (!a_in && b == j1) {
            forward = (n - j2) * f3;
            reverse = (j2 - 2) * f3;
          } else {
            continue; // {a, b} = {i1, j1}, handled above
          }
          expect(count(i1, j1, i2, a, j2, b), forward, w);
          expect(count(j1, i1, i2, a, j2, b), reverse, w + " (reversed)");
        }
    }
  return r;
}

namespace {

/// #(PositionOrder(i1, j1) and ValueOrder(x, y)).
std::int64_t position_value_count(int n, int i1, int j1, int x, int y) {
  std::int64_t c = 0;
  for (const auto &s : permutations(n))
    if (SubsetSpec::position_order(i1, j1).contains(s) &&
        SubsetSpec::value_order(x, y).contains(s))
      ++c;
  return c;
}

} // namespace

LemmaResult check_lemma_4_2(int n) {
  check_range(n, 4, kEnumerationLimit, "lemma4.2");
  LemmaResult r = start("lemma4.2", n);
  const std::int64_t f2 = fac(n - 2), f3 = fac(n - 3);
  const auto pairs = all_pairs(n);
  for (const auto &p1 : pairs)
    for (const auto &p2 : pairs) {
      const auto [i1, j1] = p1;
      const auto [i2, j2] = p2;
      const std::int64_t cc = chi(i1, j1) * chi(i2, j2);
      const std::string w = pair_text(p1) + ", " + pair_text(p2);
      const std::int64_t a = position_value_count(n, i1, j1, i2, j2);
      const std::int64_t want_a = f3 * cc + exact(f2 * (n * n - n + 2), 4);
      r.expect(a == want_a, "(a) " + w, Integer(a), Integer(want_a));
      const std::int64_t b = position_value_count(n, i1, j1, j2, i2);
      const std::int64_t want_b = exact(f2 * (n * n - n - 2), 4) - f3 * cc;
      r.expect(b == want_b, "(b) " + w, Integer(b), Integer(want_b));
    }
  return r;
}

// ---------------------------------------------------------------------------
// Inversion products

Polynomial compute_f2_brute(const Permutation &pi) {
  const int n = pi.degree();
  PolynomialAccumulator acc;
  for (const auto &s : permutations(n))
    acc.add_product(statistic(StatisticKind::InvX, s.inverse()),
                    statistic(StatisticKind::InvX, compose(s, pi)));
  return acc.take();
}

Polynomial compute_f3_brute(const Permutation &pi) {
  const int n = pi.degree();
  const auto elements = permutations(n);
  PolynomialAccumulator acc;
  for (const auto &s : elements) {
    const Polynomial first = statistic(StatisticKind::InvX, s.inverse());
    if (first.is_zero())
      continue;
    for (const auto &t : elements) {
      const Polynomial second = statistic(StatisticKind::InvX, compose(s, t.inverse()));
      const Polynomial third = statistic(StatisticKind::InvX, compose(t, pi));
      if (second.is_zero() || third.is_zero())
        continue;
      acc.add_product(first, second * third);
    }
  }
  return acc.take();
}

std::vector<Polynomial> all_f2_brute(int n) {
  std::vector<Polynomial> out;
  for (const auto &pi : permutations(n))
    out.push_back(compute_f2_brute(pi));
  return out;
}

std::vector<Polynomial> all_f3_brute(int n) {
  std::vector<Polynomial> out;
  for (const auto &pi : permutations(n))
    out.push_back(compute_f3_brute(pi));
  return out;
}

namespace {

/// Closed forms for the degree-two coefficients of f2(pi).
std::int64_t f2_square_formula(int n, Pair p, const Permutation &pi) {
  const std::int64_t f2 = fac(n - 2), f3 = fac(n - 3);
  const auto img = image(pi, p);
  const std::int64_t c = chi(p.first, p.second);
  if (img.ascending)
    return f3 * c * img.chi + exact(f2 * (n * n - n + 2), 4);
  return exact(f2 * (n * n - n - 2), 4) - f3 * c * img.chi;
}

std::int64_t f2_mixed_formula(int n, Pair p1, Pair p2, const Permutation &pi) {
  const std::int64_t f2 = fac(n - 2), f3 = fac(n - 3);
  auto i1 = image(pi, p1), i2 = image(pi, p2);
  // the formulas list the ascending pair first
  if (!i1.ascending && i2.ascending) {
    std::swap(p1, p2);
    std::swap(i1, i2);
  }
  const std::int64_t c1 = chi(p1.first, p1.second), c2 = chi(p2.first, p2.second);
  if (i1.ascending && i2.ascending)
    return f3 * (c1 * i2.chi + i1.chi * c2) + exact(f2 * (n * n - n + 2), 2);
  if (i1.ascending)
    return f3 * (i1.chi * c2 - c1 * i2.chi) + fac(n) / 2;
  return exact(f2 * (n * n - n - 2), 2) - f3 * (c1 * i2.chi + i1.chi * c2);
}

} // namespace

LemmaResult check_lemma_4_3(int n, std::span<const Polynomial> f2) {
  check_range(n, 4, kMaxDegree, "lemma4.3");
  if (f2.size() != factorial(n))
    throw DomainError("lemma4.3 needs one f2 value per permutation");
  LemmaResult r = start("lemma4.3", n);
  const auto pairs = all_pairs(n);
  const auto elements = permutations(n);
  for (std::size_t rank = 0; rank < elements.size(); ++rank) {
    const auto &pi = elements[rank];
    for (std::size_t x = 0; x < pairs.size(); ++x)
      for (std::size_t y = x; y < pairs.size(); ++y) {
        const Monomial m = monomial_of({pairs[x], pairs[y]});
        const Integer got = f2[rank].coefficient_of(m);
        const std::int64_t want = x == y
                                      ? f2_square_formula(n, pairs[x], pi)
                                      : f2_mixed_formula(n, pairs[x], pairs[y], pi);
        r.expect(got == Integer(want),
                 "pi = " + pi.to_string() + ", [" + m.to_string() + "]", got,
                 Integer(want));
      }
    r.expect(f2[rank].degree() <= 2, "pi = " + pi.to_string() + ", degree",
             Integer(f2[rank].degree()), Integer(2));
  }
  return r;
}

LemmaResult check_lemma_4_3(int n) {
  check_range(n, 4, 5, "lemma4.3 by brute force");
  const auto f2 = all_f2_brute(n);
  return check_lemma_4_3(n, f2);
}

LemmaResult check_lemma_4_4(int n) {
  check_range(n, 4, 5, "lemma4.4");
  LemmaResult r = start("lemma4.4", n);
  const std::int64_t nf = fac(n), f2 = fac(n - 2), f3 = fac(n - 3);
  const auto pairs = all_pairs(n);

  // left[p][a][b] = #(PositionOrder(p) and ValueOrder(a, b))
  std::map<Pair, std::array<std::array<std::int64_t, kMaxDegree + 1>, kMaxDegree + 1>>
      left;
  for (const auto &p : pairs)
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        left[p][a][b] = a == b ? 0 : position_value_count(n, p.first, p.second, a, b);

  auto right = [&](int x, int y, Pair p2, int a, int b) -> std::int64_t {
    if (a == b)
      return 0;
    return static_cast<std::int64_t>(
        subset_size(SubsetSpec::restricted(x, y, p2.first, a, p2.second, b), n));
  };

  for (const auto &p1 : pairs)
    for (const auto &p2 : pairs)
      for (const auto &p3 : pairs) {
        std::int64_t sum_a = 0, sum_b = 0;
        for (int a = 1; a <= n; ++a)
          for (int b = 1; b <= n; ++b) {
            if (left[p1][a][b] == 0)
              continue;
            sum_a += left[p1][a][b] * right(p3.first, p3.second, p2, a, b);
            sum_b += left[p1][a][b] * right(p3.second, p3.first, p2, a, b);
          }
        const std::int64_t c1 = chi(p1.first, p1.second);
        const std::int64_t c2 = chi(p2.first, p2.second);
        const std::int64_t c3 = chi(p3.first, p3.second);
        const std::int64_t core = exact(nf * nf, 8);
        const std::int64_t half = exact(f2 * f2, 2);
        const std::int64_t cubic = (n - 4) * f3 * f3 * c1 * c2 * c3;
        const std::int64_t quad = f3 * f2 * (c1 * c2 + c1 * c3 + c2 * c3);
        const std::int64_t want_a = core - half - cubic - quad;
        const std::int64_t want_b = core + half + cubic + quad;
        const std::string w =
            pair_text(p1) + ", " + pair_text(p2) + ", " + pair_text(p3);
        r.expect(sum_a == want_a, "(a) " + w, Integer(sum_a), Integer(want_a));
        r.expect(sum_b == want_b, "(b) " + w, Integer(sum_b), Integer(want_b));
      }
  return r;
}

namespace {

std::int64_t f3_cube_formula(int n, Pair p, const Permutation &pi) {
  const std::int64_t F = fac(n), A = fac(n - 2), B = fac(n - 3), K = n - 4;
  const auto img = image(pi, p);
  const std::int64_t c = chi(p.first, p.second), cp = img.chi;
  const std::int64_t tail = K * B * B * c * c * cp + B * A * c * c + 2 * B * A * c * cp;
  if (img.ascending)
    return exact(F * F, 8) - exact(A * A, 2) - tail;
  return exact(F * F, 8) + exact(A * A, 2) + tail;
}

/// [X_p^2 X_q] f3(pi).
std::int64_t f3_square_formula(int n, Pair p1, Pair p3, const Permutation &pi) {
  const std::int64_t F = fac(n), A = fac(n - 2), B = fac(n - 3), K = n - 4;
  const auto m1 = image(pi, p1), m3 = image(pi, p3);
  const std::int64_t c1 = chi(p1.first, p1.second), c3 = chi(p3.first, p3.second);
  const std::int64_t cp1 = m1.chi, cp3 = m3.chi;
  const std::int64_t base = exact(3 * F * F, 8);
  const std::int64_t cubic_plus = K * B * B * (c1 * c1 * cp3 + 2 * c1 * c3 * cp1);
  const std::int64_t cubic_minus = K * B * B * (c1 * c1 * cp3 - 2 * c1 * c3 * cp1);
  const std::int64_t quad_plus =
      B * A * (c1 * c1 + 2 * c1 * cp3 + 2 * c1 * c3 + 2 * c1 * cp1 + 2 * c3 * cp1);
  const std::int64_t quad_minus =
      B * A * (c1 * c1 + 2 * c1 * cp3 - 2 * c1 * c3 - 2 * c1 * cp1 - 2 * c3 * cp1);
  if (m1.ascending && m3.ascending)
    return base - exact(3 * A * A, 2) - cubic_plus - quad_plus;
  if (m1.ascending)
    return base - exact(A * A, 2) + cubic_minus + quad_minus;
  if (m3.ascending)
    return base + exact(A * A, 2) - cubic_minus - quad_minus;
  return base + exact(3 * A * A, 2) + cubic_plus + quad_plus;
}

/// [X_p X_q X_r] f3(pi) for three distinct pairs.
std::int64_t f3_distinct_formula(int n, std::array<Pair, 3> p,
                                 const Permutation &pi) {
  const std::int64_t F = fac(n), A = fac(n - 2), B = fac(n - 3), K = n - 4;
  // ascending pairs first; the formulas are symmetric within each group
  std::stable_partition(p.begin(), p.end(),
                        [&](Pair q) { return image(pi, q).ascending; });
  std::array<std::int64_t, 3> c{}, cp{};
  int ascending = 0;
  for (int k = 0; k < 3; ++k) {
    c[k] = chi(p[k].first, p[k].second);
    const auto img = image(pi, p[k]);
    cp[k] = img.chi;
    ascending += img.ascending;
  }
  const std::int64_t base = exact(3 * F * F, 4);
  const std::int64_t t1 = c[0] * c[1] * cp[2], t2 = c[0] * cp[1] * c[2],
                     t3 = cp[0] * c[1] * c[2];
  const std::int64_t g1 = c[0] * c[1] + c[0] * cp[2] + c[1] * cp[2];
  const std::int64_t g2 = c[0] * c[2] + c[0] * cp[1] + c[2] * cp[1];
  const std::int64_t g3 = c[1] * c[2] + c[1] * cp[0] + c[2] * cp[0];
  const std::int64_t KB2 = 2 * K * B * B, BA2 = 2 * B * A;
  switch (ascending) {
  case 3:
    return base - 3 * A * A - KB2 * (t1 + t2 + t3) - BA2 * (g1 + g2 + g3);
  case 2:
    return base - A * A + KB2 * (t1 - t2 - t3) + BA2 * (g1 - g2 - g3);
  case 1:
    return base + A * A + KB2 * (t1 + t2 - t3) + BA2 * (g1 + g2 - g3);
  default:
    return base + 3 * A * A + KB2 * (t1 + t2 + t3) + BA2 * (g1 + g2 + g3);
  }
}

} // namespace

LemmaResult check_lemma_4_5(int n, std::span<const Polynomial> f3) {
  check_range(n, 4, kMaxDegree, "lemma4.5");
  if (f3.size() != factorial(n))
    throw DomainError("lemma4.5 needs one f3 value per permutation");
  LemmaResult r = start("lemma4.5", n);
  const auto pairs = all_pairs(n);
  const auto elements = permutations(n);
  for (std::size_t rank = 0; rank < elements.size(); ++rank) {
    const auto &pi = elements[rank];
    const std::string where = "pi = " + pi.to_string() + ", [";
    auto compare = [&](const Monomial &m, std::int64_t want) {
      const Integer got = f3[rank].coefficient_of(m);
      r.expect(got == Integer(want), where + m.to_string() + "]", got, Integer(want));
    };
    for (std::size_t x = 0; x < pairs.size(); ++x) {
      compare(monomial_of({pairs[x], pairs[x], pairs[x]}),
              f3_cube_formula(n, pairs[x], pi));
      for (std::size_t y = 0; y < pairs.size(); ++y)
        if (y != x)
          compare(monomial_of({pairs[x], pairs[x], pairs[y]}),
                  f3_square_formula(n, pairs[x], pairs[y], pi));
      for (std::size_t y = x + 1; y < pairs.size(); ++y)
        for (std::size_t z = y + 1; z < pairs.size(); ++z)
          compare(monomial_of({pairs[x], pairs[y], pairs[z]}),
                  f3_distinct_formula(n, {pairs[x], pairs[y], pairs[z]}, pi));
    }
  }
  return r;
}

LemmaResult check_lemma_4_5(int n) {
  check_range(n, 4, 4, "lemma4.5 by brute force");
  const auto f3 = all_f3_brute(n);
  return check_lemma_4_5(n, f3);
}

LemmaResult check_lemma_4_6(int n) {
  check_range(n, 4, kMaxDegree, "lemma4.6");
  LemmaResult r = start("lemma4.6", n);
  const std::int64_t A = fac(n - 2), B = fac(n - 3), K = n - 4;
  const Polynomial lambda = named(NamedPolynomial::Lambda, n);
  const Polynomial delta = named(NamedPolynomial::Delta, n);
  const Polynomial sum = lambda + delta;
  const Polynomial product = lambda * delta;
  const auto pairs = all_pairs(n);
  for (const auto &p : pairs) {
    const Integer got = sum.coefficient_of(monomial_of({p}));
    const std::int64_t want = 2 * A + K * B * chi(p.first, p.second);
    r.expect(got == Integer(want), "(a) " + pair_text(p), got, Integer(want));
  }
  for (std::size_t x = 0; x < pairs.size(); ++x)
    for (std::size_t y = x; y < pairs.size(); ++y) {
      const std::int64_t c1 = chi(pairs[x].first, pairs[x].second);
      const std::int64_t c2 = chi(pairs[y].first, pairs[y].second);
      const std::int64_t numerator =
          B * A * (2 * (n - 2) + K * c1 + K * c2 - 4 * c1 * c2);
      const std::int64_t want = exact(numerator, x == y ? 2 : 1);
      const Integer got = product.coefficient_of(monomial_of({pairs[x], pairs[y]}));
      r.expect(got == Integer(want),
               "(b) " + pair_text(pairs[x]) + ", " + pair_text(pairs[y]), got,
               Integer(want));
    }
  return r;
}

LemmaResult check_lemma_4_7(int n, std::span<const Polynomial> f2,
                            std::span<const Polynomial> f3) {
  check_range(n, 4, kMaxDegree, "lemma4.7");
  if (f2.size() != factorial(n) || f3.size() != factorial(n))
    throw DomainError("lemma4.7 needs f2 and f3 values per permutation");
  LemmaResult r = start("lemma4.7", n);
  const Polynomial lambda = named(NamedPolynomial::Lambda, n);
  const Polynomial delta = named(NamedPolynomial::Delta, n);
  const Polynomial product = lambda * delta;
  const Polynomial sum = lambda + delta;
  const auto elements = permutations(n);
  std::vector<Polynomial> f;
  for (std::size_t rank = 0; rank < elements.size(); ++rank)
    f.push_back(product * statistic(StatisticKind::InvX, elements[rank]) +
                sum * f2[rank] + f3[rank]);
  for (std::size_t rank = 1; rank < elements.size(); ++rank)
    r.expect(f[rank] == f[0], "f(" + elements[rank].to_string() + ") vs f(id)",
             f[rank], f[0]);

  const std::int64_t F = fac(n), A = fac(n - 2), B = fac(n - 3), K = n - 4;
  const std::int64_t q = n * n - n;
  const auto pairs = all_pairs(n);
  auto compare = [&](const Monomial &m, std::int64_t want) {
    const Integer got = f[0].coefficient_of(m);
    r.expect(got == Integer(want), "[" + m.to_string() + "] f(id)", got,
             Integer(want));
  };
  for (std::size_t x = 0; x < pairs.size(); ++x) {
    const std::int64_t c1 = chi(pairs[x].first, pairs[x].second);
    compare(monomial_of({pairs[x], pairs[x], pairs[x]}),
            exact(F * F, 8) + exact(A * A * (q + 1), 2) +
                exact(K * B * A * (q + 2), 4) * c1 - B * A * c1 * c1);
    for (std::size_t y = 0; y < pairs.size(); ++y) {
      if (y == x)
        continue;
      const std::int64_t c3 = chi(pairs[y].first, pairs[y].second);
      compare(monomial_of({pairs[x], pairs[x], pairs[y]}),
              exact(3 * F * F, 8) + exact(3 * A * F, 2) + exact(3 * A * A, 2) +
                  exact(K * B * A * (q + 2), 4) * (2 * c1 + c3) -
                  B * A * (c1 * c1 + 2 * c1 * c3));
    }
    for (std::size_t y = x + 1; y < pairs.size(); ++y)
      for (std::size_t z = y + 1; z < pairs.size(); ++z) {
        const std::int64_t c2 = chi(pairs[y].first, pairs[y].second);
        const std::int64_t c3 = chi(pairs[z].first, pairs[z].second);
        compare(monomial_of({pairs[x], pairs[y], pairs[z]}),
                exact(3 * F * F, 4) + 3 * A * F + 3 * A * A +
                    exact(K * B * A * (q + 2), 2) * (c1 + c2 + c3) -
                    2 * B * A * (c1 * c2 + c1 * c3 + c2 * c3));
      }
  }
  r.value = f[0].to_string();
  return r;
}

LemmaResult check_lemma_4_7(int n) {
  check_range(n, 4, 4, "lemma4.7 by brute force");
  const auto f2 = all_f2_brute(n);
  const auto f3 = all_f3_brute(n);
  return check_lemma_4_7(n, f2, f3);
}

} // namespace permspec::oracle
