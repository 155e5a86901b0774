#include "permspec/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "permspec/poly.hpp"

namespace permspec {

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20)
    throw DomainError("factorial argument out of range: " + std::to_string(n));
  std::uint64_t r = 1;
  for (int k = 2; k <= n; ++k)
    r *= static_cast<std::uint64_t>(k);
  return r;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n)
    return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

namespace {

void check_degree(int n) {
  if (n < 1 || n > kMaxDegree)
    throw DomainError("permutation degree must be in [1, " +
                      std::to_string(kMaxDegree) + "], got " +
                      std::to_string(n));
}

} // namespace

Permutation Permutation::identity(int n) {
  check_degree(n);
  Permutation p;
  p.n_ = static_cast<std::uint8_t>(n);
  for (int k = 0; k < n; ++k)
    p.images_[k] = static_cast<std::uint8_t>(k);
  return p;
}

Permutation Permutation::from_one_line(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  check_degree(n);
  Permutation p;
  p.n_ = static_cast<std::uint8_t>(n);
  std::array<bool, kMaxDegree> seen{};
  for (int k = 0; k < n; ++k) {
    const int v = images[k];
    if (v < 1 || v > n || seen[v - 1])
      throw DomainError("not a permutation of [" + std::to_string(n) + "]");
    seen[v - 1] = true;
    p.images_[k] = static_cast<std::uint8_t>(v - 1);
  }
  return p;
}

Permutation Permutation::from_one_line(std::initializer_list<int> images) {
  return from_one_line(std::span(images.begin(), images.size()));
}

Permutation Permutation::unrank(int n, std::size_t r) {
  check_degree(n);
  if (r >= factorial(n))
    throw DomainError("rank out of range");
  std::vector<std::uint8_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::uint8_t{0});
  Permutation p;
  p.n_ = static_cast<std::uint8_t>(n);
  for (int k = 0; k < n; ++k) {
    const auto f = factorial(n - 1 - k);
    const auto digit = r / f;
    r %= f;
    p.images_[k] = pool[digit];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return p;
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out(n_);
  for (int k = 0; k < n_; ++k)
    out[k] = images_[k] + 1;
  return out;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.n_ = n_;
  for (int k = 0; k < n_; ++k)
    p.images_[images_[k]] = static_cast<std::uint8_t>(k);
  return p;
}

std::size_t Permutation::rank() const {
  std::size_t r = 0;
  for (int k = 0; k < n_; ++k) {
    int smaller_later = 0;
    for (int l = k + 1; l < n_; ++l)
      smaller_later += images_[l] < images_[k];
    r = r * static_cast<std::size_t>(n_ - k) + smaller_later;
  }
  return r;
}

bool Permutation::is_identity() const {
  for (int k = 0; k < n_; ++k)
    if (images_[k] != k)
      return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string s = "(";
  for (int k = 0; k < n_; ++k) {
    if (k)
      s += ',';
    s += std::to_string(images_[k] + 1);
  }
  return s + ")";
}

Permutation compose(const Permutation &s, const Permutation &t) {
  if (s.degree() != t.degree())
    throw DomainError("compose: degree mismatch");
  std::vector<int> images(s.degree());
  for (int k = 0; k < s.degree(); ++k)
    images[k] = s.at0(t.at0(k)) + 1;
  return Permutation::from_one_line(images);
}

std::vector<Permutation> permutations(int n) {
  check_degree(n);
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  std::vector<int> line(n);
  std::iota(line.begin(), line.end(), 1);
  do {
    out.push_back(Permutation::from_one_line(line));
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

DescentSet descent_set(const Permutation &s) {
  DescentSet d;
  for (int k = 1; k < s.degree(); ++k)
    if (s(k) > s(k + 1))
      d.positions.push_back(k);
  return d;
}

InversionSet inversion_set(const Permutation &s) {
  InversionSet inv;
  for (int i = 1; i <= s.degree(); ++i)
    for (int j = i + 1; j <= s.degree(); ++j)
      if (s(i) > s(j))
        inv.pairs.emplace_back(i, j);
  return inv;
}

bool is_multinomial(StatisticKind kind) {
  return kind == StatisticKind::DesX || kind == StatisticKind::InvX;
}

std::string to_string(StatisticKind kind) {
  switch (kind) {
  case StatisticKind::DesX:
    return "desx";
  case StatisticKind::InvX:
    return "invx";
  case StatisticKind::Des:
    return "des";
  case StatisticKind::Maj:
    return "maj";
  case StatisticKind::Inv:
    return "inv";
  }
  return "?";
}

StatisticKind parse_statistic_kind(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (const auto k : {StatisticKind::DesX, StatisticKind::InvX,
                       StatisticKind::Des, StatisticKind::Maj,
                       StatisticKind::Inv})
    if (lower == to_string(k))
      return k;
  throw DomainError("unknown statistic '" + std::string(text) + "'");
}

Polynomial statistic(StatisticKind kind, const Permutation &s) {
  std::vector<Polynomial::Term> terms;
  std::int64_t scalar = 0;
  switch (kind) {
  case StatisticKind::DesX:
    for (const int k : descent_set(s).positions)
      terms.emplace_back(Monomial(VariableId::single(k)), 1);
    return Polynomial::from_terms(std::move(terms));
  case StatisticKind::InvX:
    for (const auto &[i, j] : inversion_set(s).pairs)
      terms.emplace_back(Monomial(VariableId::pair(i, j)), 1);
    return Polynomial::from_terms(std::move(terms));
  case StatisticKind::Des:
    scalar = static_cast<std::int64_t>(descent_set(s).positions.size());
    break;
  case StatisticKind::Maj:
    for (const int k : descent_set(s).positions)
      scalar += k;
    break;
  case StatisticKind::Inv:
    scalar = static_cast<std::int64_t>(inversion_set(s).pairs.size());
    break;
  }
  return Polynomial::constant(scalar);
}

} // namespace permspec
