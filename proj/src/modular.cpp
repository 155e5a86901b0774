#include "permspec/modular.hpp"

#include <algorithm>
#include <stdexcept>

namespace permspec::modular {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1)
      r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (const std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0)
      return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (const std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite)
      return false;
  }
  return true;
}

std::uint64_t random_prime(std::mt19937_64 &rng) {
  constexpr std::uint64_t lo = std::uint64_t{1} << 30;
  for (;;) {
    const std::uint64_t candidate = (lo + rng() % lo) | 1;
    if (is_prime(candidate))
      return candidate;
  }
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0)
    throw std::domain_error("zero has no inverse mod p");
  return pow_mod(a, p - 2, p);
}

std::uint64_t residue(const mpq_class &q, std::uint64_t p) {
  mpz_class num = q.get_num() % static_cast<unsigned long>(p);
  if (num < 0)
    num += static_cast<unsigned long>(p);
  const mpz_class den = q.get_den() % static_cast<unsigned long>(p);
  if (den == 0)
    throw std::domain_error("prime divides the denominator");
  return mul_mod(num.get_ui(), inverse_mod(den.get_ui(), p), p);
}

std::array<std::uint64_t, 256> residues(const Assignment &assignment,
                                        std::uint64_t p) {
  std::array<std::uint64_t, 256> out{};
  for (const auto &[v, q] : assignment)
    out[v.code()] = residue(q, p);
  return out;
}

std::size_t rank_mod_p(std::vector<std::uint64_t> m, std::size_t rows,
                       std::size_t cols, std::uint64_t p) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot * cols + c] == 0)
      ++pivot;
    if (pivot == rows)
      continue;
    if (pivot != rank)
      std::swap_ranges(m.begin() + pivot * cols, m.begin() + (pivot + 1) * cols,
                       m.begin() + rank * cols);
    const std::uint64_t inv = inverse_mod(m[rank * cols + c], p);
    for (std::size_t k = c; k < cols; ++k)
      m[rank * cols + k] = mul_mod(m[rank * cols + k], inv, p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const std::uint64_t f = m[r * cols + c];
      if (f == 0)
        continue;
      // p < 2^31, so f * x < 2^62 and fits in 64 bits
      for (std::size_t k = c; k < cols; ++k)
        m[r * cols + k] = (m[r * cols + k] + (p - f) * m[rank * cols + k]) % p;
    }
    ++rank;
  }
  return rank;
}

RankResult agreed_rank(const MatrixBuilder &build, std::size_t rows,
                       std::size_t cols, std::mt19937_64 &rng, int prime_count,
                       int max_rounds) {
  RankResult result;
  for (int round = 1; round <= max_rounds; ++round) {
    result.rounds = round;
    result.primes.clear();
    result.ranks.clear();
    while (static_cast<int>(result.primes.size()) < prime_count) {
      const auto p = random_prime(rng);
      if (std::find(result.primes.begin(), result.primes.end(), p) ==
          result.primes.end())
        result.primes.push_back(p);
    }
    for (const auto p : result.primes)
      result.ranks.push_back(rank_mod_p(build(p), rows, cols, p));
    result.rank = *std::max_element(result.ranks.begin(), result.ranks.end());
    result.agreed = std::all_of(result.ranks.begin(), result.ranks.end(),
                                [&](std::size_t r) { return r == result.rank; });
    if (result.agreed)
      return result;
  }
  return result;
}

} // namespace permspec::modular
