#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "permspec/poly.hpp"

namespace permspec::modular {

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Uniform random prime in (2^30, 2^31).
std::uint64_t random_prime(std::mt19937_64 &rng);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p);

/// num/den mod p; throws std::domain_error if p divides the denominator.
std::uint64_t residue(const mpq_class &q, std::uint64_t p);

/// Residue of every assigned variable, indexed by VariableId::code().
std::array<std::uint64_t, 256> residues(const Assignment &assignment,
                                        std::uint64_t p);

/// Rank of a row-major rows x cols matrix over GF(p). Takes the matrix by
/// value and eliminates in place.
std::size_t rank_mod_p(std::vector<std::uint64_t> m, std::size_t rows,
                       std::size_t cols, std::uint64_t p);

/// Builds the reduced matrix for a given prime.
using MatrixBuilder = std::function<std::vector<std::uint64_t>(std::uint64_t)>;

struct RankResult {
  std::size_t rank = 0;
  bool agreed = false;
  std::vector<std::uint64_t> primes; // primes of the deciding round
  std::vector<std::size_t> ranks;    // rank per prime, same order
  int rounds = 0;
};

/// Rank over several random primes. A round succeeds when every prime
/// reports the same rank; otherwise a fresh set of primes is drawn, up to
/// max_rounds rounds.
RankResult agreed_rank(const MatrixBuilder &build, std::size_t rows,
                       std::size_t cols, std::mt19937_64 &rng,
                       int prime_count = 3, int max_rounds = 4);

} // namespace permspec::modular
