#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "permspec/errors.hpp"

namespace permspec {

class Polynomial;

/// Largest supported degree. Packed variable codes and rank tables assume it.
inline constexpr int kMaxDegree = 8;

/// n! for 0 <= n <= 20.
std::uint64_t factorial(int n);

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
std::int64_t binomial(int n, int k);

/// A bijection of [n] in one-line form. Indices and images are 1-based in the
/// public interface and stored 0-based.
class Permutation {
public:
  static Permutation identity(int n);

  /// Builds from one-line notation (1-based images). Throws DomainError when
  /// the images are not a rearrangement of 1..n.
  static Permutation from_one_line(std::span<const int> images);
  static Permutation from_one_line(std::initializer_list<int> images);

  /// Inverse of rank(): the r-th permutation of S_n in lexicographic order.
  static Permutation unrank(int n, std::size_t r);

  int degree() const { return n_; }

  /// sigma(k) for 1 <= k <= n.
  int operator()(int k) const { return images_[k - 1] + 1; }

  /// 0-based image, for hot loops.
  int at0(int k) const { return images_[k]; }

  std::vector<int> one_line() const;

  Permutation inverse() const;

  /// Position in the lexicographic enumeration of S_n (Lehmer code).
  std::size_t rank() const;

  bool is_identity() const;

  std::string to_string() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend std::strong_ordering operator<=>(const Permutation &,
                                          const Permutation &) = default;

private:
  Permutation() = default;

  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxDegree> images_{};
};

/// (s o t)(k) = s(t(k)). Throws DomainError on degree mismatch.
Permutation compose(const Permutation &s, const Permutation &t);

/// All n! permutations in lexicographic order of one-line form; the index in
/// the returned vector equals rank().
std::vector<Permutation> permutations(int n);

struct DescentSet {
  std::vector<int> positions; // ascending, each in [1, n-1]
  friend bool operator==(const DescentSet &, const DescentSet &) = default;
};

struct InversionSet {
  std::vector<std::pair<int, int>> pairs; // lexicographic, each i < j
  friend bool operator==(const InversionSet &, const InversionSet &) = default;
};

DescentSet descent_set(const Permutation &s);
InversionSet inversion_set(const Permutation &s);

enum class StatisticKind { DesX, InvX, Des, Maj, Inv };

/// True for the polynomial-valued kinds DesX and InvX.
bool is_multinomial(StatisticKind kind);

std::string to_string(StatisticKind kind);

/// Parses "desx", "invx", "des", "maj", "inv" (case-insensitive).
StatisticKind parse_statistic_kind(std::string_view text);

/// desX -> sum X_k over descents; invX -> sum X_{i,j} over inversions;
/// des, maj, inv -> the corresponding integer as a constant polynomial.
Polynomial statistic(StatisticKind kind, const Permutation &s);

} // namespace permspec
