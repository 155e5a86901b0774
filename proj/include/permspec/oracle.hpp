#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "permspec/perm.hpp"
#include "permspec/poly.hpp"

namespace permspec::oracle {

/// Largest n accepted by enumerate_subset.
inline constexpr int kEnumerationLimit = 6;

/// One of the permutation subsets used by the counting identities.
struct SubsetSpec {
  enum class Kind {
    Adjacent,      // sigma^-1(j) - sigma^-1(i) = 1
    Separated,     // sigma^-1(j) - sigma^-1(i) > 1
    ValueOrder,    // sigma(i) > sigma(j)
    PositionOrder, // sigma^-1(i) > sigma^-1(j)
    Restricted,    // ValueOrder(i, j) with sigma^-1(i2) = a, sigma^-1(j2) = b
  };
  Kind kind = Kind::ValueOrder;
  int i = 1, j = 2;
  int i2 = 0, a = 0, j2 = 0, b = 0;

  static SubsetSpec adjacent(int i, int j) { return {Kind::Adjacent, i, j}; }
  static SubsetSpec separated(int i, int j) { return {Kind::Separated, i, j}; }
  static SubsetSpec value_order(int i, int j) { return {Kind::ValueOrder, i, j}; }
  static SubsetSpec position_order(int i, int j) {
    return {Kind::PositionOrder, i, j};
  }
  static SubsetSpec restricted(int i1, int j1, int i2, int a, int j2, int b) {
    return {Kind::Restricted, i1, j1, i2, a, j2, b};
  }

  bool contains(const Permutation &s) const;
  std::string to_string() const;
};

/// Members of the subset, filtered from all of S_n in lexicographic order.
/// Throws DomainError for indices outside [n] or n > kEnumerationLimit.
std::vector<Permutation> enumerate_subset(const SubsetSpec &spec, int n);
std::size_t subset_size(const SubsetSpec &spec, int n);

/// chi_{i,j} = j - i - 1 for i < j.
struct Chi {
  int i, j;
  int value() const;
};
int chi(int i, int j);

/// Outcome of one identity family: every instance is compared exactly and the
/// first violation is kept.
struct LemmaResult {
  std::string id;
  int n = 0;
  bool passed = true;
  std::size_t checked = 0;
  std::string witness; // first violation, empty when passed
  std::string value;   // an informative computed value, if any

  void expect(bool ok, const std::string &where, const Integer &got,
              const Integer &want);
  void expect(bool ok, const std::string &where, const Polynomial &got,
              const Polynomial &want);
};

LemmaResult check_lemma_2_3(int n);
LemmaResult check_lemma_2_4(int n);

/// Pi_n(tau) = sum_sigma desX(tau sigma) desX(sigma^-1), by direct double loop.
Polynomial compute_pi_n(const Permutation &tau);
LemmaResult check_lemma_3_1(int n);
LemmaResult check_lemma_3_2(int n);

LemmaResult check_lemma_4_1(int n);
LemmaResult check_lemma_4_2(int n);

/// f2(pi) = sum_sigma invX(sigma^-1) invX(sigma pi).
Polynomial compute_f2_brute(const Permutation &pi);
/// f3(pi) = sum_{sigma, tau} invX(sigma^-1) invX(sigma tau^-1) invX(tau pi).
Polynomial compute_f3_brute(const Permutation &pi);
/// f2 or f3 for every permutation, indexed by rank.
std::vector<Polynomial> all_f2_brute(int n);
std::vector<Polynomial> all_f3_brute(int n);

/// Coefficient formulas for f2, checked against brute force (n <= 5) or
/// against supplied values indexed by rank.
LemmaResult check_lemma_4_3(int n);
LemmaResult check_lemma_4_3(int n, std::span<const Polynomial> f2);

LemmaResult check_lemma_4_4(int n);

LemmaResult check_lemma_4_5(int n);
LemmaResult check_lemma_4_5(int n, std::span<const Polynomial> f3);

LemmaResult check_lemma_4_6(int n);

/// f(pi) = Lambda Delta invX(pi) + (Lambda + Delta) f2(pi) + f3(pi) is
/// constant, with the three coefficient formulas for f(id).
LemmaResult check_lemma_4_7(int n);
LemmaResult check_lemma_4_7(int n, std::span<const Polynomial> f2,
                            std::span<const Polynomial> f3);

} // namespace permspec::oracle
