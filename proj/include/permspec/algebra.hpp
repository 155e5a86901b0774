#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "permspec/perm.hpp"
#include "permspec/poly.hpp"

namespace permspec {

/// Polynomial degree allowed in convolution outputs. Verification never
/// multiplies more than four linear factors; anything larger is a logic bug.
inline constexpr int kDegreeCap = 4;

/// Largest n for which n! x n! matrices are materialized.
inline constexpr int kMatrixExportLimit = 6;

/// Largest n for which the quotient table is precomputed.
inline constexpr int kTableLimit = 7;

/// Worker threads for the convolution kernel: PERMSPEC_THREADS if set to a
/// positive integer, otherwise the hardware concurrency.
int worker_count();

/// Shared, immutable lookup tables for S_n in lexicographic rank order.
class GroupTables {
public:
  /// Cached per n; safe to call concurrently.
  static const GroupTables &get(int n);

  int degree() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation> &elements() const { return elements_; }
  std::size_t inverse_rank(std::size_t r) const { return inverse_[r]; }

  /// rank(h^-1 o g).
  std::size_t left_quotient(std::size_t h, std::size_t g) const {
    if (!quotient_.empty())
      return quotient_[h * order() + g];
    return compose(elements_[inverse_[h]], elements_[g]).rank();
  }

private:
  explicit GroupTables(int n);

  int n_;
  std::vector<Permutation> elements_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint16_t> quotient_; // empty above kTableLimit
};

/// Element of the group algebra Z[X][S_n]: one polynomial per permutation,
/// stored densely by rank.
class GroupAlgebraElement {
public:
  static GroupAlgebraElement zero(int n);
  /// The unit: 1 at the identity, 0 elsewhere.
  static GroupAlgebraElement delta_identity(int n);
  /// sum_sigma s(sigma) sigma.
  static GroupAlgebraElement from_statistic(StatisticKind kind, int n);
  /// Throws DomainError unless coeffs.size() == n!.
  static GroupAlgebraElement from_coefficients(int n,
                                               std::vector<Polynomial> coeffs);

  int degree() const { return n_; }
  std::size_t size() const { return coeffs_.size(); }
  const Polynomial &operator[](std::size_t rank) const { return coeffs_[rank]; }
  const Polynomial &at(const Permutation &p) const { return coeffs_[p.rank()]; }
  const Polynomial &at_identity() const { return coeffs_[0]; }
  std::span<const Polynomial> coefficients() const { return coeffs_; }

  VariableFamily family() const;
  bool is_zero() const;
  int max_degree() const;
  Polynomial coefficient_sum() const;

  GroupAlgebraElement &operator+=(const GroupAlgebraElement &o);
  GroupAlgebraElement &operator-=(const GroupAlgebraElement &o);

  friend GroupAlgebraElement operator+(GroupAlgebraElement a,
                                       const GroupAlgebraElement &b) {
    return a += b;
  }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a,
                                       const GroupAlgebraElement &b) {
    return a -= b;
  }
  /// c * a for a polynomial scalar c.
  friend GroupAlgebraElement operator*(const Polynomial &c,
                                       const GroupAlgebraElement &a);

  friend bool operator==(const GroupAlgebraElement &,
                         const GroupAlgebraElement &) = default;

private:
  GroupAlgebraElement(int n, std::vector<Polynomial> coeffs)
      : n_(n), coeffs_(std::move(coeffs)) {}

  int n_ = 1;
  std::vector<Polynomial> coeffs_;
};

/// result(g) = sum_h a(h) * b(h^-1 g). Parallel over g; the result does not
/// depend on the worker count. Throws DomainError on degree mismatch and
/// std::logic_error if an output coefficient exceeds kDegreeCap.
GroupAlgebraElement convolve(const GroupAlgebraElement &a,
                             const GroupAlgebraElement &b);

/// a + c * identity.
GroupAlgebraElement add_scalar_identity(const GroupAlgebraElement &a,
                                        const Polynomial &c);

/// Trace of left multiplication by a on the regular representation: n! a(id).
Polynomial trace_of_left_multiplication(const GroupAlgebraElement &a);

/// Dense square matrix of polynomials.
struct PolynomialMatrix {
  std::size_t dim = 0;
  std::vector<Polynomial> entries; // row-major

  const Polynomial &operator()(std::size_t r, std::size_t c) const {
    return entries[r * dim + c];
  }
  Polynomial &operator()(std::size_t r, std::size_t c) {
    return entries[r * dim + c];
  }
};

/// The matrix of left multiplication by a: entry (rank pi, rank tau) is
/// a(pi tau^-1). Throws ResourceError above kMatrixExportLimit.
PolynomialMatrix left_multiplication_matrix(const GroupAlgebraElement &a);

/// (statistic(kind, pi o tau^-1))_{pi, tau} in lexicographic order.
PolynomialMatrix build_matrix(StatisticKind kind, int n);

/// Dense matrix product; used only to cross-check the convolution kernel.
PolynomialMatrix multiply(const PolynomialMatrix &a, const PolynomialMatrix &b);

} // namespace permspec
