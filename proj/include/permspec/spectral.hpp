#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "permspec/algebra.hpp"
#include "permspec/modular.hpp"
#include "permspec/perm.hpp"
#include "permspec/poly.hpp"

namespace permspec {

/// Eigenvalues with multiplicities for the left-multiplication operator of
/// sum_sigma s(sigma) sigma.
struct SpectrumClaim {
  StatisticKind kind = StatisticKind::DesX;
  int n = 1;
  std::vector<Polynomial> eigenvalues;
  std::vector<std::int64_t> multiplicities;
};

/// Roots c_i of a claimed minimal polynomial prod (X - c_i).
struct MinimalPolynomialClaim {
  std::vector<Polynomial> roots;
};

/// The published spectrum, with multiplicities exactly as stated (including
/// the known misprints).
SpectrumClaim stated_spectrum(StatisticKind kind, int n);

/// {0, (n!/2) d_n, -(n-2)! d_n} for DesX (n >= 3); {0, -Lambda, -Delta, Omega}
/// for InvX (n >= 4). Throws DomainError otherwise.
MinimalPolynomialClaim stated_minimal_polynomial(StatisticKind kind, int n);

/// A nonzero coefficient of a group algebra element.
struct CoefficientWitness {
  Permutation where;
  Polynomial value;
  std::string to_string() const;
};

/// First nonzero coefficient in rank order, if any.
std::optional<CoefficientWitness> first_nonzero(const GroupAlgebraElement &e);

/// Lazily computed powers S^0 = identity, S^1 = S, S^2, ...
class PowerTable {
public:
  explicit PowerTable(GroupAlgebraElement base);

  const GroupAlgebraElement &base() const { return powers_[1]; }
  int degree() const { return base().degree(); }
  const GroupAlgebraElement &power(int k);

private:
  std::vector<GroupAlgebraElement> powers_;
};

/// Coefficients e_0..e_r of prod_i (x - c_i) = sum_k e_k x^k.
std::vector<Polynomial> expand_roots(std::span<const Polynomial> roots);

/// prod_i (S - c_i id), expanded through powers of S.
GroupAlgebraElement product_via_powers(PowerTable &powers,
                                       std::span<const Polynomial> roots);

struct AnnihilationResult {
  bool annihilated = false;
  std::optional<CoefficientWitness> witness;
};

/// prod_i (S - c_i id) by iterated convolution; annihilated iff the product is
/// the zero element, else the first nonzero coefficient is the witness.
AnnihilationResult check_annihilation(const GroupAlgebraElement &s,
                                      std::span<const Polynomial> roots);

struct SubsetProduct {
  std::size_t omitted = 0; // index of the dropped root
  std::optional<CoefficientWitness> witness; // set iff the product is nonzero
};

/// One coefficient of a proper-divisor product compared against a closed form.
struct ClosedFormWitness {
  std::string label;
  std::string factors;
  Monomial monomial;
  Integer computed;
  Integer closed_form;
  bool matches() const { return computed == closed_form; }
};

struct ProperDivisorResult {
  std::vector<SubsetProduct> subsets;
  std::vector<ClosedFormWitness> witnesses; // InvX with n >= 4 only
  bool all_subsets_nonzero() const;
  bool witnesses_match() const;
  bool passed() const { return all_subsets_nonzero() && witnesses_match(); }
};

/// Every product over a maximal proper subset of the roots must be nonzero.
/// For the inversion element (n >= 4, roots {0, Omega, -Lambda, -Delta}) the
/// three identity coefficients [X_{1,4}^3], [X_{1,3}^3], [X_{1,3}^3] of the
/// products (S+Lambda)(S-Omega)S, (S+Delta)(S-Omega)S and
/// (S+Lambda)(S+Delta)(S-Omega) are compared against their closed forms.
ProperDivisorResult check_proper_divisors_fail(PowerTable &powers,
                                               std::span<const Polynomial> roots);

/// The three published closed forms, as functions of n.
Integer inversion_witness_closed_form(int which, int n);

/// Strictly positive random rationals a/b with 1 <= a <= 9, 1 <= b <= 4 for
/// every variable of the family at degree n.
Assignment random_positive_assignment(VariableFamily family, int n,
                                      std::mt19937_64 &rng);

/// X_k = 1 / X_{i,j} = 1 for every variable.
Assignment unit_assignment(VariableFamily family, int n);

/// X_k = k.
Assignment index_assignment(int n);

struct MultiplicityResult {
  bool verified = false; // identities hold exactly with the solved values
  std::vector<std::int64_t> multiplicities;
  Assignment specialization; // point used to solve the Vandermonde system
  std::string failure;
};

/// Solves sum_i m_i lambda_i^k = trace(S^k) = n! S^k(id), k = 0..r-1, at a
/// random specialization where the lambda_i are distinct, then verifies the
/// identities symbolically for the solved m_i. Retries the specialization up
/// to 8 times.
MultiplicityResult verify_multiplicities(PowerTable &powers,
                                         std::span<const Polynomial> eigenvalues,
                                         std::mt19937_64 &rng);

struct RowSumResult {
  Polynomial row_sum;       // common row sum, if rows_equal
  Polynomial statistic_sum; // sum_sigma s(sigma)
  bool rows_equal = false;
  bool ones_eigenvector = false;
  std::size_t dimension = 0;
  modular::RankResult rank; // of M - P I at `point`
  Assignment point;
  bool eigenspace_one_dimensional() const {
    return rank.agreed && rank.rank + 1 == dimension;
  }
  bool passed() const {
    return rows_equal && ones_eigenvector && eigenspace_one_dimensional();
  }
};

/// Row sums of the statistic matrix, the all-ones eigenvector and the
/// dimension of its eigenspace (modular rank at a positive random point).
RowSumResult row_sum_eigen_check(StatisticKind kind, int n,
                                 std::mt19937_64 &rng);

struct KernelDimension {
  Polynomial eigenvalue;
  mpq_class value; // eigenvalue at the specialization
  std::size_t dimension = 0;
  modular::RankResult rank;
};

/// dim ker(M(x) - lambda(x) I) for each eigenvalue by modular rank.
std::vector<KernelDimension>
kernel_dimensions(const PolynomialMatrix &m, std::span<const Polynomial> eigenvalues,
                  const Assignment &point, std::mt19937_64 &rng);

/// A statement in the literature that exact computation contradicts.
struct Discrepancy {
  std::string location;
  std::string paper_says;
  std::string oracle_says;
};

enum class CheckStatus { Pass, Fail, Flagged };
std::string to_string(CheckStatus status);

struct SpectrumReport {
  SpectrumClaim stated;     // as published
  SpectrumClaim verified;   // eigenvalues with moment-verified multiplicities
  bool annihilated = false; // prod (S - lambda_i) == 0
  bool moments_verified = false;
  CheckStatus status = CheckStatus::Fail;
  std::vector<Discrepancy> discrepancies;
  std::optional<Assignment> specialization;
  std::vector<mpq_class> specialized_eigenvalues; // when specialized
};

/// Verifies the stated spectrum for (kind, n): annihilation by the stated
/// eigenvalues plus moment-identity multiplicities. Mismatches against the
/// statement are Flagged when they are known misprints (the zero eigenvalue
/// of the inversion operator, and the scalar inversion multiplicities and
/// signs for n >= 4) and Fail otherwise.
SpectrumReport spectrum_report(StatisticKind kind, int n,
                               const std::optional<Assignment> &specialization,
                               std::mt19937_64 &rng);

std::string to_string(const mpq_class &q);

} // namespace permspec
