#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "permspec/errors.hpp"
#include "permspec/integer.hpp"

namespace permspec {

/// Variables either come from the descent family X_k or the inversion family
/// X_{i,j}. Constants belong to neither.
enum class VariableFamily : std::uint8_t { None, Single, Pair };

/// Combined family of an operation's operands; throws DomainError when a
/// Single-family value meets a Pair-family value.
VariableFamily join_families(VariableFamily a, VariableFamily b);

/// X_k (Single) or X_{i,j} (Pair). Encoded in one byte: k for Single and
/// (i << 4) | j for Pair, so byte order is X_1 < X_2 < ... and pairs are
/// ordered lexicographically.
class VariableId {
public:
  static VariableId single(int k);
  static VariableId pair(int i, int j);
  static VariableId from_code(std::uint8_t code);

  VariableFamily family() const {
    return code_ < 16 ? VariableFamily::Single : VariableFamily::Pair;
  }
  int index() const { return code_; } // Single only
  int first() const { return code_ >> 4; } // Pair only
  int second() const { return code_ & 0xF; } // Pair only
  std::uint8_t code() const { return code_; }

  /// "X[3]" or "X[1,4]".
  std::string to_string() const;

  friend auto operator<=>(const VariableId &, const VariableId &) = default;

private:
  explicit VariableId(std::uint8_t code) : code_(code) {}
  std::uint8_t code_ = 1;
};

/// A monomial of total degree <= kMaxTotalDegree, packed into one word:
/// the degree in the top byte and the sorted variable codes in the
/// following bytes. Packed-key order is graded lexicographic.
class Monomial {
public:
  static constexpr int kMaxTotalDegree = 7;

  Monomial() = default; // the constant monomial
  explicit Monomial(VariableId v);
  static Monomial from_variables(std::span<const VariableId> vars);
  static Monomial from_key(std::uint64_t key) { return Monomial(key); }

  int degree() const { return static_cast<int>(key_ >> 56); }
  std::uint64_t key() const { return key_; }
  VariableFamily family() const;

  /// Variables with repetition, ascending.
  std::vector<VariableId> variables() const;
  int exponent(VariableId v) const;

  /// Throws DomainError when the product exceeds kMaxTotalDegree.
  Monomial operator*(Monomial other) const;

  /// "X[1]^2*X[2]"; "1" for the constant monomial.
  std::string to_string() const;

  friend auto operator<=>(const Monomial &, const Monomial &) = default;

private:
  explicit Monomial(std::uint64_t key) : key_(key) {}
  std::uint64_t key_ = 0;
};

/// Sparse multivariate polynomial with exact integer coefficients. Terms are
/// kept sorted by monomial with no zero coefficients, so equality is
/// term-wise identity.
class Polynomial {
public:
  using Term = std::pair<Monomial, Integer>;

  Polynomial() = default;
  static Polynomial constant(const Integer &c);
  static Polynomial variable(VariableId v, const Integer &c = 1);
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term> &terms() const { return terms_; }
  VariableFamily family() const { return family_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int degree() const;
  std::size_t size() const { return terms_.size(); }

  Integer coefficient_of(Monomial m) const;
  Integer constant_term() const { return coefficient_of(Monomial{}); }

  /// Exact value with each variable replaced by a rational. Throws
  /// DomainError if a variable of the polynomial is not assigned.
  mpq_class specialize(const std::map<VariableId, mpq_class> &assignment) const;

  /// Value modulo p with variable residues looked up by code.
  std::uint64_t evaluate_mod(std::uint64_t p,
                             std::span<const std::uint64_t, 256> residues) const;

  std::string to_string() const;

  Polynomial operator-() const;
  Polynomial &operator+=(const Polynomial &o);
  Polynomial &operator-=(const Polynomial &o);
  Polynomial &operator*=(const Integer &c);

  friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
  friend Polynomial operator*(const Integer &c, Polynomial a) { return a *= c; }

  friend bool operator==(const Polynomial &a, const Polynomial &b) {
    return a.terms_ == b.terms_;
  }

private:
  friend class PolynomialAccumulator;

  std::vector<Term> terms_;
  VariableFamily family_ = VariableFamily::None;
};

using Assignment = std::map<VariableId, mpq_class>;

Polynomial add(const Polynomial &a, const Polynomial &b);
Polynomial mul(const Polynomial &a, const Polynomial &b);
Polynomial scale(const Integer &c, const Polynomial &a);
Integer coefficient_of(const Polynomial &p, Monomial m);
mpq_class specialize(const Polynomial &p, const Assignment &assignment);

/// Hash-based sum of products, used by the convolution kernel. Reusable:
/// take() returns the canonical polynomial and clears the accumulator.
class PolynomialAccumulator {
public:
  void add(const Polynomial &p);
  void add_scaled(const Integer &c, const Polynomial &p);
  void add_product(const Polynomial &a, const Polynomial &b);
  Polynomial take();

private:
  std::unordered_map<std::uint64_t, Integer> terms_;
  VariableFamily family_ = VariableFamily::None;
};

/// The named eigenvalue polynomials:
///   DescentSum  d_n   = sum_{k<n} X_k                         (n >= 3)
///   Lambda            = (n-2)! sum (j-i) X_{i,j}              (n >= 4)
///   Delta             = (n-3)! sum (n - 2(j-i)) X_{i,j}       (n >= 4)
///   Omega             = n!/2 sum X_{i,j}                      (n >= 4)
enum class NamedPolynomial { DescentSum, Lambda, Delta, Omega };

Polynomial named(NamedPolynomial kind, int n);

/// The variables X_1..X_{n-1} (Single) or X_{1,2}..X_{n-1,n} (Pair).
std::vector<VariableId> variables_of(VariableFamily family, int n);

} // namespace permspec
