#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace permspec {

/// Arbitrary-precision signed integer with an int64 fast path. Values that
/// fit in a machine word are always stored in the small form, so equality is
/// representation-independent.
class Integer {
public:
  Integer() = default;
  Integer(std::int64_t v) : rep_(v) {} // NOLINT(google-explicit-constructor)
  Integer(int v) : rep_(static_cast<std::int64_t>(v)) {} // NOLINT
  explicit Integer(const mpz_class &v) { assign(v); }

  bool is_zero() const;
  bool is_small() const { return std::holds_alternative<std::int64_t>(rep_); }
  int sign() const;

  /// Value as int64; throws std::overflow_error when it does not fit.
  std::int64_t to_int64() const;
  mpz_class to_mpz() const;
  std::string to_string() const;

  /// Residue in [0, p) for 0 < p < 2^63.
  std::uint64_t mod(std::uint64_t p) const;

  /// Exact division; throws std::domain_error when d does not divide *this.
  Integer divexact(std::int64_t d) const;

  Integer operator-() const;
  Integer &operator+=(const Integer &o);
  Integer &operator-=(const Integer &o);
  Integer &operator*=(const Integer &o);

  /// *this += a * b without a temporary in the common small case.
  void add_product(const Integer &a, const Integer &b);

  friend Integer operator+(Integer a, const Integer &b) { return a += b; }
  friend Integer operator-(Integer a, const Integer &b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer &b) { return a *= b; }

  friend bool operator==(const Integer &a, const Integer &b);
  friend std::strong_ordering operator<=>(const Integer &a, const Integer &b);

  friend std::ostream &operator<<(std::ostream &os, const Integer &v);

private:
  void assign(const mpz_class &v);

  std::variant<std::int64_t, mpz_class> rep_{std::int64_t{0}};
};

} // namespace permspec
