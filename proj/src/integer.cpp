#include "permspec/integer.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace permspec {

namespace {

mpz_class mpz_from_int64(std::int64_t v) {
  mpz_class r;
  // mpz_set_si takes long, which is 64-bit on the supported targets.
  static_assert(sizeof(long) == sizeof(std::int64_t));
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

} // namespace

void Integer::assign(const mpz_class &v) {
  if (mpz_fits_slong_p(v.get_mpz_t()))
    rep_ = static_cast<std::int64_t>(mpz_get_si(v.get_mpz_t()));
  else
    rep_ = v;
}

bool Integer::is_zero() const {
  const auto *s = std::get_if<std::int64_t>(&rep_);
  return s != nullptr && *s == 0;
}

int Integer::sign() const {
  if (const auto *s = std::get_if<std::int64_t>(&rep_))
    return (*s > 0) - (*s < 0);
  return sgn(std::get<mpz_class>(rep_));
}

std::int64_t Integer::to_int64() const {
  if (const auto *s = std::get_if<std::int64_t>(&rep_))
    return *s;
  throw std::overflow_error("Integer does not fit in int64: " + to_string());
}

mpz_class Integer::to_mpz() const {
  if (const auto *s = std::get_if<std::int64_t>(&rep_))
    return mpz_from_int64(*s);
  return std::get<mpz_class>(rep_);
}

std::string Integer::to_string() const {
  if (const auto *s = std::get_if<std::int64_t>(&rep_))
    return std::to_string(*s);
  return std::get<mpz_class>(rep_).get_str();
}

std::uint64_t Integer::mod(std::uint64_t p) const {
  if (const auto *s = std::get_if<std::int64_t>(&rep_)) {
    auto m = *s % static_cast<std::int64_t>(p);
    if (m < 0)
      m += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(m);
  }
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), std::get<mpz_class>(rep_).get_mpz_t(),
                static_cast<unsigned long>(p));
  return r.get_ui();
}

Integer Integer::divexact(std::int64_t d) const {
  if (d == 0)
    throw std::domain_error("division by zero");
  if (const auto *s = std::get_if<std::int64_t>(&rep_)) {
    if (*s % d != 0)
      throw std::domain_error("inexact division of " + to_string() + " by " +
                              std::to_string(d));
    if (!(*s == std::numeric_limits<std::int64_t>::min() && d == -1))
      return Integer(*s / d);
  }
  const mpz_class num = to_mpz();
  const mpz_class den = mpz_from_int64(d);
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw std::domain_error("inexact division of " + to_string() + " by " +
                            std::to_string(d));
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return Integer(q);
}

Integer Integer::operator-() const {
  if (const auto *s = std::get_if<std::int64_t>(&rep_)) {
    if (*s != std::numeric_limits<std::int64_t>::min())
      return Integer(-*s);
  }
  return Integer(mpz_class(-to_mpz()));
}

Integer &Integer::operator+=(const Integer &o) {
  auto *a = std::get_if<std::int64_t>(&rep_);
  const auto *b = std::get_if<std::int64_t>(&o.rep_);
  if (a && b) {
    std::int64_t r;
    if (!__builtin_add_overflow(*a, *b, &r)) {
      *a = r;
      return *this;
    }
  }
  assign(mpz_class(to_mpz() + o.to_mpz()));
  return *this;
}

Integer &Integer::operator-=(const Integer &o) {
  auto *a = std::get_if<std::int64_t>(&rep_);
  const auto *b = std::get_if<std::int64_t>(&o.rep_);
  if (a && b) {
    std::int64_t r;
    if (!__builtin_sub_overflow(*a, *b, &r)) {
      *a = r;
      return *this;
    }
  }
  assign(mpz_class(to_mpz() - o.to_mpz()));
  return *this;
}

Integer &Integer::operator*=(const Integer &o) {
  auto *a = std::get_if<std::int64_t>(&rep_);
  const auto *b = std::get_if<std::int64_t>(&o.rep_);
  if (a && b) {
    std::int64_t r;
    if (!__builtin_mul_overflow(*a, *b, &r)) {
      *a = r;
      return *this;
    }
  }
  assign(mpz_class(to_mpz() * o.to_mpz()));
  return *this;
}

void Integer::add_product(const Integer &x, const Integer &y) {
  auto *a = std::get_if<std::int64_t>(&rep_);
  const auto *u = std::get_if<std::int64_t>(&x.rep_);
  const auto *v = std::get_if<std::int64_t>(&y.rep_);
  if (a && u && v) {
    std::int64_t p, r;
    if (!__builtin_mul_overflow(*u, *v, &p) &&
        !__builtin_add_overflow(*a, p, &r)) {
      *a = r;
      return;
    }
  }
  assign(mpz_class(to_mpz() + x.to_mpz() * y.to_mpz()));
}

bool operator==(const Integer &a, const Integer &b) {
  const auto *x = std::get_if<std::int64_t>(&a.rep_);
  const auto *y = std::get_if<std::int64_t>(&b.rep_);
  if (x && y)
    return *x == *y;
  if (x || y)
    return false; // normalized: a big value never fits in int64
  return std::get<mpz_class>(a.rep_) == std::get<mpz_class>(b.rep_);
}

std::strong_ordering operator<=>(const Integer &a, const Integer &b) {
  const auto *x = std::get_if<std::int64_t>(&a.rep_);
  const auto *y = std::get_if<std::int64_t>(&b.rep_);
  if (x && y)
    return *x <=> *y;
  const int c = cmp(a.to_mpz(), b.to_mpz());
  return c <=> 0;
}

std::ostream &operator<<(std::ostream &os, const Integer &v) {
  return os << v.to_string();
}

} // namespace permspec
