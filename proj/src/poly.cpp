#include "permspec/poly.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "permspec/perm.hpp"

namespace permspec {

VariableFamily join_families(VariableFamily a, VariableFamily b) {
  if (a == VariableFamily::None)
    return b;
  if (b == VariableFamily::None || a == b)
    return a;
  throw DomainError("cannot mix X_k and X_{i,j} variables in one polynomial");
}

// ---------------------------------------------------------------------------
// VariableId

VariableId VariableId::single(int k) {
  if (k < 1 || k >= kMaxDegree)
    throw DomainError("variable X_" + std::to_string(k) + " out of range");
  return VariableId(static_cast<std::uint8_t>(k));
}

VariableId VariableId::pair(int i, int j) {
  if (i < 1 || j <= i || j > kMaxDegree)
    throw DomainError("variable X_{" + std::to_string(i) + "," +
                      std::to_string(j) + "} needs 1 <= i < j <= " +
                      std::to_string(kMaxDegree));
  return VariableId(static_cast<std::uint8_t>((i << 4) | j));
}

VariableId VariableId::from_code(std::uint8_t code) {
  if (code >= 16)
    return pair(code >> 4, code & 0xF);
  return single(code);
}

std::string VariableId::to_string() const {
  if (family() == VariableFamily::Single)
    return "X[" + std::to_string(index()) + "]";
  return "X[" + std::to_string(first()) + "," + std::to_string(second()) + "]";
}

// ---------------------------------------------------------------------------
// Monomial

namespace {

constexpr int kSlots = Monomial::kMaxTotalDegree;

inline std::uint8_t slot(std::uint64_t key, int s) {
  return static_cast<std::uint8_t>(key >> (48 - 8 * s));
}

std::uint64_t pack(std::span<const std::uint8_t> codes) {
  std::uint64_t key = static_cast<std::uint64_t>(codes.size()) << 56;
  for (std::size_t s = 0; s < codes.size(); ++s)
    key |= static_cast<std::uint64_t>(codes[s]) << (48 - 8 * s);
  return key;
}

inline std::uint64_t multiply_keys(std::uint64_t a, std::uint64_t b) {
  const int da = static_cast<int>(a >> 56);
  const int db = static_cast<int>(b >> 56);
  if (da == 0)
    return b;
  if (db == 0)
    return a;
  if (da + db > kSlots)
    throw DomainError("monomial degree exceeds " + std::to_string(kSlots));
  std::array<std::uint8_t, kSlots> out{};
  int i = 0, j = 0, k = 0;
  while (i < da && j < db) {
    const auto x = slot(a, i), y = slot(b, j);
    if (x <= y) {
      out[k++] = x;
      ++i;
    } else {
      out[k++] = y;
      ++j;
    }
  }
  while (i < da)
    out[k++] = slot(a, i++);
  while (j < db)
    out[k++] = slot(b, j++);
  return pack(std::span(out.data(), static_cast<std::size_t>(k)));
}

} // namespace

Monomial::Monomial(VariableId v) {
  const std::uint8_t c = v.code();
  key_ = pack(std::span(&c, 1));
}

Monomial Monomial::from_variables(std::span<const VariableId> vars) {
  if (static_cast<int>(vars.size()) > kMaxTotalDegree)
    throw DomainError("monomial degree exceeds " +
                      std::to_string(kMaxTotalDegree));
  std::vector<std::uint8_t> codes;
  codes.reserve(vars.size());
  VariableFamily fam = VariableFamily::None;
  for (const auto v : vars) {
    fam = join_families(fam, v.family());
    codes.push_back(v.code());
  }
  std::sort(codes.begin(), codes.end());
  return Monomial(pack(codes));
}

VariableFamily Monomial::family() const {
  if (degree() == 0)
    return VariableFamily::None;
  return slot(key_, 0) < 16 ? VariableFamily::Single : VariableFamily::Pair;
}

std::vector<VariableId> Monomial::variables() const {
  std::vector<VariableId> out;
  for (int s = 0; s < degree(); ++s)
    out.push_back(VariableId::from_code(slot(key_, s)));
  return out;
}

int Monomial::exponent(VariableId v) const {
  int e = 0;
  for (int s = 0; s < degree(); ++s)
    e += slot(key_, s) == v.code();
  return e;
}

Monomial Monomial::operator*(Monomial other) const {
  return Monomial(multiply_keys(key_, other.key_));
}

std::string Monomial::to_string() const {
  if (degree() == 0)
    return "1";
  std::string out;
  int s = 0;
  while (s < degree()) {
    const auto code = slot(key_, s);
    int e = 0;
    while (s < degree() && slot(key_, s) == code) {
      ++e;
      ++s;
    }
    if (!out.empty())
      out += '*';
    out += VariableId::from_code(code).to_string();
    if (e > 1)
      out += "^" + std::to_string(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(const Integer &c) {
  Polynomial p;
  if (!c.is_zero())
    p.terms_.emplace_back(Monomial{}, c);
  return p;
}

Polynomial Polynomial::variable(VariableId v, const Integer &c) {
  Polynomial p;
  if (!c.is_zero()) {
    p.terms_.emplace_back(Monomial(v), c);
    p.family_ = v.family();
  }
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term &a, const Term &b) { return a.first < b.first; });
  Polynomial p;
  for (auto &[m, c] : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == m)
      p.terms_.back().second += c;
    else
      p.terms_.emplace_back(m, std::move(c));
  }
  std::erase_if(p.terms_, [](const Term &t) { return t.second.is_zero(); });
  for (const auto &t : p.terms_)
    p.family_ = join_families(p.family_, t.first.family());
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.degree() == 0);
}

int Polynomial::degree() const {
  return terms_.empty() ? 0 : terms_.back().first.degree();
}

Integer Polynomial::coefficient_of(Monomial m) const {
  const auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term &t, const Monomial &x) { return t.first < x; });
  if (it != terms_.end() && it->first == m)
    return it->second;
  return 0;
}

mpq_class Polynomial::specialize(const Assignment &assignment) const {
  mpq_class total = 0;
  for (const auto &[m, c] : terms_) {
    mpq_class value = c.to_mpz();
    for (const auto v : m.variables()) {
      const auto it = assignment.find(v);
      if (it == assignment.end())
        throw DomainError("specialization does not assign " + v.to_string());
      value *= it->second;
    }
    total += value;
  }
  total.canonicalize();
  return total;
}

std::uint64_t
Polynomial::evaluate_mod(std::uint64_t p,
                         std::span<const std::uint64_t, 256> residues) const {
  unsigned __int128 total = 0;
  for (const auto &[m, c] : terms_) {
    unsigned __int128 value = c.mod(p);
    for (const auto v : m.variables())
      value = value * residues[v.code()] % p;
    total = (total + value) % p;
  }
  return static_cast<std::uint64_t>(total);
}

std::string Polynomial::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[m, c] : terms_) {
    const bool negative = c.sign() < 0;
    const Integer magnitude = negative ? -c : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (m.degree() == 0) {
      os << magnitude;
    } else {
      if (magnitude != Integer(1))
        os << magnitude << '*';
      os << m.to_string();
    }
  }
  return os.str();
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto &t : r.terms_)
    t.second = -t.second;
  return r;
}

namespace {

template <typename Combine>
Polynomial merge(const Polynomial &a, const Polynomial &b, Combine combine,
                 bool negate_b) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.terms().begin(), ib = b.terms().begin();
  const auto ea = a.terms().end(), eb = b.terms().end();
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == ea || ib->first < ia->first) {
      out.emplace_back(ib->first, negate_b ? -ib->second : ib->second);
      ++ib;
    } else {
      Integer c = combine(ia->second, ib->second);
      if (!c.is_zero())
        out.emplace_back(ia->first, std::move(c));
      ++ia;
      ++ib;
    }
  }
  return Polynomial::from_terms(std::move(out));
}

} // namespace

Polynomial &Polynomial::operator+=(const Polynomial &o) {
  join_families(family_, o.family_);
  *this = merge(
      *this, o, [](const Integer &x, const Integer &y) { return x + y; }, false);
  return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o) {
  join_families(family_, o.family_);
  *this = merge(
      *this, o, [](const Integer &x, const Integer &y) { return x - y; }, true);
  return *this;
}

Polynomial &Polynomial::operator*=(const Integer &c) {
  if (c.is_zero()) {
    terms_.clear();
    family_ = VariableFamily::None;
    return *this;
  }
  for (auto &t : terms_)
    t.second *= c;
  return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
  join_families(a.family(), b.family());
  PolynomialAccumulator acc;
  acc.add_product(a, b);
  return acc.take();
}

Polynomial add(const Polynomial &a, const Polynomial &b) { return a + b; }
Polynomial mul(const Polynomial &a, const Polynomial &b) { return a * b; }
Polynomial scale(const Integer &c, const Polynomial &a) { return c * a; }
Integer coefficient_of(const Polynomial &p, Monomial m) {
  return p.coefficient_of(m);
}
mpq_class specialize(const Polynomial &p, const Assignment &assignment) {
  return p.specialize(assignment);
}

// ---------------------------------------------------------------------------
// PolynomialAccumulator

void PolynomialAccumulator::add(const Polynomial &p) {
  family_ = join_families(family_, p.family());
  for (const auto &[m, c] : p.terms())
    terms_[m.key()] += c;
}

void PolynomialAccumulator::add_scaled(const Integer &c, const Polynomial &p) {
  if (c.is_zero())
    return;
  family_ = join_families(family_, p.family());
  for (const auto &[m, x] : p.terms())
    terms_[m.key()].add_product(c, x);
}

void PolynomialAccumulator::add_product(const Polynomial &a,
                                        const Polynomial &b) {
  if (a.is_zero() || b.is_zero())
    return;
  family_ = join_families(family_, join_families(a.family(), b.family()));
  for (const auto &[ma, ca] : a.terms())
    for (const auto &[mb, cb] : b.terms())
      terms_[multiply_keys(ma.key(), mb.key())].add_product(ca, cb);
}

Polynomial PolynomialAccumulator::take() {
  Polynomial p;
  p.terms_.reserve(terms_.size());
  for (auto &[key, c] : terms_)
    if (!c.is_zero())
      p.terms_.emplace_back(Monomial::from_key(key), std::move(c));
  std::sort(p.terms_.begin(), p.terms_.end(),
            [](const Polynomial::Term &x, const Polynomial::Term &y) {
              return x.first < y.first;
            });
  p.family_ = p.terms_.empty() ? VariableFamily::None : family_;
  if (!p.terms_.empty() && p.terms_.back().first.degree() == 0)
    p.family_ = VariableFamily::None;
  terms_.clear();
  family_ = VariableFamily::None;
  return p;
}

// ---------------------------------------------------------------------------
// Named polynomials

std::vector<VariableId> variables_of(VariableFamily family, int n) {
  std::vector<VariableId> out;
  if (family == VariableFamily::Single) {
    for (int k = 1; k < n; ++k)
      out.push_back(VariableId::single(k));
  } else if (family == VariableFamily::Pair) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        out.push_back(VariableId::pair(i, j));
  }
  return out;
}

Polynomial named(NamedPolynomial kind, int n) {
  const int min_n = kind == NamedPolynomial::DescentSum ? 3 : 4;
  if (n < min_n || n > kMaxDegree)
    throw DomainError("named polynomial requires " + std::to_string(min_n) +
                      " <= n <= " + std::to_string(kMaxDegree));
  std::vector<Polynomial::Term> terms;
  const auto fact = [](int k) {
    return static_cast<std::int64_t>(factorial(k));
  };
  if (kind == NamedPolynomial::DescentSum) {
    for (const auto v : variables_of(VariableFamily::Single, n))
      terms.emplace_back(Monomial(v), 1);
    return Polynomial::from_terms(std::move(terms));
  }
  for (const auto v : variables_of(VariableFamily::Pair, n)) {
    const int gap = v.second() - v.first();
    std::int64_t c = 0;
    switch (kind) {
    case NamedPolynomial::Lambda:
      c = fact(n - 2) * gap;
      break;
    case NamedPolynomial::Delta:
      c = fact(n - 3) * (n - 2 * gap);
      break;
    case NamedPolynomial::Omega:
      c = fact(n) / 2;
      break;
    case NamedPolynomial::DescentSum:
      break;
    }
    terms.emplace_back(Monomial(v), c);
  }
  return Polynomial::from_terms(std::move(terms));
}

} // namespace permspec
