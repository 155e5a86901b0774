#include "permspec/algebra.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace permspec {

int worker_count() {
  if (const char *env = std::getenv("PERMSPEC_THREADS")) {
    char *end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return static_cast<int>(std::min(v, 256L));
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// ---------------------------------------------------------------------------
// GroupTables

GroupTables::GroupTables(int n) : n_(n), elements_(permutations(n)) {
  const std::size_t order = elements_.size();
  inverse_.resize(order);
  for (std::size_t r = 0; r < order; ++r)
    inverse_[r] = static_cast<std::uint32_t>(elements_[r].inverse().rank());
  if (n > kTableLimit)
    return;
  quotient_.resize(order * order);
  for (std::size_t h = 0; h < order; ++h) {
    const Permutation &hinv = elements_[inverse_[h]];
    for (std::size_t g = 0; g < order; ++g) {
      // rank of hinv o g, computed directly from the one-line images
      std::size_t r = 0;
      std::array<int, kMaxDegree> img{};
      for (int k = 0; k < n; ++k)
        img[k] = hinv.at0(elements_[g].at0(k));
      for (int k = 0; k < n; ++k) {
        int smaller = 0;
        for (int l = k + 1; l < n; ++l)
          smaller += img[l] < img[k];
        r = r * static_cast<std::size_t>(n - k) + smaller;
      }
      quotient_[h * order + g] = static_cast<std::uint16_t>(r);
    }
  }
}

const GroupTables &GroupTables::get(int n) {
  if (n < 1 || n > kMaxDegree)
    throw DomainError("group degree out of range: " + std::to_string(n));
  static std::array<std::unique_ptr<GroupTables>, kMaxDegree + 1> cache;
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  if (!cache[n])
    cache[n].reset(new GroupTables(n));
  return *cache[n];
}

// ---------------------------------------------------------------------------
// GroupAlgebraElement

GroupAlgebraElement GroupAlgebraElement::zero(int n) {
  const auto &tables = GroupTables::get(n);
  return GroupAlgebraElement(n, std::vector<Polynomial>(tables.order()));
}

GroupAlgebraElement GroupAlgebraElement::delta_identity(int n) {
  auto e = zero(n);
  e.coeffs_[0] = Polynomial::constant(1);
  return e;
}

GroupAlgebraElement GroupAlgebraElement::from_statistic(StatisticKind kind,
                                                        int n) {
  const auto &tables = GroupTables::get(n);
  std::vector<Polynomial> coeffs;
  coeffs.reserve(tables.order());
  for (const auto &p : tables.elements())
    coeffs.push_back(statistic(kind, p));
  return GroupAlgebraElement(n, std::move(coeffs));
}

GroupAlgebraElement
GroupAlgebraElement::from_coefficients(int n, std::vector<Polynomial> coeffs) {
  if (n < 1 || n > kMaxDegree || coeffs.size() != factorial(n))
    throw DomainError("group algebra element needs exactly n! coefficients");
  VariableFamily fam = VariableFamily::None;
  for (const auto &c : coeffs)
    fam = join_families(fam, c.family());
  return GroupAlgebraElement(n, std::move(coeffs));
}

VariableFamily GroupAlgebraElement::family() const {
  VariableFamily fam = VariableFamily::None;
  for (const auto &c : coeffs_)
    fam = join_families(fam, c.family());
  return fam;
}

bool GroupAlgebraElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Polynomial &p) { return p.is_zero(); });
}

int GroupAlgebraElement::max_degree() const {
  int d = 0;
  for (const auto &c : coeffs_)
    d = std::max(d, c.degree());
  return d;
}

Polynomial GroupAlgebraElement::coefficient_sum() const {
  PolynomialAccumulator acc;
  for (const auto &c : coeffs_)
    acc.add(c);
  return acc.take();
}

GroupAlgebraElement &
GroupAlgebraElement::operator+=(const GroupAlgebraElement &o) {
  if (n_ != o.n_)
    throw DomainError("group algebra degree mismatch");
  for (std::size_t r = 0; r < coeffs_.size(); ++r)
    coeffs_[r] += o.coeffs_[r];
  return *this;
}

GroupAlgebraElement &
GroupAlgebraElement::operator-=(const GroupAlgebraElement &o) {
  if (n_ != o.n_)
    throw DomainError("group algebra degree mismatch");
  for (std::size_t r = 0; r < coeffs_.size(); ++r)
    coeffs_[r] -= o.coeffs_[r];
  return *this;
}

GroupAlgebraElement operator*(const Polynomial &c,
                              const GroupAlgebraElement &a) {
  std::vector<Polynomial> coeffs;
  coeffs.reserve(a.size());
  for (const auto &x : a.coefficients())
    coeffs.push_back(c * x);
  return GroupAlgebraElement(a.degree(), std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Convolution

namespace {

/// Runs body(g) for g in [0, count) on up to worker_count() threads. Each g is
/// processed by exactly one worker; the first exception is rethrown.
template <typename Body> void parallel_for(std::size_t count, Body body) {
  const int workers =
      static_cast<int>(std::min<std::size_t>(worker_count(), count));
  if (workers <= 1) {
    for (std::size_t g = 0; g < count; ++g)
      body(g);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  constexpr std::size_t kChunk = 8;
  auto run = [&] {
    try {
      for (;;) {
        const std::size_t start = next.fetch_add(kChunk);
        if (start >= count)
          return;
        const std::size_t stop = std::min(count, start + kChunk);
        for (std::size_t g = start; g < stop; ++g)
          body(g);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure)
        failure = std::current_exception();
      next.store(count);
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back(run);
  pool.clear(); // joins
  if (failure)
    std::rethrow_exception(failure);
}

} // namespace

GroupAlgebraElement convolve(const GroupAlgebraElement &a,
                             const GroupAlgebraElement &b) {
  if (a.degree() != b.degree())
    throw DomainError("convolve: degree mismatch");
  join_families(a.family(), b.family());
  const auto &tables = GroupTables::get(a.degree());
  const std::size_t order = tables.order();

  std::vector<std::size_t> support;
  for (std::size_t h = 0; h < order; ++h)
    if (!a[h].is_zero())
      support.push_back(h);

  std::vector<Polynomial> out(order);
  parallel_for(order, [&](std::size_t g) {
    thread_local PolynomialAccumulator acc;
    for (const std::size_t h : support)
      acc.add_product(a[h], b[tables.left_quotient(h, g)]);
    out[g] = acc.take();
    if (out[g].degree() > kDegreeCap)
      throw std::logic_error("convolution produced degree " +
                             std::to_string(out[g].degree()) +
                             " above the cap of " + std::to_string(kDegreeCap));
  });
  return GroupAlgebraElement::from_coefficients(a.degree(), std::move(out));
}

GroupAlgebraElement add_scalar_identity(const GroupAlgebraElement &a,
                                        const Polynomial &c) {
  std::vector<Polynomial> coeffs(a.coefficients().begin(),
                                 a.coefficients().end());
  coeffs[0] += c;
  return GroupAlgebraElement::from_coefficients(a.degree(), std::move(coeffs));
}

Polynomial trace_of_left_multiplication(const GroupAlgebraElement &a) {
  return Integer(static_cast<std::int64_t>(factorial(a.degree()))) *
         a.at_identity();
}

// ---------------------------------------------------------------------------
// Matrices

PolynomialMatrix left_multiplication_matrix(const GroupAlgebraElement &a) {
  if (a.degree() > kMatrixExportLimit)
    throw ResourceError("matrix export is limited to n <= " +
                        std::to_string(kMatrixExportLimit));
  const auto &tables = GroupTables::get(a.degree());
  const std::size_t order = tables.order();
  PolynomialMatrix m{order, std::vector<Polynomial>(order * order)};
  for (std::size_t pi = 0; pi < order; ++pi)
    for (std::size_t tau = 0; tau < order; ++tau) {
      // pi o tau^-1 = (tau o pi^-1)^-1
      const std::size_t q = tables.inverse_rank(
          tables.left_quotient(tables.inverse_rank(tau), tables.inverse_rank(pi)));
      m(pi, tau) = a[q];
    }
  return m;
}

PolynomialMatrix build_matrix(StatisticKind kind, int n) {
  if (n > kMatrixExportLimit)
    throw ResourceError("matrix export is limited to n <= " +
                        std::to_string(kMatrixExportLimit));
  const auto elements = permutations(n);
  const std::size_t order = elements.size();
  PolynomialMatrix m{order, std::vector<Polynomial>(order * order)};
  for (std::size_t pi = 0; pi < order; ++pi)
    for (std::size_t tau = 0; tau < order; ++tau)
      m(pi, tau) =
          statistic(kind, compose(elements[pi], elements[tau].inverse()));
  return m;
}

PolynomialMatrix multiply(const PolynomialMatrix &a, const PolynomialMatrix &b) {
  if (a.dim != b.dim)
    throw DomainError("matrix dimension mismatch");
  PolynomialMatrix c{a.dim, std::vector<Polynomial>(a.dim * a.dim)};
  PolynomialAccumulator acc;
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      for (std::size_t k = 0; k < a.dim; ++k)
        acc.add_product(a(i, k), b(k, j));
      c(i, j) = acc.take();
    }
  return c;
}

} // namespace permspec
