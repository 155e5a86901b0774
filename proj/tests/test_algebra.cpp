#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>

#include "permspec/algebra.hpp"
#include "permspec/oracle.hpp"

using namespace permspec;

namespace {

Polynomial X(int k) { return Polynomial::variable(VariableId::single(k)); }

Polynomial pair_sum(int n) {
  Polynomial p;
  for (const auto v : variables_of(VariableFamily::Pair, n))
    p += Polynomial::variable(v);
  return p;
}

GroupAlgebraElement random_sparse(int n, std::mt19937_64 &rng) {
  std::vector<Polynomial> coeffs(factorial(n));
  for (int t = 0; t < 6; ++t) {
    const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    coeffs[rng() % coeffs.size()] +=
        Integer(static_cast<std::int64_t>(rng() % 7) - 3) * X(k);
  }
  coeffs[rng() % coeffs.size()] += Polynomial::constant(Integer(2));
  return GroupAlgebraElement::from_coefficients(n, std::move(coeffs));
}

} // namespace

TEST_CASE("from_statistic") {
  for (const auto kind : {StatisticKind::DesX, StatisticKind::InvX, StatisticKind::Des,
                          StatisticKind::Maj, StatisticKind::Inv})
    CHECK(GroupAlgebraElement::from_statistic(kind, 4).at_identity().is_zero());
  CHECK(GroupAlgebraElement::from_statistic(StatisticKind::DesX, 3).coefficient_sum() ==
        Integer(3) * (X(1) + X(2)));
  CHECK(GroupAlgebraElement::from_statistic(StatisticKind::InvX, 4).coefficient_sum() ==
        Integer(12) * pair_sum(4));
  CHECK_THROWS_AS(GroupAlgebraElement::from_coefficients(3, std::vector<Polynomial>(5)),
                  DomainError);
}

TEST_CASE("convolution unit and degree mismatch") {
  const auto s = GroupAlgebraElement::from_statistic(StatisticKind::DesX, 4);
  const auto one = GroupAlgebraElement::delta_identity(4);
  CHECK(convolve(one, s) == s);
  CHECK(convolve(s, one) == s);
  CHECK_THROWS_AS(convolve(s, GroupAlgebraElement::delta_identity(3)), DomainError);
}

TEST_CASE("convolution is associative") {
  std::mt19937_64 rng(17);
  for (int n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      const auto a = random_sparse(n, rng), b = random_sparse(n, rng),
                 c = random_sparse(n, rng);
      REQUIRE(convolve(convolve(a, b), c) == convolve(a, convolve(b, c)));
    }
}

TEST_CASE("convolution of basis elements is composition") {
  const int n = 4;
  const auto all = permutations(n);
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const auto &g = all[rng() % all.size()];
    const auto &h = all[rng() % all.size()];
    std::vector<Polynomial> a(all.size()), b(all.size());
    a[g.rank()] = Polynomial::constant(1);
    b[h.rank()] = Polynomial::constant(1);
    const auto prod = convolve(GroupAlgebraElement::from_coefficients(n, a),
                               GroupAlgebraElement::from_coefficients(n, b));
    for (std::size_t r = 0; r < all.size(); ++r)
      REQUIRE(prod[r] == Polynomial::constant(r == compose(g, h).rank() ? 1 : 0));
  }
}

TEST_CASE("square of the descent element matches the brute double sum") {
  const auto s = GroupAlgebraElement::from_statistic(StatisticKind::DesX, 3);
  const auto sq = convolve(s, s);
  for (const auto &tau : permutations(3))
    CHECK(sq.at(tau) == oracle::compute_pi_n(tau));
}

TEST_CASE("cube of the inversion element matches the brute triple sum") {
  const auto s = GroupAlgebraElement::from_statistic(StatisticKind::InvX, 4);
  const auto cube = convolve(s, convolve(s, s));
  for (const auto &pi : permutations(4))
    REQUIRE(cube.at(pi) == oracle::compute_f3_brute(pi));
}

TEST_CASE("add_scalar_identity") {
  const auto zero = GroupAlgebraElement::zero(3);
  const auto c = X(1) + X(2);
  const auto e = add_scalar_identity(zero, c);
  CHECK(e.at_identity() == c);
  for (std::size_t r = 1; r < e.size(); ++r)
    CHECK(e[r].is_zero());
  const auto s = GroupAlgebraElement::from_statistic(StatisticKind::InvX, 4);
  const auto lambda = named(NamedPolynomial::Lambda, 4);
  const auto shifted = add_scalar_identity(s, lambda);
  CHECK(shifted.at_identity() == lambda);
  CHECK(add_scalar_identity(shifted, -lambda) == s);
}

TEST_CASE("trace of left multiplication") {
  for (int n = 2; n <= 5; ++n) {
    CHECK(trace_of_left_multiplication(
              GroupAlgebraElement::from_statistic(StatisticKind::DesX, n))
              .is_zero());
    CHECK(trace_of_left_multiplication(
              GroupAlgebraElement::from_statistic(StatisticKind::InvX, n))
              .is_zero());
    CHECK(trace_of_left_multiplication(GroupAlgebraElement::delta_identity(n)) ==
          Polynomial::constant(Integer(static_cast<std::int64_t>(factorial(n)))));
  }
}

TEST_CASE("trace equals the matrix trace") {
  std::mt19937_64 rng(4);
  const auto a = random_sparse(3, rng);
  const auto m = left_multiplication_matrix(a);
  Polynomial trace;
  for (std::size_t i = 0; i < m.dim; ++i)
    trace += m(i, i);
  CHECK(trace == trace_of_left_multiplication(a));
}

TEST_CASE("build_matrix") {
  const auto m2 = build_matrix(StatisticKind::DesX, 2);
  REQUIRE(m2.dim == 2);
  CHECK(m2(0, 0).is_zero());
  CHECK(m2(0, 1) == X(1));
  CHECK(m2(1, 0) == X(1));
  CHECK(m2(1, 1).is_zero());
  for (const auto kind : {StatisticKind::DesX, StatisticKind::InvX, StatisticKind::Maj}) {
    const auto m = build_matrix(kind, 4);
    for (std::size_t i = 0; i < m.dim; ++i)
      CHECK(m(i, i).is_zero());
  }
  const auto m3 = build_matrix(StatisticKind::DesX, 3);
  for (std::size_t r = 0; r < m3.dim; ++r) {
    Polynomial row;
    for (std::size_t c = 0; c < m3.dim; ++c)
      row += m3(r, c);
    CHECK(row == Integer(3) * (X(1) + X(2)));
  }
  CHECK_THROWS_AS(build_matrix(StatisticKind::DesX, kMatrixExportLimit + 1), ResourceError);
}

TEST_CASE("matrix square equals the matrix of the convolution square") {
  for (const auto kind : {StatisticKind::DesX, StatisticKind::InvX})
    for (int n = 2; n <= 4; ++n) {
      const auto s = GroupAlgebraElement::from_statistic(kind, n);
      const auto m = build_matrix(kind, n);
      REQUIRE(multiply(m, m).entries == left_multiplication_matrix(convolve(s, s)).entries);
    }
}

TEST_CASE("result does not depend on the worker count") {
  const auto s = GroupAlgebraElement::from_statistic(StatisticKind::InvX, 5);
  setenv("PERMSPEC_THREADS", "1", 1);
  const auto one = convolve(s, s);
  setenv("PERMSPEC_THREADS", "3", 1);
  const auto three = convolve(s, s);
  unsetenv("PERMSPEC_THREADS");
  CHECK(one == three);
}

TEST_CASE("degree cap") {
  auto s = GroupAlgebraElement::from_statistic(StatisticKind::InvX, 3);
  auto p = s;
  for (int k = 1; k < kDegreeCap; ++k)
    p = convolve(p, s);
  CHECK(p.max_degree() == kDegreeCap);
  CHECK_THROWS_AS(convolve(p, s), std::logic_error);
}

TEST_CASE("convolution above the table limit") {
  const auto all = permutations(8);
  std::vector<Polynomial> a(all.size()), b(all.size());
  const auto g = Permutation::from_one_line({2, 3, 1, 5, 4, 8, 6, 7});
  const auto h = Permutation::from_one_line({8, 7, 6, 5, 4, 3, 2, 1});
  a[g.rank()] = Polynomial::constant(3);
  b[h.rank()] = X(1);
  const auto prod = convolve(GroupAlgebraElement::from_coefficients(8, a),
                             GroupAlgebraElement::from_coefficients(8, b));
  CHECK(prod.at(compose(g, h)) == Integer(3) * X(1));
}
