#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "ulis/enumerate.hpp"
#include "ulis/sampler.hpp"
#include "ulis/series.hpp"

using namespace ulis;

namespace {

PowerSeries one_minus_z_squared(int order) {
  PowerSeries s(order);
  s.at(0) = 1;
  if (order >= 2) s.at(2) = -1;
  return s;
}

}  // namespace

TEST_CASE("ring arithmetic basics") {
  const int ord = 6;
  PowerSeries a(ord), b(ord);
  a.at(0) = 1;
  a.at(1) = 1;  // 1 + z
  b.at(0) = 1;
  b.at(1) = -1;  // 1 - z
  CHECK(a * b == one_minus_z_squared(ord));

  PowerSeries one_minus_z(10);
  one_minus_z.at(0) = 1;
  one_minus_z.at(1) = -1;
  const PowerSeries geometric = PowerSeries::constant(1, 10) / one_minus_z;
  for (int k = 0; k <= 10; ++k) REQUIRE(geometric[k] == 1);

  PowerSeries c(10);
  c.at(0) = 1;
  c.at(1) = -4;
  c.at(2) = 2;
  CHECK(c * (PowerSeries::constant(1, 10) / c) == PowerSeries::constant(1, 10));
}

TEST_CASE("orders truncate to the minimum and block out-of-range reads") {
  const PowerSeries a = PowerSeries::constant(1, 9);
  const PowerSeries b = PowerSeries::variable(4);
  CHECK((a + b).order() == 4);
  CHECK((a * b).order() == 4);
  CHECK_THROWS_AS(a[10], std::out_of_range);
  CHECK_THROWS_AS(PowerSeries(-1), std::invalid_argument);
  PowerSeries zero_const(3);
  CHECK_THROWS_AS(a / zero_const, std::invalid_argument);
}

TEST_CASE("series square root") {
  CHECK(ps_sqrt(PowerSeries::constant(1, 8)) == PowerSeries::constant(1, 8));

  PowerSeries sq(8);
  sq.at(0) = 1;
  sq.at(1) = 2;
  sq.at(2) = 1;  // (1+z)^2
  PowerSeries expect(8);
  expect.at(0) = 1;
  expect.at(1) = 1;
  CHECK(ps_sqrt(sq) == expect);

  PowerSeries bad(3);
  bad.at(0) = 4;
  CHECK_THROWS_AS(ps_sqrt(bad), std::invalid_argument);

  // undetermined-coefficients oracle, written out independently:
  // s0 = 1, s_k = (a_k - sum_{0<i<k} s_i s_{k-i}) / 2
  PowerSeries radicand(6);
  radicand.at(0) = 1;
  radicand.at(1) = -4;
  radicand.at(2) = 2;
  radicand.at(4) = 1;
  std::vector<Rational> s{1};
  for (int k = 1; k <= 6; ++k) {
    Rational acc = radicand[k];
    for (int i = 1; i < k; ++i) acc -= s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(k - i)];
    s.push_back(acc / 2);
  }
  CHECK(s[0] == 1);
  CHECK(s[1] == -2);
  CHECK(s[2] == -1);
  CHECK(s[3] == -2);
  CHECK(s[4] == -4);
  const PowerSeries lib = ps_sqrt(radicand);
  for (int k = 0; k <= 6; ++k) REQUIRE(lib[k] == s[static_cast<std::size_t>(k)]);
  REQUIRE(lib * lib == radicand);
}

TEST_CASE("square roots square back for random integer series") {
  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    PowerSeries a(20);
    a.at(0) = 1;
    for (int k = 1; k <= 20; ++k) a.at(k) = Rational(static_cast<long>(rng.below(41)) - 20);
    const PowerSeries s = ps_sqrt(a);
    REQUIRE(s[0] == 1);
    REQUIRE(s * s == a);
  }
}

TEST_CASE("the functional equation solution") {
  const PowerSeries u = solve_u231(40);
  CHECK(u[0] == 1);

  const std::vector<long> prefix{1, 1, 1, 2, 5, 13, 35, 97, 275, 794};
  for (int n = 0; n <= 9; ++n) REQUIRE(u[n] == prefix[static_cast<std::size_t>(n)]);

  const PowerSeries z = PowerSeries::variable(40);
  const PowerSeries residual = u - PowerSeries::constant(1, 40) - z * (u * (u - z));
  CHECK(residual.is_zero());

  CHECK(u == closed_form_u231(40));
  CHECK(has_integer_coefficients(u));
  for (int k = 0; k <= 40; ++k) REQUIRE(u[k] > 0);
}

TEST_CASE("closed form prefix") {
  const PowerSeries u = closed_form_u231(3);
  CHECK(u[0] == 1);
  CHECK(u[1] == 1);
  CHECK(u[2] == 1);
  CHECK(u[3] == 2);
  CHECK(closed_form_u231(0)[0] == 1);
}

TEST_CASE("superadditivity of the solved coefficients up to order 40") {
  const PowerSeries u = solve_u231(40);
  for (int m = 1; m < 40; ++m) {
    for (int n = 1; m + n <= 40; ++n) {
      REQUIRE(integer_coefficient(u, m) * integer_coefficient(u, n) <=
              integer_coefficient(u, m + n));
    }
  }
}

TEST_CASE("indecomposable part extraction") {
  const PowerSeries one = PowerSeries::constant(1, 12);
  PowerSeries z = PowerSeries::variable(12);
  CHECK(indecomposable_from_total(one / (one - z)) == z);

  PowerSeries not_one(4);
  not_one.at(0) = 2;
  CHECK_THROWS_AS(indecomposable_from_total(not_one), std::invalid_argument);

  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    PowerSeries x(20);
    for (int k = 1; k <= 20; ++k) x.at(k) = Rational(static_cast<long>(rng.below(11)) - 5);
    const PowerSeries one20 = PowerSeries::constant(1, 20);
    REQUIRE(indecomposable_from_total(one20 / (one20 - x)) == x);
  }
}

TEST_CASE("brute u_321 prefix decomposes into nonnegative indecomposable counts") {
  const Permutation q321({3, 2, 1});
  const int top = 13;
  PowerSeries u(top);
  std::vector<Integer> un;
  for (int n = 0; n <= top; ++n) {
    un.push_back(count_ulis_avoiders(q321, n, 4));
    u.at(n) = Rational(un.back());
  }
  const PowerSeries u1 = indecomposable_from_total(u);
  REQUIRE(u1[0] == 0);
  for (int n = 1; n <= top; ++n) {
    REQUIRE(denominator(u1[n]) == 1);
    REQUIRE(u1[n] >= 0);
    REQUIRE(numerator(u1[n]) <= un[static_cast<std::size_t>(n)]);
  }
  const PowerSeries one = PowerSeries::constant(1, top);
  REQUIRE(one / (one - u1) == u);
}

TEST_CASE("bisection root finding") {
  CHECK(std::abs(find_real_root({1, -2}, 0.0, 1.0, 1e-12) - 0.5) <= 1e-12);
  CHECK(std::abs(find_real_root({1, -4}, 0.0, 1.0, 1e-12) - 0.25) <= 1e-12);

  const std::vector<Rational> radicand{1, -4, 2, 0, 1};
  const double root = find_real_root(radicand, 0.0, 0.5, 1e-12);
  CHECK(std::abs(root - 0.2956) <= 5e-4);
  CHECK(std::abs(1.0 / root - 3.383) <= 1e-3);

  CHECK_THROWS_AS(find_real_root({1, 1}, 0.0, 1.0, 1e-9), std::invalid_argument);
  CHECK_THROWS_AS(find_real_root({1, -2}, 0.0, 1.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(find_real_root({1, -2}, 1.0, 0.0, 1e-9), std::invalid_argument);
}

TEST_CASE("growth profiles") {
  CountTable ones;
  ones.object_class = ObjectClass::permutations;
  for (int n = 0; n <= 6; ++n) ones.rows.emplace_back(n, 1);
  const auto flat = growth_profile(ones);
  REQUIRE(flat.size() == 6);  // the n = 0 row has no root to take
  for (const auto& [n, r] : flat) REQUIRE(r == 1.0);

  const PowerSeries u = solve_u231(30);
  CountTable u231;
  for (int n = 0; n <= 30; ++n) u231.rows.emplace_back(n, integer_coefficient(u, n));
  const auto roots = growth_profile(u231);
  for (std::size_t i = 2; i < roots.size(); ++i) {
    REQUIRE(roots[i].second >= roots[i - 1].second);  // nondecreasing from n = 2
    REQUIRE(roots[i].second < 3.383);
  }

  CountTable bad;
  bad.rows.emplace_back(1, 0);
  CHECK_THROWS_AS(growth_profile(bad), std::invalid_argument);
}
