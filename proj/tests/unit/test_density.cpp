#include "density.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "qcombinatorics.hpp"

using namespace rankmetric;

TEST_SUITE("density") {
  TEST_CASE("census at (2,2,2,2)") {
    auto f2 = Field::make(2, 1);
    auto c = density_census(f2, 2, 2, 2);
    CHECK(c.total == 35);
    CHECK(c.exact_distance == 2);
    CHECK(c.ball_avoiding == 2);
    CHECK(c.common_complement == 2);
    CHECK(c.density == Rational(2, 35));
    CHECK(density_exact(f2, 2, 2, 1) == 1);
  }

  TEST_CASE("census counts agree on other shapes") {
    for (auto [p, n, m, d] : std::vector<std::tuple<unsigned, std::size_t, std::size_t, std::size_t>>{{2, 2, 3, 2}, {3, 2, 2, 2}, {2, 3, 3, 3}, {2, 1, 3, 1}}) {
      auto f = Field::make(p, 1);
      auto c = density_census(f, n, m, d);
      CHECK(c.exact_distance == c.ball_avoiding);
      CHECK(c.exact_distance == c.common_complement);
      CHECK(c.total == q_binomial(static_cast<std::int64_t>(n * m), static_cast<std::int64_t>(m * (n - d + 1)), p));
      CHECK(c.density <= density_bound_cc(p, n, m, d));
      CHECK(c.density <= density_bound_ball(p, n, m, d));
      CHECK(c.density > 0);
    }
    CHECK(density_exact(Field::make(2, 1), 2, 3, 2) == Rational(16, 465));
  }

  TEST_CASE("census budget") {
    CensusOptions tiny;
    tiny.budget = 10;
    auto msg = testutil::error_message([&] { density_census(Field::make(2, 1), 2, 2, 2, tiny); });
    CHECK(msg.find("use bounds") != std::string::npos);
    CHECK(testutil::error_kind([&] { density_census(Field::make(2, 1), 2, 2, 2, tiny); }) == ErrorKind::budget);
  }

  TEST_CASE("closed-form bounds") {
    CHECK(density_bound_cc(2, 2, 2, 2) == Rational(212, 1295));
    CHECK(density_bound_ball(2, 2, 2, 2) == Rational(4, 25));
    CHECK(density_bound_cc(5, 3, 4, 1) == 1);
    CHECK(density_bound_ball(5, 3, 4, 1) == 1);
    CHECK(density_bound_cc(3, 3, 3, 3) < density_bound_ball(3, 3, 3, 3));
    for (int q : {2, 3, 4, 7})
      for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t m = n; m <= 5; ++m)
          for (std::size_t d = 1; d <= n; ++d) {
            const auto cc = density_bound_cc(q, n, m, d);
            const auto ball = density_bound_ball(q, n, m, d);
            CHECK(cc > 0);
            CHECK(cc <= 1);
            CHECK(ball > 0);
            CHECK(ball <= 1);
          }
  }

  TEST_CASE("limit as q grows") {
    CHECK(asymptotic_q_limit(3, 4, 1).value == 1);
    auto l = asymptotic_q_limit(2, 2, 2);
    CHECK(l.value == Rational(1, 2));
    CHECK(l.value == alternating_factorial_sum(2));
    CHECK(asymptotic_q_limit(2, 5, 2).value == alternating_factorial_sum(5));
    CHECK(asymptotic_q_limit(3, 3, 2).value == 0);
    CHECK(asymptotic_q_limit(3, 7, 2).value == 0);
    CHECK(asymptotic_q_limit(3, 3, 2).exponent == -1);
    CHECK(asymptotic_q_limit(3, 3, 2).description == "O(q^-1)");
    CHECK(alternating_factorial_sum(0) == 1);
    CHECK(alternating_factorial_sum(3) == Rational(1, 3));
  }

  TEST_CASE("Euler function enclosures") {
    const Rational half(1, 2);
    Interval prev = euler_phi_truncated(half, 2);
    for (std::size_t t = 3; t <= 30; ++t) {
      auto cur = euler_phi_truncated(half, t);
      CHECK(cur.lo <= cur.hi);
      CHECK(cur.width() <= prev.width());
      CHECK(prev.contains(cur));
      prev = cur;
    }
    auto pent = euler_phi_pentagonal(half, 6);
    CHECK(pent.lo < pent.hi);
    // both enclose phi(1/2), so they overlap
    CHECK(pent.lo <= prev.hi);
    CHECK(prev.lo <= pent.hi);
    CHECK(prev.hi < 1 - half);
    CHECK(testutil::error_kind([&] { euler_phi_truncated(Rational(1), 5); }) == ErrorKind::domain);
    CHECK(testutil::error_kind([&] { euler_phi_pentagonal(Rational(0), 5); }) == ErrorKind::domain);
  }

  TEST_CASE("bounds as m grows") {
    auto a = asymptotic_m_bounds(2, 3, 2, 10);
    auto b = asymptotic_m_bounds(2, 3, 2, 40);
    CHECK(b.phi.width() < a.phi.width());
    CHECK(a.phi.contains(b.phi));
    CHECK(b.antrobus.lo <= b.antrobus.hi);
    CHECK(b.common_complement.lo <= b.common_complement.hi);
    CHECK(b.inverse_phi.lo >= 1);
    CHECK(b.half_bound == Rational(1, 2));
    auto big = asymptotic_m_bounds(101, 3, 2, 10);
    CHECK(big.common_complement.hi < big.antrobus.lo);
    CHECK(testutil::error_kind([] { asymptotic_m_bounds(2, 3, 1, 10); }) == ErrorKind::domain);
    // [2m m]_2 / 2^{m^2} increases towards 1/phi(1/2)
    Rational prev = 0;
    for (std::int64_t m = 1; m <= 8; ++m) {
      Rational r(q_binomial(2 * m, m, 2), ipow(2, static_cast<std::uint64_t>(m * m)));
      CHECK(r > prev);
      CHECK(r <= b.inverse_phi.hi);
      prev = r;
    }
  }

  TEST_CASE("density report") {
    auto r = density_report(2, 2, 2, 2, true);
    REQUIRE(r.exact);
    CHECK(r.exact->density == Rational(2, 35));
    CHECK(r.k == 2);
    CHECK(r.asymptotic_q.value == Rational(1, 2));
    CHECK(r.asymptotic_m);
    auto r1 = density_report(4, 2, 3, 1, true);
    CHECK(r1.exact->density == 1);
    CHECK(!r1.asymptotic_m);
    CHECK(testutil::error_kind([] { density_report(6, 2, 2, 2, true); }) == ErrorKind::input);
    auto nocensus = density_report(1000003, 3, 3, 2, false);
    CHECK(!nocensus.exact);
  }
}
