#include "doctest.h"
#include "helpers.hpp"
#include "macwilliams.hpp"
#include "matrix_space.hpp"
#include "oracles.hpp"
#include "qcombinatorics.hpp"

using namespace rankmetric;
using testutil::dist;

namespace {

std::vector<RankMetricCode> all_codes(const FieldPtr& f, std::size_t n, std::size_t m) {
  std::vector<RankMetricCode> out;
  for (std::size_t k = 0; k <= n * m; ++k)
    for_each_subspace(f, n * m, k, [&](const Subspace& s) { out.push_back(RankMetricCode::from_space(s, n, m)); });
  return out;
}

struct MutationGuard {
  MutationGuard() { testing::set_transform_mutation(true); }
  ~MutationGuard() { testing::set_transform_mutation(false); }
};

}  // namespace

TEST_SUITE("macwilliams") {
  TEST_CASE("worked example") {
    const auto w = dist({1, 0, 4, 4});
    CHECK(transform(w, 3, 3, 3).str() == "(1,38,888,1260)");
    // the W_3 term by term: inner sums for j = 0, 2, 3
    auto inner = [](std::int64_t j) {
      BigInt s = 0;
      for (std::int64_t u = 0; u <= 3; ++u) {
        BigInt t = ipow(3, static_cast<std::uint64_t>(3 * u) + choose2(3 - u)) * q_binomial(3 - j, u, 3) * q_binomial(3 - u, 3 - u, 3);
        s += (3 - u) % 2 ? -t : t;
      }
      return s;
    };
    CHECK(inner(0) == 11232);
    CHECK(inner(2) == 54);
    CHECK(inner(3) == -27);
    CHECK((inner(0) + 4 * inner(2) + 4 * inner(3)) / 9 == 1260);
    CHECK(solve_dual_distribution_by_moments(w, 3, 3, 3).str() == "(1,38,888,1260)");
    CHECK(oracle::dual_distribution(testutil::load("worked_example.rankcode")).str() == "(1,38,888,1260)");
  }

  TEST_CASE("edge distributions") {
    CHECK(transform(dist({1, 9, 6}), 2, 2, 2).str() == "(1,0,0)");
    CHECK(transform(dist({1, 0, 0}), 2, 2, 2).str() == "(1,9,6)");
    CHECK(testutil::error_message([] { transform(dist({1, 1, 1}), 2, 2, 2); }).find("not a code size") != std::string::npos);
    // zero code: the dual is the ambient space
    auto f3 = Field::make(3, 1);
    CHECK(solve_dual_distribution_by_moments(dist({1, 0, 0}), 2, 3, 3) == oracle::distribution_naive(RankMetricCode::ambient(f3, 2, 3)));
  }

  TEST_CASE("transform equals dual enumeration on every code of F_2^{2x2}") {
    auto codes = all_codes(Field::make(2, 1), 2, 2);
    CHECK(codes.size() == 67);
    for (const auto& c : codes) {
      const auto w = rank_distribution(c);
      const auto wd = transform(w, 2, 2, 2);
      CHECK(wd == oracle::dual_distribution(c));
      CHECK(transform(wd, 2, 2, 2) == w);
      CHECK(solve_dual_distribution_by_moments(w, 2, 2, 2) == wd);
      for (std::size_t s = 0; s <= 2; ++s) CHECK(binomial_moment_check(w, wd, 2, 2, 2, s));
    }
  }

  TEST_CASE("transform on random codes") {
    std::mt19937_64 rng(67);
    for (auto [p, e, n, m] : std::vector<std::tuple<unsigned, unsigned, std::size_t, std::size_t>>{{2, 1, 2, 3}, {3, 1, 2, 2}, {2, 2, 2, 2}, {2, 1, 3, 3}, {5, 1, 2, 2}}) {
      auto f = Field::make(p, e);
      for (int r = 0; r < 8; ++r) {
        auto c = oracle::random_code(f, n, m, rng() % (n * m + 1), rng);
        const auto w = rank_distribution(c);
        const auto wd = transform(w, n, m, f->q());
        CHECK(wd == rank_distribution(dual(c)));
        CHECK(solve_dual_distribution_by_moments(w, n, m, f->q()) == wd);
        for (std::size_t s = 0; s <= n; ++s) CHECK(binomial_moment_check(w, wd, n, m, f->q(), s));
      }
    }
    CHECK(binomial_moment_check(dist({1, 0, 4, 4}), dist({1, 38, 888, 1260}), 3, 3, 3, 0));
    CHECK(!binomial_moment_check(dist({1, 0, 4, 4}), dist({1, 37, 889, 1260}), 3, 3, 3, 2));
  }

  TEST_CASE("MRD distributions") {
    CHECK(mrd_distribution(2, 3, 2, 3).str() == "(1,0,26)");
    CHECK(mrd_distribution(2, 2, 2, 2).str() == "(1,0,3)");
    CHECK(mrd_distribution(2, 2, 1, 2).str() == "(1,9,6)");
    CHECK(testutil::error_kind([] { mrd_distribution(2, 2, 3, 2); }) == ErrorKind::input);
    CHECK(testutil::error_kind([] { mrd_distribution(3, 2, 1, 2); }) == ErrorKind::input);
    for (int q : {2, 3, 4, 5})
      for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t m = n; m <= 5; ++m)
          for (std::size_t d = 1; d <= n; ++d) {
            auto w = mrd_distribution(n, m, d, q);
            CHECK(w.total() == ipow(q, m * (n - d + 1)));
            for (std::size_t i = 1; i < d; ++i) CHECK(w[i] == 0);
            for (std::size_t i = d; i <= n; ++i) CHECK(w[i] > 0);
            // the dual of an MRD code is MRD with d = n - d + 2
            if (d >= 2) CHECK(transform(w, n, m, q) == mrd_distribution(n, m, n - d + 2, q));
          }
  }

  TEST_CASE("translate tail against brute-force cosets") {
    std::mt19937_64 rng(71);
    for (auto [p, n, m] : std::vector<std::tuple<unsigned, std::size_t, std::size_t>>{{2, 2, 3}, {3, 2, 2}, {2, 3, 3}}) {
      auto f = Field::make(p, 1);
      for (int r = 0; r < 10; ++r) {
        auto c = oracle::random_code(f, n, m, 1 + rng() % (n * m - 1), rng);
        const std::size_t dd = minimum_distance(transform(rank_distribution(c), n, m, p));
        for (int t = 0; t < 4; ++t) {
          auto offset = oracle::random_matrix(f, n, m, rng);
          auto full = oracle::translate_distribution(c, offset);
          CHECK(translate_distribution(full, n, m, p, c.size(), dd) == full);
          for (std::size_t i = n + 1 - dd; i <= n; ++i) CHECK(translate_tail(full, n, m, p, c.size(), dd, i) == full[i]);
        }
      }
    }
    auto c = testutil::load("exrem.rankcode");
    CHECK(testutil::error_kind([&] { translate_tail(dist({0, 1}), 2, 3, 2, c.size(), 2, 0); }) == ErrorKind::domain);
    CHECK(testutil::error_kind([&] { translate_tail(dist({0, 1}), 2, 3, 2, c.size(), 2, 3); }) == ErrorKind::domain);
  }

  TEST_CASE("a translate outside the code has a nonzero low weight") {
    auto f2 = Field::make(2, 1);
    std::mt19937_64 rng(73);
    for (int r = 0; r < 10; ++r) {
      auto c = oracle::random_code(f2, 2, 3, 1 + rng() % 5, rng);
      const std::size_t dd = minimum_distance(dual(c));
      for (const auto& x : oracle::ambient_matrices(f2, 2, 3)) {
        if (c.contains(x)) continue;
        auto t = translate_rank_distribution(c, x);
        bool some = false;
        for (std::size_t j = 1; j <= std::min<std::size_t>(2, 2 - dd + 1); ++j) some = some || t[j] > 0;
        CHECK(some);
      }
    }
  }

  TEST_CASE("mutation hook changes the result") {
    {
      MutationGuard guard;
      bool differs = true;
      try {
        differs = transform(dist({1, 0, 4, 4}), 3, 3, 3).str() != "(1,38,888,1260)";
      } catch (const Error&) {
      }
      CHECK(differs);
    }
    CHECK(transform(dist({1, 0, 4, 4}), 3, 3, 3).str() == "(1,38,888,1260)");
  }
}
