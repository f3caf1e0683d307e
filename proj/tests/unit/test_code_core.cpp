#include "doctest.h"
#include "helpers.hpp"
#include "matrix_space.hpp"
#include "oracles.hpp"
#include "qcombinatorics.hpp"

#include <algorithm>
#include <set>

using namespace rankmetric;
using testutil::load;

namespace {

std::set<std::vector<Elem>> as_set(const std::vector<Matrix>& xs) {
  std::set<std::vector<Elem>> out;
  for (const auto& x : xs) out.insert(vectorize(x));
  return out;
}

}  // namespace

TEST_SUITE("code_core") {
  TEST_CASE("construction from generators") {
    auto c = load("worked_example.rankcode");
    CHECK(c.dim() == 2);
    CHECK(c.size() == 9);
    auto f2 = Field::make(2, 1);
    auto zero = RankMetricCode::from_generators(f2, 2, 3, {});
    CHECK(zero.is_zero());
    CHECK(zero == RankMetricCode::zero(f2, 2, 3));
    Matrix g(f2, 2, 3, {1, 0, 1, 0, 1, 1});
    std::vector<Matrix> twice{g, g};
    CHECK(RankMetricCode::from_generators(f2, 2, 3, twice) == RankMetricCode::from_generators(f2, 2, 3, std::vector<Matrix>{g}));
    CHECK(RankMetricCode::ambient(f2, 2, 3).is_ambient());
  }

  TEST_CASE("construction errors") {
    auto f2 = Field::make(2, 1);
    auto f3 = Field::make(3, 1);
    std::vector<Matrix> wrong_shape{Matrix(f2, 2, 2)};
    CHECK(testutil::error_kind([&] { RankMetricCode::from_generators(f2, 2, 3, wrong_shape); }) == ErrorKind::mismatch);
    std::vector<Matrix> wrong_field{Matrix(f3, 2, 3)};
    CHECK(testutil::error_kind([&] { RankMetricCode::from_generators(f2, 2, 3, wrong_field); }) == ErrorKind::mismatch);
    CHECK(testutil::error_kind([&] { RankMetricCode::zero(f2, 3, 2); }) == ErrorKind::input);
  }

  TEST_CASE("codewords") {
    auto f2 = Field::make(2, 1);
    auto zero = RankMetricCode::zero(f2, 2, 2);
    auto zw = codewords(zero);
    REQUIRE(zw.size() == 1);
    CHECK(zw[0].is_zero());
    auto c = load("intro_example.rankcode");
    CHECK(c.dim() == 2);
    std::vector<Matrix> expected{Matrix(f2, 2, 2, {0, 0, 0, 0}), Matrix(f2, 2, 2, {1, 0, 0, 1}), Matrix(f2, 2, 2, {1, 1, 1, 0}),
                                 Matrix(f2, 2, 2, {0, 1, 1, 1})};
    CHECK(as_set(codewords(c)) == as_set(expected));
    for (const auto& x : expected) CHECK(c.contains(x));
    CHECK(!c.contains(Matrix(f2, 2, 2, {1, 0, 0, 0})));
  }

  TEST_CASE("codeword scan agrees with the naive span") {
    std::mt19937_64 rng(17);
    for (auto [p, e, n, m] : std::vector<std::tuple<unsigned, unsigned, std::size_t, std::size_t>>{{2, 1, 2, 3}, {3, 1, 2, 2}, {2, 2, 2, 2}, {2, 1, 3, 4}}) {
      auto f = Field::make(p, e);
      for (int r = 0; r < 10; ++r) {
        const std::size_t k = 1 + rng() % std::min<std::size_t>(n * m, 5);
        auto c = oracle::random_code(f, n, m, k, rng);
        auto words = codewords(c);
        CHECK(BigNat(words.size()) == c.size());
        CHECK(as_set(words) == as_set(oracle::codewords_naive(c)));
        CHECK(rank_distribution(c) == oracle::distribution_naive(c));
      }
    }
  }

  TEST_CASE("budget errors") {
    auto c = RankMetricCode::ambient(Field::make(2, 1), 3, 3);
    EnumOptions tiny;
    tiny.budget = 100;
    CHECK(testutil::error_message([&] { codewords(c, tiny); }).find("enumeration too large") != std::string::npos);
    CHECK(testutil::error_kind([&] { rank_distribution(c, tiny); }) == ErrorKind::budget);
    CHECK(testutil::error_kind([&] { covering_radius_exact(RankMetricCode::zero(c.field(), 3, 3), tiny); }) == ErrorKind::budget);
  }

  TEST_CASE("rank distribution examples") {
    CHECK(rank_distribution(load("worked_example.rankcode")).str() == "(1,0,4,4)");
    auto f2 = Field::make(2, 1);
    CHECK(rank_distribution(RankMetricCode::zero(f2, 3, 4)).str() == "(1,0,0,0)");
    CHECK(rank_distribution(RankMetricCode::ambient(f2, 2, 2)).str() == "(1,9,6)");
  }

  TEST_CASE("thread count does not change results") {
    std::mt19937_64 rng(23);
    for (auto [p, n, m] : std::vector<std::tuple<unsigned, std::size_t, std::size_t>>{{2, 3, 3}, {3, 2, 3}}) {
      auto f = Field::make(p, 1);
      for (int r = 0; r < 5; ++r) {
        auto c = oracle::random_code(f, n, m, 1 + rng() % 5, rng);
        EnumOptions one, many;
        many.threads = 3;
        CHECK(rank_distribution(c, one) == rank_distribution(c, many));
        CHECK(covering_radius_exact(c, one) == covering_radius_exact(c, many));
        auto offset = oracle::random_matrix(f, n, m, rng);
        CHECK(translate_rank_distribution(c, offset, one) == translate_rank_distribution(c, offset, many));
        auto w1 = codewords(c, one);
        auto w3 = codewords(c, many);
        CHECK(w1 == w3);
      }
    }
  }

  TEST_CASE("minimum distance and maximum rank") {
    auto f2 = Field::make(2, 1);
    CHECK(minimum_distance(RankMetricCode::zero(f2, 3, 3)) == 4);
    CHECK(maximum_rank(RankMetricCode::zero(f2, 3, 3)) == 0);
    CHECK(minimum_distance(load("mrd_example.rankcode")) == 2);
    CHECK(maximum_rank(load("mrd_example.rankcode")) == 2);
    CHECK(minimum_distance(load("worked_example.rankcode")) == 2);
    CHECK(minimum_distance(RankMetricCode::ambient(f2, 2, 3)) == 1);
    std::mt19937_64 rng(29);
    for (int r = 0; r < 30; ++r) {
      auto c = oracle::random_code(f2, 2, 3, 1 + rng() % 6, rng);
      auto w = oracle::distribution_naive(c);
      std::size_t d = 0, top = 0;
      for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] > 0) {
          if (d == 0) d = i;
          top = i;
        }
      CHECK(minimum_distance(c) == d);
      CHECK(maximum_rank(c) == top);
      // Singleton-like and anticode bounds
      CHECK(c.dim() <= 3 * (2 - d + 1));
      CHECK(c.dim() <= 3 * top);
    }
  }

  TEST_CASE("dual") {
    auto c = load("worked_example.rankcode");
    CHECK(dual(c).dim() == 7);
    auto ex = load("exrem.rankcode");
    auto f2 = ex.field();
    std::vector<Matrix> shown{Matrix(f2, 2, 3, {1, 0, 0, 0, 0, 1}), Matrix(f2, 2, 3, {0, 1, 0, 1, 0, 0}), Matrix(f2, 2, 3, {0, 0, 1, 1, 1, 0})};
    CHECK(dual(ex) == RankMetricCode::from_generators(f2, 2, 3, shown));
    for (const auto& x : codewords(dual(ex)))
      if (!x.is_zero()) CHECK(rank(x) == 2);
    std::mt19937_64 rng(31);
    for (auto [p, e] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}}) {
      auto f = Field::make(p, e);
      for (int r = 0; r < 10; ++r) {
        auto code = oracle::random_code(f, 2, 3, rng() % 7, rng);
        auto d = dual(code);
        CHECK(d.dim() + code.dim() == 6);
        CHECK(dual(d) == code);
        for (const auto& x : code.basis())
          for (const auto& y : d.basis()) CHECK(trace_product(x, y).is_zero());
      }
    }
    CHECK(dual(RankMetricCode::ambient(f2, 2, 2)).is_zero());
  }

  TEST_CASE("shortening") {
    auto f2 = Field::make(2, 1);
    std::mt19937_64 rng(37);
    auto c = oracle::random_code(f2, 3, 3, 4, rng);
    CHECK(shorten(c, Subspace::full(f2, 3)) == c);
    CHECK(shorten(c, Subspace::zero(f2, 3)).is_zero());
    CHECK(testutil::error_kind([&] { shorten(c, Subspace::full(f2, 2)); }) == ErrorKind::mismatch);
    // |C(U)| = |C| / q^{m(n-u)} |C^perp(U^perp)|, for every U
    for (auto [p, n, m] : std::vector<std::tuple<unsigned, std::size_t, std::size_t>>{{2, 2, 3}, {3, 2, 2}, {2, 3, 3}}) {
      auto f = Field::make(p, 1);
      for (int r = 0; r < 6; ++r) {
        auto code = oracle::random_code(f, n, m, rng() % (n * m + 1), rng);
        auto d = dual(code);
        for (std::size_t u = 0; u <= n; ++u)
          for_each_subspace(f, n, u, [&](const Subspace& s) {
            auto cu = shorten(code, s);
            auto du = shorten(d, orthogonal_subspace(s));
            CHECK(cu.size() * ipow(p, m * (n - u)) == code.size() * du.size());
            for (const auto& x : cu.basis()) CHECK(s.contains(column_space(x)));
          });
      }
    }
  }

  TEST_CASE("translates") {
    std::mt19937_64 rng(41);
    auto f2 = Field::make(2, 1);
    for (int r = 0; r < 20; ++r) {
      auto c = oracle::random_code(f2, 2, 3, 1 + rng() % 4, rng);
      auto w = rank_distribution(c);
      CHECK(translate_rank_distribution(c, Matrix(f2, 2, 3)) == w);
      auto words = codewords(c);
      CHECK(translate_rank_distribution(c, words[rng() % words.size()]) == w);
      auto m = oracle::random_matrix(f2, 2, 3, rng);
      auto t = translate_rank_distribution(c, m);
      CHECK(t == oracle::translate_distribution(c, m));
      CHECK((t[0] == 0) == !c.contains(m));
    }
  }

  TEST_CASE("initial entries and sets") {
    auto f2 = Field::make(2, 1);
    CHECK(initial_entry(Matrix(f2, 3, 4, {0, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 0})) == Position{1, 4});
    CHECK(initial_set(load("exrem.rankcode")) == EntrySet{{1, 1}, {1, 2}, {1, 3}});
    CHECK(initial_set(load("exrem.rankcode")).str() == "{(1,1),(1,2),(1,3)}");
    Matrix g(f2, 2, 3, {0, 0, 0, 0, 1, 1});
    CHECK(initial_set(RankMetricCode::from_generators(f2, 2, 3, std::vector<Matrix>{g})) == EntrySet{initial_entry(g)});
    CHECK(testutil::error_message([&] { initial_set(RankMetricCode::zero(f2, 2, 2)); }).find("undefined for zero code") != std::string::npos);
    std::mt19937_64 rng(43);
    for (auto p : {2U, 3U}) {
      auto f = Field::make(p, 1);
      for (int r = 0; r < 30; ++r) {
        auto c = oracle::random_code(f, 2, 3, 1 + rng() % 6, rng);
        auto in = initial_set(c);
        CHECK(in.size() == c.dim());
        const std::size_t d = minimum_distance(c);
        std::set<Position> from_words;
        for (const auto& x : codewords(c))
          if (!x.is_zero()) from_words.insert(initial_entry(x));
        CHECK(from_words.size() == in.size());
        for (auto pos : in) {
          CHECK(from_words.contains(pos));
          CHECK(pos.row <= 2 - d + 1);
        }
      }
    }
  }

  TEST_CASE("exact covering radius") {
    auto f2 = Field::make(2, 1);
    CHECK(covering_radius_exact(RankMetricCode::ambient(f2, 2, 3)) == 0);
    CHECK(covering_radius_exact(RankMetricCode::zero(f2, 2, 3)) == 2);
    CHECK(covering_radius_exact(load("exrem.rankcode")) == 1);
    CHECK(covering_radius_exact(load("coverbound.rankcode")) == oracle::covering_radius(load("coverbound.rankcode")));
    std::mt19937_64 rng(47);
    for (auto [p, n, m] : std::vector<std::tuple<unsigned, std::size_t, std::size_t>>{{2, 2, 3}, {3, 2, 2}, {2, 3, 3}}) {
      auto f = Field::make(p, 1);
      for (int r = 0; r < 8; ++r) {
        auto c = oracle::random_code(f, n, m, rng() % (n * m + 1), rng);
        CHECK(covering_radius_exact(c) == oracle::covering_radius(c));
      }
    }
  }

  TEST_CASE("MRD and anticode defects") {
    auto mrd = load("mrd_example.rankcode");
    CHECK(is_mrd(mrd));
    CHECK(singleton_defect(mrd) == 0);
    CHECK(is_mrd(dual(mrd)));
    auto f2 = Field::make(2, 1);
    CHECK(singleton_defect(RankMetricCode::zero(f2, 2, 3)) == 0);
    CHECK(is_mrd(RankMetricCode::zero(f2, 2, 3)));
    CHECK(anticode_defect(mrd) == 3);
    CHECK(!is_optimal_anticode(mrd).optimal);
  }

  TEST_CASE("optimal anticodes") {
    std::mt19937_64 rng(53);
    for (auto [p, n, m] : std::vector<std::tuple<unsigned, std::size_t, std::size_t>>{{2, 2, 3}, {3, 2, 3}, {2, 3, 3}}) {
      auto f = Field::make(p, 1);
      for (std::size_t u = 1; u <= n; ++u)
        for_each_subspace(f, n, u, [&](const Subspace& s) {
          auto c = column_support_code(s, m);
          CHECK(c.dim() == m * u);
          CHECK(anticode_defect(c) == 0);
          auto check = is_optimal_anticode(c);
          CHECK(check.optimal);
          REQUIRE(check.support);
          CHECK(check.side == SupportSide::column);
          CHECK(*check.support == s);
          CHECK(dual(c) == column_support_code(orthogonal_subspace(s), m));
        });
    }
    // row side is found for square codes that are not column anticodes
    auto f2 = Field::make(2, 1);
    std::vector<std::vector<Elem>> v{{1, 0, 1}};
    auto row = row_support_code(Subspace::span(f2, 3, v), 3);
    auto check = is_optimal_anticode(row);
    CHECK(check.optimal);
    CHECK(check.side == SupportSide::row);
    CHECK(*check.support == Subspace::span(f2, 3, v));
    // Meshulam: some codeword has rank >= lambda(in(C))
    for (int r = 0; r < 50; ++r) {
      auto c = oracle::random_code(f2, 3, 3, 1 + rng() % 9, rng);
      auto in = initial_set(c);
      CHECK(maximum_rank(c) >= oracle::line_cover(in, 3, 3));
      CHECK(c.dim() <= 3 * maximum_rank(c));
    }
  }

  TEST_CASE("vectorization round trip") {
    auto f3 = Field::make(3, 1);
    std::mt19937_64 rng(59);
    auto x = oracle::random_matrix(f3, 2, 4, rng);
    auto v = vectorize(x);
    CHECK(v.size() == 8);
    CHECK(v[5] == x.at(1, 1));
    CHECK(matrix_from_vector(f3, 2, 4, v) == x);
  }
}
