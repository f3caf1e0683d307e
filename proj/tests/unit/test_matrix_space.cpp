#include "doctest.h"
#include "helpers.hpp"
#include "matrix_space.hpp"
#include "oracles.hpp"
#include "qcombinatorics.hpp"

#include <set>

using namespace rankmetric;

namespace {

std::vector<std::vector<Elem>> all_vectors(const Field& f, std::size_t a) {
  std::vector<std::vector<Elem>> out{{}};
  for (std::size_t i = 0; i < a; ++i) {
    std::vector<std::vector<Elem>> next;
    for (const auto& v : out)
      for (Elem c = 0; c < f.q(); ++c) {
        auto w = v;
        w.push_back(c);
        next.push_back(w);
      }
    out = next;
  }
  return out;
}

std::vector<Subspace> all_subspaces(const FieldPtr& f, std::size_t a) {
  std::vector<Subspace> out;
  for (std::size_t u = 0; u <= a; ++u) for_each_subspace(f, a, u, [&](const Subspace& s) { out.push_back(s); });
  return out;
}

}  // namespace

TEST_SUITE("matrix_space") {
  TEST_CASE("rank examples") {
    auto f2 = Field::make(2, 1);
    CHECK(rank(Matrix(f2, 3, 4)) == 0);
    CHECK(rank(Matrix::identity(f2, 3, 5)) == 3);
    Matrix a(f2, 3, 4, {0, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 0});
    CHECK(rank(a) == 3);
    CHECK(rank_generic(a) == 3);
  }

  TEST_CASE("rank equals column and row space dimension") {
    std::mt19937_64 rng(7);
    for (auto [p, e, n, m] : std::vector<std::tuple<unsigned, unsigned, std::size_t, std::size_t>>{{2, 1, 2, 3}, {3, 1, 3, 4}, {2, 2, 3, 3}, {5, 1, 4, 6}, {2, 1, 6, 9}}) {
      auto f = Field::make(p, e);
      for (int r = 0; r < 40; ++r) {
        auto x = oracle::random_matrix(f, n, m, rng);
        const std::size_t rk = rank_generic(x);
        CHECK(rank(x) == rk);
        CHECK(column_space(x).dim() == rk);
        CHECK(row_space(x).dim() == rk);
        CHECK(rank(x.transposed()) == rk);
      }
    }
  }

  TEST_CASE("packed GF(2) rank agrees with elimination") {
    std::mt19937_64 rng(11);
    auto f2 = Field::make(2, 1);
    for (int r = 0; r < 200; ++r) {
      auto x = oracle::random_matrix(f2, 5, 7, rng);
      std::vector<std::uint64_t> rows;
      for (std::size_t i = 0; i < 5; ++i) {
        std::uint64_t w = 0;
        for (std::size_t j = 0; j < 7; ++j)
          if (x.at(i, j)) w |= std::uint64_t{1} << j;
        rows.push_back(w);
      }
      CHECK(rank_gf2(rows) == rank_generic(x));
    }
  }

  TEST_CASE("rank distance is a metric on F_2^{2x2}") {
    auto f2 = Field::make(2, 1);
    auto all = oracle::ambient_matrices(f2, 2, 2);
    REQUIRE(all.size() == 16);
    for (const auto& x : all)
      for (const auto& y : all) {
        const auto dxy = rank_distance(x, y);
        CHECK((dxy == 0) == (x == y));
        CHECK(dxy == rank_distance(y, x));
        CHECK(rank(x + y) <= rank(x) + rank(y));
        for (const auto& z : all)
          if (rank_distance(x, z) > dxy + rank_distance(y, z)) FAIL("triangle");
      }
  }

  TEST_CASE("trace product") {
    auto f2 = Field::make(2, 1);
    Matrix ones(f2, 2, 2, {1, 1, 1, 1});
    CHECK(trace_product(Matrix::identity(f2, 2, 2), ones).is_zero());
    // non-degenerate on F_2^{2x3}
    auto all = oracle::ambient_matrices(f2, 2, 3);
    for (const auto& x : all) {
      if (x.is_zero()) continue;
      bool hit = false;
      for (const auto& y : all) hit = hit || !trace_product(x, y).is_zero();
      CHECK(hit);
    }
    auto f9 = Field::make(3, 2);
    std::mt19937_64 rng(3);
    for (int r = 0; r < 50; ++r) {
      auto x = oracle::random_matrix(f9, 2, 3, rng);
      auto y = oracle::random_matrix(f9, 2, 3, rng);
      auto z = oracle::random_matrix(f9, 2, 3, rng);
      const Elem c = static_cast<Elem>(rng() % 9);
      CHECK(trace_product(x.scaled(c) + y, z) == FieldElement(f9, c) * trace_product(x, z) + trace_product(y, z));
      CHECK(trace_product(x, y) == trace_product(y, x));
    }
    CHECK(testutil::error_kind([&] { trace_product(Matrix(f2, 2, 2), Matrix(f2, 2, 3)); }) == ErrorKind::mismatch);
    CHECK(testutil::error_kind([&] { (void)(Matrix(f2, 2, 2) + Matrix(f9, 2, 2)); }) == ErrorKind::mismatch);
  }

  TEST_CASE("column and row spaces") {
    auto f3 = Field::make(3, 1);
    CHECK(column_space(Matrix(f3, 2, 3)).dim() == 0);
    CHECK(column_space(Matrix::identity(f3, 3, 3)) == Subspace::full(f3, 3));
    CHECK(row_space(Matrix::identity(f3, 3, 3)) == Subspace::full(f3, 3));
  }

  TEST_CASE("subspace lattice operations, exhaustive in F_2^3") {
    auto f2 = Field::make(2, 1);
    auto subs = all_subspaces(f2, 3);
    REQUIRE(subs.size() == 16);
    for (const auto& u : subs) {
      auto perp = orthogonal_subspace(u);
      CHECK(perp.dim() == 3 - u.dim());
      CHECK(orthogonal_subspace(perp) == u);
      for (const auto& v : subs) {
        CHECK((u + v).dim() + u.intersection(v).dim() == u.dim() + v.dim());
        CHECK((u + v).contains(u));
        CHECK(u.contains(u.intersection(v)));
      }
    }
    CHECK(orthogonal_subspace(Subspace::zero(f2, 3)) == Subspace::full(f2, 3));
  }

  TEST_CASE("subspace enumeration matches the q-binomial count") {
    for (unsigned q : {2U, 3U}) {
      auto f = Field::make(q, 1);
      for (std::size_t a = 0; a <= (q == 2 ? 5U : 4U); ++a)
        for (std::size_t u = 0; u <= a; ++u) {
          std::set<Subspace> seen;
          std::size_t count = 0;
          for_each_subspace(f, a, u, [&](const Subspace& s) {
            CHECK(s.dim() == u);
            seen.insert(s);
            ++count;
          });
          CHECK(count == seen.size());
          CHECK(BigNat(count) == q_binomial(static_cast<std::int64_t>(a), static_cast<std::int64_t>(u), q));
          SubspaceStream stream(f, a, u);
          std::size_t streamed = 0;
          while (auto s = stream.next()) {
            CHECK(seen.contains(*s));
            ++streamed;
          }
          CHECK(streamed == count);
        }
    }
    auto f2 = Field::make(2, 1);
    std::size_t c = 0;
    for_each_subspace(f2, 4, 2, [&](const Subspace&) { ++c; });
    CHECK(c == 35);
  }

  TEST_CASE("subspace stream order equals callback order") {
    auto f3 = Field::make(3, 1);
    std::vector<Subspace> pushed;
    for_each_subspace(f3, 4, 2, [&](const Subspace& s) { pushed.push_back(s); });
    SubspaceStream stream(f3, 4, 2);
    for (const auto& s : pushed) {
      auto t = stream.next();
      REQUIRE(t);
      CHECK(*t == s);
    }
    CHECK(!stream.next());
  }

  TEST_CASE("membership against brute-force span") {
    auto f3 = Field::make(3, 1);
    std::vector<std::vector<Elem>> gens{{1, 2, 0, 1}, {0, 1, 1, 2}};
    auto s = Subspace::span(f3, 4, gens);
    std::set<std::vector<Elem>> span;
    for (Elem a = 0; a < 3; ++a)
      for (Elem b = 0; b < 3; ++b) {
        std::vector<Elem> v(4);
        for (int i = 0; i < 4; ++i) v[i] = f3->add(f3->mul(a, gens[0][i]), f3->mul(b, gens[1][i]));
        span.insert(v);
      }
    for (const auto& v : all_vectors(*f3, 4)) CHECK(s.contains(v) == span.contains(v));
  }
}
