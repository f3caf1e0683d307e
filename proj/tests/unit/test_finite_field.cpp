#include "doctest.h"
#include "finite_field.hpp"
#include "helpers.hpp"
#include "tower.hpp"

using namespace rankmetric;
using testutil::contains;
using testutil::error_message;

TEST_SUITE("finite_field") {
  TEST_CASE("prime fields have an empty modulus") {
    auto f2 = Field::make(2, 1);
    CHECK(f2->q() == 2);
    CHECK(f2->modulus().empty());
    auto f3 = Field::make(3, 1);
    CHECK(f3->q() == 3);
    CHECK(f3->mul(2, 2) == 1);
  }

  TEST_CASE("F_4 uses x^2+x+1") {
    auto f4 = Field::make(2, 2);
    CHECK(f4->modulus() == std::vector<unsigned>{1, 1, 1});
    // only one monic quadratic over F_2 has no root
    int irreducible = 0;
    for (unsigned c0 = 0; c0 < 2; ++c0)
      for (unsigned c1 = 0; c1 < 2; ++c1) {
        const std::vector<unsigned> poly{c0, c1, 1};
        if (Field::is_irreducible(2, poly)) ++irreducible;
      }
    CHECK(irreducible == 1);
  }

  TEST_CASE("construction errors") {
    CHECK(contains(error_message([] { Field::make(4, 1); }), "not prime"));
    CHECK(contains(error_message([] { Field::make(3, 0); }), "bad exponent"));
    CHECK(testutil::error_kind([] { Field::make(2, 2, {1, 0, 1}); }) == ErrorKind::input);
  }

  TEST_CASE("field axioms, exhaustive for small q") {
    const std::vector<std::pair<unsigned, unsigned>> params{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {13, 1}};
    for (auto [p, e] : params) {
      auto f = Field::make(p, e);
      const Elem q = f->q();
      CAPTURE(q);
      for (Elem a = 0; a < q; ++a) {
        CHECK(f->add(a, f->neg(a)) == 0);
        CHECK(f->mul(a, 1) == a);
        if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
        CHECK(f->pow(a, q) == a);
        for (Elem b = 0; b < q; ++b) {
          CHECK(f->add(a, b) == f->add(b, a));
          CHECK(f->mul(a, b) == f->mul(b, a));
          for (Elem c = 0; c < q; ++c) {
            if (f->add(f->add(a, b), c) != f->add(a, f->add(b, c))) FAIL("add assoc");
            if (f->mul(f->mul(a, b), c) != f->mul(a, f->mul(b, c))) FAIL("mul assoc");
            if (f->mul(a, f->add(b, c)) != f->add(f->mul(a, b), f->mul(a, c))) FAIL("distributive");
          }
        }
      }
    }
  }

  TEST_CASE("element formatting round-trips") {
    auto f9 = Field::make(3, 2);
    for (Elem a = 0; a < 9; ++a) CHECK(f9->parse_element(f9->format(a)) == a);
    CHECK(f9->format(5) == "2.1");
    CHECK(testutil::error_kind([&] { f9->parse_element("3.0"); }) == ErrorKind::input);
  }

  TEST_CASE("FieldElement refuses mixed fields") {
    FieldElement a(Field::make(2, 1), 1);
    FieldElement b(Field::make(3, 1), 1);
    CHECK(testutil::error_kind([&] { (void)(a + b); }) == ErrorKind::mismatch);
  }

  TEST_CASE("trace examples") {
    auto f2 = Field::make(2, 1);
    auto tower = ExtensionTower::make(f2, 2);
    CHECK(tower.trace(0) == 0);
    // x is a root of x^2+x+1 in F_4
    CHECK(tower.trace(2) == 1);
    auto f3 = Field::make(3, 1);
    auto t3 = ExtensionTower::make(f3, 4);
    for (Elem a = 0; a < 3; ++a) CHECK(t3.trace(t3.embed(a)) == f3->from_integer(4 * static_cast<long long>(a)));
  }

  TEST_CASE("trace rejects elements of other fields") {
    auto tower = ExtensionTower::make(Field::make(2, 1), 3);
    FieldElement x(Field::make(2, 2), 1);
    CHECK(contains(error_message([&] { trace_to_base(tower, x); }), "field mismatch"));
  }

  TEST_CASE("Frobenius and trace properties on towers") {
    const std::vector<std::tuple<unsigned, unsigned, unsigned>> towers{{2, 1, 2}, {2, 1, 3}, {2, 1, 5}, {2, 1, 8}, {3, 1, 2},
                                                                       {3, 1, 3}, {3, 1, 5}, {2, 2, 2}, {2, 2, 4}, {5, 1, 3}};
    for (auto [p, e, m] : towers) {
      auto base = Field::make(p, e);
      auto t = ExtensionTower::make(base, m);
      const auto& top = *t.top();
      CAPTURE(p);
      CAPTURE(e);
      CAPTURE(m);
      std::vector<int> hits(base->q(), 0);
      for (Elem a = 0; a < base->q(); ++a) CHECK(t.frobenius(t.embed(a)) == t.embed(a));
      for (Elem x = 0; x < top.q(); ++x) {
        Elem y = x;
        for (unsigned i = 0; i < m; ++i) y = t.frobenius(y);
        if (y != x) FAIL("frobenius order");
        ++hits[t.trace(x)];
      }
      // surjective and balanced
      for (int h : hits) CHECK(h == static_cast<int>(top.q() / base->q()));
      std::mt19937_64 rng(p * 100 + m);
      for (int r = 0; r < 50; ++r) {
        const Elem x = static_cast<Elem>(rng() % top.q());
        const Elem y = static_cast<Elem>(rng() % top.q());
        const Elem c = static_cast<Elem>(rng() % base->q());
        CHECK(t.frobenius(top.add(x, y)) == top.add(t.frobenius(x), t.frobenius(y)));
        CHECK(t.frobenius(top.mul(x, y)) == top.mul(t.frobenius(x), t.frobenius(y)));
        CHECK(t.trace(top.add(top.mul(t.embed(c), x), y)) == base->add(base->mul(c, t.trace(x)), t.trace(y)));
      }
    }
  }

  TEST_CASE("dual bases") {
    for (auto [p, e, m] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{{2, 1, 2}, {2, 1, 3}, {3, 1, 2}, {3, 1, 3}, {2, 2, 2}, {5, 1, 2}}) {
      auto t = ExtensionTower::make(Field::make(p, e), m);
      const auto& top = *t.top();
      const auto& b = t.basis();
      const auto& db = t.dual_basis();
      REQUIRE(b.size() == m);
      for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < m; ++j) CHECK(t.trace(top.mul(b[i], db[j])) == (i == j ? 1U : 0U));
      CHECK(t.dual_of(db) == b);
      // coordinates reconstruct the element
      for (Elem x = 0; x < top.q(); ++x) {
        auto c = t.coordinates(x);
        Elem y = 0;
        for (unsigned i = 0; i < m; ++i) y = top.add(y, top.mul(t.embed(c[i]), b[i]));
        if (y != x) FAIL("coordinates");
      }
      CHECK(dual_basis(t).size() == m);
    }
    auto t = ExtensionTower::make(Field::make(2, 1), 3);
    CHECK(contains(error_message([&] { t.dual_of({1, 2, 3}); }), "not a basis"));
  }
}
