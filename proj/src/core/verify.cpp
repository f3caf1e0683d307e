#include "verify.hpp"

#include "codefile.hpp"
#include "constructions.hpp"
#include "covering.hpp"
#include "density.hpp"
#include "error.hpp"
#include "macwilliams.hpp"
#include "oracles.hpp"
#include "qcombinatorics.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <random>

namespace rankmetric {

namespace {

// Thrown from inside a check to record its first failure.
struct Mismatch {
  Counterexample example;
};

[[noreturn]] void mismatch(const RankMetricCode* code, std::string input, std::string expected, std::string actual) {
  Counterexample ex{{}, std::move(input), std::move(expected), std::move(actual)};
  if (code) ex.code_file = print_code(*code, {"case: " + ex.input, "expected: " + ex.expected, "actual: " + ex.actual});
  throw Mismatch{std::move(ex)};
}

template <class T>
void expect_eq(const RankMetricCode* code, const std::string& input, const T& expected, const T& actual) {
  if (!(expected == actual)) {
    if constexpr (std::is_same_v<T, RankDistribution>) {
      mismatch(code, input, expected.str(), actual.str());
    } else if constexpr (std::is_same_v<T, RankMetricCode>) {
      mismatch(code, input, print_code(expected), print_code(actual));
    } else {
      mismatch(code, input, std::to_string(expected), std::to_string(actual));
    }
  }
}

void expect(const RankMetricCode* code, const std::string& input, bool ok, const std::string& what) {
  if (!ok) mismatch(code, input, what, "violated");
}

CheckResult run_check(const std::string& name, const std::function<std::uint64_t()>& body) {
  CheckResult r;
  r.name = name;
  try {
    r.cases = body();
    r.detail = std::to_string(r.cases) + " cases";
  } catch (const Mismatch& m) {
    r.passed = false;
    r.counterexample = m.example;
    r.detail = "mismatch on " + m.example.input;
  } catch (const Error& e) {
    r.passed = false;
    r.detail = std::string("error: ") + e.what();
  }
  return r;
}

std::vector<RankMetricCode> all_codes(const FieldPtr& f, std::size_t n, std::size_t m) {
  std::vector<RankMetricCode> out;
  for (std::size_t k = 0; k <= n * m; ++k) {
    for_each_subspace(f, n * m, k, [&](const Subspace& s) { out.push_back(RankMetricCode::from_space(s, n, m)); });
  }
  return out;
}

std::string shape(const RankMetricCode& c) {
  return "q=" + std::to_string(c.field()->q()) + " " + std::to_string(c.n()) + "x" + std::to_string(c.m()) + " dim " + std::to_string(c.dim());
}

RankMetricCode worked_example() {
  const auto f = Field::make(3, 1);
  const std::vector<Matrix> gens{Matrix(f, 3, 3, {0, 0, 1, 2, 0, 0, 0, 0, 0}), Matrix(f, 3, 3, {2, 0, 0, 1, 2, 1, 1, 0, 2})};
  return RankMetricCode::from_generators(f, 3, 3, gens);
}

void check_duality(const RankMetricCode& c, const EnumOptions& eo) {
  const BigInt q = c.field()->q();
  const auto w = rank_distribution(c, eo);
  const auto brute = oracle::dual_distribution(c);
  const auto wd = transform(w, c.n(), c.m(), q);
  expect_eq(&c, "transform vs dual enumeration, " + shape(c), brute, wd);
  expect_eq(&c, "transform involution, " + shape(c), w, transform(wd, c.n(), c.m(), q));
  expect_eq(&c, "binomial moments vs transform, " + shape(c), wd, solve_dual_distribution_by_moments(w, c.n(), c.m(), q));
  for (std::size_t s = 0; s <= c.n(); ++s) expect(&c, "binomial moment s=" + std::to_string(s) + ", " + shape(c), binomial_moment_check(w, wd, c.n(), c.m(), q, s), "moment identity");
}

void check_covering(const RankMetricCode& c, const EnumOptions& eo) {
  const auto r = covering_report(c, eo);
  const std::size_t rho = oracle::covering_radius(c);
  expect_eq(&c, "covering radius, " + shape(c), rho, r.exact.value_or(SIZE_MAX));
  expect(&c, "lower bound, " + shape(c), r.lower_bound <= rho, "ceil((d-1)/2) <= rho");
  if (r.dual_distance_bound) expect(&c, "dual distance bound, " + shape(c), rho <= *r.dual_distance_bound, "rho <= n - d(C^perp) + 1");
  expect(&c, "external distance bound, " + shape(c), rho <= r.external_distance_bound, "rho <= s(C)");
  if (r.initial_set_bound) expect(&c, "initial set bound, " + shape(c), rho <= *r.initial_set_bound, "rho <= d - 1 + lambda(S)");
}

std::uint64_t check_mrd(const FieldPtr& f, std::size_t n, std::size_t m, std::size_t d, const EnumOptions& eo) {
  const auto built = build_mrd(f, n, m, d);
  const auto& c = built.code;
  const std::string label = "build_mrd q=" + std::to_string(f->q()) + " n=" + std::to_string(n) + " m=" + std::to_string(m) + " d=" + std::to_string(d);
  const auto w = rank_distribution(c, eo);
  expect_eq(&c, label + " distribution", mrd_distribution(n, m, d, f->q()), w);
  expect_eq(&c, label + " minimum distance", d, minimum_distance(w));
  expect(&c, label, is_mrd(c, eo), "MRD");
  const auto wd = transform(w, n, m, f->q());
  expect_eq(&c, label + " dual distance", n - d + 2, minimum_distance(wd));
  std::uint64_t cases = 1;
  for (std::size_t u = d - 1; u <= n; ++u) {
    const BigNat expected = ipow(f->q(), m * (u - d + 1));
    for_each_subspace(f, n, u, [&](const Subspace& s) {
      ++cases;
      const BigNat got = shorten(c, s).size();
      if (got != expected) mismatch(&c, label + " shortening to U=" + s.str(), expected.str(), got.str());
    });
  }
  return cases;
}

}  // namespace

VerifyLevel parse_verify_level(const std::string& text) {
  if (text == "desk") return VerifyLevel::desk;
  if (text == "exhaustive") return VerifyLevel::exhaustive;
  fail(ErrorKind::input, "unknown verify level '" + text + "' (expected desk or exhaustive)");
}

std::string to_string(VerifyLevel level) { return level == VerifyLevel::desk ? "desk" : "exhaustive"; }

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerifyReport run_verification(const VerifyOptions& opt) {
  struct MutationGuard {
    explicit MutationGuard(bool on) { testing::set_transform_mutation(on); }
    ~MutationGuard() { testing::set_transform_mutation(false); }
  } guard(opt.mutate_transform);

  const bool deep = opt.level == VerifyLevel::exhaustive;
  const EnumOptions& eo = opt.enumeration;
  const auto f2 = Field::make(2, 1);
  const auto f3 = Field::make(3, 1);
  std::mt19937_64 rng(opt.seed);
  VerifyReport report;
  report.level = opt.level;

  report.checks.push_back(run_check("macwilliams-worked-example", [&]() -> std::uint64_t {
    const auto c = worked_example();
    const auto w = rank_distribution(c, eo);
    expect_eq(&c, "worked example distribution", RankDistribution{{1, 0, 4, 4}}, w);
    expect_eq(&c, "worked example dual distribution", RankDistribution{{1, 38, 888, 1260}}, transform(w, 3, 3, 3));
    check_duality(c, eo);
    return 1;
  }));

  report.checks.push_back(run_check("macwilliams-vs-dual-enumeration", [&]() -> std::uint64_t {
    std::uint64_t cases = 0;
    for (const auto& c : all_codes(f2, 2, 2)) {
      check_duality(c, eo);
      ++cases;
    }
    if (deep) {
      for (const auto& c : all_codes(f2, 2, 3)) {
        check_duality(c, eo);
        ++cases;
      }
      for (const auto& c : all_codes(f3, 2, 2)) {
        check_duality(c, eo);
        ++cases;
      }
    } else {
      for (int t = 0; t < 20; ++t) {
        check_duality(oracle::random_code(f2, 2, 3, rng() % 7, rng), eo);
        check_duality(oracle::random_code(f3, 2, 2, rng() % 5, rng), eo);
        cases += 2;
      }
    }
    return cases;
  }));

  report.checks.push_back(run_check("covering-radius-bounds", [&]() -> std::uint64_t {
    std::uint64_t cases = 0;
    for (const auto& c : all_codes(f2, 2, 2)) {
      check_covering(c, eo);
      ++cases;
    }
    if (deep) {
      for (const auto& c : all_codes(f2, 2, 3)) {
        check_covering(c, eo);
        ++cases;
      }
    } else {
      for (int t = 0; t < 20; ++t) {
        check_covering(oracle::random_code(f2, 2, 3, rng() % 7, rng), eo);
        ++cases;
      }
    }
    return cases;
  }));

  report.checks.push_back(run_check("mrd-construction", [&]() -> std::uint64_t {
    std::uint64_t cases = 0;
    std::vector<FieldPtr> fields{f2, f3};
    if (deep) {
      fields.push_back(Field::make(2, 2));
      fields.push_back(Field::make(5, 1));
    }
    for (const auto& f : fields) {
      for (std::size_t m = 1; m <= 3; ++m) {
        for (std::size_t n = 1; n <= m; ++n) {
          for (std::size_t d = 1; d <= n; ++d) cases += check_mrd(f, n, m, d, eo);
        }
      }
    }
    return cases;
  }));

  report.checks.push_back(run_check("translate-formula", [&]() -> std::uint64_t {
    std::uint64_t cases = 0;
    auto run = [&](const FieldPtr& f, std::size_t n, std::size_t m, std::size_t codes, std::size_t translates, std::size_t max_dim) {
      for (std::size_t t = 0; t < codes; ++t) {
        const auto c = oracle::random_code(f, n, m, 1 + rng() % max_dim, rng);
        const auto w = rank_distribution(c, eo);
        const std::size_t dd = minimum_distance(transform(w, n, m, f->q()));
        for (std::size_t s = 0; s < translates; ++s) {
          const Matrix x = oracle::random_matrix(f, n, m, rng);
          const auto brute = oracle::translate_distribution(c, x);
          const auto formula = translate_distribution(brute, n, m, f->q(), c.size(), dd);
          expect_eq(&c, "translate by\n" + x.str(), brute, formula);
          expect_eq(&c, "translate scan by\n" + x.str(), brute, translate_rank_distribution(c, x, eo));
          ++cases;
        }
      }
    };
    run(f2, 2, 3, deep ? 50 : 20, deep ? 10 : 5, 4);
    if (deep) run(f3, 2, 2, 20, 10, 3);
    return cases;
  }));

  report.checks.push_back(run_check("density-census", [&]() -> std::uint64_t {
    std::uint64_t cases = 0;
    std::vector<std::tuple<unsigned, std::size_t, std::size_t, std::size_t>> params{{2, 2, 2, 2}, {2, 2, 3, 2}, {3, 2, 2, 2}, {2, 2, 2, 1}};
    if (deep) params.push_back({2, 2, 3, 1});
    for (auto [q, n, m, d] : params) {
      const auto census = density_census(Field::make(q, 1), n, m, d);
      const std::string label = "census q=" + std::to_string(q) + " n=" + std::to_string(n) + " m=" + std::to_string(m) + " d=" + std::to_string(d);
      if (census.density > density_bound_cc(q, n, m, d)) mismatch(nullptr, label, "density <= cc bound", to_decimal(census.density));
      if (census.density > density_bound_ball(q, n, m, d)) mismatch(nullptr, label, "density <= ball bound", to_decimal(census.density));
      ++cases;
    }
    const auto c = density_census(f2, 2, 2, 2);
    if (c.density != Rational(2, 35)) mismatch(nullptr, "census q=2 n=2 m=2 d=2", "2/35", to_decimal(c.density));
    return cases;
  }));

  report.checks.push_back(run_check("nu-theta-counts", [&]() -> std::uint64_t {
    std::uint64_t cases = 0;
    std::vector<FieldPtr> fields{f2};
    if (deep) fields.push_back(f3);
    for (const auto& f : fields) {
      for (std::size_t a = 1; a <= 4; ++a) {
        for (std::size_t k = 0; k <= a; ++k) {
          const std::size_t co = a - k;
          for (std::size_t ell = (a > 2 * k ? a - 2 * k : 0); ell <= co; ++ell) {
            const std::uint64_t brute = oracle::nu_count(a, k, ell, f);
            const BigNat formula = nu(static_cast<std::int64_t>(a), static_cast<std::int64_t>(k), static_cast<std::int64_t>(ell), f->q());
            const std::string label = "nu(" + std::to_string(a) + "," + std::to_string(k) + "," + std::to_string(ell) + ") q=" + std::to_string(f->q());
            if (formula != brute) mismatch(nullptr, label, std::to_string(brute), formula.str());
            ++cases;
          }
        }
      }
      for (std::size_t n = 1; n <= (deep ? 4 : 3); ++n) {
        for (std::size_t u = 0; u <= n; ++u) {
          BigNat sum = 0;
          for (std::size_t i = (2 * u > n ? 2 * u - n : 0); i <= u; ++i) {
            const std::uint64_t brute = oracle::theta_count(n, u, i, f);
            const BigNat formula = theta(static_cast<std::int64_t>(n), static_cast<std::int64_t>(u), static_cast<std::int64_t>(i), f->q());
            const std::string label = "theta(" + std::to_string(n) + "," + std::to_string(u) + "," + std::to_string(i) + ") q=" + std::to_string(f->q());
            if (formula != brute) mismatch(nullptr, label, std::to_string(brute), formula.str());
            sum += formula;
            ++cases;
          }
          const BigNat g = q_binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(u), f->q());
          const BigNat g2 = g * g;
          if (sum != g2) mismatch(nullptr, "sum of theta, n=" + std::to_string(n) + " u=" + std::to_string(u), g2.str(), sum.str());
        }
      }
    }
    return cases;
  }));

  report.checks.push_back(run_check("line-cover", [&]() -> std::uint64_t {
    std::uint64_t cases = 0;
    const std::size_t limit = deep ? 4 : 3;
    for (std::size_t a = 1; a <= limit; ++a) {
      for (std::size_t b = 1; b <= limit; ++b) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (a * b)); ++mask) {
          EntrySet s;
          for (std::size_t t = 0; t < a * b; ++t) {
            if ((mask >> t) & 1U) s.insert({t / b + 1, t % b + 1});
          }
          const std::size_t got = lambda_cover(s, a, b);
          const std::size_t brute = oracle::line_cover(s, a, b);
          if (got != brute) mismatch(nullptr, "S=" + s.str() + " in " + std::to_string(a) + "x" + std::to_string(b), std::to_string(brute), std::to_string(got));
          ++cases;
        }
      }
    }
    return cases;
  }));

  report.checks.push_back(run_check("anticodes", [&]() -> std::uint64_t {
    std::uint64_t cases = 0;
    for (const auto& f : {f2, f3}) {
      for (std::size_t n = 1; n <= 3; ++n) {
        for (std::size_t m = n; m <= 3; ++m) {
          for (std::size_t u = 0; u <= n; ++u) {
            for_each_subspace(f, n, u, [&](const Subspace& s) {
              const auto c = build_column_anticode(s, m);
              const std::string label = "column anticode U=" + s.str() + " m=" + std::to_string(m);
              expect_eq(&c, label + " defect", std::size_t{0}, anticode_defect(c, eo));
              const auto check = is_optimal_anticode(c, eo);
              expect(&c, label, check.optimal && check.side == SupportSide::column && check.support && *check.support == s, "witness recovers U");
              expect_eq(&c, label + " dual", build_column_anticode(orthogonal_subspace(s), m), dual(c));
              ++cases;
            });
          }
        }
      }
    }
    for (int t = 0; t < 50; ++t) {
      const auto c = oracle::random_code(f2, 2, 3, 1 + rng() % 6, rng);
      const auto in = initial_set(c);
      expect(&c, "Meshulam bound, " + shape(c), maximum_rank(c, eo) >= lambda_cover(in, c.n(), c.m()), "maxrk >= lambda(in(C))");
      ++cases;
    }
    return cases;
  }));

  report.checks.push_back(run_check("codefile-roundtrip", [&]() -> std::uint64_t {
    std::uint64_t cases = 0;
    for (const auto& f : {f2, f3, Field::make(2, 2)}) {
      for (std::size_t d = 1; d <= 3; ++d) {
        const auto c = build_mrd(f, 3, 3, d).code;
        expect_eq(&c, "round trip", c, parse_code_string(print_code(c)));
        ++cases;
      }
    }
    return cases;
  }));

  return report;
}

std::vector<std::string> dump_counterexamples(const VerifyReport& report, const std::string& dir) {
  std::vector<std::string> paths;
  std::filesystem::create_directories(dir);
  for (const auto& c : report.checks) {
    if (!c.counterexample) continue;
    const auto& ex = *c.counterexample;
    const bool code = !ex.code_file.empty();
    const std::string path = (std::filesystem::path(dir) / (c.name + (code ? ".rankcode" : ".txt"))).string();
    std::ofstream out(path);
    if (!out) fail(ErrorKind::input, "cannot write " + path);
    if (code) {
      out << ex.code_file;
    } else {
      out << "case: " << ex.input << "\nexpected: " << ex.expected << "\nactual: " << ex.actual << "\n";
    }
    paths.push_back(path);
  }
  return paths;
}

}  // namespace rankmetric
