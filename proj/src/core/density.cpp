#include "density.hpp"

#include "error.hpp"
#include "qcombinatorics.hpp"

#include <thread>

namespace rankmetric {

namespace {

using I = std::int64_t;

void check_params(std::size_t n, std::size_t m, std::size_t d) {
  if (!(1 <= d && d <= n && n <= m)) fail(ErrorKind::input, "need 1 <= d <= n <= m");
}

FieldPtr field_of_order(const BigInt& q) {
  if (q < 2 || q >= (BigInt(1) << 31)) fail(ErrorKind::input, "census needs a prime power q below 2^31");
  const auto v = static_cast<std::uint64_t>(q);
  std::uint64_t p = 2;
  while (v % p != 0) ++p;
  unsigned e = 0;
  std::uint64_t r = v;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1) fail(ErrorKind::input, "q = " + q.str() + " is not a prime power");
  return Field::make(static_cast<unsigned>(p), e);
}

Rational pow_rational(const Rational& x, std::uint64_t e) {
  Rational out = 1;
  Rational b = x;
  while (e > 0) {
    if (e & 1U) out *= b;
    e >>= 1U;
    if (e > 0) b *= b;
  }
  return out;
}

// Dyadic rounding of nonnegative rationals.
Rational round_down(const Rational& x, std::size_t bits) {
  const BigInt scale = BigInt(1) << bits;
  const BigInt num = boost::multiprecision::numerator(x) * scale;
  const BigInt den = boost::multiprecision::denominator(x);
  BigInt quo, rem;
  boost::multiprecision::divide_qr(num, den, quo, rem);
  if (rem < 0) quo -= 1;
  return Rational(quo, scale);
}

Rational round_up(const Rational& x, std::size_t bits) {
  const BigInt scale = BigInt(1) << bits;
  const BigInt num = boost::multiprecision::numerator(x) * scale;
  const BigInt den = boost::multiprecision::denominator(x);
  BigInt quo, rem;
  boost::multiprecision::divide_qr(num, den, quo, rem);
  if (rem > 0) quo += 1;
  return Rational(quo, scale);
}

Interval outward(const Interval& v, std::size_t bits) { return {round_down(v.lo, bits), round_up(v.hi, bits)}; }

// Nonnegative interval to a power, rounding outward after every product.
Interval pow_interval(const Interval& x, std::uint64_t e, std::size_t bits) {
  Interval out{1, 1};
  Interval b = outward(x, bits);
  while (e > 0) {
    if (e & 1U) out = outward({out.lo * b.lo, out.hi * b.hi}, bits);
    e >>= 1U;
    if (e > 0) b = outward({b.lo * b.lo, b.hi * b.hi}, bits);
  }
  return out;
}

}  // namespace

Census density_census(const FieldPtr& field, std::size_t n, std::size_t m, std::size_t d, const CensusOptions& opt) {
  check_params(n, m, d);
  const BigInt q = field->q();
  const std::size_t N = n * m;
  const std::size_t k = m * (n - d + 1);
  const BigNat total = q_binomial(static_cast<I>(N), static_cast<I>(k), q);
  if (total > opt.budget) {
    fail(ErrorKind::budget, "enumeration too large: census needs " + total.str() + " subspaces, budget is " + std::to_string(opt.budget) +
                                "; use bounds");
  }

  std::vector<Subspace> forbidden;
  for_each_subspace(field, n, d - 1, [&](const Subspace& u) { forbidden.push_back(column_support_code(u, m).space()); });

  const auto patterns = pivot_patterns(N, k);
  struct Tally {
    std::vector<std::uint64_t> by_distance;  // index d(C), 1..n+1
    std::uint64_t complements = 0;
  };
  const unsigned workers = static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(std::max(1U, opt.threads), patterns.size())));
  std::vector<Tally> tallies(workers, Tally{std::vector<std::uint64_t>(n + 2, 0), 0});
  const EnumOptions scan{UINT64_MAX, 1};
  auto work = [&](unsigned w) {
    Tally& t = tallies[w];
    for (std::size_t p = w; p < patterns.size(); p += workers) {
      for_each_subspace_with_pivots(field, N, patterns[p], [&](const Subspace& s) {
        const RankMetricCode c = RankMetricCode::from_space(s, n, m);
        ++t.by_distance[minimum_distance(c, scan)];
        bool meets = false;
        for (const auto& a : forbidden) {
          if ((s + a).dim() != k + a.dim()) {
            meets = true;
            break;
          }
        }
        if (!meets) ++t.complements;
      });
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }

  Census out;
  out.total = total;
  out.exact_distance = 0;
  out.ball_avoiding = 0;
  out.common_complement = 0;
  BigNat seen = 0;
  for (const auto& t : tallies) {
    out.exact_distance += t.by_distance[d];
    for (std::size_t e = d; e <= n + 1; ++e) out.ball_avoiding += t.by_distance[e];
    for (auto v : t.by_distance) seen += v;
    out.common_complement += t.complements;
  }
  if (seen != total) fail(ErrorKind::internal, "subspace stream count differs from the q-binomial");
  if (out.exact_distance != out.ball_avoiding) fail(ErrorKind::internal, "census: d(C) = d and ball avoidance disagree");
  if (out.exact_distance != out.common_complement) fail(ErrorKind::internal, "census: ball avoidance and common complements disagree");
  out.density = Rational(out.exact_distance, total);
  return out;
}

Rational density_exact(const FieldPtr& field, std::size_t n, std::size_t m, std::size_t d, const CensusOptions& opt) {
  return density_census(field, n, m, d, opt).density;
}

Rational density_bound_cc(const BigInt& q, std::size_t n_, std::size_t m_, std::size_t d_) {
  check_params(n_, m_, d_);
  if (d_ == 1) return 1;
  const I n = static_cast<I>(n_);
  const I m = static_cast<I>(m_);
  const I d = static_cast<I>(d_);
  const I N = m * n;
  const I k = m * (n - d + 1);
  BigInt sum = 0;
  for (I i = std::max<I>(0, 2 * d - 2 - n); i <= d - 1; ++i) sum += nu(N, k, m * i, q) * theta(n, d - 1, i, q);
  const BigInt nu_top = nu(N, k, m * (d - 1), q);
  const BigInt g = q_binomial(n, d - 1, q);
  return 1 - Rational(nu_top * nu_top * g * g, q_binomial(N, k, q) * sum);
}

Rational density_bound_ball(const BigInt& q, std::size_t n_, std::size_t m_, std::size_t d_) {
  check_params(n_, m_, d_);
  if (d_ == 1) return 1;
  const I n = static_cast<I>(n_);
  const I m = static_cast<I>(m_);
  const I d = static_cast<I>(d_);
  const I N = m * n;
  const I k = m * (n - d + 1);
  BigInt b;
  if (!divide_exact(ball_size(n, m, d - 1, q) - 1, q - 1, b)) fail(ErrorKind::internal, "ball size minus one not divisible by q - 1");
  const BigInt g1 = q_binomial(N - 1, k - 1, q);
  const BigInt g2 = q_binomial(N - 2, k - 2, q);
  return 1 - Rational(b * g1 * g1, q_binomial(N, k, q) * (g1 + (b - 1) * g2));
}

Rational alternating_factorial_sum(std::size_t m) {
  Rational sum = 0;
  BigInt fact = 1;
  for (std::size_t i = 0; i <= m; ++i) {
    if (i > 0) fact *= i;
    const Rational term(1, fact);
    sum += (i % 2 == 0) ? term : Rational(-term);
  }
  return sum;
}

QLimit asymptotic_q_limit(std::size_t n, std::size_t m, std::size_t d) {
  check_params(n, m, d);
  QLimit out;
  if (d == 1) {
    out.value = 1;
  } else if (n == 2 && d == 2) {
    out.value = alternating_factorial_sum(m);
  } else {
    out.value = 0;
  }
  out.exponent = 1 - static_cast<std::int64_t>((d - 1) * (n - d + 1));
  out.description = "O(q^" + std::to_string(out.exponent) + ")";
  return out;
}

Interval euler_phi_truncated(const Rational& x, std::size_t terms) {
  if (x <= 0 || x >= 1) fail(ErrorKind::domain, "phi needs 0 < x < 1");
  if (terms < 1) fail(ErrorKind::domain, "truncation must be at least 1");
  Rational partial = 1;
  Rational xi = 1;
  for (std::size_t i = 1; i <= terms; ++i) {
    xi *= x;
    partial *= 1 - xi;
  }
  // Tail: prod_{i>T}(1 - x^i) >= 1 - sum_{i>T} x^i = 1 - x^{T+1}/(1-x).
  Rational tail = 1 - xi * x / (1 - x);
  if (tail < 0) tail = 0;
  return {partial * tail, partial};
}

Interval euler_phi_pentagonal(const Rational& x, std::size_t groups) {
  if (x <= 0 || x >= 1) fail(ErrorKind::domain, "phi needs 0 < x < 1");
  Rational s = 1;
  Rational prev = 1;
  for (std::size_t k = 1; k <= groups + 1; ++k) {
    const Rational term = pow_rational(x, k * (3 * k - 1) / 2) + pow_rational(x, k * (3 * k + 1) / 2);
    prev = s;
    s += (k % 2 == 0) ? term : Rational(-term);
  }
  return prev < s ? Interval{prev, s} : Interval{s, prev};
}

MBounds asymptotic_m_bounds(const BigInt& q, std::size_t n, std::size_t d, std::size_t truncation) {
  if (q < 2) fail(ErrorKind::input, "q must be at least 2");
  if (d < 2) fail(ErrorKind::domain, "m-asymptotic bounds need d >= 2");
  if (d > n) fail(ErrorKind::input, "need d <= n");
  if (truncation < 1) fail(ErrorKind::domain, "truncation must be at least 1");
  std::size_t log2q = 0;
  while ((BigInt(1) << log2q) < q) ++log2q;
  MBounds out;
  out.truncation = truncation;
  out.precision_bits = 64 + 2 * (truncation + 2) * log2q;
  const std::size_t bits = out.precision_bits;

  out.phi = outward(euler_phi_truncated(Rational(1, q), truncation), bits);
  out.inverse_phi = outward({1 / out.phi.hi, 1 / out.phi.lo}, bits);
  const std::uint64_t e = static_cast<std::uint64_t>(q) * (d - 1) * (n - d + 1) + 1;
  out.antrobus = pow_interval(out.phi, e, bits);
  const BigInt g = q_binomial(static_cast<I>(n), static_cast<I>(d - 1), q);
  out.common_complement = outward({1 / (g * (out.inverse_phi.hi - 1) + 1), 1 / (g * (out.inverse_phi.lo - 1) + 1)}, bits);
  out.half_bound = Rational((q - 1) * (q - 2) + 1, 2 * (q - 1) * (q - 1));
  return out;
}

DensityReport density_report(const BigInt& q, std::size_t n, std::size_t m, std::size_t d, bool census, std::size_t truncation,
                             const CensusOptions& opt) {
  check_params(n, m, d);
  if (q < 2) fail(ErrorKind::input, "q must be at least 2");
  DensityReport r;
  r.q = q;
  r.n = n;
  r.m = m;
  r.d = d;
  r.k = m * (n - d + 1);
  r.bound_cc = density_bound_cc(q, n, m, d);
  r.bound_ball = density_bound_ball(q, n, m, d);
  r.asymptotic_q = asymptotic_q_limit(n, m, d);
  if (d >= 2) {
    r.asymptotic_q_bound = pow_rational(alternating_factorial_sum(m), (d - 1) * (n - d + 1));
    r.asymptotic_m = asymptotic_m_bounds(q, n, d, truncation);
  }
  if (census) {
    r.exact = density_census(field_of_order(q), n, m, d, opt);
    if (r.exact->density > r.bound_cc) fail(ErrorKind::internal, "census density exceeds the common-complement bound");
    if (r.exact->density > r.bound_ball) fail(ErrorKind::internal, "census density exceeds the ball bound");
  }
  return r;
}

}  // namespace rankmetric
