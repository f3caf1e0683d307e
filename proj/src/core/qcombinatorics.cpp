#include "qcombinatorics.hpp"

#include "error.hpp"

namespace rankmetric {

namespace {

void require_q(const BigInt& q) {
  if (q < 2) fail(ErrorKind::input, "q must be at least 2");
}

}  // namespace

BigNat q_binomial(std::int64_t a, std::int64_t b, const BigInt& q) {
  require_q(q);
  if (a < 0 || b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt num = 1;
  BigInt den = 1;
  const BigInt qa = ipow(q, static_cast<std::uint64_t>(a));
  const BigInt qb = ipow(q, static_cast<std::uint64_t>(b));
  BigInt qi = 1;
  for (std::int64_t i = 0; i < b; ++i) {
    num *= qa - qi;
    den *= qb - qi;
    qi *= q;
  }
  BigInt out;
  if (!divide_exact(num, den, out)) fail(ErrorKind::internal, "q-binomial quotient not integral");
  return out;
}

bool q_binomial_identity_check(std::int64_t a, std::int64_t b, std::int64_t c, const BigInt& q) {
  if (!(0 <= c && c <= b && b <= a)) fail(ErrorKind::domain, "identity requires 0 <= c <= b <= a");
  return q_binomial(a, b, q) * q_binomial(b, c, q) == q_binomial(a, c, q) * q_binomial(a - c, a - b, q);
}

BigInt moebius_coefficient(std::int64_t a, std::int64_t b, const BigInt& q) {
  require_q(q);
  if (a < 0 || a > b) fail(ErrorKind::domain, "moebius coefficient requires 0 <= a <= b");
  BigInt v = ipow(q, choose2(b - a));
  return ((b - a) % 2 == 0) ? v : BigInt(-v);
}

BigNat ball_size(std::int64_t n, std::int64_t m, std::int64_t r, const BigInt& q) {
  require_q(q);
  if (n < 0 || m < 0 || r < 0) fail(ErrorKind::domain, "negative ball parameters");
  if (r > n) fail(ErrorKind::domain, "ball radius exceeds n");
  const BigInt qm = ipow(q, static_cast<std::uint64_t>(m));
  BigNat total = 0;
  for (std::int64_t i = 0; i <= r; ++i) {
    BigInt prod = 1;
    BigInt qj = 1;
    for (std::int64_t j = 0; j < i; ++j) {
      prod *= qm - qj;
      qj *= q;
    }
    total += q_binomial(n, i, q) * prod;
  }
  return total;
}

BigNat nu(std::int64_t ambient, std::int64_t k, std::int64_t ell, const BigInt& q) {
  require_q(q);
  const std::int64_t co = ambient - k;
  if (k < 0 || co < 0) fail(ErrorKind::domain, "formula domain: need 0 <= k <= N");
  if (ell < ambient - 2 * k || ell > co || ell < 0) fail(ErrorKind::domain, "formula domain: need N-2k <= ell <= N-k");
  const BigInt q_co = ipow(q, static_cast<std::uint64_t>(co));
  BigInt prod = 1;
  for (std::int64_t i = ell; i < co; ++i) prod *= q_co - ipow(q, static_cast<std::uint64_t>(i));
  const BigInt term = ipow(q, static_cast<std::uint64_t>((2 * k - ambient + ell) * co)) * prod;
  BigInt value = q_binomial(ambient, k, q) - 2 * ipow(q, static_cast<std::uint64_t>(k * co)) + term;
  if (value < 0) fail(ErrorKind::internal, "negative subspace count");
  return value;
}

BigNat theta(std::int64_t n, std::int64_t u, std::int64_t i, const BigInt& q) {
  require_q(q);
  if (u < 0 || u > n || i > u || i < 2 * u - n || i < 0) fail(ErrorKind::domain, "theta requires 0 <= u <= n and 2u-n <= i <= u");
  BigInt total = 0;
  for (std::int64_t j = i; j <= u; ++j) {
    const BigNat outer = q_binomial(n - j, u - j, q);
    BigInt term = ipow(q, choose2(j - i)) * q_binomial(n, i, q) * q_binomial(n - i, j - i, q) * outer * outer;
    if ((j - i) % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  if (total < 0) fail(ErrorKind::internal, "negative pair count");
  return total;
}

}  // namespace rankmetric
