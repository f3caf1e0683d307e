#include "macwilliams.hpp"

#include "error.hpp"
#include "qcombinatorics.hpp"

#include <atomic>

namespace rankmetric {

namespace {

std::atomic<bool> g_mutation{false};

using I = std::int64_t;

BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
  BigInt out;
  if (!divide_exact(num, den, out)) fail(ErrorKind::domain, std::string("non-integral quotient in ") + what);
  return out;
}

BigInt sign(I k) { return k % 2 == 0 ? 1 : -1; }

void check_length(const RankDistribution& w, std::size_t n) {
  if (w.size() != n + 1) fail(ErrorKind::input, "distribution length must be n + 1");
}

BigInt code_size_of(const RankDistribution& w, const BigInt& q) {
  const BigInt size = w.total();
  if (exact_log(size, q) < 0) fail(ErrorKind::input, "not a code size: sum of W is " + size.str());
  return size;
}

// S_k = sum_{j<=k} W_j [n-j k-j].
BigInt moment(const RankDistribution& w, I n, I k, const BigInt& q) {
  BigInt s = 0;
  for (I j = 0; j <= k; ++j) s += w[static_cast<std::size_t>(j)] * q_binomial(n - j, k - j, q);
  return s;
}

}  // namespace

void testing::set_transform_mutation(bool on) { g_mutation = on; }

RankDistribution transform(const RankDistribution& w, std::size_t n_, std::size_t m_, const BigInt& q) {
  check_length(w, n_);
  const BigInt size = code_size_of(w, q);
  const I n = static_cast<I>(n_);
  const I m = static_cast<I>(m_);
  const bool mutate = g_mutation;
  RankDistribution out;
  for (I i = 0; i <= n; ++i) {
    BigInt acc = 0;
    for (I j = 0; j <= n; ++j) {
      if (w[static_cast<std::size_t>(j)] == 0) continue;
      BigInt inner = 0;
      for (I u = 0; u <= i; ++u) {
        BigInt t = ipow(q, static_cast<std::uint64_t>(m * u) + choose2(i - u)) * q_binomial(n - j, u, q) * q_binomial(n - u, i - u, q);
        if (mutate) t = -t;
        inner += sign(i - u) * t;
      }
      acc += w[static_cast<std::size_t>(j)] * inner;
    }
    const BigInt v = exact_div(acc, size, "MacWilliams transform");
    if (v < 0 && !mutate) fail(ErrorKind::domain, "negative dual count: input is not a code distribution");
    out.counts.push_back(v);
  }
  return out;
}

bool binomial_moment_check(const RankDistribution& w, const RankDistribution& wdual, std::size_t n_, std::size_t m_, const BigInt& q,
                           std::size_t s_) {
  check_length(w, n_);
  check_length(wdual, n_);
  if (s_ > n_) fail(ErrorKind::domain, "moment index s exceeds n");
  const I n = static_cast<I>(n_);
  const I s = static_cast<I>(s_);
  BigInt lhs = 0;
  for (I j = 0; j <= n - s; ++j) lhs += w[static_cast<std::size_t>(j)] * q_binomial(n - j, s, q);
  BigInt rhs = 0;
  for (I i = 0; i <= s; ++i) rhs += wdual[static_cast<std::size_t>(i)] * q_binomial(n - i, s - i, q);
  return lhs * ipow(q, static_cast<std::uint64_t>(m_ * s_)) == w.total() * rhs;
}

RankDistribution solve_dual_distribution_by_moments(const RankDistribution& w, std::size_t n_, std::size_t m_, const BigInt& q) {
  check_length(w, n_);
  const BigInt size = code_size_of(w, q);
  const I n = static_cast<I>(n_);
  RankDistribution out;
  for (I s = 0; s <= n; ++s) {
    BigInt lhs = 0;
    for (I j = 0; j <= n - s; ++j) lhs += w[static_cast<std::size_t>(j)] * q_binomial(n - j, s, q);
    BigInt v = exact_div(lhs * ipow(q, m_ * static_cast<std::uint64_t>(s)), size, "binomial moments");
    for (I i = 0; i < s; ++i) v -= out[static_cast<std::size_t>(i)] * q_binomial(n - i, s - i, q);
    if (v < 0) fail(ErrorKind::domain, "negative dual count: input is not a code distribution");
    out.counts.push_back(v);
  }
  return out;
}

RankDistribution mrd_distribution(std::size_t n_, std::size_t m_, std::size_t d_, const BigInt& q) {
  if (!(1 <= d_ && d_ <= n_ && n_ <= m_)) fail(ErrorKind::input, "need 1 <= d <= n <= m");
  const I n = static_cast<I>(n_);
  const I m = static_cast<I>(m_);
  const I d = static_cast<I>(d_);
  RankDistribution out;
  out.counts.assign(n_ + 1, 0);
  out.counts[0] = 1;
  for (I i = d; i <= n; ++i) {
    BigInt v = 0;
    const BigInt ni = q_binomial(n, i, q);
    for (I u = 0; u <= i; ++u) {
      std::uint64_t e = choose2(i - u);
      if (u >= d) e += static_cast<std::uint64_t>(m * (u - d + 1));
      v += sign(i - u) * ipow(q, e) * ni * q_binomial(i, u, q);
    }
    if (v <= 0) fail(ErrorKind::internal, "MRD distribution entry not positive");
    out.counts[static_cast<std::size_t>(i)] = v;
  }
  return out;
}

BigNat translate_tail(const RankDistribution& lower, std::size_t n_, std::size_t m_, const BigInt& q, const BigNat& code_size,
                      std::size_t d_dual, std::size_t i_) {
  if (d_dual < 1 || d_dual > n_ + 1) fail(ErrorKind::domain, "dual distance must lie in 1..n+1");
  const I n = static_cast<I>(n_);
  const I m = static_cast<I>(m_);
  const I known = n - static_cast<I>(d_dual);  // W_j given for j <= known
  const I i = static_cast<I>(i_);
  if (i <= known || i > n) fail(ErrorKind::domain, "index out of range: need n - d_dual + 1 <= i <= n");
  if (static_cast<I>(lower.size()) < known + 1) fail(ErrorKind::input, "prefix too short");
  if (exact_log(code_size, q) < 0) fail(ErrorKind::input, "not a code size: " + code_size.str());
  BigInt acc = 0;
  for (I k = 0; k <= i; ++k) {
    BigInt s;
    if (k <= known) {
      s = moment(lower, n, k, q);
    } else {
      s = q_binomial(n, k, q) * exact_div(code_size, ipow(q, static_cast<std::uint64_t>(m * (n - k))), "translate formula");
    }
    acc += sign(i - k) * ipow(q, choose2(i - k)) * q_binomial(n - k, i - k, q) * s;
  }
  if (acc < 0) fail(ErrorKind::domain, "negative translate count: inconsistent inputs");
  return acc;
}

RankDistribution translate_distribution(const RankDistribution& lower, std::size_t n, std::size_t m, const BigInt& q,
                                        const BigNat& code_size, std::size_t d_dual) {
  RankDistribution out;
  const std::size_t known = n + 1 - d_dual;  // entries 0..n-d_dual
  if (lower.size() < known) fail(ErrorKind::input, "prefix too short");
  out.counts.assign(lower.counts.begin(), lower.counts.begin() + static_cast<std::ptrdiff_t>(known));
  for (std::size_t i = known; i <= n; ++i) out.counts.push_back(translate_tail(lower, n, m, q, code_size, d_dual, i));
  return out;
}

}  // namespace rankmetric
