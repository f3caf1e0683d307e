#pragma once

// Internal: exhaustive scans over F_q-spans, partitioned by leading
// coefficients so that worker results merge deterministically.

#include "error.hpp"
#include "finite_field.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <thread>
#include <vector>

namespace rankmetric::detail {

// q^k, saturating at UINT64_MAX.
inline std::uint64_t saturating_pow(std::uint64_t q, std::size_t k) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (out > UINT64_MAX / q) return UINT64_MAX;
    out *= q;
  }
  return out;
}

inline void require_budget(std::uint64_t q, std::size_t k, std::uint64_t budget, const char* what) {
  if (saturating_pow(q, k) > budget) {
    fail(ErrorKind::budget, std::string("enumeration too large: ") + what + " needs " + std::to_string(q) + "^" + std::to_string(k) +
                                " elements, budget is " + std::to_string(budget));
  }
}

// Number of leading coefficients fixed per chunk, so that there are at
// least `threads` chunks when possible.
inline std::size_t prefix_length(std::uint64_t q, std::size_t k, unsigned threads) {
  std::size_t t = 0;
  while (t < k && saturating_pow(q, t) < threads) ++t;
  return t;
}

// Visits offset + sum_i c_i gens[i] for every coefficient vector whose
// leading `prefix` digits spell `chunk` (base q, most significant first);
// the remaining digits run lexicographically.
template <class Visit>
void scan_chunk(const Field& f, const std::vector<std::vector<Elem>>& gens, std::span<const Elem> offset, std::size_t prefix,
                std::uint64_t chunk, Visit&& visit) {
  const std::size_t k = gens.size();
  const std::size_t len = offset.size();
  const Elem q = f.q();
  std::vector<Elem> digits(k, 0);
  for (std::size_t i = prefix; i-- > 0;) {
    digits[i] = static_cast<Elem>(chunk % q);
    chunk /= q;
  }
  // partial[i] = offset + sum_{j<i} c_j gens[j]
  std::vector<std::vector<Elem>> partial(k + 1, std::vector<Elem>(offset.begin(), offset.end()));
  auto rebuild = [&](std::size_t from) {
    for (std::size_t i = from; i < k; ++i) {
      auto& next = partial[i + 1];
      const auto& cur = partial[i];
      const Elem c = digits[i];
      if (c == 0) {
        next = cur;
      } else {
        for (std::size_t t = 0; t < len; ++t) next[t] = f.add(cur[t], f.mul(c, gens[i][t]));
      }
    }
  };
  rebuild(0);
  while (true) {
    visit(std::span<const Elem>(partial[k]));
    std::size_t i = k;
    bool wrapped = true;
    while (i > prefix) {
      --i;
      if (++digits[i] < q) {
        wrapped = false;
        break;
      }
      digits[i] = 0;
    }
    if (wrapped) return;
    rebuild(i);
  }
}

// Runs scan_chunk over all chunks with up to `threads` workers. Each worker
// owns one State; states are merged in chunk order.
template <class State, class Visit, class Merge>
State parallel_scan(const Field& f, const std::vector<std::vector<Elem>>& gens, std::span<const Elem> offset, unsigned threads,
                    const State& init, Visit visit, Merge merge) {
  const std::size_t prefix = prefix_length(f.q(), gens.size(), std::max(1U, threads));
  const std::uint64_t chunks = saturating_pow(f.q(), prefix);
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(std::max(1U, threads), chunks));
  std::vector<State> states(workers, init);
  auto work = [&](unsigned w) {
    for (std::uint64_t c = w; c < chunks; c += workers) {
      scan_chunk(f, gens, offset, prefix, c, [&](std::span<const Elem> v) { visit(states[w], v); });
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  State out = init;
  for (auto& s : states) merge(out, s);
  return out;
}

// GF(2) variant: generators and offset packed into words, Gray-code order.
template <class State, class Visit, class Merge>
State parallel_scan_gf2(std::span<const std::uint64_t> gens, std::uint64_t offset, unsigned threads, const State& init, Visit visit,
                        Merge merge) {
  const std::size_t k = gens.size();
  const std::size_t prefix = prefix_length(2, k, std::max(1U, threads));
  const std::uint64_t chunks = std::uint64_t{1} << prefix;
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(std::max(1U, threads), chunks));
  const std::size_t free = k - prefix;
  std::vector<State> states(workers, init);
  auto work = [&](unsigned w) {
    for (std::uint64_t c = w; c < chunks; c += workers) {
      std::uint64_t x = offset;
      for (std::size_t i = 0; i < prefix; ++i) {
        if ((c >> (prefix - 1 - i)) & 1U) x ^= gens[i];
      }
      visit(states[w], x);
      const std::uint64_t steps = std::uint64_t{1} << free;
      for (std::uint64_t s = 1; s < steps; ++s) {
        x ^= gens[prefix + static_cast<std::size_t>(std::countr_zero(s))];
        visit(states[w], x);
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  State out = init;
  for (auto& s : states) merge(out, s);
  return out;
}

// Rank of an n x m GF(2) matrix packed row-major into one word.
inline std::size_t packed_rank_gf2(std::uint64_t x, std::size_t n, std::size_t m) {
  std::uint64_t rows[64];
  const std::uint64_t mask = m >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
  for (std::size_t i = 0; i < n; ++i) rows[i] = (x >> (i * m)) & mask;
  std::size_t r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t v = rows[i];
    if (v == 0) continue;
    const std::uint64_t low = v & (~v + 1);
    ++r;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rows[j] & low) rows[j] ^= v;
    }
  }
  return r;
}

// Rank of an n x m matrix given as a row-major vector; `scratch` is reused.
inline std::size_t vector_rank(const Field& f, std::span<const Elem> v, std::size_t n, std::size_t m, std::vector<Elem>& scratch) {
  scratch.assign(v.begin(), v.end());
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    std::size_t sel = r;
    while (sel < n && scratch[sel * m + c] == 0) ++sel;
    if (sel == n) continue;
    if (sel != r) std::swap_ranges(scratch.begin() + sel * m, scratch.begin() + (sel + 1) * m, scratch.begin() + r * m);
    const Elem inv = f.inv(scratch[r * m + c]);
    for (std::size_t i = r + 1; i < n; ++i) {
      const Elem factor = f.mul(scratch[i * m + c], inv);
      if (factor == 0) continue;
      for (std::size_t j = c; j < m; ++j) scratch[i * m + j] = f.sub(scratch[i * m + j], f.mul(factor, scratch[r * m + j]));
    }
    ++r;
  }
  return r;
}

inline std::uint64_t pack_gf2(std::span<const Elem> v) {
  std::uint64_t x = 0;
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (v[t]) x |= std::uint64_t{1} << t;
  }
  return x;
}

}  // namespace rankmetric::detail
