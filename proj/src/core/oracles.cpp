#include "oracles.hpp"

#include "error.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace rankmetric::oracle {

namespace {

std::vector<std::vector<Elem>> all_vectors(const Field& f, std::size_t len) {
  std::vector<std::vector<Elem>> out(1, std::vector<Elem>(len, 0));
  for (std::size_t t = 0; t < len; ++t) {
    std::vector<std::vector<Elem>> next;
    for (const auto& v : out) {
      for (Elem a = 0; a < f.q(); ++a) {
        auto w = v;
        w[t] = a;
        next.push_back(std::move(w));
      }
    }
    out = std::move(next);
  }
  return out;
}

Elem dot(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  Elem s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

RankDistribution histogram(const std::vector<Matrix>& xs, std::size_t n) {
  RankDistribution w;
  w.counts.assign(n + 1, 0);
  for (const auto& x : xs) w.counts[rank_generic(x)] += 1;
  return w;
}

}  // namespace

std::vector<Matrix> ambient_matrices(const FieldPtr& field, std::size_t n, std::size_t m) {
  std::vector<Matrix> out;
  for (auto& v : all_vectors(*field, n * m)) out.emplace_back(field, n, m, std::move(v));
  return out;
}

std::vector<Matrix> codewords_naive(const RankMetricCode& c) {
  const Field& f = *c.field();
  const auto basis = c.basis();
  std::vector<Matrix> out;
  for (const auto& coeffs : all_vectors(f, basis.size())) {
    Matrix x(c.field(), c.n(), c.m());
    for (std::size_t t = 0; t < basis.size(); ++t) x = x + basis[t].scaled(coeffs[t]);
    out.push_back(std::move(x));
  }
  return out;
}

RankDistribution distribution_naive(const RankMetricCode& c) { return histogram(codewords_naive(c), c.n()); }

RankDistribution dual_distribution(const RankMetricCode& c) {
  const Field& f = *c.field();
  const auto basis = c.basis();
  std::vector<Matrix> kept;
  for (auto& y : ambient_matrices(c.field(), c.n(), c.m())) {
    bool orth = true;
    for (const auto& x : basis) {
      if (dot(f, x.entries(), y.entries()) != 0) {
        orth = false;
        break;
      }
    }
    if (orth) kept.push_back(std::move(y));
  }
  return histogram(kept, c.n());
}

std::size_t covering_radius(const RankMetricCode& c) {
  const auto words = codewords_naive(c);
  std::size_t rho = 0;
  for (const auto& y : ambient_matrices(c.field(), c.n(), c.m())) {
    std::size_t best = c.n();
    for (const auto& x : words) best = std::min(best, rank_generic(y - x));
    rho = std::max(rho, best);
  }
  return rho;
}

RankDistribution translate_distribution(const RankMetricCode& c, const Matrix& offset) {
  std::vector<Matrix> xs;
  for (const auto& x : codewords_naive(c)) xs.push_back(x + offset);
  return histogram(xs, c.n());
}

std::uint64_t nu_count(std::size_t ambient, std::size_t k, std::size_t ell, const FieldPtr& field) {
  const std::size_t co = ambient - k;
  if (ell > co || ell + 2 * (co - ell) > ambient) fail(ErrorKind::domain, "no such pair of spaces");
  auto unit = [&](std::size_t i) {
    std::vector<Elem> v(ambient, 0);
    v[i] = 1;
    return v;
  };
  std::vector<std::vector<Elem>> a_vecs;
  std::vector<std::vector<Elem>> b_vecs;
  for (std::size_t i = 0; i < co; ++i) a_vecs.push_back(unit(i));
  for (std::size_t i = 0; i < ell; ++i) b_vecs.push_back(unit(i));
  for (std::size_t i = 0; i < co - ell; ++i) b_vecs.push_back(unit(co + i));
  const Subspace a = Subspace::span(field, ambient, a_vecs);
  const Subspace b = Subspace::span(field, ambient, b_vecs);
  if (a.intersection(b).dim() != ell) fail(ErrorKind::internal, "oracle built the wrong pair");
  std::uint64_t count = 0;
  for_each_subspace(field, ambient, k, [&](const Subspace& w) {
    if (w.intersection(a).dim() > 0 && w.intersection(b).dim() > 0) ++count;
  });
  return count;
}

std::uint64_t theta_count(std::size_t n, std::size_t u, std::size_t i, const FieldPtr& field) {
  std::vector<Subspace> all;
  for_each_subspace(field, n, u, [&](const Subspace& s) { all.push_back(s); });
  std::uint64_t count = 0;
  for (const auto& x : all) {
    for (const auto& y : all) {
      if (x.intersection(y).dim() == i) ++count;
    }
  }
  return count;
}

std::size_t line_cover(const EntrySet& s, std::size_t a, std::size_t b) {
  std::size_t best = a + b;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (a + b)); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size >= best) continue;
    bool covers = true;
    for (const auto& p : s) {
      const bool row = (mask >> (p.row - 1)) & 1U;
      const bool col = (mask >> (a + p.col - 1)) & 1U;
      if (!row && !col) {
        covers = false;
        break;
      }
    }
    if (covers) best = size;
  }
  return best;
}

Matrix random_matrix(const FieldPtr& field, std::size_t n, std::size_t m, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> pick(0, field->q() - 1);
  Matrix x(field, n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) x.set(i, j, pick(rng));
  }
  return x;
}

RankMetricCode random_code(const FieldPtr& field, std::size_t n, std::size_t m, std::size_t dim, std::mt19937_64& rng) {
  if (dim > n * m) fail(ErrorKind::input, "dimension exceeds nm");
  if (dim == 0) return RankMetricCode::zero(field, n, m);
  std::vector<Matrix> gens;
  while (true) {
    gens.push_back(random_matrix(field, n, m, rng));
    auto c = RankMetricCode::from_generators(field, n, m, gens);
    if (c.dim() == dim) return c;
    if (c.dim() < gens.size()) gens.pop_back();
  }
}

std::size_t rook_placement(const EntrySet& s, std::size_t a, std::size_t b) {
  const std::vector<Position> cells(s.begin(), s.end());
  std::vector<char> row_used(a + 1, 0);
  std::vector<char> col_used(b + 1, 0);
  std::size_t best = 0;
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t at, std::size_t placed) {
    best = std::max(best, placed);
    if (placed + (cells.size() - at) <= best) return;
    for (std::size_t t = at; t < cells.size(); ++t) {
      const auto& c = cells[t];
      if (row_used[c.row] || col_used[c.col]) continue;
      row_used[c.row] = col_used[c.col] = 1;
      go(t + 1, placed + 1);
      row_used[c.row] = col_used[c.col] = 0;
    }
  };
  go(0, 0);
  return best;
}

}  // namespace rankmetric::oracle
