#include "code_core.hpp"

#include "enumeration.hpp"
#include "error.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace rankmetric {

namespace {

void check_shape(std::size_t n, std::size_t m) {
  if (n < 1) fail(ErrorKind::input, "n must be at least 1");
  if (n > m) fail(ErrorKind::input, "n > m: transpose the code so that n <= m");
}

bool packed_ok(const Field& f, std::size_t bits) { return f.q() == 2 && bits <= 64; }

std::vector<std::vector<Elem>> basis_rows(const Subspace& s) { return s.basis(); }

using Counts = std::vector<std::uint64_t>;

RankDistribution to_distribution(const Counts& c) {
  RankDistribution w;
  for (auto v : c) w.counts.emplace_back(v);
  return w;
}

Counts histogram(const RankMetricCode& c, std::span<const Elem> offset, const EnumOptions& opt) {
  const Field& f = *c.field();
  const std::size_t n = c.n();
  const std::size_t m = c.m();
  detail::require_budget(f.q(), c.dim(), opt.budget, "codewords");
  const auto gens = basis_rows(c.space());
  const auto add = [](Counts& acc, const Counts& s) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += s[i];
  };
  if (packed_ok(f, n * m)) {
    std::vector<std::uint64_t> packed;
    for (const auto& g : gens) packed.push_back(detail::pack_gf2(g));
    return detail::parallel_scan_gf2(
        packed, detail::pack_gf2(offset), opt.threads, Counts(n + 1, 0),
        [n, m](Counts& s, std::uint64_t x) { ++s[detail::packed_rank_gf2(x, n, m)]; }, add);
  }
  struct State {
    Counts counts;
    std::vector<Elem> scratch;
  };
  State init{Counts(n + 1, 0), {}};
  const State out = detail::parallel_scan(
      f, gens, offset, opt.threads, init,
      [&f, n, m](State& s, std::span<const Elem> v) { ++s.counts[detail::vector_rank(f, v, n, m, s.scratch)]; },
      [&add](State& acc, const State& s) { add(acc.counts, s.counts); });
  return out.counts;
}

}  // namespace

RankMetricCode::RankMetricCode(Subspace space, std::size_t n, std::size_t m) : space_(std::move(space)), n_(n), m_(m) {}

RankMetricCode RankMetricCode::from_generators(FieldPtr field, std::size_t n, std::size_t m, std::span<const Matrix> generators) {
  if (!field) fail(ErrorKind::input, "null field");
  check_shape(n, m);
  std::vector<std::vector<Elem>> vecs;
  vecs.reserve(generators.size());
  for (const auto& g : generators) {
    if (!same_field(g.field(), field)) fail(ErrorKind::mismatch, "field mismatch");
    if (g.rows() != n || g.cols() != m) {
      fail(ErrorKind::mismatch, "shape mismatch: expected " + std::to_string(n) + "x" + std::to_string(m) + ", got " +
                                    std::to_string(g.rows()) + "x" + std::to_string(g.cols()));
    }
    vecs.push_back(vectorize(g));
  }
  return {Subspace::span(std::move(field), n * m, vecs), n, m};
}

RankMetricCode RankMetricCode::from_space(Subspace space, std::size_t n, std::size_t m) {
  check_shape(n, m);
  if (space.ambient_dim() != n * m) fail(ErrorKind::mismatch, "ambient mismatch");
  return {std::move(space), n, m};
}

RankMetricCode RankMetricCode::zero(FieldPtr field, std::size_t n, std::size_t m) {
  check_shape(n, m);
  return {Subspace::zero(std::move(field), n * m), n, m};
}

RankMetricCode RankMetricCode::ambient(FieldPtr field, std::size_t n, std::size_t m) {
  check_shape(n, m);
  return {Subspace::full(std::move(field), n * m), n, m};
}

BigNat RankMetricCode::size() const { return ipow(field()->q(), dim()); }

std::vector<Matrix> RankMetricCode::basis() const {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(matrix_from_vector(field(), n_, m_, space_.row(i)));
  return out;
}

bool RankMetricCode::contains(const Matrix& x) const {
  if (!same_field(x.field(), field())) fail(ErrorKind::mismatch, "field mismatch");
  if (x.rows() != n_ || x.cols() != m_) fail(ErrorKind::mismatch, "shape mismatch");
  return space_.contains(x.entries());
}

BigNat RankDistribution::total() const {
  BigNat t = 0;
  for (const auto& c : counts) t += c;
  return t;
}

std::string RankDistribution::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) out += ",";
    out += counts[i].str();
  }
  return out + ")";
}

std::string EntrySet::str() const {
  std::string out = "{";
  bool first = true;
  for (const auto& p : positions_) {
    if (!first) out += ",";
    first = false;
    out += "(" + std::to_string(p.row) + "," + std::to_string(p.col) + ")";
  }
  return out + "}";
}

std::vector<Elem> vectorize(const Matrix& x) { return {x.entries().begin(), x.entries().end()}; }

Matrix matrix_from_vector(const FieldPtr& field, std::size_t n, std::size_t m, std::span<const Elem> v) {
  if (v.size() != n * m) fail(ErrorKind::mismatch, "vector length does not match the matrix shape");
  return {field, n, m, std::vector<Elem>(v.begin(), v.end())};
}

void for_each_codeword(const RankMetricCode& c, const std::function<void(const Matrix&)>& fn, const EnumOptions& opt) {
  detail::require_budget(c.field()->q(), c.dim(), opt.budget, "codewords");
  const std::vector<Elem> zero(c.n() * c.m(), 0);
  detail::scan_chunk(*c.field(), basis_rows(c.space()), zero, 0, 0,
                     [&](std::span<const Elem> v) { fn(matrix_from_vector(c.field(), c.n(), c.m(), v)); });
}

std::vector<Matrix> codewords(const RankMetricCode& c, const EnumOptions& opt) {
  std::vector<Matrix> out;
  for_each_codeword(c, [&](const Matrix& x) { out.push_back(x); }, opt);
  return out;
}

RankDistribution rank_distribution(const RankMetricCode& c, const EnumOptions& opt) {
  const std::vector<Elem> zero(c.n() * c.m(), 0);
  return to_distribution(histogram(c, zero, opt));
}

RankDistribution translate_rank_distribution(const RankMetricCode& c, const Matrix& offset, const EnumOptions& opt) {
  if (!same_field(offset.field(), c.field())) fail(ErrorKind::mismatch, "field mismatch");
  if (offset.rows() != c.n() || offset.cols() != c.m()) fail(ErrorKind::mismatch, "shape mismatch");
  return to_distribution(histogram(c, offset.entries(), opt));
}

std::size_t minimum_distance(const RankDistribution& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] != 0) return i;
  }
  return w.size();  // n + 1
}

std::size_t maximum_rank(const RankDistribution& w) {
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w[i] != 0) return i;
  }
  return 0;
}

std::size_t minimum_distance(const RankMetricCode& c, const EnumOptions& opt) {
  if (c.is_zero()) return c.n() + 1;
  if (c.is_ambient()) return 1;
  return minimum_distance(rank_distribution(c, opt));
}

std::size_t maximum_rank(const RankMetricCode& c, const EnumOptions& opt) {
  if (c.is_zero()) return 0;
  if (c.is_ambient()) return c.n();
  return maximum_rank(rank_distribution(c, opt));
}

RankMetricCode dual(const RankMetricCode& c) { return RankMetricCode::from_space(orthogonal_subspace(c.space()), c.n(), c.m()); }

RankMetricCode column_support_code(const Subspace& u, std::size_t m) {
  const std::size_t n = u.ambient_dim();
  check_shape(n, m);
  std::vector<std::vector<Elem>> gens;
  for (std::size_t t = 0; t < u.dim(); ++t) {
    const auto b = u.row(t);
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<Elem> v(n * m, 0);
      for (std::size_t i = 0; i < n; ++i) v[i * m + j] = b[i];
      gens.push_back(std::move(v));
    }
  }
  return RankMetricCode::from_space(Subspace::span(u.field(), n * m, gens), n, m);
}

RankMetricCode row_support_code(const Subspace& u, std::size_t n) {
  const std::size_t m = u.ambient_dim();
  check_shape(n, m);
  std::vector<std::vector<Elem>> gens;
  for (std::size_t t = 0; t < u.dim(); ++t) {
    const auto b = u.row(t);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Elem> v(n * m, 0);
      std::copy(b.begin(), b.end(), v.begin() + static_cast<std::ptrdiff_t>(i * m));
      gens.push_back(std::move(v));
    }
  }
  return RankMetricCode::from_space(Subspace::span(u.field(), n * m, gens), n, m);
}

RankMetricCode shorten(const RankMetricCode& c, const Subspace& u) {
  if (!same_field(u.field(), c.field())) fail(ErrorKind::mismatch, "field mismatch");
  if (u.ambient_dim() != c.n()) fail(ErrorKind::mismatch, "ambient mismatch: U must live in F_q^n");
  const RankMetricCode full = column_support_code(u, c.m());
  return RankMetricCode::from_space(c.space().intersection(full.space()), c.n(), c.m());
}

Position initial_entry(const Matrix& x) {
  const auto e = x.entries();
  for (std::size_t t = 0; t < e.size(); ++t) {
    if (e[t] != 0) return {t / x.cols() + 1, t % x.cols() + 1};
  }
  fail(ErrorKind::domain, "initial entry undefined for the zero matrix");
}

EntrySet initial_set(const RankMetricCode& c) {
  if (c.is_zero()) fail(ErrorKind::domain, "initial set undefined for zero code");
  EntrySet s;
  for (auto p : c.space().pivots()) s.insert({p / c.m() + 1, p % c.m() + 1});
  return s;
}

std::size_t covering_radius_exact(const RankMetricCode& c, const EnumOptions& opt) {
  const Field& f = *c.field();
  const std::size_t n = c.n();
  const std::size_t m = c.m();
  const std::size_t nm = n * m;
  if (c.is_ambient()) return 0;
  detail::require_budget(f.q(), nm, opt.budget, "covering radius (all ambient matrices)");
  // Parity checks: rows of a basis of the dual. Each unit vector e_t is
  // extended by its syndrome so that the scan carries syndromes along.
  const Subspace h = orthogonal_subspace(c.space());
  const std::size_t r = h.dim();
  const std::uint64_t cosets = detail::saturating_pow(f.q(), r);
  std::vector<std::vector<Elem>> gens(nm, std::vector<Elem>(nm + r, 0));
  for (std::size_t t = 0; t < nm; ++t) {
    gens[t][t] = 1;
    for (std::size_t s = 0; s < r; ++s) gens[t][nm + s] = h.row(s)[t];
  }
  using Table = std::vector<std::uint8_t>;
  const auto merge = [](Table& acc, const Table& s) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = std::min(acc[i], s[i]);
  };
  const Table init(cosets, std::numeric_limits<std::uint8_t>::max());
  Table best;
  if (packed_ok(f, nm + r)) {
    std::vector<std::uint64_t> packed;
    for (const auto& g : gens) packed.push_back(detail::pack_gf2(g));
    best = detail::parallel_scan_gf2(
        packed, 0, opt.threads, init,
        [n, m, nm](Table& tab, std::uint64_t x) {
          auto& slot = tab[x >> nm];
          const auto rk = static_cast<std::uint8_t>(detail::packed_rank_gf2(x & ((std::uint64_t{1} << nm) - 1), n, m));
          slot = std::min(slot, rk);
        },
        merge);
  } else {
    struct State {
      Table tab;
      std::vector<Elem> scratch;
    };
    const std::vector<Elem> zero(nm + r, 0);
    const Elem q = f.q();
    best = detail::parallel_scan(
               f, gens, zero, opt.threads, State{init, {}},
               [&f, n, m, nm, r, q](State& s, std::span<const Elem> v) {
                 std::uint64_t idx = 0;
                 for (std::size_t i = 0; i < r; ++i) idx = idx * q + v[nm + i];
                 auto& slot = s.tab[idx];
                 const auto rk = static_cast<std::uint8_t>(detail::vector_rank(f, v.first(nm), n, m, s.scratch));
                 slot = std::min(slot, rk);
               },
               [&merge](State& acc, const State& s) { merge(acc.tab, s.tab); })
               .tab;
  }
  return *std::max_element(best.begin(), best.end());
}

std::size_t singleton_defect(const RankMetricCode& c, const EnumOptions& opt) {
  const std::size_t d = minimum_distance(c, opt);
  const std::size_t bound = c.m() * (c.n() + 1 - d);
  if (bound < c.dim()) fail(ErrorKind::internal, "Singleton-type bound violated");
  return bound - c.dim();
}

bool is_mrd(const RankMetricCode& c, const EnumOptions& opt) { return singleton_defect(c, opt) == 0; }

std::size_t anticode_defect(const RankMetricCode& c, const EnumOptions& opt) {
  const std::size_t bound = c.m() * maximum_rank(c, opt);
  if (bound < c.dim()) fail(ErrorKind::internal, "anticode bound violated");
  return bound - c.dim();
}

AnticodeCheck is_optimal_anticode(const RankMetricCode& c, const EnumOptions& opt) {
  AnticodeCheck out;
  if (anticode_defect(c, opt) != 0) return out;
  out.optimal = true;
  const auto gens = c.basis();
  Subspace cols = Subspace::zero(c.field(), c.n());
  for (const auto& g : gens) cols = cols + column_space(g);
  if (column_support_code(cols, c.m()) == c) {
    out.side = SupportSide::column;
    out.support = cols;
    return out;
  }
  if (c.n() == c.m()) {
    Subspace rows = Subspace::zero(c.field(), c.m());
    for (const auto& g : gens) rows = rows + row_space(g);
    if (row_support_code(rows, c.n()) == c) {
      out.side = SupportSide::row;
      out.support = rows;
    }
  }
  return out;
}

}  // namespace rankmetric
