#include "covering.hpp"

#include "error.hpp"
#include "macwilliams.hpp"

#include <functional>

namespace rankmetric {

namespace {

RankDistribution dual_of(const RankMetricCode& c, const RankDistribution& w) {
  return transform(w, c.n(), c.m(), c.field()->q());
}

void check_distribution(const RankMetricCode& c, const RankDistribution& w) {
  if (w.size() != c.n() + 1 || w.total() != c.size()) fail(ErrorKind::mismatch, "distribution does not belong to the code");
}

}  // namespace

std::size_t lambda_cover(const EntrySet& s, std::size_t a, std::size_t b) {
  std::vector<std::vector<std::size_t>> adj(a);
  for (const auto& p : s) {
    if (p.row < 1 || p.row > a || p.col < 1 || p.col > b) {
      fail(ErrorKind::input, "position (" + std::to_string(p.row) + "," + std::to_string(p.col) + ") outside the grid");
    }
    adj[p.row - 1].push_back(p.col - 1);
  }
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> match_col(b, none);
  std::vector<char> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t r) {
    for (auto c : adj[r]) {
      if (seen[c]) continue;
      seen[c] = 1;
      if (match_col[c] == none || augment(match_col[c])) {
        match_col[c] = r;
        return true;
      }
    }
    return false;
  };
  std::size_t size = 0;
  for (std::size_t r = 0; r < a; ++r) {
    seen.assign(b, 0);
    if (augment(r)) ++size;
  }
  return size;
}

std::size_t dual_distance_bound(const RankMetricCode& c, const RankDistribution& w) {
  if (c.is_ambient()) fail(ErrorKind::domain, "bound undefined; rho = 0 for the ambient code");
  check_distribution(c, w);
  return c.n() + 1 - minimum_distance(dual_of(c, w));
}

std::size_t dual_distance_bound(const RankMetricCode& c, const EnumOptions& opt) {
  if (c.is_ambient()) fail(ErrorKind::domain, "bound undefined; rho = 0 for the ambient code");
  return dual_distance_bound(c, rank_distribution(c, opt));
}

std::size_t external_distance_bound(const RankMetricCode& c, const RankDistribution& w) {
  check_distribution(c, w);
  const auto wd = dual_of(c, w);
  std::size_t s = 0;
  for (std::size_t i = 1; i < wd.size(); ++i) {
    if (wd[i] > 0) ++s;
  }
  return s;
}

std::size_t external_distance_bound(const RankMetricCode& c, const EnumOptions& opt) {
  return external_distance_bound(c, rank_distribution(c, opt));
}

std::size_t initial_set_bound(const RankMetricCode& c, const RankDistribution& w) {
  if (c.is_zero()) fail(ErrorKind::domain, "initial set bound undefined for zero code");
  check_distribution(c, w);
  const std::size_t d = minimum_distance(w);
  const std::size_t rows = c.n() - d + 1;
  const EntrySet in = initial_set(c);
  EntrySet rest;
  for (std::size_t i = 1; i <= rows; ++i) {
    for (std::size_t j = 1; j <= c.m(); ++j) {
      if (!in.contains({i, j})) rest.insert({i, j});
    }
  }
  return d - 1 + lambda_cover(rest, rows, c.m());
}

std::size_t initial_set_bound(const RankMetricCode& c, const EnumOptions& opt) {
  if (c.is_zero()) fail(ErrorKind::domain, "initial set bound undefined for zero code");
  return initial_set_bound(c, rank_distribution(c, opt));
}

CoveringReport covering_report(const RankMetricCode& c, const EnumOptions& opt) {
  const RankDistribution w = rank_distribution(c, opt);
  const RankDistribution wd = dual_of(c, w);
  CoveringReport r;
  r.min_distance = minimum_distance(w);
  r.dual_min_distance = minimum_distance(wd);
  const std::size_t d = std::min(r.min_distance, c.n());
  r.lower_bound = d / 2;  // ceil((d-1)/2)
  if (!c.is_ambient()) r.dual_distance_bound = c.n() + 1 - r.dual_min_distance;
  r.external_distance_bound = external_distance_bound(c, w);
  if (!c.is_zero()) r.initial_set_bound = initial_set_bound(c, w);
  try {
    r.exact = covering_radius_exact(c, opt);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::budget) throw;
  }

  if (r.dual_distance_bound && r.external_distance_bound > *r.dual_distance_bound) {
    fail(ErrorKind::internal, "external distance bound exceeds dual distance bound");
  }
  if (r.exact) {
    const std::size_t rho = *r.exact;
    auto check = [&](std::size_t bound, const char* name) {
      if (rho > bound) fail(ErrorKind::internal, std::string("covering radius exceeds the ") + name);
    };
    if (rho < r.lower_bound) fail(ErrorKind::internal, "covering radius below the lower bound");
    if (r.dual_distance_bound) check(*r.dual_distance_bound, "dual distance bound");
    check(r.external_distance_bound, "external distance bound");
    if (r.initial_set_bound) check(*r.initial_set_bound, "initial set bound");
  }
  return r;
}

}  // namespace rankmetric
