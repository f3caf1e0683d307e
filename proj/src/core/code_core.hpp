#pragma once

#include "matrix_space.hpp"
#include "numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace rankmetric {

// Limits for exhaustive scans. `threads` changes speed only, never results.
struct EnumOptions {
  std::uint64_t budget = std::uint64_t{1} << 24;
  unsigned threads = 1;
};

// F_q-linear space of n x m matrices (n <= m), stored as the RREF of the
// row-major vectorizations of its elements.
class RankMetricCode {
 public:
  static RankMetricCode from_generators(FieldPtr field, std::size_t n, std::size_t m, std::span<const Matrix> generators);
  // `space` lives in F_q^{nm}, coordinates in row-major matrix order.
  static RankMetricCode from_space(Subspace space, std::size_t n, std::size_t m);
  static RankMetricCode zero(FieldPtr field, std::size_t n, std::size_t m);
  static RankMetricCode ambient(FieldPtr field, std::size_t n, std::size_t m);

  const FieldPtr& field() const noexcept { return space_.field(); }
  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }
  std::size_t dim() const noexcept { return space_.dim(); }
  // |C| = q^dim.
  BigNat size() const;
  const Subspace& space() const noexcept { return space_; }
  // Canonical basis, one matrix per RREF row.
  std::vector<Matrix> basis() const;
  bool contains(const Matrix& x) const;
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_ambient() const noexcept { return dim() == n_ * m_; }

  bool operator==(const RankMetricCode& o) const { return n_ == o.n_ && m_ == o.m_ && space_ == o.space_; }

 private:
  RankMetricCode(Subspace space, std::size_t n, std::size_t m);

  Subspace space_;
  std::size_t n_;
  std::size_t m_;
};

// (W_0, ..., W_n), exact.
struct RankDistribution {
  std::vector<BigNat> counts;

  std::size_t size() const noexcept { return counts.size(); }
  const BigNat& operator[](std::size_t i) const { return counts[i]; }
  BigNat total() const;
  bool operator==(const RankDistribution& o) const = default;
  // "(1,0,4,4)"
  std::string str() const;
};

// 1-based matrix position.
struct Position {
  std::size_t row;
  std::size_t col;
  auto operator<=>(const Position&) const = default;
};

class EntrySet {
 public:
  EntrySet() = default;
  EntrySet(std::initializer_list<Position> positions) : positions_(positions) {}

  void insert(Position p) { positions_.insert(p); }
  bool contains(Position p) const { return positions_.contains(p); }
  std::size_t size() const noexcept { return positions_.size(); }
  bool empty() const noexcept { return positions_.empty(); }
  auto begin() const { return positions_.begin(); }
  auto end() const { return positions_.end(); }
  bool operator==(const EntrySet&) const = default;
  // "{(1,1),(1,2)}"
  std::string str() const;

 private:
  std::set<Position> positions_;
};

// All codewords, lexicographic in the coefficient vector over the canonical
// basis. Fails with ErrorKind::budget when q^dim exceeds the budget.
std::vector<Matrix> codewords(const RankMetricCode& c, const EnumOptions& opt = {});
void for_each_codeword(const RankMetricCode& c, const std::function<void(const Matrix&)>& fn, const EnumOptions& opt = {});

RankDistribution rank_distribution(const RankMetricCode& c, const EnumOptions& opt = {});
// Histogram of rk(A + offset) over A in C.
RankDistribution translate_rank_distribution(const RankMetricCode& c, const Matrix& offset, const EnumOptions& opt = {});

// Minimum rank of a nonzero codeword; n + 1 for the zero code.
std::size_t minimum_distance(const RankMetricCode& c, const EnumOptions& opt = {});
// Largest codeword rank; 0 for the zero code.
std::size_t maximum_rank(const RankMetricCode& c, const EnumOptions& opt = {});
std::size_t minimum_distance(const RankDistribution& w);
std::size_t maximum_rank(const RankDistribution& w);

RankMetricCode dual(const RankMetricCode& c);

// {X : colsp(X) <= U}, the full column-support space of U <= F_q^n.
RankMetricCode column_support_code(const Subspace& u, std::size_t m);
// {X : rowsp(X) <= U}, U <= F_q^m.
RankMetricCode row_support_code(const Subspace& u, std::size_t n);

// C(U) = {X in C : colsp(X) <= U}.
RankMetricCode shorten(const RankMetricCode& c, const Subspace& u);

// Lexicographically first nonzero position of a nonzero matrix.
Position initial_entry(const Matrix& x);
// Pivot positions of the canonical basis. Fails for the zero code.
EntrySet initial_set(const RankMetricCode& c);

// Exact covering radius by a syndrome-table search over all q^{nm} matrices.
std::size_t covering_radius_exact(const RankMetricCode& c, const EnumOptions& opt = {});

// m(n - d + 1) - dim; zero exactly for MRD codes (the zero code included,
// through the d = n + 1 convention).
std::size_t singleton_defect(const RankMetricCode& c, const EnumOptions& opt = {});
bool is_mrd(const RankMetricCode& c, const EnumOptions& opt = {});

// m * maxrk - dim.
std::size_t anticode_defect(const RankMetricCode& c, const EnumOptions& opt = {});

enum class SupportSide { column, row };

struct AnticodeCheck {
  bool optimal = false;
  std::optional<SupportSide> side;
  std::optional<Subspace> support;  // U with C = F(U) on the given side
};

// Column side first; the row side is only tried for square codes.
AnticodeCheck is_optimal_anticode(const RankMetricCode& c, const EnumOptions& opt = {});

// Vectorization helpers (row-major).
std::vector<Elem> vectorize(const Matrix& x);
Matrix matrix_from_vector(const FieldPtr& field, std::size_t n, std::size_t m, std::span<const Elem> v);

}  // namespace rankmetric
