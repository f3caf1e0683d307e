#pragma once

#include "finite_field.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rankmetric {

// Dense matrix over a finite field, row-major.
class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

  // I_r padded with zeros to rows x cols, r = min(rows, cols).
  static Matrix identity(FieldPtr field, std::size_t rows, std::size_t cols);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Elem at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Elem v) { data_[i * cols_ + j] = v; }
  // Row-major concatenation of the rows.
  std::span<const Elem> entries() const noexcept { return data_; }
  bool is_zero() const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(Elem s) const;
  Matrix transposed() const;

  bool operator==(const Matrix& o) const { return same_field(field_, o.field_) && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

  // One line per row, entries separated by single spaces.
  std::string str() const;

 private:
  void check_compatible(const Matrix& o) const;

  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

// In-place reduced row echelon form of a rows x cols row-major buffer.
// Returns the pivot column of each nonzero row; zero rows end up last.
std::vector<std::size_t> rref_in_place(const Field& field, std::vector<Elem>& data, std::size_t rows, std::size_t cols);

std::size_t rank(const Matrix& x);
// Gaussian elimination without the packed GF(2) path.
std::size_t rank_generic(const Matrix& x);
// Rank of a GF(2) matrix whose rows are packed into machine words.
std::size_t rank_gf2(std::span<const std::uint64_t> rows);

std::size_t rank_distance(const Matrix& x, const Matrix& y);
FieldElement trace_product(const Matrix& x, const Matrix& y);

// Subspace of F_q^a stored as its RREF basis.
class Subspace {
 public:
  static Subspace span(FieldPtr field, std::size_t ambient_dim, std::span<const std::vector<Elem>> vectors);
  static Subspace zero(FieldPtr field, std::size_t ambient_dim);
  static Subspace full(FieldPtr field, std::size_t ambient_dim);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return pivots_.size(); }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  std::span<const Elem> row(std::size_t i) const { return {rows_.data() + i * ambient_, ambient_}; }
  std::vector<std::vector<Elem>> basis() const;

  bool contains(std::span<const Elem> v) const;
  bool contains(const Subspace& other) const;
  Subspace operator+(const Subspace& other) const;
  Subspace intersection(const Subspace& other) const;

  bool operator==(const Subspace& o) const { return same_field(field_, o.field_) && ambient_ == o.ambient_ && rows_ == o.rows_; }
  bool operator<(const Subspace& o) const { return pivots_ != o.pivots_ ? pivots_ < o.pivots_ : rows_ < o.rows_; }

  std::string str() const;

 private:
  Subspace(FieldPtr field, std::size_t ambient, std::vector<Elem> rows, std::vector<std::size_t> pivots);
  void check_compatible(const Subspace& o) const;

  FieldPtr field_;
  std::size_t ambient_;
  std::vector<Elem> rows_;  // dim x ambient, RREF
  std::vector<std::size_t> pivots_;
};

Subspace column_space(const Matrix& x);
Subspace row_space(const Matrix& x);
// Orthogonal complement under the standard dot product of F_q^a.
Subspace orthogonal_subspace(const Subspace& u);

// Every u-dimensional subspace of F_q^a, exactly once, ordered by pivot
// pattern (lexicographic) and then by free entries (lexicographic).
void for_each_subspace(const FieldPtr& field, std::size_t a, std::size_t u, const std::function<void(const Subspace&)>& fn);
// Restriction of the above to one pivot pattern, for partitioned scans.
void for_each_subspace_with_pivots(const FieldPtr& field, std::size_t a, std::span<const std::size_t> pivots,
                                   const std::function<void(const Subspace&)>& fn);
// All u-subsets of {0..a-1} in lexicographic order.
std::vector<std::vector<std::size_t>> pivot_patterns(std::size_t a, std::size_t u);

// Pull-style stream over the same sequence as for_each_subspace.
class SubspaceStream {
 public:
  SubspaceStream(FieldPtr field, std::size_t a, std::size_t u);
  std::optional<Subspace> next();

 private:
  bool load_pattern();

  FieldPtr field_;
  std::size_t a_;
  std::size_t u_;
  std::vector<std::vector<std::size_t>> patterns_;
  std::size_t pattern_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> free_;  // (row, col)
  std::vector<Elem> digits_;
  bool started_ = false;
  bool done_ = false;
};

}  // namespace rankmetric
