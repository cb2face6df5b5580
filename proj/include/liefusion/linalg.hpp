#pragma once

#include "liefusion/exact.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace liefusion {

using RatVec = std::vector<Rat>;
using RatMatrix = std::vector<RatVec>;  // row-major, small dense matrices

RatMatrix identity_matrix(std::size_t n);
RatMatrix matmul(const RatMatrix& a, const RatMatrix& b);
// Gaussian elimination with exact pivoting; throws on singular input.
RatMatrix inverse(const RatMatrix& a);
Rat determinant(RatMatrix a);

// Rank of the span of the given vectors (rows), exact over the rationals.
std::size_t rank_of_rows(RatMatrix rows);

// Returns true when v lies in the row span of basis.
bool in_row_span(const RatMatrix& basis, const RatVec& v);

// Sparse square matrix in column-major form; used for module operators.
// cols[j] lists (row, value) pairs with nonzero values, sorted by row.
class SparseMat {
 public:
  SparseMat() = default;
  explicit SparseMat(std::size_t n) : n_(n), cols_(n) {}

  std::size_t size() const { return n_; }
  const std::vector<std::pair<int, Rat>>& col(std::size_t j) const { return cols_[j]; }
  void set_col(std::size_t j, std::vector<std::pair<int, Rat>> entries);
  void add_entry(std::size_t j, int row, const Rat& v);
  Rat entry(int row, std::size_t col) const;

  bool is_zero() const;
  RatVec apply(const RatVec& x) const;

  SparseMat scaled(const Rat& c) const;
  SparseMat transpose() const;

  friend SparseMat matmul(const SparseMat& a, const SparseMat& b);
  friend SparseMat operator+(const SparseMat& a, const SparseMat& b);
  friend SparseMat operator-(const SparseMat& a, const SparseMat& b);
  friend SparseMat commutator(const SparseMat& a, const SparseMat& b);
  bool operator==(const SparseMat& o) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<std::pair<int, Rat>>> cols_;
};

}  // namespace liefusion
