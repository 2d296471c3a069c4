#pragma once

#include <cstddef>
#include <vector>

#include "dofic/rational.hpp"

namespace dofic {

/// Dense matrix over arbitrary-precision integers.
class IMat {
 public:
  IMat() = default;
  IMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  void swap_rows(std::size_t i, std::size_t j);
  void append_rows(const IMat& other);
  IMat without_columns(const std::vector<std::size_t>& drop) const;
  bool row_is_zero(std::size_t r) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

IMat mul(const IMat& a, const IMat& b);
IMat add(const IMat& a, const IMat& b);

/// Exact rank by fraction-free (Bareiss) elimination with column pivoting.
std::size_t rank(IMat m);

/// Invertible integer transform E such that rows keep..n-1 of E*h are zero,
/// assuming the first `keep` columns of h have full column rank (true almost
/// surely for generic draws; a rank-deficient draw only yields fewer zeroed
/// rows and is caught downstream by the exact rank checks).
IMat elimination_transform(const IMat& h, std::size_t keep);

}  // namespace dofic
