#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace ffpc {

/// Small dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::int64_t> data_;
};

/// Diagonal of the Smith normal form: min(rows, cols) nonnegative entries
/// d_1 | d_2 | ... with the zeros (rank deficiency) last.
std::vector<std::int64_t> smith_normal_form(IntMatrix m);

}  // namespace ffpc
