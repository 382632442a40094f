#include "ffpc/smith.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace ffpc {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// Moves the smallest nonzero |entry| of the trailing block to (k, k); false if the block is 0.
bool pivot_smallest(IntMatrix& m, std::size_t k) {
  std::size_t br = k, bc = k;
  std::int64_t best = 0;
  for (std::size_t r = k; r < m.rows(); ++r) {
    for (std::size_t c = k; c < m.cols(); ++c) {
      const std::int64_t v = std::llabs(m(r, c));
      if (v != 0 && (best == 0 || v < best)) {
        best = v;
        br = r;
        bc = c;
      }
    }
  }
  if (best == 0) return false;
  swap_rows(m, k, br);
  swap_cols(m, k, bc);
  return true;
}

}  // namespace

std::vector<std::int64_t> smith_normal_form(IntMatrix m) {
  const std::size_t n = std::min(m.rows(), m.cols());
  std::vector<std::int64_t> diag(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    if (!pivot_smallest(m, k)) break;
    while (true) {
      bool clean = true;
      const std::int64_t pivot = m(k, k);
      for (std::size_t r = k + 1; r < m.rows(); ++r) {
        const std::int64_t f = m(r, k) / pivot;
        if (f != 0) {
          for (std::size_t c = k; c < m.cols(); ++c) m(r, c) -= f * m(k, c);
        }
        if (m(r, k) != 0) clean = false;
      }
      for (std::size_t c = k + 1; c < m.cols(); ++c) {
        const std::int64_t f = m(k, c) / pivot;
        if (f != 0) {
          for (std::size_t r = k; r < m.rows(); ++r) m(r, c) -= f * m(r, k);
        }
        if (m(k, c) != 0) clean = false;
      }
      if (!clean) {
        pivot_smallest(m, k);
        continue;
      }
      // The pivot must divide the whole trailing block; fold an offending row in.
      std::size_t bad_row = 0;
      for (std::size_t r = k + 1; r < m.rows() && bad_row == 0; ++r) {
        for (std::size_t c = k + 1; c < m.cols(); ++c) {
          if (m(r, c) % pivot != 0) {
            bad_row = r;
            break;
          }
        }
      }
      if (bad_row == 0) break;
      for (std::size_t c = k; c < m.cols(); ++c) m(k, c) += m(bad_row, c);
    }
    diag[k] = std::llabs(m(k, k));
  }
  return diag;
}

}  // namespace ffpc
