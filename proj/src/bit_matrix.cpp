#include "aoxlab/bit_matrix.hpp"

#include <bit>
#include <stdexcept>

namespace aoxlab {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), data_(rows * stride_, 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

std::size_t BitMatrix::rank() const {
  std::vector<std::uint64_t> d = data_;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t pivot = rank;
    while (pivot < rows_ && !(d[pivot * stride_ + w] & bit)) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank) {
      for (std::size_t k = w; k < stride_; ++k) std::swap(d[pivot * stride_ + k], d[rank * stride_ + k]);
    }
    const std::uint64_t* prow = &d[rank * stride_];
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      std::uint64_t* row = &d[r * stride_];
      if (row[w] & bit) {
        // Columns left of `col` are already zero in both rows.
        for (std::size_t k = w; k < stride_; ++k) row[k] ^= prow[k];
      }
    }
    ++rank;
  }
  return rank;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) t.set(c, r, true);
    }
  }
  return t;
}

BitMatrix BitMatrix::multiply(const BitMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("BitMatrix::multiply: shape mismatch");
  BitMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t* dst = &out.data_[r * out.stride_];
    for (std::size_t w = 0; w < stride_; ++w) {
      std::uint64_t bits = data_[r * stride_ + w];
      while (bits) {
        const std::size_t k = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        const std::uint64_t* src = &rhs.data_[k * rhs.stride_];
        for (std::size_t j = 0; j < out.stride_; ++j) dst[j] ^= src[j];
      }
    }
  }
  return out;
}

std::vector<std::uint64_t> BitMatrix::apply(std::span<const std::uint64_t> v) const {
  if (v.size() != stride_) throw std::invalid_argument("BitMatrix::apply: size mismatch");
  std::vector<std::uint64_t> out((rows_ + 63) / 64, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < stride_; ++w) acc ^= data_[r * stride_ + w] & v[w];
    if (std::popcount(acc) & 1) out[r / 64] |= std::uint64_t{1} << (r % 64);
  }
  return out;
}

}  // namespace aoxlab
