#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace aoxlab {

/// Dense matrix over F2, row-major, each row packed into 64-bit words with
/// column j at bit (j % 64) of word (j / 64).
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return stride_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * stride_ + c / 64] >> (c % 64)) & 1;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    auto& w = data_[r * stride_ + c / 64];
    const std::uint64_t m = std::uint64_t{1} << (c % 64);
    w = v ? (w | m) : (w & ~m);
  }

  std::span<std::uint64_t> row(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
  std::span<const std::uint64_t> row(std::size_t r) const {
    return {data_.data() + r * stride_, stride_};
  }

  /// Rank by Gaussian elimination on a copy.
  std::size_t rank() const;

  BitMatrix transposed() const;

  /// this * rhs.
  BitMatrix multiply(const BitMatrix& rhs) const;

  /// this * v for a column vector packed like a row (cols() bits).
  std::vector<std::uint64_t> apply(std::span<const std::uint64_t> v) const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> data_;
};

}  // namespace aoxlab
