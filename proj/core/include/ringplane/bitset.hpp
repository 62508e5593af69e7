#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ringplane {

// Fixed-width bitset with word access, sized at runtime.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  std::size_t count_and(const Bitset& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
      c += static_cast<std::size_t>(__builtin_popcountll(w_[i] & o.w_[i]));
    return c;
  }

  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator<(const Bitset& o) const { return w_ < o.w_; }

  const std::vector<std::uint64_t>& words() const { return w_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Rectangular bit matrix, row-major.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), w_(rows * wpr_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool test(std::size_t r, std::size_t c) const {
    return (w_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
  }
  void set(std::size_t r, std::size_t c) {
    w_[r * wpr_ + (c >> 6)] |= std::uint64_t{1} << (c & 63);
  }

  std::size_t row_count(std::size_t r) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < wpr_; ++i)
      c += static_cast<std::size_t>(__builtin_popcountll(w_[r * wpr_ + i]));
    return c;
  }

  // Popcount of the AND of two rows.
  std::size_t row_and_count(std::size_t r1, std::size_t r2) const {
    std::size_t c = 0;
    const std::uint64_t* a = &w_[r1 * wpr_];
    const std::uint64_t* b = &w_[r2 * wpr_];
    for (std::size_t i = 0; i < wpr_; ++i)
      c += static_cast<std::size_t>(__builtin_popcountll(a[i] & b[i]));
    return c;
  }

  bool rows_equal(std::size_t r1, std::size_t r2) const {
    const std::uint64_t* a = &w_[r1 * wpr_];
    const std::uint64_t* b = &w_[r2 * wpr_];
    for (std::size_t i = 0; i < wpr_; ++i)
      if (a[i] != b[i]) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace ringplane
