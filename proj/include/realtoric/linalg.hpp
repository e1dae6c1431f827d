#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace realtoric {

/// Dense row-major integer matrix. Entries are machine integers; exact rank
/// computation promotes to arbitrary precision internally when needed.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::span<const std::int64_t> entries() const noexcept { return entries_; }

  IntMatrix transposed() const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> entries_;
};

/// Exact product; throws InputError on shape mismatch and InconsistencyError
/// on overflow.
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// Matrix over GF(2), rows packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value);

  /// Entries reduced mod 2 (negative entries included).
  static BitMatrix from_int(const IntMatrix& m);

 private:
  friend std::size_t rank_gf2(const BitMatrix&);
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Rank over Q by fraction-free Bareiss elimination. Pivots are the first
/// nonzero entry in column scan order. Elimination runs in checked 64-bit
/// arithmetic and restarts with GMP integers if an intermediate overflows.
/// Every Bareiss division is checked for exactness (InconsistencyError).
std::size_t rank_q(const IntMatrix& a);

std::size_t rank_gf2(const BitMatrix& a);

/// Throws InputError for a non-square matrix.
bool is_nonsingular_gf2(const BitMatrix& a);

}  // namespace realtoric
