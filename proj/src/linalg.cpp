#include "realtoric/linalg.hpp"

#include <gmpxx.h>

#include <limits>
#include <optional>
#include <utility>

#include "realtoric/error.hpp"

namespace realtoric {
namespace {

// Bareiss rank over a row-major working copy. Returns nullopt when the
// 64-bit path overflows.
template <typename Int, typename Step>
std::optional<std::size_t> bareiss_rank(std::vector<Int> work, std::size_t rows,
                                        std::size_t cols, Step step) {
  auto at = [&](std::size_t r, std::size_t c) -> Int& { return work[r * cols + c]; };
  Int previous = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot_row = rank;
    while (pivot_row < rows && at(pivot_row, c) == 0) ++pivot_row;
    if (pivot_row == rows) continue;
    if (pivot_row != rank) {
      for (std::size_t j = c; j < cols; ++j) std::swap(at(pivot_row, j), at(rank, j));
    }
    const Int pivot = at(rank, c);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const Int factor = at(i, c);
      at(i, c) = 0;
      if (factor == 0) {
        // Row unaffected by the pivot column: entries scale by pivot/previous.
        if (pivot == previous) continue;
        for (std::size_t j = c + 1; j < cols; ++j) {
          Int& x = at(i, j);
          if (x != 0 && !step(x, pivot, Int(0), Int(0), previous)) return std::nullopt;
        }
        continue;
      }
      for (std::size_t j = c + 1; j < cols; ++j) {
        Int& x = at(i, j);
        const Int& y = at(rank, j);
        if (x == 0 && y == 0) continue;
        if (!step(x, pivot, factor, y, previous)) return std::nullopt;
      }
    }
    previous = pivot;
    ++rank;
  }
  return rank;
}

// x <- (pivot*x - factor*y) / previous, exactly.
bool step_i64(std::int64_t& x, std::int64_t pivot, std::int64_t factor, std::int64_t y,
              std::int64_t previous) {
  const __int128 numerator =
      static_cast<__int128>(pivot) * x - static_cast<__int128>(factor) * y;
  if (numerator % previous != 0) throw InconsistencyError("Bareiss division is not exact");
  const __int128 q = numerator / previous;
  if (q > std::numeric_limits<std::int64_t>::max() ||
      q < std::numeric_limits<std::int64_t>::min())
    return false;
  x = static_cast<std::int64_t>(q);
  return true;
}

bool step_mpz(mpz_class& x, const mpz_class& pivot, const mpz_class& factor,
              const mpz_class& y, const mpz_class& previous) {
  mpz_class numerator = pivot * x - factor * y;
  if (!mpz_divisible_p(numerator.get_mpz_t(), previous.get_mpz_t()))
    throw InconsistencyError("Bareiss division is not exact");
  mpz_divexact(x.get_mpz_t(), numerator.get_mpz_t(), previous.get_mpz_t());
  return true;
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw InputError("IntMatrix: entry count != rows*cols");
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("multiply: inner dimensions differ");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        std::int64_t term = 0;
        if (__builtin_mul_overflow(aik, b(k, j), &term) ||
            __builtin_add_overflow(out(i, j), term, &out(i, j)))
          throw InconsistencyError("multiply: 64-bit overflow");
      }
    }
  }
  return out;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
  return (bits_[r * words_ + c / 64] >> (c % 64)) & 1u;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
  auto& word = bits_[r * words_ + c / 64];
  const std::uint64_t bit = std::uint64_t{1} << (c % 64);
  word = value ? (word | bit) : (word & ~bit);
}

BitMatrix BitMatrix::from_int(const IntMatrix& m) {
  BitMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, (m(r, c) & 1) != 0);
  return out;
}

std::size_t rank_q(const IntMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  std::vector<std::int64_t> work(a.entries().begin(), a.entries().end());
  if (auto rank = bareiss_rank<std::int64_t>(std::move(work), a.rows(), a.cols(), step_i64))
    return *rank;
  std::vector<mpz_class> big;
  big.reserve(a.entries().size());
  for (std::int64_t x : a.entries()) big.emplace_back(static_cast<long>(x));
  return *bareiss_rank<mpz_class>(std::move(big), a.rows(), a.cols(), step_mpz);
}

std::size_t rank_gf2(const BitMatrix& a) {
  std::vector<std::uint64_t> rows = a.bits_;
  const std::size_t words = a.words_;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols_ && rank < a.rows_; ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < a.rows_ && !(rows[pivot * words + w] & bit)) ++pivot;
    if (pivot == a.rows_) continue;
    if (pivot != rank)
      for (std::size_t k = 0; k < words; ++k) std::swap(rows[pivot * words + k], rows[rank * words + k]);
    for (std::size_t r = 0; r < a.rows_; ++r) {
      if (r != rank && (rows[r * words + w] & bit))
        for (std::size_t k = w; k < words; ++k) rows[r * words + k] ^= rows[rank * words + k];
    }
    ++rank;
  }
  return rank;
}

bool is_nonsingular_gf2(const BitMatrix& a) {
  if (a.rows() != a.cols()) throw InputError("is_nonsingular_gf2 needs a square matrix");
  return rank_gf2(a) == a.rows();
}

}  // namespace realtoric
