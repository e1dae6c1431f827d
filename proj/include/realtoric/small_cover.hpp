#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "realtoric/homology.hpp"
#include "realtoric/simplicial.hpp"

namespace realtoric {

/// A subset S ⊆ [n] as a bitmask: bit i-1 stands for row i.
using Subset = std::uint64_t;

inline constexpr int kMaxRows = 30;

/// n x m characteristic matrix over GF(2). Column j is attached to vertex j
/// of the companion complex and stored as a bitmask over the n rows.
class CharMatrix {
 public:
  CharMatrix() = default;
  /// Throws InputError unless 1 <= n <= kMaxRows and every column fits in n bits.
  CharMatrix(int n, std::vector<std::uint64_t> columns);
  /// Integer columns, each of length n, reduced mod 2.
  static CharMatrix from_integer_columns(int n, const std::vector<std::vector<std::int64_t>>& columns);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return static_cast<int>(columns_.size()); }
  const std::vector<std::uint64_t>& columns() const noexcept { return columns_; }
  bool entry(int row, int col) const { return (columns_.at(col) >> row) & 1u; }

  friend bool operator==(const CharMatrix&, const CharMatrix&) = default;

 private:
  int rows_ = 0;
  std::vector<std::uint64_t> columns_;
};

/// A validated pair (K, χ).
class SmallCover {
 public:
  const SimplicialComplex& complex() const noexcept { return complex_; }
  const CharMatrix& chi() const noexcept { return chi_; }
  int dimension() const noexcept { return chi_.rows(); }
  int facet_count() const noexcept { return complex_.vertex_count(); }
  /// Non-fatal observations made during validation (e.g. K disconnected).
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

 private:
  friend SmallCover validate(SimplicialComplex, CharMatrix);
  SmallCover(SimplicialComplex k, CharMatrix chi, std::vector<std::string> warnings)
      : complex_(std::move(k)), chi_(std::move(chi)), warnings_(std::move(warnings)) {}

  SimplicialComplex complex_;
  CharMatrix chi_;
  std::vector<std::string> warnings_;
};

/// Outcome of the minor check on one maximal face.
struct FaceCheck {
  Face face;
  bool nonsingular = false;
};

/// Minor test on every maximal face, in maximal-face order. Faces whose size
/// differs from n are reported as failing.
std::vector<FaceCheck> check_minors(const SimplicialComplex& complex, const CharMatrix& chi);

/// Checks that K is a pseudomanifold of dimension n-1 on chi.cols() vertices,
/// that no column is zero, and that the columns over each maximal face are
/// independent over GF(2). Throws ValidationError; a singular minor names its face.
SmallCover validate(SimplicialComplex complex, CharMatrix chi);

/// χ_S as a bit per column.
std::vector<bool> chi_row_sum(const SmallCover& cover, Subset rows);

/// Vertices j with (χ_S)_j = 1, ascending.
std::vector<int> support(const SmallCover& cover, Subset rows);

/// K_{χ,S}: the full subcomplex on the support of χ_S. Void for S = ∅.
SimplicialComplex support_subcomplex(const SmallCover& cover, Subset rows);

struct SubsetContribution {
  Subset rows = 0;
  std::vector<int> support;
  ReducedBetti reduced;
};

/// Rational Betti numbers b_0..b_n of N_P(χ), with the reduced homology of
/// every K_{χ,S}; breakdown[S] is indexed by the bitmask S.
struct BettiVector {
  std::vector<std::int64_t> betti;
  std::vector<SubsetContribution> breakdown;
};

/// Sums dim H̃_(q-1)(K_{χ,S}) over all 2^n subsets. `jobs` worker threads
/// (0 = hardware concurrency); the result does not depend on it.
BettiVector betti_numbers(const SmallCover& cover, unsigned jobs = 1);

struct Orientability {
  bool orientable = false;
  /// Least nonempty S with full support, when orientable.
  std::optional<Subset> witness;
};

Orientability is_orientable(const SmallCover& cover);

/// Mod-2 Betti numbers, i.e. the h-vector of K.
HVector mod2_betti(const SmallCover& cover);

/// Alternating sum of `betti`; throws InconsistencyError if it differs from
/// the alternating sum of the h-vector.
std::int64_t euler_characteristic(const SmallCover& cover, const BettiVector& betti);
std::int64_t euler_characteristic(const SmallCover& cover);

/// Euler characteristic of the real moment-angle complex 𝒵_K(D¹,S⁰) on m
/// coordinates, by counting cubical cells: Σ_σ (-1)^|σ| 2^(m-|σ|) over all
/// faces σ, the empty face always included. Throws InputError if m is
/// smaller than K's vertex count.
mpz_class moment_angle_euler(const SimplicialComplex& complex, int m);

struct CoveringCheck {
  mpz_class moment_angle;  // χ(𝒵_K(D¹,S⁰))
  mpz_class sheets;        // 2^(m-n)
  std::int64_t manifold;   // χ(N_P(χ))
  bool match = false;
};

CoveringCheck covering_identity(const SmallCover& cover, const BettiVector& betti);

/// 1-based members of S.
std::vector<int> subset_members(Subset rows);

}  // namespace realtoric
