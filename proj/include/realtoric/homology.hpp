#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "realtoric/linalg.hpp"
#include "realtoric/simplicial.hpp"

namespace realtoric {

/// Augmented simplicial chain complex with rational coefficients.
///
/// bases[q + 1] is the lexicographically ordered basis of q-faces for
/// q = -1, 0, ..., dim; the (-1)-basis is the single empty face.
/// boundaries[q] is ∂_q : C_q -> C_(q-1) for q = 0..dim, shaped
/// |C_(q-1)| x |C_q|, with entry (-1)^j for dropping the j-th vertex. ∂_0 is
/// the augmentation. Everything is empty for the void complex.
struct ChainComplexQ {
  std::vector<std::vector<Face>> bases;
  std::vector<IntMatrix> boundaries;

  const std::vector<Face>& basis(int q) const { return bases.at(q + 1); }
  const IntMatrix& boundary(int q) const { return boundaries.at(q); }
  int top_degree() const { return static_cast<int>(bases.size()) - 2; }
};

ChainComplexQ build_chain_complex(const SimplicialComplex& complex);

/// True iff ∂_(q-1) ∂_q is the zero matrix for every q.
bool boundary_squares_to_zero(const ChainComplexQ& chains);

/// Reduced rational Betti numbers, nonzero degrees only.
struct ReducedBetti {
  std::map<int, std::int64_t> ranks;

  std::int64_t at(int q) const {
    auto it = ranks.find(q);
    return it == ranks.end() ? 0 : it->second;
  }
  friend bool operator==(const ReducedBetti&, const ReducedBetti&) = default;
};

/// dim H̃_q = dim C_q - rank ∂_q - rank ∂_(q+1). The void complex has
/// H̃_(-1) of rank 1 by convention, as does {∅}.
ReducedBetti reduced_betti(const SimplicialComplex& complex);

/// Throws InputError for q < -1.
std::int64_t reduced_betti_in_degree(const SimplicialComplex& complex, int q);

}  // namespace realtoric
