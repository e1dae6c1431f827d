#include "realtoric/homology.hpp"

#include <algorithm>
#include <iterator>

#include "realtoric/error.hpp"

namespace realtoric {

ChainComplexQ build_chain_complex(const SimplicialComplex& complex) {
  ChainComplexQ chains;
  chains.bases = all_faces(complex);
  for (std::size_t k = 1; k < chains.bases.size(); ++k) {
    const auto& lower = chains.bases[k - 1];
    const auto& upper = chains.bases[k];
    IntMatrix boundary(lower.size(), upper.size());
    Face facet;
    for (std::size_t col = 0; col < upper.size(); ++col) {
      const Face& face = upper[col];
      for (std::size_t j = 0; j < face.size(); ++j) {
        facet.clear();
        for (std::size_t i = 0; i < face.size(); ++i)
          if (i != j) facet.push_back(face[i]);
        auto it = std::lower_bound(lower.begin(), lower.end(), facet);
        if (it == lower.end() || *it != facet)
          throw InconsistencyError("face closure is missing a boundary face");
        boundary(static_cast<std::size_t>(std::distance(lower.begin(), it)), col) =
            (j % 2 == 0) ? 1 : -1;
      }
    }
    chains.boundaries.push_back(std::move(boundary));
  }
  return chains;
}

bool boundary_squares_to_zero(const ChainComplexQ& chains) {
  for (std::size_t q = 1; q < chains.boundaries.size(); ++q) {
    const IntMatrix product = multiply(chains.boundaries[q - 1], chains.boundaries[q]);
    if (std::any_of(product.entries().begin(), product.entries().end(),
                    [](std::int64_t x) { return x != 0; }))
      return false;
  }
  return true;
}

ReducedBetti reduced_betti(const SimplicialComplex& complex) {
  ReducedBetti result;
  if (complex.is_void()) {
    result.ranks[-1] = 1;
    return result;
  }
  const ChainComplexQ chains = build_chain_complex(complex);
  const int top = chains.top_degree();
  // rank[q] = rank ∂_q for q = 0..top, with zeros at both ends.
  std::vector<std::int64_t> rank(top + 2, 0);
  for (int q = 0; q <= top; ++q)
    rank[q] = static_cast<std::int64_t>(rank_q(chains.boundary(q)));
  for (int q = -1; q <= top; ++q) {
    const auto dim = static_cast<std::int64_t>(chains.basis(q).size());
    const std::int64_t incoming = q >= 0 ? rank[q] : 0;
    const std::int64_t outgoing = rank[q + 1];
    const std::int64_t b = dim - incoming - outgoing;
    if (b < 0) throw InconsistencyError("negative Betti number");
    if (b != 0) result.ranks[q] = b;
  }
  return result;
}

std::int64_t reduced_betti_in_degree(const SimplicialComplex& complex, int q) {
  if (q < -1) throw InputError("reduced homology degree must be >= -1");
  return reduced_betti(complex).at(q);
}

}  // namespace realtoric
