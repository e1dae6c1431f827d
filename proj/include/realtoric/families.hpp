#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "realtoric/simplicial.hpp"
#include "realtoric/small_cover.hpp"

namespace realtoric {

/// Finite simple graph on vertices 1..n. Edges are stored 1-based with
/// the smaller endpoint first.
class Graph {
 public:
  /// Throws InputError on loops, repeated edges, or endpoints outside 1..n.
  Graph(int n, std::vector<std::pair<int, int>> edges);

  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);
  /// Vertex 1 joined to every other vertex.
  static Graph star(int n);

  int vertex_count() const noexcept { return n_; }
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
  /// Whether the induced subgraph on a nonempty bitmask (bit i-1 = vertex i)
  /// is connected.
  bool induces_connected(std::uint64_t subset) const;
  bool is_connected() const;

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::uint64_t> adjacency_;
};

/// Proper nonempty vertex subset inducing a connected subgraph.
struct Tube {
  std::uint64_t members = 0;
  friend bool operator==(const Tube&, const Tube&) = default;
};

/// All tubes in (size, lexicographic) order. Throws InputError for a
/// disconnected graph.
std::vector<Tube> tubes(const Graph& g);

/// Nested, or disjoint with a union that does not induce a connected subgraph.
bool are_compatible(const Graph& g, const Tube& a, const Tube& b);

/// Flag complex of pairwise-compatible tubes, vertices ordered as tubes(g)
/// and labelled like "{1,2}". Throws InconsistencyError if it is not pure of
/// dimension n-2.
SimplicialComplex nested_set_complex(const Graph& g);

/// Column of χ for a subset Q of [n]: Σ_{i∈Q} χ^i with χ^i = e_i for i < n and
/// χ^n = e_1 + ... + e_(n-1), over GF(2).
std::uint64_t hessenberg_column(std::uint64_t subset, int n);

/// Small cover over the permutahedron P_n (real points of the Hessenberg
/// variety), of dimension n-1 on 2^n - 2 facets.
SmallCover permutahedron_cover(int n);

/// Small cover over the graph associahedron of a connected graph with at
/// least two vertices, columns assigned by hessenberg_column. Throws
/// ValidationError naming the offending maximal tubing if a minor is singular.
SmallCover graph_associahedron_cover(const Graph& g);

/// Euler secant numbers A_0, A_2, ..., A_2k.
struct SecantTable {
  std::vector<mpz_class> values;  // values[i] = A_2i
  const mpz_class& at(int i) const { return values.at(i); }
};

/// Inverts the cosine series exactly and checks the result against
/// Σ_j (-1)^j C(2i,2j) A_(2i-2j) = 0 (InconsistencyError on failure).
SecantTable secant_numbers(int k);

/// A_2i C(n, 2i): the i-th rational Betti number of the real Hessenberg
/// variety of P_n.
mpz_class hessenberg_betti_closed_form(int n, int i);

/// Support subcomplex of permutahedron_cover(n) for S = {1..r}.
SimplicialComplex k_n_r(int n, int r);

}  // namespace realtoric
