#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace realtoric {

/// A face is a strictly increasing list of vertex indices.
using Face = std::vector<int>;

/// Finite abstract simplicial complex on the vertex set {0, ..., m-1}, stored
/// by its maximal faces.
///
/// Two degenerate complexes are kept apart: the void complex has no faces at
/// all, while any other complex contains the empty face. The complex whose
/// only face is the empty face is written with maximal_faces = {{}}.
class SimplicialComplex {
 public:
  /// The void complex on zero vertices.
  SimplicialComplex() = default;

  /// Builds the complex generated by `faces`. Generators contained in other
  /// generators are dropped, so any generating set is accepted. Vertices in
  /// a face are sorted; repeated or out-of-range vertices throw InputError.
  /// Empty `labels` means the default labels "0", "1", ...
  SimplicialComplex(int vertex_count, std::vector<Face> faces,
                    std::vector<std::string> labels = {});

  static SimplicialComplex void_complex(int vertex_count);

  int vertex_count() const noexcept { return vertex_count_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Maximal faces in lexicographic order.
  const std::vector<Face>& maximal_faces() const noexcept { return maximal_faces_; }

  bool is_void() const noexcept { return maximal_faces_.empty(); }
  /// -1 for {∅}; -2 for the void complex.
  int dimension() const noexcept;
  /// True iff `face` (sorted) is contained in some maximal face.
  bool contains(std::span<const int> face) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<std::string> labels_;
  std::vector<Face> maximal_faces_;
};

/// Every face of K grouped by cardinality: result[k] lists the faces with k
/// vertices in lexicographic order. Empty for the void complex.
std::vector<std::vector<Face>> all_faces(const SimplicialComplex& complex);

/// Full subcomplex on `vertices`, renumbered 0..|V|-1 in increasing order of
/// the original indices, original labels kept. An empty selection gives the
/// void complex.
SimplicialComplex induced_subcomplex(const SimplicialComplex& complex,
                                     std::span<const int> vertices);

/// Order complex of the proper part of the Boolean lattice on [n]. Vertices
/// are the nonempty proper subsets of {1..n} sorted by (size, lexicographic)
/// and labelled like "{1,3}".
SimplicialComplex barycentric_subdivision_of_simplex_boundary(int n);

/// counts[k] = f_{k-1}, the number of faces with k vertices (counts[0] = 1
/// for the empty face). Empty for the void complex.
struct FVector {
  std::vector<std::int64_t> counts;
  friend bool operator==(const FVector&, const FVector&) = default;
};

/// (h_0, ..., h_n).
struct HVector {
  std::vector<std::int64_t> entries;
  friend bool operator==(const HVector&, const HVector&) = default;
};

FVector f_vector(const SimplicialComplex& complex);

/// h-vector of a complex that is pure of dimension n-1, from
/// sum_i h_i t^(n-i) = sum_i f_(i-1) (t-1)^(n-i). Throws InputError otherwise.
HVector h_vector(const SimplicialComplex& complex, int n);

bool is_pure(const SimplicialComplex& complex, int dimension);

/// Pure of dimension d and every (d-1)-face lies in exactly two d-faces.
bool is_pseudomanifold(const SimplicialComplex& complex, int dimension);

/// Connected in the sense of its 1-skeleton. Void and {∅} count as connected.
bool is_connected(const SimplicialComplex& complex);

/// "{1,2,5}" for the 1-based members of a bitmask subset.
std::string subset_label(std::uint64_t mask);

/// Strict weak order on subsets: by size, then lexicographic on members.
bool subset_order_less(std::uint64_t a, std::uint64_t b);

}  // namespace realtoric
