#include "realtoric/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "realtoric/error.hpp"

namespace realtoric {
namespace {

bool is_subset_of(const Face& small, const Face& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<int> members(std::uint64_t mask) {
  std::vector<int> out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return out;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

}  // namespace

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<Face> faces,
                                     std::vector<std::string> labels)
    : vertex_count_(vertex_count), labels_(std::move(labels)) {
  if (vertex_count < 0) throw InputError("vertex count must be nonnegative");
  if (labels_.empty()) {
    labels_.reserve(vertex_count);
    for (int v = 0; v < vertex_count; ++v) labels_.push_back(std::to_string(v));
  } else if (static_cast<int>(labels_.size()) != vertex_count) {
    throw InputError("expected " + std::to_string(vertex_count) + " labels, got " +
                     std::to_string(labels_.size()));
  }
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != labels_.size())
    throw InputError("vertex labels must be distinct");

  for (auto& face : faces) {
    std::sort(face.begin(), face.end());
    if (std::adjacent_find(face.begin(), face.end()) != face.end())
      throw InputError("face lists a vertex twice");
    for (int v : face) {
      if (v < 0 || v >= vertex_count)
        throw InputError("vertex index " + std::to_string(v) + " out of range [0, " +
                         std::to_string(vertex_count) + ")");
    }
  }

  // Larger faces first so a face only needs to be tested against kept ones.
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  for (auto& face : faces) {
    bool covered = std::any_of(maximal_faces_.begin(), maximal_faces_.end(),
                               [&](const Face& kept) { return is_subset_of(face, kept); });
    if (!covered) maximal_faces_.push_back(std::move(face));
  }
  std::sort(maximal_faces_.begin(), maximal_faces_.end());
}

SimplicialComplex SimplicialComplex::void_complex(int vertex_count) {
  return SimplicialComplex(vertex_count, {});
}

int SimplicialComplex::dimension() const noexcept {
  if (maximal_faces_.empty()) return -2;
  std::size_t largest = 0;
  for (const auto& face : maximal_faces_) largest = std::max(largest, face.size());
  return static_cast<int>(largest) - 1;
}

bool SimplicialComplex::contains(std::span<const int> face) const {
  return std::any_of(maximal_faces_.begin(), maximal_faces_.end(), [&](const Face& f) {
    return std::includes(f.begin(), f.end(), face.begin(), face.end());
  });
}

std::vector<std::vector<Face>> all_faces(const SimplicialComplex& complex) {
  if (complex.is_void()) return {};
  const int top = complex.dimension() + 1;
  std::vector<std::set<Face>> by_size(top + 1);
  for (const auto& face : complex.maximal_faces()) {
    const int k = static_cast<int>(face.size());
    if (k > 30) throw InputError("maximal face too large to enumerate");
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      Face sub;
      sub.reserve(std::popcount(mask));
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) sub.push_back(face[i]);
      by_size[sub.size()].insert(std::move(sub));
    }
  }
  std::vector<std::vector<Face>> out;
  out.reserve(by_size.size());
  for (auto& level : by_size) out.emplace_back(level.begin(), level.end());
  return out;
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& complex,
                                     std::span<const int> vertices) {
  std::vector<int> selected(vertices.begin(), vertices.end());
  std::sort(selected.begin(), selected.end());
  if (std::adjacent_find(selected.begin(), selected.end()) != selected.end())
    throw InputError("vertex selection lists a vertex twice");
  std::vector<int> new_index(complex.vertex_count(), -1);
  std::vector<std::string> labels;
  labels.reserve(selected.size());
  for (std::size_t i = 0; i < selected.size(); ++i) {
    const int v = selected[i];
    if (v < 0 || v >= complex.vertex_count())
      throw InputError("vertex index " + std::to_string(v) + " out of range");
    new_index[v] = static_cast<int>(i);
    labels.push_back(complex.labels()[v]);
  }
  const int count = static_cast<int>(selected.size());
  if (selected.empty()) return SimplicialComplex::void_complex(0);

  std::vector<Face> generators;
  for (const auto& face : complex.maximal_faces()) {
    Face restricted;
    for (int v : face)
      if (new_index[v] >= 0) restricted.push_back(new_index[v]);
    generators.push_back(std::move(restricted));
  }
  return SimplicialComplex(count, std::move(generators), std::move(labels));
}

SimplicialComplex barycentric_subdivision_of_simplex_boundary(int n) {
  if (n < 2) throw InputError("barycentric subdivision needs n >= 2");
  if (n > 12) throw InputError("n > 12 is too large to enumerate");
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> subsets;
  for (std::uint64_t q = 1; q < full; ++q) subsets.push_back(q);
  std::sort(subsets.begin(), subsets.end(), subset_order_less);

  std::map<std::uint64_t, int> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    index[subsets[i]] = static_cast<int>(i);
    labels.push_back(subset_label(subsets[i]));
  }

  // Maximal chains {p1} ⊂ {p1,p2} ⊂ ... correspond to permutations p.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Face> chains;
  do {
    Face chain;
    std::uint64_t q = 0;
    for (int k = 0; k + 1 < n; ++k) {
      q |= std::uint64_t{1} << perm[k];
      chain.push_back(index.at(q));
    }
    chains.push_back(std::move(chain));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return SimplicialComplex(static_cast<int>(subsets.size()), std::move(chains),
                           std::move(labels));
}

FVector f_vector(const SimplicialComplex& complex) {
  FVector f;
  for (const auto& level : all_faces(complex))
    f.counts.push_back(static_cast<std::int64_t>(level.size()));
  return f;
}

HVector h_vector(const SimplicialComplex& complex, int n) {
  if (n < 0 || !is_pure(complex, n - 1))
    throw InputError("h-vector needs a complex that is pure of dimension " +
                     std::to_string(n - 1));
  const FVector f = f_vector(complex);
  HVector h;
  h.entries.assign(n + 1, 0);
  for (int k = 0; k <= n; ++k) {
    for (int i = 0; i <= k; ++i) {
      const std::int64_t sign = ((k - i) % 2 == 0) ? 1 : -1;
      h.entries[k] += sign * binomial(n - i, k - i) * f.counts[i];
    }
  }
  return h;
}

bool is_pure(const SimplicialComplex& complex, int dimension) {
  if (complex.is_void()) return false;
  return std::all_of(
      complex.maximal_faces().begin(), complex.maximal_faces().end(),
      [&](const Face& face) { return static_cast<int>(face.size()) == dimension + 1; });
}

bool is_pseudomanifold(const SimplicialComplex& complex, int dimension) {
  if (!is_pure(complex, dimension)) return false;
  std::map<Face, int> ridge_count;
  for (const auto& face : complex.maximal_faces()) {
    for (std::size_t skip = 0; skip < face.size(); ++skip) {
      Face ridge;
      for (std::size_t i = 0; i < face.size(); ++i)
        if (i != skip) ridge.push_back(face[i]);
      ++ridge_count[ridge];
    }
  }
  return std::all_of(ridge_count.begin(), ridge_count.end(),
                     [](const auto& entry) { return entry.second == 2; });
}

bool is_connected(const SimplicialComplex& complex) {
  std::vector<int> parent(complex.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<bool> used(complex.vertex_count(), false);
  for (const auto& face : complex.maximal_faces()) {
    for (int v : face) used[v] = true;
    for (std::size_t i = 1; i < face.size(); ++i) parent[find(face[i])] = find(face[0]);
  }
  int root = -1;
  for (int v = 0; v < complex.vertex_count(); ++v) {
    if (!used[v]) continue;
    if (root < 0) root = find(v);
    else if (find(v) != root) return false;
  }
  return true;
}

std::string subset_label(std::uint64_t mask) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int i : members(mask)) {
    if (!first) out << ',';
    out << i;
    first = false;
  }
  out << '}';
  return out.str();
}

bool subset_order_less(std::uint64_t a, std::uint64_t b) {
  const int ca = std::popcount(a), cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  return members(a) < members(b);
}

}  // namespace realtoric
