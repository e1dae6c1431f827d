#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "realtoric/families.hpp"
#include "realtoric/simplicial.hpp"
#include "realtoric/small_cover.hpp"

namespace testing {

inline realtoric::SimplicialComplex cycle(int length) {
  std::vector<realtoric::Face> edges;
  for (int i = 0; i < length; ++i) edges.push_back({i, (i + 1) % length});
  return realtoric::SimplicialComplex(length, edges);
}

// Square with vertices labelled 1..4 in cyclic order.
inline realtoric::SimplicialComplex square() {
  return realtoric::SimplicialComplex(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {"1", "2", "3", "4"});
}

inline constexpr std::uint64_t e1 = 0b01, e2 = 0b10, e12 = 0b11;

inline realtoric::SmallCover torus_square() {
  return realtoric::validate(square(), realtoric::CharMatrix(2, {e1, e2, e1, e2}));
}

inline realtoric::SmallCover klein_square() {
  return realtoric::validate(square(), realtoric::CharMatrix(2, {e1, e2, e1, e12}));
}

inline std::vector<std::uint32_t> generators_of(const realtoric::SimplicialComplex& k) {
  std::vector<std::uint32_t> out;
  for (const auto& face : k.maximal_faces()) {
    std::uint32_t mask = 0;
    for (int v : face) mask |= 1u << v;
    out.push_back(mask);
  }
  return out;
}

inline realtoric::SimplicialComplex from_generators(int m, const std::vector<std::uint32_t>& gens) {
  std::vector<realtoric::Face> faces;
  for (auto g : gens) {
    realtoric::Face f;
    for (int v = 0; v < m; ++v)
      if (g & (1u << v)) f.push_back(v);
    faces.push_back(f);
  }
  return realtoric::SimplicialComplex(m, faces);
}

struct CatalogEntry {
  std::string name;
  realtoric::SmallCover cover;
};

// Square covers, permutahedra n <= max_perm, and graph associahedra for
// paths, cycles and stars on up to 5 vertices.
inline std::vector<CatalogEntry> catalog(int max_perm = 6) {
  using namespace realtoric;
  std::vector<CatalogEntry> out;
  out.push_back({"torus square", torus_square()});
  out.push_back({"klein square", klein_square()});
  for (int n = 2; n <= max_perm; ++n)
    out.push_back({"permutahedron " + std::to_string(n), permutahedron_cover(n)});
  for (int n = 2; n <= 5; ++n) {
    out.push_back({"path " + std::to_string(n), graph_associahedron_cover(Graph::path(n))});
    out.push_back({"star " + std::to_string(n), graph_associahedron_cover(Graph::star(n))});
    if (n >= 3)
      out.push_back({"cycle " + std::to_string(n), graph_associahedron_cover(Graph::cycle(n))});
  }
  return out;
}

}  // namespace testing
