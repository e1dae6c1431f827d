#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

#include "realtoric/families.hpp"
#include "realtoric/simplicial.hpp"
#include "realtoric/small_cover.hpp"

// JSON file formats. Keys are written in the documented order:
//   complex: {"m": int, "labels": [string], "maximal_faces": [[int]]}, 0-based
//   chi:     {"n": int, "columns": [[0|1]]}, one column per complex vertex
//   problem: {"complex": <complex>, "chi": <chi>}
//   graph:   {"n": int, "edges": [[int,int]]}, 1-based
// Readers throw InputError on anything malformed. Integer chi entries are
// reduced mod 2.

namespace realtoric {

using Json = nlohmann::ordered_json;

struct Problem {
  SimplicialComplex complex;
  CharMatrix chi;
};

Json complex_to_json(const SimplicialComplex& complex);
SimplicialComplex complex_from_json(const Json& j);

Json chi_to_json(const CharMatrix& chi);
CharMatrix chi_from_json(const Json& j);

Json problem_to_json(const Problem& problem);
Problem problem_from_json(const Json& j);

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// Parses text, mapping syntax errors to InputError.
Json parse_json(std::string_view text);

}  // namespace realtoric
