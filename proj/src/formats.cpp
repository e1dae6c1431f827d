#include "realtoric/formats.hpp"

#include "realtoric/error.hpp"

namespace realtoric {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::int64_t integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  return j;
}

int bounded(std::int64_t v, const char* what) {
  if (v < 0 || v > (1 << 24)) throw InputError(std::string(what) + " out of range");
  return static_cast<int>(v);
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json complex_to_json(const SimplicialComplex& complex) {
  Json j;
  j["m"] = complex.vertex_count();
  j["labels"] = complex.labels();
  j["maximal_faces"] = Json::array();
  for (const auto& face : complex.maximal_faces()) j["maximal_faces"].push_back(face);
  return j;
}

SimplicialComplex complex_from_json(const Json& j) {
  const int m = bounded(integer(field(j, "m"), "m"), "m");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& label : array(j["labels"], "labels")) {
      if (!label.is_string()) throw InputError("labels must be strings");
      labels.push_back(label.get<std::string>());
    }
  }
  std::vector<Face> faces;
  for (const auto& face : array(field(j, "maximal_faces"), "maximal_faces")) {
    Face f;
    for (const auto& v : array(face, "face")) {
      const auto index = integer(v, "vertex index");
      if (index < 0 || index >= m)
        throw InputError("vertex index " + std::to_string(index) + " out of range");
      f.push_back(static_cast<int>(index));
    }
    faces.push_back(std::move(f));
  }
  return SimplicialComplex(m, std::move(faces), std::move(labels));
}

Json chi_to_json(const CharMatrix& chi) {
  Json j;
  j["n"] = chi.rows();
  j["columns"] = Json::array();
  for (int c = 0; c < chi.cols(); ++c) {
    Json column = Json::array();
    for (int r = 0; r < chi.rows(); ++r) column.push_back(chi.entry(r, c) ? 1 : 0);
    j["columns"].push_back(std::move(column));
  }
  return j;
}

CharMatrix chi_from_json(const Json& j) {
  const auto n = integer(field(j, "n"), "n");
  if (n < 1 || n > kMaxRows) throw InputError("n out of range");
  std::vector<std::vector<std::int64_t>> columns;
  for (const auto& col : array(field(j, "columns"), "columns")) {
    std::vector<std::int64_t> entries;
    for (const auto& x : array(col, "column")) entries.push_back(integer(x, "chi entry"));
    columns.push_back(std::move(entries));
  }
  return CharMatrix::from_integer_columns(static_cast<int>(n), columns);
}

Json problem_to_json(const Problem& problem) {
  Json j;
  j["complex"] = complex_to_json(problem.complex);
  j["chi"] = chi_to_json(problem.chi);
  return j;
}

Problem problem_from_json(const Json& j) {
  return {complex_from_json(field(j, "complex")), chi_from_json(field(j, "chi"))};
}

Json graph_to_json(const Graph& g) {
  Json j;
  j["n"] = g.vertex_count();
  j["edges"] = Json::array();
  for (auto [a, b] : g.edges()) j["edges"].push_back({a, b});
  return j;
}

Graph graph_from_json(const Json& j) {
  const auto n = integer(field(j, "n"), "n");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : array(field(j, "edges"), "edges")) {
    if (!e.is_array() || e.size() != 2) throw InputError("edge must be a pair");
    edges.emplace_back(bounded(integer(e[0], "edge endpoint"), "edge endpoint"),
                       bounded(integer(e[1], "edge endpoint"), "edge endpoint"));
  }
  return Graph(bounded(n, "n"), std::move(edges));
}

}  // namespace realtoric
