#include "realtoric/families.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "realtoric/error.hpp"

namespace realtoric {
namespace {

constexpr int kMaxGraphVertices = 20;

mpz_class binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

// Bron–Kerbosch with pivoting over bitmask-free index sets.
void maximal_cliques(const std::vector<std::vector<bool>>& adj, std::vector<int>& current,
                     std::vector<int> candidates, std::vector<int> excluded,
                     std::vector<Face>& out) {
  if (candidates.empty() && excluded.empty()) {
    out.push_back(current);
    return;
  }
  int pivot = candidates.empty() ? excluded.front() : candidates.front();
  std::size_t best = 0;
  for (const auto* pool : {&candidates, &excluded}) {
    for (int u : *pool) {
      std::size_t degree = 0;
      for (int v : candidates) degree += adj[u][v];
      if (degree > best) best = degree, pivot = u;
    }
  }
  const std::vector<int> branch = [&] {
    std::vector<int> b;
    for (int v : candidates)
      if (!adj[pivot][v]) b.push_back(v);
    return b;
  }();
  for (int v : branch) {
    std::vector<int> next_candidates, next_excluded;
    for (int u : candidates)
      if (adj[v][u]) next_candidates.push_back(u);
    for (int u : excluded)
      if (adj[v][u]) next_excluded.push_back(u);
    current.push_back(v);
    maximal_cliques(adj, current, std::move(next_candidates), std::move(next_excluded), out);
    current.pop_back();
    candidates.erase(std::find(candidates.begin(), candidates.end(), v));
    excluded.push_back(v);
  }
}

SimplicialComplex tubing_complex(const Graph& g, const std::vector<Tube>& all) {
  const int count = static_cast<int>(all.size());
  std::vector<std::vector<bool>> adj(count, std::vector<bool>(count, false));
  for (int a = 0; a < count; ++a)
    for (int b = a + 1; b < count; ++b)
      adj[a][b] = adj[b][a] = are_compatible(g, all[a], all[b]);

  std::vector<Face> cliques;
  std::vector<int> current;
  std::vector<int> candidates(count);
  for (int i = 0; i < count; ++i) candidates[i] = i;
  maximal_cliques(adj, current, std::move(candidates), {}, cliques);

  const int n = g.vertex_count();
  for (const auto& clique : cliques)
    if (static_cast<int>(clique.size()) != n - 1)
      throw InconsistencyError("maximal tubing of size " + std::to_string(clique.size()) +
                               ", expected " + std::to_string(n - 1));
  std::vector<std::string> labels;
  for (const auto& t : all) labels.push_back(subset_label(t.members));
  return SimplicialComplex(count, std::move(cliques), std::move(labels));
}

SmallCover cover_over(SimplicialComplex complex, const std::vector<std::uint64_t>& subsets,
                      int n) {
  std::vector<std::uint64_t> columns;
  columns.reserve(subsets.size());
  for (auto q : subsets) columns.push_back(hessenberg_column(q, n));
  return validate(std::move(complex), CharMatrix(n - 1, std::move(columns)));
}

}  // namespace

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n), adjacency_(n, 0) {
  if (n < 1 || n > kMaxGraphVertices)
    throw InputError("graph needs 1 <= n <= " + std::to_string(kMaxGraphVertices));
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edges) {
    if (a < 1 || a > n || b < 1 || b > n)
      throw InputError("edge endpoint outside 1.." + std::to_string(n));
    if (a == b) throw InputError("graph has a loop at vertex " + std::to_string(a));
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second)
      throw InputError("repeated edge " + std::to_string(a) + "-" + std::to_string(b));
    adjacency_[a - 1] |= std::uint64_t{1} << (b - 1);
    adjacency_[b - 1] |= std::uint64_t{1} << (a - 1);
  }
  edges_.assign(seen.begin(), seen.end());
}

Graph Graph::complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) e.emplace_back(a, b);
  return Graph(n, std::move(e));
}

Graph Graph::path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int a = 1; a < n; ++a) e.emplace_back(a, a + 1);
  return Graph(n, std::move(e));
}

Graph Graph::cycle(int n) {
  if (n < 3) throw InputError("cycle graph needs n >= 3");
  auto e = path(n).edges();
  e.emplace_back(1, n);
  return Graph(n, std::move(e));
}

Graph Graph::star(int n) {
  std::vector<std::pair<int, int>> e;
  for (int b = 2; b <= n; ++b) e.emplace_back(1, b);
  return Graph(n, std::move(e));
}

bool Graph::induces_connected(std::uint64_t subset) const {
  if (subset == 0) return false;
  std::uint64_t reached = subset & (~subset + 1);
  for (std::uint64_t frontier = reached; frontier != 0;) {
    const int v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    const std::uint64_t fresh = adjacency_[v] & subset & ~reached;
    reached |= fresh;
    frontier |= fresh;
  }
  return reached == subset;
}

bool Graph::is_connected() const {
  return induces_connected((std::uint64_t{1} << n_) - 1);
}

std::vector<Tube> tubes(const Graph& g) {
  if (!g.is_connected()) throw InputError("graph associahedra need a connected graph");
  const std::uint64_t full = (std::uint64_t{1} << g.vertex_count()) - 1;
  std::vector<std::uint64_t> masks;
  for (std::uint64_t s = 1; s < full; ++s)
    if (g.induces_connected(s)) masks.push_back(s);
  std::sort(masks.begin(), masks.end(), subset_order_less);
  std::vector<Tube> out;
  out.reserve(masks.size());
  for (auto m : masks) out.push_back({m});
  return out;
}

bool are_compatible(const Graph& g, const Tube& a, const Tube& b) {
  const auto x = a.members, y = b.members;
  if ((x & y) == x || (x & y) == y) return true;
  if ((x & y) != 0) return false;
  return !g.induces_connected(x | y);
}

SimplicialComplex nested_set_complex(const Graph& g) {
  return tubing_complex(g, tubes(g));
}

std::uint64_t hessenberg_column(std::uint64_t subset, int n) {
  const std::uint64_t low = (std::uint64_t{1} << (n - 1)) - 1;
  std::uint64_t column = subset & low;
  if (subset >> (n - 1) & 1u) column ^= low;
  return column;
}

SmallCover permutahedron_cover(int n) {
  SimplicialComplex complex = barycentric_subdivision_of_simplex_boundary(n);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> subsets;
  for (std::uint64_t q = 1; q < full; ++q) subsets.push_back(q);
  std::sort(subsets.begin(), subsets.end(), subset_order_less);
  return cover_over(std::move(complex), subsets, n);
}

SmallCover graph_associahedron_cover(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw InputError("graph associahedron cover needs n >= 2");
  const auto all = tubes(g);
  std::vector<std::uint64_t> subsets;
  for (const auto& t : all) subsets.push_back(t.members);
  try {
    return cover_over(tubing_complex(g, all), subsets, n);
  } catch (const ValidationError& e) {
    if (e.face().empty()) throw;
    std::string tubing = "{";
    for (std::size_t i = 0; i < e.face().size(); ++i) {
      if (i) tubing += ", ";
      tubing += subset_label(all[e.face()[i]].members);
    }
    throw ValidationError("column assignment fails at maximal tubing " + tubing + "}",
                          e.face());
  }
}

SecantTable secant_numbers(int k) {
  if (k < 0) throw InputError("secant table size must be nonnegative");
  // sec(x) = Σ c_i x^(2i) with c_i = A_2i/(2i)!; cos(x) = Σ (-1)^i x^(2i)/(2i)!.
  std::vector<mpq_class> cos_coeff(k + 1), sec_coeff(k + 1);
  mpz_class factorial = 1;
  for (int i = 0; i <= k; ++i) {
    if (i > 0) factorial *= (2 * i - 1) * (2 * i);
    cos_coeff[i] = mpq_class(mpz_class(i % 2 == 0 ? 1 : -1), factorial);
    cos_coeff[i].canonicalize();
  }
  sec_coeff[0] = 1;
  for (int i = 1; i <= k; ++i) {
    mpq_class acc = 0;
    for (int j = 1; j <= i; ++j) acc += cos_coeff[j] * sec_coeff[i - j];
    sec_coeff[i] = -acc;
  }

  SecantTable table;
  factorial = 1;
  for (int i = 0; i <= k; ++i) {
    if (i > 0) factorial *= (2 * i - 1) * (2 * i);
    mpq_class scaled = sec_coeff[i] * factorial;
    scaled.canonicalize();
    if (scaled.get_den() != 1) throw InconsistencyError("secant coefficient is not integral");
    table.values.push_back(scaled.get_num());
  }

  for (int i = 1; i <= k; ++i) {
    mpz_class sum = 0;
    for (int j = 0; j <= i; ++j) {
      mpz_class term = binomial(2 * i, 2 * j) * table.values[i - j];
      sum += (j % 2 == 0) ? term : mpz_class(-term);
    }
    if (sum != 0)
      throw InconsistencyError("secant numbers fail sec*cos = 1 at order " + std::to_string(2 * i));
  }
  return table;
}

mpz_class hessenberg_betti_closed_form(int n, int i) {
  if (n < 2 || i < 0) throw InputError("closed form needs n >= 2 and i >= 0");
  if (2 * i > n) return 0;
  return secant_numbers(i).at(i) * binomial(n, 2 * i);
}

SimplicialComplex k_n_r(int n, int r) {
  if (n < 2 || r < 1 || r > n - 1) throw InputError("K_{n,r} needs 1 <= r <= n-1");
  const SmallCover cover = permutahedron_cover(n);
  return support_subcomplex(cover, (Subset{1} << r) - 1);
}

}  // namespace realtoric
