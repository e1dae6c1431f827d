// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Every comparison is exact; the two runtime limits are
// 1 s (square covers) and 120 s (permutahedron n = 6).

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "../helpers.hpp"
#include "../oracles.hpp"
#include "realtoric/families.hpp"
#include "realtoric/homology.hpp"
#include "realtoric/small_cover.hpp"

using namespace realtoric;

namespace {

constexpr double kSquareSeconds = 1.0;
constexpr double kPermutahedron6Seconds = 120.0;

struct Criterion {
  int id;
  std::string title;
  std::function<bool(std::ostringstream&)> body;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

std::string cli_output(const std::string& args, int& code) {
  const std::string command = std::string(REALTORIC_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    code = -1;
    return {};
  }
  std::string out;
  std::array<char, 4096> buffer{};
  while (std::size_t n = fread(buffer.data(), 1, buffer.size(), pipe)) out.append(buffer.data(), n);
  const int status = pclose(pipe);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

const std::vector<testing::CatalogEntry>& catalog() {
  static const auto entries = testing::catalog(6);
  return entries;
}

const std::vector<BettiVector>& catalog_betti() {
  static const auto values = [] {
    std::vector<BettiVector> out;
    for (const auto& e : catalog()) out.push_back(betti_numbers(e.cover, 0));
    return out;
  }();
  return values;
}

bool square_covers(std::ostringstream& log) {
  const auto start = std::chrono::steady_clock::now();
  const auto torus = testing::torus_square();
  const auto klein = testing::klein_square();
  const auto tb = betti_numbers(torus).betti;
  const auto kb = betti_numbers(klein).betti;
  const auto to = is_orientable(torus);
  const auto ko = is_orientable(klein);
  const double elapsed = seconds_since(start);
  log << "torus " << join(tb) << " witness mask " << to.witness.value_or(0) << ", klein "
      << join(kb) << ", " << elapsed << " s";
  return tb == std::vector<std::int64_t>{1, 2, 1} && to.orientable && to.witness == Subset{0b11} &&
         kb == std::vector<std::int64_t>{1, 1, 0} && !ko.orientable && elapsed < kSquareSeconds;
}

bool hessenberg(std::ostringstream& log) {
  bool ok = true;
  for (int n = 2; n <= 6; ++n) {
    const auto start = std::chrono::steady_clock::now();
    const auto betti = betti_numbers(permutahedron_cover(n), 0).betti;
    const double elapsed = seconds_since(start);
    std::vector<std::int64_t> expected;
    for (int i = 0; i < n; ++i) expected.push_back(hessenberg_betti_closed_form(n, i).get_si());
    const bool match = betti == expected;
    ok = ok && match;
    if (n == 6) ok = ok && elapsed < kPermutahedron6Seconds;
    log << "n=" << n << " " << join(betti) << (match ? "" : " != " + join(expected)) << " ("
        << elapsed << " s) ";
  }
  return ok;
}

bool wedge_of_spheres(std::ostringstream& log) {
  const auto secant = secant_numbers(3);
  std::size_t checked = 0;
  for (int n = 2; n <= 5; ++n) {
    const auto cover = permutahedron_cover(n);
    for (int r = 1; r <= n - 1; ++r) {
      const int half = (r + 1) / 2;
      const auto canonical = reduced_betti(k_n_r(n, r));
      if (canonical.ranks != std::map<int, std::int64_t>{{half - 1, secant.at(half).get_si()}}) {
        log << "K_{" << n << "," << r << "} has wrong homology";
        return false;
      }
      for (Subset s = 1; s < (Subset{1} << (n - 1)); ++s) {
        if (std::popcount(s) != r) continue;
        ++checked;
        if (reduced_betti(support_subcomplex(cover, s)) != canonical) {
          log << "subset mask " << s << " differs from K_{" << n << "," << r << "}";
          return false;
        }
      }
    }
  }
  log << checked << " subset supports checked";
  return true;
}

bool secant_identity(std::ostringstream& log) {
  const auto table = secant_numbers(20);
  for (int i = 1; i <= 20; ++i) {
    mpz_class sum = 0;
    for (int j = 0; j <= i; ++j) {
      mpz_class c;
      mpz_bin_uiui(c.get_mpz_t(), 2 * i, 2 * j);
      mpz_class term = c * table.at(i - j);
      sum += (j % 2 == 0) ? term : mpz_class(-term);
    }
    if (sum != 0) return false;
  }
  const auto zigzag = oracle::zigzag(8);
  const bool values = table.at(1) == 1 && table.at(2) == 5 && table.at(3) == 61 &&
                      table.at(4) == 1385;
  const bool oracle_agrees = oracle::sec_times_cos_is_one(table.values) &&
                             zigzag[2] == table.at(1) && zigzag[4] == table.at(2) &&
                             zigzag[6] == table.at(3) && zigzag[8] == table.at(4);
  log << "A_2..A_8 = " << table.at(1).get_str() << "," << table.at(2).get_str() << ","
      << table.at(3).get_str() << "," << table.at(4).get_str();
  return values && oracle_agrees;
}

bool davis_januszkiewicz(std::ostringstream& log) {
  for (std::size_t i = 0; i < catalog().size(); ++i) {
    const auto& b = catalog_betti()[i].betti;
    const auto h = mod2_betti(catalog()[i].cover).entries;
    std::int64_t chi_b = 0, chi_h = 0, sum_b = 0, sum_h = 0;
    for (std::size_t q = 0; q < b.size(); ++q) chi_b += (q % 2 ? -1 : 1) * b[q], sum_b += b[q];
    for (std::size_t q = 0; q < h.size(); ++q) chi_h += (q % 2 ? -1 : 1) * h[q], sum_h += h[q];
    if (chi_b != chi_h || sum_b > sum_h) {
      log << catalog()[i].name << ": b " << join(b) << " h " << join(h);
      return false;
    }
  }
  log << catalog().size() << " covers";
  return true;
}

bool covering(std::ostringstream& log) {
  for (std::size_t i = 0; i < catalog().size(); ++i) {
    const auto check = covering_identity(catalog()[i].cover, catalog_betti()[i]);
    if (!check.match) {
      log << catalog()[i].name << ": " << check.moment_angle.get_str() << " vs "
          << check.sheets.get_str() << " * " << check.manifold;
      return false;
    }
  }
  log << catalog().size() << " covers";
  return true;
}

bool orientability(std::ostringstream& log) {
  int orientable = 0;
  for (std::size_t i = 0; i < catalog().size(); ++i) {
    const auto o = is_orientable(catalog()[i].cover);
    const auto top = catalog_betti()[i].betti.back();
    if (o.orientable != (top == 1) || o.orientable != o.witness.has_value()) {
      log << catalog()[i].name << " disagrees";
      return false;
    }
    if (o.orientable) {
      ++orientable;
      log << catalog()[i].name << " witness " << subset_label(*o.witness) << "; ";
    }
  }
  log << orientable << " orientable of " << catalog().size();
  return true;
}

bool graph_associahedra(std::ostringstream& log) {
  for (int n = 2; n <= 5; ++n) {
    if (betti_numbers(graph_associahedron_cover(Graph::complete(n))).betti !=
        betti_numbers(permutahedron_cover(n)).betti) {
      log << "K_" << n << " differs from the permutahedron";
      return false;
    }
  }
  const auto path = betti_numbers(graph_associahedron_cover(Graph::path(3))).betti;
  log << "path-3 " << join(path) << "; all catalog covers passed validate";
  return path == std::vector<std::int64_t>{1, 2, 0};
}

bool homology_oracle(std::ostringstream& log) {
  std::mt19937 rng(20240917);
  int complexes = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 1 + trial % 7;
    const auto gens = oracle::random_generators(rng, m, 1 + trial % 6);
    const auto k = testing::from_generators(m, gens);
    if (!boundary_squares_to_zero(build_chain_complex(k))) return false;
    if (reduced_betti(k).ranks != oracle::reduced_betti(m, gens)) {
      log << "mismatch on trial " << trial;
      return false;
    }
    ++complexes;
  }
  int chains = 0;
  for (const auto& entry : catalog()) {
    for (Subset s = 0; s < (Subset{1} << entry.cover.dimension()); ++s, ++chains)
      if (!boundary_squares_to_zero(build_chain_complex(support_subcomplex(entry.cover, s))))
        return false;
  }
  log << complexes << " random complexes, d∘d = 0 on those and " << chains << " catalog supports";
  return complexes >= 200;
}

bool determinism(std::ostringstream& log) {
  const std::vector<std::string> inputs = {
      "betti " + std::string(REALTORIC_DATA) + "/torus-square.json",
      "betti " + std::string(REALTORIC_DATA) + "/klein-square.json",
      "permutahedron 2", "permutahedron 3", "permutahedron 4", "permutahedron 5",
      "permutahedron 6"};
  for (const auto& args : inputs) {
    int c1 = 0, c8 = 0;
    const auto one = cli_output(args + " --json --breakdown --jobs 1", c1);
    const auto eight = cli_output(args + " --json --breakdown --jobs 8", c8);
    if (c1 != 0 || c8 != 0 || one.empty() || one != eight) {
      log << "'" << args << "' differs (exit " << c1 << "/" << c8 << ")";
      return false;
    }
  }
  log << inputs.size() << " inputs byte-identical";
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "square small covers", square_covers},
      {2, "Hessenberg Betti numbers = A_2i C(n,2i), n = 2..6", hessenberg},
      {3, "K_{n,r} is a wedge of A_2ceil(r/2) spheres, depends only on r", wedge_of_spheres},
      {4, "secant identity and A_2..A_8", secant_identity},
      {5, "Euler characteristic and total Betti bound against the h-vector", davis_januszkiewicz},
      {6, "covering identity chi(Z_K) = 2^(m-n) chi(N)", covering},
      {7, "orientable <=> top Betti number 1", orientability},
      {8, "graph-associahedron consistency", graph_associahedra},
      {9, "homology vs rational elimination oracle, d∘d = 0", homology_oracle},
      {10, "--jobs 1 and --jobs 8 JSON byte-identical", determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    std::ostringstream log;
    bool ok = false;
    try {
      ok = c.body(log);
    } catch (const std::exception& e) {
      log << "exception: " << e.what();
    }
    if (!ok) ++failures;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "AC" << c.id << " " << c.title << " -- "
              << log.str() << std::endl;
  }
  std::cout << (failures == 0 ? "all acceptance criteria passed" : "acceptance FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}
