#include "realtoric/small_cover.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <mutex>
#include <thread>

#include "realtoric/error.hpp"
#include "realtoric/linalg.hpp"

namespace realtoric {
namespace {

std::string face_text(const SimplicialComplex& complex, const Face& face) {
  std::string out = "{";
  for (std::size_t i = 0; i < face.size(); ++i) {
    if (i) out += ", ";
    out += complex.labels()[face[i]];
  }
  return out + "}";
}

bool minor_nonsingular(const CharMatrix& chi, const Face& face) {
  if (static_cast<int>(face.size()) != chi.rows()) return false;
  BitMatrix minor(face.size(), face.size());
  for (std::size_t c = 0; c < face.size(); ++c)
    for (int r = 0; r < chi.rows(); ++r) minor.set(r, c, chi.entry(r, face[c]));
  return is_nonsingular_gf2(minor);
}

}  // namespace

CharMatrix::CharMatrix(int n, std::vector<std::uint64_t> columns)
    : rows_(n), columns_(std::move(columns)) {
  if (n < 1 || n > kMaxRows)
    throw InputError("characteristic matrix needs 1 <= n <= " + std::to_string(kMaxRows));
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  for (auto col : columns_)
    if (col & ~mask) throw InputError("column has entries beyond row n");
}

CharMatrix CharMatrix::from_integer_columns(int n,
                                            const std::vector<std::vector<std::int64_t>>& columns) {
  std::vector<std::uint64_t> packed;
  packed.reserve(columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (static_cast<int>(columns[j].size()) != n)
      throw InputError("column " + std::to_string(j) + " has length " +
                       std::to_string(columns[j].size()) + ", expected " + std::to_string(n));
    std::uint64_t bits = 0;
    for (int r = 0; r < n; ++r)
      if (columns[j][r] % 2 != 0) bits |= std::uint64_t{1} << r;
    packed.push_back(bits);
  }
  return CharMatrix(n, std::move(packed));
}

std::vector<FaceCheck> check_minors(const SimplicialComplex& complex, const CharMatrix& chi) {
  std::vector<FaceCheck> out;
  out.reserve(complex.maximal_faces().size());
  for (const auto& face : complex.maximal_faces())
    out.push_back({face, minor_nonsingular(chi, face)});
  return out;
}

SmallCover validate(SimplicialComplex complex, CharMatrix chi) {
  const int n = chi.rows();
  if (chi.cols() != complex.vertex_count())
    throw ValidationError("characteristic matrix has " + std::to_string(chi.cols()) +
                          " columns but the complex has " +
                          std::to_string(complex.vertex_count()) + " vertices");
  if (chi.cols() < n)
    throw ValidationError("need at least n = " + std::to_string(n) + " facets");
  if (!is_pure(complex, n - 1))
    throw ValidationError("complex is not pure of dimension " + std::to_string(n - 1));
  if (!is_pseudomanifold(complex, n - 1))
    throw ValidationError("complex is not a pseudomanifold of dimension " +
                          std::to_string(n - 1));
  for (int j = 0; j < chi.cols(); ++j)
    if (chi.columns()[j] == 0)
      throw ValidationError("column for vertex " + complex.labels()[j] + " is zero", {j});
  for (const auto& check : check_minors(complex, chi))
    if (!check.nonsingular)
      throw ValidationError("singular minor at maximal face " + face_text(complex, check.face),
                            check.face);

  std::vector<std::string> warnings;
  if (!is_connected(complex))
    warnings.emplace_back("complex is disconnected; it cannot be dual to a polytope boundary");
  return SmallCover(std::move(complex), std::move(chi), std::move(warnings));
}

std::vector<bool> chi_row_sum(const SmallCover& cover, Subset rows) {
  std::vector<bool> out;
  out.reserve(cover.facet_count());
  for (auto col : cover.chi().columns()) out.push_back(std::popcount(col & rows) % 2 == 1);
  return out;
}

std::vector<int> support(const SmallCover& cover, Subset rows) {
  std::vector<int> out;
  const auto& cols = cover.chi().columns();
  for (std::size_t j = 0; j < cols.size(); ++j)
    if (std::popcount(cols[j] & rows) % 2 == 1) out.push_back(static_cast<int>(j));
  return out;
}

SimplicialComplex support_subcomplex(const SmallCover& cover, Subset rows) {
  const auto vertices = support(cover, rows);
  return induced_subcomplex(cover.complex(), vertices);
}

BettiVector betti_numbers(const SmallCover& cover, unsigned jobs) {
  const int n = cover.dimension();
  const Subset count = Subset{1} << n;
  BettiVector result;
  result.breakdown.resize(count);

  std::atomic<Subset> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (Subset s = next++; s < count; s = next++) {
      try {
        auto& entry = result.breakdown[s];
        entry.rows = s;
        entry.support = support(cover, s);
        entry.reduced = reduced_betti(induced_subcomplex(cover.complex(), entry.support));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };

  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<Subset>(jobs, count));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  result.betti.assign(n + 1, 0);
  for (const auto& entry : result.breakdown) {
    for (const auto& [degree, rank] : entry.reduced.ranks) {
      const int q = degree + 1;
      if (q < 0 || q > n)
        throw InconsistencyError("reduced homology of K_{chi,S} outside degrees -1..n-1");
      result.betti[q] += rank;
    }
  }
  return result;
}

Orientability is_orientable(const SmallCover& cover) {
  const Subset count = Subset{1} << cover.dimension();
  for (Subset s = 1; s < count; ++s) {
    if (static_cast<int>(support(cover, s).size()) == cover.facet_count())
      return {true, s};
  }
  return {};
}

HVector mod2_betti(const SmallCover& cover) {
  return h_vector(cover.complex(), cover.dimension());
}

std::int64_t euler_characteristic(const SmallCover& cover, const BettiVector& betti) {
  std::int64_t rational = 0;
  for (std::size_t q = 0; q < betti.betti.size(); ++q)
    rational += (q % 2 == 0) ? betti.betti[q] : -betti.betti[q];
  const HVector h = mod2_betti(cover);
  std::int64_t mod2 = 0;
  for (std::size_t i = 0; i < h.entries.size(); ++i)
    mod2 += (i % 2 == 0) ? h.entries[i] : -h.entries[i];
  if (rational != mod2)
    throw InconsistencyError("Euler characteristic from rational Betti numbers (" +
                             std::to_string(rational) + ") differs from the h-vector's (" +
                             std::to_string(mod2) + ")");
  return rational;
}

std::int64_t euler_characteristic(const SmallCover& cover) {
  return euler_characteristic(cover, betti_numbers(cover));
}

mpz_class moment_angle_euler(const SimplicialComplex& complex, int m) {
  if (m < complex.vertex_count())
    throw InputError("moment-angle complex needs m >= vertex count");
  FVector f = f_vector(complex);
  if (f.counts.empty()) f.counts.push_back(1);  // the empty selection
  mpz_class total = 0;
  for (std::size_t k = 0; k < f.counts.size(); ++k) {
    mpz_class cells = mpz_class(static_cast<long>(f.counts[k])) << static_cast<mp_bitcnt_t>(m - static_cast<int>(k));
    total += (k % 2 == 0) ? cells : mpz_class(-cells);
  }
  return total;
}

CoveringCheck covering_identity(const SmallCover& cover, const BettiVector& betti) {
  CoveringCheck check;
  const int m = cover.facet_count();
  check.moment_angle = moment_angle_euler(cover.complex(), m);
  check.sheets = mpz_class(1) << static_cast<mp_bitcnt_t>(m - cover.dimension());
  check.manifold = euler_characteristic(cover, betti);
  check.match = check.moment_angle == check.sheets * static_cast<long>(check.manifold);
  return check;
}

std::vector<int> subset_members(Subset rows) {
  std::vector<int> out;
  while (rows != 0) {
    out.push_back(std::countr_zero(rows) + 1);
    rows &= rows - 1;
  }
  return out;
}

}  // namespace realtoric
