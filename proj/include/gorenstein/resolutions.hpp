#pragma once

// Minimal free resolution of the residue field and Poincaré series.

#include <cstdlib>
#include <string>
#include <vector>

#include "gorenstein/artin_algebra.hpp"
#include "gorenstein/power_series.hpp"

namespace gorenstein {

inline std::size_t default_rank_cap() {
  if (const char* env = std::getenv("GORENSTEIN_MAX_RANK")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return 20000;
}

struct ResolutionLog {
  std::vector<std::size_t> betti;        // beta_0..beta_N
  std::vector<std::size_t> syzygy_dims;  // k-dimension of the i-th syzygy module
  bool minimal = true;                   // every differential has entries in m
  PowerSeries poincare() const { return PowerSeries::from_counts(betti); }
};

/// Betti numbers beta_i = dim Tor_i(k, k) for i <= N, from an explicit
/// minimal resolution F_i = A^{beta_i}. Elements of F_i are coordinate
/// vectors of length beta_i * length(A), block j holding the j-th component.
template <FieldScalar K>
ResolutionLog betti_numbers(const ArtinAlgebra<K>& A, int N, std::size_t cap = default_rank_cap()) {
  ResolutionLog log;
  const std::size_t L = A.length();
  log.betti.push_back(1);
  if (N <= 0) return log;
  if (A.nvars() == 0) {
    log.betti.resize(static_cast<std::size_t>(N) + 1, 0);
    return log;
  }

  // generators of the current syzygy module, as elements of F_{i-1}
  std::vector<SparseVec<K>> gens;
  for (std::size_t v = 0; v < A.nvars(); ++v) gens.push_back(to_sparse(A.variable(v)));
  log.syzygy_dims.push_back(L - 1);

  auto times_basis = [&](std::size_t l, const SparseVec<K>& x) {
    // b_l * x, block by block
    SparseVec<K> out;
    for (const auto& [g, c] : x) {
      const std::size_t blk = static_cast<std::size_t>(g) / L, idx = static_cast<std::size_t>(g) % L;
      const auto off = static_cast<int>(blk * L);
      SparseVec<K> prod;
      for (const auto& [m, t] : A.product_of_basis(l, idx)) prod.emplace_back(m + off, t);
      out = axpy(out, c, prod);
    }
    return out;
  };
  auto times_var = [&](std::size_t v, const SparseVec<K>& x) {
    SparseVec<K> out;
    for (const auto& [g, c] : x) {
      const std::size_t blk = static_cast<std::size_t>(g) / L, idx = static_cast<std::size_t>(g) % L;
      const auto off = static_cast<int>(blk * L);
      SparseVec<K> prod;
      for (const auto& [m, t] : A.variable_times_basis(v, idx)) prod.emplace_back(m + off, t);
      out = axpy(out, c, prod);
    }
    return out;
  };

  std::size_t prev_rank = 1;
  for (int i = 1; i <= N; ++i) {
    const std::size_t r = gens.size();
    log.betti.push_back(r);
    for (const auto& g : gens)
      for (const auto& [idx, c] : g)
        if (static_cast<std::size_t>(idx) % L == 0) log.minimal = false;
    if (i == N) break;
    if (r > cap)
      throw Error(ErrorCode::ResourceLimit, "free module rank " + std::to_string(r) + " exceeds cap " + std::to_string(cap));

    // d_i : A^r -> A^{prev_rank}, e_j -> gens[j]; its kernel is the next syzygy module
    std::vector<SparseVec<K>> images;
    images.reserve(r * L);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t l = 0; l < L; ++l) images.push_back(times_basis(l, gens[j]));
    auto Z = kernel(images, prev_rank * L, A.field());
    log.syzygy_dims.push_back(Z.size());

    Subspace<K> chosen(r * L);
    for (const auto& z : Z)
      for (std::size_t v = 0; v < A.nvars(); ++v) chosen.insert(times_var(v, z));
    std::vector<SparseVec<K>> next;
    for (const auto& z : Z)
      if (chosen.insert(z)) next.push_back(z);
    gens = std::move(next);
    prev_rank = r;
  }
  return log;
}

/// Poincaré series of k over A up to t^N.
template <FieldScalar K>
PowerSeries poincare_series(const ArtinAlgebra<K>& A, int N, std::size_t cap = default_rank_cap()) {
  return betti_numbers(A, N, cap).poincare();
}

/// Outcome of comparing two sides of a series identity up to some order.
struct SeriesCheck {
  std::string name;
  std::size_t order = 0;
  PowerSeries lhs, rhs;
  bool holds() const { return PowerSeries::residual(lhs, rhs, order) == 0; }
  mpz_class residual() const { return PowerSeries::residual(lhs, rhs, order); }
};

/// 1/P_Q = 1/P_R + 1/P_S - 1 - phi t^2 for a connected sum Q = R # S.
inline SeriesCheck connected_sum_series_check(const PowerSeries& PQ, const PowerSeries& PR, const PowerSeries& PS, int phi) {
  const std::size_t N = std::min({PQ.order(), PR.order(), PS.order()});
  SeriesCheck c{"connected sum", N, {}, {}};
  c.lhs = PQ.truncated(N).inverse();
  c.rhs = PR.truncated(N).inverse() + PS.truncated(N).inverse() - PowerSeries::polynomial({1, 0, phi}, N);
  return c;
}

/// 1/P_T = 1/P_{T/soc T} + t^2 for Gorenstein T with edim >= 2.
inline SeriesCheck socle_quotient_series_check(const PowerSeries& PT, const PowerSeries& PTbar) {
  const std::size_t N = std::min(PT.order(), PTbar.order());
  SeriesCheck c{"socle quotient", N, {}, {}};
  c.lhs = PT.truncated(N).inverse();
  c.rhs = PTbar.truncated(N).inverse() + PowerSeries::polynomial({0, 0, 1}, N);
  return c;
}

/// 1/P_Q = 1/P_S - t when Q = S # k[y]/(y^{s+1}) with s >= 2.
inline SeriesCheck hypersurface_summand_series_check(const PowerSeries& PQ, const PowerSeries& PS) {
  const std::size_t N = std::min(PQ.order(), PS.order());
  SeriesCheck c{"hypersurface summand", N, {}, {}};
  c.lhs = PQ.truncated(N).inverse();
  c.rhs = PS.truncated(N).inverse() - PowerSeries::polynomial({0, 1}, N);
  return c;
}

/// 1/P_Q = 1 - e t + t^2 for stretched Gorenstein Q of edim e >= 2 and
/// Loewy length >= 3.
inline SeriesCheck stretched_series_check(const PowerSeries& PQ, long e) {
  const std::size_t N = PQ.order();
  SeriesCheck c{"stretched", N, {}, {}};
  c.lhs = PQ.inverse();
  c.rhs = PowerSeries::polynomial({1, -e, 1}, N);
  return c;
}

/// Gorenstein of Loewy length 2 and edim n: P = 1/(1-t) for n = 1 and
/// 1/(1 - n t + t^2) for n >= 2.
inline SeriesCheck loewy_two_series_check(const PowerSeries& PQ, long n) {
  const std::size_t N = PQ.order();
  SeriesCheck c{"loewy length two", N, {}, {}};
  c.lhs = PQ.inverse();
  c.rhs = n == 1 ? PowerSeries::polynomial({1, -1}, N) : PowerSeries::polynomial({1, -n, 1}, N);
  return c;
}

}  // namespace gorenstein
