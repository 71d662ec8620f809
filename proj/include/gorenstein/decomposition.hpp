#pragma once

// Deciding whether a Gorenstein local ring is a connected sum, producing
// either a certificate of decomposition, a certificate of
// indecomposability, or an honest "unknown".

#include <optional>
#include <string>
#include <vector>

#include "gorenstein/assoc_graded.hpp"
#include "gorenstein/connected_sums.hpp"

namespace gorenstein {

enum class IndecomposabilityKind { CompleteIntersectionEdim3, HilbertH2Bound, TrivialSmall };

inline const char* to_string(IndecomposabilityKind k) {
  switch (k) {
    case IndecomposabilityKind::CompleteIntersectionEdim3: return "CompleteIntersectionEdim3";
    case IndecomposabilityKind::HilbertH2Bound: return "HilbertH2Bound";
    case IndecomposabilityKind::TrivialSmall: return "TrivialSmall";
  }
  return "?";
}

struct IndecomposabilityCertificate {
  IndecomposabilityKind kind;
  std::string reason;
};

/// Sufficient conditions for Q to admit no nontrivial connected sum
/// decomposition.
template <FieldScalar K>
std::optional<IndecomposabilityCertificate> indecomposability_check(const ArtinAlgebra<K>& Q) {
  const auto d = static_cast<long>(Q.edim());
  if (d <= 1) return IndecomposabilityCertificate{IndecomposabilityKind::TrivialSmall, "embedding dimension " + std::to_string(d)};
  auto inv = Q.invariants();
  if (d >= 3 && static_cast<long>(inv.mu_ideal) == d)
    return IndecomposabilityCertificate{IndecomposabilityKind::CompleteIntersectionEdim3,
                                        "complete intersection of embedding dimension " + std::to_string(d)};
  // any decomposition forces H(2) <= C(d,2) + 1
  const long h2 = inv.hilbert.size() > 2 ? static_cast<long>(inv.hilbert[2]) : 0;
  if (h2 >= binomial(d, 2) + 2)
    return IndecomposabilityCertificate{IndecomposabilityKind::HilbertH2Bound,
                                        "H(2) = " + std::to_string(h2) + " >= C(" + std::to_string(d) + ",2) + 2"};
  return std::nullopt;
}

enum class DecompositionKind { Decomposed, Indecomposable, Unknown };

inline const char* to_string(DecompositionKind k) {
  switch (k) {
    case DecompositionKind::Decomposed: return "decomposed";
    case DecompositionKind::Indecomposable: return "indecomposable";
    case DecompositionKind::Unknown: return "unknown";
  }
  return "?";
}

template <FieldScalar K>
struct DecompositionResult {
  DecompositionKind kind = DecompositionKind::Unknown;
  std::optional<DecompositionCertificate<K>> certificate;
  std::optional<IndecomposabilityCertificate> indecomposable;
  std::vector<std::string> diagnostics;
};

namespace detail {

/// Elements of `pool` (in order) completing `base` to a basis modulo m^2,
/// at most `want` of them.
template <FieldScalar K>
std::vector<DenseVec<K>> complete_mod_square(const ArtinAlgebra<K>& Q, const std::vector<DenseVec<K>>& base,
                                             const std::vector<DenseVec<K>>& pool, std::size_t want) {
  Subspace<K> s = Q.power(2);
  for (const auto& b : base) s.insert(b);
  std::vector<DenseVec<K>> out;
  for (const auto& v : pool) {
    if (out.size() == want) break;
    if (s.insert(v)) out.push_back(v);
  }
  return out;
}

/// Variables first (standard generators are preferred), then the reduced
/// echelon basis of the subspace.
template <FieldScalar K>
std::vector<DenseVec<K>> candidate_pool(const ArtinAlgebra<K>& Q, const Subspace<K>& space) {
  std::vector<DenseVec<K>> pool;
  for (std::size_t v = 0; v < Q.nvars(); ++v)
    if (space.contains(Q.variable(v))) pool.push_back(Q.variable(v));
  for (const auto& r : space.reduced_basis()) pool.push_back(to_dense(r, Q.length()));
  return pool;
}

/// Loewy length one complement: J from (0 : m^2), I = (0 : J).
template <FieldScalar K>
std::optional<DecompositionCertificate<K>> split_socle_degree_one(const ArtinAlgebra<K>& Q, std::vector<std::string>& diag) {
  auto T = Q.annihilator(Q.power_ideal(2));
  auto zs = complete_mod_square(Q, {}, candidate_pool(Q, T.span), Q.edim());
  if (zs.empty()) {
    diag.push_back("(0 : m^2) is contained in m^2");
    return std::nullopt;
  }
  auto I = Q.annihilator(Q.ideal_generated(zs));
  const std::size_t m = Q.edim() - zs.size();
  auto ys = complete_mod_square(Q, zs, candidate_pool(Q, I.span), m);
  if (ys.size() != m || m == 0) {
    diag.push_back("(0 : J) + J does not generate the maximal ideal");
    return std::nullopt;
  }
  return certificate_from_generators(Q, ys, zs, "socle-degree-one-complement", diag);
}

/// Replaces y by y + w, w in m^2, so that y z_j lies in m^e for every j.
/// The condition is linear in w modulo m^e.
template <FieldScalar K>
bool in_power_after_adjusting(const ArtinAlgebra<K>& Q, DenseVec<K>& y, const std::vector<DenseVec<K>>& zs, int e) {
  const auto& me = Q.power(e);
  const std::size_t L = Q.length();
  auto stacked = [&](const DenseVec<K>& a) {
    SparseVec<K> out;
    for (std::size_t j = 0; j < zs.size(); ++j)
      for (const auto& [i, c] : me.reduce(to_sparse(Q.multiply(a, zs[j])))) out.emplace_back(static_cast<int>(j * L) + i, c);
    return out;
  };
  auto target = stacked(y);
  if (target.empty()) return true;
  const auto m2 = Q.power(2).reduced_basis();
  std::vector<SparseVec<K>> images;
  for (const auto& b : m2) images.push_back(stacked(to_dense(b, L)));
  auto x = solve(images, scaled(target, -Q.one_scalar()), zs.size() * L, Q.field());
  if (!x) return false;
  for (const auto& [i, c] : *x) y = combine(y, c, to_dense(m2[static_cast<std::size_t>(i)], L));
  return true;
}

/// Hypersurface summand of order k >= 2: correct lifts z_j of a basis of
/// ((0 : m^{k+1}) + m^2)/m^2 against powers of y until y z_j = 0.
template <FieldScalar K>
std::optional<DecompositionCertificate<K>> split_hypersurface(const ArtinAlgebra<K>& Q, DenseVec<K> y, int k,
                                                              std::vector<std::string>& diag) {
  const int s = Q.loewy_length();
  auto T = Q.annihilator(Q.power_ideal(k + 1));
  auto zs = complete_mod_square(Q, {y}, candidate_pool(Q, T.span), Q.edim() - 1);
  if (zs.size() + 1 != Q.edim()) {
    diag.push_back("y and (0 : m^{k+1}) do not generate the maximal ideal");
    return std::nullopt;
  }
  if (!in_power_after_adjusting(Q, y, zs, k + 1)) {
    diag.push_back("no lift y of the hypersurface generator has y J inside m^{k+1}");
    return std::nullopt;
  }
  const auto ys = Q.power(y, s);
  std::size_t p = 0;
  while (p < ys.size() && ys[p].is_zero()) ++p;
  if (p == ys.size()) {
    diag.push_back("y^s = 0");
    return std::nullopt;
  }
  for (int i = 1; i <= k; ++i) {
    const auto yk = Q.power(y, k - i + 1);
    const auto corr = Q.power(y, s - k + i - 1);
    for (auto& z : zs) {
      auto w = Q.multiply(yk, z);
      K c = w[p] / ys[p];
      if (!is_zero(combine(w, -c, ys))) {
        diag.push_back("y^{k-i+1} z_j is not a multiple of y^s");
        return std::nullopt;
      }
      z = combine(z, -c, corr);
    }
  }
  return certificate_from_generators(Q, {y}, zs, "hypersurface-correction", diag);
}

/// Loewy length two: diagonalize the symmetric form m/m^2 x m/m^2 -> m^2.
template <FieldScalar K>
std::optional<DecompositionCertificate<K>> split_loewy_two(const ArtinAlgebra<K>& Q, std::vector<std::string>& diag) {
  if (Q.field().kind == FieldKind::PrimeField && Q.field().characteristic == 2) {
    diag.push_back("loewy length two in characteristic 2");
    return std::nullopt;
  }
  const std::size_t n = Q.edim();
  const auto soc = Q.power(2).reduced_basis();
  if (soc.size() != 1 || n < 2) return std::nullopt;
  const auto sidx = static_cast<std::size_t>(soc.front().front().first);
  auto form = [&](const DenseVec<K>& a, const DenseVec<K>& b) { return Q.multiply(a, b)[sidx]; };
  std::vector<DenseVec<K>> basis;
  for (std::size_t v = 0; v < n; ++v) basis.push_back(Q.variable(v));
  std::vector<DenseVec<K>> orth;
  while (!basis.empty()) {
    // pick an anisotropic vector among basis elements or pairwise sums
    std::optional<DenseVec<K>> e;
    for (std::size_t i = 0; i < basis.size() && !e; ++i)
      if (!form(basis[i], basis[i]).is_zero()) e = basis[i];
    for (std::size_t i = 0; i < basis.size() && !e; ++i)
      for (std::size_t j = i + 1; j < basis.size() && !e; ++j) {
        auto s = combine(basis[i], Q.one_scalar(), basis[j]);
        if (!form(s, s).is_zero()) e = s;
      }
    if (!e) {
      diag.push_back("degenerate multiplication form");
      return std::nullopt;
    }
    const K ee = form(*e, *e);
    std::vector<DenseVec<K>> rest;
    Subspace<K> seen = Q.power(2);
    seen.insert(*e);
    for (const auto& b : basis) {
      auto r = combine(b, -(form(b, *e) / ee), *e);
      if (seen.insert(r)) rest.push_back(r);
    }
    orth.push_back(*e);
    basis = std::move(rest);
  }
  std::vector<DenseVec<K>> zs(orth.begin() + 1, orth.end());
  return certificate_from_generators(Q, {orth.front()}, zs, "loewy-two-diagonalization", diag);
}

/// Q/soc(Q) = R/soc R x_k S/soc S for a connected sum. Split gr(Q/soc Q),
/// lift the two sets of linear forms to Q and correct them degree by degree
/// (a_i, b_j in m^{t-1}) until y_i z_j = 0; each step is a linear system
/// modulo m^{t+1} because a_i b_j lies in m^{2t-2}.
template <FieldScalar K>
std::optional<DecompositionCertificate<K>> split_by_socle_quotient(const ArtinAlgebra<K>& Q, std::vector<std::string>& diag) {
  const int s = Q.loewy_length();
  if (s < 3) return std::nullopt;
  auto P = Q.quotient(Q.socle());
  auto split = graded_fibre_split(associated_graded(P));
  if (!split) {
    diag.push_back("gr(Q/soc Q) has no fibre product splitting found");
    return std::nullopt;
  }
  auto lift = [&](const std::vector<DenseVec<K>>& forms) {
    std::vector<DenseVec<K>> out;
    for (const auto& u : forms) {
      DenseVec<K> y = Q.zero();
      for (std::size_t v = 0; v < Q.nvars(); ++v)
        if (!u[v].is_zero()) y = combine(y, u[v], Q.variable(v));
      out.push_back(y);
    }
    return out;
  };
  auto ys = lift(split->u_basis), zs = lift(split->w_basis);
  const std::size_t L = Q.length(), ny = ys.size(), nz = zs.size();
  for (int t = 3; t <= s; ++t) {
    const auto& mt1 = Q.power(t + 1);
    auto block = [&](std::size_t i, std::size_t j) { return static_cast<int>((i * nz + j) * L); };
    SparseVec<K> target;
    for (std::size_t i = 0; i < ny; ++i)
      for (std::size_t j = 0; j < nz; ++j)
        for (const auto& [l, c] : mt1.reduce(to_sparse(Q.multiply(ys[i], zs[j])))) target.emplace_back(block(i, j) + l, -c);
    if (target.empty()) continue;
    const auto basis = Q.power(t - 1).reduced_basis();
    std::vector<SparseVec<K>> cols;
    for (std::size_t i = 0; i < ny; ++i)
      for (const auto& e : basis) {
        SparseVec<K> col;
        const auto ev = to_dense(e, L);
        for (std::size_t j = 0; j < nz; ++j)
          for (const auto& [l, c] : mt1.reduce(to_sparse(Q.multiply(ev, zs[j])))) col.emplace_back(block(i, j) + l, c);
        cols.push_back(std::move(col));
      }
    for (std::size_t j = 0; j < nz; ++j)
      for (const auto& e : basis) {
        SparseVec<K> col;
        const auto ev = to_dense(e, L);
        for (std::size_t i = 0; i < ny; ++i)
          for (const auto& [l, c] : mt1.reduce(to_sparse(Q.multiply(ys[i], ev)))) col.emplace_back(block(i, j) + l, c);
        std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        cols.push_back(std::move(col));
      }
    auto x = solve(cols, target, ny * nz * L, Q.field());
    if (!x) {
      diag.push_back("socle-quotient splitting does not lift past degree " + std::to_string(t));
      return std::nullopt;
    }
    const std::size_t nb = basis.size();
    for (const auto& [idx, c] : *x) {
      const auto col = static_cast<std::size_t>(idx);
      const auto ev = to_dense(basis[col % nb], L);
      if (col < ny * nb)
        ys[col / nb] = combine(ys[col / nb], c, ev);
      else
        zs[(col - ny * nb) / nb] = combine(zs[(col - ny * nb) / nb], c, ev);
    }
  }
  return certificate_from_generators(Q, ys, zs, "socle-quotient-lifting", diag);
}

}  // namespace detail

/// Decide decomposability of a Gorenstein local ring Q of Loewy length >= 2.
template <FieldScalar K>
DecompositionResult<K> decompose(const ArtinAlgebra<K>& Q) {
  if (!Q.is_gorenstein()) throw Error(ErrorCode::NotGorenstein, "decompose needs a Gorenstein ring");
  const int s = Q.loewy_length();
  if (s < 2) throw Error(ErrorCode::LoewyTooSmall, "Loewy length " + std::to_string(s) + " < 2");
  DecompositionResult<K> res;
  if (auto ind = indecomposability_check(Q)) {
    res.kind = DecompositionKind::Indecomposable;
    res.indecomposable = ind;
    return res;
  }
  auto finish = [&](std::optional<DecompositionCertificate<K>> c) {
    if (c) {
      res.kind = DecompositionKind::Decomposed;
      res.certificate = std::move(c);
    }
    return res;
  };
  if (s == 2) return finish(detail::split_loewy_two(Q, res.diagnostics));

  auto G = associated_graded(Q);
  auto split = graded_fibre_split(G);
  if (!split) {
    res.diagnostics.push_back("associated graded ring has no fibre product splitting found");
  } else {
    const int k = split->k_B;
    std::optional<DecompositionCertificate<K>> c;
    if (k == 1) {
      c = detail::split_socle_degree_one(Q, res.diagnostics);
    } else if (split->A.nvars() == 1 && s > k + 1) {
      DenseVec<K> y = Q.zero();
      for (std::size_t v = 0; v < Q.nvars(); ++v)
        if (!split->u_basis.front()[v].is_zero()) y = combine(y, split->u_basis.front()[v], Q.variable(v));
      c = detail::split_hypersurface(Q, y, k, res.diagnostics);
    } else {
      res.diagnostics.push_back("graded splitting with Loewy length of B = " + std::to_string(k) + " and edim of A = " +
                                std::to_string(split->A.nvars()) + " has no direct lifting");
    }
    if (c) return finish(std::move(c));
  }
  return finish(detail::split_by_socle_quotient(Q, res.diagnostics));
}

// ---- structure of rings with a graded splitting ---------------------------

struct SetupReport {
  int s = 0, k = 0;
  VerificationReport conclusions;
  bool ij_in_m_k_plus_1 = false;  // informational
};

/// Given a graded splitting gr(Q) = A x_k B with A Gorenstein and
/// s = Loewy length of A > k + 1 = Loewy length of B + 1, checks the
/// structural consequences for the ideals I (lifting A) and J (lifting B).
template <FieldScalar K>
SetupReport verify_setup_theorems(const ArtinAlgebra<K>& Q, const GradedSplit<K>& split) {
  SetupReport rep;
  rep.s = split.A.loewy_length();
  rep.k = split.k_B;
  const int s = rep.s, k = rep.k;
  if (!split.A.algebra().is_gorenstein()) throw Error(ErrorCode::SetupViolation, "A is not Gorenstein");
  if (!(s > k + 1)) throw Error(ErrorCode::SetupViolation, "need Loewy length of A > Loewy length of B + 1");
  if (Q.loewy_length() != s) throw Error(ErrorCode::SetupViolation, "Loewy lengths of Q and A differ");
  auto& out = rep.conclusions;

  std::vector<DenseVec<K>> ys;
  for (const auto& u : split.u_basis) {
    DenseVec<K> y = Q.zero();
    for (std::size_t v = 0; v < Q.nvars(); ++v)
      if (!u[v].is_zero()) y = combine(y, u[v], Q.variable(v));
    ys.push_back(y);
  }
  auto ann_k1 = Q.annihilator(Q.power_ideal(k + 1));
  auto zs = detail::complete_mod_square(Q, {}, detail::candidate_pool(Q, ann_k1.span), Q.edim());
  const auto I = Q.ideal_generated(ys), J = Q.ideal_generated(zs);
  const auto m = Q.maximal_ideal(), m2 = Q.power_ideal(2);
  const std::size_t nB = split.B.nvars();

  out.add("mu(J) = edim(B)", Q.mu(J) == nB, std::to_string(Q.mu(J)) + " vs " + std::to_string(nB));
  auto ann_s1 = Q.annihilator(Q.power_ideal(s - 1));
  out.add("(0:m^{s-1}) = m^2 + (0:m^{k+1})", ann_s1.span == (m2.span + ann_k1.span));
  out.add("length((0:m^{s-1})/m^2) = edim(B)", ann_s1.span.dim() - m2.span.dim() == nB);
  out.add("J + m^2 = (0:m^{s-1})", (J.span + m2.span) == ann_s1.span);
  if (k == 1) out.add("(0:m^{s-1}) in J + (0:J)", (J.span + Q.annihilator(J).span).contains(ann_s1.span));
  out.add("m = I + J", (I.span + J.span) == m.span);
  std::vector<DenseVec<K>> all = ys;
  all.insert(all.end(), zs.begin(), zs.end());
  out.add("y, z minimally generate m", all.size() == Q.edim() && detail::independent_mod_square(Q, all));
  const auto soc = Q.socle();
  out.add("J m^k = soc(Q)", Q.product(J, Q.power_ideal(k)).span == soc.span);
  out.add("J^k != 0", Q.ideal_power(J, k).span.dim() > 0);
  const auto IJ = Q.product(I, J);
  out.add("I J in m^3", Q.power(3).contains(IJ.span));
  out.add("I^k J + J^{k+1} in soc(Q)",
          soc.span.contains(Q.product(Q.ideal_power(I, k), J).span) && soc.span.contains(Q.ideal_power(J, k + 1).span));
  bool mixed = true;
  for (int b = 2; b <= k; ++b) {
    const int a = k + 1 - b;
    mixed = mixed && Q.product(Q.ideal_power(I, a), Q.ideal_power(J, b)).span.dim() == 0;
  }
  out.add("I^a J^b = 0 for a + b = k + 1, b >= 2", mixed);
  bool powers = true;
  for (int i = k + 1; i <= s + 1; ++i) powers = powers && Q.ideal_power(I, i).span == Q.power(i);
  out.add("m^i = I^i for i > k", powers);
  rep.ij_in_m_k_plus_1 = Q.power(k + 1).contains(IJ.span);
  return rep;
}

}  // namespace gorenstein
