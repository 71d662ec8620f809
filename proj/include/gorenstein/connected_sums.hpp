#pragma once

// Fibre products and connected sums of local Artinian algebras, and
// certificates presenting a ring as a connected sum.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gorenstein/artin_algebra.hpp"
#include "gorenstein/assoc_graded.hpp"
#include "gorenstein/resolutions.hpp"

namespace gorenstein {

template <FieldScalar K>
using Poly = Polynomial<K>;

namespace detail {

inline RingPtr union_ring(const RingPtr& a, const RingPtr& b) {
  for (const auto& v : a->vars)
    if (b->index_of(v) >= 0) throw Error(ErrorCode::VariableCollision, "variable " + v + " occurs in both components");
  if (!(a->field == b->field)) throw Error(ErrorCode::RingMismatch, "components over different fields");
  auto vars = a->vars;
  vars.insert(vars.end(), b->vars.begin(), b->vars.end());
  return make_ring(vars, a->field);
}

template <FieldScalar K>
std::vector<Poly<K>> embedded(const std::vector<Poly<K>>& ps, const RingPtr& target) {
  std::vector<Poly<K>> out;
  for (const auto& p : ps) out.push_back(p.embed(target));
  return out;
}

/// All products Y_i Z_j.
template <FieldScalar K>
std::vector<Poly<K>> cross_products(const RingPtr& ring, const RingPtr& a, const RingPtr& b) {
  std::vector<Poly<K>> out;
  for (const auto& y : a->vars)
    for (const auto& z : b->vars) {
      auto Y = Poly<K>::variable(ring, static_cast<std::size_t>(ring->index_of(y)));
      auto Z = Poly<K>::variable(ring, static_cast<std::size_t>(ring->index_of(z)));
      out.push_back(Y * Z);
    }
  return out;
}

inline std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace detail

/// R x_k S = k[[Y,Z]]/(I_R + I_S + (Y Z)).
template <FieldScalar K>
ArtinAlgebra<K> fibre_product(const ArtinAlgebra<K>& R, const ArtinAlgebra<K>& S) {
  if (R.length() < 2 || S.length() < 2) throw Error(ErrorCode::TrivialComponent, "a component equals the residue field");
  auto ring = detail::union_ring(R.ring(), S.ring());
  auto gens = detail::embedded(R.minimal_presentation().generators, ring);
  auto gs = detail::embedded(S.minimal_presentation().generators, ring);
  gens.insert(gens.end(), gs.begin(), gs.end());
  auto cross = detail::cross_products<K>(ring, R.ring(), S.ring());
  gens.insert(gens.end(), cross.begin(), cross.end());
  // the components' reduced bases and the products Y_i Z_j form a reduced Gröbner basis:
  // pairs across components have coprime leading terms, and every term of g Z_j with g in
  // (Y) is a multiple of some Y_i Z_j
  auto gb = detail::embedded(R.groebner(), ring);
  auto gbs = detail::embedded(S.groebner(), ring);
  gb.insert(gb.end(), gbs.begin(), gbs.end());
  gb.insert(gb.end(), cross.begin(), cross.end());
  return ArtinAlgebra<K>::from_groebner_basis(ring, std::move(gb), IdealPresentation<K>(ring, std::move(gens)));
}

/// Default socle generator: the reduced echelon basis vector of soc(A),
/// i.e. the one with lexicographically smallest support and leading 1.
template <FieldScalar K>
DenseVec<K> default_socle_generator(const ArtinAlgebra<K>& A) {
  auto rows = A.socle().span.reduced_basis();
  if (rows.size() != 1) throw Error(ErrorCode::NotGorenstein, "socle has dimension " + std::to_string(rows.size()));
  return to_dense(rows.front(), A.length());
}

template <FieldScalar K>
struct ConnectedSumSpec {
  std::optional<DenseVec<K>> delta_R;  // socle generators; defaults as above
  std::optional<DenseVec<K>> delta_S;
  std::optional<K> u;                  // defaults to 1
};

/// R #_k S = (R x_k S) / (delta_R - u delta_S).
template <FieldScalar K>
ArtinAlgebra<K> connected_sum(const ArtinAlgebra<K>& R, const ArtinAlgebra<K>& S, const ConnectedSumSpec<K>& spec = {}) {
  if (R.length() < 2 || S.length() < 2) throw Error(ErrorCode::TrivialComponent, "a component equals the residue field");
  if (!R.is_gorenstein()) throw Error(ErrorCode::NotGorenstein, "first component is not Gorenstein");
  if (!S.is_gorenstein()) throw Error(ErrorCode::NotGorenstein, "second component is not Gorenstein");
  auto dR = spec.delta_R ? *spec.delta_R : default_socle_generator(R);
  auto dS = spec.delta_S ? *spec.delta_S : default_socle_generator(S);
  if (is_zero(dR) || !R.socle().span.contains(dR)) throw Error(ErrorCode::SocleNotGenerating, "delta_R does not generate soc(R)");
  if (is_zero(dS) || !S.socle().span.contains(dS)) throw Error(ErrorCode::SocleNotGenerating, "delta_S does not generate soc(S)");
  K u = spec.u ? *spec.u : R.one_scalar();
  if (u.is_zero()) throw Error(ErrorCode::InvalidArgument, "u must be a unit");
  auto P = fibre_product(R, S);
  auto d = combine(P.element(R.lift(dR).embed(P.ring())), -u, P.element(S.lift(dS).embed(P.ring())));
  return P.quotient(P.ideal_generated({d}));
}

inline int phi_correction(std::size_t m, std::size_t n) {
  if (m >= 2 && n >= 2) return 1;
  if (m == 1 && n == 1) return -1;
  return 0;
}

/// Q = R # S presented on coordinates Y (from R) and Z (from S).
template <FieldScalar K>
struct DecompositionCertificate {
  std::vector<std::string> y_vars, z_vars;
  std::vector<Poly<K>> y_images, z_images;  // lifts to the ring of Q
  IdealPresentation<K> Q_ideal;             // in k[Y,Z]
  IdealPresentation<K> R_ideal;             // in k[Y]
  IdealPresentation<K> S_ideal;             // in k[Z]
  Poly<K> delta_R, delta_S;                 // Delta_R - Delta_S lies in Q_ideal
  int phi = 0;
  std::string provenance;
};

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.ok; });
  }
  void add(std::string name, bool ok, std::string detail = {}) { checks.push_back({std::move(name), ok, std::move(detail)}); }
};

namespace detail {

/// m^N as monomial generators, N = Loewy length + 1.
template <FieldScalar K>
std::vector<Poly<K>> maximal_power(const RingPtr& ring, int N) {
  std::vector<Poly<K>> out;
  for (const auto& m : ArtinAlgebra<K>::monomials_of_degree(ring->nvars(), N))
    out.push_back(Poly<K>::monomial(ring, m, K::from_int(1, ring->field)));
  return out;
}

template <FieldScalar K>
bool independent_mod_square(const ArtinAlgebra<K>& Q, const std::vector<DenseVec<K>>& gens) {
  Subspace<K> s = Q.power(2);
  for (const auto& g : gens)
    if (!s.insert(g)) return false;
  return true;
}

/// dim k[X]/(I + m^N), by linear algebra in k[X]/m^N.
template <FieldScalar K>
std::size_t truncated_colength(const IdealPresentation<K>& I, int N) {
  const std::size_t n = I.ring->nvars();
  std::map<Exponents, int> index;
  std::vector<Monomial> below;
  for (int d = 0; d < N; ++d)
    for (const auto& m : ArtinAlgebra<K>::monomials_of_degree(n, d)) {
      index.emplace(m.exps, static_cast<int>(index.size()));
      below.push_back(m);
    }
  Subspace<K> span(index.size());
  for (const auto& g : I.generators)
    for (const auto& mu : below) {
      SparseVec<K> v;
      for (const auto& [m, c] : g.terms()) {
        auto prod = mu * m;
        if (prod.degree() < N) v.emplace_back(index.at(prod.exps), c);
      }
      std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      span.insert(v);
    }
  return index.size() - span.dim();
}

/// Generators of the defining ideal of R #_k S built from certificate data:
/// (J_R ∩ <Y>) + (J_S ∩ <Z>) + <Y Z> + <Delta_R - Delta_S>.
template <FieldScalar K>
IdealPresentation<K> connected_sum_ideal(const DecompositionCertificate<K>& c, const ArtinAlgebra<K>& R, const ArtinAlgebra<K>& S) {
  const auto& ring = c.Q_ideal.ring;
  auto Yring = R.ring(), Zring = S.ring();
  std::vector<Poly<K>> Ygens;
  for (std::size_t i = 0; i < Yring->nvars(); ++i) Ygens.push_back(Poly<K>::variable(Yring, i).embed(ring));
  std::vector<Poly<K>> Zgens;
  for (std::size_t i = 0; i < Zring->nvars(); ++i) Zgens.push_back(Poly<K>::variable(Zring, i).embed(ring));

  auto JR = embedded(R.local_ideal().generators, ring);
  JR.insert(JR.end(), Zgens.begin(), Zgens.end());
  auto JS = embedded(S.local_ideal().generators, ring);
  JS.insert(JS.end(), Ygens.begin(), Ygens.end());
  auto a = ideal_ops(IdealPresentation<K>(ring, JR), IdealPresentation<K>(ring, Ygens), IdealOp::Intersection);
  auto b = ideal_ops(IdealPresentation<K>(ring, JS), IdealPresentation<K>(ring, Zgens), IdealOp::Intersection);
  auto gens = a.generators;
  gens.insert(gens.end(), b.generators.begin(), b.generators.end());
  auto cross = cross_products<K>(ring, Yring, Zring);
  gens.insert(gens.end(), cross.begin(), cross.end());
  gens.push_back(c.delta_R.embed(ring) - c.delta_S.embed(ring));
  return {ring, std::move(gens)};
}

}  // namespace detail

/// Builds and self-checks a certificate from generators y (spanning R) and
/// z (spanning S) of the maximal ideal of Q with y_i z_j = 0.
template <FieldScalar K>
std::optional<DecompositionCertificate<K>> certificate_from_generators(const ArtinAlgebra<K>& Q, const std::vector<DenseVec<K>>& ys,
                                                                        const std::vector<DenseVec<K>>& zs, const std::string& provenance,
                                                                        std::vector<std::string>& diagnostics) {
  if (ys.empty() || zs.empty()) {
    diagnostics.push_back("empty generator set for a component");
    return std::nullopt;
  }
  for (const auto& y : ys)
    for (const auto& z : zs)
      if (!is_zero(Q.multiply(y, z))) {
        diagnostics.push_back("y_i z_j != 0 for the chosen generators");
        return std::nullopt;
      }
  std::vector<DenseVec<K>> all = ys;
  all.insert(all.end(), zs.begin(), zs.end());
  if (all.size() != Q.edim() || !detail::independent_mod_square(Q, all)) {
    diagnostics.push_back("chosen generators do not minimally generate the maximal ideal");
    return std::nullopt;
  }
  DecompositionCertificate<K> c;
  c.y_vars = detail::numbered("Y", ys.size());
  c.z_vars = detail::numbered("Z", zs.size());
  auto names = c.y_vars;
  names.insert(names.end(), c.z_vars.begin(), c.z_vars.end());
  for (const auto& y : ys) c.y_images.push_back(Q.lift(y));
  for (const auto& z : zs) c.z_images.push_back(Q.lift(z));
  c.Q_ideal = Q.presentation_ideal(all, names);

  auto R = Q.subalgebra(ys, c.y_vars);
  auto S = Q.subalgebra(zs, c.z_vars);
  if (!R.is_gorenstein() || !S.is_gorenstein()) {
    diagnostics.push_back("a candidate component is not Gorenstein");
    return std::nullopt;
  }
  c.R_ideal = R.minimal_presentation();
  c.S_ideal = S.minimal_presentation();
  auto dR = R.lift(default_socle_generator(R));
  auto dS = S.lift(default_socle_generator(S));
  auto eR = Q.evaluate(dR, ys), eS = Q.evaluate(dS, zs);
  std::size_t p = 0;
  while (p < eS.size() && eS[p].is_zero()) ++p;
  if (p == eS.size()) {
    diagnostics.push_back("socle of S maps to zero");
    return std::nullopt;
  }
  K scale = eR[p] / eS[p];
  c.delta_R = dR;
  c.delta_S = scale * dS;
  c.phi = phi_correction(ys.size(), zs.size());
  c.provenance = provenance;
  auto Qc = ArtinAlgebra<K>::from_presentation(c.Q_ideal);
  if (!ideals_equal(Qc.local_ideal(), detail::connected_sum_ideal(c, R, S))) {
    diagnostics.push_back("defining ideal is not the connected sum ideal of the components");
    return std::nullopt;
  }
  return c;
}

template <FieldScalar K>
ArtinAlgebra<K> certificate_component_R(const DecompositionCertificate<K>& c) {
  return ArtinAlgebra<K>::from_presentation(c.R_ideal);
}
template <FieldScalar K>
ArtinAlgebra<K> certificate_component_S(const DecompositionCertificate<K>& c) {
  return ArtinAlgebra<K>::from_presentation(c.S_ideal);
}

/// Independent check that Q is the connected sum described by c.
template <FieldScalar K>
VerificationReport verify_certificate(const ArtinAlgebra<K>& Q, const DecompositionCertificate<K>& c) {
  VerificationReport rep;
  std::vector<DenseVec<K>> images;
  auto to_q = [&](const Poly<K>& f) { return Q.element(f.embed(Q.ring())); };
  try {
    for (const auto& f : c.y_images) images.push_back(to_q(f));
    for (const auto& f : c.z_images) images.push_back(to_q(f));
  } catch (const Error& e) {
    rep.add("generator images", false, e.what());
    return rep;
  }
  bool gens_ok = images.size() == Q.edim() && detail::independent_mod_square(Q, images) &&
                 c.y_vars.size() == c.y_images.size() && c.z_vars.size() == c.z_images.size();
  rep.add("generator images", gens_ok, "images must minimally generate the maximal ideal");
  if (!gens_ok) return rep;

  auto names = c.y_vars;
  names.insert(names.end(), c.z_vars.begin(), c.z_vars.end());
  auto Qc = Q.presented_algebra(images, names);
  IdealPresentation<K> claimed(Qc.ring(), detail::embedded(c.Q_ideal.generators, Qc.ring()));
  // claimed ⊆ I_Q and equal colengths modulo m^{s+2}; m^{s+2} ⊆ m·I_Q, so by Nakayama this is claimed = I_Q
  bool contained = true;
  for (const auto& g : claimed.generators) contained = contained && is_zero(Qc.element(g));
  rep.add("presentation", contained && detail::truncated_colength(claimed, Qc.loewy_length() + 2) == Qc.length(),
          "kernel of k[[Y,Z]] -> Q equals the certificate ideal");

  std::optional<ArtinAlgebra<K>> R, S;
  try {
    R = certificate_component_R(c);
    S = certificate_component_S(c);
  } catch (const Error& e) {
    rep.add("components", false, e.what());
    return rep;
  }
  rep.add("components nontrivial", R->length() >= 2 && S->length() >= 2);
  rep.add("components gorenstein", R->is_gorenstein() && S->is_gorenstein());
  auto soc_ok = [](const ArtinAlgebra<K>& A, const Poly<K>& d) {
    try {
      auto v = A.element(d.embed(A.ring()));
      return !is_zero(v) && A.socle().span.contains(v);
    } catch (const Error&) {
      return false;
    }
  };
  rep.add("socle generator R", soc_ok(*R, c.delta_R));
  rep.add("socle generator S", soc_ok(*S, c.delta_S));
  rep.add("phi", c.phi == phi_correction(c.y_vars.size(), c.z_vars.size()));
  if (!rep.ok()) return rep;
  DecompositionCertificate<K> cc = c;
  cc.Q_ideal = IdealPresentation<K>(Qc.ring(), detail::embedded(c.Q_ideal.generators, Qc.ring()));
  rep.add("connected sum ideal", ideals_equal(Qc.local_ideal(), detail::connected_sum_ideal(cc, *R, *S)),
          "I_Q = (J_R ∩ <Y>) + (J_S ∩ <Z>) + <YZ> + <Delta_R - Delta_S>");
  return rep;
}

inline long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Numerical identities every connected sum Q = R # S satisfies. Poincaré
/// series are compared when series_order > 0.
template <FieldScalar K>
VerificationReport verify_connected_sum_identities(const ArtinAlgebra<K>& Q, const ArtinAlgebra<K>& R, const ArtinAlgebra<K>& S,
                                                   int series_order = 0) {
  VerificationReport rep;
  const auto m = static_cast<long>(R.edim()), n = static_cast<long>(S.edim());
  const int sR = R.loewy_length(), sS = S.loewy_length();
  rep.add("length", Q.length() + 2 == R.length() + S.length(),
          std::to_string(Q.length()) + " vs " + std::to_string(R.length()) + " + " + std::to_string(S.length()) + " - 2");
  if (sR >= 2 && sS >= 2) rep.add("edim", static_cast<long>(Q.edim()) == m + n);

  auto HQ = Q.hilbert(), HR = R.hilbert(), HS = S.hilbert();
  auto at = [](const std::vector<std::size_t>& h, int i) { return i < static_cast<int>(h.size()) ? static_cast<long>(h[i]) : 0L; };
  bool additive = true, bounded = true;
  for (int i = 1; i < std::min(sR, sS); ++i) {
    additive = additive && at(HQ, i) == at(HR, i) + at(HS, i);
    bounded = bounded && at(HQ, i) <= binomial(m + n - 2 + i, i) + 1;
  }
  rep.add("hilbert additivity", additive);
  rep.add("hilbert bound", bounded);

  auto muQ = Q.invariants().mu_ideal, muR = R.invariants().mu_ideal, muS = S.invariants().mu_ideal;
  const int phi = phi_correction(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
  rep.add("generators of the defining ideal", static_cast<long>(muQ) == static_cast<long>(muR + muS) + m * n + phi,
          std::to_string(muQ) + " vs " + std::to_string(muR) + " + " + std::to_string(muS) + " + " + std::to_string(m * n) + " + " +
              std::to_string(phi));

  if (series_order > 0) {
    auto PQ = poincare_series(Q, series_order), PR = poincare_series(R, series_order), PS = poincare_series(S, series_order);
    auto chk = connected_sum_series_check(PQ, PR, PS, phi);
    rep.add("poincare series", chk.holds(), "residual " + chk.residual().get_str());
  }

  if (sR > sS && sS >= 2) {
    // gr(Q) = gr(R) x_k gr(S / soc S) in the certificate coordinates
    auto GQ = associated_graded(Q);
    auto GR = associated_graded(R);
    auto GS = associated_graded(S.quotient(S.socle()));
    const auto& ring = GQ.ring();
    auto gens = detail::embedded(GR.presentation().generators, ring);
    auto gs = detail::embedded(GS.presentation().generators, ring);
    gens.insert(gens.end(), gs.begin(), gs.end());
    auto cross = detail::cross_products<K>(ring, R.ring(), S.ring());
    gens.insert(gens.end(), cross.begin(), cross.end());
    rep.add("associated graded", ideals_equal(GQ.presentation(), IdealPresentation<K>(ring, std::move(gens))));
  }
  return rep;
}

}  // namespace gorenstein
