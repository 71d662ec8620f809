#pragma once

// Gorenstein algebras from Macaulay dual polynomials, and seeded random
// corpora of stretched, short and general Gorenstein rings.

#include <cctype>
#include <random>
#include <string>
#include <vector>

#include "gorenstein/artin_algebra.hpp"

namespace gorenstein {

namespace detail {

/// x^a o X^b = X^{b-a} (zero unless a <= b).
template <FieldScalar K>
Polynomial<K> contract(const Monomial& a, const Polynomial<K>& F) {
  std::vector<typename Polynomial<K>::Term> out;
  for (const auto& [m, c] : F.terms())
    if (a.divides(m)) out.emplace_back(m / a, c);
  return Polynomial<K>(F.ring(), std::move(out));
}

inline std::string lowered(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

}  // namespace detail

/// S/Ann(F) for the contraction action of S = k[x] on the dual polynomial F.
/// Variable names are the lowercased dual names. When Ann(F) contains linear
/// forms the result is re-presented on fewer variables.
template <FieldScalar K>
ArtinAlgebra<K> apolar_algebra(const Polynomial<K>& F) {
  if (F.is_zero()) throw Error(ErrorCode::InvalidArgument, "dual polynomial must be nonzero");
  const auto& dual = F.ring();
  const int d = F.degree();
  if (dual->field.kind == FieldKind::PrimeField && static_cast<int>(dual->field.characteristic) <= d)
    throw Error(ErrorCode::CharacteristicTooSmall,
                "characteristic " + std::to_string(dual->field.characteristic) + " <= deg F = " + std::to_string(d));
  std::vector<std::string> names;
  for (const auto& v : dual->vars) names.push_back(detail::lowered(v));
  auto ring = make_ring(names, dual->field);
  const std::size_t n = ring->nvars();

  // coordinates of contractions: dual monomials of degree <= d
  std::map<std::vector<int>, int> dual_index;
  for (int e = 0; e <= d; ++e)
    for (const auto& m : ArtinAlgebra<K>::monomials_of_degree(n, e)) dual_index.emplace(m.exps, static_cast<int>(dual_index.size()));
  const auto D = static_cast<int>(dual_index.size());
  auto image = [&](const Monomial& a) {
    SparseVec<K> v;
    const auto g = detail::contract(a, F);
    for (const auto& [m, c] : g.terms()) v.emplace_back(dual_index.at(m.exps), c);
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return v;
  };

  // Buchberger-Möller: walk monomials upward in degrevlex; a dependent image
  // gives a Gröbner basis element with that leading monomial.
  std::vector<Monomial> standard;
  std::vector<Polynomial<K>> gb;
  Subspace<K> images(2 * static_cast<std::size_t>(D));  // image coordinates, then tags
  const K one = K::from_int(1, ring->field);
  for (int e = 0; e <= d + 1; ++e) {
    auto md = ArtinAlgebra<K>::monomials_of_degree(n, e);
    std::sort(md.begin(), md.end(), [&](const Monomial& a, const Monomial& b) { return ring->order.compare(a, b) < 0; });
    for (const auto& m : md) {
      bool multiple = std::any_of(gb.begin(), gb.end(), [&](const auto& g) { return g.leading_monomial().divides(m); });
      if (multiple) continue;
      SparseVec<K> v = image(m);
      auto r = images.reduce(v);
      if (!r.empty() && r.front().first < D) {
        v.emplace_back(D + static_cast<int>(standard.size()), one);
        images.insert(v);
        standard.push_back(m);
        continue;
      }
      std::vector<typename Polynomial<K>::Term> terms{{m, one}};
      for (const auto& [i, c] : r) terms.emplace_back(standard[static_cast<std::size_t>(i - D)], c);
      gb.emplace_back(ring, std::move(terms));
    }
  }
  auto A = ArtinAlgebra<K>::from_groebner_basis(ring, std::move(gb));
  if (A.edim() < n) return A.quotient(A.zero_ideal());
  return ArtinAlgebra<K>::from_presentation(A.minimal_presentation());
}

enum class CorpusProfile { Stretched, Short, General };

inline CorpusProfile parse_profile(const std::string& s) {
  if (s == "stretched") return CorpusProfile::Stretched;
  if (s == "short") return CorpusProfile::Short;
  if (s == "general") return CorpusProfile::General;
  throw Error(ErrorCode::InvalidArgument, "unknown profile " + s);
}

struct CorpusParams {
  int h = 3;           // embedding dimension
  int s = 4;           // socle degree (short rings always use 3)
  int n = 2;           // H(2) for short rings
  int height = 20;     // coefficient bound
  std::size_t count = 1;
  std::string prefix = "x";  // algebra variables prefix1, prefix2, ...
};

template <FieldScalar K>
struct CorpusEntry {
  Polynomial<K> dual;
  ArtinAlgebra<K> algebra;
};

namespace detail {

template <FieldScalar K>
class DualSampler {
 public:
  DualSampler(const RingPtr& ring, int height, std::uint64_t seed) : ring_(ring), height_(height), rng_(seed) {}

  K coefficient(bool nonzero = true) {
    std::uniform_int_distribution<int> dist(-height_, height_);
    int c = 0;
    do c = dist(rng_);
    while (nonzero && c == 0);
    return K::from_int(c, ring_->field);
  }
  Polynomial<K> var(std::size_t i) { return Polynomial<K>::variable(ring_, i); }
  Polynomial<K> zero() { return Polynomial<K>(ring_); }

  /// X -> T X with T unipotent upper triangular.
  Polynomial<K> unipotent_change(const Polynomial<K>& F) {
    const std::size_t n = ring_->nvars();
    std::vector<Polynomial<K>> img;
    for (std::size_t i = 0; i < n; ++i) {
      auto p = var(i);
      for (std::size_t j = i + 1; j < n; ++j)
        if (coin()) p = p + Polynomial<K>::constant(ring_, coefficient(false)) * var(j);
      img.push_back(p);
    }
    return substitute(F, img);
  }
  /// Random form of degree e in the first k variables.
  Polynomial<K> random_form(std::size_t k, int e, std::size_t terms) {
    auto monos = ArtinAlgebra<K>::monomials_of_degree(k, e);
    auto p = zero();
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    for (std::size_t t = 0; t < terms; ++t) {
      Monomial m = Monomial::one(ring_->nvars());
      const auto& small = monos[pick(rng_)];
      for (std::size_t i = 0; i < k; ++i) m.exps[i] = small.exps[i];
      p = p + Polynomial<K>::monomial(ring_, m, coefficient());
    }
    return p;
  }
  bool coin() { return std::uniform_int_distribution<int>(0, 1)(rng_) == 1; }
  std::mt19937_64& rng() { return rng_; }

  Polynomial<K> substitute(const Polynomial<K>& F, const std::vector<Polynomial<K>>& img) {
    auto out = zero();
    for (const auto& [m, c] : F.terms()) {
      auto t = Polynomial<K>::constant(ring_, c);
      for (std::size_t i = 0; i < m.exps.size(); ++i) t = t * img[i].pow(m.exps[i]);
      out = out + t;
    }
    return out;
  }

 private:
  RingPtr ring_;
  int height_;
  std::mt19937_64 rng_;
};

}  // namespace detail

/// Deterministic seeded corpus; every returned ring has the profile's
/// Hilbert function shape (candidates are resampled, at most 1000 times).
template <FieldScalar K>
std::vector<CorpusEntry<K>> random_corpus(CorpusProfile profile, const CorpusParams& p, std::uint64_t seed,
                                          const FieldSpec& field = FieldSpec::rationals()) {
  if (p.h < 1 || p.h > 5) throw Error(ErrorCode::InvalidArgument, "h must be in 1..5");
  if (p.s < 1 || p.s > 8) throw Error(ErrorCode::InvalidArgument, "socle degree must be in 1..8");
  if (p.height < 1 || p.height > 20) throw Error(ErrorCode::InvalidArgument, "coefficient height must be in 1..20");
  if (profile == CorpusProfile::Short && (p.n < 1 || p.n > p.h))
    throw Error(ErrorCode::InvalidArgument, "short rings need 1 <= n <= h");
  std::vector<std::string> dual_names;
  std::string up = p.prefix;
  for (auto& ch : up) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  for (int i = 1; i <= p.h; ++i) dual_names.push_back(up + std::to_string(i));
  auto ring = make_ring(dual_names, field);
  detail::DualSampler<K> S(ring, p.height, seed);
  const auto h = static_cast<std::size_t>(p.h);

  std::vector<CorpusEntry<K>> out;
  int failures = 0;
  while (out.size() < p.count) {
    if (failures >= 1000) throw Error(ErrorCode::ResourceLimit, "no ring of the requested shape after 1000 samples");
    Polynomial<K> F = S.zero();
    std::vector<std::size_t> want;
    switch (profile) {
      case CorpusProfile::Stretched: {
        F = S.var(0).pow(p.s);
        for (std::size_t i = 1; i < h; ++i) F = F + S.var(i).pow(2);
        F = S.unipotent_change(F);
        want.assign(static_cast<std::size_t>(p.s) + 1, 1);
        if (p.s >= 1) want[1] = h;
        break;
      }
      case CorpusProfile::Short: {
        const auto n = static_cast<std::size_t>(p.n);
        F = S.random_form(n, 3, 2 + n * n);
        for (std::size_t i = n; i < h; ++i) F = F + S.var(i).pow(2);
        F = S.unipotent_change(F);
        want = {1, h, n, 1};
        break;
      }
      case CorpusProfile::General: {
        F = S.random_form(h, p.s, 1 + h);
        for (int e = 2; e < p.s; ++e) F = F + S.random_form(h, e, h);
        break;
      }
    }
    try {
      auto A = apolar_algebra(F);
      bool ok = want.empty() ? (A.edim() == h && A.loewy_length() == p.s) : A.hilbert() == want;
      if (ok) {
        out.push_back({F, std::move(A)});
        continue;
      }
    } catch (const Error&) {
    }
    ++failures;
  }
  return out;
}

}  // namespace gorenstein
