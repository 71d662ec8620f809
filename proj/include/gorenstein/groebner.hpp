#pragma once

// Buchberger's algorithm (normal selection, both criteria), normal forms,
// ideal operations and standard-monomial bases for zero-dimensional ideals.

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "gorenstein/polynomial.hpp"

namespace gorenstein {

template <FieldScalar K>
struct IdealPresentation {
  RingPtr ring;
  std::vector<Polynomial<K>> generators;

  IdealPresentation() = default;
  IdealPresentation(RingPtr r, std::vector<Polynomial<K>> gens) : ring(std::move(r)) {
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      if (!same_ring(g.ring(), ring)) throw Error(ErrorCode::RingMismatch, "generator outside the ideal's ring");
      generators.push_back(std::move(g));
    }
  }

  std::size_t size() const { return generators.size(); }
  bool is_zero() const { return generators.empty(); }

  std::vector<std::string> to_strings() const {
    std::vector<std::string> out;
    for (const auto& g : generators) out.push_back(g.to_string());
    return out;
  }
};

template <FieldScalar K>
Polynomial<K> change_ring(const Polynomial<K>& f, const RingPtr& target) {
  return Polynomial<K>(target, f.terms());
}

/// Full reduction of f modulo `basis` (any list; unique remainder when
/// `basis` is a Gröbner basis).
template <FieldScalar K>
Polynomial<K> normal_form(const Polynomial<K>& f, const std::vector<Polynomial<K>>& basis) {
  for (const auto& g : basis)
    if (!same_ring(g.ring(), f.ring()) && !f.is_zero()) throw Error(ErrorCode::RingMismatch, "normal form across rings");
  std::vector<typename Polynomial<K>::Term> rem;
  Polynomial<K> p = f;
  while (!p.is_zero()) {
    const Monomial& lm = p.leading_monomial();
    const Polynomial<K>* div = nullptr;
    for (const auto& g : basis)
      if (g.leading_monomial().divides(lm)) {
        div = &g;
        break;
      }
    if (div) {
      K c = p.leading_coefficient() / div->leading_coefficient();
      p = p - div->times(lm / div->leading_monomial(), c);
    } else {
      rem.push_back(p.terms().front());
      p = Polynomial<K>(p.ring(), std::vector<typename Polynomial<K>::Term>(p.terms().begin() + 1, p.terms().end()));
    }
  }
  return Polynomial<K>(f.ring(), std::move(rem));
}

template <FieldScalar K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g) {
  Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  auto one = K::from_int(1, f.ring()->field);
  return f.times(l / f.leading_monomial(), one / f.leading_coefficient()) -
         g.times(l / g.leading_monomial(), one / g.leading_coefficient());
}

/// Reduced Gröbner basis, monic, sorted ascending by leading monomial.
template <FieldScalar K>
std::vector<Polynomial<K>> groebner_basis(const std::vector<Polynomial<K>>& input) {
  std::vector<Polynomial<K>> G;
  for (const auto& f : input)
    if (!f.is_zero()) G.push_back(f.monic());
  if (G.empty()) return G;
  const auto& ring = G.front().ring();
  const auto& ord = ring->order;

  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace(i, j);

  auto chain_criterion = [&](std::size_t i, std::size_t j, const Monomial& l) {
    for (std::size_t k = 0; k < G.size(); ++k) {
      if (k == i || k == j) continue;
      if (!G[k].leading_monomial().divides(l)) continue;
      auto pik = std::minmax(i, k), pjk = std::minmax(j, k);
      if (!pairs.count({pik.first, pik.second}) && !pairs.count({pjk.first, pjk.second})) return true;
    }
    return false;
  };

  while (!pairs.empty()) {
    // normal selection: smallest lcm
    auto best = pairs.begin();
    Monomial best_l = Monomial::lcm(G[best->first].leading_monomial(), G[best->second].leading_monomial());
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
      Monomial l = Monomial::lcm(G[it->first].leading_monomial(), G[it->second].leading_monomial());
      if (ord.compare(l, best_l) < 0) {
        best = it;
        best_l = l;
      }
    }
    auto [i, j] = *best;
    pairs.erase(best);
    if (Monomial::coprime(G[i].leading_monomial(), G[j].leading_monomial())) continue;
    if (chain_criterion(i, j, best_l)) continue;
    auto h = normal_form(s_polynomial(G[i], G[j]), G);
    if (h.is_zero()) continue;
    G.push_back(h.monic());
    for (std::size_t k = 0; k + 1 < G.size(); ++k) pairs.emplace(k, G.size() - 1);
  }

  // minimalize
  std::vector<Polynomial<K>> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < G.size() && !redundant; ++k) {
      if (k == i) continue;
      if (G[k].leading_monomial().divides(G[i].leading_monomial())) {
        // keep the earlier of two equal leading monomials
        redundant = !(G[k].leading_monomial() == G[i].leading_monomial()) || k < i;
      }
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  // interreduce
  std::vector<Polynomial<K>> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial<K>> others;
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.push_back(minimal[k]);
    reduced.push_back(normal_form(minimal[i], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const auto& a, const auto& b) { return ord.compare(a.leading_monomial(), b.leading_monomial()) < 0; });
  return reduced;
}

template <FieldScalar K>
IdealPresentation<K> groebner_basis(const IdealPresentation<K>& I, const MonomialOrder& order) {
  if (order.kind == MonomialOrder::Kind::Elimination)
    throw Error(ErrorCode::UnsupportedOrder, "public Gröbner bases require a degree-compatible order");
  auto ring = order == I.ring->order ? I.ring : make_ring(I.ring->vars, I.ring->field, order);
  std::vector<Polynomial<K>> gens;
  for (const auto& g : I.generators) gens.push_back(change_ring(g, ring));
  return {ring, groebner_basis(gens)};
}

template <FieldScalar K>
IdealPresentation<K> groebner_basis(const IdealPresentation<K>& I) {
  return {I.ring, groebner_basis(I.generators)};
}

template <FieldScalar K>
bool ideal_contains(const std::vector<Polynomial<K>>& gb, const Polynomial<K>& f) {
  return normal_form(f, gb).is_zero();
}

/// Double inclusion test: every generator of each ideal reduces to zero
/// modulo a Gröbner basis of the other.
template <FieldScalar K>
bool ideals_equal(const IdealPresentation<K>& a, const IdealPresentation<K>& b) {
  auto ga = groebner_basis(a.generators), gb = groebner_basis(b.generators);
  for (const auto& g : a.generators)
    if (!ideal_contains(gb, g)) return false;
  for (const auto& g : b.generators)
    if (!ideal_contains(ga, g)) return false;
  return true;
}

template <FieldScalar K>
bool ideal_subset(const IdealPresentation<K>& a, const IdealPresentation<K>& b) {
  auto gb = groebner_basis(b.generators);
  return std::all_of(a.generators.begin(), a.generators.end(), [&](const auto& g) { return ideal_contains(gb, g); });
}

enum class IdealOp { Sum, Product, Intersection, Colon };

namespace detail {

template <FieldScalar K>
std::vector<Polynomial<K>> intersect(const RingPtr& ring, const std::vector<Polynomial<K>>& I, const std::vector<Polynomial<K>>& J) {
  if (I.empty() || J.empty()) return {};
  std::vector<std::string> vars{"_t"};
  while (ring->index_of(vars[0]) >= 0) vars[0] += "_";
  vars.insert(vars.end(), ring->vars.begin(), ring->vars.end());
  auto big = make_ring(vars, ring->field, MonomialOrder::elimination(1));
  auto t = Polynomial<K>::variable(big, 0);
  auto one = Polynomial<K>::constant(big, K::from_int(1, ring->field));
  std::vector<Polynomial<K>> gens;
  for (const auto& f : I) gens.push_back(t * f.embed(big));
  for (const auto& g : J) gens.push_back((one - t) * g.embed(big));
  std::vector<Polynomial<K>> out;
  for (const auto& g : groebner_basis(gens)) {
    if (g.leading_monomial().exps[0] != 0) continue;  // elimination: LM free of t => g free of t
    out.push_back(g.restrict_to(ring));
  }
  return groebner_basis(out);
}

}  // namespace detail

template <FieldScalar K>
IdealPresentation<K> ideal_ops(const IdealPresentation<K>& I, const IdealPresentation<K>& J, IdealOp which) {
  if (!same_ring(I.ring, J.ring)) throw Error(ErrorCode::RingMismatch, "ideal operation across rings");
  const auto& ring = I.ring;
  switch (which) {
    case IdealOp::Sum: {
      auto gens = I.generators;
      gens.insert(gens.end(), J.generators.begin(), J.generators.end());
      return {ring, groebner_basis(gens)};
    }
    case IdealOp::Product: {
      std::vector<Polynomial<K>> gens;
      for (const auto& f : I.generators)
        for (const auto& g : J.generators) gens.push_back(f * g);
      return {ring, groebner_basis(gens)};
    }
    case IdealOp::Intersection:
      return {ring, detail::intersect(ring, I.generators, J.generators)};
    case IdealOp::Colon: {
      // I : J = intersection over generators g of (I ∩ <g>) / g
      std::vector<Polynomial<K>> acc{Polynomial<K>::constant(ring, K::from_int(1, ring->field))};
      for (const auto& g : J.generators) {
        std::vector<Polynomial<K>> quo;
        for (const auto& h : detail::intersect(ring, I.generators, std::vector<Polynomial<K>>{g}))
          quo.push_back(h.divide_exact(g));
        acc = detail::intersect(ring, acc, groebner_basis(quo));
      }
      return {ring, groebner_basis(acc)};
    }
  }
  return {};
}

/// Standard monomials of a zero-dimensional ideal given by a Gröbner basis,
/// ascending in the ring's order (so 1 comes first).
template <FieldScalar K>
std::vector<Monomial> quotient_basis(const std::vector<Polynomial<K>>& gb, const RingPtr& ring, std::size_t cap = 100000) {
  const std::size_t n = ring->nvars();
  std::vector<int> bound(n, -1);
  for (const auto& g : gb) {
    const auto& m = g.leading_monomial();
    if (m.is_one()) return {};  // unit ideal
    int nz = -1, count = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (m.exps[i] > 0) {
        nz = static_cast<int>(i);
        ++count;
      }
    if (count == 1) {
      auto i = static_cast<std::size_t>(nz);
      bound[i] = bound[i] < 0 ? m.exps[i] : std::min(bound[i], m.exps[i]);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (bound[i] < 0) throw Error(ErrorCode::NotArtinian, "no pure power of " + ring->vars[i] + " among leading terms");

  std::vector<Monomial> out;
  Monomial cur = Monomial::one(n);
  auto is_standard = [&](const Monomial& m) {
    return std::none_of(gb.begin(), gb.end(), [&](const auto& g) { return g.leading_monomial().divides(m); });
  };
  // odometer over the box, pruning is unnecessary at desk scale
  for (;;) {
    if (is_standard(cur)) {
      out.push_back(cur);
      if (out.size() > cap) throw Error(ErrorCode::ResourceLimit, "quotient dimension exceeds cap");
    }
    std::size_t i = 0;
    while (i < n) {
      if (++cur.exps[i] < bound[i]) break;
      cur.exps[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ring->order.compare(a, b) < 0; });
  return out;
}

template <FieldScalar K>
std::vector<Monomial> quotient_basis(const IdealPresentation<K>& I) {
  return quotient_basis(groebner_basis(I.generators), I.ring);
}

}  // namespace gorenstein
