#pragma once

#include <random>
#include <string>
#include <vector>

#include "gorenstein/gorenstein.hpp"

namespace testing_support {

using namespace gorenstein;
using QA = ArtinAlgebra<Rational>;

inline const FieldSpec kQ = FieldSpec::rationals();
inline const FieldSpec kF = FieldSpec::prime(32003);

template <FieldScalar K = Rational>
ArtinAlgebra<K> ring(const std::vector<std::string>& vars, const std::vector<std::string>& gens, const FieldSpec& f = kQ) {
  return ArtinAlgebra<K>::from_presentation(vars, gens, f);
}

inline std::string examples_dir() { return GORENSTEIN_EXAMPLES_DIR; }

inline QA example(const std::string& name) {
  return load_algebra<Rational>(read_ring_file(examples_dir() + "/" + name + ".ring"));
}

/// Q re-presented after the substitution x_i -> images[i] (polynomials in
/// the variables of Q whose linear parts are invertible).
template <FieldScalar K>
ArtinAlgebra<K> change_coordinates(const ArtinAlgebra<K>& Q, const std::vector<std::string>& images) {
  std::vector<DenseVec<K>> v;
  for (const auto& s : images) v.push_back(Q.element(s));
  return Q.presented_algebra(v, Q.ring()->vars);
}

/// A seeded unipotent-plus-quadratic coordinate change of Q.
template <FieldScalar K>
ArtinAlgebra<K> scramble(const ArtinAlgebra<K>& Q, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  const auto& vars = Q.ring()->vars;
  const std::size_t n = vars.size();
  std::vector<std::string> images;
  for (std::size_t i = 0; i < n; ++i) {
    std::string s = vars[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (j > i) {
        if (int c = coef(rng)) s += " + (" + std::to_string(c) + ")*" + vars[j];
      }
      if (int c = coef(rng)) s += " + (" + std::to_string(c) + ")*" + vars[j] + "^2";
    }
    images.push_back(s);
  }
  return change_coordinates(Q, images);
}

/// Gorenstein components for connected sums, on variables prefix1, prefix2, ...
/// Mixes hypersurfaces, Loewy length two rings and apolar algebras of
/// stretched, short and general dual polynomials.
template <FieldScalar K>
std::vector<ArtinAlgebra<K>> component_pool(const std::string& prefix, std::uint64_t seed, const FieldSpec& f, int max_edim,
                                           int max_loewy) {
  std::vector<ArtinAlgebra<K>> out;
  const std::string x1 = prefix + "1", x2 = prefix + "2";
  for (int a = 3; a <= max_loewy + 1; ++a) out.push_back(ring<K>({x1}, {x1 + "^" + std::to_string(a)}, f));
  if (max_edim >= 2) {
    out.push_back(ring<K>({x1, x2}, {x1 + "*" + x2, x1 + "^2 - " + x2 + "^2"}, f));
    out.push_back(ring<K>({x1, x2}, {x1 + "^2", x2 + "^2"}, f));
  }
  auto add = [&](CorpusProfile profile, int h, int s, int n, std::uint64_t sd, std::size_t count) {
    if (h > max_edim || s > max_loewy) return;
    CorpusParams p;
    p.h = h;
    p.s = s;
    p.n = n;
    p.count = count;
    p.height = 5;
    p.prefix = prefix;
    for (auto& e : random_corpus<K>(profile, p, sd, f)) out.push_back(std::move(e.algebra));
  };
  add(CorpusProfile::Stretched, 2, 3, 0, seed + 1, 2);
  add(CorpusProfile::Stretched, 2, 4, 0, seed + 2, 1);
  add(CorpusProfile::Stretched, 2, 5, 0, seed + 3, 1);
  add(CorpusProfile::Short, 2, 3, 2, seed + 4, 2);
  add(CorpusProfile::General, 2, 4, 0, seed + 5, 1);
  add(CorpusProfile::Stretched, 3, 3, 0, seed + 6, 1);
  add(CorpusProfile::Short, 3, 3, 2, seed + 7, 1);
  return out;
}

/// Certificate describing connected_sum(R, S, {.u = u}) in the variables of R and S.
template <FieldScalar K>
DecompositionCertificate<K> direct_certificate(const ArtinAlgebra<K>& Q, const ArtinAlgebra<K>& R, const ArtinAlgebra<K>& S,
                                               const K& u) {
  DecompositionCertificate<K> c;
  c.y_vars = R.ring()->vars;
  c.z_vars = S.ring()->vars;
  for (std::size_t i = 0; i < Q.nvars(); ++i)
    (i < R.nvars() ? c.y_images : c.z_images).push_back(Polynomial<K>::variable(Q.ring(), i));
  c.Q_ideal = Q.minimal_presentation();
  c.R_ideal = R.presentation();
  c.S_ideal = S.presentation();
  c.delta_R = R.lift(default_socle_generator(R));
  c.delta_S = u * S.lift(default_socle_generator(S));
  c.phi = phi_correction(R.edim(), S.edim());
  c.provenance = "direct";
  return c;
}

inline long choose(long n, long k) { return binomial(n, k); }

}  // namespace testing_support
