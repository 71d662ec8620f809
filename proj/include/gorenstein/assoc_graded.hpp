#pragma once

// Associated graded rings gr(Q), Iarrobino's ideal C with the quotient Q0,
// and recognition of graded fibre-product splits G = A x_k B.

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "gorenstein/artin_algebra.hpp"

namespace gorenstein {

/// A standard graded algebra k[Y]/I with I homogeneous. The standard
/// monomials of the underlying algebra form a homogeneous basis.
template <FieldScalar K>
class GradedAlgebra {
 public:
  using Vec = DenseVec<K>;

  GradedAlgebra() = default;
  explicit GradedAlgebra(const IdealPresentation<K>& pres) {
    for (const auto& g : pres.generators)
      if (!g.is_homogeneous()) throw Error(ErrorCode::InvalidArgument, "generator " + g.to_string() + " is not homogeneous");
    algebra_ = ArtinAlgebra<K>::from_presentation(pres);
  }

  const ArtinAlgebra<K>& algebra() const { return algebra_; }
  const IdealPresentation<K>& presentation() const { return algebra_.presentation(); }
  const RingPtr& ring() const { return algebra_.ring(); }
  std::size_t length() const { return algebra_.length(); }
  std::size_t nvars() const { return algebra_.nvars(); }
  int loewy_length() const { return algebra_.loewy_length(); }
  std::vector<std::size_t> hilbert() const { return algebra_.hilbert(); }

  int degree_of(std::size_t j) const { return algebra_.basis()[j].degree(); }
  std::vector<std::size_t> component(int d) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < length(); ++j)
      if (degree_of(j) == d) out.push_back(j);
    return out;
  }
  Vec homogeneous_part(const Vec& v, int d) const {
    Vec out(length());
    for (std::size_t j = 0; j < v.size(); ++j)
      if (degree_of(j) == d) out[j] = v[j];
    return out;
  }
  /// Element of G_1 with the given coordinates over the variables.
  Vec linear_form(const Vec& coords) const {
    Vec out(length());
    for (std::size_t v = 0; v < coords.size(); ++v) {
      if (coords[v].is_zero()) continue;
      auto x = algebra_.variable(v);
      for (std::size_t j = 0; j < out.size(); ++j) out[j] += coords[v] * x[j];
    }
    return out;
  }

 private:
  ArtinAlgebra<K> algebra_;
};

/// Homogeneous presentation of the graded object attached to the filtration
/// of M by its powers, modulo the subspace K0, on generators `images`:
/// in each degree d the kernel of P_d -> M / (m^{d+1} + K0), minimalized.
template <FieldScalar K>
IdealPresentation<K> initial_presentation(const ArtinAlgebra<K>& M, const std::vector<DenseVec<K>>& images,
                                          const Subspace<K>& K0, const std::vector<std::string>& names) {
  const std::size_t n = images.size();
  auto ring = make_ring(names, M.field());
  auto by_order = [&](const Monomial& a, const Monomial& b) { return ring->order.compare(a, b) < 0; };
  std::vector<Polynomial<K>> gens;
  std::map<Exponents, DenseVec<K>> prev_img;
  prev_img.emplace(Monomial::one(n).exps, M.unit());
  std::vector<Polynomial<K>> prev_kernel;
  for (int d = 1; d <= M.loewy_length() + 1; ++d) {
    auto monos = ArtinAlgebra<K>::monomials_of_degree(n, d);
    std::sort(monos.begin(), monos.end(), by_order);
    std::map<Exponents, int> idx;
    for (std::size_t i = 0; i < monos.size(); ++i) idx.emplace(monos[i].exps, static_cast<int>(i));
    const Subspace<K> L = M.power(d + 1) + K0;
    std::map<Exponents, DenseVec<K>> img;
    std::vector<SparseVec<K>> cols;
    for (const auto& m : monos) {
      std::size_t v = 0;
      while (m.exps[v] == 0) ++v;
      auto value = M.multiply(prev_img.at((m / Monomial::var(n, v)).exps), images[v]);
      cols.push_back(L.reduce(to_sparse(value)));
      img.emplace(m.exps, std::move(value));
    }
    auto ker = kernel(cols, M.length(), M.field());
    if (d == 1 && !ker.empty()) throw Error(ErrorCode::GeneratorsFail, "degree-one generators are linearly dependent");
    Subspace<K> lower(monos.size());
    for (const auto& p : prev_kernel)
      for (std::size_t v = 0; v < n; ++v) {
        auto q = p * Polynomial<K>::variable(ring, v);
        SparseVec<K> s;
        for (const auto& [mm, c] : q.terms()) s.emplace_back(idx.at(mm.exps), c);
        std::sort(s.begin(), s.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        lower.insert(s);
      }
    auto to_poly = [&](const SparseVec<K>& k) {
      std::vector<typename Polynomial<K>::Term> terms;
      for (const auto& [i, c] : k) terms.emplace_back(monos[static_cast<std::size_t>(i)], c);
      return Polynomial<K>(ring, std::move(terms)).monic();
    };
    std::vector<Polynomial<K>> ker_polys;
    for (const auto& k : ker) {
      ker_polys.push_back(to_poly(k));
      if (lower.insert(k)) gens.push_back(ker_polys.back());
    }
    prev_kernel = std::move(ker_polys);
    prev_img = std::move(img);
  }
  return IdealPresentation<K>(ring, std::move(gens));
}

/// gr(Q) presented on the variables of Q.
template <FieldScalar K>
GradedAlgebra<K> associated_graded(const ArtinAlgebra<K>& Q) {
  std::vector<DenseVec<K>> vars;
  for (std::size_t v = 0; v < Q.nvars(); ++v) vars.push_back(Q.variable(v));
  return GradedAlgebra<K>(initial_presentation(Q, vars, Subspace<K>(Q.length()), Q.ring()->vars));
}

/// Identifies m^d/m^{d+1} in Q with the degree-d piece of G = gr(Q).
template <FieldScalar K>
class InitialForms {
 public:
  using Vec = DenseVec<K>;

  InitialForms(const ArtinAlgebra<K>& Q, const GradedAlgebra<K>& G) : Q_(&Q), G_(&G) {
    const K one = K::from_int(1, Q.field());
    for (int d = 0; d <= G.loewy_length(); ++d) {
      comps_.push_back(G.component(d));
      std::vector<SparseVec<K>> imgs;
      for (auto j : comps_.back()) {
        auto x = Q.element(Polynomial<K>::monomial(Q.ring(), G.algebra().basis()[j], one));
        imgs.push_back(Q.power(d + 1).reduce(to_sparse(x)));
      }
      images_.push_back(std::move(imgs));
    }
  }

  /// Class of v (which must lie in m^d) in G_d.
  Vec degree_part(const Vec& v, int d) const {
    Vec out(G_->length());
    if (d < 0 || d > G_->loewy_length()) return out;
    auto target = Q_->power(d + 1).reduce(to_sparse(v));
    auto x = solve(images_[static_cast<std::size_t>(d)], target, Q_->length(), Q_->field());
    if (!x) throw Error(ErrorCode::InvalidArgument, "element does not lie in the requested power of m");
    for (const auto& [i, c] : *x) out[comps_[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)]] = c;
    return out;
  }
  Vec initial_form(const Vec& v) const { return degree_part(v, Q_->order_of(v)); }

  /// K* for an ideal K of Q.
  SubspaceIdeal<K> initial_ideal(const SubspaceIdeal<K>& Kid) const {
    Subspace<K> out(G_->length());
    for (int d = 0; d <= G_->loewy_length(); ++d) {
      auto part = Subspace<K>::intersection(Kid.span, Q_->power(d));
      for (const auto& r : part.rows()) out.insert(degree_part(to_dense(r, Q_->length()), d));
    }
    return G_->algebra().make_ideal(out);
  }

 private:
  const ArtinAlgebra<K>* Q_;
  const GradedAlgebra<K>* G_;
  std::vector<std::vector<std::size_t>> comps_;
  std::vector<std::vector<SparseVec<K>>> images_;
};

/// G / K0 presented on the given degree-one elements of G.
template <FieldScalar K>
GradedAlgebra<K> graded_quotient(const GradedAlgebra<K>& G, const Subspace<K>& K0, const std::vector<DenseVec<K>>& images,
                                 const std::vector<std::string>& names) {
  return GradedAlgebra<K>(initial_presentation(G.algebra(), images, K0, names));
}

/// G / K0 presented on a subset of G's variables.
template <FieldScalar K>
GradedAlgebra<K> graded_quotient(const GradedAlgebra<K>& G, const SubspaceIdeal<K>& K0) {
  Subspace<K> mod = K0.span + G.algebra().power(2);
  std::vector<DenseVec<K>> images;
  std::vector<std::string> names;
  for (std::size_t v = 0; v < G.nvars(); ++v)
    if (mod.insert(G.algebra().variable(v))) {
      images.push_back(G.algebra().variable(v));
      names.push_back(G.ring()->vars[v]);
    }
  return graded_quotient(G, K0.span, images, names);
}

template <FieldScalar K>
struct IarrobinoData {
  SubspaceIdeal<K> C;               // inside G
  std::vector<std::size_t> c_dims;  // dim C_i, i = 0..s
  GradedAlgebra<K> Q0;
};

/// C_i = ((0 : m^{s-i}) ∩ m^i) / ((0 : m^{s-i}) ∩ m^{i+1}) and Q0 = G/C.
template <FieldScalar K>
IarrobinoData<K> iarrobino_ideal(const ArtinAlgebra<K>& Q, const GradedAlgebra<K>& G) {
  if (!Q.is_gorenstein()) throw Error(ErrorCode::NotGorenstein, "Iarrobino's ideal needs a Gorenstein ring");
  const int s = Q.loewy_length();
  InitialForms<K> forms(Q, G);
  Subspace<K> C(G.length());
  std::vector<std::size_t> dims;
  for (int i = 0; i <= s; ++i) {
    auto ann = Q.annihilator(Q.power_ideal(s - i));
    auto L = Subspace<K>::intersection(ann.span, Q.power(i));
    Subspace<K> Ci(G.length());
    for (const auto& r : L.rows()) Ci.insert(forms.degree_part(to_dense(r, Q.length()), i));
    dims.push_back(Ci.dim());
    C = C + Ci;
  }
  auto Cid = G.algebra().make_ideal(C);
  return {Cid, dims, graded_quotient(G, Cid)};
}

/// G = A x_k B with m_A generated by U and m_B by W inside G_1.
template <FieldScalar K>
struct GradedSplit {
  std::vector<DenseVec<K>> u_basis;  // coordinates over the variables of G
  std::vector<DenseVec<K>> w_basis;
  GradedAlgebra<K> A;
  GradedAlgebra<K> B;
  int k_B = 0;
  std::string method;
};

namespace detail {

template <FieldScalar K>
double to_double(const K& x) {
  if constexpr (std::is_same_v<K, Rational>) {
    return x.value().get_d();
  } else {
    const auto p = x.modulus();
    const auto v = x.value();
    return v > p / 2 ? static_cast<double>(v) - static_cast<double>(p) : static_cast<double>(v);
  }
}

template <FieldScalar K>
DenseMat<K> shifted(const DenseMat<K>& m, const K& c) {
  DenseMat<K> out = m;
  for (std::size_t i = 0; i < m.size(); ++i) out[i][i] = out[i][i] - c;
  return out;
}

/// Eigenvalues of m lying in the coefficient field. Candidates come from a
/// floating-point eigensolver (rationalized by continued fractions) or, over
/// small prime fields, from exhaustive search; every returned value is
/// verified exactly.
template <FieldScalar K>
std::vector<K> field_eigenvalues(const DenseMat<K>& m, const FieldSpec& field) {
  const std::size_t r = m.size();
  std::vector<K> out;
  auto accept = [&](const K& c) {
    if (std::find(out.begin(), out.end(), c) != out.end()) return;
    if (mat_rank(shifted(m, c)) < r) out.push_back(c);
  };
  if (r == 0) return out;
  if (field.kind == FieldKind::PrimeField && field.characteristic <= 4096) {
    for (std::uint32_t c = 0; c < field.characteristic && out.size() < r; ++c) accept(K::from_int(c, field));
    return out;
  }
  Eigen::MatrixXd md(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) md(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = to_double(m[i][j]);
  Eigen::EigenSolver<Eigen::MatrixXd> es(md, false);
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const auto ev = es.eigenvalues()[i];
    if (std::abs(ev.imag()) > 1e-6 * std::max(1.0, std::abs(ev.real()))) continue;
    // continued-fraction convergents of the real part
    double x = ev.real();
    long h0 = 1, h1 = 0, k0 = 0, k1 = 1;
    for (int step = 0; step < 24; ++step) {
      double a = std::floor(x);
      if (std::abs(a) > 1e9) break;
      long ai = static_cast<long>(a);
      long h = ai * h0 + h1, k = ai * k0 + k1;
      h1 = h0;
      h0 = h;
      k1 = k0;
      k0 = k;
      if (k > 1000000) break;
      try {
        accept(K::from_fraction(mpz_class(h), mpz_class(k), field));
      } catch (const Error&) {
      }
      if (std::abs(static_cast<double>(h) / static_cast<double>(k) - ev.real()) < 1e-12) break;
      double frac = x - a;
      if (std::abs(frac) < 1e-12) break;
      x = 1.0 / frac;
    }
  }
  return out;
}

/// Checks that the blocks of degree-one elements give a fibre-product
/// decomposition: the ideals they generate multiply to zero pairwise and
/// their sum is direct.
template <FieldScalar K>
bool valid_split(const GradedAlgebra<K>& G, const std::vector<std::vector<DenseVec<K>>>& blocks) {
  const auto& A = G.algebra();
  std::vector<std::vector<DenseVec<K>>> elems;
  std::size_t total = 0, count = 0;
  for (const auto& b : blocks) {
    if (b.empty()) return false;
    std::vector<DenseVec<K>> e;
    for (const auto& c : b) e.push_back(G.linear_form(c));
    count += b.size();
    total += A.ideal_generated(e).dim();
    elems.push_back(std::move(e));
  }
  if (count != G.nvars() || total + 1 != A.length()) return false;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      for (const auto& u : elems[i])
        for (const auto& w : elems[j])
          if (!is_zero(A.multiply(u, w))) return false;
  return true;
}

template <FieldScalar K>
std::vector<DenseVec<K>> canonical_basis(const std::vector<DenseVec<K>>& vs, std::size_t n) {
  return Subspace<K>::span(n, vs).dense_basis();
}

/// Variable names for degree-one generators: reuse G's name when the
/// generator is a coordinate variable, otherwise a fresh prefixed name.
template <FieldScalar K>
std::vector<std::string> names_for(const GradedAlgebra<K>& G, const std::vector<DenseVec<K>>& basis,
                                   const std::string& prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::optional<std::size_t> unit;
    std::size_t nz = 0;
    for (std::size_t v = 0; v < basis[i].size(); ++v)
      if (!basis[i][v].is_zero()) {
        ++nz;
        unit = v;
      }
    if (nz == 1 && basis[i][*unit].is_one()) {
      names.push_back(G.ring()->vars[*unit]);
    } else {
      std::string name = prefix + std::to_string(i + 1);
      while (G.ring()->index_of(name) >= 0 || std::find(names.begin(), names.end(), name) != names.end()) name += "_";
      names.push_back(name);
    }
  }
  return names;
}

template <FieldScalar K>
GradedSplit<K> assemble_split(const GradedAlgebra<K>& G, std::vector<DenseVec<K>> U, std::vector<DenseVec<K>> W,
                              const std::string& method) {
  const auto& Alg = G.algebra();
  std::vector<DenseVec<K>> ue, we;
  for (const auto& c : U) ue.push_back(G.linear_form(c));
  for (const auto& c : W) we.push_back(G.linear_form(c));
  GradedSplit<K> s;
  s.A = graded_quotient(G, Alg.ideal_generated(we).span, ue, names_for(G, U, "U"));
  s.B = graded_quotient(G, Alg.ideal_generated(ue).span, we, names_for(G, W, "W"));
  s.u_basis = std::move(U);
  s.w_basis = std::move(W);
  s.k_B = s.B.loewy_length();
  s.method = method;
  return s;
}

}  // namespace detail

/// Matrices (on G_1, column j = image of the j-th variable) of the degree-0
/// G-linear endomorphisms of m_G.
template <FieldScalar K>
std::vector<DenseMat<K>> degree_zero_endomorphisms(const GradedAlgebra<K>& G) {
  const auto& A = G.algebra();
  const std::size_t n = G.nvars(), lam = G.length();
  const auto& basis = A.basis();
  const K one = K::from_int(1, A.field());
  std::vector<SparseVec<K>> residuals;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // phi(x_j) = x_i, phi(x_l) = 0 otherwise, propagated G-linearly
      std::vector<SparseVec<K>> phi(lam);
      for (std::size_t k = 1; k < lam; ++k) {
        const auto& m = basis[k];
        if (m.degree() == 1) {
          if (m.exps[j] == 1) phi[k] = A.variable_times_basis(i, 0);
          continue;
        }
        std::size_t v = 0;
        while (m.exps[v] == 0) ++v;
        phi[k] = A.multiply_by_variable(v, phi[A.index_of(m / Monomial::var(n, v))]);
      }
      SparseVec<K> res;
      for (std::size_t k = 1; k < lam; ++k)
        for (std::size_t v = 0; v < n; ++v) {
          SparseVec<K> lhs;
          for (const auto& [l, c] : A.variable_times_basis(v, k)) lhs = axpy(lhs, c, phi[static_cast<std::size_t>(l)]);
          auto diff = axpy(lhs, -one, A.multiply_by_variable(v, phi[k]));
          const int off = static_cast<int>((k * n + v) * lam);
          for (const auto& [l, c] : diff) res.emplace_back(off + l, c);
        }
      residuals.push_back(std::move(res));
    }
  auto ker = kernel(residuals, lam * lam * n, A.field());
  std::vector<DenseMat<K>> out;
  for (const auto& k : ker) {
    DenseMat<K> M(n, DenseVec<K>(n));
    for (const auto& [u, c] : k) M[static_cast<std::size_t>(u) / n][static_cast<std::size_t>(u) % n] = c;
    out.push_back(std::move(M));
  }
  return out;
}

/// Looks for a nontrivial decomposition G = A x_k B.
///
/// When dim(soc(G) ∩ m_G^2) = 1 and soc(G) ∩ G_1 ≠ 0 the split with
/// m_B = <soc(G) ∩ G_1> is returned directly. Otherwise m_G is decomposed as
/// a graded G-module by Fitting decompositions of degree-0 endomorphisms;
/// A is the summand of largest Loewy length (Gorenstein preferred on ties)
/// and B collects the rest. nullopt means no split was found, which is a
/// proof of indecomposability only when the endomorphism algebra is k.
template <FieldScalar K>
std::optional<GradedSplit<K>> graded_fibre_split(const GradedAlgebra<K>& G) {
  const std::size_t n = G.nvars();
  if (n < 2) return std::nullopt;
  const auto& Alg = G.algebra();
  const auto& field = Alg.field();

  Subspace<K> linear(G.length());
  for (std::size_t v = 0; v < n; ++v) linear.insert(Alg.variable(v));
  auto soc = Alg.socle();
  const std::size_t soc_m2 = Subspace<K>::intersection(soc.span, Alg.power(2)).dim();
  auto V = Subspace<K>::intersection(soc.span, linear);
  if (soc_m2 == 1 && V.dim() >= 1 && V.dim() < n) {
    // coordinates over the variables: x_v is basis vector index_of(X_v)
    std::vector<std::size_t> var_index;
    for (std::size_t v = 0; v < n; ++v) var_index.push_back(Alg.index_of(Monomial::var(n, v)));
    auto coords = [&](const DenseVec<K>& e) {
      DenseVec<K> c(n);
      for (std::size_t v = 0; v < n; ++v) c[v] = e[var_index[v]];
      return c;
    };
    std::vector<DenseVec<K>> W;
    for (const auto& r : V.dense_basis()) W.push_back(coords(r));
    W = detail::canonical_basis(W, n);
    Subspace<K> span = Subspace<K>::span(n, W);
    std::vector<DenseVec<K>> U;
    for (std::size_t v = 0; v < n; ++v) {
      DenseVec<K> e(n);
      e[v] = K::from_int(1, field);
      if (span.insert(e)) U.push_back(e);
    }
    return detail::assemble_split(G, U, W, "socle-degree-one");
  }

  auto E = degree_zero_endomorphisms(G);
  if (E.size() <= 1) return std::nullopt;
  std::vector<DenseMat<K>> candidates = E;
  std::mt19937 rng(20240607u);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int t = 0; t < 8; ++t) {
    DenseMat<K> M(n, DenseVec<K>(n));
    for (const auto& b : E) {
      K c = K::from_int(coef(rng), field);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) M[i][j] += c * b[i][j];
    }
    candidates.push_back(std::move(M));
  }

  std::vector<std::vector<DenseVec<K>>> blocks(1);
  for (std::size_t v = 0; v < n; ++v) {
    DenseVec<K> e(n);
    e[v] = K::from_int(1, field);
    blocks[0].push_back(e);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    // change of basis: columns are the block vectors in order
    DenseMat<K> P(n, DenseVec<K>(n));
    std::vector<std::size_t> start;
    std::size_t col = 0;
    for (const auto& b : blocks) {
      start.push_back(col);
      for (const auto& vec : b) {
        for (std::size_t i = 0; i < n; ++i) P[i][col] = vec[i];
        ++col;
      }
    }
    // invert P by solving against unit vectors
    DenseMat<K> Pinv(n, DenseVec<K>(n));
    {
      std::vector<SparseVec<K>> cols;
      for (std::size_t c = 0; c < n; ++c) {
        DenseVec<K> cv(n);
        for (std::size_t i = 0; i < n; ++i) cv[i] = P[i][c];
        cols.push_back(to_sparse(cv));
      }
      for (std::size_t i = 0; i < n; ++i) {
        DenseVec<K> e(n);
        e[i] = K::from_int(1, field);
        auto x = solve(cols, to_sparse(e), n, field);
        for (const auto& [c, a] : *x) Pinv[static_cast<std::size_t>(c)][i] = a;
      }
    }
    for (std::size_t b = 0; b < blocks.size() && !changed; ++b) {
      const std::size_t r = blocks[b].size();
      if (r < 2) continue;
      for (const auto& a : candidates) {
        auto full = mat_mul(Pinv, mat_mul(a, P));
        DenseMat<K> ab(r, DenseVec<K>(r));
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) ab[i][j] = full[start[b] + i][start[b] + j];
        for (const auto& c : detail::field_eigenvalues(ab, field)) {
          auto sh = detail::shifted(ab, c);
          auto pw = sh;
          for (std::size_t e = 1; e < r; ++e) pw = mat_mul(pw, sh);
          std::vector<SparseVec<K>> pcols;
          for (std::size_t j = 0; j < r; ++j) {
            DenseVec<K> cv(r);
            for (std::size_t i = 0; i < r; ++i) cv[i] = pw[i][j];
            pcols.push_back(to_sparse(cv));
          }
          auto ker = kernel(pcols, r, field);
          if (ker.empty() || ker.size() == r) continue;
          auto to_g1 = [&](const DenseVec<K>& x) {
            DenseVec<K> out(n);
            for (std::size_t j = 0; j < r; ++j)
              if (!x[j].is_zero())
                for (std::size_t i = 0; i < n; ++i) out[i] += x[j] * blocks[b][j][i];
            return out;
          };
          std::vector<DenseVec<K>> U1, U2;
          for (const auto& k : ker) U1.push_back(to_g1(to_dense(k, r)));
          for (const auto& row : Subspace<K>::span(r, pcols).dense_basis()) U2.push_back(to_g1(row));
          U1 = detail::canonical_basis(U1, n);
          U2 = detail::canonical_basis(U2, n);
          auto trial = blocks;
          trial[b] = U1;
          trial.insert(trial.begin() + static_cast<std::ptrdiff_t>(b) + 1, U2);
          if (detail::valid_split(G, trial)) {
            blocks = std::move(trial);
            changed = true;
            break;
          }
        }
        if (changed) break;
      }
    }
  }
  if (blocks.size() < 2) return std::nullopt;

  // choose A among the indecomposable summands
  std::size_t best = 0;
  int best_ll = -1;
  bool best_gor = false;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    std::vector<DenseVec<K>> others;
    for (std::size_t c = 0; c < blocks.size(); ++c)
      if (c != b) others.insert(others.end(), blocks[c].begin(), blocks[c].end());
    auto split = detail::assemble_split(G, blocks[b], others, "endomorphism");
    const int ll = split.A.loewy_length();
    const bool gor = split.A.algebra().is_gorenstein();
    if (ll > best_ll || (ll == best_ll && gor && !best_gor)) {
      best = b;
      best_ll = ll;
      best_gor = gor;
    }
  }
  std::vector<DenseVec<K>> W;
  for (std::size_t c = 0; c < blocks.size(); ++c)
    if (c != best) W.insert(W.end(), blocks[c].begin(), blocks[c].end());
  return detail::assemble_split(G, blocks[best], detail::canonical_basis(W, n), "endomorphism");
}

/// Re-read a presentation over another coefficient field.
template <FieldScalar K2, FieldScalar K1>
IdealPresentation<K2> change_field(const IdealPresentation<K1>& I, const FieldSpec& field) {
  auto ring = make_ring(I.ring->vars, field, I.ring->order);
  std::vector<Polynomial<K2>> gens;
  for (const auto& g : I.generators) gens.push_back(parse_polynomial<K2>(ring, g.to_string()));
  return IdealPresentation<K2>(ring, std::move(gens));
}

/// Exhaustive search over all pairs of complementary subspaces of G_1 for a
/// fibre-product split. Only feasible for tiny prime fields.
template <FieldScalar K>
std::optional<GradedSplit<K>> exhaustive_fibre_split(const GradedAlgebra<K>& G, std::size_t max_subspaces = 20000) {
  const auto& field = G.algebra().field();
  if (field.kind != FieldKind::PrimeField) throw Error(ErrorCode::InvalidArgument, "exhaustive search needs a prime field");
  const std::size_t n = G.nvars();
  const std::uint32_t p = field.characteristic;
  // enumerate subspaces in reduced echelon form
  std::vector<std::vector<DenseVec<K>>> subspaces;
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(r), true);
    do {
      std::vector<std::size_t> piv;
      for (std::size_t i = 0; i < n; ++i)
        if (mask[i]) piv.push_back(i);
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = piv[i] + 1; j < n; ++j)
          if (!mask[j]) free.emplace_back(i, j);
      std::vector<std::uint32_t> digits(free.size(), 0);
      while (true) {
        if (subspaces.size() > max_subspaces) throw Error(ErrorCode::ResourceLimit, "too many subspaces to enumerate");
        std::vector<DenseVec<K>> rows(r, DenseVec<K>(n));
        for (std::size_t i = 0; i < r; ++i) rows[i][piv[i]] = K::from_int(1, field);
        for (std::size_t f = 0; f < free.size(); ++f) rows[free[f].first][free[f].second] = K::from_int(digits[f], field);
        subspaces.push_back(std::move(rows));
        std::size_t f = 0;
        while (f < digits.size() && ++digits[f] == p) digits[f++] = 0;
        if (f == digits.size()) break;
      }
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  for (const auto& U : subspaces)
    for (const auto& W : subspaces) {
      if (U.size() + W.size() != n) continue;
      auto all = U;
      all.insert(all.end(), W.begin(), W.end());
      if (mat_rank(all) != n) continue;
      if (detail::valid_split(G, {U, W})) return detail::assemble_split(G, U, W, "exhaustive");
    }
  return std::nullopt;
}

}  // namespace gorenstein
