#pragma once

// Artinian local algebras Q = k[[X]]/I as explicit finite-dimensional
// linear algebra: standard-monomial basis, structure constants, the
// m-adic filtration, socle, annihilators and presentations.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gorenstein/groebner.hpp"
#include "gorenstein/linalg.hpp"

namespace gorenstein {

struct InvariantReport {
  std::size_t length = 0;
  std::size_t edim = 0;
  std::size_t type = 0;
  int loewy_length = 0;
  std::vector<std::size_t> hilbert;
  bool gorenstein = false;
  bool stretched = false;
  bool short_ring = false;
  bool complete_intersection = false;
  std::size_t mu_ideal = 0;  // minimal number of generators of the presentation ideal

  bool operator==(const InvariantReport&) const = default;
};

template <FieldScalar K>
class ArtinAlgebra;

/// A k-subspace of an algebra, flagged when it is closed under
/// multiplication by the algebra (checked on construction).
template <FieldScalar K>
struct SubspaceIdeal {
  Subspace<K> span;
  bool is_ideal = false;

  std::size_t dim() const { return span.dim(); }
  bool operator==(const SubspaceIdeal& o) const { return span == o.span; }
};

template <FieldScalar K>
class ArtinAlgebra {
 public:
  using Vec = DenseVec<K>;

  /// Build from a Cohen presentation k[[vars]]/<gens>. Non-local polynomial
  /// quotients are localized at the origin.
  static ArtinAlgebra from_presentation(const std::vector<std::string>& vars, const std::vector<std::string>& gens,
                                        const FieldSpec& field) {
    auto ring = make_ring(vars, field);
    std::vector<Polynomial<K>> polys;
    for (std::size_t i = 0; i < gens.size(); ++i) polys.push_back(parse_polynomial<K>(ring, gens[i], static_cast<int>(i + 1)));
    return from_presentation(IdealPresentation<K>(ring, std::move(polys)));
  }

  static ArtinAlgebra from_presentation(IdealPresentation<K> pres) {
    ArtinAlgebra A;
    if (pres.ring->order != MonomialOrder::degrevlex()) {
      auto ring = make_ring(pres.ring->vars, pres.ring->field);
      std::vector<Polynomial<K>> g;
      for (const auto& p : pres.generators) g.push_back(change_ring(p, ring));
      pres = IdealPresentation<K>(ring, std::move(g));
    }
    for (const auto& g : pres.generators)
      if (g.order() < 2)
        throw Error(ErrorCode::NotCohen, "generator " + g.to_string() + " has a constant or linear term");
    A.ring_ = pres.ring;
    A.presentation_ = pres;
    A.gb_ = localize(pres);
    A.build();
    if (A.hilbert().size() > 1 && A.hilbert()[1] != A.ring_->nvars())
      throw Error(ErrorCode::NotCohen, "embedding dimension drops: the ideal is not contained in m^2");
    if (A.ring_->nvars() > 0 && A.length() == 1)
      throw Error(ErrorCode::NotCohen, "embedding dimension drops: the ideal is not contained in m^2");
    return A;
  }

  /// From a reduced degrevlex Gröbner basis of an m-primary ideal. No Cohen
  /// check: the embedding dimension may be smaller than the number of
  /// variables.
  static ArtinAlgebra from_groebner_basis(const RingPtr& ring, std::vector<Polynomial<K>> gb,
                                          std::optional<IdealPresentation<K>> presentation = std::nullopt) {
    if (ring->order != MonomialOrder::degrevlex()) throw Error(ErrorCode::UnsupportedOrder, "expected degrevlex");
    ArtinAlgebra A;
    A.ring_ = ring;
    A.presentation_ = presentation ? std::move(*presentation) : IdealPresentation<K>(ring, gb);
    A.gb_ = std::move(gb);
    A.build();
    return A;
  }

  // ---- basic data -------------------------------------------------------

  const RingPtr& ring() const { return ring_; }
  const FieldSpec& field() const { return ring_->field; }
  const IdealPresentation<K>& presentation() const { return presentation_; }
  /// Reduced Gröbner basis of the (m-primary) defining ideal.
  const std::vector<Polynomial<K>>& groebner() const { return gb_; }
  IdealPresentation<K> local_ideal() const { return {ring_, gb_}; }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t length() const { return basis_.size(); }
  std::size_t nvars() const { return ring_->nvars(); }
  int loewy_length() const { return loewy_; }
  const std::vector<Subspace<K>>& filtration() const { return powers_; }
  /// m^i for any i >= 0 (zero beyond the Loewy length).
  const Subspace<K>& power(int i) const {
    return powers_[static_cast<std::size_t>(std::min<int>(i, static_cast<int>(powers_.size()) - 1))];
  }

  K one_scalar() const { return K::from_int(1, field()); }
  Vec zero() const { return Vec(length()); }
  Vec unit() const {
    Vec v(length());
    v[0] = one_scalar();
    return v;
  }
  Vec basis_vector(std::size_t j) const {
    Vec v(length());
    v[j] = one_scalar();
    return v;
  }
  Vec variable(std::size_t v) const { return to_dense(var_mult_[v][0], length()); }

  const SparseVec<K>& product_of_basis(std::size_t i, std::size_t j) const { return table_[i * length() + j]; }
  const SparseVec<K>& variable_times_basis(std::size_t v, std::size_t j) const { return var_mult_[v][j]; }

  Vec multiply(const Vec& a, const Vec& b) const {
    Vec out(length());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j].is_zero()) continue;
        K c = a[i] * b[j];
        for (const auto& [l, t] : table_[i * length() + j]) out[static_cast<std::size_t>(l)] += c * t;
      }
    }
    return out;
  }
  SparseVec<K> multiply(const SparseVec<K>& a, const SparseVec<K>& b) const {
    std::map<int, K> acc;
    for (const auto& [i, x] : a)
      for (const auto& [j, y] : b) {
        K c = x * y;
        for (const auto& [l, t] : table_[static_cast<std::size_t>(i) * length() + static_cast<std::size_t>(j)]) {
          auto& slot = acc[l];
          slot = slot + c * t;
        }
      }
    SparseVec<K> out;
    for (auto& [l, c] : acc)
      if (!c.is_zero()) out.emplace_back(l, std::move(c));
    return out;
  }
  SparseVec<K> multiply_by_variable(std::size_t v, const SparseVec<K>& a) const {
    SparseVec<K> out;
    for (const auto& [j, c] : a) out = axpy(out, c, var_mult_[v][static_cast<std::size_t>(j)]);
    return out;
  }
  Vec multiply_by_variable(std::size_t v, const Vec& a) const { return to_dense(multiply_by_variable(v, to_sparse(a)), length()); }
  Vec power(const Vec& a, int e) const {
    Vec r = unit();
    for (int i = 0; i < e; ++i) r = multiply(r, a);
    return r;
  }

  /// Coordinates of the image of a polynomial in this algebra's ring.
  Vec element(const Polynomial<K>& f) const {
    if (!same_ring(f.ring(), ring_)) throw Error(ErrorCode::RingMismatch, "polynomial outside the algebra's ring");
    auto nf = normal_form(f, gb_);
    Vec v(length());
    for (const auto& [m, c] : nf.terms()) v[index_of(m)] = c;
    return v;
  }
  Vec element(const std::string& text) const { return element(parse_polynomial<K>(ring_, text)); }

  /// The polynomial supported on standard monomials representing v.
  Polynomial<K> lift(const Vec& v) const {
    std::vector<typename Polynomial<K>::Term> terms;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) terms.emplace_back(basis_[j], v[j]);
    return Polynomial<K>(ring_, std::move(terms));
  }

  /// Image of f(Y_1..Y_n) under Y_i -> images[i].
  Vec evaluate(const Polynomial<K>& f, const std::vector<Vec>& images) const {
    Vec out(length());
    std::map<std::vector<int>, Vec> cache;
    for (const auto& [m, c] : f.terms()) {
      Vec t = unit();
      for (std::size_t i = 0; i < m.exps.size(); ++i)
        for (int e = 0; e < m.exps[i]; ++e) t = multiply(t, images[i]);
      for (std::size_t j = 0; j < out.size(); ++j) out[j] += c * t[j];
    }
    return out;
  }

  std::size_t index_of(const Monomial& m) const {
    auto it = index_.find(m.exps);
    if (it == index_.end()) throw Error(ErrorCode::InvalidArgument, "monomial is not standard");
    return it->second;
  }

  /// Largest i with v in m^i; -1 for v = 0.
  int order_of(const Vec& v) const {
    if (is_zero(v)) return -1;
    int i = 0;
    while (i + 1 < static_cast<int>(powers_.size()) && powers_[static_cast<std::size_t>(i + 1)].contains(v)) ++i;
    return i;
  }

  std::vector<std::size_t> hilbert() const {
    std::vector<std::size_t> h;
    for (int i = 0; i <= loewy_; ++i) h.push_back(power(i).dim() - power(i + 1).dim());
    return h;
  }
  std::size_t edim() const { return loewy_ >= 1 ? hilbert()[1] : 0; }

  // ---- ideals -------------------------------------------------------------

  SubspaceIdeal<K> make_ideal(const Subspace<K>& s) const {
    SubspaceIdeal<K> I{s, true};
    for (const auto& r : s.rows())
      for (std::size_t v = 0; v < nvars() && I.is_ideal; ++v)
        if (!s.contains(multiply_by_variable(v, r))) I.is_ideal = false;
    return I;
  }
  SubspaceIdeal<K> ideal_generated(const std::vector<Vec>& gens) const {
    Subspace<K> s(length());
    for (const auto& g : gens)
      for (std::size_t j = 0; j < length(); ++j) s.insert(multiply(basis_vector(j), g));
    return {s, true};
  }
  SubspaceIdeal<K> maximal_ideal() const { return {power(1), true}; }
  SubspaceIdeal<K> power_ideal(int i) const { return {power(i), true}; }
  SubspaceIdeal<K> zero_ideal() const { return {Subspace<K>(length()), true}; }

  SubspaceIdeal<K> socle() const {
    std::vector<SparseVec<K>> images;
    const auto n = static_cast<int>(length());
    for (std::size_t j = 0; j < length(); ++j) {
      SparseVec<K> img;
      for (std::size_t v = 0; v < nvars(); ++v)
        for (const auto& [l, c] : var_mult_[v][j]) img.emplace_back(static_cast<int>(v) * n + l, c);
      images.push_back(std::move(img));
    }
    return {Subspace<K>::span(length(), kernel(images, length() * nvars(), field())), true};
  }

  std::size_t type() const { return socle().dim(); }
  bool is_gorenstein() const { return type() == 1; }

  /// (0 :_A K)
  SubspaceIdeal<K> annihilator(const SubspaceIdeal<K>& Kid) const {
    const auto& rows = Kid.span.rows();
    const auto n = static_cast<int>(length());
    std::vector<SparseVec<K>> images;
    for (std::size_t j = 0; j < length(); ++j) {
      SparseVec<K> img;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        SparseVec<K> prod;
        for (const auto& [l, c] : rows[r]) prod = axpy(prod, c, table_[j * length() + static_cast<std::size_t>(l)]);
        for (const auto& [l, c] : prod) img.emplace_back(static_cast<int>(r) * n + l, c);
      }
      images.push_back(std::move(img));
    }
    return {Subspace<K>::span(length(), kernel(images, length() * std::max<std::size_t>(rows.size(), 1), field())), true};
  }
  SubspaceIdeal<K> annihilator(const Vec& x) const { return annihilator(ideal_generated({x})); }

  SubspaceIdeal<K> sum(const SubspaceIdeal<K>& a, const SubspaceIdeal<K>& b) const {
    return {a.span + b.span, a.is_ideal && b.is_ideal};
  }
  SubspaceIdeal<K> intersection(const SubspaceIdeal<K>& a, const SubspaceIdeal<K>& b) const {
    return {Subspace<K>::intersection(a.span, b.span), a.is_ideal && b.is_ideal};
  }
  SubspaceIdeal<K> product(const SubspaceIdeal<K>& a, const SubspaceIdeal<K>& b) const {
    Subspace<K> s(length());
    for (const auto& r : a.span.rows())
      for (const auto& t : b.span.rows()) s.insert(multiply(r, t));
    return {s, true};
  }
  SubspaceIdeal<K> ideal_power(const SubspaceIdeal<K>& a, int e) const {
    if (e == 0) return {Subspace<K>::span(length(), std::vector<Vec>{unit()}) + power(0), true};
    SubspaceIdeal<K> r = a;
    for (int i = 1; i < e; ++i) r = product(r, a);
    return r;
  }
  /// m * K
  SubspaceIdeal<K> times_maximal(const SubspaceIdeal<K>& a) const {
    Subspace<K> s(length());
    for (const auto& r : a.span.rows())
      for (std::size_t v = 0; v < nvars(); ++v) s.insert(multiply_by_variable(v, r));
    return {s, true};
  }
  /// Minimal number of generators via Nakayama: dim K - dim mK.
  std::size_t mu(const SubspaceIdeal<K>& a) const { return a.dim() - times_maximal(a).dim(); }

  // ---- presentations ----------------------------------------------------

  /// Kernel of k[[Y_1..Y_n]] -> A, Y_i -> images[i], minimally generated.
  /// `names` default to Y1..Yn.
  IdealPresentation<K> presentation_ideal(const std::vector<Vec>& images, std::vector<std::string> names = {}) const {
    return presentation_ideal_of(*this, images, std::move(names));
  }

  /// Kernel of k[[Y]] -> A for images that need not generate A: a
  /// presentation of the subalgebra k[images].
  IdealPresentation<K> subalgebra_presentation(const std::vector<Vec>& images, std::vector<std::string> names = {}) const {
    return presentation_ideal_of(*this, images, std::move(names), false);
  }

  /// k[[Y]] / ker(Y_i -> images[i]) as an algebra; the images must minimally
  /// generate the maximal ideal.
  ArtinAlgebra presented_algebra(const std::vector<Vec>& images, std::vector<std::string> names = {}) const {
    return image_algebra(*this, images, std::move(names), true);
  }

  /// The subalgebra k[images] with its presentation on Y_i -> images[i].
  ArtinAlgebra subalgebra(const std::vector<Vec>& images, std::vector<std::string> names = {}) const {
    return image_algebra(*this, images, std::move(names), false);
  }

  /// Cohen presentation of A on its own variables, minimally generated.
  IdealPresentation<K> minimal_presentation() const {
    std::vector<Vec> vars;
    for (std::size_t v = 0; v < nvars(); ++v) vars.push_back(variable(v));
    return presentation_ideal(vars, ring_->vars);
  }

  /// A / K with a fresh Cohen presentation on a subset of this algebra's
  /// variable names.
  ArtinAlgebra quotient(const SubspaceIdeal<K>& Kid) const {
    if (!Kid.is_ideal) throw Error(ErrorCode::NotAnIdeal, "quotient by a subspace that is not an ideal");
    if (Kid.span.contains(unit())) throw Error(ErrorCode::ImproperIdeal, "quotient by the whole algebra");
    Subspace<K> mod = Kid.span + power(2);
    std::vector<Vec> images;
    std::vector<std::string> names;
    for (std::size_t v = 0; v < nvars(); ++v) {
      if (mod.insert(variable(v))) {
        images.push_back(variable(v));
        names.push_back(ring_->vars[v]);
      }
    }
    return quotient_with_generators(Kid, images, names);
  }

  /// A / K presented on the given generator images (which must generate
  /// the maximal ideal of A/K minimally).
  ArtinAlgebra quotient_with_generators(const SubspaceIdeal<K>& Kid, const std::vector<Vec>& images,
                                        const std::vector<std::string>& names) const {
    QuotientModel qm(*this, Kid.span);
    return image_algebra(qm, qm.project_all(images), names, true);
  }

  InvariantReport invariants() const {
    InvariantReport r;
    r.length = length();
    r.hilbert = hilbert();
    r.edim = edim();
    r.loewy_length = loewy_;
    r.type = type();
    r.gorenstein = r.type == 1;
    bool tail_ones = loewy_ >= 2;
    for (int i = 2; i <= loewy_; ++i)
      if (r.hilbert[static_cast<std::size_t>(i)] != 1) tail_ones = false;
    r.stretched = r.gorenstein && tail_ones;
    r.short_ring = r.gorenstein && loewy_ <= 3;
    r.mu_ideal = minimal_presentation().size();
    r.complete_intersection = r.mu_ideal == r.edim;
    return r;
  }

  /// Minimal model of an algebra given only by a linear quotient; used to
  /// present A/K without first presenting it.
  class QuotientModel {
   public:
    QuotientModel(const ArtinAlgebra& parent, Subspace<K> kernel) : A_(parent), K_(std::move(kernel)) {
      auto piv = K_.pivots();
      std::vector<bool> is_pivot(A_.length(), false);
      for (int p : piv) is_pivot[static_cast<std::size_t>(p)] = true;
      for (std::size_t j = 0; j < A_.length(); ++j)
        if (!is_pivot[j]) {
          coord_of_.emplace(j, keep_.size());
          keep_.push_back(j);
        }
    }
    std::size_t length() const { return keep_.size(); }
    int loewy_length() const { return A_.loewy_length(); }
    const FieldSpec& field() const { return A_.field(); }
    Vec unit() const { return project(A_.unit()); }
    Vec project(const Vec& v) const {
      auto r = K_.reduce(to_sparse(v));
      Vec out(keep_.size());
      for (const auto& [i, c] : r) out[coord_of_.at(static_cast<std::size_t>(i))] = c;
      return out;
    }
    std::vector<Vec> project_all(const std::vector<Vec>& vs) const {
      std::vector<Vec> out;
      for (const auto& v : vs) out.push_back(project(v));
      return out;
    }
    Vec embed(const Vec& q) const {
      Vec out(A_.length());
      for (std::size_t i = 0; i < keep_.size(); ++i) out[keep_[i]] = q[i];
      return out;
    }
    Vec multiply(const Vec& a, const Vec& b) const { return project(A_.multiply(embed(a), embed(b))); }

   private:
    const ArtinAlgebra& A_;
    Subspace<K> K_;
    std::vector<std::size_t> keep_;
    std::map<std::size_t, std::size_t> coord_of_;
  };

 private:
  /// Gröbner basis of an m-primary ideal defining the localization at the
  /// origin.
  static std::vector<Polynomial<K>> localize(const IdealPresentation<K>& pres) {
    const auto& ring = pres.ring;
    const std::size_t n = ring->nvars();
    auto gb = groebner_basis(pres.generators);
    if (n == 0) return gb;
    std::optional<std::size_t> dim;
    try {
      dim = quotient_basis(gb, ring).size();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotArtinian) throw;
    }
    if (dim) {
      bool nilpotent = true;
      for (std::size_t v = 0; v < n && nilpotent; ++v) {
        auto x = Polynomial<K>::variable(ring, v);
        auto p = x;
        std::size_t steps = 0;
        while (!p.is_zero() && steps++ <= *dim) p = normal_form(p * x, gb);
        nilpotent = p.is_zero();
      }
      if (nilpotent) return gb;
    }
    // Q/m^N stabilizes exactly when m^N Q = 0.
    std::size_t prev = 0;
    std::vector<Polynomial<K>> prev_gb;
    for (int N = 1; N <= 64; ++N) {
      auto gens = pres.generators;
      for (const auto& m : monomials_of_degree(n, N))
        gens.push_back(Polynomial<K>::monomial(ring, m, K::from_int(1, ring->field)));
      auto g = groebner_basis(gens);
      std::size_t len = quotient_basis(g, ring).size();
      if (N > 1 && len == prev) return prev_gb;
      if (len > 20000) break;
      prev = len;
      prev_gb = std::move(g);
    }
    throw Error(ErrorCode::NotLocalArtinian, "the localization at the origin is not Artinian within the search bound");
  }

 public:
  static std::vector<Monomial> monomials_of_degree(std::size_t n, int d) {
    std::vector<Monomial> out;
    if (n == 0) {
      if (d == 0) out.push_back(Monomial());
      return out;
    }
    Exponents e(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
      if (i + 1 == n) {
        e[i] = left;
        out.emplace_back(e);
        return;
      }
      for (int k = left; k >= 0; --k) {
        e[i] = k;
        rec(i + 1, left - k);
      }
    };
    rec(0, d);
    return out;
  }

 private:
  void build() {
    basis_ = quotient_basis(gb_, ring_);
    for (std::size_t j = 0; j < basis_.size(); ++j) index_.emplace(basis_[j].exps, j);
    const std::size_t lam = basis_.size(), n = nvars();
    var_mult_.assign(n, std::vector<SparseVec<K>>(lam));
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t j = 0; j < lam; ++j) {
        Monomial m = basis_[j] * Monomial::var(n, v);
        auto it = index_.find(m.exps);
        if (it != index_.end()) {
          var_mult_[v][j] = {{static_cast<int>(it->second), one_scalar()}};
          continue;
        }
        auto nf = normal_form(Polynomial<K>::monomial(ring_, m, one_scalar()), gb_);
        SparseVec<K> s;
        for (const auto& [mm, c] : nf.terms()) s.emplace_back(static_cast<int>(index_of(mm)), c);
        std::sort(s.begin(), s.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        var_mult_[v][j] = std::move(s);
      }
    // table[i][j] = b_i * b_j, built by peeling one variable off b_j
    table_.assign(lam * lam, {});
    for (std::size_t i = 0; i < lam; ++i) table_[i * lam + 0] = {{static_cast<int>(i), one_scalar()}};
    for (std::size_t j = 1; j < lam; ++j) {
      std::size_t v = 0;
      while (basis_[j].exps[v] == 0) ++v;
      std::size_t prev = index_of(basis_[j] / Monomial::var(n, v));
      for (std::size_t i = 0; i < lam; ++i) table_[i * lam + j] = multiply_by_variable(v, table_[i * lam + prev]);
    }
    // filtration
    powers_.clear();
    Subspace<K> whole(lam);
    for (std::size_t j = 0; j < lam; ++j) whole.insert(basis_vector(j));
    powers_.push_back(whole);
    Subspace<K> m(lam);
    for (std::size_t j = 1; j < lam; ++j) m.insert(basis_vector(j));
    powers_.push_back(m);
    while (powers_.back().dim() > 0) {
      Subspace<K> next(lam);
      for (const auto& r : powers_.back().rows())
        for (std::size_t v = 0; v < n; ++v) next.insert(multiply_by_variable(v, r));
      powers_.push_back(std::move(next));
    }
    loewy_ = static_cast<int>(powers_.size()) - 2;
  }

  /// Algebra presented by Y_i -> images[i] in A. The reduced Gröbner basis of
  /// the kernel comes from linear algebra on the images of monomials taken in
  /// increasing degrevlex order: a monomial is standard when its image is
  /// independent of the images of earlier standard monomials.
  template <typename Model>
  static ArtinAlgebra image_algebra(const Model& A, const std::vector<Vec>& images, std::vector<std::string> names,
                                    bool must_generate) {
    auto pres = presentation_ideal_of(A, images, std::move(names), must_generate);
    for (const auto& g : pres.generators)
      if (g.order() < 2) throw Error(ErrorCode::NotCohen, "generator " + g.to_string() + " has a constant or linear term");
    const auto& ring = pres.ring;
    const std::size_t n = images.size(), lam = A.length();
    const int s = A.loewy_length();
    std::vector<Monomial> monos;
    for (int d = 0; d <= s + 1; ++d)
      for (auto& m : monomials_of_degree(n, d)) monos.push_back(std::move(m));
    std::sort(monos.begin(), monos.end(), [&](const Monomial& a, const Monomial& b) { return ring->order.compare(a, b) < 0; });

    std::map<std::vector<int>, Vec> img;
    std::vector<Monomial> standard, leading;
    std::vector<Polynomial<K>> gb;
    Subspace<K> work(lam + monos.size());
    for (std::size_t t = 0; t < monos.size(); ++t) {
      const auto& m = monos[t];
      Vec value;
      if (m.degree() == 0) {
        value = A.unit();
      } else {
        std::size_t v = 0;
        while (m.exps[v] == 0) ++v;
        value = A.multiply(img.at((m / Monomial::var(n, v)).exps), images[v]);
      }
      img.emplace(m.exps, value);
      bool divisible = false;
      for (const auto& l : leading) divisible = divisible || l.divides(m);
      if (divisible) continue;
      auto row = to_sparse(value);
      row.emplace_back(static_cast<int>(lam + t), K::from_int(1, A.field()));
      auto r = work.reduce(row);
      if (r.empty() || r.front().first < static_cast<int>(lam)) {
        work.insert(row);
        standard.push_back(m);
        continue;
      }
      std::vector<typename Polynomial<K>::Term> terms;
      for (const auto& [i, c] : r) terms.emplace_back(monos[static_cast<std::size_t>(i) - lam], c);
      gb.push_back(Polynomial<K>(ring, std::move(terms)).monic());
      leading.push_back(m);
    }
    ArtinAlgebra B;
    B.ring_ = ring;
    B.presentation_ = std::move(pres);
    B.gb_ = std::move(gb);
    B.build();
    if (B.ring_->nvars() > 0 && (B.hilbert().size() < 2 || B.hilbert()[1] != B.ring_->nvars()))
      throw Error(ErrorCode::NotCohen, "embedding dimension drops: the ideal is not contained in m^2");
    return B;
  }

  template <typename Model>
  static IdealPresentation<K> presentation_ideal_of(const Model& A, const std::vector<Vec>& images,
                                                    std::vector<std::string> names, bool must_generate = true) {
    const std::size_t n = images.size();
    if (names.empty())
      for (std::size_t i = 0; i < n; ++i) names.push_back("Y" + std::to_string(i + 1));
    auto ring = make_ring(names, A.field());
    const int s = A.loewy_length();
    const std::size_t lam = A.length();
    const K one = K::from_int(1, A.field());
    // monomials of degree <= s, ascending degree
    std::vector<Monomial> monos;
    std::map<std::vector<int>, std::size_t> mono_index;
    std::vector<Vec> img;
    for (int d = 0; d <= s; ++d) {
      auto md = monomials_of_degree(n, d);
      std::sort(md.begin(), md.end(), [&](const Monomial& a, const Monomial& b) { return ring->order.compare(a, b) < 0; });
      for (const auto& m : md) {
        Vec value;
        if (d == 0) {
          value = A.unit();
        } else {
          std::size_t v = 0;
          while (m.exps[v] == 0) ++v;
          value = A.multiply(img[mono_index.at((m / Monomial::var(n, v)).exps)], images[v]);
        }
        mono_index.emplace(m.exps, monos.size());
        monos.push_back(m);
        img.push_back(std::move(value));
      }
    }
    std::vector<SparseVec<K>> cols;
    for (const auto& v : img) cols.push_back(to_sparse(v));
    if (must_generate && rank(cols, lam) != lam) throw Error(ErrorCode::GeneratorsFail, "the images do not generate the algebra");
    for (const auto& v : images)
      if (!v.empty() && !v[0].is_zero() && lam > 0)
        throw Error(ErrorCode::GeneratorsFail, "generator images must lie in the maximal ideal");

    auto ker = kernel(cols, lam, A.field());
    // Work modulo <Y>^{s+2}: candidates are the kernel in degrees <= s and all
    // monomials of degree s+1; m*I is spanned by Y_v times the former.
    auto top = monomials_of_degree(n, s + 1);
    std::sort(top.begin(), top.end(), [&](const Monomial& a, const Monomial& b) { return ring->order.compare(a, b) < 0; });
    std::map<std::vector<int>, int> trunc_index;
    for (std::size_t i = 0; i < monos.size(); ++i) trunc_index.emplace(monos[i].exps, static_cast<int>(i));
    for (const auto& m : top) trunc_index.emplace(m.exps, static_cast<int>(trunc_index.size()));
    const std::size_t tdim = trunc_index.size();

    auto to_poly = [&](const SparseVec<K>& k) {
      std::vector<typename Polynomial<K>::Term> terms;
      for (const auto& [i, c] : k) terms.emplace_back(monos[static_cast<std::size_t>(i)], c);
      return Polynomial<K>(ring, std::move(terms));
    };
    auto to_trunc = [&](const Polynomial<K>& p) {
      SparseVec<K> v;
      for (const auto& [m, c] : p.terms()) {
        auto it = trunc_index.find(m.exps);
        if (it != trunc_index.end()) v.emplace_back(it->second, c);
      }
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      return v;
    };

    std::vector<Polynomial<K>> candidates;
    for (const auto& k : ker) candidates.push_back(to_poly(k).monic());
    for (const auto& m : top) candidates.push_back(Polynomial<K>::monomial(ring, m, one));
    std::stable_sort(candidates.begin(), candidates.end(), [&](const auto& a, const auto& b) {
      return ring->order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });

    Subspace<K> work(tdim);
    for (const auto& k : ker) {
      auto p = to_poly(k);
      for (std::size_t v = 0; v < n; ++v) work.insert(to_trunc(p * Polynomial<K>::variable(ring, v)));
    }
    std::vector<Polynomial<K>> gens;
    for (const auto& c : candidates)
      if (work.insert(to_trunc(c))) gens.push_back(c);
    return IdealPresentation<K>(ring, std::move(gens));
  }

  RingPtr ring_;
  IdealPresentation<K> presentation_;
  std::vector<Polynomial<K>> gb_;
  std::vector<Monomial> basis_;
  std::map<std::vector<int>, std::size_t> index_;
  std::vector<std::vector<SparseVec<K>>> var_mult_;
  std::vector<SparseVec<K>> table_;
  std::vector<Subspace<K>> powers_;
  int loewy_ = 0;
};

}  // namespace gorenstein
