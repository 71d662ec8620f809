#pragma once

// Sparse multivariate polynomials over Rational or ModP, with a small
// text parser ("X^3 - Y*Z", "3/2 x y^2").

#include <algorithm>
#include <cctype>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gorenstein/error.hpp"
#include "gorenstein/field.hpp"

namespace gorenstein {

using Exponents = std::vector<int>;

struct Monomial {
  Exponents exps;

  Monomial() = default;
  explicit Monomial(Exponents e) : exps(std::move(e)) {}
  static Monomial one(std::size_t nvars) { return Monomial(Exponents(nvars, 0)); }
  static Monomial var(std::size_t nvars, std::size_t i, int power = 1) {
    Monomial m = one(nvars);
    m.exps[i] = power;
    return m;
  }

  int degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }
  std::size_t nvars() const { return exps.size(); }
  bool is_one() const { return degree() == 0; }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i] > o.exps[i]) return false;
    return true;
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] += b.exps[i];
    return m;
  }
  /// a / b, assuming b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] -= b.exps[i];
    return m;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] = std::max(a.exps[i], b.exps[i]);
    return m;
  }
  static bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exps.size(); ++i)
      if (a.exps[i] > 0 && b.exps[i] > 0) return false;
    return true;
  }
  bool operator==(const Monomial&) const = default;
};

/// Global monomial orders. `Elimination` compares the total degree in the
/// first `block` variables before falling back to degrevlex.
struct MonomialOrder {
  enum class Kind { DegRevLex, DegLex, Elimination };
  Kind kind = Kind::DegRevLex;
  int block = 0;

  static MonomialOrder degrevlex() { return {}; }
  static MonomialOrder deglex() { return {Kind::DegLex, 0}; }
  static MonomialOrder elimination(int block) { return {Kind::Elimination, block}; }

  static MonomialOrder parse(const std::string& name) {
    if (name == "degrevlex" || name == "grevlex" || name == "dp") return degrevlex();
    if (name == "deglex" || name == "Dp") return deglex();
    throw Error(ErrorCode::UnsupportedOrder, "unsupported monomial order '" + name + "'");
  }

  /// Positive when a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    if (kind == Kind::Elimination) {
      int da = 0, db = 0;
      for (int i = 0; i < block; ++i) {
        da += a.exps[static_cast<std::size_t>(i)];
        db += b.exps[static_cast<std::size_t>(i)];
      }
      if (da != db) return da > db ? 1 : -1;
    }
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db ? 1 : -1;
    if (kind == Kind::DegLex) {
      for (std::size_t i = 0; i < a.exps.size(); ++i)
        if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i] ? 1 : -1;
      return 0;
    }
    for (std::size_t i = a.exps.size(); i-- > 0;)
      if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? 1 : -1;
    return 0;
  }
  bool operator==(const MonomialOrder&) const = default;
};

struct Ring {
  std::vector<std::string> vars;
  FieldSpec field;
  MonomialOrder order;

  std::size_t nvars() const { return vars.size(); }
  int index_of(const std::string& name) const {
    auto it = std::find(vars.begin(), vars.end(), name);
    return it == vars.end() ? -1 : static_cast<int>(it - vars.begin());
  }
  bool operator==(const Ring&) const = default;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars, FieldSpec field = {}, MonomialOrder order = {}) {
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (vars[i] == vars[j]) throw Error(ErrorCode::VariableCollision, "duplicate variable " + vars[i]);
  return std::make_shared<const Ring>(Ring{std::move(vars), field, order});
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

template <FieldScalar K>
class Polynomial {
 public:
  using Term = std::pair<Monomial, K>;

  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) { normalize(); }

  static Polynomial constant(RingPtr ring, const K& c) {
    Monomial one = Monomial::one(ring->nvars());
    return Polynomial(ring, {{one, c}});
  }
  static Polynomial monomial(RingPtr ring, const Monomial& m, const K& c) { return Polynomial(ring, {{m, c}}); }
  static Polynomial variable(RingPtr ring, std::size_t i) {
    auto one = K::from_int(1, ring->field);
    return monomial(ring, Monomial::var(ring->nvars(), i), one);
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Monomial& leading_monomial() const { return terms_.front().first; }
  const K& leading_coefficient() const { return terms_.front().second; }

  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.first.degree());
    return d;
  }
  int order() const {  // lowest degree of a term; -1 for zero
    if (terms_.empty()) return -1;
    int d = terms_.front().first.degree();
    for (const auto& t : terms_) d = std::min(d, t.first.degree());
    return d;
  }
  bool is_homogeneous() const {
    return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.first.degree() == degree(); });
  }
  Polynomial homogeneous_part(int d) const {
    std::vector<Term> out;
    for (const auto& t : terms_)
      if (t.first.degree() == d) out.push_back(t);
    return Polynomial(ring_, std::move(out));
  }
  Polynomial truncated_above(int d) const {
    std::vector<Term> out;
    for (const auto& t : terms_)
      if (t.first.degree() <= d) out.push_back(t);
    return Polynomial(ring_, std::move(out));
  }

  K coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.first == m) return t.second;
    return K{};
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return a.combine(b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a.combine(b, true); }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }
  friend Polynomial operator*(const K& c, const Polynomial& p) {
    if (c.is_zero()) return Polynomial(p.ring_);
    Polynomial r = p;
    for (auto& t : r.terms_) t.second = t.second * c;
    return r;
  }
  Polynomial times(const Monomial& m, const K& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.emplace_back(t.first * m, t.second * c);
    return r;  // multiplication by a monomial preserves the order
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    std::vector<Term> all;
    all.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) all.emplace_back(s.first * t.first, s.second * t.second);
    return Polynomial(a.ring_ ? a.ring_ : b.ring_, std::move(all));
  }
  Polynomial pow(int e) const {
    Polynomial r = constant(ring_, K::from_int(1, ring_->field));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return leading_coefficient().inverse() * *this;
  }

  bool operator==(const Polynomial& o) const { return (*this - o).is_zero(); }

  /// Exact division by a nonzero polynomial; throws if not divisible.
  Polynomial divide_exact(const Polynomial& d) const {
    Polynomial q(ring_), r = *this;
    while (!r.is_zero()) {
      if (!d.leading_monomial().divides(r.leading_monomial()))
        throw Error(ErrorCode::InvalidArgument, "polynomial is not divisible");
      Monomial m = r.leading_monomial() / d.leading_monomial();
      K c = r.leading_coefficient() / d.leading_coefficient();
      q = q + monomial(ring_, m, c);
      r = r - d.times(m, c);
    }
    return q;
  }

  /// Re-express in another ring whose variables are a superset (by name).
  Polynomial embed(const RingPtr& target) const {
    std::vector<std::size_t> map;
    for (const auto& v : ring_->vars) {
      int idx = target->index_of(v);
      if (idx < 0) throw Error(ErrorCode::RingMismatch, "variable " + v + " missing from target ring");
      map.push_back(static_cast<std::size_t>(idx));
    }
    std::vector<Term> out;
    for (const auto& [m, c] : terms_) {
      Monomial n = Monomial::one(target->nvars());
      for (std::size_t i = 0; i < map.size(); ++i) n.exps[map[i]] = m.exps[i];
      out.emplace_back(std::move(n), c);
    }
    return Polynomial(target, std::move(out));
  }

  /// Substitute zero for every variable named in `zeroed`, then move into
  /// `target` (which must contain all surviving variables).
  Polynomial restrict_to(const RingPtr& target) const {
    std::vector<Term> out;
    for (const auto& [m, c] : terms_) {
      Monomial n = Monomial::one(target->nvars());
      bool dead = false;
      for (std::size_t i = 0; i < m.exps.size() && !dead; ++i) {
        if (m.exps[i] == 0) continue;
        int idx = target->index_of(ring_->vars[i]);
        if (idx < 0) dead = true;
        else n.exps[static_cast<std::size_t>(idx)] = m.exps[i];
      }
      if (!dead) out.emplace_back(std::move(n), c);
    }
    return Polynomial(target, std::move(out));
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string cs = c.to_string();
      bool neg = !cs.empty() && cs[0] == '-';
      if (neg) cs = cs.substr(1);
      if (first) os << (neg ? "-" : "");
      else os << (neg ? " - " : " + ");
      first = false;
      std::string ms = monomial_string(m);
      if (ms.empty()) os << cs;
      else if (cs == "1") os << ms;
      else os << cs << "*" << ms;
    }
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

  std::string monomial_string(const Monomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
      if (m.exps[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += ring_->vars[i];
      if (m.exps[i] > 1) s += "^" + std::to_string(m.exps[i]);
    }
    return s;
  }

 private:
  void check_ring(const Polynomial& o) const {
    if (ring_ && o.ring_ && !same_ring(ring_, o.ring_)) throw Error(ErrorCode::RingMismatch, "polynomials live in different rings");
  }

  Polynomial combine(const Polynomial& b, bool subtract) const {
    check_ring(b);
    const auto& ord = (ring_ ? ring_ : b.ring_)->order;
    Polynomial r(ring_ ? ring_ : b.ring_);
    r.terms_.reserve(terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < b.terms_.size()) {
      int cmp = i == terms_.size() ? -1 : j == b.terms_.size() ? 1 : ord.compare(terms_[i].first, b.terms_[j].first);
      if (cmp > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (cmp < 0) {
        r.terms_.emplace_back(b.terms_[j].first, subtract ? -b.terms_[j].second : b.terms_[j].second);
        ++j;
      } else {
        K c = subtract ? terms_[i].second - b.terms_[j].second : terms_[i].second + b.terms_[j].second;
        if (!c.is_zero()) r.terms_.emplace_back(terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }

  void normalize() {
    if (!ring_) return;
    const auto& ord = ring_->order;
    std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) { return ord.compare(a.first, b.first) > 0; });
    std::vector<Term> out;
    for (auto& t : terms_) {
      if (!out.empty() && out.back().first == t.first) out.back().second = out.back().second + t.second;
      else out.push_back(std::move(t));
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.second.is_zero(); }), out.end());
    terms_ = std::move(out);
  }

  RingPtr ring_;
  std::vector<Term> terms_;  // descending in the ring's order
};

/// Recursive-descent parser for the polynomial text syntax.
template <FieldScalar K>
class PolynomialParser {
 public:
  PolynomialParser(RingPtr ring, std::string text, int line = 0, int column = 1)
      : ring_(std::move(ring)), s_(std::move(text)), line_(line), column_(column) {}

  Polynomial<K> parse() {
    auto p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  Polynomial<K> expr() {
    skip();
    bool neg = false;
    if (peek('+') || peek('-')) neg = s_[pos_++] == '-';
    auto acc = term();
    if (neg) acc = -acc;
    for (;;) {
      skip();
      if (peek('+')) { ++pos_; acc = acc + term(); }
      else if (peek('-')) { ++pos_; acc = acc - term(); }
      else return acc;
    }
  }
  Polynomial<K> term() {
    auto acc = factor();
    for (;;) {
      skip();
      if (peek('*')) { ++pos_; acc = acc * factor(); continue; }
      if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(' || s_[pos_] == '_')) {
        acc = acc * factor();
        continue;
      }
      return acc;
    }
  }
  Polynomial<K> factor() {
    skip();
    Polynomial<K> base(ring_);
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      base = expr();
      skip();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num(digits()), den = 1;
      skip();
      if (peek('/')) {
        ++pos_;
        skip();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected denominator");
        den = mpz_class(digits());
      }
      base = Polynomial<K>::constant(ring_, K::from_fraction(num, den, ring_->field));
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      int idx = ring_->index_of(name);
      if (idx < 0) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      base = Polynomial<K>::variable(ring_, static_cast<std::size_t>(idx));
    } else {
      fail("unexpected character '" + std::string(1, c) + "'");
    }
    skip();
    if (peek('^')) {
      ++pos_;
      skip();
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected exponent");
      base = base.pow(std::stoi(digits()));
    }
    return base;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }
  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::Parse, "line " + std::to_string(line_) + ", column " + std::to_string(static_cast<int>(pos_) + column_) + ": " + msg);
  }

  RingPtr ring_;
  std::string s_;
  std::size_t pos_ = 0;
  int line_;
  int column_;
};

template <FieldScalar K>
Polynomial<K> parse_polynomial(const RingPtr& ring, const std::string& text, int line = 0, int column = 1) {
  return PolynomialParser<K>(ring, text, line, column).parse();
}

}  // namespace gorenstein
