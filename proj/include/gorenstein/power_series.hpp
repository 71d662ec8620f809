#pragma once

// Truncated integer power series in t and rational-function fitting.

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "gorenstein/error.hpp"
#include "gorenstein/field.hpp"
#include "gorenstein/linalg.hpp"

namespace gorenstein {

/// c_0 + c_1 t + ... + c_N t^N, exact up to order N.
class PowerSeries {
 public:
  PowerSeries() = default;
  explicit PowerSeries(std::vector<mpz_class> c) : c_(std::move(c)) {
    if (c_.empty()) c_.push_back(0);
  }
  static PowerSeries zero(std::size_t N) { return PowerSeries(std::vector<mpz_class>(N + 1, 0)); }
  /// A polynomial, padded or truncated to order N.
  static PowerSeries polynomial(const std::vector<long>& coeffs, std::size_t N) {
    std::vector<mpz_class> c(N + 1, 0);
    for (std::size_t i = 0; i < coeffs.size() && i <= N; ++i) c[i] = coeffs[i];
    return PowerSeries(std::move(c));
  }
  template <typename Int>
  static PowerSeries from_counts(const std::vector<Int>& v) {
    std::vector<mpz_class> c;
    for (const auto& x : v) c.emplace_back(static_cast<unsigned long>(x));
    return PowerSeries(std::move(c));
  }

  std::size_t order() const { return c_.size() - 1; }
  const mpz_class& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<mpz_class>& coefficients() const { return c_; }

  PowerSeries truncated(std::size_t N) const {
    std::vector<mpz_class> c(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(std::min(N, order()) + 1));
    return PowerSeries(std::move(c));
  }

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    const std::size_t N = std::min(a.order(), b.order());
    std::vector<mpz_class> c(N + 1);
    for (std::size_t i = 0; i <= N; ++i) c[i] = a.c_[i] + b.c_[i];
    return PowerSeries(std::move(c));
  }
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    const std::size_t N = std::min(a.order(), b.order());
    std::vector<mpz_class> c(N + 1);
    for (std::size_t i = 0; i <= N; ++i) c[i] = a.c_[i] - b.c_[i];
    return PowerSeries(std::move(c));
  }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const std::size_t N = std::min(a.order(), b.order());
    std::vector<mpz_class> c(N + 1, 0);
    for (std::size_t i = 0; i <= N; ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; i + j <= N; ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return PowerSeries(std::move(c));
  }
  friend PowerSeries operator*(long k, const PowerSeries& a) {
    std::vector<mpz_class> c = a.c_;
    for (auto& x : c) x *= k;
    return PowerSeries(std::move(c));
  }

  /// Multiplicative inverse; needs c_0 = ±1.
  PowerSeries inverse() const {
    if (c_[0] != 1 && c_[0] != -1) throw Error(ErrorCode::InversionImpossible, "constant term must be a unit in Z");
    const std::size_t N = order();
    std::vector<mpz_class> inv(N + 1, 0);
    inv[0] = c_[0];  // 1/±1 = ±1
    for (std::size_t k = 1; k <= N; ++k) {
      mpz_class s = 0;
      for (std::size_t j = 1; j <= k; ++j) s += c_[j] * inv[k - j];
      inv[k] = -s * c_[0];
    }
    return PowerSeries(std::move(inv));
  }

  /// Largest |coefficient| among orders 0..M of a - b.
  static mpz_class residual(const PowerSeries& a, const PowerSeries& b, std::size_t M) {
    mpz_class r = 0;
    for (std::size_t i = 0; i <= M && i <= a.order() && i <= b.order(); ++i) r = std::max<mpz_class>(r, abs(a.c_[i] - b.c_[i]));
    return r;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i <= order(); ++i) {
      if (i) s += ", ";
      s += c_[i].get_str();
    }
    return "[" + s + "]";
  }

  bool operator==(const PowerSeries& o) const { return c_ == o.c_; }

 private:
  std::vector<mpz_class> c_{0};
};

/// num(t)/den(t) with den(0) = 1.
struct RationalFit {
  std::vector<mpq_class> numerator;
  std::vector<mpq_class> denominator;
  std::size_t num_degree() const { return numerator.empty() ? 0 : numerator.size() - 1; }
  std::size_t den_degree() const { return denominator.size() - 1; }
};

/// Smallest p + q (then smallest q) such that den * series = num up to the
/// series' order, with deg num <= p, deg den <= q and p + q <= max_degree.
/// Only fits that leave at least p + q + 2 equations unused are considered,
/// so every returned fit is overdetermined. A fit is evidence, not proof.
inline std::optional<RationalFit> rational_fit(const PowerSeries& s, int max_degree) {
  const auto N = static_cast<int>(s.order());
  const FieldSpec Qf = FieldSpec::rationals();
  for (int total = 0; total <= max_degree; ++total) {
    if (N < 2 * total + 2) break;
    for (int q = 0; q <= total; ++q) {
      const int p = total - q;
      // unknowns d_1..d_q; equations for k = p+1..N: sum_{j=0..q} d_j c_{k-j} = 0, d_0 = 1
      std::vector<SparseVec<Rational>> cols;
      const int rows = N - p;
      for (int j = 1; j <= q; ++j) {
        DenseVec<Rational> col(static_cast<std::size_t>(rows));
        for (int k = p + 1; k <= N; ++k)
          if (k - j >= 0) col[static_cast<std::size_t>(k - p - 1)] = Rational(mpq_class(s[static_cast<std::size_t>(k - j)]));
        cols.push_back(to_sparse(col));
      }
      DenseVec<Rational> rhs(static_cast<std::size_t>(rows));
      for (int k = p + 1; k <= N; ++k) rhs[static_cast<std::size_t>(k - p - 1)] = Rational(mpq_class(-s[static_cast<std::size_t>(k)]));
      auto x = solve(cols, to_sparse(rhs), static_cast<std::size_t>(rows), Qf);
      if (!x) continue;
      RationalFit fit;
      fit.denominator.assign(static_cast<std::size_t>(q) + 1, 0);
      fit.denominator[0] = 1;
      for (const auto& [j, v] : *x) fit.denominator[static_cast<std::size_t>(j) + 1] = v.value();
      fit.numerator.assign(static_cast<std::size_t>(p) + 1, 0);
      for (int k = 0; k <= p; ++k) {
        mpq_class acc = 0;
        for (int j = 0; j <= q && j <= k; ++j) acc += fit.denominator[static_cast<std::size_t>(j)] * mpq_class(s[static_cast<std::size_t>(k - j)]);
        fit.numerator[static_cast<std::size_t>(k)] = acc;
      }
      while (fit.numerator.size() > 1 && fit.numerator.back() == 0) fit.numerator.pop_back();
      while (fit.denominator.size() > 1 && fit.denominator.back() == 0) fit.denominator.pop_back();
      return fit;
    }
  }
  return std::nullopt;
}

inline std::string polynomial_in_t(const std::vector<mpq_class>& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    mpq_class a = c[i];
    bool neg = a < 0;
    if (neg) a = -a;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    std::string mono = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
    if (mono.empty())
      s += a.get_str();
    else if (a == 1)
      s += mono;
    else
      s += a.get_str() + "*" + mono;
  }
  return s.empty() ? "0" : s;
}

}  // namespace gorenstein
