#pragma once

// Coefficient fields: the rationals (GMP-backed) and prime fields F_p.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>

#include "gorenstein/error.hpp"

namespace gorenstein {

enum class FieldKind { Rationals, PrimeField };

struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::uint32_t characteristic = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint32_t p) {
    if (!is_prime(p)) throw Error(ErrorCode::InvalidField, "characteristic " + std::to_string(p) + " is not prime");
    return {FieldKind::PrimeField, p};
  }

  bool operator==(const FieldSpec&) const = default;

  std::string to_string() const {
    return kind == FieldKind::Rationals ? "Q" : "Fp " + std::to_string(characteristic);
  }

  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return n < (std::uint64_t{1} << 31);
  }
};

/// Exact rational scalar, always in lowest terms with positive denominator
/// (mpq_class canonicalizes after every operation).
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  static Rational from_int(long v, const FieldSpec&) { return Rational(v); }
  static Rational from_fraction(const mpz_class& num, const mpz_class& den, const FieldSpec&) {
    if (den == 0) throw Error(ErrorCode::Parse, "zero denominator");
    return Rational(mpq_class(num, den));
  }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  const mpq_class& value() const { return q_; }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_), Raw{}); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_), Raw{}); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_), Raw{}); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
    return Rational(mpq_class(a.q_ / b.q_), Raw{});
  }
  Rational operator-() const { return Rational(mpq_class(-q_), Raw{}); }
  Rational& operator+=(const Rational& b) { q_ += b.q_; return *this; }
  Rational& operator-=(const Rational& b) { q_ -= b.q_; return *this; }
  Rational& operator*=(const Rational& b) { q_ *= b.q_; return *this; }
  Rational inverse() const { return Rational(1) / *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

  std::string to_string() const { return q_.get_str(); }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  struct Raw {};
  Rational(mpq_class q, Raw) : q_(std::move(q)) {}
  mpq_class q_;
};

/// Element of F_p. A default-constructed value is the zero of every prime
/// field; the modulus is picked up from the other operand.
class ModP {
 public:
  ModP() = default;
  ModP(std::uint64_t v, std::uint32_t p) : v_(static_cast<std::uint32_t>(v % p)), p_(p) {}

  static ModP from_int(long v, const FieldSpec& f) {
    auto p = static_cast<long>(f.characteristic);
    long r = v % p;
    if (r < 0) r += p;
    return {static_cast<std::uint64_t>(r), f.characteristic};
  }
  static ModP from_fraction(const mpz_class& num, const mpz_class& den, const FieldSpec& f) {
    mpz_class p = f.characteristic;
    mpz_class n = num % p, d = den % p;
    if (n < 0) n += p;
    if (d < 0) d += p;
    if (d == 0) throw Error(ErrorCode::Parse, "denominator vanishes modulo " + std::to_string(f.characteristic));
    return ModP(n.get_ui(), f.characteristic) / ModP(d.get_ui(), f.characteristic);
  }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }

  friend ModP operator+(const ModP& a, const ModP& b) {
    std::uint32_t p = a.p_ ? a.p_ : b.p_;
    if (p == 0) return {};
    std::uint64_t s = std::uint64_t{a.v_} + b.v_;
    return raw(static_cast<std::uint32_t>(s >= p ? s - p : s), p);
  }
  friend ModP operator-(const ModP& a, const ModP& b) {
    std::uint32_t p = a.p_ ? a.p_ : b.p_;
    if (p == 0) return {};
    return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + p - b.v_, p);
  }
  friend ModP operator*(const ModP& a, const ModP& b) {
    std::uint32_t p = a.p_ ? a.p_ : b.p_;
    if (p == 0) return {};
    return raw(static_cast<std::uint32_t>((std::uint64_t{a.v_} * b.v_) % p), p);
  }
  friend ModP operator/(const ModP& a, const ModP& b) { return a * b.inverse(); }
  ModP operator-() const { return v_ == 0 ? *this : raw(p_ - v_, p_); }
  ModP& operator+=(const ModP& b) { return *this = *this + b; }
  ModP& operator-=(const ModP& b) { return *this = *this - b; }
  ModP& operator*=(const ModP& b) { return *this = *this * b; }

  ModP inverse() const {
    if (v_ == 0) throw Error(ErrorCode::DivisionByZero, "division by zero in F_p");
    // Fermat: v^(p-2)
    std::uint64_t result = 1, base = v_, e = p_ - 2;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return raw(static_cast<std::uint32_t>(result), p_);
  }

  friend bool operator==(const ModP& a, const ModP& b) { return a.v_ == b.v_; }
  friend bool operator<(const ModP& a, const ModP& b) { return a.v_ < b.v_; }

  std::string to_string() const { return std::to_string(v_); }
  friend std::ostream& operator<<(std::ostream& os, const ModP& r) { return os << r.v_; }

 private:
  static ModP raw(std::uint32_t v, std::uint32_t p) {
    ModP r;
    r.v_ = v;
    r.p_ = p;
    return r;
  }
  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

template <typename K>
concept FieldScalar = requires(K a, K b, long n, const FieldSpec& f) {
  { a + b } -> std::same_as<K>;
  { a * b } -> std::same_as<K>;
  { a / b } -> std::same_as<K>;
  { a.is_zero() } -> std::same_as<bool>;
  { K::from_int(n, f) } -> std::same_as<K>;
};

template <FieldScalar K>
K scalar(long v, const FieldSpec& f) {
  return K::from_int(v, f);
}

}  // namespace gorenstein
