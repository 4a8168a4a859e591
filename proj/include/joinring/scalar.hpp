#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <type_traits>
#include <utility>

#include "error.hpp"

namespace joinring {

using Rational = mpq_class;
using Cplx = std::complex<double>;

// Element of the prime field F_p, p < 2^31. Every value carries its modulus;
// intermediates fit in 64 bits.
class Fp {
public:
  Fp() : v_(0), p_(2) {}
  Fp(std::int64_t value, std::uint32_t p) : p_(p) {
    std::int64_t r = value % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }

  friend Fp operator+(Fp a, Fp b) {
    check(a, b);
    return Fp::raw((a.v_ + static_cast<std::uint64_t>(b.v_)) % a.p_, a.p_);
  }
  friend Fp operator-(Fp a, Fp b) {
    check(a, b);
    return Fp::raw((a.v_ + static_cast<std::uint64_t>(a.p_) - b.v_) % a.p_, a.p_);
  }
  friend Fp operator*(Fp a, Fp b) {
    check(a, b);
    return Fp::raw(static_cast<std::uint64_t>(a.v_) * b.v_ % a.p_, a.p_);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp operator-() const { return Fp::raw(v_ == 0 ? 0 : p_ - v_, p_); }
  friend bool operator==(Fp a, Fp b) {
    check(a, b);
    return a.v_ == b.v_;
  }
  friend bool operator!=(Fp a, Fp b) { return !(a == b); }

  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }

  Fp inverse() const {
    if (v_ == 0) throw hypothesis_error("division by zero in F_" + std::to_string(p_));
    std::int64_t t = 0, new_t = 1, r = p_, new_r = v_;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      t = std::exchange(new_t, t - q * new_t);
      r = std::exchange(new_r, r - q * new_r);
    }
    return Fp(t, p_);
  }

private:
  static Fp raw(std::uint64_t v, std::uint32_t p) {
    Fp x;
    x.v_ = static_cast<std::uint32_t>(v);
    x.p_ = p;
    return x;
  }
  static void check(Fp a, Fp b) {
    if (a.p_ != b.p_)
      throw input_error("mixed moduli " + std::to_string(a.p_) + " and " + std::to_string(b.p_));
  }
  std::uint32_t v_, p_;
};

inline bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Runtime descriptor of the scalar domain, as it appears in files and on the
// command line: "Fp:7", "Q", "C".
struct FieldSpec {
  enum class Kind { prime, rationals, complexes };
  Kind kind = Kind::rationals;
  std::uint32_t p = 0;

  static FieldSpec prime_field(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime_u32(p))
      throw input_error("Fp modulus must be a prime below 2^31, got " + std::to_string(p));
    return {Kind::prime, p};
  }
  static FieldSpec rationals_field() { return {Kind::rationals, 0}; }
  static FieldSpec complex_field() { return {Kind::complexes, 0}; }

  std::uint32_t characteristic() const { return kind == Kind::prime ? p : 0; }

  static FieldSpec parse(const std::string& s) {
    if (s == "Q") return rationals_field();
    if (s == "C") return complex_field();
    if (s.rfind("Fp:", 0) == 0) {
      std::size_t pos = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(s.substr(3), &pos);
      } catch (const std::exception&) {
        throw input_error("bad field spec '" + s + "'");
      }
      if (pos != s.size() - 3 || v >= (1ul << 31))
        throw input_error("bad field spec '" + s + "'");
      return prime_field(static_cast<std::uint32_t>(v));
    }
    throw input_error("bad field spec '" + s + "' (expected Fp:<p>, Q, or C)");
  }
  std::string to_string() const {
    switch (kind) {
      case Kind::prime: return "Fp:" + std::to_string(p);
      case Kind::rationals: return "Q";
      default: return "C";
    }
  }
  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind == b.kind && a.p == b.p;
  }
};

template <typename T>
struct scalar_traits;

template <>
struct scalar_traits<Fp> {
  static constexpr bool exact = true;
  static Fp zero(const Fp& like) { return Fp(0, like.modulus()); }
  static Fp one(const Fp& like) { return Fp(1, like.modulus()); }
  static Fp from_int(const Fp& like, std::int64_t n) { return Fp(n, like.modulus()); }
  static std::uint32_t characteristic(const Fp& like) { return like.modulus(); }
  static FieldSpec field(const Fp& like) { return FieldSpec::prime_field(like.modulus()); }
};

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static Rational zero(const Rational&) { return Rational(0); }
  static Rational one(const Rational&) { return Rational(1); }
  static Rational from_int(const Rational&, std::int64_t n) {
    return Rational(static_cast<long>(n));
  }
  static std::uint32_t characteristic(const Rational&) { return 0; }
  static FieldSpec field(const Rational&) { return FieldSpec::rationals_field(); }
};

template <>
struct scalar_traits<Cplx> {
  static constexpr bool exact = false;
  static Cplx zero(const Cplx&) { return Cplx(0.0, 0.0); }
  static Cplx one(const Cplx&) { return Cplx(1.0, 0.0); }
  static Cplx from_int(const Cplx&, std::int64_t n) {
    return Cplx(static_cast<double>(n), 0.0);
  }
  static std::uint32_t characteristic(const Cplx&) { return 0; }
  static FieldSpec field(const Cplx&) { return FieldSpec::complex_field(); }
};

template <typename T>
T scalar_zero(const T& like) {
  return scalar_traits<T>::zero(like);
}
template <typename T>
T scalar_one(const T& like) {
  return scalar_traits<T>::one(like);
}
template <typename T>
T scalar_from_int(const T& like, std::int64_t n) {
  return scalar_traits<T>::from_int(like, n);
}

template <typename T>
T scalar_div(const T& a, const T& b) {
  if constexpr (std::is_same_v<T, Rational>) {
    if (b == 0) throw hypothesis_error("division by zero rational");
    return a / b;
  } else {
    return a / b;
  }
}

// Prototype zero value for a runtime field descriptor; selects the template
// instantiation in generic dispatch.
template <typename F>
decltype(auto) with_field(const FieldSpec& fs, F&& f) {
  switch (fs.kind) {
    case FieldSpec::Kind::prime: return f(Fp(0, fs.p));
    case FieldSpec::Kind::rationals: return f(Rational(0));
    default: return f(Cplx(0.0, 0.0));
  }
}

}  // namespace joinring
