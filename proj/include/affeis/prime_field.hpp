#pragma once

// Elements of F_p. An element built from a bare integer has modulus 0 and
// adopts the modulus of whatever it is combined with.

#include <cstdint>
#include <ostream>
#include <string>

#include "affeis/error.hpp"

namespace affeis {

class Fp {
 public:
  Fp(std::int64_t v = 0) : v_(v), p_(0) {}  // NOLINT(google-explicit-constructor)
  Fp(std::int64_t v, std::int64_t p) : v_(reduce(v, p)), p_(p) {
    if (p < 2) throw Error(ErrorKind::InvalidArgument, "modulus must be >= 2");
  }

  std::int64_t value() const { return v_; }
  std::int64_t modulus() const { return p_; }
  bool is_zero() const { return p_ ? v_ == 0 : v_ == 0; }

  Fp& operator+=(const Fp& o) { return combine(o, [](__int128 a, __int128 b) { return a + b; }); }
  Fp& operator-=(const Fp& o) { return combine(o, [](__int128 a, __int128 b) { return a - b; }); }
  Fp& operator*=(const Fp& o) { return combine(o, [](__int128 a, __int128 b) { return a * b; }); }
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }
  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  Fp operator-() const { return p_ ? Fp(-v_, p_) : Fp(-v_); }

  Fp inverse() const {
    if (p_ == 0) {
      if (v_ == 1 || v_ == -1) return *this;
      throw Error(ErrorKind::FieldMismatch, "cannot invert an integer without a modulus");
    }
    if (v_ == 0) throw Error(ErrorKind::ZeroInput, "division by zero in F_p");
    // extended Euclid
    std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
    while (b) {
      std::int64_t q = a / b;
      std::int64_t t = a - q * b;
      a = b;
      b = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    return Fp(x0, p_);
  }

  friend bool operator==(const Fp& a, const Fp& b) {
    std::int64_t p = a.p_ ? a.p_ : b.p_;
    if (a.p_ && b.p_ && a.p_ != b.p_) return false;
    if (p == 0) return a.v_ == b.v_;
    return reduce(a.v_, p) == reduce(b.v_, p);
  }
  friend std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.v_; }

 private:
  static std::int64_t reduce(__int128 v, std::int64_t p) {
    if (p == 0) return static_cast<std::int64_t>(v);
    __int128 r = v % p;
    if (r < 0) r += p;
    return static_cast<std::int64_t>(r);
  }
  template <class Op>
  Fp& combine(const Fp& o, Op op) {
    if (p_ && o.p_ && p_ != o.p_) throw Error(ErrorKind::FieldMismatch, "elements of different prime fields");
    std::int64_t p = p_ ? p_ : o.p_;
    __int128 r = op(static_cast<__int128>(v_), static_cast<__int128>(o.v_));
    if (p == 0 && (r > INT64_MAX / 4 || r < -INT64_MAX / 4))
      throw Error(ErrorKind::CapExceeded, "unreduced integer overflow");
    v_ = reduce(r, p);
    p_ = p;
    return *this;
  }

  std::int64_t v_;
  std::int64_t p_;
};

inline std::string to_string(const Fp& a) { return std::to_string(a.value()); }

}  // namespace affeis
