#pragma once

#include <cstdint>
#include <numeric>
#include <compare>
#include <ostream>
#include <string>
#include <type_traits>
#include <vector>

#include "affeis/error.hpp"

namespace affeis {

// Exact rational with 64-bit parts; intermediate products use 128 bits and
// overflow of the reduced result throws.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  Rational& operator+=(const Rational& o) {
    return set(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
               static_cast<__int128>(den_) * o.den_);
  }
  Rational& operator-=(const Rational& o) {
    return set(static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_,
               static_cast<__int128>(den_) * o.den_);
  }
  Rational& operator*=(const Rational& o) {
    return set(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
  }
  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw Error(ErrorKind::InvalidArgument, "rational division by zero");
    return set(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_, r = static_cast<__int128>(b.num_) * a.den_;
    return l < r ? std::strong_ordering::less
                 : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    os << r.num_;
    if (r.den_ != 1) os << '/' << r.den_;
    return os;
  }

 private:
  void assign(std::int64_t n, std::int64_t d) { set(n, d); }
  Rational& set(__int128 n, __int128 d) {
    if (d == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    constexpr __int128 lim = static_cast<__int128>(INT64_MAX);
    if (n > lim || n < -lim || d > lim)
      throw Error(ErrorKind::CapExceeded, "rational overflow");
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
    return *this;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }

using IntVec = std::vector<std::int64_t>;
using RatVec = std::vector<Rational>;
using IntMatrix = std::vector<IntVec>;
using RatMatrix = std::vector<RatVec>;

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

// Exact for Rational, rounded to double for floating scalar types.
template <class S>
S scalar_from(const Rational& r) {
  if constexpr (std::is_same_v<S, Rational>)
    return r;
  else
    return S(to_double(r));
}

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline RatVec to_rat(const IntVec& v) { return RatVec(v.begin(), v.end()); }

inline RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) out.push_back(to_rat(row));
  return out;
}

inline IntMatrix identity_int(std::size_t n) {
  IntMatrix m(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

template <class A, class B>
auto dot(const std::vector<A>& a, const std::vector<B>& b) {
  using R = decltype(A{} * B{});
  R acc{};
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

template <class M, class V>
auto mat_vec(const M& m, const V& v) {
  using R = decltype(m[0][0] * v[0]);
  std::vector<R> out(m.size(), R{});
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

template <class A, class B>
auto mat_mul(const std::vector<std::vector<A>>& a, const std::vector<std::vector<B>>& b) {
  using R = decltype(A{} * B{});
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  std::vector<std::vector<R>> out(n, std::vector<R>(m, R{}));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == A{}) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

template <class T>
std::vector<std::vector<T>> transpose(const std::vector<std::vector<T>>& a) {
  if (a.empty()) return {};
  std::vector<std::vector<T>> out(a[0].size(), std::vector<T>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
  return out;
}

inline RatMatrix inverse(RatMatrix a) {
  const std::size_t n = a.size();
  RatMatrix inv(n, RatVec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw Error(ErrorKind::SingularMatrix, "rational matrix is singular");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// Inverse of a unimodular integer matrix; throws if the inverse is not integral.
inline IntMatrix inverse_int(const IntMatrix& a) {
  RatMatrix r = inverse(to_rat(a));
  IntMatrix out(r.size(), IntVec(r.size()));
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (r[i][j].denominator() != 1)
        throw Error(ErrorKind::InvalidArgument, "inverse is not integral");
      out[i][j] = r[i][j].numerator();
    }
  return out;
}

template <class T>
std::vector<T> operator+(std::vector<T> a, const std::vector<T>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class T>
std::vector<T> operator-(std::vector<T> a, const std::vector<T>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <class T>
std::vector<T> operator-(std::vector<T> a) {
  for (auto& x : a) x = -x;
  return a;
}

template <class T, class S>
std::vector<T> scale(std::vector<T> a, const S& s) {
  for (auto& x : a) x *= s;
  return a;
}

}  // namespace affeis
