#pragma once

// Untwisted affine roots, weights and coweights.
//
// A weight is stored as mu = mu0 - kappa*delta + sigma*L and a coweight as
// x + c_coeff*c + d_coeff*d, with <delta,d> = <L,c> = 1.

#include <complex>
#include <string>
#include <vector>

#include "affeis/cartan.hpp"

namespace affeis {

struct AffineRoot {
  IntVec classical;  // zero vector for imaginary roots
  std::int64_t level = 0;

  bool is_real() const { return !is_zero_vec(classical); }
  bool is_positive() const { return level > 0 || (level == 0 && is_positive_vec(classical)); }
  bool operator==(const AffineRoot& o) const { return level == o.level && classical == o.classical; }
  bool operator<(const AffineRoot& o) const {
    return level != o.level ? level < o.level : classical < o.classical;
  }
  AffineRoot operator-() const { return {-classical, -level}; }
};

inline std::string to_string(const AffineRoot& b) {
  std::string s = "(";
  for (std::size_t i = 0; i < b.classical.size(); ++i)
    s += (i ? "," : "") + std::to_string(b.classical[i]);
  return s + ";" + std::to_string(b.level) + ")";
}

template <class S>
struct AffineWeight {
  std::vector<S> mu0;  // fundamental-weight coordinates
  S kappa{};
  S sigma{};

  bool operator==(const AffineWeight& o) const {
    return mu0 == o.mu0 && kappa == o.kappa && sigma == o.sigma;
  }
  AffineWeight& operator+=(const AffineWeight& o) {
    for (std::size_t i = 0; i < mu0.size(); ++i) mu0[i] += o.mu0[i];
    kappa += o.kappa;
    sigma += o.sigma;
    return *this;
  }
  AffineWeight& operator-=(const AffineWeight& o) {
    for (std::size_t i = 0; i < mu0.size(); ++i) mu0[i] -= o.mu0[i];
    kappa -= o.kappa;
    sigma -= o.sigma;
    return *this;
  }
  friend AffineWeight operator+(AffineWeight a, const AffineWeight& b) { return a += b; }
  friend AffineWeight operator-(AffineWeight a, const AffineWeight& b) { return a -= b; }
  AffineWeight scaled(const S& f) const {
    AffineWeight r = *this;
    for (auto& x : r.mu0) x *= f;
    r.kappa *= f;
    r.sigma *= f;
    return r;
  }
  template <class T>
  AffineWeight<T> cast() const {
    AffineWeight<T> r;
    for (const auto& x : mu0) r.mu0.push_back(convert<T>(x));
    r.kappa = convert<T>(kappa);
    r.sigma = convert<T>(sigma);
    return r;
  }

 private:
  template <class T, class U>
  static T convert(const U& u) {
    if constexpr (std::is_same_v<U, Rational> && !std::is_same_v<T, Rational>)
      return T(to_double(u));
    else
      return T(u);
  }
};

template <class S>
struct AffineCoroot {
  std::vector<S> gamma;  // simple-coroot coordinates
  S c_coeff{};
  S d_coeff{};

  bool operator==(const AffineCoroot& o) const {
    return gamma == o.gamma && c_coeff == o.c_coeff && d_coeff == o.d_coeff;
  }
  template <class T>
  AffineCoroot<T> cast() const {
    AffineCoroot<T> r;
    auto cv = [](const S& u) {
      if constexpr (std::is_same_v<S, Rational> && !std::is_same_v<T, Rational>)
        return T(to_double(u));
      else
        return T(u);
    };
    for (const auto& x : gamma) r.gamma.push_back(cv(x));
    r.c_coeff = cv(c_coeff);
    r.d_coeff = cv(d_coeff);
    return r;
  }
};

using RatWeight = AffineWeight<Rational>;
using RatCoweight = AffineCoroot<Rational>;
using ComplexWeight = AffineWeight<std::complex<double>>;

template <class S>
S pair(const AffineWeight<S>& mu, const AffineCoroot<S>& h) {
  if (mu.mu0.size() != h.gamma.size())
    throw Error(ErrorKind::FieldMismatch, "weight and coweight have different ranks");
  S acc{};
  for (std::size_t i = 0; i < mu.mu0.size(); ++i) acc += mu.mu0[i] * h.gamma[i];
  return acc - mu.kappa * h.d_coeff + mu.sigma * h.c_coeff;
}

template <class S = Rational>
AffineWeight<S> weight_zero(const FiniteCartanData& d) {
  return {std::vector<S>(d.rank, S{}), S{}, S{}};
}

template <class S = Rational>
AffineWeight<S> weight_delta(const FiniteCartanData& d) {
  auto w = weight_zero<S>(d);
  w.kappa = S(-1);
  return w;
}

template <class S = Rational>
AffineWeight<S> weight_L(const FiniteCartanData& d) {
  auto w = weight_zero<S>(d);
  w.sigma = S(1);
  return w;
}

inline RatWeight rho_tilde(const FiniteCartanData& d) {
  return {d.rho, Rational(0), Rational(d.dual_coxeter_hv)};
}

template <class S = Rational>
AffineCoroot<S> coweight_c(const FiniteCartanData& d) {
  return {std::vector<S>(d.rank, S{}), S(1), S{}};
}

template <class S = Rational>
AffineCoroot<S> coweight_d(const FiniteCartanData& d) {
  return {std::vector<S>(d.rank, S{}), S{}, S(1)};
}

inline RatWeight root_as_affine_weight(const FiniteCartanData& d, const AffineRoot& b) {
  IntVec m = root_as_weight(d, b.classical);
  return {to_rat(m), Rational(-b.level), Rational(0)};
}

// The coroot of alpha + i*delta is alpha^vee + (i/2)(alpha^vee, alpha^vee) c.
inline RatCoweight affine_coroot(const FiniteCartanData& d, const AffineRoot& b) {
  if (!b.is_real()) throw Error(ErrorKind::ImaginaryRoot, "imaginary roots have no coroot");
  IntVec x = coroot(d, b.classical);
  Rational n = coweight_norm_sq(d, x);
  return {to_rat(x), Rational(b.level) * n / 2, Rational(0)};
}

// alpha_0 = delta - theta, alpha_i for i = 1..n.
inline AffineRoot affine_simple_root(const FiniteCartanData& d, int i) {
  if (i == 0) return {-d.theta(), 1};
  IntVec e(d.rank, 0);
  e[i - 1] = 1;
  return {e, 0};
}

inline RatCoweight affine_simple_coroot(const FiniteCartanData& d, int i) {
  return affine_coroot(d, affine_simple_root(d, i));
}

// Positive real roots of level <= max_level, sorted by (level, classical index).
inline std::vector<AffineRoot> enumerate_positive_real_roots(const FiniteCartanData& d,
                                                             std::int64_t max_level) {
  if (max_level < 0) throw Error(ErrorKind::InvalidArgument, "max_level must be >= 0");
  std::vector<AffineRoot> out;
  for (const auto& a : d.positive_roots) out.push_back({a, 0});
  for (std::int64_t l = 1; l <= max_level; ++l)
    for (const auto& a : d.roots) out.push_back({a, l});
  return out;
}

// Multiplicity of an imaginary root i*delta (i != 0) is the rank.
inline int imaginary_multiplicity(const FiniteCartanData& d) { return d.rank; }

}  // namespace affeis
