#pragma once

// Gamma, zeta, completed zeta and the Macdonald K-Bessel function for complex
// arguments in double precision.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <string>

#include "affeis/error.hpp"

namespace affeis {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kDefaultPoleEps = 1e-8;

namespace detail {

// B_{2k}, k = 1..15
inline constexpr std::array<double, 15> kBernoulli2k = {
    1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6, -3617.0 / 510,
    43867.0 / 798, -174611.0 / 330, 854513.0 / 138, -236364091.0 / 2730, 8553103.0 / 6,
    -23749461029.0 / 870, 8615841276005.0 / 14322};

inline std::string fmt(cplx z) {
  return "(" + std::to_string(z.real()) + (z.imag() < 0 ? "" : "+") + std::to_string(z.imag()) + "i)";
}

// log sin(pi z) without overflow for large |Im z|.
inline cplx log_sin_pi(cplx z) {
  const cplx I(0, 1);
  if (z.imag() >= 0) return -I * kPi * z + std::log((std::exp(2.0 * I * kPi * z) - 1.0) / (2.0 * I));
  return I * kPi * z + std::log((1.0 - std::exp(-2.0 * I * kPi * z)) / (2.0 * I));
}

inline cplx stirling_log_gamma(cplx w) {
  cplx s = (w - 0.5) * std::log(w) - w + 0.5 * std::log(2 * kPi);
  cplx winv = 1.0 / w, w2 = winv * winv, p = winv;
  for (int k = 1; k <= 10; ++k) {
    s += kBernoulli2k[k - 1] / (2.0 * k * (2.0 * k - 1)) * p;
    p *= w2;
  }
  return s;
}

inline void check_gamma_pole(cplx z, double eps) {
  if (z.real() > 0.5) return;
  double n = std::round(z.real());
  if (n <= 0 && std::abs(z - n) < eps)
    throw Error(ErrorKind::PoleProximity, "Gamma pole near " + fmt(z));
}

}  // namespace detail

// A logarithm of Gamma(z): exp of it is Gamma(z), the branch is not the principal one.
inline cplx log_gamma(cplx z, double eps = kDefaultPoleEps) {
  detail::check_gamma_pole(z, eps);
  if (z.real() < 0.5) return std::log(kPi) - detail::log_sin_pi(z) - log_gamma(1.0 - z, eps);
  int shift = z.real() < 15 ? static_cast<int>(std::ceil(15 - z.real())) : 0;
  cplx acc = 0;
  cplx w = z;
  for (int k = 0; k < shift; ++k) {
    acc += std::log(w);
    w += 1.0;
  }
  return detail::stirling_log_gamma(w) - acc;
}

inline cplx complex_gamma(cplx z, double eps = kDefaultPoleEps) {
  detail::check_gamma_pole(z, eps);
  if (z.real() < 0.5) return kPi / (std::sin(kPi * z) * complex_gamma(1.0 - z, eps));
  int shift = z.real() < 15 ? static_cast<int>(std::ceil(15 - z.real())) : 0;
  cplx prod = 1;
  for (int k = 0; k < shift; ++k) prod *= z + static_cast<double>(k);
  return std::exp(detail::stirling_log_gamma(z + static_cast<double>(shift))) / prod;
}

// Gamma_R(s) = pi^{-s/2} Gamma(s/2)
inline cplx gamma_r(cplx s, double eps = kDefaultPoleEps) {
  detail::check_gamma_pole(s / 2.0, eps);
  return std::exp(-s / 2.0 * std::log(kPi) + log_gamma(s / 2.0, eps));
}

// Gamma_C(s) = 2 (2 pi)^{-s} Gamma(s)
inline cplx gamma_c(cplx s, double eps = kDefaultPoleEps) {
  return 2.0 * std::exp(-s * std::log(2 * kPi)) * complex_gamma(s, eps);
}

namespace detail {

inline cplx zeta_euler_maclaurin(cplx s) {
  const int N = 30 + static_cast<int>(std::ceil(std::abs(s)));
  cplx sum = 0;
  for (int n = 1; n < N; ++n) sum += std::exp(-s * std::log(static_cast<double>(n)));
  const double lN = std::log(static_cast<double>(N));
  cplx Ns = std::exp(-s * lN);
  sum += Ns * static_cast<double>(N) / (s - 1.0) + 0.5 * Ns;
  // B_{2k}/(2k)! s(s+1)...(s+2k-2) N^{-s-2k+1}
  cplx rising = s;
  cplx pw = Ns / static_cast<double>(N);
  double fact = 2;  // (2k)!
  for (int k = 1; k <= 15; ++k) {
    sum += kBernoulli2k[k - 1] / fact * rising * pw;
    rising *= (s + (2.0 * k - 1)) * (s + 2.0 * k);
    pw /= static_cast<double>(N) * N;
    fact *= (2.0 * k + 1) * (2.0 * k + 2);
  }
  return sum;
}

}  // namespace detail

// Riemann zeta by Euler-Maclaurin; the functional equation for Re s < -1/4.
inline cplx zeta(cplx s, double eps = kDefaultPoleEps) {
  if (std::abs(s - 1.0) < eps) throw Error(ErrorKind::PoleProximity, "zeta pole at s = 1");
  if (s.real() < -0.25) {
    cplx t = 1.0 - s;
    return std::exp(s * std::log(2.0) + (s - 1.0) * std::log(kPi)) * std::sin(kPi * s / 2.0) *
           complex_gamma(t, eps) * detail::zeta_euler_maclaurin(t);
  }
  return detail::zeta_euler_maclaurin(s);
}

struct NumberFieldProfile {
  int r1 = 1;
  int r2 = 0;
  double abs_discriminant = 1;
  std::function<cplx(cplx)> zeta_evaluator;
  bool rational = false;  // the built-in Q profile takes the specialised path
};

inline NumberFieldProfile rational_profile() {
  return {1, 0, 1.0, [](cplx s) { return zeta(s); }, true};
}

namespace detail {

inline void check_lambda_pole(cplx s, double eps) {
  if (std::abs(s) < eps || std::abs(s - 1.0) < eps)
    throw Error(ErrorKind::PoleProximity, "completed zeta pole near " + fmt(s));
}

// Near the Gamma(s/2) poles s = -2k the functional equation is used.
inline bool near_trivial_zero(cplx s) {
  if (s.real() > -1) return false;
  double k = std::round(-s.real() / 2);
  return k >= 1 && std::abs(s + 2 * k) < 0.5;
}

}  // namespace detail

inline cplx lambda_completed(cplx s, const NumberFieldProfile& profile = rational_profile(),
                             double eps = kDefaultPoleEps) {
  detail::check_lambda_pole(s, eps);
  if (profile.rational) {
    if (detail::near_trivial_zero(s)) s = 1.0 - s;
    return std::exp(-s / 2.0 * std::log(kPi) + log_gamma(s / 2.0, eps)) * zeta(s, eps);
  }
  cplx v = std::exp(s / 2.0 * std::log(profile.abs_discriminant)) * profile.zeta_evaluator(s);
  for (int i = 0; i < profile.r1; ++i) v *= gamma_r(s, eps);
  for (int i = 0; i < profile.r2; ++i) v *= gamma_c(s, eps);
  return v;
}

// Lambda(z)/Lambda(z+1) for Re z > 1, via Gamma differences so large |z| stays finite.
inline cplx lambda_ratio(cplx z, const NumberFieldProfile& profile = rational_profile()) {
  if (!(z.real() > 1))
    throw Error(ErrorKind::OutOfRegime, "Lambda ratio needs Re z > 1, got " + detail::fmt(z));
  if (!profile.rational) return lambda_completed(z, profile) / lambda_completed(z + 1.0, profile);
  cplx lg = log_gamma(z / 2.0) - log_gamma((z + 1.0) / 2.0);
  return std::sqrt(kPi) * std::exp(lg) * zeta(z) / zeta(z + 1.0);
}

// A numerical sup of |Lambda(z)/Lambda(z+1)| over Re z >= 1 + epsilon: grid
// maximum over Re z in [1+eps, 1+eps+60], |Im z| <= 60, times a 5% margin.
inline double ratio_sup_bound(double epsilon, const NumberFieldProfile& profile = rational_profile()) {
  if (!(epsilon > 0)) throw Error(ErrorKind::InvalidArgument, "ratio_sup_bound needs epsilon > 0");
  double best = 0;
  const double x0 = 1 + epsilon;
  for (double dx : {0.0, 0.05, 0.15, 0.3, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 5.0, 8.0, 13.0, 20.0, 35.0, 60.0})
    for (double y = 0; y <= 60.0; y += (y < 4 ? 0.25 : 1.0))
      best = std::max(best, std::abs(lambda_ratio(cplx(x0 + dx, y), profile)));
  return best * 1.05;
}

// An upper bound for |Lambda(z)/Lambda(z+1)| on the whole half-plane Re z >= t > 1:
// sqrt(pi) Gamma(t/2)/Gamma((t+1)/2) zeta(t) zeta(t+1). The Gamma quotient is
// largest on the real axis, |zeta(z)| <= zeta(t) and |1/zeta(z+1)| <= zeta(t+1).
// Nonincreasing in t.
inline double ratio_line_bound(double t) {
  if (!(t > 1)) throw Error(ErrorKind::OutOfRegime, "ratio_line_bound needs t > 1");
  double lg = std::lgamma(t / 2) - std::lgamma((t + 1) / 2);
  return std::sqrt(kPi) * std::exp(lg) * zeta(t).real() * zeta(t + 1).real();
}

// K_nu(y) = int_0^inf exp(-y cosh u) cosh(nu u) du by the trapezoid rule.
inline cplx bessel_k(cplx nu, double y) {
  if (!(y > 0)) throw Error(ErrorKind::NonpositiveArgument, "bessel_k needs y > 0");
  const double a = std::abs(nu.real());
  // exponent -y cosh u + a u peaks at sinh u = a/y
  const double ustar = std::asinh(a / y);
  const double peak = -y * std::cosh(ustar) + a * ustar;
  double U = ustar + 1;
  while (-y * std::cosh(U) + a * U > peak - 45) U += 0.25;
  const double h = 0.03125;
  const int n = static_cast<int>(std::ceil(U / h));
  cplx sum = 0;
  for (int k = 0; k <= n; ++k) {
    double u = k * h;
    double e = -y * std::cosh(u) - peak;
    cplx f = 0.5 * (std::exp(e + nu * u) + std::exp(e - nu * u));
    sum += (k == 0 ? 0.5 : 1.0) * f;
  }
  return sum * h * std::exp(peak);
}

}  // namespace affeis
