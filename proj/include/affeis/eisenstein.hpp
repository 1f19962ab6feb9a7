#pragma once

// Gindikin-Karpelevich coefficients, constant terms of affine Eisenstein series
// over Q, local Gindikin-Karpelevich and Whittaker factors, and the psi_1
// Fourier coefficient of the affine SL_2 series.

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "affeis/affine_weyl.hpp"
#include "affeis/special_functions.hpp"

namespace affeis {

// A real point H of the affine Cartan: (a sigma(q))^mu = exp <mu, H>, d_coord = log|q|.
struct TorusLogPoint {
  std::vector<double> fin;  // coroot coordinates
  double c_coord = 0;
  double d_coord = 0;
};

inline TorusLogPoint pure_q_point(const FiniteCartanData& d, double abs_q) {
  return {std::vector<double>(d.rank, 0.0), 0.0, std::log(abs_q)};
}

// Over Q the character is a^{mu_chi}, so it is the complex weight itself.
struct UnramifiedCharacterExponent {
  ComplexWeight mu_chi;
};

struct TermLog {
  AffineWeylElement w;
  cplx value;
};

struct SeriesResult {
  cplx value = 0;
  std::int64_t terms_used = 0;
  double tail_bound = 0;
  std::vector<TermLog> per_term_log;
};

inline double godement_threshold(const FiniteCartanData& d) {
  return static_cast<double>(d.coxeter_h + d.dual_coxeter_hv);
}

namespace detail {

inline ComplexWeight to_complex(const RatWeight& w) { return w.cast<cplx>(); }

inline AffineCoroot<cplx> to_complex(const RatCoweight& h) { return h.cast<cplx>(); }

inline AffineCoroot<cplx> to_coweight(const TorusLogPoint& g) {
  AffineCoroot<cplx> h;
  for (double x : g.fin) h.gamma.emplace_back(x);
  h.c_coeff = g.c_coord;
  h.d_coeff = g.d_coord;
  return h;
}

inline void check_point(const FiniteCartanData& d, const TorusLogPoint& g) {
  if (static_cast<int>(g.fin.size()) != d.rank)
    throw Error(ErrorKind::DimensionMismatch, "torus point has the wrong rank");
  if (!(g.d_coord > 0))
    throw Error(ErrorKind::QNotExpanding, "constant terms need |q| > 1 (d_coord > 0)");
}

inline ComplexWeight s_L_minus_rho(const FiniteCartanData& d, cplx s) {
  ComplexWeight m = weight_L<cplx>(d).scaled(s);
  return m - to_complex(rho_tilde(d));
}

// The Lambda arguments <mu - rho~, beta^vee> over the inversion set of w.
inline std::vector<cplx> lambda_arguments(const FiniteCartanData& d, const AffineWeylElement& w,
                                          const ComplexWeight& mu_minus_rho) {
  std::vector<cplx> z;
  for (const auto& b : inversion_set(d, w)) z.push_back(pair(mu_minus_rho, to_complex(affine_coroot(d, b))));
  return z;
}

// exponent <rho~ + w^{-1}(mu - rho~), H>
inline cplx term_exponent(const FiniteCartanData& d, const AffineWeylElement& w,
                          const ComplexWeight& mu_minus_rho, const AffineCoroot<cplx>& H) {
  ComplexWeight e = to_complex(rho_tilde(d)) + act_on_weight(d, inverse(d, w), mu_minus_rho);
  return pair(e, H);
}

// Shape constants of the per-term bound K0 * exp(b r - a r^2) at ||gamma|| = r.
struct TailShape {
  double log_k0 = 0;
  double b = 0;
  double a = 0;
  std::vector<double> box;  // |l_i| <= box_i * r on Q^vee
};

// mu_minus_rho = mu - rho~ with real data nu0 - kappa delta + sigma L.
inline TailShape tail_shape(const FiniteCartanData& d, const ComplexWeight& mu_minus_rho,
                            const TorusLogPoint& g, double cmax, double multiplicity) {
  std::vector<double> nu0, hf = g.fin;
  for (const auto& x : mu_minus_rho.mu0) nu0.push_back(x.real());
  const double sigma = mu_minus_rho.sigma.real();
  const double kappa = mu_minus_rho.kappa.real();
  const double nu0_norm = std::sqrt(std::max(0.0, weight_inner(d, nu0, nu0)));
  const double hf_norm = std::sqrt(std::max(0.0, coweight_inner(d, hf, hf)));
  double rho_h = 0;
  for (int i = 0; i < d.rank; ++i) rho_h += to_double(d.rho[i]) * hf[i];
  double root_sum = 0;
  for (const auto& a : d.positive_roots) root_sum += std::sqrt(to_double(root_norm_sq(d, a)));
  TailShape t;
  t.log_k0 = rho_h + nu0_norm * hf_norm - g.d_coord * kappa +
             (d.dual_coxeter_hv + sigma) * g.c_coord +
             static_cast<double>(d.num_positive()) * std::log(cmax) + std::log(multiplicity);
  t.b = sigma * hf_norm + g.d_coord * nu0_norm + root_sum * std::log(cmax);
  t.a = g.d_coord * sigma / 2;
  for (int i = 0; i < d.rank; ++i) t.box.push_back(std::sqrt(to_double(d.weight_gram[i][i])));
  return t;
}

// Bound for all terms with ||gamma|| > r0, summed over unit shells with box lattice counts.
inline double analytic_remainder(const TailShape& t, double r0) {
  if (!(t.a > 0)) return HUGE_VAL;
  const double rstar = t.b / (2 * t.a);
  double acc = 0;
  for (int k = 0; k < 100000; ++k) {
    double lo = r0 + k, hi = lo + 1;
    double r = std::clamp(rstar, lo, hi);
    double logp = 0;
    for (double bx : t.box) logp += std::log(2 * bx * hi + 1);
    double lt = logp + t.log_k0 + t.b * r - t.a * r * r;
    double term = std::exp(lt);
    acc += term;
    if (lo > rstar && (term <= 1e-18 * acc || lt < -745)) break;
  }
  return acc;
}

inline void check_regime(const std::vector<cplx>& z) {
  for (cplx x : z)
    if (!(x.real() > 1))
      throw Error(ErrorKind::GodementViolated,
                  "Gindikin-Karpelevich factor argument " + fmt(x) + " has real part <= 1");
}

inline cplx ratio_product(const std::vector<cplx>& z) {
  cplx c = 1;
  for (cplx x : z) c *= lambda_ratio(x);
  return c;
}

inline double ratio_bound_product(const std::vector<cplx>& z) {
  double c = 1;
  for (cplx x : z) c *= ratio_line_bound(x.real());
  return c;
}

constexpr int kTailShells = 3;

}  // namespace detail

// c_w(s) for w in W(Delta, emptyset).
inline cplx gk_coefficient(const FiniteCartanData& d, const AffineWeylElement& w, cplx s) {
  if (!(s.real() > godement_threshold(d)))
    throw Error(ErrorKind::GodementViolated,
                "Godement's criterion needs Re s > h + h^vee = " + std::to_string(d.coxeter_h + d.dual_coxeter_hv));
  if (!is_min_coset_rep(d, w))
    throw Error(ErrorKind::NonCosetRep, "gk_coefficient needs w^{-1} alpha_i > 0 for i = 1..n");
  auto z = detail::lambda_arguments(d, w, detail::s_L_minus_rho(d, s));
  detail::check_regime(z);
  return detail::ratio_product(z);
}

// Which hypothesis guards the character version: Godement on every simple
// coroot, or only Re > 1 for each factor actually used (needed for mu = sL).
enum class CharRegime { Godement, PerFactor };

inline void check_godement_char(const FiniteCartanData& d, const UnramifiedCharacterExponent& chi) {
  if (static_cast<int>(chi.mu_chi.mu0.size()) != d.rank)
    throw Error(ErrorKind::DimensionMismatch, "character exponent has the wrong rank");
  for (int i = 0; i <= d.rank; ++i) {
    cplx p = pair(chi.mu_chi, detail::to_complex(affine_simple_coroot(d, i)));
    if (!(p.real() > 2))
      throw Error(ErrorKind::GodementViolated, "Godement's criterion needs Re <mu_chi, alpha_" +
                                                   std::to_string(i) + "^vee> > 2, got " + detail::fmt(p));
  }
}

inline cplx gk_coefficient_char(const FiniteCartanData& d, const AffineWeylElement& w,
                                const UnramifiedCharacterExponent& chi,
                                CharRegime regime = CharRegime::Godement) {
  if (regime == CharRegime::Godement) check_godement_char(d, chi);
  ComplexWeight m = chi.mu_chi - detail::to_complex(rho_tilde(d));
  auto z = detail::lambda_arguments(d, w, m);
  detail::check_regime(z);
  return detail::ratio_product(z);
}

// The height constant term summed over coset representatives with ||gamma|| <= radius.
//
// tail_bound covers every omitted term: those with radius < ||gamma|| <= radius + 3
// (shell rounded up) are bounded one by one by |exp| times ratio_line_bound per
// factor, the rest by the Gaussian shape exp(b r - a r^2) with box lattice counts.
inline SeriesResult constant_term_height(const FiniteCartanData& d, cplx s, const TorusLogPoint& g,
                                         double radius, bool log_terms = false) {
  if (!(s.real() > godement_threshold(d)))
    throw Error(ErrorKind::GodementViolated,
                "Godement's criterion needs Re s > h + h^vee = " + std::to_string(d.coxeter_h + d.dual_coxeter_hv));
  detail::check_point(d, g);
  if (!(radius >= 0)) throw Error(ErrorKind::InvalidArgument, "radius must be >= 0");
  const auto weyl = enumerate_finite_weyl(d);
  const ComplexWeight m = detail::s_L_minus_rho(d, s);
  const auto H = detail::to_coweight(g);
  const double outer = std::ceil(radius) + detail::kTailShells;
  SeriesResult out;
  double shell = 0;
  for (const auto& w : enumerate_min_coset_reps(d, outer, weyl)) {
    auto z = detail::lambda_arguments(d, w, m);
    cplx ex = detail::term_exponent(d, w, m, H);
    if (to_double(coweight_norm_sq(d, w.translation)) <= radius * radius * (1 + 1e-12) + 1e-12) {
      cplx term = std::exp(ex) * detail::ratio_product(z);
      out.value += term;
      ++out.terms_used;
      if (log_terms) out.per_term_log.push_back({w, term});
    } else {
      shell += std::exp(ex.real()) * detail::ratio_bound_product(z);
    }
  }
  // every factor argument has real part >= s - h^vee - h + 1
  const double tmin = s.real() - godement_threshold(d) + 1;
  const double cmax = std::max(1.0, ratio_line_bound(tmin));
  out.tail_bound = shell + detail::analytic_remainder(detail::tail_shape(d, m, g, cmax, 1.0), outer);
  return out;
}

// The character constant term over all of the affine Weyl group with
// ||gamma|| <= radius, or over coset representatives only when
// restrict_to_coset_reps is set (then each factor is only required to lie in
// Re > 1 and the L-coefficient must exceed h^vee).
inline SeriesResult constant_term_char(const FiniteCartanData& d, const UnramifiedCharacterExponent& chi,
                                       const TorusLogPoint& g, double radius,
                                       bool restrict_to_coset_reps = false, bool log_terms = false) {
  if (!restrict_to_coset_reps) check_godement_char(d, chi);
  detail::check_point(d, g);
  if (!(radius >= 0)) throw Error(ErrorKind::InvalidArgument, "radius must be >= 0");
  const ComplexWeight m = chi.mu_chi - detail::to_complex(rho_tilde(d));
  double tmin;
  if (restrict_to_coset_reps) {
    if (static_cast<int>(chi.mu_chi.mu0.size()) != d.rank)
      throw Error(ErrorKind::DimensionMismatch, "character exponent has the wrong rank");
    // beta^vee = j c + alpha^vee with j >= 1 on coset representatives
    double mn = HUGE_VAL;
    for (const auto& a : d.roots) {
      std::vector<cplx> x;
      for (auto v : coroot(d, a)) x.emplace_back(static_cast<double>(v));
      cplx p = 0;
      for (int i = 0; i < d.rank; ++i) p += m.mu0[i] * x[i];
      mn = std::min(mn, p.real());
    }
    tmin = m.sigma.real() + mn;
    if (!(m.sigma.real() > 0) || !(tmin > 1))
      throw Error(ErrorKind::GodementViolated,
                  "coset-restricted series needs every factor argument to have real part > 1");
  } else {
    tmin = HUGE_VAL;
    for (int i = 0; i <= d.rank; ++i)
      tmin = std::min(tmin, pair(chi.mu_chi, detail::to_complex(affine_simple_coroot(d, i))).real() - 1);
  }
  const auto weyl = enumerate_finite_weyl(d);
  const auto H = detail::to_coweight(g);
  const double outer = std::ceil(radius) + detail::kTailShells;
  std::vector<AffineWeylElement> elems =
      restrict_to_coset_reps ? enumerate_min_coset_reps(d, outer, weyl) : enumerate_affine_ball(d, outer, weyl);
  SeriesResult out;
  double shell = 0;
  for (const auto& w : elems) {
    auto z = detail::lambda_arguments(d, w, m);
    detail::check_regime(z);
    cplx ex = detail::term_exponent(d, w, m, H);
    if (to_double(coweight_norm_sq(d, w.translation)) <= radius * radius * (1 + 1e-12) + 1e-12) {
      cplx term = std::exp(ex) * detail::ratio_product(z);
      out.value += term;
      ++out.terms_used;
      if (log_terms) out.per_term_log.push_back({w, term});
    } else {
      shell += std::exp(ex.real()) * detail::ratio_bound_product(z);
    }
  }
  const double cmax = std::max(1.0, ratio_line_bound(tmin));
  const double mult = restrict_to_coset_reps ? 1.0 : static_cast<double>(weyl.size());
  out.tail_bound = shell + detail::analytic_remainder(detail::tail_shape(d, m, g, cmax, mult), outer);
  return out;
}

// Local Gindikin-Karpelevich factor at a p-adic place.
inline cplx gk_local_padic(cplx s, cplx chi_at_uniformizer, std::int64_t q_v, double vol = 1.0) {
  const double lq = std::log(static_cast<double>(q_v));
  cplx x = chi_at_uniformizer * std::exp(-s * lq);
  if (!(std::abs(x) < 1))
    throw Error(ErrorKind::DivergentRegion, "local factor needs |chi(w) q^{-s}| < 1");
  return vol * (1.0 - x / static_cast<double>(q_v)) / (1.0 - x);
}

enum class ArchPlace { Real, Complex };

// Gamma_v(s + s0) / Gamma_v(s + s0 + 1)
inline cplx gk_local_arch(cplx s, cplx s0, ArchPlace place) {
  cplx t = s + s0;
  if (place == ArchPlace::Real) {
    detail::check_gamma_pole(t / 2.0, kDefaultPoleEps);
    detail::check_gamma_pole((t + 1.0) / 2.0, kDefaultPoleEps);
    return std::sqrt(kPi) * std::exp(log_gamma(t / 2.0) - log_gamma((t + 1.0) / 2.0));
  }
  detail::check_gamma_pole(t, kDefaultPoleEps);
  return 2 * kPi / t;
}

inline cplx whittaker_local_padic(cplx s, cplx chi_at_uniformizer, std::int64_t q_v, double vol = 1.0) {
  return vol * (1.0 - chi_at_uniformizer * std::exp(-(s + 1.0) * std::log(static_cast<double>(q_v))));
}

// 2 K_{(s+s_v)/2}(2 pi) / Gamma_R(s + 1 + s_v)
inline cplx whittaker_local_real(cplx s, cplx s_v) {
  cplx t = s + 1.0 + s_v;
  detail::check_gamma_pole(t / 2.0, kDefaultPoleEps);
  cplx inv_gr = std::exp(t / 2.0 * std::log(kPi) - log_gamma(t / 2.0));
  return 2.0 * bessel_k((s + s_v) / 2.0, 2 * kPi) * inv_gr;
}

// W(s, |.|^z) = 2 K_{(s+z)/2}(2 pi) / (Gamma_R(s+1+z) zeta(s+1+z))
inline cplx whittaker_global(cplx s, cplx z) {
  cplx t = s + 1.0 + z;
  if (std::abs(t - 1.0) < kDefaultPoleEps) throw Error(ErrorKind::PoleProximity, "zeta pole at s + 1 + z = 1");
  return whittaker_local_real(s, z) / zeta(t);
}

struct FourierTerm {
  int n = 0;
  cplx first = 0;   // the n-th term of the sum over n >= 1 (zero at n = 0)
  cplx second = 0;  // the n-th term of the sum over n >= 0
};

// The two n-th terms of the psi_1 Fourier coefficient at sigma(q), with
// chi_0 = |.|^{z0}, chi_1 = |.|^{z1} and L(s, |.|^z) = Lambda(s + z).
inline FourierTerm sl2_fourier_term(cplx z0, cplx z1, double log_q, int n) {
  FourierTerm t;
  t.n = n;
  const double nn = n;
  if (n >= 1) {
    cplx e = (nn - 2 * nn * nn) + nn * z1 - nn * nn * z0;
    cplx prod = 1;
    for (int i = 1; i <= 2 * n - 1; ++i) prod *= lambda_ratio(1.0 - 2.0 * i + static_cast<double>(i) * z0 - z1);
    t.first = std::exp(e * log_q) * whittaker_global(1.0 - 4 * nn, 2 * nn * z0 - z1) * prod;
  }
  cplx e = (-nn - 2 * nn * nn) - nn * z1 - nn * nn * z0;
  cplx prod = 1;
  for (int i = 1; i <= 2 * n; ++i) prod *= lambda_ratio(1.0 - 2.0 * i + static_cast<double>(i - 1) * z0 + z1);
  t.second = std::exp(e * log_q) * whittaker_global(-1.0 - 4 * nn, 2 * nn * z0 + z1) * prod;
  return t;
}

struct FourierSeries {
  SeriesResult result;
  std::vector<FourierTerm> terms;
};

// Partial sums up to n_max; tail_bound is an estimate, twice the sum of the
// magnitudes of the next three terms (they decay like |q|^{-2n^2 - n^2 Re z0}).
inline FourierSeries sl2_fourier_psi1(cplx z0, cplx z1, double log_q, int n_max) {
  if (!(z1.real() > 2) || !((z0 - z1).real() > 2))
    throw Error(ErrorKind::GodementViolated, "Godement's criterion needs Re z1 > 2 and Re(z0 - z1) > 2");
  if (!(log_q > 0)) throw Error(ErrorKind::QNotExpanding, "the Fourier series needs |q| > 1");
  if (n_max < 0) throw Error(ErrorKind::InvalidArgument, "n_max must be >= 0");
  FourierSeries out;
  for (int n = 0; n <= n_max; ++n) {
    FourierTerm t = sl2_fourier_term(z0, z1, log_q, n);
    out.result.value += t.first + t.second;
    out.result.terms_used += (n >= 1 ? 2 : 1);
    out.terms.push_back(t);
  }
  double tail = 0;
  for (int n = n_max + 1; n <= n_max + 3; ++n) {
    FourierTerm t = sl2_fourier_term(z0, z1, log_q, n);
    tail += std::abs(t.first) + std::abs(t.second);
  }
  out.result.tail_bound = 2 * tail;
  return out;
}

}  // namespace affeis
