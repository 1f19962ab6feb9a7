#pragma once

// The affine Weyl group W x| Q^vee with elements in normal form T_gamma * w0.

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <optional>

#include "affeis/affine_roots.hpp"

namespace affeis {

struct AffineWeylElement {
  IntVec translation;  // gamma in coroot coordinates
  FiniteWeylElement finite;

  bool operator==(const AffineWeylElement& o) const {
    return translation == o.translation && finite == o.finite;
  }
  bool operator<(const AffineWeylElement& o) const {
    return translation != o.translation ? translation < o.translation : finite < o.finite;
  }
};

inline AffineWeylElement affine_identity(const FiniteCartanData& d) {
  return {IntVec(d.rank, 0), finite_identity(d)};
}

inline AffineWeylElement translation(const FiniteCartanData& d, const IntVec& gamma) {
  return {gamma, finite_identity(d)};
}

inline AffineWeylElement multiply(const FiniteCartanData& d, const AffineWeylElement& a,
                                  const AffineWeylElement& b) {
  return {a.translation + apply_matrix(a.finite.on_coroots, b.translation), compose(d, a.finite, b.finite)};
}

inline AffineWeylElement inverse(const FiniteCartanData& d, const AffineWeylElement& w) {
  FiniteWeylElement winv = finite_inverse(d, w.finite);
  return {-apply_matrix(winv.on_coroots, w.translation), winv};
}

// Reflection in a finite root, built as u r_i u^{-1} where alpha = u alpha_i.
inline FiniteWeylElement finite_reflection(const FiniteCartanData& d, const IntVec& alpha) {
  IntVec a = is_positive_vec(alpha) ? alpha : -alpha;
  if (!is_root(d, a)) throw Error(ErrorKind::NotARoot, "reflection in a non-root");
  std::vector<int> path;
  while (height(a) > 1) {
    for (int i = 1; i <= d.rank; ++i) {
      IntVec e(d.rank, 0);
      e[i - 1] = 1;
      std::int64_t p = pair_root_coroot(d, a, coroot(d, e));
      if (p > 0) {
        a[i - 1] -= p;
        path.push_back(i);
        break;
      }
    }
  }
  int j = 0;
  for (int i = 0; i < d.rank; ++i)
    if (a[i] == 1) j = i + 1;
  std::vector<int> word(path.begin(), path.end());
  word.push_back(j);
  word.insert(word.end(), path.rbegin(), path.rend());
  return from_word(d, word);
}

// r_i for i = 0..n; r_0 = T_{theta^vee} r_theta.
inline AffineWeylElement affine_simple_reflection(const FiniteCartanData& d, int i) {
  if (i == 0) return {coroot(d, d.theta()), finite_reflection(d, d.theta())};
  return {IntVec(d.rank, 0), simple_reflection(d, i)};
}

inline AffineWeylElement from_affine_word(const FiniteCartanData& d, const std::vector<int>& word) {
  AffineWeylElement w = affine_identity(d);
  for (int i : word) w = multiply(d, w, affine_simple_reflection(d, i));
  return w;
}

// T_gamma w0 on mu0 - kappa delta + sigma L.
template <class S>
AffineWeight<S> act_on_weight(const FiniteCartanData& d, const AffineWeylElement& w,
                              const AffineWeight<S>& mu) {
  std::vector<S> m(d.rank, S{});
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < d.rank; ++j)
      if (w.finite.on_weights[i][j] != 0) m[i] += S(w.finite.on_weights[i][j]) * mu.mu0[j];
  std::vector<S> g(w.translation.begin(), w.translation.end());
  S pw{};
  for (int i = 0; i < d.rank; ++i) pw += m[i] * g[i];
  S gg = coweight_inner(d, g, g);
  std::vector<S> ng = nu(d, g);
  AffineWeight<S> out;
  out.mu0.resize(d.rank);
  for (int i = 0; i < d.rank; ++i) out.mu0[i] = m[i] + mu.sigma * ng[i];
  out.sigma = mu.sigma;
  out.kappa = mu.kappa + pw + mu.sigma * gg / S(2);
  return out;
}

template <class S>
AffineCoroot<S> act_on_coweight(const FiniteCartanData& d, const AffineWeylElement& w,
                                const AffineCoroot<S>& h) {
  std::vector<S> x(d.rank, S{});
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < d.rank; ++j)
      if (w.finite.on_coroots[i][j] != 0) x[i] += S(w.finite.on_coroots[i][j]) * h.gamma[j];
  std::vector<S> g(w.translation.begin(), w.translation.end());
  S xg = coweight_inner(d, x, g);
  S gg = coweight_inner(d, g, g);
  AffineCoroot<S> out;
  out.gamma.resize(d.rank);
  for (int i = 0; i < d.rank; ++i) out.gamma[i] = x[i] + h.d_coeff * g[i];
  out.d_coeff = h.d_coeff;
  out.c_coeff = h.c_coeff - xg - h.d_coeff * gg / S(2);
  return out;
}

// w(alpha + j delta) = w0 alpha + (j - <w0 alpha, gamma>) delta.
inline AffineRoot act_on_root(const FiniteCartanData& d, const AffineWeylElement& w,
                              const AffineRoot& b) {
  IntVec a = apply_matrix(w.finite.on_roots, b.classical);
  return {a, b.level - pair_root_coroot(d, a, w.translation)};
}

// Length from the sign-flip count, closed form per finite root.
inline std::int64_t length(const FiniteCartanData& d, const AffineWeylElement& w) {
  FiniteWeylElement winv = finite_inverse_raw(w.finite);
  std::int64_t l = 0;
  for (const auto& a : d.positive_roots) {
    std::int64_t m = pair_root_coroot(d, a, w.translation);
    bool neg = !is_positive_vec(apply_matrix(winv.on_roots, a));
    // alpha + j delta, j >= 0
    if (m < 0) l += -m;
    if (m <= 0 && neg) l += 1;
    // -alpha + j delta, j >= 1: <-alpha, gamma> = -m
    if (m >= 1) l += m - 1;
    if (m >= 1 && !neg) l += 1;
  }
  return l;
}

inline bool is_inversion(const FiniteCartanData& d, const AffineWeylElement& winv,
                         const AffineRoot& b) {
  AffineRoot img = act_on_root(d, winv, b);
  return !img.is_positive();
}

// All positive real beta with w^{-1} beta negative, sorted by (level, classical index).
inline std::vector<AffineRoot> inversion_set(const FiniteCartanData& d, const AffineWeylElement& w,
                                             std::int64_t max_level_hint = 0) {
  AffineWeylElement winv = inverse(d, w);
  const std::int64_t l = length(d, w);
  std::int64_t lev = std::max<std::int64_t>(max_level_hint, 0);
  for (;;) {
    std::vector<AffineRoot> out;
    for (const auto& b : enumerate_positive_real_roots(d, lev))
      if (is_inversion(d, winv, b)) out.push_back(b);
    if (static_cast<std::int64_t>(out.size()) >= l) return out;
    lev = std::max<std::int64_t>(2 * lev, lev + 1);
  }
}

// Word by left descent, smallest index first.
inline std::vector<int> reduced_word(const FiniteCartanData& d, const AffineWeylElement& w) {
  std::vector<int> word;
  AffineWeylElement winv = inverse(d, w);
  std::vector<AffineWeylElement> refl;
  for (int i = 0; i <= d.rank; ++i) refl.push_back(affine_simple_reflection(d, i));
  for (;;) {
    int found = -1;
    for (int i = 0; i <= d.rank && found < 0; ++i)
      if (!act_on_root(d, winv, affine_simple_root(d, i)).is_positive()) found = i;
    if (found < 0) break;
    word.push_back(found);
    winv = multiply(d, winv, refl[found]);
  }
  return word;
}

// beta_j = r_{i_1} ... r_{i_{j-1}} alpha_{i_j}.
inline std::vector<AffineRoot> inversion_set_from_word(const FiniteCartanData& d,
                                                       const std::vector<int>& word) {
  std::vector<AffineRoot> out;
  AffineWeylElement prefix = affine_identity(d);
  for (int i : word) {
    out.push_back(act_on_root(d, prefix, affine_simple_root(d, i)));
    prefix = multiply(d, prefix, affine_simple_reflection(d, i));
  }
  return out;
}

inline RatWeight sum_as_weight(const FiniteCartanData& d, const std::vector<AffineRoot>& roots) {
  RatWeight acc = weight_zero(d);
  for (const auto& b : roots) acc += root_as_affine_weight(d, b);
  return acc;
}

// Lattice points of Q^vee with (gamma,gamma) <= radius^2, sorted by norm then lexicographically.
inline std::vector<IntVec> coroot_ball(const FiniteCartanData& d, double radius) {
  std::vector<IntVec> out;
  if (radius < 0) return out;
  const double r2 = radius * radius * (1 + 1e-12) + 1e-12;
  std::vector<std::int64_t> bound(d.rank);
  for (int i = 0; i < d.rank; ++i)
    bound[i] = static_cast<std::int64_t>(std::floor(radius * std::sqrt(to_double(d.weight_gram[i][i])) + 1e-9));
  IntVec x(d.rank, 0);
  std::function<void(int)> rec = [&](int k) {
    if (k == d.rank) {
      if (to_double(coweight_norm_sq(d, x)) <= r2) out.push_back(x);
      return;
    }
    for (std::int64_t v = -bound[k]; v <= bound[k]; ++v) {
      x[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
  std::stable_sort(out.begin(), out.end(), [&](const IntVec& a, const IntVec& b) {
    Rational na = coweight_norm_sq(d, a), nb = coweight_norm_sq(d, b);
    return na != nb ? na < nb : a < b;
  });
  return out;
}

// w^{-1} alpha_i > 0 for i = 1..n.
inline bool is_min_coset_rep(const FiniteCartanData& d, const AffineWeylElement& w) {
  AffineWeylElement winv = inverse(d, w);
  for (int i = 1; i <= d.rank; ++i)
    if (!act_on_root(d, winv, affine_simple_root(d, i)).is_positive()) return false;
  return true;
}

struct CosetRep {
  AffineWeylElement w;
  Rational norm_sq;
};

// One representative of each coset W T_gamma with ||gamma|| <= radius, strictly
// satisfying w^{-1}Delta > 0, ordered by the norm and then the translation part.
inline std::vector<AffineWeylElement> enumerate_min_coset_reps(
    const FiniteCartanData& d, double radius, const std::vector<FiniteWeylElement>& weyl) {
  std::vector<AffineWeylElement> out;
  for (const auto& g : coroot_ball(d, radius)) {
    std::optional<AffineWeylElement> rep;
    for (const auto& v : weyl) {
      IntVec vg = apply_matrix(v.on_coroots, g);
      bool ok = true;
      FiniteWeylElement vinv;
      bool have_inv = false;
      for (int i = 1; i <= d.rank && ok; ++i) {
        IntVec e(d.rank, 0);
        e[i - 1] = 1;
        std::int64_t p = pair_root_coroot(d, e, vg);
        if (p < 0) ok = false;
        if (p == 0) {
          if (!have_inv) {
            vinv = finite_inverse_raw(v);
            have_inv = true;
          }
          if (!is_positive_vec(apply_matrix(vinv.on_roots, e))) ok = false;
        }
      }
      if (ok) {
        rep = AffineWeylElement{vg, v};
        break;
      }
    }
    if (!rep) throw Error(ErrorKind::InvalidArgument, "no coset representative found");
    out.push_back(*rep);
  }
  std::stable_sort(out.begin(), out.end(), [&](const AffineWeylElement& a, const AffineWeylElement& b) {
    Rational na = coweight_norm_sq(d, a.translation), nb = coweight_norm_sq(d, b.translation);
    return na != nb ? na < nb : a.translation < b.translation;
  });
  return out;
}

inline std::vector<AffineWeylElement> enumerate_min_coset_reps(const FiniteCartanData& d,
                                                               double radius) {
  return enumerate_min_coset_reps(d, radius, enumerate_finite_weyl(d));
}

// All T_gamma w0 with ||gamma|| <= radius; order by gamma, then the order of `weyl`.
inline std::vector<AffineWeylElement> enumerate_affine_ball(
    const FiniteCartanData& d, double radius, const std::vector<FiniteWeylElement>& weyl) {
  std::vector<AffineWeylElement> out;
  for (const auto& g : coroot_ball(d, radius))
    for (const auto& v : weyl) out.push_back({g, v});
  return out;
}

// Every element of length <= max_len, by breadth-first search on simple reflections.
inline std::vector<AffineWeylElement> enumerate_by_length(const FiniteCartanData& d, int max_len) {
  std::vector<AffineWeylElement> out{affine_identity(d)};
  std::set<AffineWeylElement> seen{out[0]};
  std::vector<AffineWeylElement> refl;
  for (int i = 0; i <= d.rank; ++i) refl.push_back(affine_simple_reflection(d, i));
  std::size_t begin = 0;
  for (int len = 0; len < max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t k = begin; k < end; ++k)
      for (const auto& r : refl) {
        AffineWeylElement w{out[k].translation + apply_matrix(out[k].finite.on_coroots, r.translation),
                            compose_raw(out[k].finite, r.finite)};
        if (seen.insert(w).second) out.push_back(std::move(w));
      }
    begin = end;
  }
  for (auto& w : out) w.finite.word = finite_reduced_word(d, w.finite);
  return out;
}

// Constants for the Demazure-cone bounds.
struct DemazureConstants {
  double kappa_tilde = 0;    // max_i ||varpi_i^vee||
  std::int64_t kappa_hat = 0;  // strict bound: max level in Phi_w < kappa_hat * l(w)
  double c1 = 0;             // sum |l_i| <= c1 ||lambda|| on Q^vee
  double c2 = 0;             // c1 * max_i l(T_{alpha_i^vee})
};

inline DemazureConstants demazure_constants(const FiniteCartanData& d) {
  DemazureConstants k;
  for (int i = 0; i < d.rank; ++i) {
    RatVec x = fundamental_coweight(d, i);
    k.kappa_tilde = std::max(k.kappa_tilde, std::sqrt(to_double(coweight_inner(d, x, x))));
  }
  double max_root = 0;
  for (const auto& a : d.positive_roots) max_root = std::max(max_root, std::sqrt(to_double(root_norm_sq(d, a))));
  const double np = static_cast<double>(d.num_positive());
  k.kappa_hat = static_cast<std::int64_t>(std::floor(k.kappa_tilde * max_root * (1 + np))) + 1;
  // max over sign vectors s of sqrt(s^T G^{-1} s), G the coroot Gram matrix
  for (std::uint64_t mask = 0; mask < (1ull << d.rank); ++mask) {
    RatVec s(d.rank);
    for (int i = 0; i < d.rank; ++i) s[i] = (mask >> i & 1) ? 1 : -1;
    k.c1 = std::max(k.c1, std::sqrt(to_double(weight_inner(d, s, s))));
  }
  std::int64_t lmax = 0;
  for (int i = 0; i < d.rank; ++i) {
    IntVec e(d.rank, 0);
    e[i] = 1;
    lmax = std::max(lmax, length(d, translation(d, e)));
  }
  k.c2 = k.c1 * static_cast<double>(lmax);
  return k;
}

inline bool is_dominant_integral(const FiniteCartanData& d, const RatWeight& lam) {
  for (const auto& m : lam.mu0)
    if (m.denominator() != 1 || m < 0) return false;
  if (lam.sigma.denominator() != 1) return false;
  Rational p = pair(lam, affine_simple_coroot(d, 0));
  return p >= 0;
}

// Delta-deficit kappa of w(lambda) for dominant lambda with kappa = 0.
inline Rational kappa_of(const FiniteCartanData& d, const RatWeight& lam, const AffineWeylElement& w) {
  if (lam.kappa != 0 || !is_dominant_integral(d, lam))
    throw Error(ErrorKind::NonDominant, "kappa_of needs a dominant integral weight with kappa = 0");
  return act_on_weight(d, w, lam).kappa;
}

// kappa_0 with kappa_{w lambda} <= kappa_0 l(w)^2.
inline double kappa_zero(const FiniteCartanData& d, const RatWeight& lam) {
  DemazureConstants k = demazure_constants(d);
  const double a = k.kappa_tilde * (1 + static_cast<double>(d.num_positive()));
  double n0 = std::sqrt(std::max(0.0, to_double(weight_inner(d, lam.mu0, lam.mu0))));
  return n0 * a + to_double(lam.sigma) / 2 * a * a;
}

struct LevelBound {
  std::int64_t max_level;
  Rational ratio;
};

inline LevelBound level_bound_check(const FiniteCartanData& d, const AffineWeylElement& w) {
  std::int64_t l = length(d, w);
  if (l == 0) throw Error(ErrorKind::IdentityElement, "level bound undefined for the identity");
  std::int64_t mx = 0;
  for (const auto& b : inversion_set(d, w)) mx = std::max(mx, b.level);
  return {mx, Rational(mx, l)};
}

}  // namespace affeis
