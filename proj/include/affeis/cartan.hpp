#pragma once

// Finite simple root systems A_n..G_2 in Bourbaki labelling.
//
// Coordinates: roots in the simple-root basis, weights in the fundamental
// weight basis, coweights in the simple-coroot basis. The weight/coweight
// pairing is then the plain dot product.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "affeis/error.hpp"
#include "affeis/rational.hpp"

namespace affeis {

enum class TypeLabel { A, B, C, D, E, F, G };

inline char type_char(TypeLabel t) { return "ABCDEFG"[static_cast<int>(t)]; }

inline TypeLabel parse_type_label(const std::string& s) {
  if (s.size() == 1 && s[0] >= 'A' && s[0] <= 'G') return static_cast<TypeLabel>(s[0] - 'A');
  if (s.size() == 1 && s[0] >= 'a' && s[0] <= 'g') return static_cast<TypeLabel>(s[0] - 'a');
  throw Error(ErrorKind::InvalidType, "unknown type label '" + s + "'");
}

struct FiniteWeylElement {
  IntMatrix on_roots;    // columns are images of simple roots
  IntMatrix on_weights;  // fundamental-weight coordinates
  IntMatrix on_coroots;  // simple-coroot coordinates
  std::vector<int> word; // reduced word in 1..n

  bool operator==(const FiniteWeylElement& o) const { return on_roots == o.on_roots; }
  bool operator<(const FiniteWeylElement& o) const { return on_roots < o.on_roots; }
};

struct FiniteCartanData {
  TypeLabel type = TypeLabel::A;
  int rank = 0;
  IntMatrix cartan;                   // cartan[i][j] = <alpha_i, alpha_j^vee>
  RatMatrix gram;                     // (alpha_i, alpha_j)
  std::vector<IntVec> positive_roots; // sorted by height, then lexicographically
  std::size_t highest_root = 0;
  RatVec rho;                         // all ones in fundamental coordinates
  int coxeter_h = 0;
  int dual_coxeter_hv = 0;

  RatMatrix coroot_gram;     // (alpha_i^vee, alpha_j^vee)
  RatMatrix weight_gram;     // (varpi_i, varpi_j)
  std::vector<IntVec> roots; // positive roots followed by their negatives
  std::map<IntVec, std::size_t> root_index;

  std::size_t num_positive() const { return positive_roots.size(); }
  const IntVec& theta() const { return positive_roots[highest_root]; }
  std::string label() const { return std::string(1, type_char(type)) + std::to_string(rank); }
};

inline bool is_positive_vec(const IntVec& v) {
  bool nonzero = false;
  for (auto x : v) {
    if (x < 0) return false;
    if (x != 0) nonzero = true;
  }
  return nonzero;
}

inline bool is_zero_vec(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

inline std::int64_t height(const IntVec& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

namespace detail {

// Bonds of the Dynkin diagram (0-based) and squared lengths of simple roots.
inline void dynkin_diagram(TypeLabel t, int n, std::vector<std::pair<int, int>>& bonds,
                           RatVec& len) {
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) bonds.push_back({i, i + 1});
  };
  len.assign(n, Rational(2));
  switch (t) {
    case TypeLabel::A:
      chain(n);
      break;
    case TypeLabel::B:
      chain(n);
      len[n - 1] = 1;
      break;
    case TypeLabel::C:
      chain(n);
      for (int i = 0; i + 1 < n; ++i) len[i] = 1;
      break;
    case TypeLabel::D:
      chain(n - 1);
      bonds.push_back({n - 3, n - 1});
      break;
    case TypeLabel::E:
      // 1-3-4-5-6-7-8 with 2 attached to 4
      bonds.push_back({0, 2});
      for (int i = 2; i + 1 < n; ++i) bonds.push_back({i, i + 1});
      bonds.push_back({1, 3});
      break;
    case TypeLabel::F:
      chain(4);
      len[2] = 1;
      len[3] = 1;
      break;
    case TypeLabel::G:
      bonds.push_back({0, 1});
      len[0] = Rational(2, 3);
      break;
  }
}

inline void check_type(TypeLabel t, int n) {
  bool ok = false;
  switch (t) {
    case TypeLabel::A: ok = n >= 1; break;
    case TypeLabel::B: ok = n >= 2; break;
    case TypeLabel::C: ok = n >= 2; break;
    case TypeLabel::D: ok = n >= 3; break;
    case TypeLabel::E: ok = n >= 6 && n <= 8; break;
    case TypeLabel::F: ok = n == 4; break;
    case TypeLabel::G: ok = n == 2; break;
  }
  if (!ok)
    throw Error(ErrorKind::InvalidType,
                std::string(1, type_char(t)) + std::to_string(n) + " is not a simple type");
}

}  // namespace detail

// <beta, x> for a root beta in simple-root coordinates and x in coroot coordinates.
template <class S>
S pair_root_coweight(const FiniteCartanData& d, const IntVec& beta, const std::vector<S>& x) {
  S acc{};
  for (int i = 0; i < d.rank; ++i) {
    if (beta[i] == 0) continue;
    for (int j = 0; j < d.rank; ++j) acc += S(beta[i] * d.cartan[i][j]) * x[j];
  }
  return acc;
}

inline std::int64_t pair_root_coroot(const FiniteCartanData& d, const IntVec& beta, const IntVec& x) {
  std::int64_t acc = 0;
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < d.rank; ++j) acc += beta[i] * d.cartan[i][j] * x[j];
  return acc;
}

// Root in fundamental-weight coordinates.
inline IntVec root_as_weight(const FiniteCartanData& d, const IntVec& beta) {
  IntVec m(d.rank, 0);
  for (int k = 0; k < d.rank; ++k)
    for (int i = 0; i < d.rank; ++i) m[k] += beta[i] * d.cartan[i][k];
  return m;
}

inline Rational root_norm_sq(const FiniteCartanData& d, const IntVec& a) {
  Rational acc = 0;
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < d.rank; ++j) acc += Rational(a[i] * a[j]) * d.gram[i][j];
  return acc;
}

// (x, y) on coweights given in coroot coordinates.
template <class S>
S coweight_inner(const FiniteCartanData& d, const std::vector<S>& x, const std::vector<S>& y) {
  S acc{};
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < d.rank; ++j) acc += x[i] * scalar_from<S>(d.coroot_gram[i][j]) * y[j];
  return acc;
}

inline Rational coweight_norm_sq(const FiniteCartanData& d, const IntVec& x) {
  Rational acc = 0;
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < d.rank; ++j) acc += Rational(x[i] * x[j]) * d.coroot_gram[i][j];
  return acc;
}

// nu(x) = (x, .) as a weight in fundamental coordinates.
template <class S>
std::vector<S> nu(const FiniteCartanData& d, const std::vector<S>& x) {
  std::vector<S> m(d.rank, S{});
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < d.rank; ++j) m[i] += scalar_from<S>(d.coroot_gram[i][j]) * x[j];
  return m;
}

// (mu, mu') on weights in fundamental coordinates.
template <class S>
S weight_inner(const FiniteCartanData& d, const std::vector<S>& a, const std::vector<S>& b) {
  S acc{};
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < d.rank; ++j) acc += a[i] * scalar_from<S>(d.weight_gram[i][j]) * b[j];
  return acc;
}

inline bool is_root(const FiniteCartanData& d, const IntVec& a) {
  return d.root_index.count(a) > 0;
}

// alpha^vee in coroot coordinates: alpha^vee = sum_j a_j (alpha_j,alpha_j)/(alpha,alpha) alpha_j^vee.
inline IntVec coroot(const FiniteCartanData& d, const IntVec& a) {
  if (static_cast<int>(a.size()) != d.rank || !is_root(d, a))
    throw Error(ErrorKind::NotARoot, "vector is not a root of " + d.label());
  Rational n = root_norm_sq(d, a);
  IntVec x(d.rank);
  for (int j = 0; j < d.rank; ++j) {
    Rational c = Rational(a[j]) * d.gram[j][j] / n;
    x[j] = c.numerator();  // integral for every root
  }
  return x;
}

inline IntVec apply_matrix(const IntMatrix& m, const IntVec& v) { return mat_vec(m, v); }

inline FiniteWeylElement finite_identity(const FiniteCartanData& d) {
  auto id = identity_int(d.rank);
  return {id, id, id, {}};
}

// Simple reflection r_i, i in 1..n.
inline FiniteWeylElement simple_reflection(const FiniteCartanData& d, int i) {
  if (i < 1 || i > d.rank) throw Error(ErrorKind::InvalidArgument, "simple index out of range");
  const int k = i - 1, n = d.rank;
  FiniteWeylElement w = finite_identity(d);
  for (int j = 0; j < n; ++j) {
    // r_k(alpha_j) = alpha_j - <alpha_j, alpha_k^vee> alpha_k
    w.on_roots[k][j] -= d.cartan[j][k];
    // mu'_j = mu_j - mu_k <alpha_k, alpha_j^vee>
    w.on_weights[j][k] -= d.cartan[k][j];
    // x'_k = x_k - <alpha_k, x>
    w.on_coroots[k][j] -= d.cartan[k][j];
  }
  w.word = {i};
  return w;
}

inline FiniteWeylElement finite_inverse_raw(const FiniteWeylElement& w) {
  return {inverse_int(w.on_roots), inverse_int(w.on_weights), inverse_int(w.on_coroots),
          std::vector<int>(w.word.rbegin(), w.word.rend())};
}

// 2 rho^vee (sum of positive coroots) in coroot coordinates.
inline IntVec two_rho_vee(const FiniteCartanData& d) {
  IntVec y(d.rank, 0);
  RatVec acc(d.rank, Rational(0));
  for (const auto& a : d.positive_roots) {
    Rational n = root_norm_sq(d, a);
    for (int j = 0; j < d.rank; ++j) acc[j] += Rational(a[j]) * d.gram[j][j] / n;
  }
  for (int j = 0; j < d.rank; ++j) y[j] = acc[j].numerator();
  return y;
}

// Reduced word by left descent, smallest index first. i is a left descent
// iff w^{-1} alpha_i < 0 iff <alpha_i, w rho^vee> < 0.
inline std::vector<int> finite_reduced_word(const FiniteCartanData& d, const FiniteWeylElement& w) {
  std::vector<int> word;
  IntVec y = apply_matrix(w.on_coroots, two_rho_vee(d));
  for (;;) {
    int found = 0;
    std::int64_t p = 0;
    for (int i = 0; i < d.rank && !found; ++i) {
      p = 0;
      for (int j = 0; j < d.rank; ++j) p += d.cartan[i][j] * y[j];
      if (p < 0) found = i + 1;
    }
    if (!found) break;
    word.push_back(found);
    y[found - 1] -= p;
  }
  return word;
}

inline FiniteWeylElement compose_raw(const FiniteWeylElement& a, const FiniteWeylElement& b) {
  FiniteWeylElement r{mat_mul(a.on_roots, b.on_roots), mat_mul(a.on_weights, b.on_weights),
                      mat_mul(a.on_coroots, b.on_coroots), {}};
  return r;
}

inline FiniteWeylElement compose(const FiniteCartanData& d, const FiniteWeylElement& a,
                                 const FiniteWeylElement& b) {
  FiniteWeylElement r = compose_raw(a, b);
  r.word = finite_reduced_word(d, r);
  return r;
}

inline FiniteWeylElement finite_inverse(const FiniteCartanData& d, const FiniteWeylElement& w) {
  FiniteWeylElement r = finite_inverse_raw(w);
  r.word = finite_reduced_word(d, r);
  return r;
}

inline FiniteWeylElement from_word(const FiniteCartanData& d, const std::vector<int>& word) {
  FiniteWeylElement w = finite_identity(d);
  for (int i : word) w = compose_raw(w, simple_reflection(d, i));
  w.word = finite_reduced_word(d, w);
  return w;
}

inline int finite_length(const FiniteCartanData& d, const FiniteWeylElement& w) {
  int l = 0;
  for (const auto& a : d.positive_roots)
    if (!is_positive_vec(apply_matrix(w.on_roots, a))) ++l;
  return l;
}

inline FiniteCartanData build_cartan(TypeLabel t, int n) {
  detail::check_type(t, n);
  FiniteCartanData d;
  d.type = t;
  d.rank = n;
  std::vector<std::pair<int, int>> bonds;
  RatVec len;
  detail::dynkin_diagram(t, n, bonds, len);
  d.gram.assign(n, RatVec(n, Rational(0)));
  for (int i = 0; i < n; ++i) d.gram[i][i] = len[i];
  for (auto [i, j] : bonds) {
    Rational v = -std::max(len[i], len[j]) / 2;
    d.gram[i][j] = v;
    d.gram[j][i] = v;
  }
  d.cartan.assign(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational c = 2 * d.gram[i][j] / d.gram[j][j];
      d.cartan[i][j] = c.numerator();
    }
  d.coroot_gram.assign(n, RatVec(n, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      d.coroot_gram[i][j] = 4 * d.gram[i][j] / (d.gram[i][i] * d.gram[j][j]);
  d.weight_gram = inverse(d.coroot_gram);

  // Closure of the simple roots under simple reflections.
  std::set<IntVec> seen;
  std::deque<IntVec> queue;
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    IntVec b = queue.front();
    queue.pop_front();
    for (int k = 0; k < n; ++k) {
      std::int64_t p = 0;
      for (int j = 0; j < n; ++j) p += b[j] * d.cartan[j][k];
      IntVec c = b;
      c[k] -= p;
      if (seen.insert(c).second) queue.push_back(c);
    }
  }
  for (const auto& r : seen)
    if (is_positive_vec(r)) d.positive_roots.push_back(r);
  std::sort(d.positive_roots.begin(), d.positive_roots.end(), [](const IntVec& a, const IntVec& b) {
    auto ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
  d.highest_root = d.positive_roots.size() - 1;
  d.roots = d.positive_roots;
  for (const auto& r : d.positive_roots) d.roots.push_back(-r);
  for (std::size_t k = 0; k < d.roots.size(); ++k) d.root_index[d.roots[k]] = k;

  d.rho.assign(n, Rational(1));
  d.coxeter_h = 1 + static_cast<int>(height(d.theta()));
  d.dual_coxeter_hv = 1 + static_cast<int>(height(coroot(d, d.theta())));
  return d;
}

inline FiniteCartanData build_cartan(const std::string& label, int n) {
  return build_cartan(parse_type_label(label), n);
}

// Every element of W with its reduced word, in breadth-first order from the identity.
inline std::vector<FiniteWeylElement> enumerate_finite_weyl(const FiniteCartanData& d,
                                                            std::size_t cap = 200000) {
  std::vector<FiniteWeylElement> out;
  std::set<IntMatrix> seen;
  std::vector<FiniteWeylElement> gens;
  for (int i = 1; i <= d.rank; ++i) gens.push_back(simple_reflection(d, i));
  FiniteWeylElement id = finite_identity(d);
  out.push_back(id);
  seen.insert(id.on_roots);
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int i = 1; i <= d.rank; ++i) {
      FiniteWeylElement w = compose_raw(gens[i - 1], out[head]);
      if (!seen.insert(w.on_roots).second) continue;
      if (out.size() >= cap)
        throw Error(ErrorKind::CapExceeded,
                    "Weyl group of " + d.label() + " exceeds cap " + std::to_string(cap));
      out.push_back(std::move(w));
    }
  }
  for (auto& w : out) w.word = finite_reduced_word(d, w);
  return out;
}

// Fundamental coweight varpi_i^vee in coroot coordinates: <alpha_j, varpi_i^vee> = delta_ij.
inline RatVec fundamental_coweight(const FiniteCartanData& d, int i) {
  RatMatrix inv = inverse(to_rat(d.cartan));
  RatVec x(d.rank);
  for (int k = 0; k < d.rank; ++k) x[k] = inv[k][i];
  return x;
}

}  // namespace affeis
