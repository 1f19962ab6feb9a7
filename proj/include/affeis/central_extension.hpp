#pragma once

// The central extension of GL_n(F((t))) by F^x through determinant torsors.
//
// For lattices L0 = F[[t]]^n and M, det(L0, M) is computed inside a window
// t^lo L0 / t^N L0 with t^N L0 inside both lattices, as top forms on M/t^N L0
// against top forms on L0/t^N L0. Window coordinates t^l e_j are ordered by
// l ascending, then j ascending. The canonical vector of det(L0, M) is the
// wedge of the reduced row echelon basis of M/t^N L0 (pivots ascending)
// against the monomial basis of L0/t^N L0. Deepening the window appends the
// new monomials at the end of both wedges, so the canonical vector does not
// depend on N.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "affeis/laurent.hpp"
#include "affeis/tame_symbol.hpp"

namespace affeis {

namespace detail {

template <class K>
using WVec = std::vector<K>;

struct Window {
  std::int64_t lo = 0, hi = 0;
  std::size_t n = 0;
  std::size_t dim() const { return static_cast<std::size_t>(hi - lo) * n; }
  std::size_t index(std::int64_t l, std::size_t j) const { return static_cast<std::size_t>(l - lo) * n + j; }
};

// g t^l e_j modulo t^hi.
template <class K>
WVec<K> column_image(const LMatrix<K>& g, std::int64_t l, std::size_t j, const Window& w) {
  WVec<K> out(w.dim(), K(0));
  for (std::size_t r = 0; r < w.n; ++r) {
    const auto& e = g[r][j];
    if (e.is_zero() && e.is_exact()) continue;
    if (!e.is_zero() && e.valuation() + l < w.lo) throw std::logic_error("window does not contain the image");
    for (std::int64_t m = std::max(w.lo, e.valuation() + l); m < w.hi; ++m) out[w.index(m, r)] = e.coeff(m - l);
  }
  return out;
}

template <class K>
WVec<K> monomial_vector(std::int64_t l, std::size_t j, const Window& w) {
  WVec<K> out(w.dim(), K(0));
  out[w.index(l, j)] = K(1);
  return out;
}

template <class K>
struct Echelon {
  std::vector<WVec<K>> rows;  // pivots ascending
  std::vector<std::size_t> pivots;
};

template <class K>
Echelon<K> rref(std::vector<WVec<K>> rows) {
  Echelon<K> e;
  if (rows.empty()) return e;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && field_zero(rows[piv][c])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    K inv = K(1) / rows[r][c];
    for (std::size_t k = c; k < cols; ++k) rows[r][k] *= inv;
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r || field_zero(rows[o][c])) continue;
      K f = rows[o][c];
      for (std::size_t k = c; k < cols; ++k)
        if (!field_zero(rows[r][k])) rows[o][k] -= f * rows[r][k];
    }
    e.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  e.rows = std::move(rows);
  return e;
}

template <class K>
K square_det(std::vector<std::vector<K>> a) {
  const std::size_t n = a.size();
  K det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && field_zero(a[piv][c])) ++piv;
    if (piv == n) return K(0);
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    K inv = K(1) / a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (field_zero(a[r][c])) continue;
      K f = a[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

// The scalar x with wedge(P) = x wedge(Q), for two ordered bases of one subspace.
template <class K>
K wedge_ratio(const std::vector<WVec<K>>& P, const std::vector<WVec<K>>& Q) {
  if (P.size() != Q.size()) throw std::logic_error("wedge_ratio: bases of different size");
  if (P.empty()) return K(1);
  Echelon<K> eq = rref(Q);
  if (eq.rows.size() != Q.size()) throw std::logic_error("wedge_ratio: dependent reference basis");
  std::vector<WVec<K>> both = P;
  both.insert(both.end(), Q.begin(), Q.end());
  if (rref(both).rows.size() != Q.size()) throw std::logic_error("wedge_ratio: bases span different spaces");
  auto restrict = [&](const std::vector<WVec<K>>& B) {
    std::vector<std::vector<K>> m(B.size(), std::vector<K>(B.size()));
    for (std::size_t r = 0; r < B.size(); ++r)
      for (std::size_t c = 0; c < eq.pivots.size(); ++c) m[r][c] = B[r][eq.pivots[c]];
    return m;
  };
  K dp = square_det(restrict(P));
  if (field_zero(dp)) throw std::logic_error("wedge_ratio: dependent basis");
  return dp / square_det(restrict(Q));
}

// g x for x given in window `from`, computed modulo t^{to.hi}.
template <class K>
WVec<K> apply(const LMatrix<K>& g, const WVec<K>& x, const Window& from, const Window& to) {
  WVec<K> out(to.dim(), K(0));
  for (std::int64_t l = from.lo; l < from.hi; ++l)
    for (std::size_t j = 0; j < from.n; ++j) {
      const K& c = x[from.index(l, j)];
      if (field_zero(c)) continue;
      WVec<K> col = column_image(g, l, j, to);
      for (std::size_t k = 0; k < out.size(); ++k)
        if (!field_zero(col[k])) out[k] += c * col[k];
    }
  return out;
}

// Images g t^l e_j for l in [l0, l1), in (l, j) order.
template <class K>
std::vector<WVec<K>> images(const LMatrix<K>& g, std::int64_t l0, std::int64_t l1, const Window& w) {
  std::vector<WVec<K>> out;
  for (std::int64_t l = l0; l < l1; ++l)
    for (std::size_t j = 0; j < w.n; ++j) out.push_back(column_image(g, l, j, w));
  return out;
}

template <class K>
std::vector<WVec<K>> monomials(std::int64_t l0, std::int64_t l1, const Window& w) {
  std::vector<WVec<K>> out;
  for (std::int64_t l = l0; l < l1; ++l)
    for (std::size_t j = 0; j < w.n; ++j) out.push_back(monomial_vector<K>(l, j, w));
  return out;
}

template <class K>
std::vector<WVec<K>> concat(std::vector<WVec<K>> a, const std::vector<WVec<K>>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace detail

// The coordinate of can(gL0) ^ g can(hL0) against can(ghL0).
template <class K>
K cocycle(const LMatrix<K>& g, const LMatrix<K>& h) {
  using namespace detail;
  check_square(g);
  if (g.size() != h.size()) throw Error(ErrorKind::DimensionMismatch, "cocycle: matrix sizes differ");
  const std::size_t n = g.size();
  const LMatrix<K> gh = mat_mul(g, h);
  const auto sg = smith_valuations(g), sh = smith_valuations(h), sgh = smith_valuations(gh);
  // t^M L0 lies in L0 and hL0; t^N L0 lies in t^M gL0, gL0, ghL0 and L0.
  const std::int64_t M = std::max<std::int64_t>(0, sh.back());
  const std::int64_t N = std::max({M + sg.back(), sgh.back(), M, std::int64_t{0}});
  const std::int64_t lo_h = std::min<std::int64_t>(0, sh.front());
  const std::int64_t lo =
      std::min({std::int64_t{0}, sg.front(), sgh.front(), sh.front(), sg.front() + lo_h});
  const Window wh{lo_h, M, n}, w{lo, N, n};

  // can(hL0) with reference t^M L0, moved by g
  Echelon<K> Rh = rref(images(h, 0, M - sh.front(), wh));
  std::vector<WVec<K>> gRh, gstd;
  for (const auto& x : Rh.rows) gRh.push_back(apply(g, x, wh, w));
  gstd = images(g, 0, M, w);
  // g t^M L0 / t^N L0, appended to both sides of g can(hL0)
  std::vector<WVec<K>> b = rref(images(g, M, N - sg.front(), w)).rows;
  std::vector<WVec<K>> can_g = rref(images(g, 0, N - sg.front(), w)).rows;
  std::vector<WVec<K>> can_gh = rref(images(gh, 0, N - sgh.front(), w)).rows;
  return wedge_ratio(concat(gRh, b), can_gh) / wedge_ratio(concat(gstd, b), can_g);
}

template <class K>
struct CentralExtElement {
  LMatrix<K> g;
  K scalar;
};

template <class K>
CentralExtElement<K> central_identity(std::size_t n) {
  return {lmatrix_identity<K>(n), K(1)};
}

template <class K>
CentralExtElement<K> operator*(const CentralExtElement<K>& a, const CentralExtElement<K>& b) {
  return {mat_mul(a.g, b.g), a.scalar * b.scalar * cocycle(a.g, b.g)};
}

// c(g,h)/c(h,g) for g = u t^i, h = v t^j in GL_1.
template <class K>
K gl1_commutator(const K& u, std::int64_t i, const K& v, std::int64_t j) {
  LMatrix<K> g = {{LaurentSeries<K>::monomial(u, i)}}, h = {{LaurentSeries<K>::monomial(v, j)}};
  return cocycle(g, h) / cocycle(h, g);
}

// ---- torus of SL_2 on the symmetric power Sym^m, weights m, m-2, ..., -m on coordinates 0..m

inline std::int64_t sym_weight(int m, std::size_t j) { return m - 2 * static_cast<std::int64_t>(j); }

// d_rho = sum over positive weights of lambda^2
inline std::int64_t sym_dynkin_index(int m) {
  std::int64_t d = 0;
  for (int l = m; l > 0; l -= 2) d += static_cast<std::int64_t>(l) * l;
  return d;
}

// h(u t^i) acting by (u t^i)^lambda on the weight-lambda line.
template <class K>
LMatrix<K> sym_torus(int m, const K& u, std::int64_t i) {
  std::vector<LaurentSeries<K>> diag;
  for (int j = 0; j <= m; ++j) {
    std::int64_t lam = sym_weight(m, j);
    diag.push_back(LaurentSeries<K>::monomial(field_pow(u, lam), i * lam));
  }
  return lmatrix_diagonal(diag);
}

// The coordinate against can(gL0) of
//   omega_{u,i} = prod_{lambda>0} eps_lambda^i u^{-i lambda^2} (wedge of omega_{i,lambda}),
//   eps_lambda = (-1)^{lambda(lambda+m)/2},
// where omega_{i,lambda} is the monomial top form t^l v_lambda (l ascending) on the
// part of the lambda line in gL0 but not L0, or the inverse of the one on the
// part in L0 but not gL0. Lines are taken in the order lambda = m, m-2, ... > 0
// followed by -m, -m+2, ... < 0. For i < 0 the same derivation runs through
// w_alpha on the negative weight lines, whose sign is (-1)^{(m-lambda)/2}, so
// eps_lambda^i becomes eps_{-lambda}^{|i|}. The two differ by (-1)^{|i| d_rho}.
template <class K>
K torus_lift_scalar(int m, const K& u, std::int64_t i) {
  using namespace detail;
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "torus lift needs m >= 1");
  const std::size_t n = static_cast<std::size_t>(m) + 1;
  const std::int64_t N = std::abs(i) * m;
  const Window w{-N, N, n};
  std::vector<std::size_t> order;
  for (int lam = m; lam > 0; lam -= 2) order.push_back((m - lam) / 2);
  for (int lam = -m; lam < 0; lam += 2) order.push_back((m - lam) / 2);
  std::vector<WVec<K>> P, Nn, bI;
  for (std::size_t j : order) {
    std::int64_t e = i * sym_weight(m, j);
    if (e < 0)
      for (std::int64_t l = e; l < 0; ++l) P.push_back(monomial_vector<K>(l, j, w));
    if (e > 0)
      for (std::int64_t l = 0; l < e; ++l) Nn.push_back(monomial_vector<K>(l, j, w));
  }
  for (std::int64_t l = 0; l < N; ++l)
    for (std::size_t j = 0; j < n; ++j)
      if (l >= i * sym_weight(m, j)) bI.push_back(monomial_vector<K>(l, j, w));
  const LMatrix<K> g = sym_torus(m, u, i);
  std::vector<WVec<K>> can_g = rref(images(g, 0, N + N, w)).rows;
  K a = wedge_ratio(concat(P, bI), can_g) / wedge_ratio(concat(Nn, bI), monomials<K>(0, N, w));
  for (int lam = m; lam > 0; lam -= 2) {
    const int mu = i >= 0 ? lam : -lam;
    K eps = ((mu * (mu + m) / 2) % 2 == 0) ? K(1) : K(-1);
    a *= field_pow(eps, std::abs(i)) * field_pow(u, -i * lam * lam);
  }
  return a;
}

template <class K>
struct TorusCheck {
  K lhs;
  K rhs;
  bool equal = false;
  std::int64_t d_rho = 0;
};

// lift(u t^i) lift(v t^j) lift(uv t^{i+j})^{-1} against (u t^i, v t^j)_tame^{-d_rho}.
template <class K>
TorusCheck<K> torus_cocycle_check(int m, const K& u, const K& v, std::int64_t i, std::int64_t j) {
  if (u == K(0) || v == K(0)) throw Error(ErrorKind::ZeroInput, "torus check needs u, v != 0");
  K lhs = torus_lift_scalar(m, u, i) * torus_lift_scalar(m, v, j) * cocycle(sym_torus(m, u, i), sym_torus(m, v, j)) /
          torus_lift_scalar(m, u * v, i + j);
  const std::int64_t d = sym_dynkin_index(m);
  K rhs = field_pow(tame_symbol(LaurentSeries<K>::monomial(u, i), LaurentSeries<K>::monomial(v, j)), -d);
  return {lhs, rhs, lhs == rhs, d};
}

// A random element of SL_2(F_p((t))): a product of `factors` elementary
// matrices x(a), y(a) with a a Laurent polynomial of valuation in [-3, 2] and
// up to three terms, and torus elements diag(c t^k, c^{-1} t^{-k}) with |k| <= 2.
inline LMatrix<Fp> sample_sl2(std::mt19937_64& rng, std::int64_t p, int factors = 5) {
  std::uniform_int_distribution<int> coef(0, static_cast<int>(p) - 1), unit(1, static_cast<int>(p) - 1),
      val(-3, 2), len(1, 3), kind(0, 2), shift(-2, 2);
  LMatrix<Fp> g = lmatrix_identity<Fp>(2);
  for (int f = 0; f < factors; ++f) {
    LMatrix<Fp> e = lmatrix_identity<Fp>(2);
    const int k = kind(rng);
    if (k == 2) {
      Fp c(unit(rng), p);
      const int sh = shift(rng);
      e[0][0] = FpSeries::monomial(c, sh);
      e[1][1] = FpSeries::monomial(c.inverse(), -sh);
    } else {
      std::vector<Fp> a(len(rng));
      for (auto& x : a) x = Fp(coef(rng), p);
      e[k][1 - k] = FpSeries(val(rng), a);
    }
    g = mat_mul(g, e);
  }
  return g;
}

}  // namespace affeis
