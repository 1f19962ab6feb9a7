#pragma once

// Truncated Laurent series over Q (Rational) or F_p (Fp), with absolute
// precision tracked through every operation. A series with precision kExact
// is a Laurent polynomial known exactly.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "affeis/error.hpp"
#include "affeis/prime_field.hpp"
#include "affeis/rational.hpp"

namespace affeis {

inline constexpr std::int64_t kExact = std::numeric_limits<std::int64_t>::max() / 4;

namespace detail {

inline std::int64_t sat_add(std::int64_t a, std::int64_t b) {
  if (a >= kExact || b >= kExact) return kExact;
  return std::min(a + b, kExact);
}

template <class K>
bool field_zero(const K& a) {
  return a == K(0);
}

inline std::string coeff_string(const Rational& r) { return to_string(r); }
inline std::string coeff_string(const Fp& a) { return to_string(a); }

}  // namespace detail

template <class K>
K field_pow(K a, std::int64_t e) {
  if (e < 0) {
    a = K(1) / a;
    e = -e;
  }
  K r(1);
  while (e) {
    if (e & 1) r *= a;
    a *= a;
    e >>= 1;
  }
  return r;
}

template <class K>
class LaurentSeries {
 public:
  // exact zero
  LaurentSeries() = default;

  // sum_k c[k] t^{start+k} + O(t^prec)
  LaurentSeries(std::int64_t start, std::vector<K> c, std::int64_t prec = kExact)
      : val_(start), c_(std::move(c)), prec_(prec) {
    if (prec_ < kExact) {
      std::int64_t keep = std::max<std::int64_t>(0, prec_ - val_);
      if (static_cast<std::int64_t>(c_.size()) > keep) c_.resize(keep);
    }
    normalize();
  }

  static LaurentSeries monomial(const K& a, std::int64_t k) { return LaurentSeries(k, {a}); }
  static LaurentSeries constant(const K& a) { return LaurentSeries(0, {a}); }
  static LaurentSeries t() { return monomial(K(1), 1); }
  static LaurentSeries big_oh(std::int64_t prec) { return LaurentSeries(prec, {}, prec); }

  bool is_zero() const { return c_.empty(); }
  bool is_exact() const { return prec_ >= kExact; }
  std::int64_t precision() const { return prec_; }
  // for a zero series this is the precision bound (kExact if exactly zero)
  std::int64_t valuation() const { return val_; }
  std::int64_t last_known() const { return is_exact() ? val_ + static_cast<std::int64_t>(c_.size()) : prec_; }

  std::int64_t known_valuation() const {
    if (!is_zero()) return val_;
    if (is_exact()) throw Error(ErrorKind::ZeroInput, "valuation of the zero series");
    throw Error(ErrorKind::InsufficientPrecision, "series is zero to precision " + std::to_string(prec_));
  }

  const K& lead() const {
    known_valuation();
    return c_.front();
  }

  K coeff(std::int64_t m) const {
    if (m >= prec_) throw Error(ErrorKind::InsufficientPrecision,
                                "coefficient of t^" + std::to_string(m) + " beyond precision " + std::to_string(prec_));
    if (is_zero() || m < val_ || m - val_ >= static_cast<std::int64_t>(c_.size())) return K(0);
    return c_[m - val_];
  }

  const std::vector<K>& coefficients() const { return c_; }

  LaurentSeries operator-() const {
    LaurentSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    std::int64_t prec = std::min(a.prec_, b.prec_);
    if (a.is_zero() && a.is_exact()) return b;
    if (b.is_zero() && b.is_exact()) return a;
    std::int64_t lo = std::min(a.is_zero() ? a.prec_ : a.val_, b.is_zero() ? b.prec_ : b.val_);
    std::int64_t hi = prec < kExact ? prec : std::max(a.last_known(), b.last_known());
    if (hi <= lo) return big_oh(prec);
    std::vector<K> c(hi - lo, K(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k)
      if (a.val_ + static_cast<std::int64_t>(k) < hi) c[a.val_ + k - lo] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k)
      if (b.val_ + static_cast<std::int64_t>(k) < hi) c[b.val_ + k - lo] += b.c_[k];
    return LaurentSeries(lo, std::move(c), prec);
  }
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    if ((a.is_zero() && a.is_exact()) || (b.is_zero() && b.is_exact())) return LaurentSeries();
    // v(ab) = v(a) + v(b); the product is known modulo t^{min(v(a)+prec(b), v(b)+prec(a))}
    std::int64_t prec = std::min(detail::sat_add(a.val_, b.prec_), detail::sat_add(b.val_, a.prec_));
    if (a.is_zero() || b.is_zero()) return big_oh(prec);
    std::int64_t lo = a.val_ + b.val_;
    std::int64_t len = static_cast<std::int64_t>(a.c_.size() + b.c_.size()) - 1;
    if (prec < kExact) len = std::min(len, prec - lo);
    if (len <= 0) return big_oh(prec);
    std::vector<K> c(len, K(0));
    for (std::size_t i = 0; i < a.c_.size() && static_cast<std::int64_t>(i) < len; ++i) {
      if (detail::field_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size() && static_cast<std::int64_t>(i + j) < len; ++j)
        c[i + j] += a.c_[i] * b.c_[j];
    }
    return LaurentSeries(lo, std::move(c), prec);
  }

  // Inverse to `rel_prec` terms past the leading one unless exact (a monomial)
  // or limited by the input precision.
  LaurentSeries inverse(std::int64_t rel_prec = 32) const {
    std::int64_t v = known_valuation();
    if (is_exact() && c_.size() == 1) return monomial(K(1) / c_[0], -v);
    std::int64_t r = rel_prec;
    if (!is_exact()) r = std::min(r, prec_ - v);
    std::vector<K> inv(r, K(0));
    K a0inv = K(1) / c_[0];
    inv[0] = a0inv;
    for (std::int64_t k = 1; k < r; ++k) {
      K acc(0);
      for (std::int64_t m = 1; m <= k && m < static_cast<std::int64_t>(c_.size()); ++m) acc += c_[m] * inv[k - m];
      inv[k] = -acc * a0inv;
    }
    return LaurentSeries(-v, std::move(inv), -v + r);
  }

  friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) { return a * b.inverse(); }

  LaurentSeries pow(std::int64_t e) const {
    LaurentSeries base = e < 0 ? inverse() : *this;
    if (e < 0) e = -e;
    LaurentSeries r = constant(K(1));
    while (e) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  // Exact structural equality: same precision and same known coefficients.
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.prec_ != b.prec_ || a.c_.size() != b.c_.size()) return false;
    if (a.is_zero()) return true;
    if (a.val_ != b.val_) return false;
    for (std::size_t k = 0; k < a.c_.size(); ++k)
      if (!(a.c_[k] == b.c_[k])) return false;
    return true;
  }

  std::string str() const {
    std::string s;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (detail::field_zero(c_[k])) continue;
      if (!s.empty()) s += " + ";
      std::int64_t e = val_ + static_cast<std::int64_t>(k);
      s += detail::coeff_string(c_[k]);
      if (e != 0) s += "*t^" + std::to_string(e);
    }
    if (!is_exact()) s += std::string(s.empty() ? "" : " + ") + "O(t^" + std::to_string(prec_) + ")";
    return s.empty() ? "0" : s;
  }

 private:
  void normalize() {
    std::size_t k = 0;
    while (k < c_.size() && detail::field_zero(c_[k])) ++k;
    if (k == c_.size()) {
      c_.clear();
      val_ = prec_;
      return;
    }
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(k));
    val_ += static_cast<std::int64_t>(k);
    while (!c_.empty() && detail::field_zero(c_.back())) c_.pop_back();
  }

  std::int64_t val_ = kExact;
  std::vector<K> c_;
  std::int64_t prec_ = kExact;
};

template <class K>
using LMatrix = std::vector<std::vector<LaurentSeries<K>>>;

template <class K>
LMatrix<K> lmatrix_identity(std::size_t n) {
  LMatrix<K> m(n, std::vector<LaurentSeries<K>>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = LaurentSeries<K>::constant(K(1));
  return m;
}

template <class K>
LMatrix<K> lmatrix_diagonal(const std::vector<LaurentSeries<K>>& diag) {
  LMatrix<K> m(diag.size(), std::vector<LaurentSeries<K>>(diag.size()));
  for (std::size_t i = 0; i < diag.size(); ++i) m[i][i] = diag[i];
  return m;
}

template <class K>
void check_square(const LMatrix<K>& a) {
  for (const auto& row : a)
    if (row.size() != a.size()) throw Error(ErrorKind::DimensionMismatch, "matrix is not square");
}

template <class K>
LMatrix<K> mat_mul(const LMatrix<K>& a, const LMatrix<K>& b) {
  check_square(a);
  check_square(b);
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "matrix sizes differ");
  const std::size_t n = a.size();
  LMatrix<K> c(n, std::vector<LaurentSeries<K>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero() && a[i][k].is_exact()) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] = c[i][j] + a[i][k] * b[k][j];
    }
  return c;
}

namespace detail {

// Minor on the given rows/cols by Laplace expansion along the first row.
template <class K>
LaurentSeries<K> minor_det(const LMatrix<K>& a, const std::vector<std::size_t>& rows,
                           const std::vector<std::size_t>& cols) {
  const std::size_t k = rows.size();
  if (k == 0) return LaurentSeries<K>::constant(K(1));
  if (k == 1) return a[rows[0]][cols[0]];
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  LaurentSeries<K> acc;
  for (std::size_t c = 0; c < k; ++c) {
    const auto& e = a[rows[0]][cols[c]];
    if (e.is_zero() && e.is_exact()) continue;
    std::vector<std::size_t> sub_cols;
    for (std::size_t j = 0; j < k; ++j)
      if (j != c) sub_cols.push_back(cols[j]);
    LaurentSeries<K> term = e * minor_det(a, sub_rows, sub_cols);
    acc = (c % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace detail

template <class K>
LaurentSeries<K> determinant(const LMatrix<K>& a) {
  check_square(a);
  std::vector<std::size_t> idx(a.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return detail::minor_det(a, idx, idx);
}

// Exponents a_1 <= ... <= a_n of the Smith form diag(t^{a_i}) of a over the
// valuation ring F[[t]], from the determinantal divisors d_k = min v(k-minor):
// a_k = d_k - d_{k-1}.
template <class K>
std::vector<std::int64_t> smith_valuations(const LMatrix<K>& a) {
  check_square(a);
  const std::size_t n = a.size();
  std::vector<std::int64_t> d(n + 1, 0);
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<std::size_t>> subs;
    detail::subsets(n, k, subs);
    std::int64_t best = kExact, bound = kExact;
    for (const auto& r : subs)
      for (const auto& c : subs) {
        LaurentSeries<K> m = detail::minor_det(a, r, c);
        if (m.is_zero()) bound = std::min(bound, m.precision());
        else best = std::min(best, m.valuation());
      }
    if (best >= kExact && bound >= kExact) throw Error(ErrorKind::SingularMatrix, "matrix is singular");
    if (bound <= best) throw Error(ErrorKind::InsufficientPrecision, "minor valuations not determined");
    d[k] = best;
  }
  std::vector<std::int64_t> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = d[k + 1] - d[k];
  return out;
}

}  // namespace affeis
