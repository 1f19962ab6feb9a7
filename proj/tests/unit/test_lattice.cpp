#include <gtest/gtest.h>

#include <random>

#include "affeis/central_extension.hpp"
#include "affeis/lattice.hpp"

using namespace affeis;

namespace {

Fp f5(std::int64_t v) { return Fp(v, 5); }

FpSeries mono(std::int64_t c, std::int64_t k) { return FpSeries::monomial(f5(c), k); }

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

FpSeries random_poly(std::mt19937_64& rng, int vlo, int vhi, int maxlen) {
  std::uniform_int_distribution<int> coef(0, 4), val(vlo, vhi), len(1, maxlen);
  std::vector<Fp> c(len(rng));
  for (auto& x : c) x = f5(coef(rng));
  return FpSeries(val(rng), c);
}

// Products of elementary and torus matrices in SL_2(F_5((t))).
LMatrix<Fp> random_sl2(std::mt19937_64& rng) {
  LMatrix<Fp> g = lmatrix_identity<Fp>(2);
  for (int k = 0; k < 5; ++k) {
    LMatrix<Fp> e = lmatrix_identity<Fp>(2);
    int kind = static_cast<int>(rng() % 3);
    if (kind == 0) e[0][1] = random_poly(rng, -3, 2, 3);
    if (kind == 1) e[1][0] = random_poly(rng, -3, 2, 3);
    if (kind == 2) {
      std::int64_t s = static_cast<std::int64_t>(rng() % 5) - 2;
      Fp c = f5(1 + static_cast<std::int64_t>(rng() % 4));
      e[0][0] = FpSeries::monomial(c, s);
      e[1][1] = FpSeries::monomial(c.inverse(), -s);
    }
    g = mat_mul(g, e);
  }
  return g;
}

// GL_3 elements whose determinant is not a monomial: elementary factors and diag(1 + t, 1, t^k).
LMatrix<Fp> random_gl3(std::mt19937_64& rng) {
  LMatrix<Fp> g = lmatrix_identity<Fp>(3);
  for (int k = 0; k < 4; ++k) {
    LMatrix<Fp> e = lmatrix_identity<Fp>(3);
    std::size_t i = rng() % 3, j = (i + 1 + rng() % 2) % 3;
    if (rng() % 3 == 0) {
      e[i][i] = FpSeries(0, {f5(1), f5(1)});
      e[j][j] = mono(1, static_cast<std::int64_t>(rng() % 3) - 1);
    } else {
      e[i][j] = random_poly(rng, -2, 2, 2);
    }
    g = mat_mul(g, e);
  }
  return g;
}

// Oracle for relative dimension: inside the window t^lo L0 / t^hi L0, with
// t^hi L0 contained in both lattices, dim(L1, L2) = dim(L1/t^hi L0) - dim(L2/t^hi L0).
// The ranks come from plain Gaussian elimination over F_5 on integer arrays.
int rank_mod5(std::vector<std::vector<int>> a) {
  int r = 0;
  const int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
  for (int c = 0; c < cols && r < static_cast<int>(a.size()); ++c) {
    int piv = r;
    while (piv < static_cast<int>(a.size()) && a[piv][c] % 5 == 0) ++piv;
    if (piv == static_cast<int>(a.size())) continue;
    std::swap(a[r], a[piv]);
    int inv = 1;
    while ((a[r][c] * inv) % 5 != 1) ++inv;
    for (auto& x : a[r]) x = (x * inv) % 5;
    for (int o = 0; o < static_cast<int>(a.size()); ++o)
      if (o != r && a[o][c] % 5) {
        int f = a[o][c];
        for (int k = 0; k < cols; ++k) a[o][k] = ((a[o][k] - f * a[r][k]) % 5 + 5) % 5;
      }
    ++r;
  }
  return r;
}

int quotient_dim_oracle(const LMatrix<Fp>& gens, int lo, int hi, int span_to) {
  const int n = static_cast<int>(gens.size());
  std::vector<std::vector<int>> rows;
  for (int l = 0; l < span_to; ++l)
    for (int j = 0; j < n; ++j) {
      std::vector<int> v((hi - lo) * n, 0);
      for (int r = 0; r < n; ++r) {
        const auto& e = gens[r][j];
        for (int m = lo; m < hi; ++m) v[(m - lo) * n + r] = static_cast<int>(e.coeff(m - l).value());
      }
      rows.push_back(v);
    }
  return rank_mod5(rows);
}

int relative_dim_oracle(const LMatrix<Fp>& a, const LMatrix<Fp>& b) {
  // generous window: entries here have valuations within [-8, 8] and Smith exponents within [-8, 8]
  const int lo = -24, hi = 24, span = 48;
  return quotient_dim_oracle(a, lo, hi, span) - quotient_dim_oracle(b, lo, hi, span);
}

}  // namespace

TEST(SmithForm, Valuations) {
  LMatrix<Fp> d = {{FpSeries(), mono(1, 2), FpSeries()},
                   {mono(3, -1), FpSeries(), FpSeries()},
                   {FpSeries(), FpSeries(), mono(2, 0)}};
  EXPECT_EQ(smith_valuations(d), (std::vector<std::int64_t>{-1, 0, 2}));
  LMatrix<Fp> j = {{mono(1, 1), mono(1, 0)}, {FpSeries(), mono(1, 1)}};
  EXPECT_EQ(smith_valuations(j), (std::vector<std::int64_t>{0, 2}));
  LMatrix<Fp> sing = {{mono(1, 0), mono(1, 1)}, {mono(2, -1), mono(2, 0)}};
  EXPECT_EQ(kind_of([&] { smith_valuations(sing); }), ErrorKind::SingularMatrix);
  LMatrix<Fp> vague = {{FpSeries::big_oh(3)}};
  EXPECT_EQ(kind_of([&] { smith_valuations(vague); }), ErrorKind::InsufficientPrecision);
}

TEST(RelativeDim, Examples) {
  auto L0 = standard_lattice<Fp>(1);
  EXPECT_EQ(relative_dim(L0, transform({{FpSeries::t()}}, L0)), 1);
  auto V0 = standard_lattice<Fp>(2);
  EXPECT_EQ(relative_dim(V0, transform(lmatrix_diagonal<Fp>({mono(1, 1), mono(1, -1)}), V0)), 0);
  auto W0 = standard_lattice<Fp>(3);
  EXPECT_EQ(relative_dim(W0, transform(lmatrix_diagonal<Fp>({mono(1, 1), mono(1, 1), mono(1, 1)}), W0)), 3);
  EXPECT_EQ(relative_dim(W0, W0), 0);
  EXPECT_EQ(kind_of([&] { relative_dim(V0, W0); }), ErrorKind::DimensionMismatch);
}

TEST(RelativeDim, AdditivityInvarianceAndOracle) {
  std::mt19937_64 rng(5);
  for (int s = 0; s < 30; ++s) {
    auto a = random_gl3(rng), b = random_gl3(rng), c = random_gl3(rng), h = random_gl3(rng);
    auto L1 = make_lattice(a), L2 = make_lattice(b), L3 = make_lattice(c);
    EXPECT_EQ(relative_dim(L1, L3), relative_dim(L1, L2) + relative_dim(L2, L3));
    EXPECT_EQ(relative_dim(transform(h, L1), transform(h, L2)), relative_dim(L1, L2));
    EXPECT_EQ(relative_dim(L1, L2), relative_dim_oracle(a, b));
  }
}

TEST(Cocycle, Identity) {
  std::mt19937_64 rng(1);
  for (int s = 0; s < 20; ++s) {
    auto g = random_sl2(rng);
    EXPECT_EQ(cocycle(lmatrix_identity<Fp>(2), g), f5(1));
    EXPECT_EQ(cocycle(g, lmatrix_identity<Fp>(2)), f5(1));
  }
}

TEST(Cocycle, AssociativitySL2) {
  std::mt19937_64 rng(2024);
  int nontrivial = 0;
  for (int s = 0; s < 200; ++s) {
    auto g = random_sl2(rng), h = random_sl2(rng), k = random_sl2(rng);
    Fp lhs = cocycle(g, h) * cocycle(mat_mul(g, h), k);
    Fp rhs = cocycle(g, mat_mul(h, k)) * cocycle(h, k);
    EXPECT_EQ(lhs, rhs) << "triple " << s;
    if (!(cocycle(g, h) == f5(1))) ++nontrivial;
  }
  EXPECT_GT(nontrivial, 10);
}

TEST(Cocycle, AssociativityGL3) {
  std::mt19937_64 rng(77);
  for (int s = 0; s < 40; ++s) {
    auto g = random_gl3(rng), h = random_gl3(rng), k = random_gl3(rng);
    EXPECT_EQ(cocycle(g, h) * cocycle(mat_mul(g, h), k), cocycle(g, mat_mul(h, k)) * cocycle(h, k));
  }
}

TEST(Cocycle, GroupLaw) {
  std::mt19937_64 rng(8);
  for (int s = 0; s < 20; ++s) {
    CentralExtElement<Fp> a{random_sl2(rng), f5(2)}, b{random_sl2(rng), f5(3)}, c{random_sl2(rng), f5(4)};
    EXPECT_EQ(((a * b) * c).scalar, (a * (b * c)).scalar);
    EXPECT_EQ((central_identity<Fp>(2) * a).scalar, a.scalar);
  }
}

TEST(Cocycle, GL1CommutatorIsTame) {
  // measured orientation: c(g,h)/c(h,g) = ((-1)^{ij} (u t^i, v t^j)_tame)^{-1}
  for (int u = 1; u < 5; ++u)
    for (int v = 1; v < 5; ++v)
      for (int i = -2; i <= 2; ++i)
        for (int j = -2; j <= 2; ++j) {
          Fp tame = tame_symbol(mono(u, i), mono(v, j));
          Fp sign = (i * j) % 2 ? f5(-1) : f5(1);
          EXPECT_EQ(gl1_commutator(f5(u), i, f5(v), j), (sign * tame).inverse());
        }
}

TEST(Cocycle, PrecisionAndShape) {
  LMatrix<Fp> vague = {{FpSeries(0, {f5(1)}, 2), FpSeries()}, {FpSeries(), FpSeries(0, {f5(1)}, 2)}};
  LMatrix<Fp> shift = lmatrix_diagonal<Fp>({mono(1, -3), mono(1, 3)});
  EXPECT_EQ(kind_of([&] { cocycle(vague, shift); }), ErrorKind::InsufficientPrecision);
  EXPECT_EQ(kind_of([&] { cocycle(lmatrix_identity<Fp>(2), lmatrix_identity<Fp>(3)); }),
            ErrorKind::DimensionMismatch);
}

TEST(TorusCocycle, Examples) {
  auto r = torus_cocycle_check(1, f5(1), f5(1), 1, 1);
  EXPECT_EQ(r.rhs, f5(-1));
  EXPECT_EQ(r.lhs, f5(-1));
  EXPECT_EQ(r.d_rho, 1);
  auto r2 = torus_cocycle_check(2, f5(2), f5(3), 1, 2);
  EXPECT_EQ(r2.d_rho, 4);
  EXPECT_EQ(r2.rhs, field_pow(tame_symbol(mono(2, 1), mono(3, 2)), -4));
  EXPECT_TRUE(r2.equal);
  auto r0 = torus_cocycle_check(3, f5(4), f5(2), 0, 0);
  EXPECT_EQ(r0.lhs, f5(1));
  EXPECT_EQ(r0.rhs, f5(1));
  EXPECT_EQ(sym_dynkin_index(3), 10);
}

TEST(TorusCocycle, Exhaustive) {
  for (int m = 1; m <= 3; ++m)
    for (int u = 1; u < 5; ++u)
      for (int v = 1; v < 5; ++v)
        for (int i = -2; i <= 2; ++i)
          for (int j = -2; j <= 2; ++j) {
            auto r = torus_cocycle_check(m, f5(u), f5(v), i, j);
            EXPECT_TRUE(r.equal) << "m=" << m << " u=" << u << " v=" << v << " i=" << i << " j=" << j;
          }
}

TEST(TorusCocycle, StandardRepStandsForLongRootRelation) {
  // h(x)h(y)h(xy)^{-1} = (x,y)^{-2/(alpha,alpha)} with (alpha,alpha) = 2
  auto a1 = build_cartan("A", 1);
  Rational e = Rational(-2) / root_norm_sq(a1, {1});
  EXPECT_EQ(e, Rational(-1));
  for (int i = -2; i <= 2; ++i)
    for (int j = -2; j <= 2; ++j) {
      auto r = torus_cocycle_check(1, f5(3), f5(2), i, j);
      EXPECT_EQ(r.lhs, field_pow(tame_symbol(mono(3, i), mono(2, j)), e.numerator()));
    }
}
