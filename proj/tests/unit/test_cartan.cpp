#include <gtest/gtest.h>

#include <set>

#include "affeis/cartan.hpp"
#include "oracles.hpp"

using namespace affeis;
using oracle::closure_from_gram;

namespace {

struct TypeCase {
  const char* label;
  int rank;
  std::size_t positive;
  std::size_t weyl_order;
  int h;
  int hv;
};

void PrintTo(const TypeCase& c, std::ostream* os) { *os << c.label << c.rank; }

}  // namespace

class CartanTypes : public ::testing::TestWithParam<TypeCase> {};

TEST_P(CartanTypes, InvariantsAndCounts) {
  const auto& c = GetParam();
  FiniteCartanData d = build_cartan(c.label, c.rank);
  EXPECT_EQ(d.positive_roots.size(), c.positive);
  EXPECT_EQ(d.coxeter_h, c.h);
  EXPECT_EQ(d.dual_coxeter_hv, c.hv);
  Rational mx = 0;
  for (int i = 0; i < d.rank; ++i) {
    mx = std::max(mx, d.gram[i][i]);
    for (int j = 0; j < d.rank; ++j) EXPECT_EQ(Rational(d.cartan[i][j]), 2 * d.gram[i][j] / d.gram[j][j]);
  }
  EXPECT_EQ(mx, Rational(2));
  auto closure = closure_from_gram(d);
  EXPECT_EQ(closure.size(), 2 * c.positive);
  for (const auto& r : d.roots) EXPECT_TRUE(closure.count(r));
  // <rho, alpha_i^vee> = 1 via the weight Gram: (rho, alpha_i^vee) in fundamental coords.
  for (int i = 0; i < d.rank; ++i) {
    IntVec e(d.rank, 0);
    e[i] = 1;
    EXPECT_EQ(dot(d.rho, to_rat(coroot(d, e))), Rational(1));
  }
  // the sum of positive roots is 2 rho
  IntVec s(d.rank, 0);
  for (const auto& a : d.positive_roots) s = s + a;
  EXPECT_EQ(to_rat(root_as_weight(d, s)), scale(d.rho, Rational(2)));
}

TEST_P(CartanTypes, WeylGroupOrder) {
  const auto& c = GetParam();
  if (c.weyl_order > 60000) GTEST_SKIP();
  FiniteCartanData d = build_cartan(c.label, c.rank);
  auto W = enumerate_finite_weyl(d);
  EXPECT_EQ(W.size(), c.weyl_order);
  std::set<IntMatrix> distinct;
  for (const auto& w : W) distinct.insert(w.on_roots);
  EXPECT_EQ(distinct.size(), W.size());
  for (std::size_t k = 0; k < W.size(); k += std::max<std::size_t>(1, W.size() / 50)) {
    EXPECT_EQ(static_cast<int>(W[k].word.size()), finite_length(d, W[k]));
    EXPECT_EQ(from_word(d, W[k].word), W[k]);
  }
}

INSTANTIATE_TEST_SUITE_P(
    AllTypes, CartanTypes,
    ::testing::Values(TypeCase{"A", 1, 1, 2, 2, 2}, TypeCase{"A", 2, 3, 6, 3, 3},
                      TypeCase{"A", 3, 6, 24, 4, 4}, TypeCase{"B", 2, 4, 8, 4, 3},
                      TypeCase{"C", 2, 4, 8, 4, 3}, TypeCase{"B", 3, 9, 48, 6, 5},
                      TypeCase{"C", 3, 9, 48, 6, 4}, TypeCase{"D", 4, 12, 192, 6, 6},
                      TypeCase{"G", 2, 6, 12, 6, 4}, TypeCase{"F", 4, 24, 1152, 12, 9},
                      TypeCase{"E", 6, 36, 51840, 12, 12}, TypeCase{"E", 7, 63, 2903040, 18, 18},
                      TypeCase{"E", 8, 120, 696729600, 30, 30}),
    [](const auto& info) { return std::string(info.param.label) + std::to_string(info.param.rank); });

TEST(Cartan, InvalidTypes) {
  EXPECT_THROW(build_cartan("A", 0), Error);
  EXPECT_THROW(build_cartan("B", 1), Error);
  EXPECT_THROW(build_cartan("D", 2), Error);
  EXPECT_THROW(build_cartan("E", 5), Error);
  EXPECT_THROW(build_cartan("G", 3), Error);
  try {
    build_cartan("A", 0);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidType);
  }
}

TEST(Cartan, Coroots) {
  auto a1 = build_cartan("A", 1);
  IntVec al{1};
  EXPECT_EQ(pair_root_coroot(a1, al, coroot(a1, al)), 2);
  auto c2 = build_cartan("C", 2);
  EXPECT_EQ(height(coroot(c2, c2.theta())), c2.dual_coxeter_hv - 1);
  EXPECT_EQ(c2.dual_coxeter_hv, 3);
  auto g2 = build_cartan("G", 2);
  EXPECT_EQ(pair_root_coroot(g2, {0, 1}, coroot(g2, {1, 0})), g2.cartan[1][0]);
  EXPECT_EQ(g2.cartan[1][0], -3);
  EXPECT_EQ(g2.cartan[0][1], -1);
  for (const auto& a : g2.roots) EXPECT_EQ(coroot(g2, -a), -coroot(g2, a));
  EXPECT_THROW(coroot(g2, {1, 2}), Error);
  // <beta, alpha^vee> = 2(beta,alpha)/(alpha,alpha) on all root pairs
  for (auto* d : {&a1, &c2, &g2})
    for (const auto& a : d->roots)
      for (const auto& b : d->roots) {
        Rational ip = 0;
        for (int i = 0; i < d->rank; ++i)
          for (int j = 0; j < d->rank; ++j) ip += Rational(b[i] * a[j]) * d->gram[i][j];
        EXPECT_EQ(Rational(pair_root_coroot(*d, b, coroot(*d, a))), 2 * ip / root_norm_sq(*d, a));
      }
}

TEST(Cartan, WeylActions) {
  auto a1 = build_cartan("A", 1);
  auto r1 = simple_reflection(a1, 1);
  EXPECT_EQ(mat_vec(r1.on_weights, IntVec{1}), IntVec{-1});
  auto a2 = build_cartan("A", 2);
  auto w = compose(a2, simple_reflection(a2, 1), simple_reflection(a2, 2));
  auto w2 = compose(a2, w, w);
  auto w3 = compose(a2, w2, w);
  EXPECT_FALSE(w2 == finite_identity(a2));
  EXPECT_TRUE(w3 == finite_identity(a2));
  auto g2 = build_cartan("G", 2);
  for (const auto& w : enumerate_finite_weyl(g2))
    for (const auto& a : g2.roots)
      for (const auto& b : g2.roots) {
        IntVec wa = apply_matrix(w.on_roots, a), wb = apply_matrix(w.on_roots, b);
        Rational x = root_norm_sq(g2, a + b) - root_norm_sq(g2, a) - root_norm_sq(g2, b);
        Rational y = root_norm_sq(g2, wa + wb) - root_norm_sq(g2, wa) - root_norm_sq(g2, wb);
        EXPECT_EQ(x, y);
      }
  for (int i = 1; i <= g2.rank; ++i) {
    IntVec e(2, 0);
    e[i - 1] = 1;
    EXPECT_EQ(apply_matrix(simple_reflection(g2, i).on_roots, e), -e);
  }
}

TEST(Cartan, WeightAndCorootMatricesAgree) {
  auto b3 = build_cartan("B", 3);
  for (const auto& w : enumerate_finite_weyl(b3)) {
    for (const auto& a : b3.roots) {
      // w acting on the root, then converted, equals conversion then the weight action
      EXPECT_EQ(root_as_weight(b3, apply_matrix(w.on_roots, a)), apply_matrix(w.on_weights, root_as_weight(b3, a)));
      EXPECT_EQ(coroot(b3, apply_matrix(w.on_roots, a)), apply_matrix(w.on_coroots, coroot(b3, a)));
    }
  }
}

TEST(Cartan, CapExceeded) {
  auto e8 = build_cartan("E", 8);
  try {
    enumerate_finite_weyl(e8, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
}
