#include <gtest/gtest.h>

#include <random>

#include "affeis/tame_symbol.hpp"

using namespace affeis;

namespace {

using QSeries = LaurentSeries<Rational>;

Fp f5(std::int64_t v) { return Fp(v, 5); }

FpSeries poly5(std::int64_t start, std::vector<std::int64_t> c, std::int64_t prec = kExact) {
  std::vector<Fp> k;
  for (auto x : c) k.push_back(f5(x));
  return FpSeries(start, k, prec);
}

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(Laurent, ValuationAndPrecision) {
  FpSeries a = poly5(-2, {3, 1, 4}, 5);  // 3t^-2 + t^-1 + 4 + O(t^5)
  FpSeries b = poly5(1, {2, 2});         // exact
  FpSeries ab = a * b;
  EXPECT_EQ(ab.valuation(), -1);
  EXPECT_EQ(ab.precision(), 6);  // min(v(a) + prec(b), v(b) + prec(a))
  EXPECT_EQ(ab.coeff(-1), f5(6));
  EXPECT_EQ(ab.coeff(0), f5(2 + 6));
  EXPECT_EQ(kind_of([&] { ab.coeff(6); }), ErrorKind::InsufficientPrecision);
  EXPECT_EQ((a + b).precision(), 5);
  EXPECT_TRUE((b * b).is_exact());
  // cancellation of leading terms keeps the lower known precision
  FpSeries c = a - poly5(-2, {3, 1, 4, 0, 1});
  EXPECT_EQ(c.valuation(), 2);
  EXPECT_EQ(c.lead(), f5(-1));
  EXPECT_EQ(c.precision(), 5);
}

TEST(Laurent, InverseAgainstProduct) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coef(0, 4), unit(1, 4), val(-3, 3);
  for (int s = 0; s < 200; ++s) {
    std::vector<Fp> c(5);
    for (auto& x : c) x = f5(coef(rng));
    c[0] = f5(unit(rng));
    FpSeries x(val(rng), c);
    FpSeries y = x.inverse(20);
    FpSeries one = x * y;
    EXPECT_EQ(one.valuation(), 0);
    const bool monomial = x.coefficients().size() == 1;
    EXPECT_EQ(one.precision(), monomial ? kExact : 20);
    for (std::int64_t k = 0; k < std::min<std::int64_t>(one.precision(), 20); ++k)
      EXPECT_EQ(one.coeff(k), f5(k == 0 ? 1 : 0));
  }
  // exact monomials stay exact
  EXPECT_TRUE(poly5(3, {2}).inverse().is_exact());
  EXPECT_EQ(poly5(3, {2}).inverse().lead(), f5(3));
}

TEST(Laurent, RationalCoefficients) {
  QSeries x(0, {Rational(1), Rational(-1)});  // 1 - t
  QSeries y = x.inverse(10);
  for (std::int64_t k = 0; k < 10; ++k) EXPECT_EQ(y.coeff(k), Rational(1));
  QSeries z = QSeries(1, {Rational(1, 2)}) * QSeries(-3, {Rational(4)});
  EXPECT_EQ(z.valuation(), -2);
  EXPECT_EQ(z.lead(), Rational(2));
  EXPECT_EQ(x.pow(3).coeff(2), Rational(3));
  EXPECT_EQ(x.pow(-2).coeff(4), Rational(5));
}

TEST(Laurent, FieldMismatch) {
  EXPECT_EQ(kind_of([] { return Fp(1, 5) + Fp(1, 7); }), ErrorKind::FieldMismatch);
  FpSeries a = poly5(0, {1, 1});
  FpSeries b(0, {Fp(1, 7)});
  EXPECT_EQ(kind_of([&] { return a * b; }), ErrorKind::FieldMismatch);
  EXPECT_EQ(Fp(3) * Fp(4, 5), f5(2));  // bare integers adopt the modulus
}

TEST(TameSymbol, Examples) {
  const FpSeries t = FpSeries::t();
  EXPECT_EQ(tame_symbol(t, t), f5(-1));
  EXPECT_EQ(tame_symbol(FpSeries::constant(f5(2)), FpSeries::constant(f5(3))), f5(1));
  FpSeries u = poly5(0, {3, 2, 1});
  EXPECT_EQ(tame_symbol(t, u), f5(3).inverse());
  EXPECT_EQ(tame_symbol(u, t), f5(3));
  // over Q: (2t, 3t^-1) = (-1)^{-1} 2^{-1} / 3 = -1/6
  EXPECT_EQ(tame_symbol(QSeries(1, {Rational(2)}), QSeries(-1, {Rational(3)})), Rational(-1, 6));
  EXPECT_EQ(tame_symbol(QSeries::constant(Rational(7)), QSeries::constant(Rational(-2, 3))), Rational(1));
}

TEST(TameSymbol, Errors) {
  const FpSeries t = FpSeries::t();
  EXPECT_EQ(kind_of([&] { tame_symbol(FpSeries(), t); }), ErrorKind::ZeroInput);
  EXPECT_EQ(kind_of([&] { tame_symbol(t, FpSeries::big_oh(4)); }), ErrorKind::InsufficientPrecision);
  // a lead coefficient known only to be in O(t^0) is not enough
  EXPECT_EQ(kind_of([&] { tame_symbol(poly5(-1, {0}, 0), t); }), ErrorKind::InsufficientPrecision);
}

TEST(TameSymbol, Bimultiplicative) {
  std::mt19937_64 rng(11);
  for (int s = 0; s < 500; ++s) {
    FpSeries x1 = detail::random_series(rng, 5), x2 = detail::random_series(rng, 5), y = detail::random_series(rng, 5);
    EXPECT_EQ(tame_symbol(x1 * x2, y), tame_symbol(x1, y) * tame_symbol(x2, y));
    EXPECT_EQ(tame_symbol(y, x1 * x2), tame_symbol(y, x1) * tame_symbol(y, x2));
  }
}

TEST(SteinbergHarness, TameSymbolPasses) {
  for (std::int64_t p : {5, 7}) {
    SteinbergReport r = steinberg_harness(tame_symbol<Fp>, 1000, 1, p);
    EXPECT_TRUE(r.all_pass()) << "p = " << p;
    for (const auto& rel : r.relations) {
      EXPECT_GT(rel.checks, 500) << rel.name;
      EXPECT_EQ(rel.failures, 0) << rel.name;
    }
  }
}

TEST(SteinbergHarness, ConstantSymbolPasses) {
  SymbolFn one = [](const FpSeries& x, const FpSeries&) { return Fp(1, x.lead().modulus()); };
  EXPECT_TRUE(steinberg_harness(one, 300, 2, 5).all_pass());
}

TEST(SteinbergHarness, DroppedSignIsCaught) {
  SymbolFn broken = [](const FpSeries& x, const FpSeries& y) {
    return field_pow(x.lead(), y.known_valuation()) / field_pow(y.lead(), x.known_valuation());
  };
  SteinbergReport r = steinberg_harness(broken, 1000, 1, 5);
  EXPECT_FALSE(r.all_pass());
  const auto& rel = r.relation("u-minus-u");
  EXPECT_GT(rel.failures, 0);
  ASSERT_FALSE(rel.witnesses.empty());
  EXPECT_NE(rel.witnesses[0].find("u = "), std::string::npos);
  // the mutant is still bimultiplicative and skew
  EXPECT_EQ(r.relation("bimultiplicative").failures, 0);
  EXPECT_EQ(r.relation("skew").failures, 0);
}

TEST(SteinbergHarness, Reproducible) {
  SymbolFn broken = [](const FpSeries& x, const FpSeries& y) {
    return field_pow(x.lead(), y.known_valuation()) / field_pow(y.lead(), x.known_valuation());
  };
  auto a = steinberg_harness(broken, 200, 9, 7), b = steinberg_harness(broken, 200, 9, 7);
  for (std::size_t k = 0; k < a.relations.size(); ++k) {
    EXPECT_EQ(a.relations[k].failures, b.relations[k].failures);
    EXPECT_EQ(a.relations[k].witnesses, b.relations[k].witnesses);
  }
}

TEST(HBetaReduction, Exponents) {
  auto a1 = build_cartan("A", 1);
  EXPECT_EQ(h_beta_reduction(a1, {1}, 1, f5(2)).exponent, Rational(1));
  EXPECT_EQ(h_beta_reduction(a1, {1}, 0, f5(2)).exponent, Rational(0));
  auto c2 = build_cartan("C", 2);
  // Bourbaki C2: alpha_2 long, alpha_1 short
  EXPECT_EQ(h_beta_reduction(c2, {0, 1}, 3, f5(1)).exponent, Rational(3));
  EXPECT_EQ(h_beta_reduction(c2, {1, 0}, 1, f5(1)).exponent, Rational(2));
  EXPECT_EQ(h_beta_reduction(c2, {0, 1}, 3, f5(1)).base_root, (IntVec{0, 1}));
  EXPECT_EQ(kind_of([&] { h_beta_reduction(c2, {1, 1}, 1, Fp(0, 5)); }), ErrorKind::ZeroInput);
}
