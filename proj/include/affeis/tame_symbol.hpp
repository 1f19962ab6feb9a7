#pragma once

// The tame symbol on F((t))^x and a randomized checker for the Steinberg
// symbol relations.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "affeis/cartan.hpp"
#include "affeis/laurent.hpp"

namespace affeis {

// (x, y) = (-1)^{v(x)v(y)} x^{v(y)} / y^{v(x)} evaluated at t = 0.
template <class K>
K tame_symbol(const LaurentSeries<K>& x, const LaurentSeries<K>& y) {
  const std::int64_t vx = x.known_valuation(), vy = y.known_valuation();
  K r = field_pow(x.lead(), vy) / field_pow(y.lead(), vx);
  return ((vx * vy) % 2 != 0) ? -r : r;
}

using FpSeries = LaurentSeries<Fp>;
using SymbolFn = std::function<Fp(const FpSeries&, const FpSeries&)>;

struct RelationResult {
  std::string name;
  std::string statement;
  int checks = 0;
  int failures = 0;
  std::vector<std::string> witnesses;  // at most a few
};

struct SteinbergReport {
  std::int64_t p = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  std::vector<RelationResult> relations;

  bool all_pass() const {
    for (const auto& r : relations)
      if (r.failures) return false;
    return true;
  }
  const RelationResult& relation(const std::string& name) const {
    for (const auto& r : relations)
      if (r.name == name) return r;
    throw Error(ErrorKind::InvalidArgument, "no relation named " + name);
  }
};

namespace detail {

// Random nonzero Laurent polynomial over F_p: valuation in [-3, 3], up to
// four terms. One draw in four is 1 + (higher terms), which makes 1 - u
// land on small positive valuations.
inline FpSeries random_series(std::mt19937_64& rng, std::int64_t p) {
  std::uniform_int_distribution<int> val(-3, 3), len(1, 4), coef(0, static_cast<int>(p) - 1),
      unit(1, static_cast<int>(p) - 1), kind(0, 3);
  if (kind(rng) == 0) {
    std::vector<Fp> c(1 + len(rng), Fp(0, p));
    c[0] = Fp(1, p);
    for (std::size_t k = 1; k < c.size(); ++k) c[k] = Fp(coef(rng), p);
    c.back() = Fp(unit(rng), p);
    return FpSeries(0, c);
  }
  std::vector<Fp> c(len(rng), Fp(0, p));
  for (auto& x : c) x = Fp(coef(rng), p);
  c[0] = Fp(unit(rng), p);
  return FpSeries(val(rng), c);
}

inline std::string witness(const std::vector<std::pair<std::string, FpSeries>>& xs) {
  std::string s;
  for (const auto& [n, x] : xs) s += (s.empty() ? "" : ", ") + n + " = " + x.str();
  return s;
}

}  // namespace detail

// Checks the relations
//   c(u,v) c(uv,w) = c(u,vw) c(v,w), c(1,u) = c(u,1) = 1
//   c(u,v) c(u,-1/v) = c(u,-1)
//   c(u,v) = c(1/v,u)
//   c(u,v) = c(u,-uv)
//   c(u,v) = c(u,(1-u)v)
//   bimultiplicativity, skew symmetry, c(u,-u) = 1, c(u,1-u) = 1
// on `samples` random triples over F_p((t)).
inline SteinbergReport steinberg_harness(const SymbolFn& c, int samples, std::uint64_t seed, std::int64_t p = 5) {
  SteinbergReport rep{p, samples, seed, {}};
  rep.relations = {
      {"normalized-cocycle", "c(u,v)c(uv,w) = c(u,vw)c(v,w), c(1,u) = c(u,1) = 1"},
      {"inverse-twist", "c(u,v)c(u,-1/v) = c(u,-1)"},
      {"swap-inverse", "c(u,v) = c(1/v,u)"},
      {"minus-product", "c(u,v) = c(u,-uv)"},
      {"one-minus-twist", "c(u,v) = c(u,(1-u)v)"},
      {"bimultiplicative", "c(uv,w) = c(u,w)c(v,w), c(u,vw) = c(u,v)c(u,w)"},
      {"skew", "c(u,v)c(v,u) = 1"},
      {"u-minus-u", "c(u,-u) = 1"},
      {"u-one-minus-u", "c(u,1-u) = 1"},
  };
  std::mt19937_64 rng(seed);
  const FpSeries one = FpSeries::constant(Fp(1, p));
  const FpSeries minus_one = FpSeries::constant(Fp(-1, p));
  auto record = [&](std::size_t r, bool ok, const std::vector<std::pair<std::string, FpSeries>>& xs) {
    auto& rel = rep.relations[r];
    ++rel.checks;
    if (ok) return;
    ++rel.failures;
    if (rel.witnesses.size() < 3) rel.witnesses.push_back(detail::witness(xs));
  };
  for (int s = 0; s < samples; ++s) {
    FpSeries u = detail::random_series(rng, p), v = detail::random_series(rng, p),
             w = detail::random_series(rng, p);
    std::vector<std::pair<std::string, FpSeries>> uvw = {{"u", u}, {"v", v}, {"w", w}};
    std::vector<std::pair<std::string, FpSeries>> uv = {{"u", u}, {"v", v}};
    std::vector<std::pair<std::string, FpSeries>> u_only = {{"u", u}};
    Fp cuv = c(u, v);
    record(0, cuv * c(u * v, w) == c(u, v * w) * c(v, w) && c(one, u) == Fp(1, p) && c(u, one) == Fp(1, p), uvw);
    record(1, cuv * c(u, -v.inverse()) == c(u, minus_one), uv);
    record(2, cuv == c(v.inverse(), u), uv);
    record(3, cuv == c(u, -(u * v)), uv);
    FpSeries omu = one - u;
    if (!omu.is_zero()) {
      record(4, cuv == c(u, omu * v), uv);
      record(8, c(u, omu) == Fp(1, p), u_only);
    }
    record(5, c(u * v, w) == c(u, w) * c(v, w) && c(u, v * w) == cuv * c(u, w), uvw);
    record(6, cuv * c(v, u) == Fp(1, p), uv);
    record(7, c(u, -u) == Fp(1, p), u_only);
  }
  return rep;
}

struct HBetaReduction {
  Rational exponent;
  IntVec base_root;
};

// h~_beta(u) = u^{2i/(alpha,alpha)} h~_alpha(u) for beta = alpha + i delta,
// with long roots of square length 2.
template <class K>
HBetaReduction h_beta_reduction(const FiniteCartanData& d, const IntVec& alpha, std::int64_t i, const K& u) {
  if (u == K(0)) throw Error(ErrorKind::ZeroInput, "h_beta needs u != 0");
  if (!is_root(d, alpha)) throw Error(ErrorKind::NotARoot, "h_beta needs a finite root");
  return {Rational(2 * i) / root_norm_sq(d, alpha), alpha};
}

}  // namespace affeis
