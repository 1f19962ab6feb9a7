#pragma once

// Formal characters of irreducible representations (Freudenthal's
// multiplicity formula) and the Dynkin index d = 1/2 sum_lambda n_lambda <lambda, theta^vee>^2.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <vector>

#include "affeis/cartan.hpp"

namespace affeis {

// Weights in fundamental coordinates with multiplicities.
struct WeightMultiset {
  std::vector<std::pair<IntVec, std::int64_t>> entries;

  std::int64_t dimension() const {
    std::int64_t n = 0;
    for (const auto& e : entries) n += e.second;
    return n;
  }
};

inline Rational dynkin_index(const FiniteCartanData& d, const WeightMultiset& ch) {
  const IntVec thv = coroot(d, d.theta());
  Rational acc = 0;
  for (const auto& [lam, n] : ch.entries) {
    std::int64_t p = 0;
    for (int i = 0; i < d.rank; ++i) p += lam[i] * thv[i];
    acc += Rational(n * p * p);
  }
  return acc / 2;
}

namespace detail {

inline bool is_dominant(const IntVec& mu) {
  return std::all_of(mu.begin(), mu.end(), [](std::int64_t x) { return x >= 0; });
}

// Reflect into the dominant chamber.
inline IntVec dominant_conjugate(const FiniteCartanData& d, IntVec mu) {
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < d.rank; ++i)
      if (mu[i] < 0) {
        std::int64_t c = mu[i];
        for (int k = 0; k < d.rank; ++k) mu[k] -= c * d.cartan[i][k];
        moved = true;
      }
  }
  return mu;
}

inline std::vector<IntVec> weyl_orbit(const FiniteCartanData& d, const IntVec& mu) {
  std::set<IntVec> seen{mu};
  std::deque<IntVec> queue{mu};
  while (!queue.empty()) {
    IntVec x = queue.front();
    queue.pop_front();
    for (int i = 0; i < d.rank; ++i) {
      if (x[i] == 0) continue;
      IntVec y = x;
      for (int k = 0; k < d.rank; ++k) y[k] -= x[i] * d.cartan[i][k];
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

inline Rational inner(const FiniteCartanData& d, const IntVec& a, const IntVec& b) {
  return weight_inner<Rational>(d, to_rat(a), to_rat(b));
}

}  // namespace detail

// The character of the irreducible module with dominant highest weight lambda.
inline WeightMultiset irreducible_character(const FiniteCartanData& d, const IntVec& lambda) {
  if (static_cast<int>(lambda.size()) != d.rank || !detail::is_dominant(lambda))
    throw Error(ErrorKind::NonDominant, "highest weight must be dominant");
  // dominant mu = lambda - sum k_i alpha_i; (mu, varpi_i) >= 0 bounds k_i by 2(lambda, varpi_i)/(alpha_i, alpha_i)
  std::vector<std::int64_t> bound(d.rank);
  for (int i = 0; i < d.rank; ++i) {
    Rational b = 0;
    for (int j = 0; j < d.rank; ++j) b += Rational(lambda[j]) * d.weight_gram[j][i];
    b = Rational(2) * b / d.gram[i][i];
    bound[i] = b.numerator() / b.denominator();
  }
  std::vector<IntVec> alpha_w(d.rank);
  for (int i = 0; i < d.rank; ++i) {
    IntVec e(d.rank, 0);
    e[i] = 1;
    alpha_w[i] = root_as_weight(d, e);
  }
  std::vector<std::pair<std::int64_t, IntVec>> dominant;  // (depth, mu)
  IntVec k(d.rank, 0);
  for (;;) {
    IntVec mu = lambda;
    std::int64_t depth = 0;
    for (int i = 0; i < d.rank; ++i) {
      depth += k[i];
      for (int j = 0; j < d.rank; ++j) mu[j] -= k[i] * alpha_w[i][j];
    }
    if (detail::is_dominant(mu)) dominant.push_back({depth, mu});
    int i = 0;
    while (i < d.rank && ++k[i] > bound[i]) k[i++] = 0;
    if (i == d.rank) break;
  }
  std::sort(dominant.begin(), dominant.end());
  std::vector<IntVec> posw;
  for (const auto& a : d.positive_roots) posw.push_back(root_as_weight(d, a));
  const IntVec rho(d.rank, 1);
  auto plus = [](IntVec a, const IntVec& b, std::int64_t c) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += c * b[i];
    return a;
  };
  const Rational top = detail::inner(d, plus(lambda, rho, 1), plus(lambda, rho, 1));
  std::map<IntVec, std::int64_t> mult;
  for (const auto& [depth, mu] : dominant) {
    if (depth == 0) {
      mult[mu] = 1;
      continue;
    }
    Rational acc = 0;
    for (const auto& a : posw)
      for (std::int64_t c = 1;; ++c) {
        IntVec nu = plus(mu, a, c);
        auto it = mult.find(detail::dominant_conjugate(d, nu));
        if (it == mult.end()) break;
        acc += Rational(it->second) * detail::inner(d, nu, a);
      }
    Rational denom = top - detail::inner(d, plus(mu, rho, 1), plus(mu, rho, 1));
    Rational m = 2 * acc / denom;
    if (m.denominator() != 1) throw std::logic_error("Freudenthal produced a non-integer multiplicity");
    mult[mu] = m.numerator();
  }
  WeightMultiset ch;
  for (const auto& [mu, m] : mult)
    for (const auto& nu : detail::weyl_orbit(d, mu)) ch.entries.push_back({nu, m});
  std::sort(ch.entries.begin(), ch.entries.end());
  return ch;
}

inline WeightMultiset fundamental_character(const FiniteCartanData& d, int i) {
  IntVec lam(d.rank, 0);
  lam.at(i - 1) = 1;
  return irreducible_character(d, lam);
}

// min over fundamental representations of the Dynkin index
inline Rational minimal_fundamental_index(const FiniteCartanData& d) {
  Rational best = 0;
  for (int i = 1; i <= d.rank; ++i) {
    Rational x = dynkin_index(d, fundamental_character(d, i));
    if (i == 1 || x < best) best = x;
  }
  return best;
}

// d_g: the smallest Dynkin index of a nontrivial representation.
inline std::int64_t dynkin_table(TypeLabel t, int n) {
  detail::check_type(t, n);
  switch (t) {
    case TypeLabel::A: return 1;
    case TypeLabel::B: return n == 2 ? 1 : 2;  // B2 = C2
    case TypeLabel::C: return 1;
    case TypeLabel::D: return 2;
    case TypeLabel::E: return n == 6 ? 6 : n == 7 ? 12 : 60;
    case TypeLabel::F: return 6;
    case TypeLabel::G: return 2;
  }
  return 0;
}

}  // namespace affeis
