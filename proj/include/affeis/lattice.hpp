#pragma once

// F[[t]]-lattices in F((t))^n, given by a generator matrix whose columns span them.

#include <cstdint>
#include <numeric>

#include "affeis/laurent.hpp"

namespace affeis {

template <class K>
struct Lattice {
  int dim = 0;
  LMatrix<K> generators;
};

template <class K>
Lattice<K> standard_lattice(int n) {
  return {n, lmatrix_identity<K>(n)};
}

template <class K>
Lattice<K> make_lattice(const LMatrix<K>& gens) {
  check_square(gens);
  return {static_cast<int>(gens.size()), gens};
}

template <class K>
Lattice<K> transform(const LMatrix<K>& g, const Lattice<K>& L) {
  return {L.dim, mat_mul(g, L.generators)};
}

// dim(L1, L2) = dim L1/(L1 cap L2) - dim L2/(L1 cap L2). Writing L_k = A_k L0,
// both sides reduce to the Smith exponents: dim(L0, A L0) = a_1 + ... + a_n,
// so dim(L, tL) = n.
template <class K>
std::int64_t relative_dim(const Lattice<K>& L1, const Lattice<K>& L2) {
  if (L1.dim != L2.dim) throw Error(ErrorKind::DimensionMismatch, "lattices of different rank");
  auto a1 = smith_valuations(L1.generators);
  auto a2 = smith_valuations(L2.generators);
  return std::accumulate(a2.begin(), a2.end(), std::int64_t{0}) -
         std::accumulate(a1.begin(), a1.end(), std::int64_t{0});
}

}  // namespace affeis
