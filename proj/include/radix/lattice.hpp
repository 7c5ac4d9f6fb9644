#pragma once

#include "radix/qmatrix.hpp"

namespace radix {

struct HnfResult {
  QMatrix transform;  // unimodular U with U * input = [reduced; 0]
  QMatrix reduced;    // rank x cols, upper echelon, positive pivots, entries above pivots in [0, pivot)
  std::size_t rank = 0;
};

/// Row-style Hermite normal form of an integer matrix.
HnfResult hnf_reduce(const QMatrix& m);

/// Invariant factors (nonzero diagonal of the Smith form) of an integer matrix.
std::vector<BigInt> smith_invariants(const QMatrix& m);

/// Number of invariant factors of m that are not divisible by n.
std::size_t smith_rank_mod(const QMatrix& m, unsigned long n);

/// Canonical key of the Z-lattice spanned by the rows of a rational matrix:
/// the least d with d * rows integral, and the HNF of d * rows.
struct LatticeKey {
  BigInt denominator;
  QMatrix hnf;
  friend bool operator==(const LatticeKey& a, const LatticeKey& b) {
    return a.denominator == b.denominator && a.hnf == b.hnf;
  }
};

LatticeKey lattice_key(const QMatrix& rows);

}  // namespace radix
