#pragma once

// Shared helpers for the test suites: seeded generators and brute-force
// oracles that deliberately avoid the library's own algorithms.

#include <random>
#include <set>
#include <vector>

#include "radix/qmatrix.hpp"
#include "radix/qpoly.hpp"

namespace testing_support {

using radix::BigInt;
using radix::BigRational;
using radix::QMatrix;

inline long rand_int(std::mt19937_64& g, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(g);
}

inline BigRational rand_rational(std::mt19937_64& g, long num = 9, long den = 4) {
  return radix::make_rational(rand_int(g, -num, num), rand_int(g, 1, den));
}

inline QMatrix rand_int_matrix(std::mt19937_64& g, std::size_t r, std::size_t c, long bound) {
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rand_int(g, -bound, bound);
  return m;
}

/// Random unimodular integer matrix as a product of elementary operations.
inline QMatrix rand_unimodular(std::mt19937_64& g, std::size_t n, int steps = 12) {
  QMatrix u = QMatrix::identity(n);
  if (n < 2) {
    if (n == 1 && rand_int(g, 0, 1)) u(0, 0) = -1;
    return u;
  }
  for (int s = 0; s < steps; ++s) {
    std::size_t i = static_cast<std::size_t>(rand_int(g, 0, static_cast<long>(n) - 1));
    std::size_t j = static_cast<std::size_t>(rand_int(g, 0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    long q = rand_int(g, -2, 2);
    for (std::size_t k = 0; k < n; ++k) u(i, k) += BigRational(q) * u(j, k);
  }
  return u;
}

/// Laplace expansion; only for small matrices.
inline BigRational cofactor_det(const QMatrix& m) {
  std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  BigRational d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    QMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = m(i, j);
    BigRational t = m(0, c) * cofactor_det(minor);
    d += (c % 2 ? -t : t);
  }
  return d;
}

/// Size of the subgroup of (Z/n)^k generated by the rows, by closure.
inline std::size_t subgroup_size_mod(const std::vector<std::vector<long>>& rows, long n, std::size_t k) {
  std::set<std::vector<long>> seen{std::vector<long>(k, 0)};
  std::vector<std::vector<long>> frontier{std::vector<long>(k, 0)};
  while (!frontier.empty()) {
    std::vector<std::vector<long>> next;
    for (auto& v : frontier)
      for (auto& r : rows) {
        std::vector<long> w(k);
        for (std::size_t i = 0; i < k; ++i) w[i] = ((v[i] + r[i]) % n + n) % n;
        if (seen.insert(w).second) next.push_back(w);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

inline radix::QPoly qpoly(std::initializer_list<long> ascending) {
  std::vector<BigRational> v;
  for (long c : ascending) v.emplace_back(c);
  return radix::QPoly(std::move(v));
}

}  // namespace testing_support
