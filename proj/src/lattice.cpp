#include "radix/lattice.hpp"

#include <algorithm>

#include "radix/errors.hpp"

namespace radix {

namespace {

using IMat = std::vector<std::vector<BigInt>>;

IMat to_int(const QMatrix& m) {
  IMat a(m.rows(), std::vector<BigInt>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) throw Error(Errc::Internal, "integer matrix expected");
      a[i][j] = m(i, j).get_num();
    }
  return a;
}

QMatrix to_q(const IMat& a, std::size_t rows, std::size_t cols) {
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = a[i][j];
  return m;
}

// rows (r, i) <- [[x, y], [u, v]] * rows (r, i)
void combine(std::vector<BigInt>& rr, std::vector<BigInt>& ri, const BigInt& x, const BigInt& y,
             const BigInt& u, const BigInt& v) {
  for (std::size_t j = 0; j < rr.size(); ++j) {
    BigInt a = x * rr[j] + y * ri[j];
    BigInt b = u * rr[j] + v * ri[j];
    rr[j] = std::move(a);
    ri[j] = std::move(b);
  }
}

void axpy(std::vector<BigInt>& dst, const BigInt& q, const std::vector<BigInt>& src) {
  for (std::size_t j = 0; j < dst.size(); ++j)
    if (src[j] != 0) dst[j] -= q * src[j];
}

}  // namespace

HnfResult hnf_reduce(const QMatrix& m) {
  IMat a = to_int(m);
  std::size_t rows = m.rows(), cols = m.cols();
  IMat u(rows, std::vector<BigInt>(rows));
  for (std::size_t i = 0; i < rows; ++i) u[i][i] = 1;

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      BigInt g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a[r][c].get_mpz_t(), a[i][c].get_mpz_t());
      BigInt uu = -a[i][c] / g, vv = a[r][c] / g;
      combine(a[r], a[i], x, y, uu, vv);
      combine(u[r], u[i], x, y, uu, vv);
    }
    if (a[r][c] == 0) continue;
    if (a[r][c] < 0) {
      for (auto& v : a[r]) v = -v;
      for (auto& v : u[r]) v = -v;
    }
    for (std::size_t i = 0; i < r; ++i) {
      BigInt q = floor_div(a[i][c], a[r][c]);
      if (q == 0) continue;
      axpy(a[i], q, a[r]);
      axpy(u[i], q, u[r]);
    }
    ++r;
  }
  HnfResult res;
  res.rank = r;
  res.transform = to_q(u, rows, rows);
  res.reduced = to_q(a, r, cols);
  return res;
}

std::vector<BigInt> smith_invariants(const QMatrix& m) {
  IMat a = to_int(m);
  std::size_t rows = m.rows(), cols = m.cols();
  std::vector<BigInt> out;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero entry in the trailing block.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) { pi = i; pj = j; }
      if (pi == rows) goto done;
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        BigInt q = floor_div(a[i][t], a[t][t]);
        axpy(a[i], q, a[t]);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        BigInt q = floor_div(a[t][j], a[t][t]);
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce divisibility of the trailing block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    out.push_back(abs(a[t][t]));
  }
done:
  return out;
}

std::size_t smith_rank_mod(const QMatrix& m, unsigned long n) {
  std::size_t count = 0;
  for (auto& d : smith_invariants(m))
    if (!mpz_divisible_ui_p(d.get_mpz_t(), n)) ++count;
  return count;
}

LatticeKey lattice_key(const QMatrix& rows) {
  LatticeKey k;
  k.denominator = denominator_lcm(rows);
  k.hnf = hnf_reduce(BigRational(k.denominator) * rows).reduced;
  return k;
}

}  // namespace radix
