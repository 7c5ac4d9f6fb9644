#include "radix/qmatrix.hpp"

#include "radix/errors.hpp"

namespace radix {

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<BigRational> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != rows * cols) throw Error(Errc::DimensionMismatch, "matrix entry count");
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<BigRational>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  QMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw Error(Errc::DimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<std::vector<BigRational>>& cols, std::size_t height) {
  QMatrix m(height, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != height) throw Error(Errc::DimensionMismatch, "ragged columns");
    for (std::size_t i = 0; i < height; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

std::vector<BigRational> QMatrix::row(std::size_t r) const {
  return {e_.begin() + static_cast<long>(r * cols_), e_.begin() + static_cast<long>((r + 1) * cols_)};
}

std::vector<BigRational> QMatrix::column(std::size_t c) const {
  std::vector<BigRational> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool QMatrix::is_integral() const {
  for (auto& x : e_)
    if (x.get_den() != 1) return false;
  return true;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(Errc::DimensionMismatch, "matrix product shape");
  QMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigRational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
    }
  return r;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(Errc::DimensionMismatch, "matrix sum shape");
  QMatrix r(a);
  for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] += b.e_[k];
  return r;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(Errc::DimensionMismatch, "matrix difference shape");
  QMatrix r(a);
  for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] -= b.e_[k];
  return r;
}

QMatrix operator*(const BigRational& s, const QMatrix& a) {
  QMatrix r(a);
  for (auto& x : r.e_) x *= s;
  return r;
}

std::vector<BigRational> mat_vec(const QMatrix& m, const std::vector<BigRational>& v) {
  if (v.size() != m.cols()) throw Error(Errc::DimensionMismatch, "matrix-vector shape");
  std::vector<BigRational> r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (v[j] != 0) r[i] += m(i, j) * v[j];
  return r;
}

QMatrix vstack(const std::vector<QMatrix>& blocks) {
  std::size_t rows = 0, cols = blocks.empty() ? 0 : blocks[0].cols();
  for (auto& b : blocks) {
    if (b.cols() != cols) throw Error(Errc::DimensionMismatch, "vstack column count");
    rows += b.rows();
  }
  QMatrix r(rows, cols);
  std::size_t off = 0;
  for (auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j) r(off + i, j) = b(i, j);
    off += b.rows();
  }
  return r;
}

QMatrix kron(const QMatrix& a, const QMatrix& b) {
  QMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    BigRational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      BigRational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(QMatrix m) { return rref(m).size(); }

QMatrix kernel(const QMatrix& m) {
  QMatrix r(m);
  auto piv = rref(r);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::vector<BigRational>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    std::vector<BigRational> v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  return QMatrix::from_columns(basis, m.cols());
}

QMatrix mat_inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::DimensionMismatch, "inverse of non-square matrix");
  std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref(aug);
  if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) throw Error(Errc::SingularMatrix, "matrix is singular");
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::vector<BigRational> solve(const QMatrix& m, const std::vector<BigRational>& b) {
  if (b.size() != m.rows()) throw Error(Errc::DimensionMismatch, "solve shape");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto piv = rref(aug);
  if (piv.size() != m.cols() || (!piv.empty() && piv.back() == m.cols()))
    throw Error(Errc::SingularMatrix, "system has no unique solution");
  std::vector<BigRational> x(m.cols());
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, m.cols());
  return x;
}

BigRational determinant(const QMatrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::DimensionMismatch, "determinant of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  BigInt scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt d = 1;
    for (std::size_t j = 0; j < n; ++j) d = lcm(d, m(i, j).get_den());
    for (std::size_t j = 0; j < n; ++j) {
      BigRational v = m(i, j) * d;
      a[i][j] = v.get_num();
    }
    scale *= d;
  }
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return make_rational(BigInt(sign * a[n - 1][n - 1]), scale);
}

QMatrix fixed_subspace(const std::vector<QMatrix>& maps) {
  if (maps.empty()) throw Error(Errc::DimensionMismatch, "fixed_subspace needs at least one map");
  std::size_t n = maps[0].rows();
  std::vector<QMatrix> blocks;
  for (auto& f : maps) {
    if (f.rows() != n || f.cols() != n) throw Error(Errc::DimensionMismatch, "fixed_subspace map shape");
    blocks.push_back(f - QMatrix::identity(n));
  }
  QMatrix k = kernel(vstack(blocks));
  QMatrix rows = k.transpose();
  std::size_t r = rref(rows).size();
  QMatrix out(n, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) out(j, i) = rows(i, j);
  return out;
}

BigInt denominator_lcm(const QMatrix& m) {
  BigInt d = 1;
  for (auto& x : m.entries()) d = lcm(d, x.get_den());
  return d;
}

}  // namespace radix
