#pragma once

#include <cstddef>
#include <vector>

#include "radix/rational.hpp"

namespace radix {

/// Dense row-major matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  QMatrix(std::size_t rows, std::size_t cols, std::vector<BigRational> entries);
  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<std::vector<BigRational>>& rows);
  static QMatrix from_columns(const std::vector<std::vector<BigRational>>& cols, std::size_t height);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigRational& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const BigRational& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  const std::vector<BigRational>& entries() const { return e_; }

  std::vector<BigRational> row(std::size_t r) const;
  std::vector<BigRational> column(std::size_t c) const;
  QMatrix transpose() const;
  bool is_integral() const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const BigRational& s, const QMatrix& a);
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigRational> e_;
};

std::vector<BigRational> mat_vec(const QMatrix& m, const std::vector<BigRational>& v);

/// Vertical stacking; all blocks must share the column count.
QMatrix vstack(const std::vector<QMatrix>& blocks);
QMatrix kron(const QMatrix& a, const QMatrix& b);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m);
std::size_t rank(QMatrix m);
/// Basis of the right kernel as columns, pivot-ordered (each basis vector has
/// a 1 in one free coordinate and 0 in the others).
QMatrix kernel(const QMatrix& m);
/// Throws Error(SingularMatrix).
QMatrix mat_inverse(const QMatrix& m);
/// Solves m * x = b for a unique x; throws SingularMatrix otherwise.
std::vector<BigRational> solve(const QMatrix& m, const std::vector<BigRational>& b);
/// Fraction-free (Bareiss) determinant.
BigRational determinant(const QMatrix& m);

/// Simultaneous fixed space of the given square maps, as basis columns in
/// reduced echelon form.
QMatrix fixed_subspace(const std::vector<QMatrix>& maps);

/// Least common multiple of all entry denominators (1 for the empty matrix).
BigInt denominator_lcm(const QMatrix& m);

}  // namespace radix
