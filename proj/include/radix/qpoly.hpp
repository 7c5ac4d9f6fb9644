#pragma once

#include <string>
#include <utility>
#include <vector>

#include "radix/rational.hpp"

namespace radix {

/// Univariate polynomial over Q, coefficients in ascending degree.
/// The zero polynomial has an empty coefficient vector.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<BigRational> coeffs);
  static QPoly constant(const BigRational& c);
  static QPoly x_pow(std::size_t k, const BigRational& c = 1);

  const std::vector<BigRational>& coeffs() const { return c_; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  BigRational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigRational(0); }
  const BigRational& leading() const { return c_.back(); }

  QPoly monic() const;
  QPoly derivative() const;
  BigRational eval(const BigRational& x) const;

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const BigRational& s, const QPoly& a);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<BigRational> c_;
};

/// Quotient and remainder; b must be nonzero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
/// Monic gcd (zero if both are zero).
QPoly poly_gcd(QPoly a, QPoly b);

/// The n-th cyclotomic polynomial.
QPoly cyclotomic(unsigned n);

/// Factorization over Q into monic irreducibles with multiplicities, sorted
/// by degree then coefficients. The leading coefficient of f is dropped.
std::vector<std::pair<QPoly, unsigned>> poly_factor(const QPoly& f);

/// Canonical ordering used by poly_factor: degree, then coefficient vectors
/// compared lexicographically from the constant term.
bool poly_less(const QPoly& a, const QPoly& b);

}  // namespace radix
