#pragma once

// Valuation-level classification of Q_p(a^{1/n}) over Q_p.

#include <optional>
#include <string>

#include "radix/rational.hpp"

namespace radix {

struct PadicRadical {
  BigInt p;
  unsigned long n = 1;
  BigRational a;
  long v = 0;  // v_p(a)
};

/// Throws InvalidDescriptor unless p is prime, a != 0 and x^n - a is
/// irreducible over Q.
PadicRadical make_padic(const BigInt& p, unsigned long n, const BigRational& a);

/// a' = a^s p^{tn} with sv + tn = 1, when gcd(v, n) = 1.
std::optional<BigRational> normalize_eisenstein(const PadicRadical& x);

/// r p e / (p - 1).
BigRational jump_bound(const BigInt& p, unsigned long e, unsigned long r);

struct MaxRamifiedResult {
  bool max_ramified = false;
  std::optional<BigRational> witness;  // radicand of the uniformizer
};

/// Throws DegreeMismatch when n != p.
MaxRamifiedResult max_ramified_test(const PadicRadical& x);

struct RamificationReport {
  bool tame = false;
  bool totally_ramified = false;
  std::optional<BigRational> eisenstein;
  unsigned long r = 0;  // [Q_p(zeta_p) : Q_p] when n = p
  std::optional<BigRational> jump_bound;
  std::optional<bool> max_ramified;
  std::string verdict;  // free or undetermined
  std::string route;    // tame_padic, eisenstein_padic, max_ramified_padic
  std::string reason;
};

RamificationReport ramification_classify(const PadicRadical& x);

}  // namespace radix
