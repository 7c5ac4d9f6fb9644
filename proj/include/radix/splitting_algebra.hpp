#pragma once

// The algebra Q(zeta_m)[y_1, ..., y_k] / (y_i^{n_i} - a_i) with zeta_m modelled
// as x mod Phi_m. The standard splitting algebra of a single radical has
// m = n and k = 1; compositums carry several radicals with m = lcm(n_i).
//
// Basis: zeta^i * y^J, 0 <= i < phi(m), J = (j_1, ..., j_k) with 0 <= j_r < n_r.
// Coordinate index = slot(J) * phi + i, slot(J) mixed radix with j_1 most
// significant.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "radix/qmatrix.hpp"
#include "radix/qpoly.hpp"
#include "radix/rational.hpp"

namespace radix {

struct RadicalDescriptor {
  unsigned long n = 1;
  BigRational a = 1;
  friend bool operator==(const RadicalDescriptor&, const RadicalDescriptor&) = default;
};

/// Irreducibility of x^n - a over Q (Vahlen-Capelli power criterion).
bool radical_irreducible(unsigned long n, const BigRational& a);
/// Validated descriptor; throws InvalidDescriptor.
RadicalDescriptor make_descriptor(unsigned long n, const BigRational& a);

struct AlgElem {
  std::vector<BigRational> coords;

  bool is_zero() const;
  friend AlgElem operator+(const AlgElem& x, const AlgElem& y);
  friend AlgElem operator-(const AlgElem& x, const AlgElem& y);
  friend AlgElem operator-(const AlgElem& x);
  friend AlgElem operator*(const BigRational& s, const AlgElem& x);
  friend bool operator==(const AlgElem& x, const AlgElem& y) { return x.coords == y.coords; }
};

/// sigma_{j,t}: y_r -> zeta_m^{j_r m / n_r} y_r, zeta -> zeta^t.
struct Automorphism {
  std::vector<unsigned long> j;
  unsigned long t = 1;
  friend bool operator==(const Automorphism&, const Automorphism&) = default;
};

struct FieldCertificate;

class SplittingAlgebra {
 public:
  SplittingAlgebra(unsigned long m, std::vector<RadicalDescriptor> radicals);

  unsigned long cyclo_order() const;
  const std::vector<RadicalDescriptor>& radicals() const;
  /// The single radical of a standard algebra; throws for compositums.
  const RadicalDescriptor& descriptor() const;
  std::size_t phi() const;
  std::size_t dim() const;
  std::size_t slots() const;  // = [L:Q] model dimension, prod n_r
  const QPoly& cyclo() const;
  bool field_certified() const { return certified_; }
  SplittingAlgebra with_certificate(const FieldCertificate& cert) const;

  std::vector<unsigned long> slot_exponents(std::size_t slot) const;
  std::size_t slot_of(const std::vector<unsigned long>& j) const;

  AlgElem zero() const;
  AlgElem one() const;
  AlgElem rational(const BigRational& q) const;
  AlgElem zeta_pow(unsigned long e) const;
  AlgElem zeta() const { return zeta_pow(1); }
  AlgElem alpha(std::size_t r = 0) const;
  /// Element of L with the given coordinates over {y^J}.
  AlgElem from_l_coords(const std::vector<BigRational>& v) const;
  /// Coordinates over {y^J}; throws NotInL if x is not in L.
  std::vector<BigRational> l_coords(const AlgElem& x) const;
  /// Element of M = Q(zeta_m) with coordinates over {zeta^i}.
  AlgElem from_m_coords(const std::vector<BigRational>& v) const;

  AlgElem mul(const AlgElem& x, const AlgElem& y) const;
  AlgElem pow(const AlgElem& x, unsigned long e) const;
  QMatrix mult_matrix(const AlgElem& x) const;

  bool supports_automorphisms() const;
  std::vector<Automorphism> automorphisms() const;
  Automorphism compose(const Automorphism& g, const Automorphism& h) const;  // g after h
  AlgElem apply(const Automorphism& g, const AlgElem& x) const;
  QMatrix automorphism_matrix(const Automorphism& g) const;

  /// "zeta^i*alpha^j" or "zeta^i*alpha1^j1*alpha2^j2".
  std::string basis_label() const;
  /// Human-readable element, e.g. "1+a+a^2", "(1/3)*zeta*a1".
  std::string format(const AlgElem& x) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  bool certified_ = false;
};

SplittingAlgebra make_algebra(const RadicalDescriptor& d);

enum class FieldVerdict { Field, NotField, Indeterminate };
const char* verdict_name(FieldVerdict v);

struct FieldCertificate {
  FieldVerdict verdict = FieldVerdict::Indeterminate;
  std::string route;  // "primitive_element" or "degree_lcm"
  unsigned long c = 0;  // theta = zeta + c*y_1 + c^2*y_2 + ...
  QPoly minpoly;
  std::vector<QPoly> factors;  // irreducible factors of minpoly
  std::optional<AlgElem> zero_divisor;
  /// degree_lcm route: dimensions of certified sub-fields whose lcm is dim.
  std::vector<std::size_t> sub_degrees;
};

AlgElem elem_invert(const SplittingAlgebra& A, const AlgElem& x);
AlgElem apply_automorphism(const SplittingAlgebra& A, const Automorphism& g, const AlgElem& x);
QPoly minimal_poly(const SplittingAlgebra& A, const AlgElem& x);
FieldCertificate certify_field(const SplittingAlgebra& A);

enum class Subfield { K, L, M };
bool member_subfield(const SplittingAlgebra& A, const AlgElem& x, Subfield which);

/// [Q(zeta_m, a^{1/n}) : Q]. Throws Indeterminate.
std::size_t compositum_degree(unsigned long m, unsigned long n, const BigRational& a);

/// Field-certified splitting algebra of the compositum of the given radicals
/// over Q(zeta_lcm). Throws NotAField when the algebra is not a field.
SplittingAlgebra make_field(unsigned long m, const std::vector<RadicalDescriptor>& radicals);

/// Embedding of `from` into `to` sending zeta_{m'} to zeta_m^{m/m'} and the
/// r-th radical of `from` to radical radical_map[r] of `to`.
AlgElem embed(const SplittingAlgebra& from, const SplittingAlgebra& to,
              const std::vector<std::size_t>& radical_map, const AlgElem& x);

}  // namespace radix
