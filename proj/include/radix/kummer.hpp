#pragma once

// H-eigenvectors, eigenvalue matrices, H-Kummer certification, strong
// disjointness of radical extensions and ranks in Q*/(Q*)^n.

#include <optional>
#include <string>
#include <vector>

#include "radix/hopf.hpp"

namespace radix {

struct EigenReport {
  AlgElem element;
  std::vector<BigRational> eigenvalues;  // one per basis element of H
};

struct EigenTestResult {
  std::optional<EigenReport> report;
  std::optional<std::size_t> witness;  // first basis element not acting by a scalar
  bool is_eigen() const { return report.has_value(); }
};

/// Throws ZeroElement for x = 0 and NotInL for x outside L.
EigenTestResult eigen_test(const HopfStructure& H, const AlgElem& x);

/// lambda(j, i) = eigenvalue of w_i on gamma_j; omega = lambda^{-1}, so
/// column i of omega gives v_i with v_i . gamma_j = delta_ij gamma_j.
struct EigenvalueMatrix {
  QMatrix lambda;
  QMatrix omega;
  std::vector<AlgElem> basis;  // the gammas
};

/// Throws NotEigenBasis when B is not a basis of L made of H-eigenvectors.
EigenvalueMatrix eigen_matrix(const HopfStructure& H, const std::vector<AlgElem>& B);

struct KummerCertificate {
  unsigned long exponent = 1;
  std::string complement;
  std::vector<AlgElem> generators;
  std::vector<std::vector<BigRational>> generator_eigenvalues;
  std::vector<AlgElem> eigen_basis;
  bool almost_cyclic = false;
  bool almost_kummer = false;
  bool h_cyclic = false;
  bool h_kummer = false;
  bool strongly_decomposable = false;
};

/// Throws NotGenerating or NotEigen.
KummerCertificate h_kummer_certify(const HopfStructure& H, const std::vector<AlgElem>& gens);

struct StrongDisjointReport {
  bool disjoint = false;
  std::string route;  // "totally_real_shortcut" or "compositum_degree"
  std::string witness;
  std::size_t degree_l1m2 = 0, degree_l2m1 = 0, degree_l1l2 = 0;
};

/// Throws Indeterminate when a compositum degree cannot be certified.
StrongDisjointReport strong_disjoint_test(const RadicalDescriptor& d1, const RadicalDescriptor& d2);

struct RadicalEquivalence {
  std::size_t i = 0, j = 0;
  unsigned long r = 1;
  BigRational c;  // a_i = a_j^r * c^n
};

struct RadicalClassGroup {
  unsigned long exponent = 1;
  std::vector<BigRational> generators;
  std::vector<std::string> columns;  // primes, then "sign" when n is even
  QMatrix exponent_matrix;
  std::size_t rank = 0;
  std::vector<RadicalEquivalence> equivalences;
};

RadicalClassGroup radical_group_rank(unsigned long n, const std::vector<BigRational>& radicands);

struct Theorem1Result {
  KummerCertificate certificate;
  HopfStructure structure;
};

/// Throws NotMinimalExponent, NotStronglyDisjoint, ComplementIntersects.
Theorem1Result theorem1_certify(unsigned long n, const std::vector<RadicalDescriptor>& radicals);

}  // namespace radix
