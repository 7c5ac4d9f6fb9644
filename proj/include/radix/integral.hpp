#pragma once

// Integral bases of radical extensions, the matrix of the action, associated
// orders by the HNF and eigenvalue paths, and freeness certificates.

#include <optional>
#include <string>
#include <vector>

#include "radix/kummer.hpp"
#include "radix/lattice.hpp"

namespace radix {

struct IntegralBasis {
  std::vector<AlgElem> elements;
  std::string certification;  // gassert_power_basis, product_of_certified, supplied
};

/// Power basis when Z[alpha] is the ring of integers: a squarefree integer
/// with a^p != a mod p^2 for every prime p | n. Throws NotCertified.
IntegralBasis monogenic_radical(const SplittingAlgebra& A);
bool gassert_condition(const RadicalDescriptor& d);
BigRational disc_radical(const RadicalDescriptor& d);

/// Products of the factor bases in the compositum of product_structure,
/// ordered i * n2 + k. Throws NotCertified unless the discriminants are coprime.
IntegralBasis product_integral_basis(const SplittingAlgebra& compositum, const SplittingAlgebra& A1,
                                     const IntegralBasis& B1, const SplittingAlgebra& A2, const IntegralBasis& B2);

/// Block j holds the columns (w_i . gamma_j)_B.
struct ActionMatrix {
  std::vector<QMatrix> blocks;
  QMatrix stacked() const { return vstack(blocks); }
};

/// Coordinates of x in B; throws NotInL when x is outside their span.
std::vector<BigRational> basis_coords(const SplittingAlgebra& A, const std::vector<AlgElem>& B, const AlgElem& x);

/// Throws RankDeficient when the stacked matrix has rank below n.
ActionMatrix matrix_of_action(const HopfStructure& H, const IntegralBasis& B);

struct AssocOrderBasis {
  std::vector<std::vector<BigRational>> basis;  // coordinates in the basis of H
  LatticeKey key;
};

AssocOrderBasis make_order(std::vector<std::vector<BigRational>> basis);

struct ReducedMatrix {
  BigInt denominator;  // d clearing the action matrix
  QMatrix D;           // reduced block divided by d
};

ReducedMatrix reduced_matrix(const ActionMatrix& M);
AssocOrderBasis assoc_order_hnf(const ActionMatrix& M);

struct IdempotencyReport {
  bool idempotent = false;
  bool orthogonal = false;
  bool sums_to_one = false;
};

struct EigenOrder {
  AssocOrderBasis order;
  IdempotencyReport report;
};

/// v_i = column i of omega. Throws NotIdempotent when the v_i are not a
/// complete system of orthogonal idempotents.
EigenOrder assoc_order_eigen(const HopfStructure& H, const EigenvalueMatrix& E);

/// h . B lies in the Z-span of B.
bool acts_integrally(const HopfStructure& H, const std::vector<BigRational>& h, const IntegralBasis& B);

/// {a_i . beta} is a Z-basis of the span of B.
bool is_free_generator(const HopfStructure& H, const AssocOrderBasis& order, const IntegralBasis& B,
                       const AlgElem& beta);

struct FreenessCertificate {
  std::string verdict;  // free_with_generator or undetermined
  std::optional<AlgElem> generator;
  std::string route;    // theorem2_eigen, tensor_product, tame_padic, max_ramified_padic
  std::string reason;   // why undetermined
};

FreenessCertificate freeness_certify(const HopfStructure& H, const IntegralBasis& B,
                                     const std::optional<EigenvalueMatrix>& E);

struct TensorReport {
  bool strongly_disjoint = false;
  BigRational disc1, disc2;
  bool coprime_discriminants = false;
  bool arithmetically_disjoint = false;
  bool checked = false;
  std::vector<std::size_t> row_permutation;  // row r of M1 (x) M2 is row perm[r] of M
  bool kronecker_ok = false;
  bool lattice_equal = false;
  bool reduced_tensor_ok = false;
};

/// H must come from product_structure(H1, H2) and B from
/// product_integral_basis(B1, B2). Throws NotProductStructure otherwise.
TensorReport arith_disjoint_tensor(const HopfStructure& H1, const IntegralBasis& B1, const HopfStructure& H2,
                                   const IntegralBasis& B2, const HopfStructure& H, const IntegralBasis& B);

/// Row permutation with perm applied to M giving K, matched by exact row
/// content; nullopt when none exists.
std::optional<std::vector<std::size_t>> match_rows(const QMatrix& M, const QMatrix& K);

/// Tensor route: both factors Gassert-monogenic with gcd(a1 n1, a2 n2) = 1.
/// The generator is the product of the factor generators, checked against the
/// product associated order.
FreenessCertificate freeness_certify_tensor(const HopfStructure& H1, const HopfStructure& H2, const HopfStructure& H);

}  // namespace radix
