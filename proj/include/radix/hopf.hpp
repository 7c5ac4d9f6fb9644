#pragma once

// Hopf-Galois structures on a field-certified splitting algebra: the Galois
// group with its coset space, descent of the group algebra L~[N] to
// H = L~[N]^G, the action of H on L, and product structures on compositums.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "radix/perm_group.hpp"
#include "radix/splitting_algebra.hpp"

namespace radix {

/// G = Gal(L~/Q) as the automorphisms of the algebra, with X = G/G' where
/// G' = {j = 0} fixes L. Cosets are indexed by slot, coset k having the
/// representative (j(k), t = 1).
class GaloisData {
 public:
  GaloisData(SplittingAlgebra algebra, std::vector<Automorphism> autos, FiniteGroup group, CosetSpace cosets);

  const SplittingAlgebra& algebra() const { return algebra_; }
  const std::vector<Automorphism>& autos() const { return autos_; }
  const FiniteGroup& group() const { return cosets_.group(); }
  const CosetSpace& cosets() const { return cosets_; }
  int index_of(const Automorphism& g) const;
  /// Indices of J = {t = 1} = Gal(L~/M).
  std::vector<int> cyclotomic_kernel() const;

 private:
  SplittingAlgebra algebra_;
  std::vector<Automorphism> autos_;
  CosetSpace cosets_;
};

/// Throws NotAField unless the algebra carries a Field certificate.
std::shared_ptr<const GaloisData> radical_galois_group(const SplittingAlgebra& A);

/// Element of L~[N]: one coefficient per element of N (in N's sorted order).
using GroupRingElem = std::vector<AlgElem>;

struct ComultTerm {
  AlgElem coefficient;
  std::size_t eta;  // contributes coefficient * eta (x) eta
};

class HopfStructure {
 public:
  const GaloisData& galois() const { return *galois_; }
  std::shared_ptr<const GaloisData> galois_ptr() const { return galois_; }
  const SplittingAlgebra& algebra() const { return galois_->algebra(); }
  const RegularSubgroup& subgroup() const { return N_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<GroupRingElem>& basis() const { return basis_; }

  /// Same H with the basis W (elements of H); throws NotInH or RankDeficient.
  HopfStructure rebased(const std::vector<GroupRingElem>& W) const;

  GroupRingElem zero() const;
  GroupRingElem one() const;
  /// eta as an element of L~[N].
  GroupRingElem group_element(std::size_t eta) const;
  /// Index in N of lambda(g)^{-1}, the element of N acting on L as g does
  /// when lambda(g) lies in N.
  std::optional<std::size_t> galois_element(int g) const;
  /// The automorphism through which eta acts on L: a representative of the
  /// coset eta^{-1}(1 G').
  const Automorphism& evaluation(std::size_t eta) const;

  GroupRingElem element(const std::vector<BigRational>& coords) const;
  /// Coordinates in the current basis; throws NotInH.
  std::vector<BigRational> coords(const GroupRingElem& h) const;
  bool contains(const GroupRingElem& h) const;
  /// Fixed by the semilinear G-action.
  bool is_fixed(const GroupRingElem& h) const;
  GroupRingElem act_group(int g, const GroupRingElem& h) const;

  GroupRingElem mul(const GroupRingElem& a, const GroupRingElem& b) const;
  std::vector<BigRational> mul_coords(const std::vector<BigRational>& a, const std::vector<BigRational>& b) const;
  /// c[i][j] = coordinates of w_i * w_j.
  std::vector<std::vector<std::vector<BigRational>>> structure_constants() const;
  /// epsilon(w_i) per basis element.
  const std::vector<BigRational>& counit() const { return counit_; }

  /// h . x for x in L; throws NotInL.
  AlgElem act(const GroupRingElem& h, const AlgElem& x) const;
  AlgElem act_coords(const std::vector<BigRational>& h, const AlgElem& x) const;
  std::vector<ComultTerm> comult(const GroupRingElem& h) const;

  /// Orbit-method descent of L~[N]; basis in reduced echelon form over the
  /// flattened coordinates. Throws DimensionMismatch when dim H != |X|.
  static HopfStructure descend(std::shared_ptr<const GaloisData> gd, const RegularSubgroup& N);

 private:
  HopfStructure(std::shared_ptr<const GaloisData> gd, RegularSubgroup N);
  void install_basis(std::vector<GroupRingElem> basis, std::vector<std::size_t> pivots, QMatrix reader);
  std::vector<BigRational> pivot_values(const GroupRingElem& h) const;

  std::shared_ptr<const GaloisData> galois_;
  RegularSubgroup N_;
  std::vector<std::vector<std::size_t>> conj_;  // conj_[g][eta]
  std::vector<std::size_t> evaluation_;         // eta -> index into autos
  std::vector<GroupRingElem> basis_;
  std::vector<std::size_t> pivots_;  // flattened positions (eta * dim + k)
  QMatrix reader_;                   // coords = reader * pivot values
  std::vector<BigRational> counit_;
};

HopfStructure descend(std::shared_ptr<const GaloisData> gd, const RegularSubgroup& N);
AlgElem hopf_act(const HopfStructure& H, const std::vector<BigRational>& h, const AlgElem& x);
std::vector<ComultTerm> hopf_comult(const HopfStructure& H, const std::vector<BigRational>& h);

/// The almost classical structure lambda(J)^opp for J = Gal(L~/M), built
/// without enumeration, so it is available beyond the enumeration cap.
HopfStructure cyclotomic_complement_structure(std::shared_ptr<const GaloisData> gd);

/// "Q(zeta_m)" when J = {t = 1} is the complement witness, "almost classical,
/// no complement witness", "not almost classical", or a description of J.
std::string complement_label(const GaloisData& gd, const AlmostClassicalVerdict& v);

/// The compositum data of two structures: X = X1 x X2 via psi and
/// N = iota(N1 x N2).
struct ProductSubgroup {
  std::shared_ptr<const GaloisData> galois;
  RegularSubgroup N;
  std::vector<std::size_t> psi1, psi2;         // coset of X -> coset of X_i
  std::vector<std::vector<std::size_t>> iota;  // iota[eta1][eta2] -> index in N
};

/// Throws NotDisjoint when the compositum is not a field of full degree and
/// NotProductStructure when iota(N1 x N2) fails to be regular and normalized.
ProductSubgroup product_subgroup(const HopfStructure& H1, const HopfStructure& H2);

/// H1 (x) H2 on the compositum, with basis w1_i * w2_k ordered i * n2 + k.
HopfStructure product_structure(const HopfStructure& H1, const HopfStructure& H2);

}  // namespace radix
