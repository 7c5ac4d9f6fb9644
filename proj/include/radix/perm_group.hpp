#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace radix {

/// Permutation of {0, ..., d-1} by its image array.
using Perm = std::vector<int>;

Perm perm_identity(std::size_t d);
Perm perm_compose(const Perm& a, const Perm& b);  // a after b
Perm perm_inverse(const Perm& a);
bool perm_is_bijection(const Perm& a);
std::string perm_label(const Perm& a);

/// Finite group given by its multiplication table over element indices.
class FiniteGroup {
 public:
  /// Validates associativity, identity and inverses.
  FiniteGroup(std::size_t order, std::vector<int> table);
  /// The group formed by a set of permutations (must be closed).
  static FiniteGroup from_perms(const std::vector<Perm>& elements);

  std::size_t order() const { return order_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + static_cast<std::size_t>(b)]; }
  int identity() const { return identity_; }
  int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  const std::vector<int>& table() const { return table_; }
  /// Closure of a generating set, sorted.
  std::vector<int> generated(const std::vector<int>& gens) const;
  /// Small generating set of a subgroup, chosen greedily in index order.
  std::vector<int> generators_of(const std::vector<int>& subgroup) const;
  bool is_subgroup(const std::vector<int>& s) const;
  bool is_normal(const std::vector<int>& s) const;
  unsigned long element_order(int a) const;

 private:
  std::size_t order_;
  std::vector<int> table_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

/// The left coset space X = G / G' with the translation action lambda.
class CosetSpace {
 public:
  CosetSpace(FiniteGroup group, std::vector<int> subgroup);

  const FiniteGroup& group() const { return group_; }
  const std::vector<int>& subgroup() const { return subgroup_; }
  std::size_t size() const { return reps_.size(); }
  const std::vector<int>& reps() const { return reps_; }  // minimal index per coset
  int coset_of(int g) const { return coset_of_[static_cast<std::size_t>(g)]; }
  int identity_coset() const { return coset_of(group_.identity()); }
  /// lambda(g)(hG') = ghG'.
  const Perm& lambda(int g) const { return lambda_[static_cast<std::size_t>(g)]; }

 private:
  FiniteGroup group_;
  std::vector<int> subgroup_, reps_, coset_of_;
  std::vector<Perm> lambda_;
};

/// A regular permutation group, elements sorted by image arrays.
class RegularSubgroup {
 public:
  /// Validates closure and regularity; throws DimensionMismatch otherwise.
  explicit RegularSubgroup(std::vector<Perm> elements);

  const std::vector<Perm>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t degree() const { return elements_.empty() ? 0 : elements_[0].size(); }
  std::string label() const;
  /// Index of an element, or -1.
  int index_of(const Perm& p) const;
  int mul(std::size_t a, std::size_t b) const { return table_[a * elements_.size() + b]; }
  /// The unique element mapping point `from` to point `to`.
  int element_mapping(int from, int to) const;
  bool is_abelian() const;
  friend bool operator==(const RegularSubgroup& a, const RegularSubgroup& b) { return a.elements_ == b.elements_; }

 private:
  std::vector<Perm> elements_;
  std::vector<int> table_;
};

/// Default enumeration cap, honouring RADIX_HOPF_CAP (clamped to 8).
std::size_t enumeration_cap();
constexpr std::size_t kHardEnumerationCap = 8;

/// All regular subgroups of Perm(X) normalized by lambda(G), sorted by label.
/// Throws DegreeTooLarge when |X| exceeds the cap.
std::vector<RegularSubgroup> enumerate_structures(const CosetSpace& X, std::size_t cap = enumeration_cap());

bool normalized_by_lambda(const CosetSpace& X, const RegularSubgroup& N);

/// Centralizer of N in Perm(X).
RegularSubgroup opposite(const RegularSubgroup& N);

struct AlmostClassicalVerdict {
  bool almost_classical = false;
  /// Set when opposite(N) = lambda(J) for a normal complement J of G'.
  std::optional<std::vector<int>> complement;
};

AlmostClassicalVerdict almost_classical_test(const CosetSpace& X, const RegularSubgroup& N);

/// The structure lambda(J)^opp attached to a normal complement J of G'.
RegularSubgroup structure_of_complement(const CosetSpace& X, const std::vector<int>& J);

}  // namespace radix
