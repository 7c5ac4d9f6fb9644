#include "radix/perm_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "radix/errors.hpp"

namespace radix {

Perm perm_identity(std::size_t d) {
  Perm p(d);
  for (std::size_t i = 0; i < d; ++i) p[i] = static_cast<int>(i);
  return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[static_cast<std::size_t>(b[i])];
  return r;
}

Perm perm_inverse(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
  return r;
}

bool perm_is_bijection(const Perm& a) {
  std::vector<bool> seen(a.size(), false);
  for (int x : a) {
    if (x < 0 || static_cast<std::size_t>(x) >= a.size() || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = true;
  }
  return true;
}

std::string perm_label(const Perm& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + "]";
}

// ---------------------------------------------------------------------------

FiniteGroup::FiniteGroup(std::size_t order, std::vector<int> table) : order_(order), table_(std::move(table)) {
  if (order_ == 0 || table_.size() != order_ * order_) throw Error(Errc::DimensionMismatch, "group table shape");
  for (int x : table_)
    if (x < 0 || static_cast<std::size_t>(x) >= order_) throw Error(Errc::DimensionMismatch, "group table entry");
  int n = static_cast<int>(order_);
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw Error(Errc::DimensionMismatch, "group table has no identity");
  inverse_.assign(order_, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == identity_) inverse_[static_cast<std::size_t>(a)] = b;
  for (int a = 0; a < n; ++a)
    if (inverse_[static_cast<std::size_t>(a)] < 0 || mul(inverse_[static_cast<std::size_t>(a)], a) != identity_)
      throw Error(Errc::DimensionMismatch, "group table lacks inverses");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw Error(Errc::DimensionMismatch, "group table not associative");
}

FiniteGroup FiniteGroup::from_perms(const std::vector<Perm>& elements) {
  std::map<Perm, int> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i]] = static_cast<int>(i);
  std::size_t n = elements.size();
  std::vector<int> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto it = index.find(perm_compose(elements[a], elements[b]));
      if (it == index.end()) throw Error(Errc::DimensionMismatch, "permutation set not closed");
      table[a * n + b] = it->second;
    }
  return FiniteGroup(n, std::move(table));
}

std::vector<int> FiniteGroup::generated(const std::vector<int>& gens) const {
  std::vector<bool> in(order_, false);
  std::vector<int> elems{identity_};
  in[static_cast<std::size_t>(identity_)] = true;
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (int g : gens) {
      int x = mul(elems[k], g);
      if (!in[static_cast<std::size_t>(x)]) {
        in[static_cast<std::size_t>(x)] = true;
        elems.push_back(x);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<int> FiniteGroup::generators_of(const std::vector<int>& subgroup) const {
  std::vector<int> gens, span{identity_};
  for (int g : subgroup) {
    if (std::binary_search(span.begin(), span.end(), g)) continue;
    gens.push_back(g);
    span = generated(gens);
  }
  return gens;
}

bool FiniteGroup::is_subgroup(const std::vector<int>& s) const {
  if (s.empty()) return false;
  std::set<int> set(s.begin(), s.end());
  for (int a : s)
    for (int b : s)
      if (!set.count(mul(a, inverse(b)))) return false;
  return true;
}

bool FiniteGroup::is_normal(const std::vector<int>& s) const {
  std::set<int> set(s.begin(), s.end());
  for (std::size_t g = 0; g < order_; ++g)
    for (int a : s)
      if (!set.count(mul(mul(static_cast<int>(g), a), inverse(static_cast<int>(g))))) return false;
  return true;
}

unsigned long FiniteGroup::element_order(int a) const {
  unsigned long k = 1;
  for (int x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

// ---------------------------------------------------------------------------

CosetSpace::CosetSpace(FiniteGroup group, std::vector<int> subgroup)
    : group_(std::move(group)), subgroup_(std::move(subgroup)) {
  std::sort(subgroup_.begin(), subgroup_.end());
  subgroup_.erase(std::unique(subgroup_.begin(), subgroup_.end()), subgroup_.end());
  if (!group_.is_subgroup(subgroup_)) throw Error(Errc::DimensionMismatch, "G' is not a subgroup");
  std::size_t n = group_.order();
  coset_of_.assign(n, -1);
  for (std::size_t g = 0; g < n; ++g) {
    if (coset_of_[g] >= 0) continue;
    int c = static_cast<int>(reps_.size());
    reps_.push_back(static_cast<int>(g));
    for (int h : subgroup_) coset_of_[static_cast<std::size_t>(group_.mul(static_cast<int>(g), h))] = c;
  }
  lambda_.resize(n);
  for (std::size_t g = 0; g < n; ++g) {
    Perm p(reps_.size());
    for (std::size_t c = 0; c < reps_.size(); ++c) p[c] = coset_of(group_.mul(static_cast<int>(g), reps_[c]));
    lambda_[g] = std::move(p);
  }
}

// ---------------------------------------------------------------------------

RegularSubgroup::RegularSubgroup(std::vector<Perm> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  std::size_t n = elements_.size();
  if (n == 0) throw Error(Errc::DimensionMismatch, "empty permutation group");
  std::size_t d = elements_[0].size();
  if (n != d) throw Error(Errc::DimensionMismatch, "regular subgroup order must equal the degree");
  std::vector<bool> hit(d, false);
  for (auto& p : elements_) {
    if (p.size() != d || !perm_is_bijection(p)) throw Error(Errc::DimensionMismatch, "not a permutation");
    if (hit[static_cast<std::size_t>(p[0])]) throw Error(Errc::DimensionMismatch, "subgroup is not regular");
    hit[static_cast<std::size_t>(p[0])] = true;
  }
  table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      int k = index_of(perm_compose(elements_[a], elements_[b]));
      if (k < 0) throw Error(Errc::DimensionMismatch, "permutation set not closed");
      table_[a * n + b] = k;
    }
}

std::string RegularSubgroup::label() const {
  std::string s;
  for (auto& p : elements_) s += perm_label(p);
  return s;
}

int RegularSubgroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return -1;
  return static_cast<int>(it - elements_.begin());
}

int RegularSubgroup::element_mapping(int from, int to) const {
  for (std::size_t k = 0; k < elements_.size(); ++k)
    if (elements_[k][static_cast<std::size_t>(from)] == to) return static_cast<int>(k);
  return -1;
}

bool RegularSubgroup::is_abelian() const {
  std::size_t n = elements_.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

// ---------------------------------------------------------------------------

std::size_t enumeration_cap() {
  const char* env = std::getenv("RADIX_HOPF_CAP");
  if (!env) return kHardEnumerationCap;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1) return kHardEnumerationCap;
  return std::min<std::size_t>(static_cast<std::size_t>(v), kHardEnumerationCap);
}

namespace {

struct Enumerator {
  std::size_t d;
  std::vector<Perm> lambda_gens;
  std::vector<std::vector<Perm>> candidates;  // derangements by image of 0
  std::set<std::vector<Perm>> visited;
  std::set<std::vector<Perm>> found;

  // Closure of `start` under composition and conjugation by lambda_gens.
  // Returns false as soon as the group outgrows d or loses semiregularity.
  bool close(std::vector<Perm>& elems) const {
    std::set<Perm> set(elems.begin(), elems.end());
    std::vector<Perm> list(set.begin(), set.end());
    for (std::size_t k = 0; k < list.size(); ++k) {
      std::vector<Perm> fresh;
      for (std::size_t j = 0; j <= k; ++j) {
        fresh.push_back(perm_compose(list[k], list[j]));
        fresh.push_back(perm_compose(list[j], list[k]));
      }
      for (auto& l : lambda_gens) fresh.push_back(perm_compose(perm_compose(l, list[k]), perm_inverse(l)));
      for (auto& p : fresh) {
        if (set.insert(p).second) {
          if (set.size() > d) return false;
          for (std::size_t x = 0; x < d; ++x)
            if (p[x] == static_cast<int>(x) && p != perm_identity(d)) return false;
          list.push_back(p);
        }
      }
    }
    if (d % set.size() != 0) return false;
    elems.assign(set.begin(), set.end());
    return true;
  }

  void search(const std::vector<Perm>& S) {
    if (!visited.insert(S).second) return;
    if (S.size() == d) {
      found.insert(S);
      return;
    }
    std::vector<bool> orbit(d, false);
    for (auto& s : S) orbit[static_cast<std::size_t>(s[0])] = true;
    std::size_t x = 0;
    while (orbit[x]) ++x;
    for (auto& pi : candidates[x]) {
      std::vector<Perm> T = S;
      T.push_back(pi);
      if (close(T)) search(T);
    }
  }
};

}  // namespace

bool normalized_by_lambda(const CosetSpace& X, const RegularSubgroup& N) {
  for (std::size_t g = 0; g < X.group().order(); ++g) {
    const Perm& l = X.lambda(static_cast<int>(g));
    Perm li = perm_inverse(l);
    for (auto& eta : N.elements())
      if (N.index_of(perm_compose(perm_compose(l, eta), li)) < 0) return false;
  }
  return true;
}

std::vector<RegularSubgroup> enumerate_structures(const CosetSpace& X, std::size_t cap) {
  std::size_t d = X.size();
  cap = std::min(cap, kHardEnumerationCap);
  if (d > cap)
    throw Error(Errc::DegreeTooLarge, "coset space of size " + std::to_string(d) + " exceeds enumeration cap " +
                                          std::to_string(cap));
  Enumerator en;
  en.d = d;
  const FiniteGroup& G = X.group();
  std::vector<int> all(G.order());
  for (std::size_t g = 0; g < G.order(); ++g) all[g] = static_cast<int>(g);
  for (int g : G.generators_of(all)) en.lambda_gens.push_back(X.lambda(g));
  en.candidates.resize(d);
  Perm p = perm_identity(d);
  do {
    bool derangement = true;
    for (std::size_t i = 0; i < d && derangement; ++i) derangement = p[i] != static_cast<int>(i);
    if (derangement) en.candidates[static_cast<std::size_t>(p[0])].push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<Perm> start{perm_identity(d)};
  if (en.close(start)) en.search(start);

  std::vector<RegularSubgroup> out;
  for (auto& elems : en.found) out.emplace_back(elems);
  std::sort(out.begin(), out.end(), [](const RegularSubgroup& a, const RegularSubgroup& b) { return a.label() < b.label(); });
  return out;
}

RegularSubgroup opposite(const RegularSubgroup& N) {
  // A centralizing c is fixed by c(0): c(eta(0)) = eta(c(0)).
  std::size_t d = N.degree();
  std::vector<Perm> out;
  for (std::size_t x = 0; x < d; ++x) {
    Perm c(d);
    for (auto& eta : N.elements()) c[static_cast<std::size_t>(eta[0])] = eta[x];
    out.push_back(std::move(c));
  }
  RegularSubgroup C(std::move(out));
  for (auto& c : C.elements())
    for (auto& eta : N.elements())
      if (perm_compose(c, eta) != perm_compose(eta, c)) throw Error(Errc::Internal, "centralizer check failed");
  return C;
}

AlmostClassicalVerdict almost_classical_test(const CosetSpace& X, const RegularSubgroup& N) {
  AlmostClassicalVerdict v;
  RegularSubgroup opp = opposite(N);
  const FiniteGroup& G = X.group();
  std::set<Perm> image;
  for (std::size_t g = 0; g < G.order(); ++g) image.insert(X.lambda(static_cast<int>(g)));
  for (auto& c : opp.elements())
    if (!image.count(c)) return v;
  v.almost_classical = true;
  std::vector<int> J;
  for (std::size_t g = 0; g < G.order(); ++g)
    if (opp.index_of(X.lambda(static_cast<int>(g))) >= 0) J.push_back(static_cast<int>(g));
  std::set<int> Gp(X.subgroup().begin(), X.subgroup().end());
  bool complement = J.size() * X.subgroup().size() == G.order() && G.is_subgroup(J) && G.is_normal(J);
  for (int j : J)
    if (complement && j != G.identity() && Gp.count(j)) complement = false;
  if (complement) v.complement = J;
  return v;
}

RegularSubgroup structure_of_complement(const CosetSpace& X, const std::vector<int>& J) {
  std::vector<Perm> lj;
  for (int j : J) lj.push_back(X.lambda(j));
  return opposite(RegularSubgroup(std::move(lj)));
}

}  // namespace radix
