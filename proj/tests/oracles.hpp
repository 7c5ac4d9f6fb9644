#pragma once

// Brute-force permutation oracles shared by the unit and acceptance suites.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "radix/perm_group.hpp"

namespace testing_support {

using radix::CosetSpace;
using radix::Perm;
using radix::perm_compose;
using radix::perm_identity;
using radix::perm_inverse;

inline std::vector<Perm> closure(std::vector<Perm> gens, std::size_t d) {
  std::set<Perm> s{perm_identity(d)};
  std::vector<Perm> list{perm_identity(d)};
  for (std::size_t k = 0; k < list.size(); ++k)
    for (auto& g : gens) {
      Perm p = perm_compose(g, list[k]);
      if (s.insert(p).second) list.push_back(p);
    }
  return {s.begin(), s.end()};
}

inline std::vector<Perm> all_perms(std::size_t d) {
  std::vector<Perm> out;
  Perm p = perm_identity(d);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Every regular subgroup of Perm(d), from subgroups generated by pairs. Groups
// of order at most 5 are 2-generated, so this is exhaustive for d <= 5.
inline std::vector<std::vector<Perm>> naive_regular_subgroups(std::size_t d) {
  static std::map<std::size_t, std::vector<std::vector<Perm>>> cache;
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  auto perms = all_perms(d);
  std::set<std::vector<Perm>> out;
  for (auto& a : perms)
    for (auto& b : perms) {
      auto H = closure({a, b}, d);
      if (H.size() != d) continue;
      std::set<int> images;
      for (auto& h : H) images.insert(h[0]);
      if (images.size() == d) out.insert(H);
    }
  return cache[d] = {out.begin(), out.end()};
}

inline std::set<std::vector<Perm>> naive_structures(const CosetSpace& X) {
  std::set<std::vector<Perm>> out;
  for (auto& N : naive_regular_subgroups(X.size())) {
    std::set<Perm> set(N.begin(), N.end());
    bool ok = true;
    for (std::size_t g = 0; g < X.group().order() && ok; ++g) {
      const Perm& l = X.lambda(static_cast<int>(g));
      for (auto& eta : N)
        if (!set.count(perm_compose(perm_compose(l, eta), perm_inverse(l)))) {
          ok = false;
          break;
        }
    }
    if (ok) out.insert(N);
  }
  return out;
}

}  // namespace testing_support
