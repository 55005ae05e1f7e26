#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "parfus/group.hpp"

namespace parfus {

// Identity-containing subsets of G, encoded as bitmasks with bit 0 set.
using ESubset = uint64_t;

// All of them, ascending as integers. Needs |G| <= cap.
std::vector<ESubset> e_subsets(const FiniteGroup& g, int cap = kDefaultCap);

inline bool subset_contains(ESubset x, int g) { return (x >> g) & 1u; }

// g * X = { g*x : x in X }.
ESubset translate(const FiniteGroup& g, int elem, ESubset x);

// { g : g*X = X } — always a subgroup when e ∈ X.
Subgroup isotropy(const FiniteGroup& g, ESubset x);

// Pairwise-distinct coset representatives: X as a disjoint union of the
// right cosets G_X * g_i^{-1}, g_1 = e, the rest ascending; size |X|/|G_X|.
std::vector<int> block_transversal(const FiniteGroup& g, ESubset x);

struct OrbitInfo {
  ESubset rep = 0;               // smallest member, as an integer
  std::vector<ESubset> members;  // ascending
  uint64_t isotropy_mask = 0;
  std::vector<int> transversal;  // of the rep
};

// Orbits of the translation action restricted to identity-containing subsets
// (X ~ Y iff X = gY with both containing e).
struct OrbitTable {
  const FiniteGroup* grp = nullptr;
  std::vector<OrbitInfo> orbits;  // rep ascending
  // mask -> (orbit position, translator t with mask = t * rep);
  // the translator is the smallest such t.
  std::unordered_map<ESubset, std::pair<int, int>> index;

  const OrbitInfo& orbit_of(ESubset x) const { return orbits[index.at(x).first]; }
  int translator(ESubset x) const { return index.at(x).second; }
};

OrbitTable fundamental_domain(const FiniteGroup& g, int cap = kDefaultCap);

}  // namespace parfus
