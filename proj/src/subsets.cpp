#include "parfus/subsets.hpp"

#include <algorithm>
#include <stdexcept>

namespace parfus {

std::vector<ESubset> e_subsets(const FiniteGroup& g, int cap) {
  if (g.n > cap)
    throw std::invalid_argument("subset enumeration needs |G| <= " + std::to_string(cap) +
                                "; raise the cap to override");
  if (g.n > 24) throw std::invalid_argument("subset enumeration is infeasible past order 24");
  std::vector<ESubset> out;
  out.reserve(uint64_t(1) << (g.n - 1));
  uint64_t top = uint64_t(1) << g.n;  // g.n <= cap <= 63 in practice
  for (uint64_t m = 1; m < top; m += 2) out.push_back(m);
  return out;
}

ESubset translate(const FiniteGroup& g, int elem, ESubset x) {
  ESubset y = 0;
  for (int a = 0; a < g.n; ++a)
    if ((x >> a) & 1) y |= uint64_t(1) << g.mul(elem, a);
  return y;
}

Subgroup isotropy(const FiniteGroup& g, ESubset x) {
  uint64_t m = 0;
  for (int a = 0; a < g.n; ++a)
    if (translate(g, a, x) == x) m |= uint64_t(1) << a;
  return Subgroup{&g, m};
}

std::vector<int> block_transversal(const FiniteGroup& g, ESubset x) {
  if (!(x & 1)) throw std::invalid_argument("subset must contain the identity");
  uint64_t iso = isotropy(g, x).mask;
  // cosets G_X * c for c in X partition X; from each take the smallest g
  // with g^{-1} in the coset
  std::vector<int> reps;
  uint64_t covered = 0;
  for (int c = 0; c < g.n; ++c) {
    if (!((x >> c) & 1) || ((covered >> c) & 1)) continue;
    uint64_t coset = 0;
    for (int s = 0; s < g.n; ++s)
      if ((iso >> s) & 1) coset |= uint64_t(1) << g.mul(s, c);
    covered |= coset;
    int best = -1;
    for (int cand = 0; cand < g.n; ++cand)
      if ((coset >> g.inverse(cand)) & 1) {
        best = cand;
        break;
      }
    reps.push_back(best);
  }
  std::sort(reps.begin(), reps.end());  // identity's coset yields 0, so e leads
  if (covered != x) throw std::logic_error("internal: cosets failed to tile the subset");
  return reps;
}

OrbitTable fundamental_domain(const FiniteGroup& g, int cap) {
  OrbitTable t;
  t.grp = &g;
  for (ESubset x : e_subsets(g, cap)) {
    if (t.index.count(x)) continue;
    // ascending scan means the first unseen subset is its orbit's minimum
    OrbitInfo info;
    info.rep = x;
    for (int a = 0; a < g.n; ++a) {
      ESubset y = translate(g, a, x);
      if (!(y & 1)) continue;  // left the identity-containing world
      if (!t.index.count(y)) {
        t.index[y] = {static_cast<int>(t.orbits.size()), a};
        info.members.push_back(y);
      }
    }
    std::sort(info.members.begin(), info.members.end());
    info.isotropy_mask = isotropy(g, x).mask;
    info.transversal = block_transversal(g, x);
    t.orbits.push_back(std::move(info));
  }
  return t;
}

}  // namespace parfus
