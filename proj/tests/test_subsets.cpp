#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <set>

#include "doctest.h"
#include "parfus/subsets.hpp"

using namespace parfus;

// test-local orbit builder: plain BFS over translations, ignoring the
// library's bookkeeping entirely
static std::set<ESubset> oracle_orbit(const FiniteGroup& g, ESubset x) {
  std::set<ESubset> orb;
  std::vector<ESubset> todo{x};
  while (!todo.empty()) {
    ESubset cur = todo.back();
    todo.pop_back();
    if (!(cur & 1) || orb.count(cur)) continue;
    orb.insert(cur);
    for (int a = 0; a < g.n; ++a) todo.push_back(translate(g, a, cur));
  }
  return orb;
}

TEST_CASE("e_subsets: ascending, identity always present") {
  FiniteGroup g = make_cyclic(3);
  auto subs = e_subsets(g);
  CHECK(subs == std::vector<ESubset>{1, 3, 5, 7});
  FiniteGroup z1 = make_cyclic(1);
  CHECK(e_subsets(z1) == std::vector<ESubset>{1});
  FiniteGroup big = make_direct_product(make_cyclic(4), make_cyclic(5));
  CHECK_THROWS(e_subsets(big, 16));  // order 20 over the cap
  CHECK(e_subsets(big, 20).size() == (uint64_t(1) << 19));
}

TEST_CASE("translate and isotropy behave like the definitions") {
  FiniteGroup g = make_cyclic(4);
  // X = {e, a} = 0b0011; a*X = {a, a^2} = 0b0110
  CHECK(translate(g, 1, 0b0011) == 0b0110);
  CHECK(translate(g, 0, 0b0011) == 0b0011);
  CHECK(isotropy(g, 0b0101).mask == 0b0101);  // {e,a^2} is a subgroup: self-stabilizing
  CHECK(isotropy(g, 0b0011).mask == 0b0001);
  CHECK(isotropy(g, 0b1111).mask == 0b1111);

  // isotropy of an identity-containing subset is always a subgroup
  for (ESubset x : e_subsets(g))
    CHECK(is_subgroup_mask(g, isotropy(g, x).mask));
}

TEST_CASE("Z4 orbit structure: sizes {1,2,1,3,1} covering all 8 subsets") {
  FiniteGroup g = make_cyclic(4);
  OrbitTable t = fundamental_domain(g);
  REQUIRE(t.orbits.size() == 5);
  std::vector<int> sizes;
  int covered = 0;
  for (auto& o : t.orbits) {
    sizes.push_back((int)o.members.size());
    covered += (int)o.members.size();
  }
  CHECK(sizes == std::vector<int>{1, 2, 1, 3, 1});
  CHECK(covered == 8);
  // reps are the orbit minima and ascend
  for (size_t i = 0; i + 1 < t.orbits.size(); ++i) CHECK(t.orbits[i].rep < t.orbits[i + 1].rep);
  for (auto& o : t.orbits)
    for (ESubset m : o.members) CHECK(o.rep <= m);
}

TEST_CASE("orbit table agrees with a BFS oracle on several groups") {
  for (auto g : {make_cyclic(4), make_cyclic(6), make_symmetric(3),
                 make_direct_product(make_cyclic(2), make_cyclic(2))}) {
    OrbitTable t = fundamental_domain(g);
    std::set<ESubset> all;
    for (auto& o : t.orbits) {
      std::set<ESubset> got(o.members.begin(), o.members.end());
      CHECK(got == oracle_orbit(g, o.rep));
      for (ESubset m : o.members) {
        CHECK_FALSE(all.count(m));
        all.insert(m);
        // stored translator actually maps rep to member
        auto [oi, tr] = t.index.at(m);
        CHECK(&t.orbits[oi] == &o);
        CHECK(translate(g, tr, o.rep) == m);
        // and it is the smallest such translator
        for (int s = 0; s < tr; ++s) CHECK(translate(g, s, o.rep) != m);
      }
    }
    CHECK(all.size() == e_subsets(g).size());
  }
}

TEST_CASE("block transversal: disjoint coset tiling, identity first") {
  for (auto g : {make_cyclic(4), make_cyclic(6), make_symmetric(3),
                 make_direct_product(make_cyclic(2), make_cyclic(4))}) {
    for (ESubset x : e_subsets(g)) {
      uint64_t iso = isotropy(g, x).mask;
      auto tv = block_transversal(g, x);
      CHECK(tv.size() == (size_t)(__builtin_popcountll(x) / __builtin_popcountll(iso)));
      CHECK(tv[0] == 0);
      for (size_t i = 0; i + 1 < tv.size(); ++i) CHECK(tv[i] < tv[i + 1]);
      // X = disjoint union of G_X * g_i^{-1}
      uint64_t seen = 0;
      for (int gi : tv) {
        CHECK(subset_contains(x, g.inverse(gi)));
        for (int s = 0; s < g.n; ++s)
          if ((iso >> s) & 1) {
            int y = g.mul(s, g.inverse(gi));
            CHECK_FALSE(((seen >> y) & 1) != 0);
            seen |= uint64_t(1) << y;
          }
      }
      CHECK(seen == x);
      // independence: g_i^{-1} g_j in G_X forces i == j
      for (size_t i = 0; i < tv.size(); ++i)
        for (size_t j = 0; j < tv.size(); ++j)
          if (i != j) CHECK_FALSE(((iso >> g.mul(g.inverse(tv[i]), tv[j])) & 1) != 0);
    }
  }
}

TEST_CASE("subgroup-as-subset has itself as isotropy and transversal {e}") {
  FiniteGroup g = make_symmetric(3);
  for (const Subgroup& h : subgroups(g)) {
    CHECK(isotropy(g, h.mask).mask == h.mask);
    CHECK(block_transversal(g, h.mask) == std::vector<int>{0});
  }
}
