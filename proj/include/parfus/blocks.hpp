#pragma once

#include <unordered_map>

#include "parfus/algebra.hpp"

namespace parfus {

// One two-sided ideal (algebra) · Γ_X  ≅  M_n( k[G_X] ), described by the
// orbit representative X, the transversal size n = |X|/|G_X| and the isotropy.
struct BlockInfo {
  ESubset rep = 1;
  int n = 1;
  uint64_t isotropy_mask = 1;
  long dim = 1;                  // n^2 * |G_X|
  std::vector<int> transversal;  // g_1 = e, ascending
  std::unordered_map<ESubset, int> member_index;  // orbit member -> transversal slot

  int isotropy_order() const { return __builtin_popcountll(isotropy_mask); }
};

std::vector<BlockInfo> blocks(const FiniteGroup& grp, int cap = kDefaultCap);

// n x n matrix over the group algebra of the isotropy subgroup; entries keep
// parent-group element indices.
struct GroupAlgebraMatrix {
  const FiniteGroup* grp = nullptr;
  uint64_t isotropy_mask = 1;
  int n = 0;
  std::vector<std::vector<std::map<int, mpq_class>>> entry;  // [row][col][elem]

  GroupAlgebraMatrix() = default;
  GroupAlgebraMatrix(const FiniteGroup& g, uint64_t iso, int size);

  void add(int i, int j, int t, const mpq_class& c);
  bool operator==(const GroupAlgebraMatrix& o) const {
    return n == o.n && isotropy_mask == o.isotropy_mask && entry == o.entry;
  }
  friend GroupAlgebraMatrix operator*(const GroupAlgebraMatrix& a, const GroupAlgebraMatrix& b);
  static GroupAlgebraMatrix identity(const FiniteGroup& g, uint64_t iso, int size);
};

// Isomorphism onto the matrix picture: arrows (h, g_j X) of the block map to
// (g_i^{-1} h g_j) E_{ij} where h g_j X = g_i X. Throws if x has support
// outside the block.
GroupAlgebraMatrix phi_block(const FiniteGroup& grp, const BlockInfo& b, const AlgebraElement& x);

// Inverse: g E_{ij} comes back as the arrow [g_i g g_j^{-1}] P_{g_j X}.
AlgebraElement psi_block(const FiniteGroup& grp, const BlockInfo& b, const GroupAlgebraMatrix& m);

// Sorted full-matrix sizes of the algebra over an algebraically closed field
// of characteristic zero: every block M_n(k[G_X]) contributes one size n*d
// per irreducible degree d of G_X.
std::vector<int> wedderburn_summary(const FiniteGroup& grp, int cap = kDefaultCap);

// "7C ⊕ M_2(C) ⊕ M_3(C)" — size-1 summands aggregated in front.
std::string wedderburn_compact_string(const std::vector<int>& sizes);
// "7·M1 ⊕ M2 ⊕ M3 over C" — the table footer used by the command line.
std::string wedderburn_footer_string(const std::vector<int>& sizes);

// Checks, for every block: that the block arrows account for the whole
// groupoid, that phi and psi invert each other on full bases, that phi is
// multiplicative on all basis pairs and sends the block unit to the identity
// matrix.
CheckReport verify_blocks(const FiniteGroup& grp, int cap = kDefaultCap);

}  // namespace parfus
