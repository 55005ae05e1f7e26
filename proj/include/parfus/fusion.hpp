#pragma once

#include "parfus/rep_theory.hpp"

namespace parfus {

// A simple given at an arbitrary identity-containing subset Y together with a
// character-table row of G_Y, rewritten at the orbit representative: the
// translator conjugates the isotropy, so the row is transported along it.
SimpleLabel canonicalize_label(AlgebraContext& ctx, ESubset y, int beta_row);

// Structure constants of [a] (x)_balanced [b] over the full label list:
// zero across different orbits, tensor multiplicities of the isotropy group
// on the shared one.
std::vector<int> fuse(AlgebraContext& ctx, const SimpleLabel& a, const SimpleLabel& b);

struct FusionTable {
  std::vector<SimpleLabel> labels;
  std::vector<std::vector<std::vector<int>>> coeff;  // [a][b][c]
};
FusionTable fusion_table(AlgebraContext& ctx);

// The monoidal unit: one copy of the trivial label of every block.
std::vector<SimpleLabel> unit_decomposition(AlgebraContext& ctx);

// dim of the fiber P_Y . M for every identity-containing subset Y, in
// e_subsets order: deg(alpha) on the orbit of the label, 0 elsewhere.
std::vector<long> fiber_dims(AlgebraContext& ctx, const SimpleLabel& l);

// The balanced tensor product keeps only matching fibers; its dimension is
// the sum of the componentwise products.
struct BalancedInfo {
  std::vector<long> fibers;
  long total = 0;
};
BalancedInfo balanced_components(AlgebraContext& ctx, const SimpleLabel& a, const SimpleLabel& b);

// "X7.a2" — subset mask plus character row, the stable label naming used by
// the command line and the table renderers.
std::string label_name(const SimpleLabel& l);
std::string fusion_table_markdown(AlgebraContext& ctx, const FusionTable& t);
std::string fusion_table_csv(AlgebraContext& ctx, const FusionTable& t);

// Ring axioms on the structure constants: the unit decomposition acts as a
// two-sided identity, products across different orbits vanish (in constants
// and in balanced dimension), fusion is associative, and the balanced
// dimension of a product equals the constant-weighted dimension sum.
CheckReport verify_fusion(const FiniteGroup& grp, int cap = kDefaultCap);

}  // namespace parfus
