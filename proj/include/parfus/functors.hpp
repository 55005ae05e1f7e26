#pragma once

#include "parfus/fusion.hpp"

namespace parfus {

// --- subgroup functor -------------------------------------------------------
// A subgroup H, read as an identity-containing subset, is a translation fixed
// point with isotropy H; every irreducible of H therefore lands as a simple
// label (H, beta), and the assignment preserves dimensions and tensor
// products on the nose.
struct ChristmasImage {
  uint64_t subgroup_mask = 1;
  std::vector<SimpleLabel> images;  // index = character-table row of H
};
ChristmasImage christmas_images(AlgebraContext& ctx, const Subgroup& h);

// Runs the checks above for every subgroup of grp.
CheckReport christmas_verify(const FiniteGroup& grp, int cap = kDefaultCap);

// --- projection functor (abelian) -------------------------------------------
// An adapted basis a_1..a_k with H = <a_i^{d_i}> defines the surjection
// phi(prod a_i^{t_i}) = prod a_i^{t_i d_i} of G onto H; pulling simples of
// the partial algebra of H back along phi embeds them into the partial
// algebra of G: X goes to phi^{-1}(X), the character comes along by
// composition. Undefined (nullopt) exactly when no adapted basis exists.
struct MatryoshkaData {
  SubgroupAsGroup sub;          // H, reindexed as a standalone group
  AdaptedBasis adapted;
  std::vector<int> projection;  // parent element -> phi(element), image = H
  std::vector<SimpleLabel> source_labels;  // of the partial algebra of H
  std::vector<SimpleLabel> images;         // canonical labels over G, aligned
};
std::optional<MatryoshkaData> matryoshka_functor(AlgebraContext& ctx, const Subgroup& h);

// Every subgroup of an abelian grp that admits an adapted basis: projection
// really is a surjective morphism onto H, preimage subsets carry the
// predicted isotropy, the label map is injective, dimension-preserving, and
// matches the fusion constants.
CheckReport matryoshka_verify(const FiniteGroup& grp, int cap = kDefaultCap);

// Nested functors on a chain K <= H <= G, compared against the direct one.
// Outcome is reported, not asserted: the three adapted bases are chosen
// independently and need not be compatible.
struct ChainReport {
  bool applicable = false;  // all three functors exist
  bool coherent = false;    // composite label map equals the direct one
  std::string detail;
};
ChainReport matryoshka_chain(const FiniteGroup& grp, uint64_t h_mask, uint64_t k_mask,
                             int cap = kDefaultCap);

}  // namespace parfus
