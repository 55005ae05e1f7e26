#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace parfus {

// Hard ceiling on group order: subsets of G live in one 64-bit mask.
inline constexpr int kMaxGroupOrder = 64;
// Default ceiling for exhaustive enumerations (subsets, subgroups, ...).
inline constexpr int kDefaultCap = 16;

// Finite group on elements {0, ..., n-1}, identity fixed at index 0.
// The Cayley table is validated once at construction; everything downstream
// trusts it blindly.
struct FiniteGroup {
  std::string label;
  int n = 0;
  std::vector<std::vector<int>> table;  // table[g][h] = g*h
  std::vector<int> inv;                 // inv[g]*g = e

  int order() const { return n; }
  int mul(int g, int h) const { return table[g][h]; }
  int inverse(int g) const { return inv[g]; }
  int power(int g, long k) const;  // k may be negative
  int elem_order(int g) const;
  bool is_abelian() const;

  // Validates: shape, Latin square, identity at 0, associativity (n <= 64
  // keeps the cubic check cheap). Throws std::invalid_argument.
  static FiniteGroup from_cayley(std::vector<std::vector<int>> t, std::string label);
};

FiniteGroup make_cyclic(int n);
FiniteGroup make_direct_product(const FiniteGroup& a, const FiniteGroup& b);
// Symmetric group on m letters; permutations indexed lexicographically so the
// identity lands at 0. m <= 4 (S_5 would blow the order ceiling).
FiniteGroup make_symmetric(int m);

// --- subgroups ----------------------------------------------------------

struct Subgroup {
  const FiniteGroup* parent = nullptr;
  uint64_t mask = 0;

  int order() const { return __builtin_popcountll(mask); }
  bool contains(int g) const { return (mask >> g) & 1u; }
  std::vector<int> elements() const;  // ascending
};

// Closure of a generating set.
Subgroup subgroup_from_generators(const FiniteGroup& g, const std::vector<int>& gens);

// All subgroups by scanning identity-containing subsets for closure,
// sorted by (order, mask). Needs |G| <= cap.
std::vector<Subgroup> subgroups(const FiniteGroup& g, int cap = kDefaultCap);

bool is_subgroup_mask(const FiniteGroup& g, uint64_t mask);

// A subgroup reindexed as a standalone FiniteGroup (identity first, then
// ascending parent index).
struct SubgroupAsGroup {
  FiniteGroup group;
  std::vector<int> to_parent;    // local index -> parent index
  std::vector<int> from_parent;  // parent index -> local index, -1 outside
};
SubgroupAsGroup subgroup_as_group(const Subgroup& h);

// --- abelian structure ----------------------------------------------------

struct CyclicFactor {
  long p = 0;   // prime
  int exp = 0;  // factor is cyclic of order p^exp
  int gen = 0;  // generator, as a parent-group element index
  long order() const;
};

// G = <a_1> x ... x <a_k> with |a_i| = p_i^{n_i}; factors sorted by
// (p ascending, exponent descending). coords[g] is the unique exponent
// tuple of g.
struct AbelianDecomposition {
  std::vector<CyclicFactor> factors;
  std::vector<std::vector<int>> coords;
};

// Throws std::invalid_argument on non-abelian input.
AbelianDecomposition elementary_decomposition(const FiniteGroup& g);

// Generators of G adapted to a subgroup H: H = <a_1^{d_1}, ..., a_k^{d_k}>
// with d_i = p_i^{n_i - m_i}. Not every subgroup of every abelian group
// admits one — the smallest failure is <(1,2)> inside Z_2 x Z_8, which is
// cyclic of order 4 yet not contained in 2G — so the result is optional.
// Strategy: per-prime Smith normal form of the relation matrix of H's
// generators, reduced mod the factor orders; a complete backtracking search
// over maximal-order generators and complements finishes the mixed-exponent
// cases and certifies non-existence.
struct AdaptedBasis {
  AbelianDecomposition basis;   // fresh generators of G
  std::vector<long> divisors;   // d_i, aligned with basis.factors
};
std::optional<AdaptedBasis> adapted_basis(const FiniteGroup& g, const Subgroup& h);

// --- morphisms ------------------------------------------------------------

struct GroupMorphism {
  const FiniteGroup* source = nullptr;
  const FiniteGroup* target = nullptr;
  std::vector<int> map;  // map[g] = image index in target

  bool is_morphism() const;
  bool is_surjective() const;
  int operator()(int g) const { return map[g]; }
};

// --- integer Smith normal form ---------------------------------------------

// U*A*V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
// u_inv is U^{-1}, tracked exactly by mirroring each row operation.
// Desk-scale (dimensions <= ~16); int64 entries.
struct SmithForm {
  std::vector<std::vector<long>> d, u, v, u_inv;
};
SmithForm smith_normal_form(std::vector<std::vector<long>> a);

}  // namespace parfus
