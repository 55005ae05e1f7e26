#pragma once

#include <complex>

#include "parfus/blocks.hpp"
#include "parfus/report.hpp"

namespace parfus {

// Ordinary character table over C. Conjugacy classes are sorted by smallest
// member; rows by degree, then lexicographically (largest value vector first)
// on the per-class values rounded to 1e-6, so the trivial character is row 0
// and the order is reproducible across runs.
struct CharacterTable {
  const FiniteGroup* grp = nullptr;
  std::vector<std::vector<int>> classes;  // members ascending
  std::vector<int> class_of;              // element -> class index
  std::vector<int> degrees;               // one per row
  std::vector<std::vector<std::complex<double>>> values;  // [row][class]

  int rows() const { return static_cast<int>(values.size()); }
  std::complex<double> value_at(int row, int elem) const {
    return values[row][class_of[elem]];
  }
};

// Abelian groups get exact root-of-unity values via the elementary divisor
// decomposition; the rest go through the class-sum common-eigenvector method
// (validated against the orthogonality relations at 1e-9).
CharacterTable character_table(const FiniteGroup& grp);

std::vector<int> character_degrees(const FiniteGroup& grp);

// Multiplicity of each row in the product character row_a * row_b.
std::vector<int> tensor_multiplicities(const CharacterTable& t, int row_a, int row_b);

// Shared per-group state: orbits, blocks, and one abstract-group copy plus
// character table per isotropy subgroup that shows up. Movable, not copyable
// (tables point into the stored subgroup copies).
struct AlgebraContext {
  const FiniteGroup* grp = nullptr;
  int cap = kDefaultCap;
  OrbitTable orbits;
  std::vector<BlockInfo> block_list;  // aligned with orbits.orbits

  AlgebraContext() = default;
  AlgebraContext(const AlgebraContext&) = delete;
  AlgebraContext& operator=(const AlgebraContext&) = delete;
  AlgebraContext(AlgebraContext&&) = default;
  AlgebraContext& operator=(AlgebraContext&&) = default;

  const SubgroupAsGroup& isotropy_group(uint64_t mask);
  const CharacterTable& isotropy_table(uint64_t mask);

 private:
  std::map<uint64_t, SubgroupAsGroup> subs_;
  std::map<uint64_t, CharacterTable> tables_;
};

AlgebraContext make_context(const FiniteGroup& grp, int cap = kDefaultCap);

// Simple module label: orbit representative X plus a character-table row of
// the isotropy group. dim = n_X * degree(alpha).
struct SimpleLabel {
  ESubset rep = 1;
  int block = 0;  // index into block_list
  int alpha = 0;  // row of the isotropy character table
  long dim = 1;

  auto operator<=>(const SimpleLabel&) const = default;
};

std::vector<SimpleLabel> simple_labels(AlgebraContext& ctx);

// lambda([g]) cut down to one block, in the matrix picture.
GroupAlgebraMatrix module_matrix(const FiniteGroup& grp, const BlockInfo& b, int g);

// Checks, for every simple label over the groupoid algebra of grp:
//  - the specialized matrices A_g = (alpha tensor perm)(phi(lambda([g]) Gamma_X))
//    satisfy the partial-representation laws A_g A_h A_{h^-1} = A_{gh} A_{h^-1},
//    A_{g^-1} A_g A_h = A_{g^-1} A_{gh}, A_e = 1, and A_{g^-1} = A_g^dagger;
//  - the subset projections act by the Boolean formula e_g . v = [g in hX] v
//    on the relevant basis lines;
//  - the module is irreducible (commutant of {A_g} has dimension 1);
//  - the squared dimensions add up to the algebra dimension.
CheckReport verify_simples(const FiniteGroup& grp, int cap = kDefaultCap);

}  // namespace parfus
