#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "parfus/report.hpp"
#include "parfus/subsets.hpp"

namespace parfus {

// Arrow of the restriction groupoid: source X (must contain e and g^{-1}),
// target g*X. Ordering is lexicographic in (X, g) — member order matters.
struct Arrow {
  ESubset X = 1;
  int g = 0;
  auto operator<=>(const Arrow&) const = default;
};

inline bool arrow_valid(const FiniteGroup& grp, const Arrow& a) {
  return (a.X & 1) && subset_contains(a.X, grp.inverse(a.g));
}

ESubset arrow_target(const FiniteGroup& grp, const Arrow& a);

// (g, X) ∘ (h, Y) = (gh, Y) precisely when X = hY.
std::optional<Arrow> compose(const FiniteGroup& grp, const Arrow& a, const Arrow& b);
Arrow arrow_inverse(const FiniteGroup& grp, const Arrow& a);

// All arrows, lexicographic in (X, g).
std::vector<Arrow> groupoid_arrows(const FiniteGroup& grp, int cap = kDefaultCap);

// Element of the groupoid algebra: finite rational combination of arrows.
// The std::map keeps term order deterministic everywhere.
struct AlgebraElement {
  const FiniteGroup* grp = nullptr;
  std::map<Arrow, mpq_class> terms;

  AlgebraElement() = default;
  explicit AlgebraElement(const FiniteGroup& g) : grp(&g) {}

  void add(const Arrow& a, const mpq_class& c);
  bool is_zero() const { return terms.empty(); }
  bool operator==(const AlgebraElement& o) const { return terms == o.terms; }

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const mpq_class& c);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(AlgebraElement a, const mpq_class& c) { return a *= c; }

  std::string str() const;  // deterministic debug rendering
};

AlgebraElement unit_element(const FiniteGroup& grp, int cap = kDefaultCap);

// λ([g]) = Σ_{X ∋ e, g^{-1}} (g, X): the canonical partial-representation
// image of the group generator.
AlgebraElement lambda_gen(const FiniteGroup& grp, int g, int cap = kDefaultCap);

// ε_g = [g][g^{-1}] = Σ_{X ∋ e, g} (e, X).
AlgebraElement eps_gen(const FiniteGroup& grp, int g, int cap = kDefaultCap);

// P_X = (e, X); also equals Π_{r∈X} ε_r · Π_{s∉X}(1-ε_s).
AlgebraElement p_idem(const FiniteGroup& grp, ESubset x);

// Γ_X = Σ_{Y ~ X} P_Y: the central idempotent of X's orbit.
AlgebraElement gamma_idem(const FiniteGroup& grp, ESubset x);

// Product λ([g_1])···λ([g_n]) together with its normal form
// ε_{g_1} ε_{g_1g_2} ··· ε_{g_1···g_n} λ([g_1···g_n]).
struct WordResult {
  AlgebraElement product;
  AlgebraElement normal_form;
  bool match() const { return product == normal_form; }
};
WordResult word(const FiniteGroup& grp, const std::vector<int>& gs, int cap = kDefaultCap);

struct DimensionInfo {
  long arrow_count = 0;
  long formula_value = 0;  // 2^{n-2} (n+1), matching the count for n >= 2
  bool match() const { return arrow_count == formula_value; }
};
DimensionInfo dimension_info(const FiniteGroup& grp, int cap = kDefaultCap);

// Identity suite for the groupoid model of the partial group algebra:
// subset-idempotent relations, orbit idempotents, partial-representation
// laws for λ, the ε expansions, and word normal forms.
CheckReport verify_foundations(const FiniteGroup& grp, int cap = kDefaultCap,
                               int max_word_len = 3);

}  // namespace parfus
