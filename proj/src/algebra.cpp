#include "parfus/algebra.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace parfus {

ESubset arrow_target(const FiniteGroup& grp, const Arrow& a) { return translate(grp, a.g, a.X); }

std::optional<Arrow> compose(const FiniteGroup& grp, const Arrow& a, const Arrow& b) {
  if (a.X != arrow_target(grp, b)) return std::nullopt;
  return Arrow{b.X, grp.mul(a.g, b.g)};
}

Arrow arrow_inverse(const FiniteGroup& grp, const Arrow& a) {
  return Arrow{arrow_target(grp, a), grp.inverse(a.g)};
}

std::vector<Arrow> groupoid_arrows(const FiniteGroup& grp, int cap) {
  std::vector<Arrow> out;
  for (ESubset x : e_subsets(grp, cap))
    for (int g = 0; g < grp.n; ++g)
      if (subset_contains(x, grp.inverse(g))) out.push_back(Arrow{x, g});
  return out;
}

void AlgebraElement::add(const Arrow& a, const mpq_class& c) {
  if (c == 0) return;
  auto it = terms.find(a);
  if (it == terms.end()) {
    terms.emplace(a, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (!grp) grp = o.grp;
  for (const auto& [a, c] : o.terms) add(a, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  if (!grp) grp = o.grp;
  for (const auto& [a, c] : o.terms) add(a, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [a, v] : terms) v *= c;
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.grp && b.grp && a.grp != b.grp)
    throw std::invalid_argument("algebra elements live over different groups");
  AlgebraElement out;
  out.grp = a.grp ? a.grp : b.grp;
  if (!out.grp) return out;
  for (const auto& [x, cx] : a.terms)
    for (const auto& [y, cy] : b.terms)
      if (auto z = compose(*out.grp, x, y)) out.add(*z, cx * cy);
  return out;
}

std::string AlgebraElement::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : terms) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << c.get_str() << "*";
    os << "(" << a.g << "," << a.X << ")";
  }
  return os.str();
}

AlgebraElement unit_element(const FiniteGroup& grp, int cap) {
  AlgebraElement u(grp);
  for (ESubset x : e_subsets(grp, cap)) u.add(Arrow{x, 0}, 1);
  return u;
}

AlgebraElement lambda_gen(const FiniteGroup& grp, int g, int cap) {
  AlgebraElement out(grp);
  int gi = grp.inverse(g);
  for (ESubset x : e_subsets(grp, cap))
    if (subset_contains(x, gi)) out.add(Arrow{x, g}, 1);
  return out;
}

AlgebraElement eps_gen(const FiniteGroup& grp, int g, int cap) {
  AlgebraElement out(grp);
  for (ESubset x : e_subsets(grp, cap))
    if (subset_contains(x, g)) out.add(Arrow{x, 0}, 1);
  return out;
}

AlgebraElement p_idem(const FiniteGroup& grp, ESubset x) {
  if (!(x & 1)) throw std::invalid_argument("subset must contain the identity");
  AlgebraElement out(grp);
  out.add(Arrow{x, 0}, 1);
  return out;
}

AlgebraElement gamma_idem(const FiniteGroup& grp, ESubset x) {
  if (!(x & 1)) throw std::invalid_argument("subset must contain the identity");
  std::set<ESubset> orbit;
  for (int g = 0; g < grp.n; ++g) {
    ESubset y = translate(grp, g, x);
    if (y & 1) orbit.insert(y);
  }
  AlgebraElement out(grp);
  for (ESubset y : orbit) out.add(Arrow{y, 0}, 1);
  return out;
}

WordResult word(const FiniteGroup& grp, const std::vector<int>& gs, int cap) {
  WordResult r;
  r.product = unit_element(grp, cap);
  for (int g : gs) r.product = r.product * lambda_gen(grp, g, cap);
  r.normal_form = unit_element(grp, cap);
  int acc = 0;
  for (int g : gs) {
    acc = grp.mul(acc, g);
    r.normal_form = r.normal_form * eps_gen(grp, acc, cap);
  }
  r.normal_form = r.normal_form * lambda_gen(grp, acc, cap);
  return r;
}

DimensionInfo dimension_info(const FiniteGroup& grp, int cap) {
  DimensionInfo d;
  d.arrow_count = static_cast<long>(groupoid_arrows(grp, cap).size());
  if (grp.n == 1) {
    d.formula_value = 1;
  } else {
    d.formula_value = (long(1) << (grp.n - 2)) * (grp.n + 1);
  }
  return d;
}

namespace {

std::string arrow_str(const Arrow& a) {
  return "(g=" + std::to_string(a.g) + ",X=" + std::to_string(a.X) + ")";
}

}  // namespace

CheckReport verify_foundations(const FiniteGroup& grp, int cap, int max_word_len) {
  CheckReport rep;
  auto subsets = e_subsets(grp, cap);
  OrbitTable orbits = fundamental_domain(grp, cap);
  int n = grp.n;

  auto run = [&rep](const std::string& name, auto&& body) {
    CheckResult r;
    r.name = name;
    body(r);
    rep.checks.push_back(std::move(r));
  };

  // P_X P_Y = [X=Y] P_X
  run("subset_idempotents_orthogonal", [&](CheckResult& r) {
    for (ESubset x : subsets)
      for (ESubset y : subsets) {
        AlgebraElement lhs = p_idem(grp, x) * p_idem(grp, y);
        AlgebraElement want(grp);
        if (x == y) want.add(Arrow{x, 0}, 1);
        ++r.cases;
        if (!(lhs == want)) {
          r.pass = false;
          r.counterexample = "X=" + std::to_string(x) + " Y=" + std::to_string(y);
          return;
        }
      }
  });

  // Σ_X P_X = 1 (and the unit really is a two-sided unit on arrows)
  run("subset_idempotents_resolve_unit", [&](CheckResult& r) {
    AlgebraElement sum(grp);
    for (ESubset x : subsets) sum += p_idem(grp, x);
    AlgebraElement one = unit_element(grp, cap);
    r.cases = 1;
    if (!(sum == one)) {
      r.pass = false;
      r.counterexample = "sum of subset idempotents differs from the unit";
      return;
    }
    for (const Arrow& a : groupoid_arrows(grp, cap)) {
      AlgebraElement el(grp);
      el.add(a, 1);
      ++r.cases;
      if (!(one * el == el) || !(el * one == el)) {
        r.pass = false;
        r.counterexample = arrow_str(a);
        return;
      }
    }
  });

  // λ([g]) P_X = P_{gX} λ([g]) [g^{-1} ∈ X], checked one basis idempotent at a time
  run("lambda_shifts_subset_idempotents", [&](CheckResult& r) {
    for (int g = 0; g < n; ++g) {
      AlgebraElement lam = lambda_gen(grp, g, cap);
      for (ESubset x : subsets) {
        AlgebraElement lhs = lam * p_idem(grp, x);
        AlgebraElement rhs(grp);
        if (subset_contains(x, grp.inverse(g))) {
          ESubset gx = translate(grp, g, x);
          rhs = p_idem(grp, gx) * lam;
        }
        ++r.cases;
        if (!(lhs == rhs)) {
          r.pass = false;
          r.counterexample = "g=" + std::to_string(g) + " X=" + std::to_string(x);
          return;
        }
      }
    }
  });

  // Γ_X absorbs the subset idempotents of its orbit: P_Y Γ_X = [X~Y] P_Y
  run("orbit_idempotent_absorbs", [&](CheckResult& r) {
    for (const OrbitInfo& o : orbits.orbits) {
      AlgebraElement gam = gamma_idem(grp, o.rep);
      for (ESubset y : subsets) {
        AlgebraElement lhs = p_idem(grp, y) * gam;
        AlgebraElement want(grp);
        if (orbits.orbit_of(y).rep == o.rep) want.add(Arrow{y, 0}, 1);
        ++r.cases;
        if (!(lhs == want)) {
          r.pass = false;
          r.counterexample = "rep=" + std::to_string(o.rep) + " Y=" + std::to_string(y);
          return;
        }
      }
    }
  });

  // Γ_Y Γ_X = [X~Y] Γ_X
  run("orbit_idempotents_orthogonal", [&](CheckResult& r) {
    for (ESubset x : subsets)
      for (ESubset y : subsets) {
        AlgebraElement lhs = gamma_idem(grp, y) * gamma_idem(grp, x);
        AlgebraElement want(grp);
        if (orbits.orbit_of(y).rep == orbits.orbit_of(x).rep) want = gamma_idem(grp, x);
        ++r.cases;
        if (!(lhs == want)) {
          r.pass = false;
          r.counterexample = "X=" + std::to_string(x) + " Y=" + std::to_string(y);
          return;
        }
      }
  });

  // Γ_X is central: commutes with every λ([g])
  run("orbit_idempotents_central", [&](CheckResult& r) {
    for (const OrbitInfo& o : orbits.orbits) {
      AlgebraElement gam = gamma_idem(grp, o.rep);
      for (int g = 0; g < n; ++g) {
        AlgebraElement lam = lambda_gen(grp, g, cap);
        ++r.cases;
        if (!(lam * gam == gam * lam)) {
          r.pass = false;
          r.counterexample = "rep=" + std::to_string(o.rep) + " g=" + std::to_string(g);
          return;
        }
      }
    }
  });

  // Σ_{X in domain} Γ_X = 1
  run("orbit_idempotents_resolve_unit", [&](CheckResult& r) {
    AlgebraElement sum(grp);
    for (const OrbitInfo& o : orbits.orbits) sum += gamma_idem(grp, o.rep);
    r.cases = 1;
    if (!(sum == unit_element(grp, cap))) {
      r.pass = false;
      r.counterexample = "sum over the fundamental domain differs from the unit";
    }
  });

  // Γ_X = (1/|G_X|) Σ_{g^{-1} ∈ X} P_{gX}: the averaged form, exact rationals
  run("orbit_idempotent_averaged_form", [&](CheckResult& r) {
    for (const OrbitInfo& o : orbits.orbits) {
      AlgebraElement avg(grp);
      mpq_class w(1, __builtin_popcountll(o.isotropy_mask));
      for (int g = 0; g < n; ++g)
        if (subset_contains(o.rep, grp.inverse(g)))
          avg += p_idem(grp, translate(grp, g, o.rep)) * w;
      ++r.cases;
      if (!(avg == gamma_idem(grp, o.rep))) {
        r.pass = false;
        r.counterexample = "rep=" + std::to_string(o.rep);
        return;
      }
    }
  });

  // λ is a partial representation: λ(e) = 1, the two replacement laws, and
  // the derived partial-isometry identity
  run("lambda_partial_representation", [&](CheckResult& r) {
    if (!(lambda_gen(grp, 0, cap) == unit_element(grp, cap))) {
      r.pass = false;
      r.counterexample = "lambda at the identity is not the unit";
      return;
    }
    ++r.cases;
    std::vector<AlgebraElement> lam(n);
    for (int g = 0; g < n; ++g) lam[g] = lambda_gen(grp, g, cap);
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h) {
        int hi = grp.inverse(h);
        ++r.cases;
        if (!(lam[g] * lam[h] * lam[hi] == lam[grp.mul(g, h)] * lam[hi])) {
          r.pass = false;
          r.counterexample = "replacement-right g=" + std::to_string(g) + " h=" + std::to_string(h);
          return;
        }
        ++r.cases;
        int gi = grp.inverse(g);
        if (!(lam[gi] * lam[g] * lam[h] == lam[gi] * lam[grp.mul(g, h)])) {
          r.pass = false;
          r.counterexample = "replacement-left g=" + std::to_string(g) + " h=" + std::to_string(h);
          return;
        }
      }
    for (int g = 0; g < n; ++g) {
      ++r.cases;
      if (!(lam[g] * lam[grp.inverse(g)] * lam[g] == lam[g])) {
        r.pass = false;
        r.counterexample = "partial-isometry g=" + std::to_string(g);
        return;
      }
    }
  });

  // ε_g = λ([g])λ([g^{-1}]) and commutation of the ε's
  run("eps_expansion", [&](CheckResult& r) {
    for (int g = 0; g < n; ++g) {
      AlgebraElement e1 = eps_gen(grp, g, cap);
      ++r.cases;
      if (!(e1 == lambda_gen(grp, g, cap) * lambda_gen(grp, grp.inverse(g), cap))) {
        r.pass = false;
        r.counterexample = "g=" + std::to_string(g);
        return;
      }
      for (int h = 0; h < n; ++h) {
        AlgebraElement e2 = eps_gen(grp, h, cap);
        ++r.cases;
        if (!(e1 * e2 == e2 * e1)) {
          r.pass = false;
          r.counterexample = "commutator g=" + std::to_string(g) + " h=" + std::to_string(h);
          return;
        }
      }
    }
  });

  // P_X as the inclusion-exclusion product of ε's over X's membership pattern
  run("subset_idempotent_product_form", [&](CheckResult& r) {
    for (ESubset x : subsets) {
      AlgebraElement prod = unit_element(grp, cap);
      for (int g = 1; g < n; ++g) {
        if (subset_contains(x, g))
          prod = prod * eps_gen(grp, g, cap);
        else
          prod = prod * (unit_element(grp, cap) - eps_gen(grp, g, cap));
      }
      ++r.cases;
      if (!(prod == p_idem(grp, x))) {
        r.pass = false;
        r.counterexample = "X=" + std::to_string(x);
        return;
      }
    }
  });

  // word normal form: λ([g_1])···λ([g_k]) = ε_{g_1}···ε_{g_1···g_k} λ([g_1···g_k])
  run("word_normal_form", [&](CheckResult& r) {
    std::vector<std::vector<int>> words{{}};
    for (int len = 1; len <= max_word_len; ++len) {
      std::vector<std::vector<int>> next;
      for (const auto& w : words)
        if (static_cast<int>(w.size()) == len - 1)
          for (int g = 1; g < n; ++g) {
            auto w2 = w;
            w2.push_back(g);
            next.push_back(w2);
          }
      for (const auto& w : next) {
        WordResult res = word(grp, w, cap);
        ++r.cases;
        if (!res.match()) {
          r.pass = false;
          std::string s = "word=";
          for (int g : w) s += std::to_string(g) + ",";
          r.counterexample = s;
          return;
        }
      }
      words = std::move(next);
    }
  });

  // arrow count against the closed-form dimension
  run("dimension_formula", [&](CheckResult& r) {
    DimensionInfo d = dimension_info(grp, cap);
    r.cases = 1;
    if (!d.match()) {
      r.pass = false;
      r.counterexample = "count=" + std::to_string(d.arrow_count) +
                         " formula=" + std::to_string(d.formula_value);
    }
  });

  return rep;
}

}  // namespace parfus
