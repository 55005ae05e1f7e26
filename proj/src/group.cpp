#include "parfus/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace parfus {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

int FiniteGroup::power(int g, long k) const {
  long o = elem_order(g);
  k %= o;
  if (k < 0) k += o;
  int r = 0;
  for (long i = 0; i < k; ++i) r = mul(r, g);
  return r;
}

int FiniteGroup::elem_order(int g) const {
  int x = g, o = 1;
  while (x != 0) {
    x = mul(x, g);
    ++o;
  }
  return o;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

FiniteGroup FiniteGroup::from_cayley(std::vector<std::vector<int>> t, std::string label) {
  FiniteGroup g;
  g.label = std::move(label);
  g.n = static_cast<int>(t.size());
  if (g.n < 1 || g.n > kMaxGroupOrder) fail("group order must be in [1, 64]");
  for (auto& row : t) {
    if (static_cast<int>(row.size()) != g.n) fail("cayley table is not square");
    for (int x : row)
      if (x < 0 || x >= g.n) fail("cayley entry out of range");
  }
  for (int a = 0; a < g.n; ++a) {
    if (t[0][a] != a || t[a][0] != a) fail("identity must sit at index 0");
    std::vector<bool> row(g.n, false), col(g.n, false);
    for (int b = 0; b < g.n; ++b) {
      if (row[t[a][b]]) fail("cayley row is not a permutation");
      if (col[t[b][a]]) fail("cayley column is not a permutation");
      row[t[a][b]] = col[t[b][a]] = true;
    }
  }
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      for (int c = 0; c < g.n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) fail("cayley table is not associative");
  g.table = std::move(t);
  g.inv.assign(g.n, -1);
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      if (g.table[a][b] == 0) g.inv[a] = b;
  for (int a = 0; a < g.n; ++a)
    if (g.inv[a] < 0 || g.table[g.inv[a]][a] != 0) fail("no two-sided inverse");
  return g;
}

FiniteGroup make_cyclic(int n) {
  if (n < 1 || n > kMaxGroupOrder) fail("cyclic order out of range");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup::from_cayley(std::move(t), "C" + std::to_string(n));
}

FiniteGroup make_direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  long n = static_cast<long>(a.n) * b.n;
  if (n > kMaxGroupOrder) fail("product order exceeds 64");
  auto id = [&](int x, int y) { return x * b.n + y; };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x1 = 0; x1 < a.n; ++x1)
    for (int y1 = 0; y1 < b.n; ++y1)
      for (int x2 = 0; x2 < a.n; ++x2)
        for (int y2 = 0; y2 < b.n; ++y2)
          t[id(x1, y1)][id(x2, y2)] = id(a.mul(x1, x2), b.mul(y1, y2));
  return FiniteGroup::from_cayley(std::move(t), a.label + "x" + b.label);
}

FiniteGroup make_symmetric(int m) {
  if (m < 1 || m > 4) fail("symmetric group: need 1 <= m <= 4");
  std::vector<int> base(m);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> perms;
  std::vector<int> p = base;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  // lexicographic enumeration puts the identity first
  std::map<std::vector<int>, int> idx;
  for (size_t i = 0; i < perms.size(); ++i) idx[perms[i]] = static_cast<int>(i);
  int n = static_cast<int>(perms.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> c(m);
      for (int x = 0; x < m; ++x) c[x] = perms[a][perms[b][x]];  // a after b
      t[a][b] = idx[c];
    }
  return FiniteGroup::from_cayley(std::move(t), "S" + std::to_string(m));
}

std::vector<int> Subgroup::elements() const {
  std::vector<int> out;
  for (int g = 0; g < parent->n; ++g)
    if (contains(g)) out.push_back(g);
  return out;
}

bool is_subgroup_mask(const FiniteGroup& g, uint64_t mask) {
  if (!(mask & 1)) return false;
  for (int a = 0; a < g.n; ++a) {
    if (!((mask >> a) & 1)) continue;
    if (!((mask >> g.inverse(a)) & 1)) return false;
    for (int b = 0; b < g.n; ++b)
      if (((mask >> b) & 1) && !((mask >> g.mul(a, b)) & 1)) return false;
  }
  return true;
}

Subgroup subgroup_from_generators(const FiniteGroup& g, const std::vector<int>& gens) {
  for (int x : gens)
    if (x < 0 || x >= g.n) fail("generator index out of range");
  uint64_t mask = 1;  // identity
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur;
    for (int a = 0; a < g.n; ++a)
      if ((mask >> a) & 1) cur.push_back(a);
    for (int a : cur) {
      for (int x : gens) {
        int y = g.mul(a, x);
        if (!((mask >> y) & 1)) {
          mask |= uint64_t(1) << y;
          grew = true;
        }
      }
    }
  }
  return Subgroup{&g, mask};
}

std::vector<Subgroup> subgroups(const FiniteGroup& g, int cap) {
  if (g.n > cap)
    fail("subgroup enumeration needs |G| <= " + std::to_string(cap) +
         "; raise the cap to override");
  if (g.n > 24) fail("subgroup enumeration is infeasible past order 24");
  std::vector<Subgroup> out;
  uint64_t full = (g.n == 64) ? ~uint64_t(0) : ((uint64_t(1) << g.n) - 1);
  for (uint64_t m = 1; m <= full; m += 2)
    if (is_subgroup_mask(g, m)) out.push_back(Subgroup{&g, m});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.mask < b.mask;
  });
  return out;
}

SubgroupAsGroup subgroup_as_group(const Subgroup& h) {
  const FiniteGroup& g = *h.parent;
  if (!is_subgroup_mask(g, h.mask)) fail("mask is not a subgroup");
  SubgroupAsGroup out;
  out.to_parent = h.elements();  // ascending, so identity lands at 0
  out.from_parent.assign(g.n, -1);
  for (size_t i = 0; i < out.to_parent.size(); ++i)
    out.from_parent[out.to_parent[i]] = static_cast<int>(i);
  int m = static_cast<int>(out.to_parent.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      t[a][b] = out.from_parent[g.mul(out.to_parent[a], out.to_parent[b])];
  out.group = FiniteGroup::from_cayley(std::move(t), g.label + "-sub" + std::to_string(h.mask));
  return out;
}

long CyclicFactor::order() const {
  long o = 1;
  for (int i = 0; i < exp; ++i) o *= p;
  return o;
}

namespace {

// Quotient of abelian G by subgroup (as masks); returns the quotient group
// plus a coset-representative lift (smallest member).
struct Quotient {
  FiniteGroup group;
  std::vector<int> lift;      // quotient index -> representative in G
  std::vector<int> coset_of;  // G index -> quotient index
};

Quotient quotient_abelian(const FiniteGroup& g, uint64_t sub) {
  Quotient q;
  q.coset_of.assign(g.n, -1);
  for (int a = 0; a < g.n; ++a) {
    if (q.coset_of[a] >= 0) continue;
    int id = static_cast<int>(q.lift.size());
    q.lift.push_back(a);
    for (int s = 0; s < g.n; ++s)
      if ((sub >> s) & 1) q.coset_of[g.mul(a, s)] = id;
  }
  int m = static_cast<int>(q.lift.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) t[a][b] = q.coset_of[g.mul(q.lift[a], q.lift[b])];
  q.group = FiniteGroup::from_cayley(std::move(t), g.label + "/");
  return q;
}

// Cyclic-factor generators (with orders) of an abelian p-group, classic
// max-order-plus-quotient recursion.
std::vector<std::pair<int, long>> decompose_p_group(const FiniteGroup& s) {
  if (s.n == 1) return {};
  int a = 0;
  long best = 1;
  for (int x = 0; x < s.n; ++x) {
    long o = s.elem_order(x);
    if (o > best) best = o, a = x;
  }
  uint64_t cyc = 0;
  {
    int x = 0;
    do {
      cyc |= uint64_t(1) << x;
      x = s.mul(x, a);
    } while (x != 0);
  }
  Quotient q = quotient_abelian(s, cyc);
  std::vector<std::pair<int, long>> out{{a, best}};
  for (auto [qg, d] : decompose_p_group(q.group)) {
    int x = q.lift[qg];
    // x^d lands in <a>; divide it out so the corrected lift has exact order d
    int xd = s.power(x, d);
    long c = 0;
    int w = 0;
    while (w != xd) {
      w = s.mul(w, a);
      ++c;
    }
    if (c % d != 0) fail("internal: cyclic decomposition correction failed");
    int corrected = s.mul(x, s.power(s.inverse(a), c / d));
    if (s.elem_order(corrected) != d) fail("internal: corrected generator has wrong order");
    out.emplace_back(corrected, d);
  }
  return out;
}

std::vector<std::pair<long, int>> factor_prime_power(long o) {
  std::vector<std::pair<long, int>> fs;
  for (long p = 2; p * p <= o; ++p)
    if (o % p == 0) {
      int e = 0;
      while (o % p == 0) o /= p, ++e;
      fs.emplace_back(p, e);
    }
  if (o > 1) fs.emplace_back(o, 1);
  return fs;
}

void fill_coords(const FiniteGroup& g, AbelianDecomposition& d) {
  size_t k = d.factors.size();
  std::vector<long> ords(k);
  long total = 1;
  for (size_t i = 0; i < k; ++i) total *= ords[i] = d.factors[i].order();
  if (total != g.n) fail("internal: cyclic factor orders do not multiply to |G|");
  d.coords.assign(g.n, {});
  std::vector<int> tup(k, 0);
  std::vector<bool> seen(g.n, false);
  for (long c = 0; c < total; ++c) {
    int e = 0;
    for (size_t i = 0; i < k; ++i) e = g.mul(e, g.power(d.factors[i].gen, tup[i]));
    if (seen[e]) fail("internal: cyclic factors are not independent");
    seen[e] = true;
    d.coords[e] = tup;
    for (size_t i = k; i-- > 0;) {
      if (++tup[i] < ords[i]) break;
      tup[i] = 0;
    }
  }
}

}  // namespace

AbelianDecomposition elementary_decomposition(const FiniteGroup& g) {
  if (!g.is_abelian()) fail("elementary decomposition needs an abelian group");
  AbelianDecomposition out;
  for (auto [p, e] : factor_prime_power(g.n)) {
    long pk = 1;
    for (int i = 0; i < e; ++i) pk *= p;
    uint64_t syl = 0;
    for (int x = 0; x < g.n; ++x)
      if (pk % g.elem_order(x) == 0) syl |= uint64_t(1) << x;
    SubgroupAsGroup s = subgroup_as_group(Subgroup{&g, syl});
    for (auto [gen, o] : decompose_p_group(s.group)) {
      CyclicFactor f;
      f.p = p;
      f.exp = 0;
      for (long t = o; t > 1; t /= p) ++f.exp;
      f.gen = s.to_parent[gen];
      out.factors.push_back(f);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const CyclicFactor& a, const CyclicFactor& b) {
    if (a.p != b.p) return a.p < b.p;
    if (a.exp != b.exp) return a.exp > b.exp;
    return a.gen < b.gen;
  });
  fill_coords(g, out);
  return out;
}

// --- Smith normal form ------------------------------------------------------

namespace {

void add_row(std::vector<std::vector<long>>& m, int dst, int src, long c) {
  for (size_t j = 0; j < m[dst].size(); ++j) m[dst][j] += c * m[src][j];
}
void add_col(std::vector<std::vector<long>>& m, int dst, int src, long c) {
  for (auto& row : m) row[dst] += c * row[src];
}
void swap_rows(std::vector<std::vector<long>>& m, int a, int b) { std::swap(m[a], m[b]); }
void swap_cols(std::vector<std::vector<long>>& m, int a, int b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}
void neg_row(std::vector<std::vector<long>>& m, int a) {
  for (auto& x : m[a]) x = -x;
}
void neg_col(std::vector<std::vector<long>>& m, int a) {
  for (auto& row : m) row[a] = -row[a];
}

std::vector<std::vector<long>> identity_mat(int n) {
  std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

SmithForm smith_normal_form(std::vector<std::vector<long>> a) {
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  SmithForm f;
  f.u = identity_mat(rows);
  f.u_inv = identity_mat(rows);
  f.v = identity_mat(cols);
  // every row op E applied to u is mirrored as the column op E^{-1} on u_inv
  auto xch_rows = [&](int x, int y) {
    swap_rows(a, x, y);
    swap_rows(f.u, x, y);
    swap_cols(f.u_inv, x, y);
  };
  auto axpy_rows = [&](int dst, int src, long c) {
    add_row(a, dst, src, c);
    add_row(f.u, dst, src, c);
    add_col(f.u_inv, src, dst, -c);
  };
  int t = 0;
  while (t < rows && t < cols) {
    // locate a pivot: smallest nonzero |entry| in the remaining block
    int pi = -1, pj = -1;
    long pv = 0;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pi < 0 || std::abs(a[i][j]) < std::abs(pv))) {
          pi = i, pj = j, pv = a[i][j];
        }
    if (pi < 0) break;
    xch_rows(t, pi);
    swap_cols(a, t, pj), swap_cols(f.v, t, pj);
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < rows; ++i)
        if (a[i][t] != 0) {
          long c = a[i][t] / a[t][t];
          axpy_rows(i, t, -c);
          if (a[i][t] != 0) {  // remainder smaller than pivot: swap up, restart
            xch_rows(t, i);
            dirty = true;
          }
        }
      for (int j = t + 1; j < cols; ++j)
        if (a[t][j] != 0) {
          long c = a[t][j] / a[t][t];
          add_col(a, j, t, -c), add_col(f.v, j, t, -c);
          if (a[t][j] != 0) {
            swap_cols(a, t, j), swap_cols(f.v, t, j);
            dirty = true;
          }
        }
    }
    // pivot must divide everything below-right; if not, fold the offender in
    for (int i = t + 1; i < rows && a[t][t] != 0; ++i)
      for (int j = t + 1; j < cols; ++j)
        if (a[i][j] % a[t][t] != 0) {
          axpy_rows(t, i, 1);
          i = rows;  // restart elimination for this pivot
          t -= 1;
          break;
        }
    ++t;
  }
  for (int i = 0; i < rows && i < cols; ++i)
    if (a[i][i] < 0) {
      neg_row(a, i);
      neg_row(f.u, i);
      neg_col(f.u_inv, i);
    }
  f.d = std::move(a);
  return f;
}

// --- adapted bases ----------------------------------------------------------

namespace {

struct PFactor {
  int gen;
  long ord;
};

uint64_t cyclic_mask(const FiniteGroup& g, int a) {
  uint64_t m = 0;
  int x = 0;
  do {
    m |= uint64_t(1) << x;
    x = g.mul(x, a);
  } while (x != 0);
  return m;
}

uint64_t span_mask(const FiniteGroup& g, const std::vector<int>& gens) {
  return subgroup_from_generators(g, gens).mask;
}

// Verify candidate generators really decompose the subgroup `total` directly.
bool is_direct_basis(const FiniteGroup& g, uint64_t total, const std::vector<PFactor>& fs) {
  long prod = 1;
  for (auto& f : fs) {
    if (g.elem_order(f.gen) != f.ord) return false;
    prod *= f.ord;
  }
  if (prod != __builtin_popcountll(total)) return false;
  uint64_t seen = 0;
  std::vector<long> tup(fs.size(), 0);
  for (long c = 0; c < prod; ++c) {
    int e = 0;
    for (size_t i = 0; i < fs.size(); ++i) e = g.mul(e, g.power(fs[i].gen, tup[i]));
    if (!((total >> e) & 1)) return false;
    if ((seen >> e) & 1) return false;
    seen |= uint64_t(1) << e;
    for (size_t i = fs.size(); i-- > 0;) {
      if (++tup[i] < fs[i].ord) break;
      tup[i] = 0;
    }
  }
  return true;
}

// All subgroup masks inside `within` (which must itself be a subgroup mask).
std::vector<uint64_t> subgroup_masks_within(const FiniteGroup& g, uint64_t within) {
  std::vector<uint64_t> out;
  uint64_t sub = within;
  while (true) {
    if ((sub & 1) && is_subgroup_mask(g, sub)) out.push_back(sub);
    if (sub == 0) break;
    sub = (sub - 1) & within;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Complete search for a basis of the p-group `s` adapted to h (masks over g).
// Any adapted basis has a maximal-order generator whose complement splits h,
// so trying every (max-order element, complement) pair with backtracking is a
// decision procedure.
bool adapted_search(const FiniteGroup& g, uint64_t s, uint64_t h, std::vector<PFactor>& acc,
                    std::vector<long>& divs) {
  int sz = __builtin_popcountll(s);
  if (sz == 1) return true;
  long m = 1;
  for (int x = 0; x < g.n; ++x)
    if ((s >> x) & 1) m = std::max(m, (long)g.elem_order(x));
  std::vector<uint64_t> subs = subgroup_masks_within(g, s);
  for (int b = 0; b < g.n; ++b) {
    if (!((s >> b) & 1) || g.elem_order(b) != m) continue;
    uint64_t cyc = cyclic_mask(g, b);
    long hb = __builtin_popcountll(h & cyc);  // h ∩ <b> is cyclic: <b^{m/hb}>
    for (uint64_t c : subs) {
      if (__builtin_popcountll(c) * m != (long)sz) continue;
      if ((c & cyc) != 1) continue;
      long hc = __builtin_popcountll(h & c);
      if (hb * hc != __builtin_popcountll(h)) continue;
      acc.push_back({b, m});
      divs.push_back(m / hb);
      if (adapted_search(g, c, h & c, acc, divs)) return true;
      acc.pop_back();
      divs.pop_back();
    }
  }
  return false;
}

// SNF fast path: relation matrix of h's generators in the coordinates of an
// elementary decomposition of the p-part, columns padded with the factor
// orders. The left transform proposes new generators; they are kept only if
// they verifiably form a direct basis splitting h.
bool adapted_snf(const FiniteGroup& g, const std::vector<CyclicFactor>& pf,
                 const std::vector<std::vector<int>>& coords, uint64_t s, uint64_t h,
                 std::vector<PFactor>& acc, std::vector<long>& divs) {
  int k = static_cast<int>(pf.size());
  std::vector<std::vector<long>> a(k);
  std::vector<int> helems;
  for (int x = 0; x < g.n; ++x)
    if ((h >> x) & 1) helems.push_back(x);
  for (int i = 0; i < k; ++i) {
    for (int x : helems) a[i].push_back(coords[x][i]);
    for (int j = 0; j < k; ++j) a[i].push_back(i == j ? pf[j].order() : 0);
  }
  SmithForm f = smith_normal_form(a);
  // The lattice spanned by h's vectors plus the relation columns is
  // ⊕ d_i * (u^{-1} e_i), so columns of u^{-1} propose the new generators.
  const std::vector<std::vector<long>>& inv = f.u_inv;
  // candidate generator i = product of pf[j].gen^( inv[j][i] )  (column i of u^{-1})
  std::vector<PFactor> cand;
  std::vector<long> cdivs;
  for (int i = 0; i < k; ++i) {
    int e = 0;
    for (int j = 0; j < k; ++j) e = g.mul(e, g.power(pf[j].gen, inv[j][i]));
    long o = g.elem_order(e);
    if (o == 1) continue;  // padded relation column; contributes nothing
    long d = std::gcd(f.d[i][i], o);
    cand.push_back({e, o});
    cdivs.push_back(d);
  }
  if (!is_direct_basis(g, s, cand)) return false;
  // the divisors must cut out exactly h
  std::vector<int> gens;
  for (size_t i = 0; i < cand.size(); ++i) gens.push_back(g.power(cand[i].gen, cdivs[i]));
  if (span_mask(g, gens) != h) return false;
  // also every <gen^{div}> must intersect pairwise trivially — implied by
  // direct basis, so we are done
  for (size_t i = 0; i < cand.size(); ++i) {
    acc.push_back(cand[i]);
    divs.push_back(cdivs[i]);
  }
  return true;
}

}  // namespace

std::optional<AdaptedBasis> adapted_basis(const FiniteGroup& g, const Subgroup& h) {
  if (!g.is_abelian()) fail("adapted basis needs an abelian group");
  if (h.parent != &g || !is_subgroup_mask(g, h.mask)) fail("h is not a subgroup of g");
  AbelianDecomposition base = elementary_decomposition(g);
  std::vector<PFactor> acc;
  std::vector<long> divs;
  for (size_t i = 0; i < base.factors.size();) {
    long p = base.factors[i].p;
    size_t j = i;
    std::vector<CyclicFactor> pf;
    while (j < base.factors.size() && base.factors[j].p == p) pf.push_back(base.factors[j++]);
    // sylow subgroup and its slice of h
    long pk = 1;
    for (auto& f : pf) pk *= f.order();
    uint64_t syl = 0;
    for (int x = 0; x < g.n; ++x)
      if (pk % g.elem_order(x) == 0) syl |= uint64_t(1) << x;
    uint64_t hp = h.mask & syl;
    // per-prime coordinates: reuse global coords restricted to this prime's slots
    std::vector<std::vector<int>> coords(g.n);
    for (int x = 0; x < g.n; ++x)
      for (size_t t = i; t < j; ++t) coords[x].push_back(base.coords[x][t]);
    size_t before = acc.size();
    if (!adapted_snf(g, pf, coords, syl, hp, acc, divs)) {
      acc.resize(before);
      divs.resize(before);
      if (__builtin_popcountll(syl) > kDefaultCap) return std::nullopt;  // search would blow up
      if (!adapted_search(g, syl, hp, acc, divs)) return std::nullopt;
    }
    i = j;
  }
  AdaptedBasis out;
  for (size_t i = 0; i < acc.size(); ++i) {
    CyclicFactor f;
    auto fp = factor_prime_power(acc[i].ord);
    f.p = fp[0].first;
    f.exp = fp[0].second;
    f.gen = acc[i].gen;
    out.basis.factors.push_back(f);
  }
  // sort factors the same way elementary_decomposition does, carrying divisors
  std::vector<size_t> perm(acc.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
    const CyclicFactor &x = out.basis.factors[a], &y = out.basis.factors[b];
    if (x.p != y.p) return x.p < y.p;
    if (x.exp != y.exp) return x.exp > y.exp;
    return x.gen < y.gen;
  });
  AdaptedBasis sorted;
  for (size_t idx : perm) {
    sorted.basis.factors.push_back(out.basis.factors[idx]);
    sorted.divisors.push_back(divs[idx]);
  }
  fill_coords(g, sorted.basis);
  // final guarantee: the divisors carve out exactly h
  std::vector<int> cut;
  for (size_t i = 0; i < sorted.basis.factors.size(); ++i)
    cut.push_back(g.power(sorted.basis.factors[i].gen, sorted.divisors[i]));
  if (span_mask(g, cut) != h.mask) fail("internal: adapted basis verification failed");
  return sorted;
}

bool GroupMorphism::is_morphism() const {
  if (!source || !target || static_cast<int>(map.size()) != source->n) return false;
  if (map[0] != 0) return false;
  for (int a = 0; a < source->n; ++a)
    for (int b = 0; b < source->n; ++b)
      if (map[source->mul(a, b)] != target->mul(map[a], map[b])) return false;
  return true;
}

bool GroupMorphism::is_surjective() const {
  std::set<int> img(map.begin(), map.end());
  return static_cast<int>(img.size()) == target->n;
}

}  // namespace parfus
