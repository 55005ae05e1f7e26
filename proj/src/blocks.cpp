#include "parfus/blocks.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "parfus/rep_theory.hpp"

namespace parfus {

std::vector<BlockInfo> blocks(const FiniteGroup& grp, int cap) {
  auto dom = fundamental_domain(grp, cap);
  std::vector<BlockInfo> out;
  out.reserve(dom.orbits.size());
  for (const auto& o : dom.orbits) {
    BlockInfo b;
    b.rep = o.rep;
    b.n = static_cast<int>(o.transversal.size());
    b.isotropy_mask = o.isotropy_mask;
    b.transversal = o.transversal;
    b.dim = static_cast<long>(b.n) * b.n * b.isotropy_order();
    for (int j = 0; j < b.n; ++j) {
      b.member_index.emplace(translate(grp, b.transversal[j], b.rep), j);
    }
    out.push_back(std::move(b));
  }
  return out;
}

GroupAlgebraMatrix::GroupAlgebraMatrix(const FiniteGroup& g, uint64_t iso, int size)
    : grp(&g),
      isotropy_mask(iso),
      n(size),
      entry(size, std::vector<std::map<int, mpq_class>>(size)) {}

void GroupAlgebraMatrix::add(int i, int j, int t, const mpq_class& c) {
  if (!subset_contains(isotropy_mask, t)) {
    throw std::invalid_argument("GroupAlgebraMatrix::add: element outside the isotropy subgroup");
  }
  auto& cell = entry[i][j];
  auto it = cell.find(t);
  if (it == cell.end()) {
    if (c != 0) cell.emplace(t, c);
    return;
  }
  it->second += c;
  if (it->second == 0) cell.erase(it);
}

GroupAlgebraMatrix operator*(const GroupAlgebraMatrix& a, const GroupAlgebraMatrix& b) {
  if (a.grp != b.grp || a.isotropy_mask != b.isotropy_mask || a.n != b.n) {
    throw std::invalid_argument("GroupAlgebraMatrix: mismatched shapes");
  }
  GroupAlgebraMatrix r(*a.grp, a.isotropy_mask, a.n);
  for (int i = 0; i < a.n; ++i) {
    for (int k = 0; k < a.n; ++k) {
      if (a.entry[i][k].empty()) continue;
      for (int j = 0; j < a.n; ++j) {
        for (const auto& [t1, c1] : a.entry[i][k]) {
          for (const auto& [t2, c2] : b.entry[k][j]) {
            r.add(i, j, a.grp->mul(t1, t2), c1 * c2);
          }
        }
      }
    }
  }
  return r;
}

GroupAlgebraMatrix GroupAlgebraMatrix::identity(const FiniteGroup& g, uint64_t iso, int size) {
  GroupAlgebraMatrix r(g, iso, size);
  for (int i = 0; i < size; ++i) r.add(i, i, 0, 1);
  return r;
}

GroupAlgebraMatrix phi_block(const FiniteGroup& grp, const BlockInfo& b, const AlgebraElement& x) {
  GroupAlgebraMatrix m(grp, b.isotropy_mask, b.n);
  for (const auto& [arrow, c] : x.terms) {
    auto jt = b.member_index.find(arrow.X);
    if (jt == b.member_index.end()) {
      throw std::invalid_argument("phi_block: element has support outside this block");
    }
    auto it = b.member_index.find(arrow_target(grp, arrow));
    if (it == b.member_index.end()) {
      throw std::logic_error("phi_block: arrow target escaped the orbit");
    }
    int i = it->second, j = jt->second;
    // h g_j X = g_i X forces t = g_i^{-1} h g_j into the isotropy subgroup.
    int t = grp.mul(grp.inverse(b.transversal[i]), grp.mul(arrow.g, b.transversal[j]));
    m.add(i, j, t, c);
  }
  return m;
}

AlgebraElement psi_block(const FiniteGroup& grp, const BlockInfo& b, const GroupAlgebraMatrix& m) {
  if (m.n != b.n || m.isotropy_mask != b.isotropy_mask) {
    throw std::invalid_argument("psi_block: matrix does not fit the block");
  }
  AlgebraElement x(grp);
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j) {
      ESubset src = translate(grp, b.transversal[j], b.rep);
      for (const auto& [t, c] : m.entry[i][j]) {
        int h = grp.mul(b.transversal[i], grp.mul(t, grp.inverse(b.transversal[j])));
        x.add(Arrow{src, h}, c);
      }
    }
  }
  return x;
}

std::vector<int> wedderburn_summary(const FiniteGroup& grp, int cap) {
  std::vector<int> sizes;
  for (const auto& b : blocks(grp, cap)) {
    Subgroup iso{&grp, b.isotropy_mask};
    auto sub = subgroup_as_group(iso);
    for (int d : character_degrees(sub.group)) sizes.push_back(b.n * d);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::string wedderburn_compact_string(const std::vector<int>& sizes) {
  long ones = 0;
  std::vector<int> big;
  for (int s : sizes) {
    if (s == 1) {
      ones++;
    } else {
      big.push_back(s);
    }
  }
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " ⊕ ";
    first = false;
  };
  if (ones > 0) {
    sep();
    if (ones > 1) os << ones;
    os << "C";
  }
  for (int s : big) {
    sep();
    os << "M_" << s << "(C)";
  }
  if (first) os << "0";
  return os.str();
}

std::string wedderburn_footer_string(const std::vector<int>& sizes) {
  std::map<int, long> count;
  for (int s : sizes) count[s]++;
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : count) {
    if (!first) os << " ⊕ ";
    first = false;
    if (c > 1) os << c << "·";
    os << "M" << s;
  }
  if (first) os << "0";
  os << " over C";
  return os.str();
}


CheckReport verify_blocks(const FiniteGroup& grp, int cap) {
  CheckReport rep;
  auto bs = blocks(grp, cap);
  auto arrows = groupoid_arrows(grp, cap);

  auto run = [&rep](const std::string& name, auto&& body) {
    CheckResult r;
    r.name = name;
    body(r);
    rep.checks.push_back(std::move(r));
  };

  // arrows of one block, in basis order
  auto block_arrows = [&](const BlockInfo& b) {
    std::vector<Arrow> out;
    for (const Arrow& a : arrows) {
      if (b.member_index.count(a.X)) out.push_back(a);
    }
    return out;
  };

  run("blocks_partition_the_arrow_basis", [&](CheckResult& r) {
    long covered = 0;
    for (const auto& b : bs) {
      long in_block = static_cast<long>(block_arrows(b).size());
      ++r.cases;
      if (in_block != b.dim) {
        r.pass = false;
        r.counterexample = "X=" + std::to_string(b.rep);
        return;
      }
      covered += in_block;
    }
    ++r.cases;
    if (covered != static_cast<long>(arrows.size())) {
      r.pass = false;
      r.counterexample = "block dims do not add up to the arrow count";
    }
  });

  run("matrix_picture_inverts_on_arrows", [&](CheckResult& r) {
    for (const auto& b : bs) {
      for (const Arrow& a : block_arrows(b)) {
        AlgebraElement x(grp);
        x.add(a, 1);
        ++r.cases;
        if (!(psi_block(grp, b, phi_block(grp, b, x)) == x)) {
          r.pass = false;
          r.counterexample = "X=" + std::to_string(b.rep) + " arrow (" +
                             std::to_string(a.g) + "," + std::to_string(a.X) + ")";
          return;
        }
      }
    }
  });

  run("matrix_picture_inverts_on_matrix_units", [&](CheckResult& r) {
    for (const auto& b : bs) {
      for (int i = 0; i < b.n; ++i) {
        for (int j = 0; j < b.n; ++j) {
          for (int t = 0; t < grp.order(); ++t) {
            if (!subset_contains(b.isotropy_mask, t)) continue;
            GroupAlgebraMatrix m(grp, b.isotropy_mask, b.n);
            m.add(i, j, t, 1);
            ++r.cases;
            if (!(phi_block(grp, b, psi_block(grp, b, m)) == m)) {
              r.pass = false;
              r.counterexample = "X=" + std::to_string(b.rep) + " unit (" +
                                 std::to_string(i) + "," + std::to_string(j) + "," +
                                 std::to_string(t) + ")";
              return;
            }
          }
        }
      }
    }
  });

  run("matrix_picture_is_multiplicative", [&](CheckResult& r) {
    for (const auto& b : bs) {
      auto basis = block_arrows(b);
      std::vector<GroupAlgebraMatrix> img;
      img.reserve(basis.size());
      for (const Arrow& a : basis) {
        AlgebraElement x(grp);
        x.add(a, 1);
        img.push_back(phi_block(grp, b, x));
      }
      for (size_t p = 0; p < basis.size(); ++p) {
        for (size_t q = 0; q < basis.size(); ++q) {
          AlgebraElement x(grp), y(grp);
          x.add(basis[p], 1);
          y.add(basis[q], 1);
          ++r.cases;
          if (!(phi_block(grp, b, x * y) == img[p] * img[q])) {
            r.pass = false;
            r.counterexample = "X=" + std::to_string(b.rep);
            return;
          }
        }
      }
    }
  });

  run("block_unit_maps_to_identity_matrix", [&](CheckResult& r) {
    for (const auto& b : bs) {
      ++r.cases;
      if (!(phi_block(grp, b, gamma_idem(grp, b.rep)) ==
            GroupAlgebraMatrix::identity(grp, b.isotropy_mask, b.n))) {
        r.pass = false;
        r.counterexample = "X=" + std::to_string(b.rep);
        return;
      }
    }
  });

  return rep;
}

}  // namespace parfus
