#include "parfus/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace parfus {

SimpleLabel canonicalize_label(AlgebraContext& ctx, ESubset y, int beta_row) {
  const FiniteGroup& g = *ctx.grp;
  auto [pos, t] = ctx.orbits.index.at(y);  // y = t * rep
  const BlockInfo& b = ctx.block_list[pos];
  const SubgroupAsGroup& sgx = ctx.isotropy_group(b.isotropy_mask);
  const CharacterTable& tx = ctx.isotropy_table(b.isotropy_mask);
  uint64_t iso_y = isotropy(g, y).mask;
  const SubgroupAsGroup& sgy = ctx.isotropy_group(iso_y);
  const CharacterTable& ty = ctx.isotropy_table(iso_y);
  if (beta_row < 0 || beta_row >= ty.rows()) {
    throw std::invalid_argument("canonicalize_label: row out of range");
  }
  // wanted: the row alpha with alpha(s) = beta(t s t^{-1}); characters
  // separate irreducibles, so value matching pins it down
  for (int row = 0; row < tx.rows(); ++row) {
    bool match = true;
    for (int sl = 0; sl < sgx.group.order() && match; ++sl) {
      int up = g.mul(t, g.mul(sgx.to_parent[sl], g.inverse(t)));
      if (std::abs(tx.value_at(row, sl) - ty.value_at(beta_row, sgy.from_parent[up])) > 1e-6) {
        match = false;
      }
    }
    if (match) {
      return SimpleLabel{b.rep, pos, row, static_cast<long>(b.n) * tx.degrees[row]};
    }
  }
  throw std::logic_error("canonicalize_label: transported character matches no row");
}

std::vector<int> fuse(AlgebraContext& ctx, const SimpleLabel& a, const SimpleLabel& b) {
  int total = 0;
  std::vector<int> offsets(ctx.block_list.size(), 0);
  for (size_t i = 0; i < ctx.block_list.size(); ++i) {
    offsets[i] = total;
    total += ctx.isotropy_table(ctx.block_list[i].isotropy_mask).rows();
  }
  std::vector<int> out(total, 0);
  if (a.block != b.block) return out;  // fibers live on disjoint orbits
  const CharacterTable& t = ctx.isotropy_table(ctx.block_list[a.block].isotropy_mask);
  auto mult = tensor_multiplicities(t, a.alpha, b.alpha);
  for (size_t c = 0; c < mult.size(); ++c) out[offsets[a.block] + c] = mult[c];
  return out;
}

FusionTable fusion_table(AlgebraContext& ctx) {
  FusionTable ft;
  ft.labels = simple_labels(ctx);
  size_t l = ft.labels.size();
  ft.coeff.resize(l);
  for (size_t a = 0; a < l; ++a) {
    ft.coeff[a].resize(l);
    for (size_t b = 0; b < l; ++b) ft.coeff[a][b] = fuse(ctx, ft.labels[a], ft.labels[b]);
  }
  return ft;
}

std::vector<SimpleLabel> unit_decomposition(AlgebraContext& ctx) {
  std::vector<SimpleLabel> out;
  for (int bi = 0; bi < static_cast<int>(ctx.block_list.size()); ++bi) {
    const BlockInfo& b = ctx.block_list[bi];
    out.push_back(SimpleLabel{b.rep, bi, 0, static_cast<long>(b.n)});  // row 0 is trivial
  }
  return out;
}

std::vector<long> fiber_dims(AlgebraContext& ctx, const SimpleLabel& l) {
  auto subsets = e_subsets(*ctx.grp, ctx.cap);
  std::vector<long> dims(subsets.size(), 0);
  long d = l.dim / ctx.block_list[l.block].n;  // deg(alpha)
  for (ESubset m : ctx.orbits.orbits[l.block].members) {
    auto it = std::lower_bound(subsets.begin(), subsets.end(), m);
    dims[it - subsets.begin()] = d;
  }
  return dims;
}

BalancedInfo balanced_components(AlgebraContext& ctx, const SimpleLabel& a,
                                 const SimpleLabel& b) {
  auto fa = fiber_dims(ctx, a);
  auto fb = fiber_dims(ctx, b);
  BalancedInfo info;
  info.fibers.resize(fa.size());
  for (size_t i = 0; i < fa.size(); ++i) {
    info.fibers[i] = fa[i] * fb[i];
    info.total += info.fibers[i];
  }
  return info;
}

std::string label_name(const SimpleLabel& l) {
  return "X" + std::to_string(l.rep) + ".a" + std::to_string(l.alpha);
}

namespace {

std::string cell_str(const FusionTable& t, const std::vector<int>& coeff) {
  std::string s;
  for (size_t c = 0; c < coeff.size(); ++c) {
    if (coeff[c] == 0) continue;
    if (!s.empty()) s += " + ";
    if (coeff[c] > 1) s += std::to_string(coeff[c]) + "·";
    s += label_name(t.labels[c]);
  }
  return s.empty() ? "0" : s;
}

}  // namespace

std::string fusion_table_markdown(AlgebraContext& ctx, const FusionTable& t) {
  (void)ctx;
  std::ostringstream os;
  os << "| ⊠ |";
  for (const auto& l : t.labels) os << " " << label_name(l) << " |";
  os << "\n|---|";
  for (size_t i = 0; i < t.labels.size(); ++i) os << "---|";
  os << "\n";
  for (size_t a = 0; a < t.labels.size(); ++a) {
    os << "| " << label_name(t.labels[a]) << " |";
    for (size_t b = 0; b < t.labels.size(); ++b) os << " " << cell_str(t, t.coeff[a][b]) << " |";
    os << "\n";
  }
  return os.str();
}

std::string fusion_table_csv(AlgebraContext& ctx, const FusionTable& t) {
  (void)ctx;
  std::ostringstream os;
  os << "a,b,c,mult\n";
  for (size_t a = 0; a < t.labels.size(); ++a) {
    for (size_t b = 0; b < t.labels.size(); ++b) {
      for (size_t c = 0; c < t.labels.size(); ++c) {
        if (t.coeff[a][b][c] != 0) {
          os << label_name(t.labels[a]) << "," << label_name(t.labels[b]) << ","
             << label_name(t.labels[c]) << "," << t.coeff[a][b][c] << "\n";
        }
      }
    }
  }
  return os.str();
}

CheckReport verify_fusion(const FiniteGroup& grp, int cap) {
  CheckReport rep;
  AlgebraContext ctx = make_context(grp, cap);
  FusionTable t = fusion_table(ctx);
  const auto& labels = t.labels;
  size_t nl = labels.size();
  auto unit = unit_decomposition(ctx);

  auto run = [&rep](const std::string& name, auto&& body) {
    CheckResult r;
    r.name = name;
    body(r);
    rep.checks.push_back(std::move(r));
  };

  auto pair_str = [&](size_t a, size_t b) {
    return label_name(labels[a]) + " x " + label_name(labels[b]);
  };

  run("unit_acts_as_two_sided_identity", [&](CheckResult& r) {
    for (size_t a = 0; a < nl; ++a) {
      std::vector<int> left(nl, 0), right(nl, 0), want(nl, 0);
      want[a] = 1;
      for (const auto& u : unit) {
        auto lu = fuse(ctx, u, labels[a]);
        auto ru = fuse(ctx, labels[a], u);
        for (size_t c = 0; c < nl; ++c) {
          left[c] += lu[c];
          right[c] += ru[c];
        }
      }
      ++r.cases;
      if (left != want || right != want) {
        r.pass = false;
        r.counterexample = label_name(labels[a]);
        return;
      }
    }
  });

  run("products_respect_orbit_blocks", [&](CheckResult& r) {
    std::vector<int> zero(nl, 0);
    for (size_t a = 0; a < nl; ++a) {
      for (size_t b = 0; b < nl; ++b) {
        if (labels[a].block == labels[b].block) continue;
        ++r.cases;
        if (t.coeff[a][b] != zero || balanced_components(ctx, labels[a], labels[b]).total != 0) {
          r.pass = false;
          r.counterexample = pair_str(a, b);
          return;
        }
      }
    }
  });

  run("fusion_is_associative", [&](CheckResult& r) {
    for (size_t a = 0; a < nl; ++a) {
      for (size_t b = 0; b < nl; ++b) {
        if (labels[a].block != labels[b].block) continue;
        for (size_t c = 0; c < nl; ++c) {
          if (labels[c].block != labels[a].block) continue;
          std::vector<long> lhs(nl, 0), rhs(nl, 0);
          for (size_t d = 0; d < nl; ++d) {
            if (t.coeff[a][b][d] != 0) {
              for (size_t e = 0; e < nl; ++e) {
                lhs[e] += static_cast<long>(t.coeff[a][b][d]) * t.coeff[d][c][e];
              }
            }
            if (t.coeff[b][c][d] != 0) {
              for (size_t e = 0; e < nl; ++e) {
                rhs[e] += static_cast<long>(t.coeff[a][d][e]) * t.coeff[b][c][d];
              }
            }
          }
          ++r.cases;
          if (lhs != rhs) {
            r.pass = false;
            r.counterexample = pair_str(a, b) + " x " + label_name(labels[c]);
            return;
          }
        }
      }
    }
  });

  run("balanced_dimension_is_multiplicative", [&](CheckResult& r) {
    for (size_t a = 0; a < nl; ++a) {
      for (size_t b = 0; b < nl; ++b) {
        if (labels[a].block != labels[b].block) continue;
        long want = 0;
        for (size_t c = 0; c < nl; ++c) {
          want += static_cast<long>(t.coeff[a][b][c]) * labels[c].dim;
        }
        ++r.cases;
        if (balanced_components(ctx, labels[a], labels[b]).total != want) {
          r.pass = false;
          r.counterexample = pair_str(a, b);
          return;
        }
      }
    }
  });

  return rep;
}

}  // namespace parfus
