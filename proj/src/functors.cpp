#include "parfus/functors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace parfus {
namespace {

std::string mask_str(uint64_t m) {
  return "mask=" + std::to_string(m);
}

}  // namespace

ChristmasImage christmas_images(AlgebraContext& ctx, const Subgroup& h) {
  ChristmasImage out;
  out.subgroup_mask = h.mask;
  const CharacterTable& t = ctx.isotropy_table(h.mask);
  for (int row = 0; row < t.rows(); ++row) {
    out.images.push_back(canonicalize_label(ctx, h.mask, row));
  }
  return out;
}

CheckReport christmas_verify(const FiniteGroup& grp, int cap) {
  CheckReport rep;
  AlgebraContext ctx = make_context(grp, cap);
  auto subs = subgroups(grp, cap);
  auto labels = simple_labels(ctx);
  std::map<std::pair<int, int>, int> lab_index;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
    lab_index[{labels[i].block, labels[i].alpha}] = i;
  }

  auto run = [&rep](const std::string& name, auto&& body) {
    CheckResult r;
    r.name = name;
    body(r);
    rep.checks.push_back(std::move(r));
  };

  run("subgroup_subsets_are_orbit_fixed_points", [&](CheckResult& r) {
    for (const auto& h : subs) {
      const OrbitInfo& o = ctx.orbits.orbit_of(h.mask);
      ++r.cases;
      if (o.rep != h.mask || o.members.size() != 1 || o.isotropy_mask != h.mask ||
          o.transversal != std::vector<int>{0}) {
        r.pass = false;
        r.counterexample = mask_str(h.mask);
        return;
      }
    }
  });

  run("images_injective_and_dimension_preserving", [&](CheckResult& r) {
    for (const auto& h : subs) {
      auto img = christmas_images(ctx, h);
      const CharacterTable& t = ctx.isotropy_table(h.mask);
      std::set<std::pair<int, int>> seen;
      for (int row = 0; row < t.rows(); ++row) {
        ++r.cases;
        const SimpleLabel& l = img.images[row];
        bool fresh = seen.insert({l.block, l.alpha}).second;
        if (!fresh || l.dim != t.degrees[row] || l.rep != h.mask) {
          r.pass = false;
          r.counterexample = mask_str(h.mask) + " row=" + std::to_string(row);
          return;
        }
      }
      if (img.images[0].alpha != 0) {  // trivial character to the trivial label
        r.pass = false;
        r.counterexample = mask_str(h.mask) + " trivial row misplaced";
        return;
      }
    }
  });

  run("fusion_constants_match_subgroup_tensor_products", [&](CheckResult& r) {
    for (const auto& h : subs) {
      auto img = christmas_images(ctx, h);
      const CharacterTable& t = ctx.isotropy_table(h.mask);
      for (int a = 0; a < t.rows(); ++a) {
        for (int b = 0; b < t.rows(); ++b) {
          auto mult = tensor_multiplicities(t, a, b);
          std::vector<int> want(labels.size(), 0);
          for (int c = 0; c < t.rows(); ++c) {
            want[lab_index.at({img.images[c].block, img.images[c].alpha})] = mult[c];
          }
          ++r.cases;
          if (fuse(ctx, img.images[a], img.images[b]) != want) {
            r.pass = false;
            r.counterexample =
                mask_str(h.mask) + " rows " + std::to_string(a) + "," + std::to_string(b);
            return;
          }
        }
      }
    }
  });

  return rep;
}

std::optional<MatryoshkaData> matryoshka_functor(AlgebraContext& ctx, const Subgroup& h) {
  const FiniteGroup& g = *ctx.grp;
  auto ab = adapted_basis(g, h);
  if (!ab) return std::nullopt;
  MatryoshkaData md{subgroup_as_group(h), std::move(*ab), {}, {}, {}};
  int n = g.order();
  const auto& fac = md.adapted.basis.factors;

  md.projection.resize(n);
  for (int x = 0; x < n; ++x) {
    int img = 0;
    for (size_t i = 0; i < fac.size(); ++i) {
      long e = static_cast<long>(md.adapted.basis.coords[x][i]) * md.adapted.divisors[i];
      img = g.mul(img, g.power(fac[i].gen, e));
    }
    md.projection[x] = img;
  }

  AlgebraContext hctx = make_context(md.sub.group, ctx.cap);
  md.source_labels = simple_labels(hctx);
  for (const auto& sl : md.source_labels) {
    // preimage subset
    ESubset y = 0;
    for (int x = 0; x < n; ++x) {
      if (subset_contains(sl.rep, md.sub.from_parent[md.projection[x]])) {
        y |= static_cast<ESubset>(1) << x;
      }
    }
    // character of the preimage isotropy: beta composed with the projection
    uint64_t iso_y = isotropy(g, y).mask;
    const SubgroupAsGroup& sgy = ctx.isotropy_group(iso_y);
    const CharacterTable& tgy = ctx.isotropy_table(iso_y);
    uint64_t hx_mask = isotropy(md.sub.group, sl.rep).mask;
    const SubgroupAsGroup& shx = hctx.isotropy_group(hx_mask);
    const CharacterTable& thx = hctx.isotropy_table(hx_mask);
    int row = -1;
    for (int rr = 0; rr < tgy.rows() && row < 0; ++rr) {
      bool match = true;
      for (int sl2 = 0; sl2 < sgy.group.order() && match; ++sl2) {
        int sp = sgy.to_parent[sl2];
        int fp = md.sub.from_parent[md.projection[sp]];  // phi(s), local to H
        if (std::abs(tgy.value_at(rr, sl2) - thx.value_at(sl.alpha, shx.from_parent[fp])) >
            1e-6) {
          match = false;
        }
      }
      if (match) row = rr;
    }
    if (row < 0) {
      throw std::logic_error("matryoshka_functor: pulled-back character matches no row");
    }
    md.images.push_back(canonicalize_label(ctx, y, row));
  }
  return md;
}

CheckReport matryoshka_verify(const FiniteGroup& grp, int cap) {
  CheckReport rep;
  AlgebraContext ctx = make_context(grp, cap);
  auto labels = simple_labels(ctx);
  std::map<std::pair<int, int>, int> lab_index;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
    lab_index[{labels[i].block, labels[i].alpha}] = i;
  }

  struct Entry {
    uint64_t mask;
    MatryoshkaData md;
  };
  std::vector<Entry> defined;
  for (const auto& h : subgroups(grp, cap)) {
    auto md = matryoshka_functor(ctx, h);
    if (md) defined.push_back(Entry{h.mask, std::move(*md)});
  }

  auto run = [&rep](const std::string& name, auto&& body) {
    CheckResult r;
    r.name = name;
    body(r);
    rep.checks.push_back(std::move(r));
  };

  run("projection_is_morphism_onto_subgroup", [&](CheckResult& r) {
    for (const auto& e : defined) {
      GroupMorphism phi{&grp, &grp, e.md.projection};
      uint64_t image = 0;
      long kernel = 0;
      for (int x = 0; x < grp.order(); ++x) {
        image |= static_cast<uint64_t>(1) << e.md.projection[x];
        if (e.md.projection[x] == 0) kernel++;
      }
      ++r.cases;
      if (!phi.is_morphism() || image != e.mask ||
          kernel * __builtin_popcountll(e.mask) != grp.order()) {
        r.pass = false;
        r.counterexample = mask_str(e.mask);
        return;
      }
    }
  });

  run("preimage_isotropy_is_isotropy_preimage", [&](CheckResult& r) {
    for (const auto& e : defined) {
      for (const auto& sl : e.md.source_labels) {
        ESubset y = 0;
        uint64_t want_iso = 0;
        uint64_t hx = isotropy(e.md.sub.group, sl.rep).mask;
        for (int x = 0; x < grp.order(); ++x) {
          int fp = e.md.sub.from_parent[e.md.projection[x]];
          if (subset_contains(sl.rep, fp)) y |= static_cast<ESubset>(1) << x;
          if (subset_contains(hx, fp)) want_iso |= static_cast<uint64_t>(1) << x;
        }
        ++r.cases;
        if (isotropy(grp, y).mask != want_iso) {
          r.pass = false;
          r.counterexample = mask_str(e.mask) + " X=" + std::to_string(sl.rep);
          return;
        }
      }
    }
  });

  run("label_map_injective", [&](CheckResult& r) {
    for (const auto& e : defined) {
      std::set<std::pair<int, int>> seen;
      for (const auto& img : e.md.images) {
        ++r.cases;
        if (!seen.insert({img.block, img.alpha}).second) {
          r.pass = false;
          r.counterexample = mask_str(e.mask);
          return;
        }
      }
    }
  });

  run("dimensions_preserved", [&](CheckResult& r) {
    for (const auto& e : defined) {
      for (size_t i = 0; i < e.md.source_labels.size(); ++i) {
        ++r.cases;
        if (e.md.images[i].dim != e.md.source_labels[i].dim) {
          r.pass = false;
          r.counterexample = mask_str(e.mask) + " " + label_name(e.md.source_labels[i]);
          return;
        }
      }
    }
  });

  run("identity_on_full_subgroup", [&](CheckResult& r) {
    for (const auto& e : defined) {
      if (__builtin_popcountll(e.mask) != grp.order()) continue;
      ++r.cases;
      if (e.md.images != e.md.source_labels) {
        r.pass = false;
        r.counterexample = "full-subgroup projection is not the identity map";
        return;
      }
    }
  });

  run("fusion_constants_preserved", [&](CheckResult& r) {
    for (const auto& e : defined) {
      if (__builtin_popcountll(e.mask) == grp.order()) continue;  // identity case above
      AlgebraContext hctx = make_context(e.md.sub.group, cap);
      auto hlabels = simple_labels(hctx);
      for (size_t a = 0; a < hlabels.size(); ++a) {
        for (size_t b = 0; b < hlabels.size(); ++b) {
          auto src = fuse(hctx, hlabels[a], hlabels[b]);
          std::vector<int> want(labels.size(), 0);
          for (size_t c = 0; c < hlabels.size(); ++c) {
            if (src[c] != 0) {
              const SimpleLabel& ic = e.md.images[c];
              want[lab_index.at({ic.block, ic.alpha})] = src[c];
            }
          }
          ++r.cases;
          if (fuse(ctx, e.md.images[a], e.md.images[b]) != want) {
            r.pass = false;
            r.counterexample = mask_str(e.mask) + " " + label_name(hlabels[a]) + " x " +
                               label_name(hlabels[b]);
            return;
          }
        }
      }
    }
  });

  return rep;
}

ChainReport matryoshka_chain(const FiniteGroup& grp, uint64_t h_mask, uint64_t k_mask,
                             int cap) {
  ChainReport cr;
  if ((k_mask & ~h_mask) != 0) {
    cr.detail = "K is not contained in H";
    return cr;
  }
  AlgebraContext ctx = make_context(grp, cap);
  auto f_gh = matryoshka_functor(ctx, Subgroup{&grp, h_mask});
  auto f_gk = matryoshka_functor(ctx, Subgroup{&grp, k_mask});
  if (!f_gh || !f_gk) {
    cr.detail = "no adapted basis for a direct stage";
    return cr;
  }
  uint64_t k_local = 0;
  for (int x = 0; x < grp.order(); ++x) {
    if (subset_contains(k_mask, x)) {
      k_local |= static_cast<uint64_t>(1) << f_gh->sub.from_parent[x];
    }
  }
  AlgebraContext hctx = make_context(f_gh->sub.group, cap);
  auto f_hk = matryoshka_functor(hctx, Subgroup{&f_gh->sub.group, k_local});
  if (!f_hk) {
    cr.detail = "no adapted basis for the inner stage";
    return cr;
  }
  cr.applicable = true;
  if (f_hk->source_labels != f_gk->source_labels) {
    cr.detail = "source label lists disagree between the two routes";
    return cr;
  }
  std::map<std::pair<int, int>, size_t> h_index;
  for (size_t i = 0; i < f_gh->source_labels.size(); ++i) {
    h_index[{f_gh->source_labels[i].block, f_gh->source_labels[i].alpha}] = i;
  }
  cr.coherent = true;
  for (size_t i = 0; i < f_gk->source_labels.size(); ++i) {
    const SimpleLabel& mid = f_hk->images[i];
    const SimpleLabel& composite = f_gh->images[h_index.at({mid.block, mid.alpha})];
    if (!(composite == f_gk->images[i])) {
      cr.coherent = false;
      std::ostringstream os;
      os << "label " << label_name(f_gk->source_labels[i]) << ": composite "
         << label_name(composite) << " vs direct " << label_name(f_gk->images[i]);
      cr.detail = os.str();
      return cr;
    }
  }
  return cr;
}

}  // namespace parfus
