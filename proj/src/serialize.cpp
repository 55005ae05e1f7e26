#include "parfus/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace parfus {
namespace {

std::string subset_str(uint64_t m) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int i = 0; i < 64; ++i) {
    if (m >> i & 1) {
      if (!first) os << ",";
      first = false;
      os << i;
    }
  }
  os << "}";
  return os.str();
}

Json label_to_json(const SimpleLabel& l) {
  return Json{{"name", label_name(l)},
              {"X", l.rep},
              {"alpha", l.alpha},
              {"dim", l.dim}};
}

Json report_to_json(const CheckReport& rep) {
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json jc{{"name", c.name}, {"pass", c.pass}, {"cases", c.cases}};
    if (!c.pass) jc["counterexample"] = c.counterexample;
    checks.push_back(std::move(jc));
  }
  return Json{{"pass", rep.all_pass()}, {"checks", std::move(checks)}};
}

}  // namespace

Json group_to_json(const FiniteGroup& g) {
  return Json{{"label", g.label}, {"order", g.n}, {"table", g.table}};
}

FiniteGroup group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("table")) {
    throw std::runtime_error("group JSON needs \"order\" and \"table\" fields");
  }
  int n = j.at("order").get<int>();
  auto table = j.at("table").get<std::vector<std::vector<int>>>();
  if (static_cast<int>(table.size()) != n) {
    throw std::runtime_error("group JSON: table size does not match order");
  }
  std::string label = j.value("label", "G" + std::to_string(n));
  return FiniteGroup::from_cayley(std::move(table), label);
}

FiniteGroup load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open group file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw std::runtime_error("group file " + path + ": " + e.what());
  }
  return group_from_json(j);
}

Json info_to_json(const FiniteGroup& g, int cap) {
  auto d = dimension_info(g, cap);
  auto ctx = make_context(g, cap);
  long nclasses = 0;
  for (const auto& b : ctx.block_list) {
    nclasses += ctx.isotropy_table(b.isotropy_mask).rows();
  }
  return Json{{"group", Json{{"label", g.label}, {"order", g.n}, {"abelian", g.is_abelian()}}},
              {"subsets", static_cast<long>(1) << (g.n - 1)},
              {"arrows", d.arrow_count},
              {"dimension", d.arrow_count},
              {"dimension_formula", d.formula_value},
              {"orbits", ctx.orbits.orbits.size()},
              {"blocks", ctx.block_list.size()},
              {"simple_labels", nclasses},
              {"cap", cap}};
}

std::string info_markdown(const FiniteGroup& g, int cap) {
  Json j = info_to_json(g, cap);
  std::ostringstream os;
  os << "# " << g.label << "\n\n";
  os << "| quantity | value |\n|---|---|\n";
  os << "| order | " << g.n << " |\n";
  os << "| abelian | " << (g.is_abelian() ? "yes" : "no") << " |\n";
  os << "| identity-containing subsets | " << j["subsets"] << " |\n";
  os << "| groupoid arrows (= algebra dimension) | " << j["arrows"] << " |\n";
  os << "| dimension by formula | " << j["dimension_formula"] << " |\n";
  os << "| subset orbits (= blocks) | " << j["blocks"] << " |\n";
  os << "| simple labels | " << j["simple_labels"] << " |\n";
  return os.str();
}

Json decompose_to_json(const FiniteGroup& g, int cap) {
  auto bs = blocks(g, cap);
  auto sizes = wedderburn_summary(g, cap);
  Json jb = Json::array();
  long dim = 0;
  for (const auto& b : bs) {
    dim += b.dim;
    jb.push_back(Json{{"X", b.rep},
                      {"subset", subset_str(b.rep)},
                      {"n", b.n},
                      {"isotropy_order", b.isotropy_order()},
                      {"dim", b.dim}});
  }
  return Json{{"group", g.label},
              {"dimension", dim},
              {"blocks", std::move(jb)},
              {"matrix_sizes", sizes},
              {"wedderburn", wedderburn_compact_string(sizes)}};
}

std::string decompose_markdown(const FiniteGroup& g, int cap) {
  auto bs = blocks(g, cap);
  std::ostringstream os;
  os << "# " << g.label << " block decomposition\n\n";
  os << "| X | orbit size n | isotropy order | block dim |\n|---|---|---|---|\n";
  for (const auto& b : bs) {
    os << "| " << subset_str(b.rep) << " | " << b.n << " | " << b.isotropy_order()
       << " | " << b.dim << " |\n";
  }
  os << "\n" << wedderburn_footer_string(wedderburn_summary(g, cap)) << "\n";
  return os.str();
}

std::string decompose_csv(const FiniteGroup& g, int cap) {
  auto bs = blocks(g, cap);
  std::ostringstream os;
  os << "X,n,isotropy_order,dim\n";
  for (const auto& b : bs) {
    os << b.rep << "," << b.n << "," << b.isotropy_order() << "," << b.dim << "\n";
  }
  return os.str();
}

Json simples_to_json(AlgebraContext& ctx) {
  auto labels = simple_labels(ctx);
  Json jl = Json::array();
  long sum_sq = 0;
  for (const auto& l : labels) {
    sum_sq += static_cast<long>(l.dim) * l.dim;
    jl.push_back(label_to_json(l));
  }
  return Json{{"group", ctx.grp->label},
              {"labels", std::move(jl)},
              {"count", labels.size()},
              {"sum_dim_sq", sum_sq}};
}

std::string simples_markdown(AlgebraContext& ctx) {
  auto labels = simple_labels(ctx);
  std::ostringstream os;
  os << "# simple modules of the partial group algebra of " << ctx.grp->label << "\n\n";
  os << "| label | subset | character row | dim |\n|---|---|---|---|\n";
  long sum_sq = 0;
  for (const auto& l : labels) {
    sum_sq += static_cast<long>(l.dim) * l.dim;
    os << "| " << label_name(l) << " | " << subset_str(l.rep) << " | a" << l.alpha
       << " | " << l.dim << " |\n";
  }
  os << "\nsum of squared dims: " << sum_sq << "\n";
  return os.str();
}

std::string simples_csv(AlgebraContext& ctx) {
  auto labels = simple_labels(ctx);
  std::ostringstream os;
  os << "name,X,alpha,dim\n";
  for (const auto& l : labels) {
    os << label_name(l) << "," << l.rep << "," << l.alpha << "," << l.dim << "\n";
  }
  return os.str();
}

Json fusion_to_json(AlgebraContext& ctx, const FusionTable& t) {
  Json names = Json::array();
  for (const auto& l : t.labels) names.push_back(label_name(l));
  Json products = Json::array();
  for (size_t a = 0; a < t.labels.size(); ++a) {
    for (size_t b = 0; b < t.labels.size(); ++b) {
      for (size_t c = 0; c < t.labels.size(); ++c) {
        if (t.coeff[a][b][c] != 0) {
          products.push_back(Json{{"a", names[a]},
                                  {"b", names[b]},
                                  {"c", names[c]},
                                  {"mult", t.coeff[a][b][c]}});
        }
      }
    }
  }
  Json units = Json::array();
  for (const auto& u : unit_decomposition(ctx)) units.push_back(label_name(u));
  return Json{{"group", ctx.grp->label},
              {"labels", std::move(names)},
              {"unit", std::move(units)},
              {"products", std::move(products)}};
}

Json suites_to_json(const FiniteGroup& g, const SuiteResults& rs) {
  Json suites = Json::array();
  bool pass = true;
  for (const auto& [name, rep] : rs) {
    pass = pass && rep.all_pass();
    Json js = report_to_json(rep);
    js["suite"] = name;
    suites.push_back(std::move(js));
  }
  return Json{{"group", g.label}, {"pass", pass}, {"suites", std::move(suites)}};
}

std::string suites_markdown(const FiniteGroup& g, const SuiteResults& rs) {
  std::ostringstream os;
  os << "# verification of the partial group algebra of " << g.label << "\n\n";
  os << "| suite | check | cases | result |\n|---|---|---|---|\n";
  bool pass = true;
  std::string first_bad;
  for (const auto& [name, rep] : rs) {
    for (const auto& c : rep.checks) {
      os << "| " << name << " | " << c.name << " | " << c.cases << " | "
         << (c.pass ? "pass" : "FAIL") << " |\n";
      if (!c.pass) {
        pass = false;
        if (first_bad.empty()) first_bad = c.name + ": " + c.counterexample;
      }
    }
  }
  os << "\n" << (pass ? "all checks passed" : "FAILED at " + first_bad) << "\n";
  return os.str();
}

Json christmas_to_json(const FiniteGroup& g, const ChristmasImage& img) {
  Json rows = Json::array();
  for (size_t r = 0; r < img.images.size(); ++r) {
    Json jr = label_to_json(img.images[r]);
    jr["row"] = r;
    rows.push_back(std::move(jr));
  }
  return Json{{"group", g.label},
              {"subgroup_mask", img.subgroup_mask},
              {"subgroup", subset_str(img.subgroup_mask)},
              {"subgroup_order", __builtin_popcountll(img.subgroup_mask)},
              {"images", std::move(rows)}};
}

std::string christmas_markdown(const FiniteGroup& g, const ChristmasImage& img) {
  std::ostringstream os;
  os << "# irreducibles of the subgroup " << subset_str(img.subgroup_mask) << " of "
     << g.label << " as simple labels\n\n";
  os << "| character row | label | dim |\n|---|---|---|\n";
  for (size_t r = 0; r < img.images.size(); ++r) {
    os << "| a" << r << " | " << label_name(img.images[r]) << " | " << img.images[r].dim
       << " |\n";
  }
  return os.str();
}

Json matryoshka_to_json(const FiniteGroup& g, uint64_t subgroup_mask,
                        const std::optional<MatryoshkaData>& md) {
  Json out{{"group", g.label},
           {"subgroup_mask", subgroup_mask},
           {"subgroup", subset_str(subgroup_mask)},
           {"defined", md.has_value()}};
  if (!md) {
    out["reason"] = "no adapted basis aligns the group with this subgroup";
    return out;
  }
  out["projection"] = md->projection;
  Json pairs = Json::array();
  for (size_t i = 0; i < md->source_labels.size(); ++i) {
    pairs.push_back(Json{{"source", label_to_json(md->source_labels[i])},
                         {"image", label_to_json(md->images[i])}});
  }
  out["labels"] = std::move(pairs);
  return out;
}

std::string matryoshka_markdown(const FiniteGroup& g, uint64_t subgroup_mask,
                                const std::optional<MatryoshkaData>& md) {
  std::ostringstream os;
  os << "# simple labels of the partial group algebra of " << subset_str(subgroup_mask)
     << " inside that of " << g.label << "\n\n";
  if (!md) {
    os << "not defined: no adapted basis aligns the group with this subgroup\n";
    return os.str();
  }
  os << "| source label | image label | dim |\n|---|---|---|\n";
  for (size_t i = 0; i < md->source_labels.size(); ++i) {
    os << "| " << label_name(md->source_labels[i]) << " | " << label_name(md->images[i])
       << " | " << md->images[i].dim << " |\n";
  }
  return os.str();
}

}  // namespace parfus
