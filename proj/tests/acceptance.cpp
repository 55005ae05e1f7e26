// End-to-end acceptance gate: one numbered line per criterion, exit code =
// number of failures. Every comparison here is exact (integers and strings);
// the numerical character-table internals keep their own pinned tolerances
// inside the library.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "parfus/functors.hpp"
#include "parfus/serialize.hpp"
#include "parfus/weak_hopf.hpp"

using namespace parfus;

namespace {

FiniteGroup make_dihedral8() {
  // permutations of (0,1,2,3): rotations r^k and reflections s r^k
  auto rot = [](std::vector<int> v) {
    return std::vector<int>{v[3], v[0], v[1], v[2]};
  };
  auto flip = [](std::vector<int> v) {
    return std::vector<int>{v[0], v[3], v[2], v[1]};
  };
  std::vector<std::vector<int>> elems;
  std::vector<int> base{0, 1, 2, 3};
  auto cur = base;
  for (int i = 0; i < 4; ++i) {
    elems.push_back(cur);
    cur = rot(cur);
  }
  cur = flip(base);
  for (int i = 0; i < 4; ++i) {
    elems.push_back(cur);
    cur = rot(cur);
  }
  auto find = [&](const std::vector<int>& p) {
    for (size_t i = 0; i < elems.size(); ++i)
      if (elems[i] == p) return (int)i;
    return -1;
  };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      std::vector<int> c(4);
      for (int x = 0; x < 4; ++x) c[x] = elems[a][elems[b][x]];
      t[a][b] = find(c);
    }
  return FiniteGroup::from_cayley(t, "D4");
}

FiniteGroup make_quaternion8() {
  // index = 2*axis + (negative ? 1 : 0), axes 0=1, 1=i, 2=j, 3=k
  auto mul = [](int x, int y) {
    int ax = x / 2, sx = x % 2, ay = y / 2, sy = y % 2;
    int sign = sx ^ sy;
    if (ax == 0) return 2 * ay + sign;
    if (ay == 0) return 2 * ax + sign;
    if (ax == ay) return sign ^ 1;  // i*i = -1
    int az = 6 - ax - ay;           // the remaining axis
    bool cyclic = (ay - ax + 3) % 3 == 1;  // (i,j)->k, (j,k)->i, (k,i)->j
    return 2 * az + (cyclic ? sign : sign ^ 1);
  };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) t[a][b] = mul(a, b);
  return FiniteGroup::from_cayley(t, "Q8");
}

FiniteGroup product(int a, int b) {
  return make_direct_product(make_cyclic(a), make_cyclic(b));
}

std::vector<FiniteGroup> groups_up_to_order_8() {
  std::vector<FiniteGroup> gs;
  for (int n = 1; n <= 8; ++n) gs.push_back(make_cyclic(n));
  gs.push_back(product(2, 2));
  gs.push_back(make_symmetric(3));
  gs.push_back(product(2, 4));
  gs.push_back(make_direct_product(product(2, 2), make_cyclic(2)));
  gs.push_back(make_dihedral8());
  gs.push_back(make_quaternion8());
  return gs;
}

std::vector<FiniteGroup> abelian_up_to_order_12() {
  std::vector<FiniteGroup> gs;
  for (int n = 1; n <= 12; ++n) gs.push_back(make_cyclic(n));
  gs.push_back(product(2, 2));
  gs.push_back(product(2, 4));
  gs.push_back(make_direct_product(product(2, 2), make_cyclic(2)));
  gs.push_back(product(3, 3));
  gs.push_back(product(2, 6));
  return gs;
}

// allow_vacuous: on the trivial group some checks quantify over an empty set
// (no non-identity generators, no proper fusion pairs) and legitimately run
// zero cases; everywhere else a zero-case check means the suite went blind.
bool report_clean(const CheckReport& rep, std::string& detail, const std::string& who,
                  bool allow_vacuous = false) {
  for (const auto& c : rep.checks) {
    if (!c.pass) {
      detail = who + ": " + c.name + " — " + c.counterexample;
      return false;
    }
    if (c.cases == 0 && !allow_vacuous) {
      detail = who + ": " + c.name + " ran zero cases";
      return false;
    }
  }
  return true;
}

int run_shell(const std::string& cmd, std::string& out) {
  out.clear();
  FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!p) return -1;
  char buf[4096];
  size_t k;
  while ((k = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, k);
  int st = pclose(p);
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

struct Criterion {
  std::string name;
  double budget_s;
  std::function<bool(std::string&)> body;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back({"dimension formula 2^(n-2)(n+1) on eight groups", 1.0,
                      [](std::string& detail) {
    for (const FiniteGroup& g :
         {make_cyclic(2), make_cyclic(3), make_cyclic(4), product(2, 2), make_cyclic(5),
          make_cyclic(6), make_symmetric(3), make_cyclic(8)}) {
      auto d = dimension_info(g);
      if (!d.match()) {
        detail = g.label + ": " + std::to_string(d.arrow_count) +
                 " arrows vs formula " + std::to_string(d.formula_value);
        return false;
      }
    }
    return true;
  }});

  criteria.push_back({"matrix shapes separate the two order-4 groups", 1.0,
                      [](std::string& detail) {
    auto z4 = wedderburn_summary(make_cyclic(4));
    auto v4 = wedderburn_summary(product(2, 2));
    if (z4 != std::vector<int>{1, 1, 1, 1, 1, 1, 1, 2, 3}) {
      detail = "unexpected sizes for the cyclic group of order 4";
      return false;
    }
    if (v4 != std::vector<int>{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 3}) {
      detail = "unexpected sizes for the Klein group";
      return false;
    }
    std::string sz4 = wedderburn_compact_string(z4);
    std::string sv4 = wedderburn_compact_string(v4);
    if (sz4 != "7C ⊕ M_2(C) ⊕ M_3(C)") {
      detail = "C4 rendering: " + sz4;
      return false;
    }
    if (sv4 != "11C ⊕ M_3(C)") {
      detail = "Klein rendering: " + sv4;
      return false;
    }
    return true;
  }});

  criteria.push_back({"order-3 catalog: five simples and the full fusion table", 1.0,
                      [](std::string& detail) {
    auto g = make_cyclic(3);
    auto ctx = make_context(g);
    auto t = fusion_table(ctx);
    if (t.labels.size() != 5) {
      detail = "expected 5 labels, got " + std::to_string(t.labels.size());
      return false;
    }
    std::vector<int> dims;
    for (const auto& l : t.labels) dims.push_back(l.dim);
    if (dims != std::vector<int>{1, 2, 1, 1, 1}) {
      detail = "label dims off";
      return false;
    }
    // expected table: two idempotent units, then a cyclic block of order 3
    auto expected = [](int a, int b, int c) -> int {
      if (a < 2 || b < 2) return a == b && a == c;          // unit rows
      if (c < 2) return 0;
      return (a - 2 + b - 2) % 3 == c - 2;
    };
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b)
        for (int c = 0; c < 5; ++c)
          if (t.coeff[a][b][c] != expected(a, b, c)) {
            std::ostringstream os;
            os << "entry (" << a << "," << b << "," << c << ") = " << t.coeff[a][b][c];
            detail = os.str();
            return false;
          }
    return true;
  }});

  criteria.push_back({"foundational identities, all groups of order <= 8", 30.0,
                      [](std::string& detail) {
    for (const FiniteGroup& g : groups_up_to_order_8()) {
      if (!report_clean(verify_foundations(g), detail, g.label, g.n == 1)) return false;
    }
    return true;
  }});

  criteria.push_back({"block matrix isomorphisms, all groups of order <= 8", 60.0,
                      [](std::string& detail) {
    for (const FiniteGroup& g : groups_up_to_order_8()) {
      if (!report_clean(verify_blocks(g), detail, g.label)) return false;
    }
    return true;
  }});

  criteria.push_back({"weak Hopf axioms up to order 6, unit not grouplike", 120.0,
                      [](std::string& detail) {
    for (const FiniteGroup& g :
         {make_cyclic(1), make_cyclic(2), make_cyclic(3), make_cyclic(4), product(2, 2),
          make_cyclic(5), make_cyclic(6), make_symmetric(3)}) {
      if (!report_clean(verify_weak_hopf(g), detail, g.label)) return false;
      auto one = unit_element(g);
      bool grouplike = delta(one) == tensor(one, one);
      if (grouplike != (g.n == 1)) {
        detail = g.label + ": comultiplied unit has the wrong shape";
        return false;
      }
    }
    return true;
  }});

  criteria.push_back({"generator-word Hopf algebroid laws up to order 6", 120.0,
                      [](std::string& detail) {
    for (const FiniteGroup& g :
         {make_cyclic(1), make_cyclic(2), make_cyclic(3), make_cyclic(4), product(2, 2),
          make_cyclic(5), make_cyclic(6), make_symmetric(3)}) {
      if (!report_clean(verify_lambda_hopf_algebroid(g), detail, g.label, g.n == 1)) {
        return false;
      }
    }
    return true;
  }});

  criteria.push_back({"simple modules certified, all groups of order <= 8", 60.0,
                      [](std::string& detail) {
    for (const FiniteGroup& g : groups_up_to_order_8()) {
      if (!report_clean(verify_simples(g), detail, g.label)) return false;
    }
    return true;
  }});

  criteria.push_back({"subgroup functor on every subgroup, order <= 8", 60.0,
                      [](std::string& detail) {
    for (const FiniteGroup& g : groups_up_to_order_8()) {
      if (!report_clean(christmas_verify(g), detail, g.label)) return false;
    }
    return true;
  }});

  criteria.push_back({"projection functor on every subgroup, abelian order <= 12", 60.0,
                      [](std::string& detail) {
    for (const FiniteGroup& g : abelian_up_to_order_12()) {
      auto ctx = make_context(g);
      for (const auto& h : subgroups(g)) {
        if (!matryoshka_functor(ctx, h).has_value()) {
          detail = g.label + ": functor undefined at subgroup mask " +
                   std::to_string(h.mask);
          return false;
        }
      }
      if (!report_clean(matryoshka_verify(g), detail, g.label, g.n == 1)) return false;
    }
    // the diagonal subgroups singled out as awkward: exercised and defined
    {
      auto klein = product(2, 2);
      auto ctx = make_context(klein);
      auto diag = subgroup_from_generators(klein, {3});
      if (diag.order() != 2 || !matryoshka_functor(ctx, diag).has_value()) {
        detail = "Klein diagonal subgroup missing or undefined";
        return false;
      }
    }
    {
      auto g = product(2, 4);
      auto ctx = make_context(g);
      auto diag = subgroup_from_generators(g, {5});  // (1,1), order 4
      if (diag.order() != 4 || !matryoshka_functor(ctx, diag).has_value()) {
        detail = "diagonal subgroup of C2xC4 missing or undefined";
        return false;
      }
    }
    return true;
  }});

  criteria.push_back({"command line output is byte-identical across runs", 60.0,
                      [](std::string& detail) {
    const std::string bin = PARFUS_BIN_PATH;
    for (const std::string args :
         {"info --group cyclic:6", "decompose --group sym:3 --format md",
          "simples --group product:2x2 --format csv", "fusion --group cyclic:4",
          "verify --group cyclic:3 --suite all --format md",
          "christmas --group sym:3 --subgroup gens:3",
          "matryoshka --group cyclic:8 --subgroup gens:2"}) {
      std::string first, second;
      int c1 = run_shell(bin + " " + args, first);
      int c2 = run_shell(bin + " " + args, second);
      if (c1 != 0 || c2 != 0) {
        detail = args + ": exit codes " + std::to_string(c1) + "/" + std::to_string(c2);
        return false;
      }
      if (first != second || first.empty()) {
        detail = args + ": outputs differ between runs";
        return false;
      }
    }
    return true;
  }});

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criteria[i].body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > criteria[i].budget_s) {
      ok = false;
      detail = "over time budget of " + std::to_string(criteria[i].budget_s) + "s";
    }
    if (!ok) ++failures;
    std::printf("[%s] %2zu. %s (%.2fs, budget %.0fs)\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].name.c_str(), secs, criteria[i].budget_s);
    if (!ok && !detail.empty()) std::printf("       %s\n", detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures;
}
