#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "parfus/rep_theory.hpp"

using namespace parfus;
using Cplx = std::complex<double>;

static constexpr double kTol = 1e-9;

// Test-local orthogonality oracle: first orthogonality relation computed
// straight from the public table data.
static bool rows_orthonormal(const CharacterTable& t) {
  int n = t.grp->order();
  for (int a = 0; a < t.rows(); ++a) {
    for (int b = 0; b < t.rows(); ++b) {
      Cplx inner = 0;
      for (int c = 0; c < static_cast<int>(t.classes.size()); ++c) {
        inner += static_cast<double>(t.classes[c].size()) * t.values[a][c] *
                 std::conj(t.values[b][c]);
      }
      inner /= static_cast<double>(n);
      if (std::abs(inner - (a == b ? 1.0 : 0.0)) > kTol) return false;
    }
  }
  return true;
}

static FiniteGroup make_dihedral8() {
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

static FiniteGroup make_quaternion8() {
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

TEST_CASE("cyclic character tables are exact dual groups") {
  for (int n = 1; n <= 8; ++n) {
    auto g = make_cyclic(n);
    auto t = character_table(g);
    REQUIRE(t.rows() == n);
    for (int r = 0; r < n; ++r) {
      CHECK(t.degrees[r] == 1);
      CHECK(std::abs(t.values[0][r] - 1.0) < kTol);  // trivial row first
      for (int x = 0; x < n; ++x) {
        CHECK(std::abs(std::pow(t.value_at(r, x), n) - 1.0) < 1e-7);  // roots of unity
        for (int y = 0; y < n; ++y) {
          CHECK(std::abs(t.value_at(r, g.mul(x, y)) - t.value_at(r, x) * t.value_at(r, y)) < kTol);
        }
      }
    }
    CHECK(rows_orthonormal(t));
  }
}

TEST_CASE("row order is pinned: rotation characters before the real one") {
  auto c3 = make_cyclic(3);
  auto t3 = character_table(c3);
  Cplx w = std::polar(1.0, 2.0 * 3.14159265358979323846 / 3.0);
  CHECK(std::abs(t3.value_at(1, 1) - w) < 1e-9);
  CHECK(std::abs(t3.value_at(2, 1) - std::conj(w)) < 1e-9);

  auto z4 = make_cyclic(4);
  auto t4 = character_table(z4);
  CHECK(std::abs(t4.value_at(1, 1) - Cplx(0, 1)) < kTol);
  CHECK(std::abs(t4.value_at(2, 1) - Cplx(0, -1)) < kTol);
  CHECK(std::abs(t4.value_at(3, 1) - Cplx(-1, 0)) < kTol);
}

TEST_CASE("symmetric group table, frozen by hand") {
  auto s3 = make_symmetric(3);
  auto t = character_table(s3);
  REQUIRE(t.rows() == 3);
  // classes ordered by smallest member: identity, transpositions, 3-cycles
  CHECK(t.classes[0] == std::vector<int>{0});
  CHECK(t.classes[1] == std::vector<int>{1, 2, 5});
  CHECK(t.classes[2] == std::vector<int>{3, 4});
  CHECK(t.degrees == std::vector<int>{1, 1, 2});
  const Cplx want[3][3] = {{1, 1, 1}, {1, -1, 1}, {2, 0, -1}};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) CHECK(std::abs(t.values[r][c] - want[r][c]) < kTol);
  }
  CHECK(rows_orthonormal(t));
}

TEST_CASE("dihedral and quaternion tables") {
  for (auto g : {make_dihedral8(), make_quaternion8()}) {
    auto t = character_table(g);
    REQUIRE(t.rows() == 5);
    CHECK(t.degrees == std::vector<int>{1, 1, 1, 1, 2});
    CHECK(rows_orthonormal(t));
    // degree-2 row: 2 at e, -2 at the central involution, 0 elsewhere
    for (int x = 0; x < 8; ++x) {
      bool central = t.classes[t.class_of[x]].size() == 1;
      double expected = x == 0 ? 2.0 : (central && g.elem_order(x) == 2 ? -2.0 : 0.0);
      CHECK(std::abs(t.value_at(4, x) - expected) < kTol);
    }
  }
}

TEST_CASE("tensor multiplicities, frozen by hand") {
  auto s3 = make_symmetric(3);
  auto t = character_table(s3);
  CHECK(tensor_multiplicities(t, 2, 2) == std::vector<int>{1, 1, 1});  // std (x) std
  CHECK(tensor_multiplicities(t, 1, 2) == std::vector<int>{0, 0, 1});  // sign (x) std
  CHECK(tensor_multiplicities(t, 1, 1) == std::vector<int>{1, 0, 0});  // sign (x) sign

  auto c3 = make_cyclic(3);
  auto tc = character_table(c3);
  CHECK(tensor_multiplicities(tc, 1, 1) == std::vector<int>{0, 0, 1});
  CHECK(tensor_multiplicities(tc, 1, 2) == std::vector<int>{1, 0, 0});

  auto q8 = make_quaternion8();
  auto tq = character_table(q8);
  CHECK(tensor_multiplicities(tq, 4, 4) == std::vector<int>{1, 1, 1, 1, 0});
}

TEST_CASE("simple labels and their dimensions") {
  auto c3 = make_cyclic(3);
  auto ctx3 = make_context(c3);
  auto l3 = simple_labels(ctx3);
  REQUIRE(l3.size() == 5);
  std::vector<long> dims;
  for (const auto& l : l3) dims.push_back(l.dim);
  CHECK(dims == std::vector<long>{1, 2, 1, 1, 1});

  auto z4 = make_cyclic(4);
  auto ctx4 = make_context(z4);
  auto l4 = simple_labels(ctx4);
  CHECK(l4.size() == 9);
  long sq = 0;
  for (const auto& l : l4) sq += l.dim * l.dim;
  CHECK(sq == 20);

  auto v4 = make_direct_product(make_cyclic(2), make_cyclic(2));
  auto ctxv = make_context(v4);
  auto lv = simple_labels(ctxv);
  CHECK(lv.size() == 12);
  sq = 0;
  for (const auto& l : lv) sq += l.dim * l.dim;
  CHECK(sq == 20);
}

TEST_CASE("module matrices land where the block picture says") {
  auto c3 = make_cyclic(3);
  auto bs = blocks(c3);
  // block of {e, g}: lambda([g]) restricted is the elementary matrix E_01
  auto m = module_matrix(c3, bs[1], 1);
  CHECK(m.entry[0][0].empty());
  CHECK(m.entry[1][0].empty());
  CHECK(m.entry[1][1].empty());
  REQUIRE(m.entry[0][1].size() == 1);
  CHECK(m.entry[0][1].at(0) == 1);

  auto z4 = make_cyclic(4);
  for (const auto& b : blocks(z4)) {
    CHECK(module_matrix(z4, b, 0) == GroupAlgebraMatrix::identity(z4, b.isotropy_mask, b.n));
  }
}

TEST_CASE("isotropy tables are cached per mask") {
  auto z4 = make_cyclic(4);
  auto ctx = make_context(z4);
  const CharacterTable& a = ctx.isotropy_table(0b0101);
  const CharacterTable& b = ctx.isotropy_table(0b0101);
  CHECK(&a == &b);
  CHECK(a.rows() == 2);
}

TEST_CASE("simple module suite") {
  for (auto g : {make_cyclic(1), make_cyclic(2), make_cyclic(3), make_cyclic(4),
                 make_direct_product(make_cyclic(2), make_cyclic(2)), make_cyclic(5),
                 make_cyclic(6), make_symmetric(3), make_dihedral8(), make_quaternion8()}) {
    auto rep = verify_simples(g);
    for (const auto& c : rep.checks) {
      CHECK_MESSAGE(c.pass, g.label, ": ", c.name, " — ", c.counterexample);
    }
    CHECK(rep.all_pass());
  }
}
