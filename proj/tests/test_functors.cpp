#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "parfus/functors.hpp"

using namespace parfus;

namespace {

void require_all_pass(const CheckReport& rep) {
  for (const auto& c : rep.checks) {
    CHECK_MESSAGE(c.pass, c.name, " failed: ", c.counterexample);
    CHECK(c.cases > 0);
  }
}

uint64_t gen_mask(const FiniteGroup& g, std::initializer_list<int> gens) {
  return subgroup_from_generators(g, std::vector<int>(gens)).mask;
}

}  // namespace

TEST_CASE("subgroup functor images for S3, frozen") {
  auto g = make_symmetric(3);
  auto ctx = make_context(g);

  // H = A3 = {e, (123), (132)}: three linear characters, all landing on the
  // subset H itself (a fixed point of translation).
  uint64_t a3 = gen_mask(g, {3});  // a 3-cycle generates A3
  REQUIRE(__builtin_popcountll(a3) == 3);
  auto img = christmas_images(ctx, Subgroup{&g, a3});
  REQUIRE(img.images.size() == 3);
  for (int r = 0; r < 3; ++r) {
    CHECK(img.images[r].rep == a3);
    CHECK(img.images[r].alpha == r);
    CHECK(img.images[r].dim == 1);
  }

  // H = S3 itself: dims 1,1,2 in pinned row order.
  uint64_t full = (uint64_t(1) << 6) - 1;
  auto img2 = christmas_images(ctx, Subgroup{&g, full});
  REQUIRE(img2.images.size() == 3);
  CHECK(img2.images[0].dim == 1);
  CHECK(img2.images[1].dim == 1);
  CHECK(img2.images[2].dim == 2);
  for (const auto& l : img2.images) CHECK(l.rep == full);

  // H = {e}: the one-dimensional trivial label at the singleton subset.
  auto img3 = christmas_images(ctx, Subgroup{&g, 1});
  REQUIRE(img3.images.size() == 1);
  CHECK(img3.images[0].rep == 1);
  CHECK(img3.images[0].alpha == 0);
  CHECK(img3.images[0].dim == 1);
}

TEST_CASE("subgroup functor checks pass") {
  for (const FiniteGroup& g : {make_cyclic(4), make_direct_product(make_cyclic(2), make_cyclic(2)),
                               make_cyclic(6), make_symmetric(3)}) {
    auto rep = christmas_verify(g);
    INFO(g.label);
    require_all_pass(rep);
    CHECK(rep.checks.size() == 3);
  }
}

TEST_CASE("projection functor on Z4 with H = <a^2>, frozen images") {
  auto g = make_cyclic(4);
  auto ctx = make_context(g);
  uint64_t h = gen_mask(g, {2});  // {e, a^2} = mask 0b0101
  REQUIRE(h == 0b0101u);
  auto md = matryoshka_functor(ctx, Subgroup{&g, h});
  REQUIRE(md.has_value());

  // phi(a^t) = a^{2t}: kernel {e, a^2}, image H.
  CHECK(md->projection == std::vector<int>{0, 2, 0, 2});

  // Source: k_par(Z2) has three simples; their images in k_par(Z4):
  //   ({e}, triv)      -> (0b0101, triv)           dim 1
  //   ({e,u}, triv)    -> (0b1111, triv)           dim 1
  //   ({e,u}, sign)    -> (0b1111, chi(a) = -1)    dim 1
  REQUIRE(md->source_labels.size() == 3);
  REQUIRE(md->images.size() == 3);
  CHECK(md->images[0].rep == 0b0101u);
  CHECK(md->images[0].alpha == 0);
  CHECK(md->images[1].rep == 0b1111u);
  CHECK(md->images[1].alpha == 0);
  CHECK(md->images[2].rep == 0b1111u);
  CHECK(md->images[2].alpha == 3);  // chi(a) = -1 sorts last among the Z4 rows
  for (const auto& l : md->images) CHECK(l.dim == 1);
}

TEST_CASE("projection functor checks pass on abelian groups") {
  for (const FiniteGroup& g :
       {make_cyclic(4), make_cyclic(6), make_direct_product(make_cyclic(2), make_cyclic(2)),
        make_direct_product(make_cyclic(2), make_cyclic(4)), make_cyclic(8), make_cyclic(12),
        make_direct_product(make_direct_product(make_cyclic(2), make_cyclic(2)), make_cyclic(2))}) {
    auto rep = matryoshka_verify(g);
    INFO(g.label);
    require_all_pass(rep);
    CHECK(rep.checks.size() == 6);
  }
}

TEST_CASE("projection functor is defined on every subgroup of small abelian groups") {
  for (const FiniteGroup& g :
       {make_cyclic(12), make_direct_product(make_cyclic(2), make_cyclic(4)), make_direct_product(make_direct_product(make_cyclic(2), make_cyclic(2)), make_cyclic(2))}) {
    auto ctx = make_context(g);
    for (const auto& h : subgroups(g)) {
      auto md = matryoshka_functor(ctx, h);
      INFO(g.label, " mask=", h.mask);
      CHECK(md.has_value());
    }
  }
}

TEST_CASE("projection functor undefined without an adapted basis") {
  // In Z2 x Z8 the diagonal-flavoured subgroup <(1,2)> of order 4 admits no
  // adapted basis: any basis with a power landing on (1,2) would need a
  // divisor gap this group cannot supply.
  auto g = make_direct_product(make_cyclic(2), make_cyclic(8));
  auto ctx = make_context(g);
  int gen = 1 * 8 + 2;  // (1, 2) under the lexicographic indexing
  REQUIRE(g.elem_order(gen) == 4);
  auto sub = subgroup_from_generators(g, {gen});
  auto md = matryoshka_functor(ctx, sub);
  CHECK(!md.has_value());
}

TEST_CASE("projection functor chains coherently") {
  {
    auto g = make_cyclic(8);
    uint64_t h = gen_mask(g, {2});  // <a^2>
    uint64_t k = gen_mask(g, {4});  // <a^4>
    auto cr = matryoshka_chain(g, h, k);
    CHECK(cr.applicable);
    CHECK_MESSAGE(cr.coherent, cr.detail);
  }
  {
    auto g = make_cyclic(12);
    uint64_t h = gen_mask(g, {2});
    uint64_t k = gen_mask(g, {6});
    auto cr = matryoshka_chain(g, h, k);
    CHECK(cr.applicable);
    CHECK_MESSAGE(cr.coherent, cr.detail);
  }
  {
    // K not inside H: report inapplicable, not incoherent.
    auto g = make_cyclic(12);
    auto cr = matryoshka_chain(g, gen_mask(g, {4}), gen_mask(g, {6}));
    CHECK(!cr.applicable);
    CHECK(!cr.detail.empty());
  }
}
