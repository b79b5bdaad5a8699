#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "chilab/generate.hpp"
#include "chilab/multihole.hpp"
#include "chilab/verify.hpp"
#include "fixtures.hpp"

using namespace chilab;
using namespace chilab::fixtures;

namespace {

void expect_verified(const Graph& g, const Certificate& cert) {
  REQUIRE_FALSE(is_inconclusive(cert));
  VerifyResult res = verify_certificate(g, cert);
  CAPTURE(certificate_type_name(cert));
  CAPTURE(res.detail);
  CHECK(res.verdict == Verdict::verified);
}

std::string reason_of(const Certificate& cert) {
  return std::get<InconclusiveCert>(cert).reason;
}

} // namespace

TEST_CASE("odd dominator bound holds on odd cycles") {
  for (int m = 5; m <= 23; m += 2) CHECK(odd_dominator_check(make_cycle(m), 1));
  CHECK(odd_dominator_check(disjoint_union(make_cycle(5), make_cycle(7)), 1));
  CHECK(odd_dominator_check(make_petersen(), 2));
}

TEST_CASE("odd dominator bound holds on random seeded graphs") {
  for (int i = 0; i < 120; ++i) {
    Rng rng(0x0DD5EEDull + i);
    Graph g = random_with_odd_hole(rng.pick_int(5, 9), rng.next());
    BigInt x = 0;
    for (int v = 0; v < g.order(); ++v)
      x = std::max(x, BigInt(chi_of(g, g.neighbours(v))));
    if (x == 0) x = 1;
    CAPTURE(i);
    CHECK(odd_dominator_check(g, x));
  }
}

TEST_CASE("odd dominator check guards its preconditions") {
  CHECK_THROWS_AS(odd_dominator_check(make_cycle(6), 1), Error);
  CHECK_THROWS_AS(odd_dominator_check(make_complete(4), 2), Error);
  // Hub neighbourhood beats the stated bound.
  CHECK_THROWS_AS(odd_dominator_check(wheel5(), 1), Error);
  CHECK_THROWS_AS(odd_dominator_check(make_cycle(5), -1), Error);
}

TEST_CASE("binding check on biclique-free long-hole-free graphs") {
  LongHoleParams params{4, 2, 4};
  CHECK(kss_free_longfree_binding_check(make_path(4), params));
  CHECK(kss_free_longfree_binding_check(make_complete(2), params));
  CHECK(kss_free_longfree_binding_check(Graph(5), params));
  // K3: tau = 1 but chi = 3 > tau^c + 1; the bound fails honestly.
  CHECK_FALSE(kss_free_longfree_binding_check(make_complete(3), params));

  // Preconditions always bite, whatever the verdict would be.
  CHECK_THROWS_AS(kss_free_longfree_binding_check(make_cycle(4), params),
                  Error);
  CHECK_THROWS_AS(kss_free_longfree_binding_check(make_cycle(5), params),
                  Error);
  CHECK_THROWS_AS(
      kss_free_longfree_binding_check(make_complete_bipartite(2, 2), params),
      Error);
}

TEST_CASE("long dominator bound holds on long cycles") {
  for (int ell = 4; ell <= 8; ++ell) {
    LongHoleParams params{ell, 2, 4};
    for (int m = ell; m <= 24; ++m) {
      CAPTURE(ell);
      CAPTURE(m);
      CHECK(long_dominator_check(make_cycle(m), 1, params));
    }
  }
  CHECK(long_dominator_check(c22_with_c5_apex(), 3, LongHoleParams{5, 2, 4}));
}

TEST_CASE("long dominator bound holds on random seeded graphs") {
  LongHoleParams params{6, 2, 4};
  for (int i = 0; i < 80; ++i) {
    Rng rng(0x10D0Cull * 13 + i);
    Graph g = random_with_long_hole(rng.pick_int(8, 12), 6, rng.next());
    BigInt n = 0;
    for (int v = 0; v < g.order(); ++v)
      n = std::max(n, BigInt(chi_of(g, g.neighbours(v))));
    if (n == 0) n = 1;
    CAPTURE(i);
    CHECK(long_dominator_check(g, n, params));
  }
  CHECK_THROWS_AS(long_dominator_check(make_complete(3), 2, params), Error);
  CHECK_THROWS_AS(long_dominator_check(make_cycle(6), 0, params), Error);
}

TEST_CASE("small neighbourhood special hole extraction") {
  Graph two_c5 = disjoint_union(make_cycle(5), make_cycle(5));
  Certificate cert = special_hole_smallnbrs(two_c5, 1, NonDecPoly(), true);
  const CopyCert& copy = std::get<CopyCert>(cert);
  CHECK(std::get<HolePattern>(copy.pattern).spec.kind == HoleKind::odd);
  CHECK(copy.parts == std::vector<std::vector<int>>{{0, 1, 2, 3, 4}});
  CHECK(copy.witness == std::vector<int>{5, 6, 7, 8, 9});
  expect_verified(two_c5, cert);

  // A four-hole outranks the odd ones when both are present.
  Graph c4_c5 = disjoint_union(make_cycle(4), make_cycle(5));
  Certificate four = special_hole_smallnbrs(c4_c5, 1, NonDecPoly(), true);
  CHECK(std::get<HolePattern>(std::get<CopyCert>(four).pattern).spec.kind ==
        HoleKind::four);
  CHECK(std::get<CopyCert>(four).parts ==
        std::vector<std::vector<int>>{{0, 1, 2, 3}});
  expect_verified(c4_c5, four);

  CHECK(reason_of(special_hole_smallnbrs(make_path(4), 1, NonDecPoly())) ==
        "threshold");
  // The neighbourhood bound is checked even under force.
  CHECK_THROWS_AS(
      special_hole_smallnbrs(wheel5(), 1, NonDecPoly(), true), Error);
}

TEST_CASE("four hole free anticomplete pair") {
  auto pair = anticomplete_pair_c4free(apex_c5_pendant(), 0);
  REQUIRE(pair.has_value());
  CHECK(pair->first.any());
  CHECK(pair->second.any());
  CHECK_FALSE(pair->first.intersects(pair->second));
  CHECK(are_anticomplete(apex_c5_pendant(), pair->first, pair->second));

  // The four-hole exclusion is not negotiable.
  CHECK_THROWS_AS(anticomplete_pair_c4free(make_cycle(4), 0), Error);
  // X = V but chi(X) stays within omega: nothing to separate.
  CHECK_FALSE(anticomplete_pair_c4free(make_path(4), 0).has_value());
}

TEST_CASE("odd nondominating extraction on four hole free graphs") {
  Graph two_c5 = disjoint_union(make_cycle(5), make_cycle(5));
  Certificate via_small = odd_nondominating_c4free(two_c5, NonDecPoly(), true);
  const CopyCert& copy = std::get<CopyCert>(via_small);
  CHECK(copy.parts == std::vector<std::vector<int>>{{0, 1, 2, 3, 4}});
  expect_verified(two_c5, via_small);

  // Forcing the pair branch with a zero neighbourhood bound.
  Graph apex = apex_c5_pendant();
  Certificate via_pair =
      odd_nondominating_c4free(apex, NonDecPoly(), true, OddC4Tuning{BigInt(0)});
  const CopyCert& pc = std::get<CopyCert>(via_pair);
  CHECK(pc.parts == std::vector<std::vector<int>>{{2, 3, 4, 5, 6}});
  CHECK(pc.witness == std::vector<int>{1, 7});
  expect_verified(apex, via_pair);

  CHECK(reason_of(odd_nondominating_c4free(make_cycle(7), NonDecPoly())) ==
        "threshold");
  CHECK_THROWS_AS(odd_nondominating_c4free(make_cycle(4), NonDecPoly(), true),
                  Error);
}

TEST_CASE("special nondominating turns a biclique into a four hole") {
  Graph g = final_copy_gadget();
  SpecialNdTuning tuning;
  tuning.inner_psi = NonDecPoly();
  tuning.si.t_override = BigInt(2);
  Certificate cert = special_nondominating(g, NonDecPoly(), true, tuning);
  const CopyCert& copy = std::get<CopyCert>(cert);
  CHECK(std::get<HolePattern>(copy.pattern).spec.kind == HoleKind::four);
  // K_{2,2} on {0,3} x {1,2} rewires to the cyclic order 0-1-3-2.
  CHECK(copy.parts == std::vector<std::vector<int>>{{0, 1, 3, 2}});
  CHECK(copy.witness == std::vector<int>{4, 5});
  expect_verified(g, cert);
}

TEST_CASE("special nondominating terminal fallback and threshold") {
  Graph two_c5 = disjoint_union(make_cycle(5), make_cycle(5));
  Certificate cert =
      special_nondominating(two_c5, NonDecPoly::identity(), true);
  const CopyCert& copy = std::get<CopyCert>(cert);
  CHECK(copy.parts == std::vector<std::vector<int>>{{0, 1, 2, 3, 4}});
  CHECK(copy.witness == std::vector<int>{5, 6, 7, 8, 9});
  CHECK(copy.psi == NonDecPoly::identity());
  expect_verified(two_c5, cert);

  CHECK(reason_of(special_nondominating(make_path(4), NonDecPoly())) ==
        "threshold");
  // Forced on a path: the inner isolation stalls and says so.
  CHECK(reason_of(special_nondominating(make_path(4), NonDecPoly(), true)) ==
        "stalled: no candidate block");
}

TEST_CASE("special multihole base and step") {
  Certificate one = special_multihole(make_cycle(5), 1);
  const MultiholeCert& mh1 = std::get<MultiholeCert>(one);
  REQUIRE(mh1.components.size() == 1);
  CHECK(mh1.components[0].parts ==
        std::vector<std::vector<int>>{{0, 1, 2, 3, 4}});
  CHECK(std::get<HoleSpec>(mh1.components[0].spec).kind ==
        HoleKind::special_);
  expect_verified(make_cycle(5), one);

  Graph two_c5 = disjoint_union(make_cycle(5), make_cycle(5));
  Certificate two = special_multihole(two_c5, 2, true);
  const MultiholeCert& mh2 = std::get<MultiholeCert>(two);
  REQUIRE(mh2.components.size() == 2);
  CHECK(mh2.components[0].parts ==
        std::vector<std::vector<int>>{{0, 1, 2, 3, 4}});
  CHECK(mh2.components[1].parts ==
        std::vector<std::vector<int>>{{5, 6, 7, 8, 9}});
  expect_verified(two_c5, two);

  Graph three = disjoint_cycles(5, 3);
  Certificate triple = special_multihole(three, 3, true);
  CHECK(std::get<MultiholeCert>(triple).components.size() == 3);
  expect_verified(three, triple);

  CHECK(reason_of(special_multihole(make_cycle(5), 2, true)) ==
        "could not assemble the multihole");
  CHECK(reason_of(special_multihole(make_cycle(5), 2)) == "threshold");
  CHECK_THROWS_AS(special_multihole(make_cycle(5), 0), Error);
}

TEST_CASE("long anticomplete pair construction and its honest refusals") {
  // One long cycle carries the pair when s = 1: both sides live on the
  // rim beyond the cut path.
  LongHoleParams thin{5, 1, 4};
  Graph two_c21 = disjoint_union(make_cycle(21), make_cycle(21));
  auto pair = anticomplete_pair_long(two_c21, 0, thin, true);
  REQUIRE(pair.has_value());
  CHECK(are_anticomplete(two_c21, pair->first, pair->second));
  CHECK_FALSE(pair->first.intersects(pair->second));

  // At s = 2 the leftover rim vertices between the path ends are
  // adjacent, so the claimed separation fails; the construction hands
  // back nothing instead of a false pair.
  LongHoleParams wide{5, 2, 4};
  CHECK_FALSE(anticomplete_pair_long(make_cycle(21), 0, wide, true).has_value());
  CHECK_FALSE(anticomplete_pair_long(two_c21, 0, wide, true).has_value());

  // No big-neighbourhood vertices at all: no hole to cut.
  CHECK_FALSE(anticomplete_pair_long(make_cycle(25), 1, thin, true).has_value());

  // Unforced preconditions: a hole inside [ell, 2sl] is rejected.
  CHECK_THROWS_AS(anticomplete_pair_long(make_cycle(8), 0, thin, false),
                  Error);
  CHECK_THROWS_AS(
      anticomplete_pair_long(disjoint_union(make_cycle(4), make_cycle(21)), 0,
                             wide, false),
      Error);
}

TEST_CASE("long nondominating extraction") {
  LongHoleParams params{5, 2, 4};
  Graph two_c11 = disjoint_union(make_cycle(11), make_cycle(11));
  Certificate cert =
      long_nondominating_kssfree(two_c11, NonDecPoly(), params, true);
  const CopyCert& copy = std::get<CopyCert>(cert);
  const HoleSpec& spec = std::get<HolePattern>(copy.pattern).spec;
  CHECK(spec.kind == HoleKind::long_);
  CHECK(spec.min_length == 5);
  CHECK(copy.parts[0] ==
        std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  CHECK(copy.witness ==
        std::vector<int>{11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21});
  expect_verified(two_c11, cert);

  Certificate tuned = long_nondominating_kssfree(
      c22_with_c5_apex(), NonDecPoly(), params, true, LongNdTuning{BigInt(0)});
  expect_verified(c22_with_c5_apex(), tuned);

  CHECK(reason_of(long_nondominating_kssfree(make_path(4), NonDecPoly(),
                                             params)) == "threshold");
  // Forced on one bare cycle: no anticomplete witness survives.
  CHECK(reason_of(long_nondominating_kssfree(make_cycle(11), NonDecPoly(),
                                             params, true)) ==
        "no nondominating long hole found");
  // Unforced, the in-window hole is a precondition violation.
  CHECK_THROWS_AS(
      long_nondominating_kssfree(make_cycle(11), NonDecPoly(), params), Error);
}

TEST_CASE("long or biclique nondominating extraction") {
  LongHoleParams params{5, 2, 4};

  // The induced biclique is preferred by the terminal fallback.
  Graph two_c4 = disjoint_union(make_cycle(4), make_cycle(4));
  Certificate kss =
      long_or_kss_nondominating(two_c4, NonDecPoly(), params, true);
  const CopyCert& bc = std::get<CopyCert>(kss);
  CHECK(std::get<BicliquePattern>(bc.pattern).s == 2);
  CHECK(bc.parts == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
  CHECK(bc.witness == std::vector<int>{4, 5, 6, 7});
  expect_verified(two_c4, kss);

  // Without a biclique the fallback finds the long hole.
  Graph two_c11 = disjoint_union(make_cycle(11), make_cycle(11));
  Certificate hole =
      long_or_kss_nondominating(two_c11, NonDecPoly(), params, true);
  const CopyCert& hc = std::get<CopyCert>(hole);
  CHECK(std::get<HolePattern>(hc.pattern).spec.kind == HoleKind::long_);
  CHECK(hc.parts[0].size() == 11);
  expect_verified(two_c11, hole);

  CHECK(reason_of(long_or_kss_nondominating(make_path(4), NonDecPoly(),
                                            params)) == "threshold");
  CHECK_THROWS_AS(
      long_or_kss_nondominating(make_cycle(5), NonDecPoly(),
                                LongHoleParams{3, 2, 4}, true),
      Error);
  CHECK_THROWS_AS(
      long_or_kss_nondominating(make_cycle(5), NonDecPoly(),
                                LongHoleParams{5, 0, 4}, true),
      Error);
}

TEST_CASE("object extraction base cases") {
  LongHoleParams params{5, 2, 4};

  Certificate via_kss = k_object_extract(make_cycle(4), 1, params, true);
  const MultiholeCert& mk = std::get<MultiholeCert>(via_kss);
  REQUIRE(mk.components.size() == 1);
  CHECK(mk.components[0].parts ==
        std::vector<std::vector<int>>{{0, 2}, {1, 3}});
  const EitherComponent& spec =
      std::get<EitherComponent>(mk.components[0].spec);
  CHECK(spec.s == 2);
  CHECK(spec.min_length == 5);
  expect_verified(make_cycle(4), via_kss);

  Certificate via_hole = k_object_extract(make_cycle(11), 1, params, true);
  const MultiholeCert& mh = std::get<MultiholeCert>(via_hole);
  REQUIRE(mh.components.size() == 1);
  CHECK(mh.components[0].parts[0].size() == 11);
  expect_verified(make_cycle(11), via_hole);

  CHECK(reason_of(k_object_extract(make_cycle(11), 1, params)) ==
        "threshold");
  CHECK_THROWS_AS(k_object_extract(make_cycle(11), 0, params), Error);
}

TEST_CASE("object extraction assembles mixed pairs") {
  LongHoleParams params{5, 2, 4};
  Graph g = disjoint_union(make_complete_bipartite(2, 2), make_cycle(7));
  Certificate cert = k_object_extract(g, 2, params, true);
  const MultiholeCert& mh = std::get<MultiholeCert>(cert);
  REQUIRE(mh.components.size() == 2);
  CHECK(mh.components[0].parts ==
        std::vector<std::vector<int>>{{0, 1}, {2, 3}});
  CHECK(mh.components[1].parts ==
        std::vector<std::vector<int>>{{4, 5, 6, 7, 8, 9, 10}});
  expect_verified(g, cert);

  Graph two_c4 = disjoint_union(make_cycle(4), make_cycle(4));
  KObjectTuning tuning;
  tuning.base_psi = NonDecPoly();
  tuning.step.si.t_override = BigInt(0);
  Certificate stepped = k_object_extract(two_c4, 2, params, true, 24, tuning);
  if (!is_inconclusive(stepped)) {
    CHECK(std::get<MultiholeCert>(stepped).components.size() == 2);
    expect_verified(two_c4, stepped);
  }
}

TEST_CASE("psi prime feeds the special pipeline") {
  // The inner isolation runs against 85x + 43 psi; its pin anchors the
  // outer pipeline's arithmetic.
  CHECK(psi_prime_special(NonDecPoly()).evaluate(2) == 170);
  CHECK(psi_prime_special(NonDecPoly::constant(1)).evaluate(1) == 128);
}

TEST_CASE("every forced emission verifies on random graphs") {
  LongHoleParams params{5, 2, 4};
  for (int i = 0; i < 60; ++i) {
    Rng rng(0xF0552Dull + i);
    Graph g = random_gnp(rng.pick_int(4, 9), 0.3 + 0.05 * (i % 7), rng.next());
    CAPTURE(i);
    if (!find_hole(g, HoleSpec{HoleKind::four, 0, 0})) {
      Certificate odd = odd_nondominating_c4free(g, NonDecPoly(), true);
      if (!is_inconclusive(odd)) expect_verified(g, odd);
    }
    Certificate sp = special_nondominating(g, NonDecPoly(), true);
    if (!is_inconclusive(sp)) expect_verified(g, sp);
    Certificate mh = special_multihole(g, 2, true);
    if (!is_inconclusive(mh)) expect_verified(g, mh);
    Certificate ko = k_object_extract(g, 1, params, true);
    if (!is_inconclusive(ko)) expect_verified(g, ko);
  }
}
