#pragma once

// Hand-built graphs used across the suites. Each extractor fixture below
// was chosen so that a specific proof branch fires; the coverage test and
// the acceptance gate both replay run_all_coverage_fixtures and assert the
// whole branch registry is reached.

#include <vector>

#include "chilab/generate.hpp"
#include "chilab/graph.hpp"
#include "chilab/isolation.hpp"
#include "chilab/multihole.hpp"

namespace chilab::fixtures {

inline Graph wheel5() {
  // rim C5 on 0..4, hub 5
  return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                   {0, 5}, {1, 5}, {2, 5}, {3, 5}, {4, 5}});
}

// Strong-isolation home-tail fixtures. Both run with s=1, q=0, psi=1,
// t_override=1, step_override=0; tail_cert ends in a low-set sprinkling
// over the home tail, tail_extension grows the template through a home.
inline Graph home_tail_cert_graph() {
  return Graph(8, {{0, 1}, {0, 3}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6},
                   {3, 4}, {5, 6}});
}

inline Graph home_tail_extension_graph() {
  return Graph(8, {{0, 1}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6},
                   {3, 4}, {3, 5}, {4, 5}, {4, 6}, {5, 6}});
}

// A K_m core under six outer vertices: 0-1-3-2 form a C4 over the core
// and 4,5 are an anticomplete K2 pendant on the core. Every
// neighbourhood has chi = m+1, so with m > 2q the bigbip walk at
// s=2, t=2 never finds a low vertex, grows {0} then {3} (each tops the
// nonneighbour-chi scan thanks to the 4-5 edge), and emits the final
// biclique copy [{0,3},{1,2}] with witness {4,5}.
inline Graph final_copy_gadget(int core_size = 9) {
  const int n = core_size + 6;
  std::vector<std::pair<int, int>> edges;
  for (int u = 6; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  for (int u = 0; u < 6; ++u)
    for (int v = 6; v < n; ++v) edges.push_back({u, v});
  edges.push_back({0, 1});
  edges.push_back({0, 2});
  edges.push_back({1, 3});
  edges.push_back({2, 3});
  edges.push_back({4, 5});
  return Graph(n, edges);
}

// Seven vertices steering strong isolation (s=1, q=0, psi=1, t=1,
// step=0): claim 1 grows {0} (nonneighbour triangle 1-2-3), its final
// copy ([0],[4]) fails on the single-vertex witness {1} and leaves the
// template [[2],[4]]; a z-rest extension absorbs 3; then the home
// class of anchor {2} holds the adjacent pair {5,6}, so the home pair
// copy ([2],[4]) with witness {5,6} verifies.
inline Graph home_pair_graph() {
  return Graph(7, {{1, 2}, {1, 3}, {2, 3}, {0, 4}, {0, 5}, {0, 6},
                   {2, 4}, {3, 4}, {5, 6}, {1, 5}, {1, 6}, {3, 5}, {3, 6}});
}

// C5 on 2..6 under an apex 0, with a pendant path 0-1-7. The induced
// P4 2-0-1-7 steers the anticomplete-pair scan of the four-hole-free
// odd extractor onto the edge (0,1).
inline Graph apex_c5_pendant() {
  return Graph(8, {{2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 2},
                   {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6},
                   {0, 1}, {1, 7}});
}

// C22 on 0..21 plus a C5 on 22..26 whose every vertex also sees hole
// vertex 0; drives the pair side of the long-hole extractor.
inline Graph c22_with_c5_apex() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 22; ++i) edges.push_back({i, (i + 1) % 22});
  for (int i = 22; i < 27; ++i) edges.push_back({i, i == 26 ? 22 : i + 1});
  for (int i = 22; i < 27; ++i) edges.push_back({0, i});
  return Graph(27, edges);
}

// Two isolated vertices, a C5, and a K3: the odd-tail route of the
// special-hole extractor (low set picks up the isolated vertices and
// the C5; the K3 is the sprinkling partner).
inline Graph two_k1_c5_k3() {
  return Graph(10, {{2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 2},
                    {7, 8}, {7, 9}, {8, 9}});
}

// Same shape with a C21 replacing the C5: the long-hole tail route.
inline Graph two_k1_c21_k3() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 2; i <= 22; ++i) edges.push_back({i, i == 22 ? 2 : i + 1});
  edges.push_back({23, 24});
  edges.push_back({23, 25});
  edges.push_back({24, 25});
  return Graph(26, edges);
}

inline Graph disjoint_cycles(int len, int copies) {
  Graph g(0, {});
  for (int i = 0; i < copies; ++i) g = disjoint_union(g, make_cycle(len));
  return g;
}

// K5 joined to C5: the max clique absorbs one cycle edge, every
// outside cycle vertex misses at most two clique members, so complete
// isolation at k=3 finds no isolated part and lands on an H-free one.
inline Graph k5_join_c5() {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) edges.push_back({u, v});
  for (int i = 5; i < 10; ++i) edges.push_back({i, i == 9 ? 5 : i + 1});
  for (int u = 0; u < 5; ++u)
    for (int v = 5; v < 10; ++v) edges.push_back({u, v});
  return Graph(10, edges);
}

inline NonDecPoly psi_zero() { return NonDecPoly(); }
inline NonDecPoly psi_one() { return NonDecPoly::constant(1); }
inline NonDecPoly psi_two() { return NonDecPoly::constant(2); }
inline NonDecPoly psi_x() { return NonDecPoly::identity(); }

// Replays every curated extractor fixture. Callers reset coverage
// beforehand and compare coverage_hits() against coverage_registry().
inline void run_all_coverage_fixtures() {
  const LongHoleParams lp{5, 2, 4};

  // complete isolation
  isolate_complete(make_cycle(5), 3, psi_zero());              // ic.hfree_all
  isolate_complete(disjoint_union(make_complete(1), make_cycle(5)), 1,
                   psi_zero());                                // ic.isolated_part
  isolate_complete(k5_join_c5(), 3, psi_zero());               // ic.hfree_part
  isolate_complete(make_complete(2), 1, psi_one(), true);      // ic.inconclusive

  // bigbip ladder
  bigbip_step(disjoint_union(make_complete(2), make_complete(2)), 1, 0, 1,
              psi_zero());                                     // bb.lowset_sprinkling
  bigbip_step(make_cycle(5), 2, 0, 1, psi_zero());             // bb.step_sprinkling
  bigbip_step(wheel5(), 1, 0, 1, psi_zero());                  // bb.final_copy
  bigbip_step(final_copy_gadget(), 2, 4, 2, psi_zero());       // bb.grow + final_copy s=2
  bigbip_step(make_complete_multipartite({3, 3, 3}), 1, 0, 1,
              psi_one());                                      // bb.final_template
  bigbip_step(make_complete(5), 1, 0, 1, psi_zero());          // bb.stall

  // strong isolation
  {
    StrongIsolationTuning t1{BigInt(1), std::nullopt};
    StrongIsolationTuning t1s0{BigInt(1), BigInt(0)};
    strong_isolation(make_cycle(5), 1, 0, psi_zero(), true, t1);   // si.claim1_cert
    strong_isolation(wheel5(), 1, 0, psi_one(), true, t1s0);       // si.zrest_extension
    strong_isolation(home_pair_graph(), 1, 0, psi_one(), true,
                     t1s0);                                        // si.home_pair_copy
    strong_isolation(home_tail_cert_graph(), 1, 0, psi_one(), true,
                     t1s0);                                        // si.home_tail_cert
    strong_isolation(home_tail_extension_graph(), 1, 0, psi_one(), true,
                     t1s0);                                        // si.home_tail_extension
    strong_isolation(make_complete_multipartite({3, 3, 3}), 1, 0, psi_one(),
                     true, t1);                                    // si.claim1_template + homes_exhausted
  }

  // biclique self-isolation
  {
    StrongIsolationTuning t1{BigInt(1), std::nullopt};
    bip_self_isolation(wheel5(), 1, 1, psi_zero(), true, t1);      // bip.copy_direct
    bip_self_isolation(disjoint_union(make_complete(1), make_complete(2)),
                       1, 1, psi_zero(), true, t1);                // bip.hfree
    bip_self_isolation(
        disjoint_union(disjoint_union(make_complete(1), make_complete(2)),
                       make_complete(2)),
        1, 1, psi_one(), true, t1);                                // bip.copy_in_p
  }

  // four-or-odd pipeline
  special_hole_smallnbrs(disjoint_cycles(5, 2), 2, psi_zero(),
                         true);                                // smallnbrs.hole
  special_hole_smallnbrs(make_path(4), 1, psi_zero());         // smallnbrs.inconclusive
  odd_nondominating_c4free(disjoint_cycles(5, 2), psi_zero(),
                           true);                              // odd_c4.smallnbrs
  {
    OddC4Tuning t{BigInt(0)};
    odd_nondominating_c4free(apex_c5_pendant(), psi_zero(), true,
                             t);                               // odd_c4.pair
  }
  odd_nondominating_c4free(make_cycle(7), psi_zero(), true);   // odd_c4.inconclusive

  {
    SpecialNdTuning t;
    t.inner_psi = psi_zero();
    t.si.t_override = BigInt(2);
    special_nondominating(final_copy_gadget(), psi_zero(), true,
                          t);                                  // special_nd.copy_to_hole
  }
  {
    SpecialNdTuning t;
    t.inner_psi = psi_zero();
    t.si.t_override = BigInt(0);
    special_nondominating(disjoint_cycles(4, 2), psi_zero(), true,
                          t);                                  // special_nd.four_in_p
  }
  {
    SpecialNdTuning t;
    t.inner_psi = psi_two();
    t.si.t_override = BigInt(0);
    special_nondominating(two_k1_c5_k3(), psi_zero(), true,
                          t);                                  // special_nd.odd_tail
  }
  special_nondominating(disjoint_cycles(5, 2), psi_x(),
                        true);                                 // special_nd.fallback
  special_nondominating(make_path(4), psi_zero());             // special_nd.inconclusive

  special_multihole(disjoint_cycles(5, 2), 2, true);           // special_mh.base + step
  special_multihole(disjoint_cycles(5, 3), 3, true);           // special_mh.fallback
  special_multihole(make_cycle(5), 2, true);                   // special_mh.inconclusive

  // long-hole pipeline
  long_nondominating_kssfree(disjoint_cycles(11, 2), psi_zero(), lp,
                             true);                            // long_nd.low_side
  {
    LongNdTuning t{BigInt(0)};
    long_nondominating_kssfree(c22_with_c5_apex(), psi_zero(), lp, true,
                               t);                             // long_nd.pair_side
  }
  long_nondominating_kssfree(make_cycle(11), psi_zero(), lp,
                             true);                            // long_nd.inconclusive

  {
    // ell=4 keeps the inner sprinkling weight q=2*s*ell at 16, within
    // reach of the gadget's uniform neighbourhood chi of 34.
    LongOrKssTuning t;
    t.inner_psi = psi_zero();
    t.si.t_override = BigInt(2);
    long_or_kss_nondominating(final_copy_gadget(33), psi_zero(),
                              LongHoleParams{4, 2, 4}, true,
                              t);                              // long_or_kss.copy_direct
  }
  {
    LongOrKssTuning t;
    t.inner_psi = psi_zero();
    t.si.t_override = BigInt(0);
    long_or_kss_nondominating(disjoint_cycles(4, 2), psi_zero(), lp, true,
                              t);                              // long_or_kss.kss_in_p
  }
  {
    LongOrKssTuning t;
    t.inner_psi = psi_two();
    t.si.t_override = BigInt(0);
    long_or_kss_nondominating(two_k1_c5_k3(), psi_zero(), lp, true,
                              t);                              // long_or_kss.hole_in_p
  }
  {
    LongOrKssTuning t;
    t.inner_psi = psi_two();
    t.si.t_override = BigInt(0);
    long_or_kss_nondominating(two_k1_c21_k3(), psi_zero(), lp, true,
                              t);                              // long_or_kss.tail
  }
  long_or_kss_nondominating(disjoint_cycles(4, 2), psi_zero(), lp,
                            true);                             // long_or_kss.fallback (biclique)
  long_or_kss_nondominating(disjoint_cycles(11, 2), psi_zero(), lp,
                            true);                             // long_or_kss.fallback (hole)
  long_or_kss_nondominating(make_path(4), psi_zero(), lp);     // long_or_kss.inconclusive

  // k-object chain
  k_object_extract(make_cycle(4), 1, lp, true);                // k_object.base_kss
  k_object_extract(make_cycle(11), 1, lp, true);               // k_object.base_hole
  k_object_extract(make_cycle(11), 1, lp);                     // k_object.inconclusive
  {
    KObjectTuning t;
    t.base_psi = psi_zero();
    t.step.inner_psi = psi_zero();
    t.step.si.t_override = BigInt(0);
    k_object_extract(disjoint_cycles(4, 2), 2, lp, true, 24,
                     t);                                       // k_object.step
  }
  k_object_extract(disjoint_union(make_complete_bipartite(2, 2),
                                  make_cycle(7)),
                   2, lp, true);                               // k_object.fallback
}

} // namespace chilab::fixtures
