#include "chilab/multihole.hpp"

#include <array>
#include <string>
#include <vector>

#include "chilab/coverage.hpp"
#include "chilab/kernels.hpp"
#include "chilab/verify.hpp"

namespace chilab {

namespace {

void validate_params(const LongHoleParams& params) {
  if (params.ell < 4)
    fail(ErrorKind::argument, "long-hole threshold must be at least 4");
  if (params.s < 1)
    fail(ErrorKind::unsupported, "biclique side must be at least 1");
  if (params.c < 1)
    fail(ErrorKind::argument, "binding exponent must be at least 1");
}

void check_bound(const BigInt& n) {
  if (n < 0)
    fail(ErrorKind::argument, "neighbourhood chi bound must be nonnegative");
}

void check_neighbourhoods(const Graph& g, const BigInt& n) {
  for (int v = 0; v < g.order(); ++v)
    if (BigInt(chi_of(g, g.neighbours(v))) > n)
      fail(ErrorKind::argument,
           "a neighbourhood exceeds the stated chi bound");
}

std::vector<int> set_to_sorted(const VertexSet& s) {
  std::vector<int> out;
  for (int v = s.first(); v >= 0; v = s.next_after(v)) out.push_back(v);
  return out;
}

Certificate inconclusive(const std::string& reason) {
  return InconclusiveCert{reason};
}

// Emitted holes carry the tightest kind their length pins down.
HoleSpec concrete_special(int length) {
  return length == 4 ? HoleSpec{HoleKind::four, 0, 0}
                     : HoleSpec{HoleKind::odd, 0, 0};
}

} // namespace

NonDecPoly psi_prime_special(const NonDecPoly& psi) {
  return NonDecPoly::identity().scaled(85) + psi.scaled(43);
}

NonDecPoly theta_binding(const LongHoleParams& params) {
  validate_params(params);
  return NonDecPoly::monomial(params.c * params.s);
}

NonDecPoly phi_long_kssfree(const NonDecPoly& psi,
                            const LongHoleParams& params) {
  validate_params(params);
  const NonDecPoly theta = theta_binding(params);
  const BigInt reach = big_pow(BigInt(2 * params.s * params.ell), params.s);
  const NonDecPoly bracket =
      NonDecPoly::monomial(params.s, reach) + theta + psi;
  return theta.scaled(2) + psi + bracket.scaled(params.ell + 1);
}

NonDecPoly phi_long_or_kss(const NonDecPoly& psi,
                           const LongHoleParams& params) {
  validate_params(params);
  return phi_strong_polys(params.s, 2 * params.s * params.ell,
                          phi_long_kssfree(psi, params))
      .phi;
}

NonDecPoly special_multihole_binding(int k) {
  if (k < 1) fail(ErrorKind::argument, "multihole count must be positive");
  NonDecPoly phi = NonDecPoly::identity();
  for (int j = 2; j <= k; ++j)
    phi = phi_strong_polys(2, 4, psi_prime_special(phi)).phi;
  return phi;
}

NonDecPoly k_object_binding(int k, const LongHoleParams& params) {
  if (k < 1) fail(ErrorKind::argument, "object count must be positive");
  NonDecPoly psi = theta_binding(params);
  for (int j = 2; j <= k; ++j) psi = phi_long_or_kss(psi, params);
  return psi;
}

bool odd_dominator_check(const Graph& g, const BigInt& x) {
  check_bound(x);
  check_neighbourhoods(g, x);
  const auto hole = find_hole(g, HoleSpec{HoleKind::odd, 0, 0});
  if (!hole) fail(ErrorKind::argument, "graph has no odd hole");
  return BigInt(chi_of(g, dominator_set(g, hole->vertex_set()))) <= 21 * x;
}

bool kss_free_longfree_binding_check(const Graph& g,
                                     const LongHoleParams& params) {
  validate_params(params);
  if (find_induced_biclique(g, params.s, params.s))
    fail(ErrorKind::argument, "graph contains an induced biclique");
  if (find_hole(g, HoleSpec{HoleKind::long_, params.ell, 0}))
    fail(ErrorKind::argument, "graph contains a long hole");
  const BigInt tau(biclique_tau(g));
  const BigInt omega(clique_number(g));
  const BigInt chi(chromatic_number(g));
  return chi <= big_pow(tau, params.c) + 1 &&
         tau < big_pow(omega, params.s) &&
         chi <= big_pow(omega, params.c * params.s);
}

bool long_dominator_check(const Graph& g, const BigInt& n,
                          const LongHoleParams& params) {
  validate_params(params);
  check_bound(n);
  check_neighbourhoods(g, n);
  const auto hole = find_hole(g, HoleSpec{HoleKind::long_, params.ell, 0});
  if (!hole) fail(ErrorKind::argument, "graph has no long hole");
  const VertexSet hole_set = hole->vertex_set();
  if (BigInt(chi_of(g, dominator_set(g, hole_set))) > (params.ell + 1) * n)
    return false;

  // first_nbr[i] = outside vertices whose least hole neighbour is c_i.
  const auto& cyc = hole->vertices;
  const int k = hole->length();
  std::vector<VertexSet> first_nbr(k + 1);
  for (int v = 0; v < g.order(); ++v) {
    if (hole_set.contains(v)) continue;
    for (int i = 1; i <= k; ++i) {
      if (g.adjacent(v, cyc[i - 1])) {
        first_nbr[i].add(v);
        break;
      }
    }
  }
  // Residue classes over i = ell-2..k: the attachment sets four apart
  // along the hole, each padded with the next rim vertex.
  for (int t = 1; t <= 4; ++t) {
    VertexSet cls;
    for (int i = params.ell - 2; i <= k; ++i) {
      if ((i - t) % 4 != 0) continue;
      cls = cls | first_nbr[i];
      cls.add(cyc[i % k]);
    }
    if (BigInt(chi_of(g, cls)) > n) return false;
  }
  return true;
}

Certificate special_hole_smallnbrs(const Graph& g, const BigInt& n,
                                   const NonDecPoly& psi, bool forced) {
  check_bound(n);
  check_neighbourhoods(g, n);
  const BigInt omega(clique_number(g));
  const BigInt gate = std::max(omega, 21 * n + psi.evaluate(omega));
  if (!forced && BigInt(chromatic_number(g)) <= gate) {
    coverage_hit("smallnbrs.inconclusive");
    return inconclusive("threshold");
  }

  auto hole = find_hole(g, HoleSpec{HoleKind::four, 0, 0});
  if (!hole) hole = find_hole(g, HoleSpec{HoleKind::odd, 0, 0});
  if (hole) {
    const VertexSet witness =
        anticomplete_set(g, hole->vertex_set(), g.vertices());
    const CopyCert cand{false, HolePattern{concrete_special(hole->length())},
                        {hole->vertices}, set_to_sorted(witness), psi};
    if (verify_certificate(g, Certificate{cand}).ok()) {
      coverage_hit("smallnbrs.hole");
      return cand;
    }
  }
  coverage_hit("smallnbrs.inconclusive");
  return inconclusive(hole ? "witness fails the chi test"
                           : "no special hole");
}

std::optional<std::pair<VertexSet, VertexSet>> anticomplete_pair_c4free(
    const Graph& g, const BigInt& n) {
  check_bound(n);
  if (find_hole(g, HoleSpec{HoleKind::four, 0, 0}))
    fail(ErrorKind::argument, "graph contains a four-hole");
  const int omega = clique_number(g);

  VertexSet big;
  for (int v = 0; v < g.order(); ++v)
    if (BigInt(chi_of(g, g.neighbours(v))) > n) big.add(v);
  if (BigInt(chi_of(g, big)) <= omega) return std::nullopt;

  const BigInt slack = n - 2 * omega;
  const auto qualify = [&](int x, int y)
      -> std::optional<std::pair<VertexSet, VertexSet>> {
    VertexSet a = g.neighbours(x) - g.neighbours(y);
    a.remove(y);
    VertexSet b = g.neighbours(y) - g.neighbours(x);
    b.remove(x);
    if (a.empty() || b.empty()) return std::nullopt;
    if (!are_anticomplete(g, a, b)) return std::nullopt;
    if (2 * BigInt(chi_of(g, a)) <= slack) return std::nullopt;
    if (2 * BigInt(chi_of(g, b)) <= slack) return std::nullopt;
    return std::make_pair(a, b);
  };

  // Least induced four-vertex path inside the big-chi set, oriented
  // so its first endpoint is below its last.
  std::array<int, 4> quad{};
  bool found = false;
  for (int v1 = big.first(); v1 >= 0 && !found; v1 = big.next_after(v1)) {
    const VertexSet closed1 = g.neighbours(v1) | VertexSet::single(v1);
    const VertexSet n1 = g.neighbours(v1) & big;
    for (int v2 = n1.first(); v2 >= 0 && !found; v2 = n1.next_after(v2)) {
      const VertexSet n2 = (g.neighbours(v2) & big) - closed1;
      for (int v3 = n2.first(); v3 >= 0 && !found; v3 = n2.next_after(v3)) {
        const VertexSet n3 = ((g.neighbours(v3) & big) - closed1) -
                             (g.neighbours(v2) | VertexSet::single(v2));
        for (int v4 = n3.first(); v4 >= 0; v4 = n3.next_after(v4)) {
          if (v1 < v4) {
            quad = {v1, v2, v3, v4};
            found = true;
            break;
          }
        }
      }
    }
  }
  if (found) {
    const std::array<std::pair<int, int>, 3> edges{
        {{quad[0], quad[1]}, {quad[2], quad[3]}, {quad[1], quad[2]}}};
    for (const auto& [x, y] : edges)
      if (auto pair = qualify(x, y)) return pair;
  }
  for (int x = 0; x < g.order(); ++x) {
    const VertexSet nx = g.neighbours(x);
    for (int y = nx.next_after(x); y >= 0; y = nx.next_after(y))
      if (auto pair = qualify(x, y)) return pair;
  }
  return std::nullopt;
}

Certificate odd_nondominating_c4free(const Graph& g, const NonDecPoly& psi,
                                     bool forced, const OddC4Tuning& tuning) {
  if (find_hole(g, HoleSpec{HoleKind::four, 0, 0}))
    fail(ErrorKind::argument, "graph contains a four-hole");
  const BigInt omega(clique_number(g));
  if (!forced &&
      BigInt(chromatic_number(g)) <= 85 * omega + 43 * psi.evaluate(omega)) {
    coverage_hit("odd_c4.inconclusive");
    return inconclusive("threshold");
  }
  const BigInt n = tuning.n_override ? *tuning.n_override
                                     : 4 * omega + 2 * psi.evaluate(omega);
  check_bound(n);

  VertexSet low;
  for (int v = 0; v < g.order(); ++v)
    if (BigInt(chi_of(g, g.neighbours(v))) <= n) low.add(v);
  if (low.any()) {
    const InducedSubgraph sub = induced_subgraph(g, low);
    const Certificate inner = special_hole_smallnbrs(sub.graph, n, psi, forced);
    if (std::holds_alternative<CopyCert>(inner)) {
      const CopyCert copy =
          std::get<CopyCert>(lift_certificate(inner, sub.vertices));
      if (auto cert = copy_with_best_witness(g, copy.pattern, copy.parts,
                                             VertexSet::of(copy.witness),
                                             psi)) {
        coverage_hit("odd_c4.smallnbrs");
        return *cert;
      }
    }
  }

  if (const auto pair = anticomplete_pair_c4free(g, n)) {
    const auto& [xs, ys] = *pair;
    if (const auto hole = find_hole(g, xs, HoleSpec{HoleKind::special_, 0, 0}))
      if (auto cert = copy_with_best_witness(
              g, HolePattern{concrete_special(hole->length())},
              {hole->vertices}, ys, psi)) {
        coverage_hit("odd_c4.pair");
        return *cert;
      }
  }
  coverage_hit("odd_c4.inconclusive");
  return inconclusive("no nondominating odd hole found");
}

Certificate special_nondominating(const Graph& g, const NonDecPoly& psi,
                                  bool forced, const SpecialNdTuning& tuning) {
  const NonDecPoly inner_psi =
      tuning.inner_psi ? *tuning.inner_psi : psi_prime_special(psi);
  const Certificate iso = strong_isolation(g, 2, 4, inner_psi, forced,
                                           tuning.si);

  if (const auto* copy = std::get_if<CopyCert>(&iso)) {
    // A biclique copy on sides {a,b} x {c,d} wraps into the four-hole
    // a-c-b-d.
    const std::vector<int> cycle{copy->parts[0][0], copy->parts[1][0],
                                 copy->parts[0][1], copy->parts[1][1]};
    if (auto cert = copy_with_best_witness(
            g, HolePattern{HoleSpec{HoleKind::four, 0, 0}}, {cycle},
            VertexSet::of(copy->witness), psi)) {
      coverage_hit("special_nd.copy_to_hole");
      return *cert;
    }
  } else if (const auto* spr = std::get_if<SprinklingCert>(&iso)) {
    const VertexSet p_set = VertexSet::of(spr->p);
    const VertexSet q_set = VertexSet::of(spr->q_set);
    if (const auto hole = find_hole(g, p_set, HoleSpec{HoleKind::four, 0, 0})) {
      const VertexSet proof_w = anticomplete_set(g, hole->vertex_set(), q_set);
      if (auto cert = copy_with_best_witness(
              g, HolePattern{HoleSpec{HoleKind::four, 0, 0}}, {hole->vertices},
              proof_w, psi)) {
        coverage_hit("special_nd.four_in_p");
        return *cert;
      }
    } else {
      coverage_hit("special_nd.odd_tail");
      const InducedSubgraph sub = induced_subgraph(g, p_set);
      const Certificate inner =
          odd_nondominating_c4free(sub.graph, psi, forced, tuning.tail);
      if (std::holds_alternative<CopyCert>(inner)) {
        const CopyCert copy =
            std::get<CopyCert>(lift_certificate(inner, sub.vertices));
        if (auto cert = copy_with_best_witness(g, copy.pattern, copy.parts,
                                               VertexSet::of(copy.witness),
                                               psi))
          return *cert;
      }
    }
  }

  if (forced) {
    std::optional<Certificate> out;
    for_each_hole(g, g.vertices(), HoleSpec{HoleKind::special_, 0, 0},
                  [&](const Hole& hole) {
                    const VertexSet w = anticomplete_set(g, hole.vertex_set(),
                                                         g.vertices());
                    const CopyCert cand{
                        false, HolePattern{concrete_special(hole.length())},
                        {hole.vertices}, set_to_sorted(w), psi};
                    if (verify_certificate(g, Certificate{cand}).ok()) {
                      out = Certificate{cand};
                      return false;
                    }
                    return true;
                  });
    if (out) {
      coverage_hit("special_nd.fallback");
      return *out;
    }
  }
  coverage_hit("special_nd.inconclusive");
  if (std::holds_alternative<InconclusiveCert>(iso)) return iso;
  return inconclusive("no nondominating special hole found");
}

Certificate special_multihole(const Graph& g, int k, bool forced,
                              int direct_cap) {
  if (k < 1) fail(ErrorKind::argument, "multihole count must be positive");
  const auto give_up = [](const std::string& reason) {
    coverage_hit("special_mh.inconclusive");
    return inconclusive(reason);
  };
  const BigInt omega(clique_number(g));
  if (!forced && BigInt(chromatic_number(g)) <=
                     special_multihole_binding(k).evaluate(omega))
    return give_up("threshold");

  const ComponentSpec special{HoleSpec{HoleKind::special_, 0, 0}};
  if (k == 1) {
    if (const auto hole = find_hole(g, HoleSpec{HoleKind::special_, 0, 0})) {
      const MultiholeCert cand{
          {MultiholeComponentCert{special, {hole->vertices}}}};
      if (verify_certificate(g, Certificate{cand}).ok()) {
        coverage_hit("special_mh.base");
        return cand;
      }
    }
    return give_up("no special hole");
  }

  const Certificate step =
      special_nondominating(g, special_multihole_binding(k - 1), forced);
  if (const auto* copy = std::get_if<CopyCert>(&step)) {
    const InducedSubgraph sub =
        induced_subgraph(g, VertexSet::of(copy->witness));
    const Certificate inner =
        special_multihole(sub.graph, k - 1, forced, direct_cap);
    if (std::holds_alternative<MultiholeCert>(inner)) {
      MultiholeCert cand =
          std::get<MultiholeCert>(lift_certificate(inner, sub.vertices));
      cand.components.insert(cand.components.begin(),
                             MultiholeComponentCert{special, copy->parts});
      if (verify_certificate(g, Certificate{cand}).ok()) {
        coverage_hit("special_mh.step");
        return cand;
      }
    }
  }

  if (forced && g.order() <= direct_cap) {
    const std::vector<ComponentSpec> specs(static_cast<std::size_t>(k),
                                           special);
    if (const auto placed = find_multihole(g, specs)) {
      MultiholeCert cand;
      for (const auto& pc : *placed)
        cand.components.push_back(MultiholeComponentCert{special, pc.parts});
      if (verify_certificate(g, Certificate{cand}).ok()) {
        coverage_hit("special_mh.fallback");
        return cand;
      }
    }
  }
  return give_up("could not assemble the multihole");
}

std::optional<std::pair<VertexSet, VertexSet>> anticomplete_pair_long(
    const Graph& g, const BigInt& n, const LongHoleParams& params,
    bool forced) {
  validate_params(params);
  check_bound(n);
  const int span = 2 * params.s * params.ell;
  if (!forced) {
    if (params.s >= 2 && find_induced_biclique(g, params.s, params.s))
      fail(ErrorKind::argument, "graph contains an induced biclique");
    if (find_hole(g, HoleSpec{HoleKind::long_, params.ell, span}))
      fail(ErrorKind::argument,
           "graph has a hole of length between ell and 2sl");
  }
  const BigInt omega(clique_number(g));

  VertexSet big;
  for (int v = 0; v < g.order(); ++v)
    if (BigInt(chi_of(g, g.neighbours(v))) > n) big.add(v);
  const auto hole = find_hole(g, big, HoleSpec{HoleKind::long_, span + 1, 0});
  if (!hole) return std::nullopt;

  // The cut runs along the first 2sl-1 rim vertices; outside vertices
  // seeing a stable s-set of the path are absorbed before the ends'
  // neighbourhoods are split.
  const std::vector<int> path(hole->vertices.begin(),
                              hole->vertices.begin() + (span - 1));
  const VertexSet p_set = VertexSet::of(path);
  VertexSet absorbed;
  for (int v = 0; v < g.order(); ++v) {
    if (p_set.contains(v)) continue;
    if (has_stable_set_of_size(g, g.neighbours(v) & p_set, params.s))
      absorbed.add(v);
  }
  const VertexSet xs = g.neighbours(path.front()) - absorbed;
  const VertexSet ys = g.neighbours(path.back()) - absorbed;

  // The construction promises a separated pair; hand back nothing
  // rather than a pair that fails its own claims.
  if (xs.empty() || ys.empty()) return std::nullopt;
  if (xs.intersects(ys)) return std::nullopt;
  if (!are_anticomplete(g, xs, ys)) return std::nullopt;
  const BigInt slack =
      n - big_pow(BigInt(span), params.s) * big_pow(omega, params.s);
  if (BigInt(chi_of(g, xs)) <= slack) return std::nullopt;
  if (BigInt(chi_of(g, ys)) <= slack) return std::nullopt;
  return std::make_pair(xs, ys);
}

Certificate long_nondominating_kssfree(const Graph& g, const NonDecPoly& psi,
                                       const LongHoleParams& params,
                                       bool forced,
                                       const LongNdTuning& tuning) {
  validate_params(params);
  const int span = 2 * params.s * params.ell;
  if (!forced) {
    if (params.s >= 2 && find_induced_biclique(g, params.s, params.s))
      fail(ErrorKind::argument, "graph contains an induced biclique");
    if (find_hole(g, HoleSpec{HoleKind::long_, params.ell, span}))
      fail(ErrorKind::argument,
           "graph has a hole of length between ell and 2sl");
  }
  const BigInt omega(clique_number(g));
  if (!forced && BigInt(chromatic_number(g)) <=
                     phi_long_kssfree(psi, params).evaluate(omega)) {
    coverage_hit("long_nd.inconclusive");
    return inconclusive("threshold");
  }
  const BigInt n = tuning.n_override
                       ? *tuning.n_override
                       : big_pow(BigInt(span), params.s) *
                                 big_pow(omega, params.s) +
                             theta_binding(params).evaluate(omega) +
                             psi.evaluate(omega);
  check_bound(n);
  const HoleSpec long_spec{HoleKind::long_, params.ell, 0};

  VertexSet low;
  for (int v = 0; v < g.order(); ++v)
    if (BigInt(chi_of(g, g.neighbours(v))) <= n) low.add(v);
  if (const auto hole = find_hole(g, low, long_spec)) {
    const VertexSet proof_w = anticomplete_set(g, hole->vertex_set(), low);
    if (auto cert = copy_with_best_witness(g, HolePattern{long_spec},
                                           {hole->vertices}, proof_w, psi)) {
      coverage_hit("long_nd.low_side");
      return *cert;
    }
  }

  if (const auto pair = anticomplete_pair_long(g, n, params, forced)) {
    if (const auto hole = find_hole(g, pair->first, long_spec))
      if (auto cert = copy_with_best_witness(g, HolePattern{long_spec},
                                             {hole->vertices}, pair->second,
                                             psi)) {
        coverage_hit("long_nd.pair_side");
        return *cert;
      }
  }
  coverage_hit("long_nd.inconclusive");
  return inconclusive("no nondominating long hole found");
}

Certificate long_or_kss_nondominating(const Graph& g, const NonDecPoly& psi,
                                      const LongHoleParams& params, bool forced,
                                      const LongOrKssTuning& tuning) {
  validate_params(params);
  const NonDecPoly inner_psi =
      tuning.inner_psi ? *tuning.inner_psi : phi_long_kssfree(psi, params);
  const int span = 2 * params.s * params.ell;
  const HoleSpec long_spec{HoleKind::long_, params.ell, 0};
  const Certificate iso =
      strong_isolation(g, params.s, span, inner_psi, forced, tuning.si);

  if (const auto* copy = std::get_if<CopyCert>(&iso)) {
    if (auto cert = copy_with_best_witness(
            g, BicliquePattern{params.s, params.s}, copy->parts,
            VertexSet::of(copy->witness), psi)) {
      coverage_hit("long_or_kss.copy_direct");
      return *cert;
    }
  } else if (const auto* spr = std::get_if<SprinklingCert>(&iso)) {
    const VertexSet p_set = VertexSet::of(spr->p);
    const VertexSet q_set = VertexSet::of(spr->q_set);
    bool object_in_p = false;
    if (const auto bic = find_induced_biclique(g, p_set, params.s, params.s)) {
      object_in_p = true;
      const VertexSet proof_w = anticomplete_set(g, bic->vertex_set(), q_set);
      if (auto cert = copy_with_best_witness(
              g, BicliquePattern{params.s, params.s},
              {bic->side_a, bic->side_b}, proof_w, psi)) {
        coverage_hit("long_or_kss.kss_in_p");
        return *cert;
      }
    }
    if (const auto hole =
            find_hole(g, p_set, HoleSpec{HoleKind::long_, params.ell, span})) {
      object_in_p = true;
      const VertexSet proof_w = anticomplete_set(g, hole->vertex_set(), q_set);
      if (auto cert = copy_with_best_witness(g, HolePattern{long_spec},
                                             {hole->vertices}, proof_w, psi)) {
        coverage_hit("long_or_kss.hole_in_p");
        return *cert;
      }
    }
    if (!object_in_p) {
      coverage_hit("long_or_kss.tail");
      const InducedSubgraph sub = induced_subgraph(g, p_set);
      const Certificate inner = long_nondominating_kssfree(
          sub.graph, psi, params, forced, tuning.tail);
      if (std::holds_alternative<CopyCert>(inner)) {
        const CopyCert copy =
            std::get<CopyCert>(lift_certificate(inner, sub.vertices));
        if (auto cert = copy_with_best_witness(g, copy.pattern, copy.parts,
                                               VertexSet::of(copy.witness),
                                               psi))
          return *cert;
      }
    }
  }

  if (forced) {
    std::optional<Certificate> out;
    for_each_induced_biclique(
        g, g.vertices(), params.s, params.s, [&](const Biclique& bic) {
          const VertexSet w =
              anticomplete_set(g, bic.vertex_set(), g.vertices());
          const CopyCert cand{false, BicliquePattern{params.s, params.s},
                              {bic.side_a, bic.side_b}, set_to_sorted(w), psi};
          if (verify_certificate(g, Certificate{cand}).ok()) {
            out = Certificate{cand};
            return false;
          }
          return true;
        });
    if (!out)
      for_each_hole(g, g.vertices(), long_spec, [&](const Hole& hole) {
        const VertexSet w =
            anticomplete_set(g, hole.vertex_set(), g.vertices());
        const CopyCert cand{false, HolePattern{long_spec}, {hole.vertices},
                            set_to_sorted(w), psi};
        if (verify_certificate(g, Certificate{cand}).ok()) {
          out = Certificate{cand};
          return false;
        }
        return true;
      });
    if (out) {
      coverage_hit("long_or_kss.fallback");
      return *out;
    }
  }
  coverage_hit("long_or_kss.inconclusive");
  if (std::holds_alternative<InconclusiveCert>(iso)) return iso;
  return inconclusive("no nondominating object found");
}

Certificate k_object_extract(const Graph& g, int k,
                             const LongHoleParams& params, bool forced,
                             int direct_cap, const KObjectTuning& tuning) {
  if (k < 1) fail(ErrorKind::argument, "object count must be positive");
  validate_params(params);
  const auto give_up = [](const std::string& reason) {
    coverage_hit("k_object.inconclusive");
    return inconclusive(reason);
  };
  const NonDecPoly base_psi =
      tuning.base_psi ? *tuning.base_psi : theta_binding(params);
  const ComponentSpec either{EitherComponent{params.s, params.ell}};
  const BigInt omega(clique_number(g));
  const BigInt chi(chromatic_number(g));

  if (k == 1) {
    if (!forced && chi <= base_psi.evaluate(omega))
      return give_up("threshold");
    if (const auto bic = find_induced_biclique(g, params.s, params.s)) {
      const MultiholeCert cand{
          {MultiholeComponentCert{either, {bic->side_a, bic->side_b}}}};
      if (verify_certificate(g, Certificate{cand}).ok()) {
        coverage_hit("k_object.base_kss");
        return cand;
      }
    }
    if (const auto hole =
            find_hole(g, HoleSpec{HoleKind::long_, params.ell, 0})) {
      const MultiholeCert cand{
          {MultiholeComponentCert{either, {hole->vertices}}}};
      if (verify_certificate(g, Certificate{cand}).ok()) {
        coverage_hit("k_object.base_hole");
        return cand;
      }
    }
    // Chi above the binding bound with no object contradicts the
    // assumed binding; flag it rather than certify.
    return give_up(forced ? "no object found"
                          : "chi exceeds the binding bound yet no object "
                            "exists; binding assumption violated");
  }

  // The bound passed to the peeling step is the chain one level down.
  NonDecPoly prev = base_psi;
  for (int j = 2; j <= k - 1; ++j) prev = phi_long_or_kss(prev, params);

  if (!forced && chi <= phi_long_or_kss(prev, params).evaluate(omega))
    return give_up("threshold");

  const Certificate step =
      long_or_kss_nondominating(g, prev, params, forced, tuning.step);
  if (const auto* copy = std::get_if<CopyCert>(&step)) {
    const InducedSubgraph sub =
        induced_subgraph(g, VertexSet::of(copy->witness));
    const Certificate inner =
        k_object_extract(sub.graph, k - 1, params, forced, direct_cap, tuning);
    if (std::holds_alternative<MultiholeCert>(inner)) {
      MultiholeCert cand =
          std::get<MultiholeCert>(lift_certificate(inner, sub.vertices));
      cand.components.insert(cand.components.begin(),
                             MultiholeComponentCert{either, copy->parts});
      if (verify_certificate(g, Certificate{cand}).ok()) {
        coverage_hit("k_object.step");
        return cand;
      }
    }
  }

  if (forced && g.order() <= direct_cap) {
    const std::vector<ComponentSpec> specs(static_cast<std::size_t>(k),
                                           either);
    if (const auto placed = find_multihole(g, specs)) {
      MultiholeCert cand;
      for (const auto& pc : *placed)
        cand.components.push_back(MultiholeComponentCert{either, pc.parts});
      if (verify_certificate(g, Certificate{cand}).ok()) {
        coverage_hit("k_object.fallback");
        return cand;
      }
    }
  }
  return give_up("could not assemble the objects");
}

} // namespace chilab
