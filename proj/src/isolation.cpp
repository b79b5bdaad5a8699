#include "chilab/isolation.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "chilab/coverage.hpp"
#include "chilab/error.hpp"
#include "chilab/kernels.hpp"
#include "chilab/verify.hpp"

namespace chilab {

namespace {

NonDecPoly x_poly() { return NonDecPoly::identity(); }

std::vector<int> set_to_sorted(const VertexSet& s) { return s.to_vector(); }

// First `t` members of `s` in ascending order. Requires t <= s.count().
VertexSet take_first(const VertexSet& s, int t) {
  VertexSet out;
  int taken = 0;
  for (int v : s) {
    if (taken == t) break;
    out.add(v);
    ++taken;
  }
  if (taken < t) fail(ErrorKind::argument, "take_first past end of set");
  return out;
}

int to_small_int(const BigInt& v) {
  if (v < 0 || v > kMaxVertices * kMaxVertices)
    fail(ErrorKind::argument, "value out of small-int range");
  return static_cast<int>(v);
}

// Visits the size-k subsets of `items` in lexicographic order; visitor
// returns false to stop.
bool for_each_subset(const std::vector<int>& items, int k,
                     const std::function<bool(const std::vector<int>&)>& visit) {
  if (k < 0) fail(ErrorKind::argument, "subset size negative");
  std::vector<int> pick;
  std::function<bool(int)> rec = [&](int from) {
    if (static_cast<int>(pick.size()) == k) return visit(pick);
    if (from >= static_cast<int>(items.size())) return true;
    int needed = k - static_cast<int>(pick.size());
    for (int i = from; i + needed <= static_cast<int>(items.size()); ++i) {
      pick.push_back(items[i]);
      if (!rec(i + 1)) return false;
      pick.pop_back();
    }
    return true;
  };
  return rec(0);
}

}  // namespace

NonDecPoly phi_complete_poly(int k, const NonDecPoly& psi) {
  if (k < 0) fail(ErrorKind::argument, "phi_complete_poly: k must be >= 0");
  NonDecPoly base = NonDecPoly::identity() + NonDecPoly::constant(1);
  return poly_pow(base, k) * psi + NonDecPoly::identity();
}

BigInt eval_phi_complete(int k, const NonDecPoly& psi, const BigInt& x) {
  return phi_complete_poly(k, psi).evaluate(x);
}

PhiStrong phi_strong_polys(int s, int q, const NonDecPoly& psi) {
  if (s < 1) fail(ErrorKind::unsupported, "phi_strong_polys: s must be >= 1");
  if (q < 0) fail(ErrorKind::argument, "phi_strong_polys: q must be >= 0");
  const NonDecPoly x = x_poly();
  BigInt geo = 2;
  for (int i = 1; i <= s - 1; ++i) geo += big_pow(BigInt(q), i);
  const BigInt sp1 = BigInt(s + 1);
  const BigInt qs = big_pow(BigInt(q), s);

  // phi'(x) = x^s (s psi + (s+1)^s x^{s(s+1)} psi + (s+1) x^{s+1})
  //           + q^s (s+1) x^{s+1} + geo psi + 2
  NonDecPoly inner = psi.scaled(BigInt(s)) +
                     NonDecPoly::monomial(s * (s + 1), big_pow(sp1, s)) * psi +
                     NonDecPoly::monomial(s + 1, sp1);
  NonDecPoly phi_prime = NonDecPoly::monomial(s, 1) * inner +
                         NonDecPoly::monomial(s + 1, qs * sp1) +
                         psi.scaled(geo) + NonDecPoly::constant(2);

  // phi(x) = (s+1)^{2s} x^{2+2s(s+1)} psi + (s+1)^s x^{1+s(s+1)} phi'
  //          + (x+1)(s+1) x^{s+1}
  NonDecPoly phi =
      NonDecPoly::monomial(2 + 2 * s * (s + 1), big_pow(sp1, 2 * s)) * psi +
      NonDecPoly::monomial(1 + s * (s + 1), big_pow(sp1, s)) * phi_prime +
      (x + NonDecPoly::constant(1)) * NonDecPoly::monomial(s + 1, sp1);
  return PhiStrong{phi_prime, phi};
}

std::pair<BigInt, BigInt> eval_phi_strong(int s, int q, const NonDecPoly& psi,
                                          const BigInt& x) {
  PhiStrong polys = phi_strong_polys(s, q, psi);
  return {polys.phi_prime.evaluate(x), polys.phi.evaluate(x)};
}

ThresholdTable threshold_table(int s, int q, const BigInt& t, const BigInt& omega,
                               const BigInt& p) {
  if (s < 0 || q < 0 || t < 0 || omega < 0 || p < 0)
    fail(ErrorKind::argument, "threshold_table: parameters must be nonnegative");
  ThresholdTable table;
  table.p = p;
  table.m.assign(s + 1, 0);
  table.n.assign(s + 1, 0);
  table.m[s] = big_pow(t, s) * p + t;
  table.n[s] = t;
  for (int i = s - 1; i >= 0; --i) {
    table.m[i] = omega * table.m[i + 1] + p;
    table.n[i] = BigInt(q) * table.n[i + 1] + p;
  }
  return table;
}

namespace {

std::vector<int> map_list(const std::vector<int>& local,
                          const std::vector<int>& to_global) {
  std::vector<int> out;
  out.reserve(local.size());
  for (int v : local) {
    if (v < 0 || v >= static_cast<int>(to_global.size()))
      fail(ErrorKind::range, "lift: local vertex outside map");
    out.push_back(to_global[v]);
  }
  return out;
}

}  // namespace

Certificate lift_certificate(const Certificate& cert,
                             const std::vector<int>& to_global) {
  if (const auto* c = std::get_if<CopyCert>(&cert)) {
    CopyCert out = *c;
    for (auto& part : out.parts) part = map_list(part, to_global);
    out.witness = map_list(out.witness, to_global);
    return out;
  }
  if (const auto* c = std::get_if<SprinklingCert>(&cert)) {
    SprinklingCert out = *c;
    out.p = map_list(out.p, to_global);
    out.q_set = map_list(out.q_set, to_global);
    return out;
  }
  if (const auto* c = std::get_if<TemplateCert>(&cert)) {
    TemplateCert out = *c;
    for (auto& block : out.blocks) block = map_list(block, to_global);
    return out;
  }
  if (const auto* c = std::get_if<HFreeSetCert>(&cert)) {
    HFreeSetCert out = *c;
    out.set = map_list(out.set, to_global);
    return out;
  }
  if (const auto* c = std::get_if<MultiholeCert>(&cert)) {
    MultiholeCert out = *c;
    for (auto& comp : out.components)
      for (auto& part : comp.parts) part = map_list(part, to_global);
    return out;
  }
  return cert;  // inconclusive carries no vertices
}

std::optional<Certificate> copy_with_best_witness(
    const Graph& g, const Pattern& pattern,
    const std::vector<std::vector<int>>& parts, const VertexSet& proof_witness,
    const NonDecPoly& psi) {
  VertexSet body;
  for (const auto& part : parts)
    for (int v : part) body.add(v);
  const VertexSet maximal = anticomplete_set(g, body, g.vertices());
  for (const VertexSet* w : {&maximal, &proof_witness}) {
    CopyCert cand{false, pattern, parts, set_to_sorted(*w), psi};
    if (verify_certificate(g, cand).ok()) return Certificate{cand};
  }
  return std::nullopt;
}

Certificate isolate_complete(const Graph& g, int k, const NonDecPoly& psi,
                             bool forced) {
  if (k < 1) fail(ErrorKind::argument, "isolate_complete: k must be >= 1");
  const int omega = clique_number(g);
  const int chi = chromatic_number(g);
  if (!forced && BigInt(chi) <= eval_phi_complete(k, psi, omega))
    return InconclusiveCert{"threshold"};
  const BigInt psi_at_omega = psi.evaluate(omega);

  if (omega < k) {
    HFreeSetCert cand{CompletePattern{k}, set_to_sorted(g.vertices()), psi};
    if (BigInt(chi) > psi_at_omega && verify_certificate(g, cand).ok()) {
      coverage_hit("ic.hfree_all");
      return cand;
    }
    coverage_hit("ic.inconclusive");
    return InconclusiveCert{"no qualifying part"};
  }

  const VertexSet clique = max_clique(g);
  const std::vector<int> clique_list = set_to_sorted(clique);

  std::optional<Certificate> found;
  for_each_subset(clique_list, k, [&](const std::vector<int>& x) {
    VertexSet xs = VertexSet::of(x);
    VertexSet part = common_nonneighbours(g, xs) - clique;
    if (BigInt(chi_of(g, part)) <= psi_at_omega) return true;
    CopyCert cand{true, CompletePattern{k}, {x}, set_to_sorted(part), psi};
    if (verify_certificate(g, cand).ok()) {
      coverage_hit("ic.isolated_part");
      found = cand;
      return false;
    }
    return true;
  });
  if (found) return *found;

  for_each_subset(clique_list, k - 1, [&](const std::vector<int>& y) {
    VertexSet rest = clique - VertexSet::of(y);
    VertexSet part = common_neighbours(g, rest) - clique;
    if (BigInt(chi_of(g, part)) <= psi_at_omega) return true;
    HFreeSetCert cand{CompletePattern{k}, set_to_sorted(part), psi};
    if (verify_certificate(g, cand).ok()) {
      coverage_hit("ic.hfree_part");
      found = cand;
      return false;
    }
    return true;
  });
  if (found) return *found;

  coverage_hit("ic.inconclusive");
  return InconclusiveCert{"no qualifying part"};
}

int big_nonneighbour_within(const Graph& g, const VertexSet& scope) {
  if (scope.empty())
    fail(ErrorKind::precondition, "big_nonneighbour: empty scope");
  if (clique_number_within(g, scope) == scope.count())
    fail(ErrorKind::precondition, "big_nonneighbour: complete scope");
  int best = -1;
  int best_chi = -1;
  bool best_nonempty = false;
  for (int v : scope) {
    VertexSet nonnbrs = (scope - g.neighbours(v));
    nonnbrs.remove(v);
    VertexSet with = nonnbrs;
    with.add(v);
    int c = chi_of(g, with);
    bool nonempty = nonnbrs.any();
    if (c > best_chi || (c == best_chi && nonempty && !best_nonempty)) {
      best = v;
      best_chi = c;
      best_nonempty = nonempty;
    }
  }
  return best;
}

int big_nonneighbour(const Graph& g) {
  return big_nonneighbour_within(g, g.vertices());
}

namespace {

// One run of the neighbourhood-splitting step on the whole of `g`. Every
// emission is built as a candidate certificate and accepted only when the
// independent verifier passes it, so the definitional chi tests and the
// structural checks coincide.
Certificate bigbip_core(const Graph& g, int s, int q, const BigInt& t,
                        const NonDecPoly& psi) {
  if (s < 0 || q < 0 || t < 0)
    fail(ErrorKind::argument, "bigbip: parameters must be nonnegative");
  const int omega = clique_number(g);
  const BigInt p = psi.evaluate(omega);
  const ThresholdTable table = threshold_table(s, q, t, BigInt(omega), p);

  VertexSet grown;
  while (grown.count() < s) {
    const int level = grown.count() + 1;
    const VertexSet cur_n = common_neighbours(g, grown);
    const VertexSet cur_m = common_nonneighbours(g, grown);
    VertexSet low;
    for (int v : cur_m)
      if (BigInt(chi_of(g, g.neighbours(v) & cur_n)) <= table.n[level])
        low.add(v);

    if (BigInt(chi_of(g, low)) > p) {
      VertexSet part_p, part_q;
      if (grown.empty()) {
        for (int v : low) {
          part_p.add(v);
          if (BigInt(chi_of(g, part_p)) > p) break;
        }
        part_q = g.vertices() - part_p;
      } else {
        part_p = low;
        part_q = cur_n;
      }
      BigInt r = 0;
      for (int v : part_p) r = std::max(r, BigInt(chi_of(g, g.neighbours(v) & part_q)));
      SprinklingCert cand{set_to_sorted(part_p), set_to_sorted(part_q), q, r, psi};
      if (verify_certificate(g, cand).ok()) {
        coverage_hit(grown.empty() ? "bb.lowset_sprinkling" : "bb.step_sprinkling");
        return cand;
      }
    }

    VertexSet rest = cur_m - low;
    if (rest.empty()) {
      coverage_hit("bb.stall");
      return InconclusiveCert{"stalled: no candidate block"};
    }
    if (clique_number_within(g, rest) == rest.count()) {
      coverage_hit("bb.stall");
      return InconclusiveCert{"stalled: candidate block complete"};
    }
    grown.add(big_nonneighbour_within(g, rest));
    coverage_hit("bb.grow");
  }

  const VertexSet cur_n = common_neighbours(g, grown);
  const VertexSet cur_m = common_nonneighbours(g, grown);
  if (BigInt(cur_n.count()) < t)
    return InconclusiveCert{"final: common neighbourhood below t"};
  const int tt = to_small_int(t);
  const VertexSet top = take_first(cur_n, tt);

  std::optional<Certificate> found;
  for_each_stable_set(g, top, s, [&](const VertexSet& side) {
    VertexSet w;
    for (int v : cur_m)
      if (!g.neighbours(v).intersects(side)) w.add(v);
    CopyCert cand{false, BicliquePattern{s, s},
                  {set_to_sorted(grown), set_to_sorted(side)}, set_to_sorted(w),
                  psi};
    if (verify_certificate(g, cand).ok()) {
      coverage_hit("bb.final_copy");
      found = cand;
      return false;
    }
    return true;
  });
  if (found) return *found;

  VertexSet dominated;
  for (int v : cur_m)
    if (!has_stable_set_of_size(g, top - g.neighbours(v), s)) dominated.add(v);
  if (BigInt(dominated.count()) < t)
    return InconclusiveCert{"final: residual block below t"};
  TemplateCert cand{{set_to_sorted(take_first(dominated, tt)), set_to_sorted(top)},
                    tt, s};
  if (!verify_certificate(g, cand).ok())
    return InconclusiveCert{"final: template rejected"};
  coverage_hit("bb.final_template");
  return cand;
}

}  // namespace

Certificate bigbip_step_within(const Graph& g, const VertexSet& scope, int s,
                               int q, const BigInt& t, const NonDecPoly& psi) {
  InducedSubgraph sub = induced_subgraph(g, scope);
  Certificate local = bigbip_core(sub.graph, s, q, t, psi);
  if (is_inconclusive(local)) return local;
  Certificate lifted = lift_certificate(local, sub.vertices);
  if (!verify_certificate(g, lifted).ok())
    return InconclusiveCert{"lifted certificate rejected"};
  return lifted;
}

Certificate bigbip_step(const Graph& g, int s, int q, int t,
                        const NonDecPoly& psi) {
  if (t < 0) fail(ErrorKind::argument, "bigbip: t must be >= 0");
  return bigbip_step_within(g, g.vertices(), s, q, BigInt(t), psi);
}

namespace {

struct HomeKey {
  int block;               // 0-based index of the home block
  std::vector<int> anchor; // lex-least stable s-set avoided by the vertex

  bool operator<(const HomeKey& o) const {
    if (block != o.block) return block < o.block;
    return anchor < o.anchor;
  }
};

std::optional<std::vector<int>> least_stable_subset(const Graph& g,
                                                    const VertexSet& within,
                                                    int s) {
  std::optional<std::vector<int>> found;
  for_each_stable_set(g, within, s, [&](const VertexSet& set) {
    found = set_to_sorted(set);
    return false;
  });
  return found;
}

}  // namespace

Certificate strong_isolation(const Graph& g, int s, int q, const NonDecPoly& psi,
                             bool forced, const StrongIsolationTuning& tuning) {
  if (s < 1) fail(ErrorKind::unsupported, "strong_isolation: s must be >= 1");
  if (q < 0) fail(ErrorKind::argument, "strong_isolation: q must be >= 0");
  const PhiStrong polys = phi_strong_polys(s, q, psi);
  const int omega = clique_number(g);
  if (!forced && BigInt(chromatic_number(g)) <= polys.phi.evaluate(omega))
    return InconclusiveCert{"threshold"};

  BigInt block_size = tuning.t_override
                          ? *tuning.t_override
                          : BigInt(s + 1) * big_pow(BigInt(omega), s + 1);
  if (block_size < 0)
    fail(ErrorKind::argument, "strong_isolation: negative block size");

  Certificate first = bigbip_step_within(g, g.vertices(), s, q, block_size, psi);
  if (std::holds_alternative<CopyCert>(first) ||
      std::holds_alternative<SprinklingCert>(first)) {
    coverage_hit("si.claim1_cert");
    return first;
  }
  if (is_inconclusive(first)) return first;
  coverage_hit("si.claim1_template");

  std::vector<VertexSet> blocks;
  for (const auto& block : std::get<TemplateCert>(first).blocks)
    blocks.push_back(VertexSet::of(block));

  const BigInt step = tuning.step_override
                          ? *tuning.step_override
                          : BigInt(s) * big_pow(BigInt(omega), s);

  while (true) {
    const int k = static_cast<int>(blocks.size());
    VertexSet used;
    for (const auto& block : blocks) used |= block;
    const VertexSet outside = g.vertices() - used;

    std::vector<VertexSet> avoiders(k);
    VertexSet any_avoider;
    for (int i = 0; i < k; ++i) {
      for (int v : outside)
        if (has_stable_set_of_size(g, blocks[i] - g.neighbours(v), s))
          avoiders[i].add(v);
      any_avoider |= avoiders[i];
    }
    const VertexSet rest = outside - any_avoider;
    const BigInt next_size = block_size - step;

    if (BigInt(rest.count()) >= next_size && next_size >= 1 &&
        k + 1 <= omega + 1) {
      const int nt = to_small_int(next_size);
      std::vector<VertexSet> grown;
      grown.push_back(take_first(rest, nt));
      for (const auto& block : blocks) grown.push_back(take_first(block, nt));
      blocks = std::move(grown);
      block_size = next_size;
      coverage_hit("si.zrest_extension");
      continue;
    }

    // Home classification: minimal avoided block, then the lex-least stable
    // s-set witnessing the avoidance.
    std::map<HomeKey, VertexSet> classes;
    for (int v : any_avoider) {
      for (int i = 0; i < k; ++i) {
        if (!avoiders[i].contains(v)) continue;
        auto anchor = least_stable_subset(g, blocks[i] - g.neighbours(v), s);
        if (!anchor) fail(ErrorKind::structure, "avoider without anchor");
        classes[HomeKey{i, *anchor}].add(v);
        break;
      }
    }

    bool extended = false;
    for (const auto& [key, members] : classes) {
      const VertexSet anchor_set = VertexSet::of(key.anchor);
      std::vector<VertexSet> complete_to_anchor(k);
      VertexSet covered;
      std::optional<Certificate> emitted;
      for (int j = key.block + 1; j < k && !emitted; ++j) {
        complete_to_anchor[j] = blocks[j] & common_neighbours(g, anchor_set);
        for_each_stable_set(g, complete_to_anchor[j], s, [&](const VertexSet& side) {
          VertexSet w;
          for (int v : members)
            if (!g.neighbours(v).intersects(side)) w.add(v);
          covered |= w;
          CopyCert cand{false, BicliquePattern{s, s},
                        {key.anchor, set_to_sorted(side)}, set_to_sorted(w),
                        psi};
          if (verify_certificate(g, cand).ok()) {
            emitted = cand;
            return false;
          }
          return true;
        });
      }
      if (emitted) {
        coverage_hit("si.home_pair_copy");
        return *emitted;
      }

      const VertexSet residue = members - covered;
      const BigInt tail_size = next_size > 0 ? next_size : BigInt(0);
      Certificate tail = bigbip_step_within(g, residue, s, q, tail_size, psi);
      if (std::holds_alternative<CopyCert>(tail) ||
          std::holds_alternative<SprinklingCert>(tail)) {
        coverage_hit("si.home_tail_cert");
        return tail;
      }
      if (!std::holds_alternative<TemplateCert>(tail)) continue;

      if (next_size < 1 || k + 1 > omega + 1) continue;
      const int nt = to_small_int(next_size);
      bool shrinkable = true;
      for (int h = key.block + 1; h < k; ++h)
        if (complete_to_anchor[h].count() < nt) shrinkable = false;
      if (!shrinkable) continue;

      std::vector<VertexSet> grown;
      for (const auto& block : std::get<TemplateCert>(tail).blocks)
        grown.push_back(VertexSet::of(block));
      for (int h = 0; h < k; ++h) {
        if (h == key.block) continue;
        // Below the home block every stable s-set dominates the residue by
        // home minimality; above it only anchor-complete vertices do.
        grown.push_back(h < key.block ? take_first(blocks[h], nt)
                                      : take_first(complete_to_anchor[h], nt));
      }
      std::vector<std::vector<int>> block_lists;
      for (const auto& block : grown) block_lists.push_back(set_to_sorted(block));
      TemplateCert cand{block_lists, nt, s};
      if (!verify_certificate(g, cand).ok()) continue;
      blocks = std::move(grown);
      block_size = next_size;
      coverage_hit("si.home_tail_extension");
      extended = true;
      break;
    }
    if (extended) continue;

    coverage_hit("si.homes_exhausted");
    return InconclusiveCert{"home classes exhausted"};
  }
}

Certificate strong_isolation(const Graph& g, int s, int q, const NonDecPoly& psi,
                             bool forced) {
  return strong_isolation(g, s, q, psi, forced, StrongIsolationTuning{});
}

Certificate bip_self_isolation(const Graph& g, int s, int s_prime,
                               const NonDecPoly& psi, bool forced,
                               const StrongIsolationTuning& tuning) {
  if (s < 1) fail(ErrorKind::unsupported, "bip_self_isolation: s must be >= 1");
  if (s_prime < 0 || s_prime > s)
    fail(ErrorKind::argument, "bip_self_isolation: need s >= s' >= 0");
  Certificate inner = strong_isolation(g, s, s + s_prime, psi, forced, tuning);

  if (const auto* copy = std::get_if<CopyCert>(&inner)) {
    std::vector<int> side_b(copy->parts[1].begin(),
                            copy->parts[1].begin() + s_prime);
    CopyCert cand{false, BicliquePattern{s, s_prime},
                  {copy->parts[0], side_b}, copy->witness, psi};
    if (verify_certificate(g, cand).ok()) {
      coverage_hit("bip.copy_direct");
      return cand;
    }
    return InconclusiveCert{"narrowed copy rejected"};
  }

  if (const auto* spr = std::get_if<SprinklingCert>(&inner)) {
    const VertexSet p_set = VertexSet::of(spr->p);
    const VertexSet q_set = VertexSet::of(spr->q_set);
    auto found = find_induced_biclique(g, p_set, s, s_prime);
    if (!found) {
      HFreeSetCert cand{BicliquePattern{s, s_prime}, spr->p, psi};
      if (verify_certificate(g, cand).ok()) {
        coverage_hit("bip.hfree");
        return cand;
      }
      return InconclusiveCert{"free-set certificate rejected"};
    }
    VertexSet proof_witness = anticomplete_set(g, found->vertex_set(), q_set);
    auto cert = copy_with_best_witness(
        g, BicliquePattern{s, s_prime},
        {found->side_a, found->side_b}, proof_witness, psi);
    if (cert) {
      coverage_hit("bip.copy_in_p");
      return *cert;
    }
    return InconclusiveCert{"no witness for lifted copy"};
  }

  return inner;
}

Certificate bip_self_isolation(const Graph& g, int s, int s_prime,
                               const NonDecPoly& psi, bool forced) {
  return bip_self_isolation(g, s, s_prime, psi, forced, StrongIsolationTuning{});
}

}  // namespace chilab
