#include "chilab/verify.hpp"

#include <algorithm>

#include "chilab/error.hpp"

namespace chilab {

namespace {

struct Checker {
  const Graph& g;
  std::string why;

  bool reject(const std::string& msg) {
    if (why.empty()) why = msg;
    return false;
  }

  bool in_range(const std::vector<int>& vs, const char* what) {
    for (int v : vs)
      if (v < 0 || v >= g.order())
        return reject(std::string(what) + " names vertex " + std::to_string(v) +
                      " outside the graph");
    return true;
  }

  static VertexSet to_set(const std::vector<int>& vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
  }

  bool disjoint(const VertexSet& a, const VertexSet& b, const char* what) {
    if (a.intersects(b)) return reject(std::string(what) + " overlap");
    return true;
  }

  bool anticomplete(const VertexSet& a, const VertexSet& b, const char* what) {
    for (int v : a)
      if (g.neighbours(v).intersects(b))
        return reject(std::string(what) + ": vertex " + std::to_string(v) +
                      " has a neighbour across");
    return true;
  }

  bool chi_exceeds(const VertexSet& s, const NonDecPoly& psi, const BigInt& slack,
                   const char* what) {
    BigInt chi = chi_of(g, s);
    BigInt bound = psi.evaluate(clique_number_within(g, s)) + slack;
    if (chi <= bound)
      return reject(std::string(what) + ": chi " + chi.str() +
                    " does not exceed " + bound.str());
    return true;
  }

  bool complete_part(const std::vector<int>& part, const char* what) {
    for (std::size_t i = 0; i < part.size(); ++i)
      for (std::size_t j = i + 1; j < part.size(); ++j)
        if (!g.adjacent(part[i], part[j]))
          return reject(std::string(what) + " is not a clique");
    return true;
  }

  bool stable_part(const std::vector<int>& part, const char* what) {
    for (std::size_t i = 0; i < part.size(); ++i)
      for (std::size_t j = i + 1; j < part.size(); ++j)
        if (g.adjacent(part[i], part[j]))
          return reject(std::string(what) + " is not stable");
    return true;
  }

  bool cross_complete(const std::vector<int>& a, const std::vector<int>& b,
                      const char* what) {
    for (int u : a)
      for (int v : b)
        if (!g.adjacent(u, v))
          return reject(std::string(what) + " misses cross edge " +
                        std::to_string(u) + "-" + std::to_string(v));
    return true;
  }

  bool hole_part(const std::vector<int>& part, const HoleSpec& spec,
                 const char* what) {
    int len = static_cast<int>(part.size());
    if (!hole_matches(spec, len))
      return reject(std::string(what) + ": length " + std::to_string(len) +
                    " does not match the hole kind");
    for (int i = 0; i < len; ++i)
      for (int j = i + 1; j < len; ++j) {
        bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
        if (g.adjacent(part[i], part[j]) != consecutive)
          return reject(std::string(what) + " is not an induced cycle");
      }
    return true;
  }

  bool biclique_parts(const std::vector<std::vector<int>>& parts, int s,
                      int s_prime, const char* what) {
    if (parts.size() != 2)
      fail(ErrorKind::structure,
           std::string(what) + " must have exactly two parts");
    if (static_cast<int>(parts[0].size()) != s ||
        static_cast<int>(parts[1].size()) != s_prime)
      return reject(std::string(what) + " side sizes differ from the pattern");
    return stable_part(parts[0], what) && stable_part(parts[1], what) &&
           disjoint(to_set(parts[0]), to_set(parts[1]), what) &&
           cross_complete(parts[0], parts[1], what);
  }

  // True iff G[a] holds an induced copy of the pattern. Exhaustive.
  bool contains_pattern(const VertexSet& a, const Pattern& pattern) {
    if (const auto* c = std::get_if<CompletePattern>(&pattern))
      return static_cast<int>(clique_number_within(g, a)) >= c->k;
    const auto* b = std::get_if<BicliquePattern>(&pattern);
    if (b == nullptr)
      fail(ErrorKind::structure,
           "h_free_set certificates take complete or biclique patterns");
    bool found = false;
    for_each_stable_set(g, a, b->s, [&](const VertexSet& side) {
      VertexSet common = a - side;
      for (int v : side) common &= g.neighbours(v);
      if (has_stable_set_of_size(g, common, b->s_prime)) found = true;
      return !found;
    });
    return found;
  }

  bool check_copy(const CopyCert& cert) {
    for (const auto& part : cert.parts)
      if (!in_range(part, "copy part")) return false;
    if (!in_range(cert.witness, "witness")) return false;
    if (const auto* c = std::get_if<CompletePattern>(&cert.pattern)) {
      if (cert.parts.size() != 1)
        fail(ErrorKind::structure, "complete copy must have exactly one part");
      if (static_cast<int>(cert.parts[0].size()) != c->k)
        return reject("copy size differs from the pattern");
      if (!complete_part(cert.parts[0], "copy")) return false;
    } else if (const auto* b = std::get_if<BicliquePattern>(&cert.pattern)) {
      if (!biclique_parts(cert.parts, b->s, b->s_prime, "copy")) return false;
    } else {
      if (cert.parts.size() != 1)
        fail(ErrorKind::structure, "hole copy must have exactly one part");
      if (!hole_part(cert.parts[0], std::get<HolePattern>(cert.pattern).spec,
                     "copy"))
        return false;
    }
    VertexSet copy;
    std::size_t total = 0;
    for (const auto& part : cert.parts) {
      copy |= to_set(part);
      total += part.size();
    }
    if (static_cast<std::size_t>(copy.count()) != total) return reject("copy parts overlap");
    VertexSet witness = to_set(cert.witness);
    return disjoint(copy, witness, "copy and witness") &&
           anticomplete(copy, witness, "copy against witness") &&
           chi_exceeds(witness, cert.psi, 0, "witness");
  }

  bool check_sprinkling(const SprinklingCert& cert) {
    if (cert.q < 0) fail(ErrorKind::structure, "sprinkling q must be nonnegative");
    if (!in_range(cert.p, "p") || !in_range(cert.q_set, "q_set")) return false;
    VertexSet p = to_set(cert.p);
    VertexSet q = to_set(cert.q_set);
    if (!disjoint(p, q, "p and q_set")) return false;
    BigInt r = 0;
    for (int v : p) r = std::max(r, BigInt(chi_of(g, g.neighbours(v) & q)));
    if (r != cert.r)
      return reject("stated r " + cert.r.str() + " differs from recomputed " +
                    r.str());
    return chi_exceeds(p, cert.psi, 0, "p") &&
           chi_exceeds(q, cert.psi, BigInt(cert.q) * r, "q_set");
  }

  bool check_template(const TemplateCert& cert) {
    if (cert.t < 0 || cert.s < 0)
      fail(ErrorKind::structure, "template t and s must be nonnegative");
    VertexSet all;
    std::size_t total = 0;
    for (const auto& block : cert.blocks) {
      if (!in_range(block, "block")) return false;
      if (static_cast<int>(block.size()) != cert.t)
        return reject("block size differs from t");
      all |= to_set(block);
      total += block.size();
    }
    if (static_cast<std::size_t>(all.count()) != total) return reject("blocks overlap");
    for (std::size_t i = 0; i < cert.blocks.size(); ++i) {
      for (std::size_t j = i + 1; j < cert.blocks.size(); ++j) {
        bool good = true;
        for_each_stable_set(g, to_set(cert.blocks[j]), cert.s,
                            [&](const VertexSet& stable) {
                              for (int v : cert.blocks[i])
                                if (!g.neighbours(v).intersects(stable)) {
                                  good = false;
                                  return false;
                                }
                              return true;
                            });
        if (!good)
          return reject("a stable set in block " + std::to_string(j) +
                        " misses a vertex of block " + std::to_string(i));
      }
    }
    return true;
  }

  bool check_h_free(const HFreeSetCert& cert) {
    if (!in_range(cert.set, "set")) return false;
    VertexSet a = to_set(cert.set);
    if (contains_pattern(a, cert.pattern))
      return reject("the set contains a copy of the excluded pattern");
    return chi_exceeds(a, cert.psi, 0, "set");
  }

  bool check_component(const MultiholeComponentCert& comp, std::size_t index) {
    std::string what = "component " + std::to_string(index);
    for (const auto& part : comp.parts)
      if (!in_range(part, what.c_str())) return false;
    if (const auto* hs = std::get_if<HoleSpec>(&comp.spec)) {
      if (comp.parts.size() != 1)
        fail(ErrorKind::structure, what + ": hole component must have one part");
      return hole_part(comp.parts[0], *hs, what.c_str());
    }
    if (const auto* bc = std::get_if<BicliqueComponent>(&comp.spec))
      return biclique_parts(comp.parts, bc->s, bc->s_prime, what.c_str());
    const auto& ec = std::get<EitherComponent>(comp.spec);
    if (comp.parts.size() == 1)
      return hole_part(comp.parts[0], HoleSpec{HoleKind::long_, ec.min_length, 0},
                       what.c_str());
    if (comp.parts.size() == 2)
      return biclique_parts(comp.parts, ec.s, ec.s, what.c_str());
    fail(ErrorKind::structure, what + ": either-component must have one or two parts");
  }

  bool check_multihole(const MultiholeCert& cert) {
    if (cert.components.empty()) return reject("no components");
    std::vector<VertexSet> sets;
    for (std::size_t i = 0; i < cert.components.size(); ++i) {
      if (!check_component(cert.components[i], i)) return false;
      VertexSet s;
      for (const auto& part : cert.components[i].parts) s |= to_set(part);
      sets.push_back(s);
    }
    for (std::size_t i = 0; i < sets.size(); ++i)
      for (std::size_t j = i + 1; j < sets.size(); ++j) {
        if (!disjoint(sets[i], sets[j], "components")) return false;
        if (!anticomplete(sets[i], sets[j], "components")) return false;
      }
    return true;
  }
};

} // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
  case Verdict::verified: return "verified";
  case Verdict::invalid: return "invalid";
  case Verdict::vacuous: return "vacuous";
  }
  return "invalid";
}

VerifyResult verify_certificate(const Graph& g, const Certificate& cert) {
  if (std::holds_alternative<InconclusiveCert>(cert))
    return {Verdict::vacuous, ""};
  Checker checker{g, {}};
  bool ok = false;
  if (const auto* copy = std::get_if<CopyCert>(&cert))
    ok = checker.check_copy(*copy);
  else if (const auto* sp = std::get_if<SprinklingCert>(&cert))
    ok = checker.check_sprinkling(*sp);
  else if (const auto* tp = std::get_if<TemplateCert>(&cert))
    ok = checker.check_template(*tp);
  else if (const auto* hf = std::get_if<HFreeSetCert>(&cert))
    ok = checker.check_h_free(*hf);
  else
    ok = checker.check_multihole(std::get<MultiholeCert>(cert));
  if (ok) return {Verdict::verified, ""};
  return {Verdict::invalid, checker.why};
}

namespace {

struct BruteColouring {
  const Graph& g;
  int n;
  int limit;
  std::vector<int> colour;

  bool assign(int v, int used) {
    if (v == n) return true;
    int top = std::min(used, limit - 1);
    for (int c = 0; c <= top; ++c) {
      bool clash = false;
      for (int u = 0; u < v; ++u)
        if (colour[u] == c && g.adjacent(u, v)) {
          clash = true;
          break;
        }
      if (clash) continue;
      colour[v] = c;
      if (assign(v + 1, std::max(used, c + 1))) return true;
    }
    colour[v] = -1;
    return false;
  }
};

} // namespace

int brute_chromatic(const Graph& g) {
  if (g.order() > 10)
    fail(ErrorKind::capacity, "brute_chromatic is capped at 10 vertices");
  if (g.order() == 0) return 0;
  for (int k = 1; k <= g.order(); ++k) {
    BruteColouring search{g, g.order(), k, std::vector<int>(g.order(), -1)};
    if (search.assign(0, 0)) return k;
  }
  return g.order();
}

const char* mutation_kind_name(MutationKind kind) {
  switch (kind) {
  case MutationKind::drop_witness_vertex: return "drop_witness_vertex";
  case MutationKind::add_adjacent_vertex: return "add_adjacent_vertex";
  case MutationKind::decrement_q: return "decrement_q";
  case MutationKind::bump_psi: return "bump_psi";
  }
  return "unknown";
}

namespace {

VertexSet list_to_set(const std::vector<int>& vs) {
  VertexSet s;
  for (int v : vs) s.add(v);
  return s;
}

// Least vertex whose removal sinks the chi inequality, if any.
std::optional<std::vector<int>> shrink_below_bound(const Graph& g,
                                                   const std::vector<int>& set,
                                                   const NonDecPoly& psi) {
  for (int v : set) {
    VertexSet rest = list_to_set(set);
    rest.remove(v);
    BigInt chi = chi_of(g, rest);
    if (chi <= psi.evaluate(clique_number_within(g, rest))) {
      std::vector<int> out;
      for (int u : rest) out.push_back(u);
      return out;
    }
  }
  return std::nullopt;
}

NonDecPoly bump_constant(const NonDecPoly& psi, const BigInt& delta) {
  return psi + NonDecPoly::constant(delta);
}

} // namespace

std::optional<Certificate> mutate_certificate(const Graph& g,
                                              const Certificate& cert,
                                              MutationKind kind) {
  switch (kind) {
  case MutationKind::drop_witness_vertex: {
    if (const auto* copy = std::get_if<CopyCert>(&cert)) {
      auto shrunk = shrink_below_bound(g, copy->witness, copy->psi);
      if (!shrunk) return std::nullopt;
      CopyCert out = *copy;
      out.witness = *shrunk;
      return Certificate{out};
    }
    if (const auto* hf = std::get_if<HFreeSetCert>(&cert)) {
      auto shrunk = shrink_below_bound(g, hf->set, hf->psi);
      if (!shrunk) return std::nullopt;
      HFreeSetCert out = *hf;
      out.set = *shrunk;
      return Certificate{out};
    }
    return std::nullopt;
  }
  case MutationKind::add_adjacent_vertex: {
    const auto* copy = std::get_if<CopyCert>(&cert);
    if (copy == nullptr) return std::nullopt;
    VertexSet used = list_to_set(copy->witness);
    VertexSet body;
    for (const auto& part : copy->parts) body |= list_to_set(part);
    used |= body;
    for (int u = 0; u < g.order(); ++u) {
      if (used.contains(u) || !g.neighbours(u).intersects(body)) continue;
      CopyCert out = *copy;
      out.witness.push_back(u);
      std::sort(out.witness.begin(), out.witness.end());
      return Certificate{out};
    }
    return std::nullopt;
  }
  case MutationKind::decrement_q: {
    const auto* sp = std::get_if<SprinklingCert>(&cert);
    // q-1 weakens the claimed inequality for positive q, so only the
    // step below zero produces a certificate the harness must reject.
    if (sp == nullptr || sp->q != 0) return std::nullopt;
    SprinklingCert out = *sp;
    out.q = -1;
    return Certificate{out};
  }
  case MutationKind::bump_psi: {
    auto margin_bump = [&](const std::vector<int>& set, const NonDecPoly& psi)
        -> std::optional<NonDecPoly> {
      VertexSet s = list_to_set(set);
      BigInt margin =
          BigInt(chi_of(g, s)) - psi.evaluate(clique_number_within(g, s));
      if (margin <= 0) return std::nullopt; // cert was not valid to begin with
      return bump_constant(psi, margin);
    };
    if (const auto* copy = std::get_if<CopyCert>(&cert)) {
      auto bumped = margin_bump(copy->witness, copy->psi);
      if (!bumped) return std::nullopt;
      CopyCert out = *copy;
      out.psi = *bumped;
      return Certificate{out};
    }
    if (const auto* hf = std::get_if<HFreeSetCert>(&cert)) {
      auto bumped = margin_bump(hf->set, hf->psi);
      if (!bumped) return std::nullopt;
      HFreeSetCert out = *hf;
      out.psi = *bumped;
      return Certificate{out};
    }
    if (const auto* sp = std::get_if<SprinklingCert>(&cert)) {
      auto bumped = margin_bump(sp->p, sp->psi);
      if (!bumped) return std::nullopt;
      SprinklingCert out = *sp;
      out.psi = *bumped;
      return Certificate{out};
    }
    return std::nullopt;
  }
  }
  return std::nullopt;
}

} // namespace chilab
