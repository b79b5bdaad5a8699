#include "chilab/holes.hpp"

#include <algorithm>

#include "chilab/error.hpp"
#include "chilab/kernels.hpp"

namespace chilab {

namespace {

struct HoleSearch {
  const Graph& g;
  const VertexSet& scope;
  const std::function<bool(const Hole&)>& visit;
  int target = 0;
  VertexSet above{}; // scope members greater than path[0]
  std::vector<int> path{};
  VertexSet used{};
  bool stopped = false;

  // banned = N(p_1) | ... | N(p_{d-2}) for current depth d; the next
  // vertex may touch only path.back() among interior path vertices.
  void extend(const VertexSet& banned) {
    if (stopped) return;
    int last = path.back();
    int depth = static_cast<int>(path.size());
    if (depth == target - 1) {
      VertexSet cands =
          (g.neighbours(last) & g.neighbours(path[0]) & above) - banned - used;
      for (int v : cands) {
        if (v <= path[1]) continue; // canonical orientation
        path.push_back(v);
        Hole h{path};
        if (!visit(h)) stopped = true;
        path.pop_back();
        if (stopped) return;
      }
      return;
    }
    VertexSet cands =
        ((g.neighbours(last) & above) - banned - used) - g.neighbours(path[0]);
    VertexSet deeper = banned | g.neighbours(last);
    for (int v : cands) {
      path.push_back(v);
      used.add(v);
      extend(deeper);
      used.remove(v);
      path.pop_back();
      if (stopped) return;
    }
  }

  bool run(const std::vector<int>& lengths) {
    for (int len : lengths) {
      target = len;
      for (int p0 : scope) {
        above.clear();
        for (int v : scope)
          if (v > p0) above.add(v);
        if (above.count() < target - 1) break;
        path.assign(1, p0);
        used = VertexSet::single(p0);
        VertexSet first = g.neighbours(p0) & above;
        for (int p1 : first) {
          path.push_back(p1);
          used.add(p1);
          extend(VertexSet{});
          used.remove(p1);
          path.pop_back();
          if (stopped) return true;
        }
      }
    }
    return false;
  }
};

} // namespace

const char* hole_kind_name(HoleKind kind) {
  switch (kind) {
  case HoleKind::any: return "any";
  case HoleKind::four: return "four";
  case HoleKind::odd: return "odd";
  case HoleKind::special_: return "special";
  case HoleKind::long_: return "long";
  }
  fail(ErrorKind::argument, "unknown hole kind");
}

HoleKind hole_kind_from_name(const std::string& name) {
  if (name == "any") return HoleKind::any;
  if (name == "four") return HoleKind::four;
  if (name == "odd") return HoleKind::odd;
  if (name == "special") return HoleKind::special_;
  if (name == "long") return HoleKind::long_;
  fail(ErrorKind::argument, "unknown hole kind '" + name + "'");
}

VertexSet Hole::vertex_set() const {
  VertexSet s;
  for (int v : vertices) s.add(v);
  return s;
}

bool hole_matches(const HoleSpec& spec, int length) {
  if (length < 4) return false;
  if (spec.max_length > 0 && length > spec.max_length) return false;
  switch (spec.kind) {
  case HoleKind::any: return true;
  case HoleKind::four: return length == 4;
  case HoleKind::odd: return length % 2 == 1;
  case HoleKind::special_: return length == 4 || length % 2 == 1;
  case HoleKind::long_: return length >= std::max(4, spec.min_length);
  }
  return false;
}

std::vector<int> hole_lengths(const HoleSpec& spec, int limit) {
  if (spec.max_length > 0) limit = std::min(limit, spec.max_length);
  std::vector<int> out;
  for (int len = 4; len <= limit; ++len)
    if (hole_matches(spec, len)) out.push_back(len);
  return out;
}

bool for_each_hole(const Graph& g, const VertexSet& scope, const HoleSpec& spec,
                   const std::function<bool(const Hole&)>& visit) {
  VertexSet clipped = clip_to_graph(g, scope);
  int limit = clipped.count();
  std::vector<int> lengths = hole_lengths(spec, limit);
  if (lengths.empty()) return false;
  HoleSearch search{g, clipped, visit};
  return search.run(lengths);
}

std::optional<Hole> find_hole(const Graph& g, const VertexSet& scope,
                              const HoleSpec& spec, bool) {
  std::optional<Hole> out;
  for_each_hole(g, scope, spec, [&](const Hole& h) {
    out = h;
    return false;
  });
  return out;
}

std::optional<Hole> find_hole(const Graph& g, const HoleSpec& spec,
                              bool shortest) {
  return find_hole(g, VertexSet::full(g.order()), spec, shortest);
}

VertexSet Biclique::vertex_set() const {
  VertexSet s;
  for (int v : side_a) s.add(v);
  for (int v : side_b) s.add(v);
  return s;
}

bool for_each_induced_biclique(const Graph& g, const VertexSet& scope, int s,
                               int s_prime,
                               const std::function<bool(const Biclique&)>& visit) {
  if (s < 0 || s_prime < 0)
    fail(ErrorKind::argument, "biclique sides must be nonnegative");
  VertexSet clipped = clip_to_graph(g, scope);
  if (s == 0 && s_prime == 0) return !visit(Biclique{});
  bool stopped = false;
  for_each_stable_set(g, clipped, s, [&](const VertexSet& a) {
    VertexSet common = clipped;
    for (int v : a) common &= g.neighbours(v);
    common -= a;
    for_each_stable_set(g, common, s_prime, [&](const VertexSet& b) {
      if (s == s_prime && !a.empty() && b.first() < a.first()) return true;
      Biclique found{a.to_vector(), b.to_vector()};
      if (!visit(found)) stopped = true;
      return !stopped;
    });
    return !stopped;
  });
  return stopped;
}

std::optional<Biclique> find_induced_biclique(const Graph& g,
                                              const VertexSet& scope, int s,
                                              int s_prime) {
  std::optional<Biclique> out;
  for_each_induced_biclique(g, scope, s, s_prime, [&](const Biclique& b) {
    out = b;
    return false;
  });
  return out;
}

std::optional<Biclique> find_induced_biclique(const Graph& g, int s,
                                              int s_prime) {
  return find_induced_biclique(g, VertexSet::full(g.order()), s, s_prime);
}

VertexSet PlacedComponent::vertex_set() const {
  VertexSet s;
  for (const auto& part : parts)
    for (int v : part) s.add(v);
  return s;
}

namespace {

// Harder-to-place shapes first; ties keep input order.
int rigidity_rank(const ComponentSpec& spec) {
  if (std::holds_alternative<BicliqueComponent>(spec)) return 0;
  if (std::holds_alternative<EitherComponent>(spec)) return 6;
  switch (std::get<HoleSpec>(spec).kind) {
  case HoleKind::long_: return 1;
  case HoleKind::four: return 2;
  case HoleKind::odd: return 3;
  case HoleKind::special_: return 4;
  case HoleKind::any: return 5;
  }
  return 5;
}

struct MultiholeSearch {
  const Graph& g;
  const std::vector<const ComponentSpec*>& order;
  std::vector<PlacedComponent> placed{};

  bool place(std::size_t idx, const VertexSet& allowed) {
    if (idx == order.size()) return true;
    const ComponentSpec& spec = *order[idx];
    auto try_placement = [&](PlacedComponent&& pc) {
      VertexSet next = allowed - dominator_set(g, pc.vertex_set());
      placed.push_back(std::move(pc));
      if (place(idx + 1, next)) return true;
      placed.pop_back();
      return false;
    };
    if (const auto* hs = std::get_if<HoleSpec>(&spec)) {
      bool done = false;
      for_each_hole(g, allowed, *hs, [&](const Hole& h) {
        done = try_placement(PlacedComponent{{h.vertices}});
        return !done;
      });
      return done;
    }
    if (const auto* bc = std::get_if<BicliqueComponent>(&spec)) {
      bool done = false;
      for_each_induced_biclique(g, allowed, bc->s, bc->s_prime,
                                [&](const Biclique& b) {
                                  done = try_placement(
                                      PlacedComponent{{b.side_a, b.side_b}});
                                  return !done;
                                });
      return done;
    }
    const auto& ec = std::get<EitherComponent>(spec);
    bool done = false;
    for_each_induced_biclique(g, allowed, ec.s, ec.s, [&](const Biclique& b) {
      done = try_placement(PlacedComponent{{b.side_a, b.side_b}});
      return !done;
    });
    if (done) return true;
    HoleSpec hs{HoleKind::long_, ec.min_length, 0};
    for_each_hole(g, allowed, hs, [&](const Hole& h) {
      done = try_placement(PlacedComponent{{h.vertices}});
      return !done;
    });
    return done;
  }
};

} // namespace

std::optional<std::vector<PlacedComponent>>
find_multihole(const Graph& g, const VertexSet& scope,
               const std::vector<ComponentSpec>& specs) {
  std::vector<std::size_t> perm(specs.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return rigidity_rank(specs[a]) < rigidity_rank(specs[b]);
  });
  std::vector<const ComponentSpec*> order;
  order.reserve(specs.size());
  for (std::size_t i : perm) order.push_back(&specs[i]);
  MultiholeSearch search{g, order};
  if (!search.place(0, clip_to_graph(g, scope))) return std::nullopt;
  std::vector<PlacedComponent> out(specs.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    out[perm[i]] = std::move(search.placed[i]);
  return out;
}

std::optional<std::vector<PlacedComponent>>
find_multihole(const Graph& g, const std::vector<ComponentSpec>& specs) {
  return find_multihole(g, VertexSet::full(g.order()), specs);
}

VertexSet dominator_set(const Graph& g, const VertexSet& h) {
  for (int v : h)
    if (v >= g.order())
      fail(ErrorKind::range, "dominator_set: vertex out of range");
  return h | set_neighbourhood(g, h);
}

} // namespace chilab
