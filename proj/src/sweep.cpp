#include "chilab/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <thread>

#include "chilab/generate.hpp"
#include "chilab/graph6.hpp"
#include "chilab/kernels.hpp"
#include "chilab/multihole.hpp"
#include "chilab/verify.hpp"

namespace chilab {

namespace {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return seed ^ (0x9E3779B97F4A7C15ULL * (index + 1));
}

NonDecPoly psi_from_json(const Json& params) {
  if (!params.contains("psi")) return NonDecPoly();
  const Json& j = params.at("psi");
  std::vector<std::string> coeffs;
  if (j.is_number_integer()) {
    coeffs.push_back(std::to_string(j.get<long long>()));
  } else if (j.is_array()) {
    for (const Json& c : j) {
      if (c.is_number_integer())
        coeffs.push_back(std::to_string(c.get<long long>()));
      else if (c.is_string())
        coeffs.push_back(c.get<std::string>());
      else
        fail(ErrorKind::argument, "psi coefficients must be integers");
    }
  } else {
    fail(ErrorKind::argument, "psi must be an integer or coefficient array");
  }
  return NonDecPoly::from_strings(coeffs);
}

LongHoleParams long_params_from_json(const Json& params) {
  LongHoleParams p;
  p.ell = params.value("ell", 5);
  p.s = params.value("s", 2);
  p.c = params.value("c", 4);
  return p;
}

BigInt max_neighbourhood_chi(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v)
    best = std::max(best, chi_of(g, g.neighbours(v)));
  return BigInt(best);
}

BigInt bound_from_json(const Graph& g, const Json& params) {
  if (params.contains("n")) return BigInt(params.at("n").get<long long>());
  return max_neighbourhood_chi(g);
}

using ExtractFn =
    std::function<Certificate(const Graph&, const Json&)>;

const std::map<std::string, ExtractFn>& extractor_table() {
  static const std::map<std::string, ExtractFn> table = {
      {"isolate_complete",
       [](const Graph& g, const Json& p) {
         return isolate_complete(g, p.value("k", 1), psi_from_json(p),
                                 p.value("forced", false));
       }},
      {"bigbip_step",
       [](const Graph& g, const Json& p) {
         return bigbip_step(g, p.value("s", 1), p.value("q", 0),
                            p.value("t", 1), psi_from_json(p));
       }},
      {"strong_isolation",
       [](const Graph& g, const Json& p) {
         return strong_isolation(g, p.value("s", 1), p.value("q", 0),
                                 psi_from_json(p), p.value("forced", false));
       }},
      {"bip_self_isolation",
       [](const Graph& g, const Json& p) {
         const int s = p.value("s", 1);
         return bip_self_isolation(g, s, p.value("s_prime", s),
                                   psi_from_json(p), p.value("forced", false));
       }},
      {"special_hole_smallnbrs",
       [](const Graph& g, const Json& p) {
         return special_hole_smallnbrs(g, bound_from_json(g, p),
                                       psi_from_json(p),
                                       p.value("forced", false));
       }},
      {"odd_nondominating_c4free",
       [](const Graph& g, const Json& p) {
         return odd_nondominating_c4free(g, psi_from_json(p),
                                         p.value("forced", false));
       }},
      {"special_nondominating",
       [](const Graph& g, const Json& p) {
         return special_nondominating(g, psi_from_json(p),
                                      p.value("forced", false));
       }},
      {"special_multihole",
       [](const Graph& g, const Json& p) {
         return special_multihole(g, p.value("k", 1), p.value("forced", false),
                                  p.value("direct_cap", 24));
       }},
      {"long_nondominating_kssfree",
       [](const Graph& g, const Json& p) {
         return long_nondominating_kssfree(g, psi_from_json(p),
                                           long_params_from_json(p),
                                           p.value("forced", false));
       }},
      {"long_or_kss_nondominating",
       [](const Graph& g, const Json& p) {
         return long_or_kss_nondominating(g, psi_from_json(p),
                                          long_params_from_json(p),
                                          p.value("forced", false));
       }},
      {"k_object_extract",
       [](const Graph& g, const Json& p) {
         return k_object_extract(g, p.value("k", 1),
                                 long_params_from_json(p),
                                 p.value("forced", false),
                                 p.value("direct_cap", 24));
       }},
  };
  return table;
}

Json skipped(const std::string& why) {
  Json rec;
  rec["status"] = "skipped";
  rec["reason"] = why;
  return rec;
}

Json verdict_record(bool ok, const std::string& detail) {
  Json rec;
  rec["status"] = ok ? "ok" : "invalid";
  if (!ok) rec["detail"] = detail;
  return rec;
}

// Re-verifies an emitted certificate from scratch, then insists every
// applicable single-field corruption is rejected.
Json certificate_record(const Graph& g, const Certificate& cert) {
  Json rec;
  if (std::holds_alternative<InconclusiveCert>(cert)) {
    rec["status"] = "inconclusive";
    rec["reason"] = std::get<InconclusiveCert>(cert).reason;
    return rec;
  }
  const VerifyResult vr = verify_certificate(g, cert);
  if (!vr.ok()) {
    rec["status"] = "invalid";
    rec["detail"] = "emitted certificate failed verification: " + vr.detail;
    rec["certificate"] = certificate_to_json(cert);
    return rec;
  }
  int applied = 0;
  int rejected = 0;
  std::string leak;
  for (const MutationKind kind :
       {MutationKind::drop_witness_vertex, MutationKind::add_adjacent_vertex,
        MutationKind::decrement_q, MutationKind::bump_psi}) {
    const auto mutated = mutate_certificate(g, cert, kind);
    if (!mutated) continue;
    ++applied;
    bool accepted = false;
    try {
      accepted = verify_certificate(g, *mutated).ok();
    } catch (const Error&) {
      // A mutation can leave the certificate malformed (q below zero);
      // the verifier refusing to read it is still a rejection.
    }
    if (!accepted)
      ++rejected;
    else if (leak.empty())
      leak = mutation_kind_name(kind);
  }
  if (applied != rejected) {
    rec["status"] = "invalid";
    rec["detail"] = "mutated certificate passed verification: " + leak;
  } else {
    rec["status"] = "certificate";
  }
  rec["certificate_type"] = certificate_type_name(cert);
  rec["certificate"] = certificate_to_json(cert);
  rec["mutations"] = Json{{"applied", applied}, {"rejected", rejected}};
  return rec;
}

Json extractor_record(const std::string& op, const Graph& g,
                      const Json& params) {
  return certificate_record(g, run_extractor(op, g, params));
}

using SweepFn =
    std::function<Json(const Graph&, std::uint64_t, const Json&)>;

const std::map<std::string, SweepFn>& sweep_table() {
  static const std::map<std::string, SweepFn> table = [] {
    std::map<std::string, SweepFn> t;

    t["chromatic_oracle"] = [](const Graph& g, std::uint64_t, const Json&) {
      const int fast = chromatic_number(g);
      const int slow = brute_chromatic(g);
      Json rec = verdict_record(fast == slow,
                                "solver and oracle disagree on chi");
      rec["chi"] = fast;
      rec["brute"] = slow;
      return rec;
    };

    t["graph6_roundtrip"] = [](const Graph& g, std::uint64_t, const Json&) {
      const std::string enc = encode_graph6(g);
      const Graph back = decode_graph6(enc);
      const bool ok = back == g && encode_graph6(back) == enc;
      return verdict_record(ok, "graph6 round-trip changed the graph");
    };

    t["big_nonneighbour"] = [](const Graph& g, std::uint64_t, const Json&) {
      if (g.order() == 0) return skipped("empty graph");
      if (g.edge_count() == g.order() * (g.order() - 1) / 2)
        return skipped("complete graph");
      const int v = big_nonneighbour(g);
      const VertexSet m = common_nonneighbours(g, VertexSet::single(v));
      const bool ok = BigInt(clique_number(g)) * BigInt(chi_of(g, m)) >=
                      BigInt(chromatic_number(g));
      Json rec = verdict_record(ok, "omega * chi(nonneighbours) < chi(G)");
      rec["vertex"] = v;
      return rec;
    };

    t["ramsey"] = [](const Graph& g, std::uint64_t, const Json& p) {
      const bool ok = ramsey_bound_holds(g, p.value("s", 2), p.value("r", 2));
      return verdict_record(ok, "graph violates the ramsey-type bound");
    };

    t["odd_dominator"] = [](const Graph& g, std::uint64_t, const Json&) {
      if (!find_hole(g, HoleSpec{HoleKind::odd, 0, 0}))
        return skipped("no odd hole");
      const bool ok = odd_dominator_check(g, max_neighbourhood_chi(g));
      return verdict_record(ok, "odd-hole dominator exceeds 21x");
    };

    t["long_dominator"] = [](const Graph& g, std::uint64_t, const Json& p) {
      const LongHoleParams params = long_params_from_json(p);
      if (!find_hole(g, HoleSpec{HoleKind::long_, params.ell, 0}))
        return skipped("no long hole");
      const bool ok =
          long_dominator_check(g, max_neighbourhood_chi(g), params);
      return verdict_record(ok, "long-hole dominator exceeds (ell+1)n");
    };

    t["anticomplete_pair_c4free"] = [](const Graph& g, std::uint64_t,
                                       const Json& p) {
      if (find_hole(g, HoleSpec{HoleKind::four, 0, 0}))
        return skipped("graph has a four-hole");
      const BigInt n = p.contains("n") ? BigInt(p.at("n").get<long long>())
                                       : BigInt(0);
      const auto pair = anticomplete_pair_c4free(g, n);
      if (!pair) {
        Json rec;
        rec["status"] = "inconclusive";
        return rec;
      }
      const auto& [a, b] = *pair;
      bool ok = a.any() && b.any() && !a.intersects(b) &&
                are_anticomplete(g, a, b);
      const BigInt slack = n - 2 * BigInt(clique_number(g));
      ok = ok && 2 * BigInt(chi_of(g, a)) > slack &&
           2 * BigInt(chi_of(g, b)) > slack;
      Json rec = verdict_record(ok, "returned pair violates its claims");
      if (ok) rec["status"] = "certificate";
      return rec;
    };

    for (const auto& [name, fn] : extractor_table())
      t[name] = [name = name](const Graph& g, std::uint64_t, const Json& p) {
        return extractor_record(name, g, p);
      };
    return t;
  }();
  return table;
}

} // namespace

Json analyze_graph(const Graph& g) {
  Json out;
  out["graph6"] = encode_graph6(g);
  out["order"] = g.order();
  out["edges"] = g.edge_count();
  out["chi"] = chromatic_number(g);
  out["omega"] = clique_number(g);
  out["alpha"] = stability_number(g);
  out["tau"] = biclique_tau(g);
  out["perfect"] = is_perfect(g);
  Json holes;
  const auto shortest = [&](HoleKind kind, int min_len) -> int {
    const auto h = find_hole(g, HoleSpec{kind, min_len, 0});
    return h ? h->length() : 0;
  };
  holes["any"] = shortest(HoleKind::any, 0);
  holes["four"] = shortest(HoleKind::four, 0) != 0;
  holes["odd"] = shortest(HoleKind::odd, 0);
  holes["special"] = shortest(HoleKind::special_, 0);
  out["holes"] = holes;
  return out;
}

bool extractor_exists(const std::string& op) {
  return extractor_table().count(op) > 0;
}

std::vector<std::string> extractor_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : extractor_table()) out.push_back(name);
  return out;
}

Certificate run_extractor(const std::string& op, const Graph& g,
                          const Json& params) {
  const auto& table = extractor_table();
  const auto it = table.find(op);
  if (it == table.end()) fail(ErrorKind::argument, "unknown operation: " + op);
  return it->second(g, params);
}

bool sweep_op_exists(const std::string& op) {
  return sweep_table().count(op) > 0;
}

std::vector<std::string> sweep_op_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : sweep_table()) out.push_back(name);
  return out;
}

int worker_count_from_env() {
  if (const char* env = std::getenv("CHILAB_WORKERS")) {
    const int parsed = std::atoi(env);
    if (parsed >= 1) return std::min(parsed, 64);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return std::max(1, std::min(static_cast<int>(hw), 8));
}

Json run_sweep(const std::string& op, const std::vector<Graph>& corpus,
               const SweepOptions& options) {
  const auto& table = sweep_table();
  const auto it = table.find(op);
  if (it == table.end()) fail(ErrorKind::argument, "unknown sweep op: " + op);
  const SweepFn& fn = it->second;
  const auto started = std::chrono::steady_clock::now();

  std::vector<Json> records(corpus.size());
  std::atomic<std::size_t> cursor{0};
  const auto work = [&]() {
    while (true) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= corpus.size()) break;
      const Graph& g = corpus[i];
      Json rec;
      rec["index"] = i;
      rec["graph6"] = encode_graph6(g);
      try {
        rec.update(fn(g, derive_seed(options.seed, i), options.params));
      } catch (const Error& e) {
        // An operation declining its input is part of the contract;
        // anything else marks the run bad.
        const bool declined = e.kind() == ErrorKind::argument ||
                              e.kind() == ErrorKind::precondition ||
                              e.kind() == ErrorKind::unsupported ||
                              e.kind() == ErrorKind::capacity;
        rec["status"] = declined ? "rejected" : "invalid";
        rec["error"] = error_kind_name(e.kind());
        rec["message"] = e.what();
      } catch (const std::exception& e) {
        rec["status"] = "invalid";
        rec["message"] = e.what();
      }
      records[i] = std::move(rec);
    }
  };

  int workers = options.workers > 0 ? options.workers : worker_count_from_env();
  workers = std::max(1, std::min<int>(workers,
                                      static_cast<int>(corpus.size() ? corpus.size() : 1)));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  Json counts = Json::object();
  bool failed = false;
  std::string offender;
  for (const Json& rec : records) {
    const std::string status = rec.value("status", "ok");
    counts[status] = counts.value(status, 0) + 1;
    if (status == "invalid" && !failed) {
      failed = true;
      offender = rec.value("graph6", "");
    }
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);

  Json report;
  report["op"] = op;
  report["count"] = corpus.size();
  report["seed"] = options.seed;
  report["params"] = options.params;
  report["counts"] = counts;
  report["failed"] = failed;
  if (failed) report["first_invalid_graph6"] = offender;
  report["elapsed_ms"] = elapsed.count();
  report["records"] = records;
  return report;
}

std::vector<Graph> exhaustive_corpus(int n) {
  if (n < 0) fail(ErrorKind::argument, "vertex count must be nonnegative");
  if (n > 6)
    fail(ErrorKind::capacity,
         "exhaustive enumeration is capped at 6 vertices");
  const int slots = n * (n - 1) / 2;
  std::vector<Graph> out;
  out.reserve(1ULL << slots);
  for (std::uint64_t mask = 0; mask < (1ULL << slots); ++mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++bit)
        if (mask >> bit & 1) edges.emplace_back(u, v);
    out.push_back(Graph(n, edges));
  }
  return out;
}

std::vector<Graph> random_corpus(const std::string& op, int count, int n_max,
                                 std::uint64_t seed, const Json& params) {
  if (count < 0) fail(ErrorKind::argument, "negative corpus size");
  std::vector<Graph> out;
  out.reserve(static_cast<std::size_t>(count));
  const int ell = params.value("ell", 5);
  for (int i = 0; i < count; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    if (op == "odd_dominator") {
      if (n_max < 5) fail(ErrorKind::argument, "odd-hole corpus needs n >= 5");
      out.push_back(random_with_odd_hole(rng.pick_int(5, n_max), rng.next()));
    } else if (op == "long_dominator") {
      if (n_max < ell)
        fail(ErrorKind::argument, "long-hole corpus needs n >= ell");
      out.push_back(
          random_with_long_hole(rng.pick_int(ell, n_max), ell, rng.next()));
    } else if (op == "anticomplete_pair_c4free" ||
               op == "odd_nondominating_c4free") {
      out.push_back(
          random_girth_constrained(rng.pick_int(1, n_max), 5, rng.next()));
    } else {
      const double p = rng.pick_int(2, 8) / 10.0;
      out.push_back(random_gnp(rng.pick_int(1, n_max), p, rng.next()));
    }
  }
  return out;
}

} // namespace chilab
