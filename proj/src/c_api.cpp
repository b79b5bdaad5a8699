#include "chilab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "chilab/graph6.hpp"
#include "chilab/sweep.hpp"
#include "chilab/verify.hpp"

struct chilab_graph {
  chilab::Graph g;
};

namespace {

thread_local std::string g_last_error = "ok";

chilab_status status_of(chilab::ErrorKind kind) {
  using chilab::ErrorKind;
  switch (kind) {
    case ErrorKind::argument: return CHILAB_ERR_ARGUMENT;
    case ErrorKind::range: return CHILAB_ERR_RANGE;
    case ErrorKind::parse: return CHILAB_ERR_PARSE;
    case ErrorKind::capacity: return CHILAB_ERR_CAPACITY;
    case ErrorKind::precondition: return CHILAB_ERR_PRECONDITION;
    case ErrorKind::unsupported: return CHILAB_ERR_UNSUPPORTED;
    case ErrorKind::structure: return CHILAB_ERR_STRUCTURE;
    case ErrorKind::io: return CHILAB_ERR_IO;
  }
  return CHILAB_ERR_INTERNAL;
}

char* copy_out(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

chilab_status deliver(const std::string& text, char** json_out) {
  if (!json_out) {
    g_last_error = "null output pointer";
    return CHILAB_ERR_ARGUMENT;
  }
  *json_out = copy_out(text);
  if (!*json_out) {
    g_last_error = "out of memory";
    return CHILAB_ERR_INTERNAL;
  }
  g_last_error = "ok";
  return CHILAB_OK;
}

// Runs fn, routing every failure into the status/message contract.
template <typename Fn>
chilab_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const chilab::Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return CHILAB_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CHILAB_ERR_INTERNAL;
  }
}

chilab::Json parse_json_or(const char* text, const char* what) {
  if (!text || !*text) return chilab::Json::object();
  const auto parsed =
      chilab::Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (parsed.is_discarded())
    chilab::fail(chilab::ErrorKind::parse,
                 std::string("malformed JSON in ") + what);
  return parsed;
}

} // namespace

extern "C" {

int chilab_max_vertices(void) { return chilab::kMaxVertices; }

const char* chilab_last_error(void) { return g_last_error.c_str(); }

chilab_status chilab_graph_from_graph6(const char* text, chilab_graph** out) {
  return guarded([&]() -> chilab_status {
    if (!text || !out) {
      g_last_error = "null argument";
      return CHILAB_ERR_ARGUMENT;
    }
    auto* handle = new chilab_graph{chilab::decode_graph6(text)};
    *out = handle;
    g_last_error = "ok";
    return CHILAB_OK;
  });
}

chilab_status chilab_graph_from_edges(int order, const int* endpoints,
                                      size_t edge_count, chilab_graph** out) {
  return guarded([&]() -> chilab_status {
    if (!out || (edge_count > 0 && !endpoints)) {
      g_last_error = "null argument";
      return CHILAB_ERR_ARGUMENT;
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(edge_count);
    for (size_t i = 0; i < edge_count; ++i)
      edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
    *out = new chilab_graph{chilab::Graph(order, edges)};
    g_last_error = "ok";
    return CHILAB_OK;
  });
}

void chilab_graph_free(chilab_graph* g) { delete g; }

int chilab_graph_order(const chilab_graph* g) { return g ? g->g.order() : -1; }

chilab_status chilab_analyze(const chilab_graph* g, char** json_out) {
  return guarded([&]() -> chilab_status {
    if (!g) {
      g_last_error = "null graph";
      return CHILAB_ERR_ARGUMENT;
    }
    return deliver(chilab::analyze_graph(g->g).dump(), json_out);
  });
}

chilab_status chilab_extract(const chilab_graph* g, const char* op,
                             const char* params_json, char** json_out) {
  return guarded([&]() -> chilab_status {
    if (!g || !op) {
      g_last_error = "null argument";
      return CHILAB_ERR_ARGUMENT;
    }
    const chilab::Json params = parse_json_or(params_json, "params");
    const chilab::Certificate cert = chilab::run_extractor(op, g->g, params);
    const chilab::VerifyResult vr = chilab::verify_certificate(g->g, cert);
    chilab::Json out;
    out["op"] = op;
    out["certificate_type"] = chilab::certificate_type_name(cert);
    out["certificate"] = chilab::certificate_to_json(cert);
    out["verdict"] = chilab::verdict_name(vr.verdict);
    if (!vr.detail.empty()) out["detail"] = vr.detail;
    return deliver(out.dump(), json_out);
  });
}

chilab_status chilab_verify(const chilab_graph* g,
                            const char* certificate_json, char** json_out) {
  return guarded([&]() -> chilab_status {
    if (!g || !certificate_json) {
      g_last_error = "null argument";
      return CHILAB_ERR_ARGUMENT;
    }
    const chilab::Certificate cert =
        chilab::certificate_from_string(certificate_json);
    const chilab::VerifyResult vr = chilab::verify_certificate(g->g, cert);
    chilab::Json out;
    out["certificate_type"] = chilab::certificate_type_name(cert);
    out["verdict"] = chilab::verdict_name(vr.verdict);
    if (!vr.detail.empty()) out["detail"] = vr.detail;
    return deliver(out.dump(), json_out);
  });
}

chilab_status chilab_sweep(const char* op, const char* graph6_lines,
                           const char* options_json, char** json_out) {
  return guarded([&]() -> chilab_status {
    if (!op) {
      g_last_error = "null op";
      return CHILAB_ERR_ARGUMENT;
    }
    const chilab::Json options = parse_json_or(options_json, "options");
    chilab::SweepOptions opts;
    opts.seed = options.value("seed", 0ULL);
    opts.workers = options.value("workers", 0);
    if (options.contains("params")) opts.params = options.at("params");

    std::vector<chilab::Graph> corpus;
    if (graph6_lines && *graph6_lines) {
      corpus = chilab::decode_graph6_lines(graph6_lines);
    } else if (options.contains("corpus")) {
      const chilab::Json& spec = options.at("corpus");
      if (spec.contains("exhaustive")) {
        corpus = chilab::exhaustive_corpus(spec.at("exhaustive").get<int>());
      } else if (spec.contains("random")) {
        const chilab::Json& r = spec.at("random");
        corpus = chilab::random_corpus(op, r.value("count", 0),
                                       r.value("n_max", 8), opts.seed,
                                       opts.params);
      } else {
        chilab::fail(chilab::ErrorKind::argument,
                     "corpus spec needs 'exhaustive' or 'random'");
      }
    }
    return deliver(chilab::run_sweep(op, corpus, opts).dump(), json_out);
  });
}

chilab_status chilab_list_ops(char** json_out) {
  return guarded([&]() -> chilab_status {
    chilab::Json out;
    out["extract"] = chilab::extractor_names();
    out["sweep"] = chilab::sweep_op_names();
    return deliver(out.dump(), json_out);
  });
}

void chilab_string_free(char* text) { std::free(text); }

} // extern "C"
