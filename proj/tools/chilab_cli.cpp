// Command-line front end. Everything flows through the C API; the
// vendored headers here are argument and JSON plumbing only.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chilab.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;      // all verified or inconclusive
constexpr int kExitFinding = 1; // invalid certificate or counterexample
constexpr int kExitUsage = 2;   // usage or I/O failure

struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageFailure("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Takes ownership of an API string result.
std::string take(char* text) {
  std::string out = text ? text : "";
  chilab_string_free(text);
  return out;
}

void expect_ok(chilab_status status, const std::string& what) {
  if (status == CHILAB_OK) return;
  std::string detail = chilab_last_error();
  // Library errors often lead with the same context; don't repeat it.
  if (detail.rfind(what + ": ", 0) == 0) throw UsageFailure(detail);
  throw UsageFailure(what + ": " + detail);
}

struct GraphHandle {
  chilab_graph* g = nullptr;
  ~GraphHandle() { chilab_graph_free(g); }
};

std::vector<std::string> graph6_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

struct ParamFlags {
  std::optional<int> s, q, k, t, ell, c, s_prime, direct_cap;
  std::optional<long long> n;
  std::string psi;
  bool forced = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--s", s, "biclique side / subset size");
    cmd->add_option("--q", q, "sprinkling weight");
    cmd->add_option("--k", k, "clique size / component count");
    cmd->add_option("--t", t, "template block size");
    cmd->add_option("--ell", ell, "long-hole length threshold");
    cmd->add_option("--c", c, "binding exponent");
    cmd->add_option("--s-prime", s_prime, "second biclique side");
    cmd->add_option("--n", n, "neighbourhood chi bound");
    cmd->add_option("--direct-cap", direct_cap,
                    "vertex cap for the forced direct search");
    cmd->add_option("--psi", psi,
                    "psi coefficients, constant first, comma separated "
                    "(default 0)");
    cmd->add_flag("--forced", forced, "skip chi thresholds and pipeline "
                                      "preconditions");
  }

  Json to_json() const {
    Json p = Json::object();
    if (s) p["s"] = *s;
    if (q) p["q"] = *q;
    if (k) p["k"] = *k;
    if (t) p["t"] = *t;
    if (ell) p["ell"] = *ell;
    if (c) p["c"] = *c;
    if (s_prime) p["s_prime"] = *s_prime;
    if (n) p["n"] = *n;
    if (direct_cap) p["direct_cap"] = *direct_cap;
    if (forced) p["forced"] = true;
    if (!psi.empty()) {
      Json coeffs = Json::array();
      std::istringstream in(psi);
      std::string tok;
      while (std::getline(in, tok, ',')) {
        if (tok.empty() || tok.find_first_not_of("0123456789") !=
                               std::string::npos)
          throw UsageFailure("--psi wants nonnegative integers");
        coeffs.push_back(tok);
      }
      p["psi"] = coeffs;
    }
    return p;
  }
};

void write_report(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw UsageFailure("cannot write " + out_path);
  out << text << "\n";
}

int run_analyze(const std::string& graph_file, const std::string& out_path) {
  Json report;
  report["records"] = Json::array();
  for (const std::string& line : graph6_lines(slurp(graph_file))) {
    GraphHandle h;
    expect_ok(chilab_graph_from_graph6(line.c_str(), &h.g), line);
    char* text = nullptr;
    expect_ok(chilab_analyze(h.g, &text), line);
    report["records"].push_back(Json::parse(take(text)));
  }
  report["count"] = report["records"].size();
  write_report(report.dump(2), out_path);
  return kExitOk;
}

int run_extract(const std::string& op, const ParamFlags& flags,
                const std::string& graph_file, const std::string& out_path) {
  const std::string params = flags.to_json().dump();
  Json report;
  report["op"] = op;
  report["records"] = Json::array();
  bool finding = false;
  for (const std::string& line : graph6_lines(slurp(graph_file))) {
    GraphHandle h;
    expect_ok(chilab_graph_from_graph6(line.c_str(), &h.g), line);
    char* text = nullptr;
    expect_ok(chilab_extract(h.g, op.c_str(), params.c_str(), &text), op);
    Json rec = Json::parse(take(text));
    rec["graph6"] = line;
    if (rec.value("verdict", "") == "invalid") finding = true;
    report["records"].push_back(std::move(rec));
  }
  report["count"] = report["records"].size();
  write_report(report.dump(2), out_path);
  return finding ? kExitFinding : kExitOk;
}

int run_verify(const std::string& cert_file, const std::string& graph_file,
               const std::string& out_path) {
  const std::vector<std::string> lines = graph6_lines(slurp(graph_file));
  if (lines.empty()) throw UsageFailure("no graph in " + graph_file);
  GraphHandle h;
  expect_ok(chilab_graph_from_graph6(lines.front().c_str(), &h.g),
            graph_file);
  const std::string cert = slurp(cert_file);
  char* text = nullptr;
  expect_ok(chilab_verify(h.g, cert.c_str(), &text), cert_file);
  const Json out = Json::parse(take(text));
  write_report(out.dump(2), out_path);
  return out.value("verdict", "") == "invalid" ? kExitFinding : kExitOk;
}

int run_sweep(const std::string& op, const ParamFlags& flags,
              std::optional<int> exhaustive, std::optional<int> random_count,
              int n_max, std::uint64_t seed, int workers,
              const std::string& graph_file, const std::string& out_path) {
  Json options;
  options["seed"] = seed;
  options["workers"] = workers;
  options["params"] = flags.to_json();
  std::string lines;
  if (!graph_file.empty()) {
    lines = slurp(graph_file);
  } else if (exhaustive) {
    options["corpus"] = Json{{"exhaustive", *exhaustive}};
  } else if (random_count) {
    options["corpus"] =
        Json{{"random", Json{{"count", *random_count}, {"n_max", n_max}}}};
  }
  char* text = nullptr;
  expect_ok(chilab_sweep(op.c_str(), lines.c_str(), options.dump().c_str(),
                         &text),
            op);
  const Json report = Json::parse(take(text));
  write_report(report.dump(2), out_path);
  return report.value("failed", false) ? kExitFinding : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"certificate laboratory for chi-bounded graph classes"};
  app.require_subcommand(1);

  std::string graph_file, cert_file, out_path, op;
  ParamFlags flags;
  std::optional<int> exhaustive, random_count;
  int n_max = 8;
  int workers = 0;
  std::uint64_t seed = 0;

  auto* analyze = app.add_subcommand("analyze", "invariant panel per graph");
  analyze->add_option("file", graph_file, "graph6 file, one graph per line")
      ->required();
  analyze->add_option("--out", out_path, "write the report here");

  auto* extract =
      app.add_subcommand("extract", "run a certificate extractor");
  extract->add_option("--op", op, "operation name")->required();
  flags.attach(extract);
  extract->add_option("file", graph_file, "graph6 file")->required();
  extract->add_option("--out", out_path, "write the report here");

  auto* verify =
      app.add_subcommand("verify", "check a certificate against a graph");
  verify->add_option("cert", cert_file, "certificate JSON file")->required();
  verify->add_option("file", graph_file, "graph6 file (first line is used)")
      ->required();
  verify->add_option("--out", out_path, "write the report here");

  auto* sweep = app.add_subcommand("sweep", "run an op over a corpus");
  sweep->add_option("--op", op, "operation name")->required();
  sweep->add_option("--exhaustive", exhaustive,
                    "all labeled graphs on this many vertices");
  sweep->add_option("--random", random_count, "random corpus size");
  sweep->add_option("--n-max", n_max, "largest random graph order");
  sweep->add_option("--seed", seed, "corpus seed");
  sweep->add_option("--workers", workers,
                    "worker threads (default: CHILAB_WORKERS or cores)");
  flags.attach(sweep);
  sweep->add_option("file", graph_file, "explicit graph6 corpus");
  sweep->add_option("--out", out_path, "write the report here");

  auto* list = app.add_subcommand("list-ops", "operation names");
  list->add_option("--out", out_path, "write the listing here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (analyze->parsed()) return run_analyze(graph_file, out_path);
    if (extract->parsed())
      return run_extract(op, flags, graph_file, out_path);
    if (verify->parsed()) return run_verify(cert_file, graph_file, out_path);
    if (sweep->parsed())
      return run_sweep(op, flags, exhaustive, random_count, n_max, seed,
                       workers, graph_file, out_path);
    if (list->parsed()) {
      char* text = nullptr;
      expect_ok(chilab_list_ops(&text), "list-ops");
      write_report(Json::parse(take(text)).dump(2), out_path);
      return kExitOk;
    }
  } catch (const UsageFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
