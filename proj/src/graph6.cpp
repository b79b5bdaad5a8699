#include "chilab/graph6.hpp"

#include <fstream>
#include <sstream>

namespace chilab {

namespace {

[[noreturn]] void parse_fail(std::size_t offset, const std::string& what) {
  fail(ErrorKind::parse, "graph6: " + what + " at byte " + std::to_string(offset));
}

constexpr const char* kHeader = ">>graph6<<";

}  // namespace

std::string encode_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    // 18-bit size record for 63 <= n <= 258047; the vertex cap keeps us far
    // below the 36-bit form.
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int bits = 0;
  int group = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(group + 63));
        bits = 0;
        group = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((group << (6 - bits)) + 63));
  return out;
}

Graph decode_graph6(const std::string& line) {
  std::size_t pos = 0;
  if (line.rfind(kHeader, 0) == 0) pos = std::string(kHeader).size();
  if (pos >= line.size()) parse_fail(pos, "empty record");

  auto sixbits = [&](std::size_t at) -> int {
    unsigned char c = static_cast<unsigned char>(line[at]);
    if (c < 63 || c > 126) parse_fail(at, "byte outside graph6 alphabet");
    return c - 63;
  };

  long long n = 0;
  unsigned char first = static_cast<unsigned char>(line[pos]);
  if (first == 126) {
    if (pos + 1 < line.size() && static_cast<unsigned char>(line[pos + 1]) == 126) {
      parse_fail(pos, "36-bit vertex counts exceed the vertex capacity");
    }
    if (pos + 3 >= line.size()) parse_fail(line.size(), "truncated size record");
    n = (static_cast<long long>(sixbits(pos + 1)) << 12) | (sixbits(pos + 2) << 6) | sixbits(pos + 3);
    pos += 4;
  } else {
    n = sixbits(pos);
    pos += 1;
  }
  if (n > kMaxVertices) {
    fail(ErrorKind::capacity, "graph6 record has " + std::to_string(n) + " vertices; capacity is " + std::to_string(kMaxVertices));
  }

  Graph g(static_cast<int>(n));
  long long need = n * (n - 1) / 2;
  int bits = 0;
  int group = 0;
  long long got = 0;
  int i = 0, j = 1;
  while (got < need) {
    if (bits == 0) {
      if (pos >= line.size()) parse_fail(line.size(), "truncated adjacency bits");
      group = sixbits(pos);
      ++pos;
      bits = 6;
    }
    int bit = (group >> (bits - 1)) & 1;
    --bits;
    ++got;
    if (bit) GraphBuilderAccess::add_edge(g, i, j);
    if (++i == j) {
      i = 0;
      ++j;
    }
  }
  // Padding bits must be zero and the record must end here.
  while (bits > 0) {
    if ((group >> (bits - 1)) & 1) parse_fail(pos - 1, "nonzero padding bit");
    --bits;
  }
  if (pos != line.size()) parse_fail(pos, "trailing bytes after adjacency data");
  return g;
}

std::vector<Graph> decode_graph6_lines(const std::string& text) {
  std::vector<Graph> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(decode_graph6(line));
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return decode_graph6_lines(buf.str());
}

Graph parse_edge_list_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<int, int>> edges;
  long long declared = -1;
  long long max_seen = -1;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    long long u, v;
    if (!(fields >> u)) continue;  // blank
    if (fields >> v) {
      if (u < 0 || v < 0) fail(ErrorKind::parse, "edge list line " + std::to_string(lineno) + ": negative vertex");
      edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
      max_seen = std::max({max_seen, u, v});
    } else {
      if (declared >= 0) fail(ErrorKind::parse, "edge list line " + std::to_string(lineno) + ": duplicate vertex-count line");
      if (u < 0) fail(ErrorKind::parse, "edge list line " + std::to_string(lineno) + ": negative vertex count");
      declared = u;
    }
    std::string rest;
    if (fields >> rest) fail(ErrorKind::parse, "edge list line " + std::to_string(lineno) + ": unexpected token '" + rest + "'");
  }
  long long n = std::max(declared, max_seen + 1);
  if (n < 0) n = 0;
  if (n > kMaxVertices) fail(ErrorKind::capacity, "edge list declares " + std::to_string(n) + " vertices; capacity is " + std::to_string(kMaxVertices));
  return Graph(static_cast<int>(n), edges);
}

}  // namespace chilab
