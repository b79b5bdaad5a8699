#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "chilab/generate.hpp"
#include "chilab/graph.hpp"
#include "chilab/graph6.hpp"

using namespace chilab;

TEST_CASE("vertex set basics") {
  VertexSet s;
  CHECK(s.empty());
  CHECK(s.count() == 0);
  CHECK(s.first() == -1);

  s.add(3);
  s.add(0);
  s.add(63);
  CHECK(s.count() == 3);
  CHECK(s.contains(0));
  CHECK(s.contains(3));
  CHECK(s.contains(63));
  CHECK_FALSE(s.contains(1));
  CHECK(s.first() == 0);
  CHECK(s.next_after(0) == 3);
  CHECK(s.next_after(3) == 63);
  CHECK(s.next_after(63) == -1);

  s.remove(3);
  CHECK(s.count() == 2);
  CHECK_FALSE(s.contains(3));

  CHECK(s.to_vector() == std::vector<int>{0, 63});
}

TEST_CASE("vertex set constructors and algebra") {
  VertexSet one = VertexSet::single(5);
  CHECK(one.count() == 1);
  CHECK(one.first() == 5);

  VertexSet five = VertexSet::full(5);
  CHECK(five.count() == 5);
  CHECK(five.to_vector() == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(VertexSet::full(0).empty());

  VertexSet a = VertexSet::of({0, 2, 4});
  VertexSet b = VertexSet::of({2, 3, 4});
  CHECK((a & b) == VertexSet::of({2, 4}));
  CHECK((a | b) == VertexSet::of({0, 2, 3, 4}));
  CHECK((a - b) == VertexSet::single(0));
  CHECK(a.intersects(b));
  CHECK_FALSE(a.intersects(VertexSet::of({1, 3})));
  CHECK(five.contains_all(a));
  CHECK_FALSE(a.contains_all(five));

  int visited = 0;
  for (int v : a) {
    CHECK(a.contains(v));
    ++visited;
  }
  CHECK(visited == 3);
}

TEST_CASE("vertex set index guards") {
  CHECK_THROWS_AS(VertexSet::single(-1), Error);
  CHECK_THROWS_AS(VertexSet::single(kMaxVertices), Error);
  CHECK_THROWS_AS(VertexSet::full(kMaxVertices + 1), Error);
  VertexSet s;
  CHECK_THROWS_AS(s.add(64), Error);
  try {
    s.add(-7);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::range);
  }
}

TEST_CASE("graph construction and adjacency") {
  Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(g.order() == 5);
  CHECK(g.edge_count() == 5);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.degree(2) == 2);
  CHECK(g.neighbours(0) == VertexSet::of({1, 4}));
  CHECK(g.vertices() == VertexSet::full(5));

  CHECK_THROWS_AS(Graph(-1), Error);
  CHECK_THROWS_AS(Graph(kMaxVertices + 1), Error);
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), Error);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), Error);
  CHECK_THROWS_AS(g.adjacent(0, 5), Error);
}

TEST_CASE("complement and equality") {
  Graph c5 = make_cycle(5);
  // Complement of the labeled C5 is the pentagram, another 5-cycle.
  Graph pentagram(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}});
  CHECK(c5.complement() == pentagram);
  CHECK(c5.complement().complement() == c5);

  Graph k4 = make_complete(4);
  Graph e4 = k4.complement();
  CHECK(e4.edge_count() == 0);
  CHECK(e4.complement() == k4);

  CHECK_FALSE(c5 == make_path(5));
}

TEST_CASE("induced subgraph keeps order and relabels") {
  Graph c6 = make_cycle(6);
  InducedSubgraph sub = induced_subgraph(c6, VertexSet::of({1, 2, 4, 5}));
  CHECK(sub.vertices == std::vector<int>{1, 2, 4, 5});
  CHECK(sub.graph.order() == 4);
  // Surviving edges: 1-2 and 4-5.
  CHECK(sub.graph.edge_count() == 2);
  CHECK(sub.graph.adjacent(0, 1));
  CHECK(sub.graph.adjacent(2, 3));
  CHECK_FALSE(sub.graph.adjacent(1, 2));

  CHECK_THROWS_AS(induced_subgraph(c6, VertexSet::single(6)), Error);
}

TEST_CASE("anticomplete and complete tests") {
  Graph g = disjoint_union(make_complete(3), make_complete(3));
  VertexSet left = VertexSet::of({0, 1, 2});
  VertexSet right = VertexSet::of({3, 4, 5});
  CHECK(are_anticomplete(g, left, right));
  CHECK_FALSE(are_complete(g, left, right));
  CHECK(are_complete(g, VertexSet::of({0, 1}), VertexSet::single(2)));
  CHECK(are_anticomplete(g, VertexSet(), right));
  CHECK(are_complete(g, VertexSet(), right));

  CHECK_THROWS_AS(are_anticomplete(g, left, left), Error);
  CHECK_THROWS_AS(are_complete(g, left, VertexSet::single(0)), Error);
}

TEST_CASE("common neighbours exclude the set itself") {
  // Wheel: hub 5 adjacent to every rim vertex of a C5.
  Graph w(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
              {5, 0}, {5, 1}, {5, 2}, {5, 3}, {5, 4}});
  CHECK(common_neighbours(w, VertexSet::of({0, 2})) == VertexSet::of({1, 5}));
  // 1 is adjacent to both 0 and 2 but is excluded as a member.
  CHECK(common_neighbours(w, VertexSet::of({0, 1, 2})) == VertexSet::single(5));
  CHECK(common_neighbours(w, VertexSet()) == w.vertices());

  CHECK(common_nonneighbours(w, VertexSet::single(5)).empty());
  CHECK(common_nonneighbours(w, VertexSet::single(0)) == VertexSet::of({2, 3}));
  CHECK(common_nonneighbours(w, VertexSet()) == w.vertices());
}

TEST_CASE("set neighbourhood and anticomplete set") {
  Graph p5 = make_path(5);
  CHECK(set_neighbourhood(p5, VertexSet::single(2)) == VertexSet::of({1, 3}));
  CHECK(set_neighbourhood(p5, VertexSet::of({0, 1})) == VertexSet::of({0, 1, 2}));
  CHECK(anticomplete_set(p5, VertexSet::single(0), p5.vertices()) ==
        VertexSet::of({2, 3, 4}));
  CHECK(anticomplete_set(p5, VertexSet::single(0), VertexSet::of({0, 1, 2})) ==
        VertexSet::single(2));
  CHECK(clip_to_graph(p5, VertexSet::of({3, 4, 5, 63})) == VertexSet::of({3, 4}));
}

TEST_CASE("disjoint union shifts the second operand") {
  Graph g = disjoint_union(make_cycle(4), make_complete(3));
  CHECK(g.order() == 7);
  CHECK(g.edge_count() == 7);
  CHECK(g.adjacent(4, 5));
  CHECK_FALSE(g.adjacent(3, 4));
  CHECK(are_anticomplete(g, VertexSet::full(4), VertexSet::of({4, 5, 6})));
}

TEST_CASE("graph6 frozen encodings") {
  CHECK(encode_graph6(make_cycle(5)) == "Dhc");
  CHECK(encode_graph6(make_complete(4)) == "C~");
  CHECK(encode_graph6(Graph(5)) == "D??");
  CHECK(encode_graph6(make_complete_bipartite(3, 3)) == "EFz_");
  CHECK(encode_graph6(make_path(4)) == "Ch");
  CHECK(encode_graph6(make_petersen()) == "IheA@GUAo");
  CHECK(encode_graph6(make_grotzsch()) == "JhdLA_gc?N_");
}

TEST_CASE("graph6 decode accepts header and frozen strings") {
  CHECK(decode_graph6("Dhc") == make_cycle(5));
  CHECK(decode_graph6(">>graph6<<Dhc") == make_cycle(5));
  CHECK(decode_graph6("IheA@GUAo") == make_petersen());
  CHECK(decode_graph6("?") == Graph(0));
}

TEST_CASE("graph6 round trip is byte exact on random graphs") {
  for (int i = 0; i < 300; ++i) {
    Rng rng(0x9E3779B97F4A7C15ull + i);
    int n = rng.pick_int(0, 20);
    Graph g = random_gnp(n, 0.4, rng.next());
    std::string enc = encode_graph6(g);
    CHECK(decode_graph6(enc) == g);
    CHECK(encode_graph6(decode_graph6(enc)) == enc);
  }
}

TEST_CASE("graph6 parse errors carry kind and offset") {
  auto expect_parse = [](const std::string& line) {
    try {
      decode_graph6(line);
      return false;
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::parse);
      CHECK(std::string(e.what()).find("byte") != std::string::npos);
      return true;
    }
  };
  CHECK(expect_parse(""));
  CHECK(expect_parse("D"));       // truncated adjacency bits
  CHECK(expect_parse("Dhc?"));    // trailing bytes
  CHECK(expect_parse("Dh\x1f")); // byte outside the alphabet
  CHECK(expect_parse("C~~"));    // trailing bytes after K4
}

TEST_CASE("graph6 line decoding skips blanks") {
  std::vector<Graph> gs = decode_graph6_lines("Dhc\n\nC~\n");
  REQUIRE(gs.size() == 2);
  CHECK(gs[0] == make_cycle(5));
  CHECK(gs[1] == make_complete(4));
}

TEST_CASE("edge list parsing") {
  Graph g = parse_edge_list_text("# triangle plus isolated vertex\n4\n0 1\n1 2\n2 0\n");
  CHECK(g.order() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.degree(3) == 0);

  Graph implicit = parse_edge_list_text("0 2\n");
  CHECK(implicit.order() == 3);

  CHECK_THROWS_AS(parse_edge_list_text("0 1 2\n"), Error);
  CHECK_THROWS_AS(parse_edge_list_text("-1 0\n"), Error);
  CHECK_THROWS_AS(parse_edge_list_text("3\n4\n"), Error);
}

TEST_CASE("generators have the advertised shapes") {
  Graph c7 = make_cycle(7);
  CHECK(c7.order() == 7);
  CHECK(c7.edge_count() == 7);
  for (int v = 0; v < 7; ++v) CHECK(c7.degree(v) == 2);

  Graph k33 = make_complete_bipartite(3, 3);
  CHECK(k33.edge_count() == 9);
  CHECK(are_anticomplete(k33, VertexSet::full(3), VertexSet()) );
  CHECK(are_complete(k33, VertexSet::full(3), VertexSet::of({3, 4, 5})));

  Graph k222 = make_complete_multipartite({2, 2, 2});
  CHECK(k222.order() == 6);
  CHECK(k222.edge_count() == 12);

  Graph pet = make_petersen();
  CHECK(pet.order() == 10);
  CHECK(pet.edge_count() == 15);
  for (int v = 0; v < 10; ++v) CHECK(pet.degree(v) == 3);

  Graph grot = make_grotzsch();
  CHECK(grot.order() == 11);
  CHECK(grot.edge_count() == 20);
}

TEST_CASE("random generators are deterministic in the seed") {
  Graph a = random_gnp(12, 0.5, 42);
  Graph b = random_gnp(12, 0.5, 42);
  Graph c = random_gnp(12, 0.5, 43);
  CHECK(a == b);
  CHECK_FALSE(a == c);

  CHECK(random_girth_constrained(10, 5, 7) == random_girth_constrained(10, 5, 7));
  CHECK(random_with_odd_hole(9, 3) == random_with_odd_hole(9, 3));
  CHECK(random_with_long_hole(12, 7, 11) == random_with_long_hole(12, 7, 11));
}
