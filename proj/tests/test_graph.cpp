#include <algorithm>
#include <set>

#include "doctest.h"
#include "specind/error.hpp"
#include "specind/graph.hpp"

using namespace specind;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("graph6 decodes K5") {
  auto g = parse_graph6("D~{");
  CHECK(g.order() == 5);
  CHECK(g.edge_count() == 10);
  CHECK(to_graph6(g) == "D~{");
}

TEST_CASE("graph6 rejects empty graph on 4 vertices as disconnected") {
  CHECK(kind_of([] { parse_graph6("C?"); }) == ErrorKind::DisconnectedGraph);
}

TEST_CASE("graph6 rejects bad characters and lengths") {
  CHECK(kind_of([] { parse_graph6("D~"); }) == ErrorKind::MalformedGraph6);
  CHECK(kind_of([] { parse_graph6("D~{{"); }) == ErrorKind::MalformedGraph6);
  CHECK(kind_of([] { parse_graph6(""); }) == ErrorKind::MalformedGraph6);
  CHECK(kind_of([] { parse_graph6("D~ "); }) == ErrorKind::MalformedGraph6);
}

TEST_CASE("graph6 round trip on generated families") {
  for (const char* text : {"petersen", "odd:4", "cycle:7", "hypercube:4", "circulant:10;1,2", "prism:5",
                           "moebius_ladder:4", "complete_bipartite:3,4", "kneser:7,2", "complete:9"}) {
    auto g = generate(FamilySpec::parse(text));
    auto back = parse_graph6(to_graph6(g));
    CHECK_MESSAGE(back == g, text);
  }
  // long-form size header
  auto big = generate(FamilySpec::parse("cycle:70"));
  auto enc = to_graph6(big);
  CHECK(enc[0] == '~');
  CHECK(parse_graph6(enc) == big);
  CHECK(parse_graph6(">>graph6<<" + enc) == big);
}

TEST_CASE("petersen via graph6 re-parse") {
  auto p = generate(FamilySpec::parse("petersen"));
  auto q = parse_graph6(to_graph6(p));
  CHECK(q.order() == 10);
  CHECK(q.edge_count() == 15);
  CHECK(q.is_regular());
  CHECK(q.degree(0) == 3);
}

TEST_CASE("family generation") {
  auto o3 = generate(FamilySpec::parse("odd:3"));
  CHECK(o3 == generate(FamilySpec::parse("petersen")));
  CHECK(distance_matrix(o3).diameter == 2);

  auto o6 = generate(FamilySpec::parse("odd:6"));
  CHECK(o6.order() == 462);
  CHECK(o6.is_regular());
  CHECK(o6.degree(0) == 6);

  for (int l = 2; l <= 5; ++l) {
    auto a = generate(FamilySpec{Family::Kneser, {2 * l - 1, l - 1}});
    auto b = generate(FamilySpec{Family::Odd, {l}});
    CHECK(a == b);
  }

  auto c = generate(FamilySpec::parse("circulant:10;5,2"));
  CHECK(c.order() == 10);
  CHECK(c.is_regular());
  CHECK(c.degree(0) == 3);

  auto q = generate(FamilySpec::parse("hypercube:3"));
  CHECK(q.edge_count() == 12);
  auto m = generate(FamilySpec::parse("moebius_ladder:4"));
  CHECK(m.degree(0) == 3);
  CHECK(m.order() == 8);
}

TEST_CASE("family parameter validation") {
  CHECK(kind_of([] { generate(FamilySpec::parse("circulant:10;2,4")); }) == ErrorKind::DisconnectedGraph);
  CHECK(kind_of([] { generate(FamilySpec::parse("kneser:4,2")); }) == ErrorKind::DisconnectedGraph);
  CHECK(kind_of([] { generate(FamilySpec::parse("cycle:2")); }) == ErrorKind::InvalidFamilyParameters);
  CHECK(kind_of([] { generate(FamilySpec::parse("kneser:3,2")); }) == ErrorKind::InvalidFamilyParameters);
  CHECK(kind_of([] { FamilySpec::parse("banana:3"); }) == ErrorKind::InvalidFamilyParameters);
  CHECK(kind_of([] { FamilySpec::parse("cycle:x"); }) == ErrorKind::InvalidFamilyParameters);
}

TEST_CASE("family spec text round trip") {
  for (const char* text : {"odd:5", "kneser:6,2", "circulant:10;1,2", "petersen", "complete_bipartite:2,3"}) {
    CHECK(FamilySpec::parse(text).to_string() == text);
  }
  CHECK(FamilySpec::parse("circulant:10,1,2").to_string() == "circulant:10;1,2");
}

TEST_CASE("edge list parsing") {
  auto g = parse_edge_list("# triangle plus tail\n0 1\n1 2\n2 0\n2 3\n");
  CHECK(g.order() == 4);
  CHECK(g.edge_count() == 4);
  CHECK(kind_of([] { parse_edge_list("0 1\n2 3\n"); }) == ErrorKind::DisconnectedGraph);
  CHECK(kind_of([] { parse_edge_list("0 0\n"); }) == ErrorKind::MalformedEdgeList);
  CHECK(kind_of([] { parse_edge_list("0 a\n"); }) == ErrorKind::MalformedEdgeList);
}

TEST_CASE("distances") {
  CHECK(distance_matrix(generate(FamilySpec::parse("odd:5"))).diameter == 4);
  auto dm = distance_matrix(generate(FamilySpec::parse("cycle:5")));
  CHECK(dm.diameter == 2);
  for (Vertex u = 0; u < 5; ++u) {
    CHECK(dm.at(u, u) == 0);
    for (Vertex v = 0; v < 5; ++v) {
      CHECK(dm.at(u, v) == dm.at(v, u));
      for (Vertex w = 0; w < 5; ++w) CHECK(dm.at(u, w) <= dm.at(u, v) + dm.at(v, w));
    }
  }
}

TEST_CASE("power graphs") {
  auto p = generate(FamilySpec::parse("petersen"));
  CHECK(power_graph(p, 2) == generate(FamilySpec::parse("complete:10")));
  CHECK(power_graph(p, 1) == p);

  auto c6 = generate(FamilySpec::parse("cycle:6"));
  CHECK(power_graph(c6, 2) == generate(FamilySpec::parse("circulant:6;1,2")));

  auto o5 = generate(FamilySpec::parse("odd:5"));
  auto prev = power_graph(o5, 1);
  for (int k = 2; k <= 5; ++k) {
    auto next = power_graph(o5, k);
    auto e1 = prev.edges();
    for (auto [u, v] : e1) CHECK(next.adjacent(u, v));
    prev = next;
  }
  CHECK(prev.edge_count() == 126 * 125 / 2);
}
