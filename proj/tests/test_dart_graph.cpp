#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "cubvt/dart_graph.hpp"
#include "cubvt/families.hpp"

using namespace cubvt;

namespace {

DartGraph k4() { return DartGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

// brute-force count of c-cycles through edge {a,b}
long long brute_cycles_through(const DartGraph& g, int a, int b, int c) {
  auto adj = g.adjacency();
  long long count = 0;
  std::vector<int> path{b};
  std::vector<char> used(g.num_vertices(), 0);
  used[a] = used[b] = 1;
  auto rec = [&](auto& self) -> void {
    int at = path.back();
    if (static_cast<int>(path.size()) == c - 1) {
      if (std::find(adj[at].begin(), adj[at].end(), a) != adj[at].end()) ++count;
      return;
    }
    for (int w : adj[at])
      if (!used[w]) {
        used[w] = 1;
        path.push_back(w);
        self(self);
        path.pop_back();
        used[w] = 0;
      }
  };
  rec(rec);
  return c == 2 ? 0 : count;
}

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(DartGraph(1, {}, {})).empty());
  CHECK(validate(k4()).empty());
  CHECK(k4().num_darts() == 12);
  CHECK(validate(DartGraph(1, {0, 0, 0}, {1, 2, 0})).find("involution") != std::string::npos);
  CHECK_FALSE(validate(DartGraph(1, {0, 3}, {1, 0})).empty());
}

TEST_CASE("edge kinds") {
  DartGraph g(1, {0, 0, 0}, {1, 0, 2});
  CHECK(edge_kind(g, 0) == EdgeKind::loop);
  CHECK(edge_kind(g, 2) == EdgeKind::semiedge);
  CHECK(edge_kind(k4(), 5) == EdgeKind::link);
  CHECK_THROWS_AS(edge_kind(g, 7), Error);
}

TEST_CASE("simplicity") {
  CHECK(is_simple(k4()));
  CHECK_FALSE(is_simple(DartGraph(1, {0}, {0})));
  CHECK_FALSE(is_simple(DartGraph(2, {0, 1, 0, 1}, {1, 0, 3, 2})));
}

TEST_CASE("girth") {
  CHECK(girth(k4()) == 3);
  CHECK(girth(haar_graph(7, 1, 3)) == 6);
  CHECK(girth(tutte_8_cage()) == 8);
  CHECK_FALSE(girth(DartGraph::from_edges(3, {{0, 1}, {1, 2}})).has_value());
  // loop and parallel pair on quotients
  CHECK(girth(DartGraph(1, {0, 0, 0}, {1, 0, 2})) == 1);
  CHECK(girth(DartGraph(2, {0, 1, 0, 1}, {1, 0, 3, 2})) == 2);
  auto g = generalized_petersen(8, 3);
  auto c = shortest_cycle(g);
  REQUIRE(c);
  CHECK(is_cycle(g, *c));
  CHECK(static_cast<int>(c->darts.size()) == girth(g));
}

TEST_CASE("cycle counts against brute force") {
  CHECK(count_c_cycles_through(k4(), 0, 3) == 2);
  CHECK(count_c_cycles_through(k4(), 0, 4) == 2);
  for (auto g : {generalized_petersen(5, 2), prism(5), haar_graph(7, 1, 3), moebius_ladder(10)}) {
    for (int x = 0; x < g.num_darts(); x += 3)
      for (int c = 3; c <= 8; ++c)
        CHECK(count_c_cycles_through(g, x, c) == brute_cycles_through(g, g.beg(x), g.end(x), c));
  }
  auto pet = generalized_petersen(5, 2);
  CHECK(count_c_cycles_through(pet, 0, 4) == 0);
  CHECK_THROWS_AS(count_c_cycles_through(pet, 0, kMaxCycleLength + 1), Error);
}

TEST_CASE("cycles_up_to lists every short cycle once") {
  auto g = prism(4);
  auto cyc = cycles_up_to(g, 4);
  CHECK(cyc.size() == 6);
  for (const auto& c : cyc) CHECK(is_cycle(g, c));
}

TEST_CASE("valence sum and adjacency round trip") {
  for (auto g : {k4(), sdw(5, 3), x_graph(9)}) {
    int sum = 0;
    for (int v = 0; v < g.num_vertices(); ++v) sum += g.valence(v);
    CHECK(sum == g.num_darts());
    for (int x = 0; x < g.num_darts(); ++x) CHECK(g.end(x) == g.beg(g.inv(x)));
    auto adj = g.adjacency();
    auto back = DartGraph::from_adjacency(adj).adjacency();
    for (auto& a : adj) std::sort(a.begin(), a.end());
    for (auto& a : back) std::sort(a.begin(), a.end());
    CHECK(adj == back);
  }
}

TEST_CASE("dg format round trip") {
  DartGraph g(2, {0, 0, 1, 1, 0}, {1, 0, 3, 2, 4});
  std::stringstream ss;
  write_dg(ss, g);
  DartGraph h = read_dg(ss);
  CHECK(h.begs() == g.begs());
  CHECK(h.invs() == g.invs());
  std::stringstream bad("dartgraph 1 1\ndart 0 3 0\n");
  CHECK_THROWS_AS(read_dg(bad), Error);
}
