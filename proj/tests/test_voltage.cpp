#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "cubvt/families.hpp"
#include "cubvt/quotients.hpp"
#include "cubvt/symmetry.hpp"
#include "cubvt/voltage.hpp"

using namespace cubvt;

namespace {

QEdge E(int u, int v, int a = 1, int b = 1) { return {u, v, a, b, false}; }
QEdge S(int u) { return {u, u, 1, 1, true}; }

CcvGraph moeb_ccv(int n) { return make_ccv(build_lg(1, {E(0, 0), S(0)}), {n}, {1, 0, n / 2}); }

}  // namespace

TEST_CASE("validate_ccv") {
  auto lg = build_lg(2, {E(0, 1, 1, 2)});
  CHECK(validate_ccv(make_ccv(lg, {10, 5}, {0, 0})).empty());
  CHECK(validate_ccv(make_ccv(lg, {5, 5}, {0, 0})).find("ratio") != std::string::npos);
  auto loop = build_lg(1, {E(0, 0), S(0)});
  CHECK(validate_ccv(CcvGraph(loop, {6}, {1, -1, 3})).empty());
  CHECK(CcvGraph(loop, {6}, {1, -1, 3}).zeta[1] == 5);
  CHECK_FALSE(validate_ccv(CcvGraph(loop, {6}, {1, 2, 3})).empty());
}

TEST_CASE("is_ccv conditions") {
  CcvGraph d = delta12(5, 1, 2);
  CHECK(is_ccv(d, spanning_tree(d.base)));
  auto loop = build_lg(1, {E(0, 0), S(0)});
  CcvGraph semi0 = make_ccv(loop, {6}, {1, 0, 0});
  CHECK(is_ccv(semi0, spanning_tree(loop)).failed == 3);
  auto theta = build_lg(2, {E(0, 1), E(0, 1), E(0, 1)});
  CcvGraph flat = make_ccv(theta, {6, 6}, {0, 0, 2, 0, 4, 0});
  CHECK(is_ccv(flat, spanning_tree(theta)).failed == 4);
  CcvGraph same = make_ccv(theta, {5, 5}, {0, 0, 0, 0, 1, 0});
  CHECK(is_ccv(same, spanning_tree(theta)).failed == 2);
  CcvGraph off_tree = make_ccv(theta, {5, 5}, {1, 0, 2, 0, 3, 0});
  CHECK_THROWS_AS(is_ccv(off_tree, spanning_tree(theta)), Error);
}

TEST_CASE("is_simplified") {
  auto loop = build_lg(1, {E(0, 0), S(0)});
  auto t = spanning_tree(loop);
  CHECK(is_simplified(make_ccv(loop, {10}, {1, 0, 5}), t));
  CHECK_FALSE(is_simplified(make_ccv(loop, {10}, {5, 0, 5}), t));
  CHECK_FALSE(is_simplified(make_ccv(loop, {10}, {1, 0, 4}), t));
  auto theta = build_lg(2, {E(0, 1), E(0, 1), E(0, 1)});
  auto tt = spanning_tree(theta);
  // a cotree voltage equal to iota is the residue 0, which meets the bound trivially
  CHECK(is_simplified(make_ccv(theta, {5, 5}, {0, 0, 5, 0, 2, 0}), tt) ==
        is_simplified(make_ccv(theta, {5, 5}, {0, 0, 0, 0, 2, 0}), tt));
  CHECK_FALSE(is_simplified(make_ccv(theta, {5, 5}, {1, 0, 2, 0, 3, 0}), tt));
}

TEST_CASE("cover examples") {
  for (int n : {6, 8, 10}) {
    CoverGraph c = cover(moeb_ccv(n));
    CHECK(is_isomorphic(c.graph, moebius_ladder(n)));
  }
  CoverGraph d = cover(delta12(5, 1, 2));
  CHECK(d.graph.num_vertices() == 30);
  CHECK(is_cubic(d.graph));
  std::vector<int> sizes(4, 0);
  for (int v : d.proj_v) ++sizes[v];
  CHECK(sizes == std::vector<int>{10, 10, 5, 5});
  // all-[1,1] quotient: rho is semiregular
  auto theta = build_lg(2, {E(0, 1), E(0, 1), E(0, 1)});
  CoverGraph h = cover(make_ccv(theta, {7, 7}, {0, 0, 1, 0, 3, 0}));
  CHECK(is_semiregular(h.graph, h.rho_v));
  CHECK_FALSE(is_semiregular(d.graph, d.rho_v));
}

TEST_CASE("cover structure on the members of Q") {
  for (const auto& q : q_members()) {
    for (int m = 1; m <= 8; ++m) {
      for_each_extension(q.lg, m, false, [&](const CcvGraph& c) {
        CoverGraph cov = cover(c);
        const DartGraph& g = c.graph();
        CHECK(is_simple(cov.graph));
        CHECK(is_connected(cov.graph));
        CHECK(is_cubic(cov.graph));
        CHECK(cov.graph.edge_list() == cover_adjacency_oracle(c, spanning_tree(c.base)));
        CHECK(is_automorphism(cov.graph, cov.rho_v));
        CHECK(perm_order(cov.rho_v) == rho_order(c));
        // projection is a graph epimorphism
        for (int y = 0; y < cov.graph.num_darts(); ++y) {
          CHECK(cov.proj_v[cov.graph.beg(y)] == g.beg(cov.proj_d[y]));
          CHECK(cov.proj_d[cov.graph.inv(y)] == g.inv(cov.proj_d[y]));
        }
        return true;
      });
    }
  }
}

TEST_CASE("ccv condition roles on invalid voltages") {
  auto theta = build_lg(2, {E(0, 1), E(0, 1), E(0, 1)});
  // equal voltages on parallel darts: a multigraph
  CoverGraph a = cover(make_ccv(theta, {5, 5}, {0, 0, 1, 0, 1, 0}));
  CHECK_FALSE(is_simple(a.graph));
  // even indices with even voltages: disconnected
  CoverGraph b = cover(make_ccv(theta, {6, 6}, {0, 0, 2, 0, 4, 0}));
  CHECK_FALSE(is_connected(b.graph));
  // deg_lambda 2: not cubic
  auto path = build_lg(2, {E(0, 1), S(0), S(1)});
  CoverGraph c = cover(make_ccv(path, {4, 4}, {0, 0, 2, 2}));
  CHECK_FALSE(is_cubic(c.graph));
}

TEST_CASE("simplify_voltage") {
  auto theta = build_lg(2, {E(0, 1), E(0, 1), E(0, 1)});
  CcvGraph c = make_ccv(theta, {7, 7}, {3, 0, 4, 0, 6, 0});
  CcvGraph s = simplify_voltage(c);
  auto t = spanning_tree(theta);
  CHECK(tree_normalised(s, t));
  CHECK(canonical_form(cover(s).graph) == canonical_form(cover(c).graph));
  CcvGraph already = make_ccv(theta, {7, 7}, {0, 0, 1, 0, 3, 0});
  CHECK(simplify_voltage(already).zeta == already.zeta);
  auto loop = build_lg(1, {E(0, 0), S(0)});
  CcvGraph neg = CcvGraph(loop, {8}, {1, -1, -4});
  CHECK(neg.zeta[2] == 4);
  // a three-vertex quotient with tree voltages
  auto tri = build_lg(3, {E(0, 1), E(1, 2), E(2, 0), S(0), S(1), S(2)});
  for (int m = 4; m <= 8; m += 2) {
    CcvGraph r = make_ccv(tri, {m, m, m}, {1, 0, 2, 0, 3, 0, m / 2, m / 2, m / 2});
    CcvGraph rs = simplify_voltage(r);
    CHECK(tree_normalised(rs, spanning_tree(tri)));
    CHECK(is_isomorphic(cover(rs).graph, cover(r).graph));
  }
}

TEST_CASE("endsets") {
  auto lg = build_lg(2, {E(0, 1, 1, 2), E(1, 1)});
  CcvGraph c = make_ccv(lg, {10, 5}, {0, 0, 2, 0});
  Endset e = endset(c, Walk{{0}});
  CHECK(e.modulus == 5);
  CHECK(e.offset == 0);
  CHECK(e.elements() == std::vector<long long>{0});
  Endset l = endset(c, Walk{{2, 2, 2}});
  CHECK(l.offset == 1);
  CHECK(l.stride == 5);
  CHECK_THROWS_AS(endset(c, Walk{{0, 0}}), Error);
}

TEST_CASE("lifts realise exactly the endset") {
  for (const auto& q : {q_members()[1].lg, q_members()[8].lg}) {
    for_each_extension(q, 3, false, [&](const CcvGraph& c) {
      CoverGraph cov = cover(c);
      const DartGraph& g = c.graph();
      for (int x = 0; x < g.num_darts(); ++x)
        for (int y : g.darts_at(g.end(x))) {
          Walk w{{x, y}};
          std::set<long long> ends;
          for (const Walk& l : lifts(c, cov, w)) ends.insert(cov.index_v[cov.graph.end(l.darts.back())]);
          auto el = endset(c, w).elements();
          CHECK(ends == std::set<long long>(el.begin(), el.end()));
        }
      return true;
    });
  }
  // branching factor 2 over a [1,2]-edge from the lambda=1 side
  CcvGraph c = delta12(5, 1, 2);
  CoverGraph cov = cover(c);
  int x = -1;
  for (int y = 0; y < c.graph().num_darts(); ++y)
    if (c.base.lambda[y] == 2) x = y;
  REQUIRE(x >= 0);
  CHECK(lifts(c, cov, Walk{{x}}).size() == 2);
  // all-[1,1], zero voltages: a unique lift ending at index 0
  auto theta = build_lg(2, {E(0, 1), E(0, 1), E(0, 1)});
  CcvGraph z = make_ccv(theta, {5, 5}, {0, 0, 1, 0, 2, 0});
  CoverGraph zc = cover(z);
  auto ls = lifts(z, zc, Walk{{0, 1}});
  REQUIRE(ls.size() == 1);
  CHECK(zc.index_v[zc.graph.end(ls[0].darts.back())] == 0);
}

TEST_CASE("lambda-reduced walks") {
  auto lg = build_lg(2, {E(0, 1, 1, 2), E(0, 0), E(1, 1)});
  CHECK(is_lambda_reduced(lg, Walk{{2, 0, 4}}));
  CHECK(is_lambda_reduced(lg, Walk{{2, 0, 1}}));  // back over lambda(x^-1) = 2
  CHECK_FALSE(is_lambda_reduced(lg, Walk{{1, 0, 4}}));
  CHECK_FALSE(is_lambda_reduced(lg, Walk{{4, 5}}));
}

TEST_CASE("cover cycles project to lambda-reduced closed walks with 0 in the endset") {
  CcvGraph c = delta12(5, 1, 2);
  CoverGraph cov = cover(c);
  int n = 0;
  for (const Walk& cyc : cycles_up_to(cov.graph, 8)) {
    Walk p = project(cov, cyc);
    CHECK(is_lambda_reduced(c.base, p));
    CHECK(endset(c, p).contains(0));
    ++n;
  }
  CHECK(n > 0);
}

TEST_CASE("ccv format round trip") {
  CcvGraph c = delta12(7, 1, 2);
  std::stringstream ss;
  write_ccv(ss, c);
  CcvGraph d = read_ccv(ss);
  CHECK(d.iota == c.iota);
  CHECK(d.zeta == c.zeta);
  CHECK(d.base.lambda == c.base.lambda);
}
