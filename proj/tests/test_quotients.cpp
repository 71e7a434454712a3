#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "cubvt/quotients.hpp"
#include "cubvt/symmetry.hpp"

using namespace cubvt;

namespace {

std::set<std::vector<int>> forms(const CandidateSet& cs) {
  std::set<std::vector<int>> out;
  for (const auto& c : cs.members) out.insert(labelled_canonical_form(c.lg));
  return out;
}

}  // namespace

TEST_CASE("one-vertex members of Q0") {
  CandidateSet q = enumerate_Q0(1);
  CHECK(q.size() == 10);
  for (const auto& c : q.members) {
    CHECK(c.lg.num_vertices() == 1);
    CHECK(deg_lambda(c.lg, 0) <= 3);
  }
  CHECK(forms(q).size() == 10);
}

TEST_CASE("Q0 is closed under relabelling and has no duplicates") {
  CandidateSet q = enumerate_Q0(3);
  CHECK(forms(q).size() == q.size());
  for (const auto& c : q.members) CHECK(is_connected(c.lg.graph));
}

TEST_CASE("diagram conditions") {
  auto E = [](int u, int v, int a = 1, int b = 1) { return QEdge{u, v, a, b, false}; };
  auto S = [](int u) { return QEdge{u, u, 1, 1, true}; };
  CHECK(check_diagram(build_lg(1, {E(0, 0), S(0)})).ok);
  // deg_lambda 2
  auto two = check_diagram(build_lg(1, {E(0, 0)}));
  CHECK_FALSE(two.ok);
  CHECK(two.failed == 2);
  auto dumbbell = check_diagram(build_lg(2, {E(0, 1), E(0, 0), E(1, 1)}));
  CHECK(dumbbell.ok);
  CHECK(dumbbell.u_hat >= 0);
}

TEST_CASE("pipeline counts") {
  CandidateSet q0 = enumerate_Q0();
  CHECK(q0.size() == 6273);
  std::set<int> codes;
  for (const auto& c : q0.members) codes.insert(check_diagram(c.lg).failed);
  CHECK(codes == std::set<int>{0, 1, 2, 3, 4, 7, 8, 9});
  CandidateSet d = filter_diagram(q0);
  CHECK(d.size() == 38);
  for (const auto& c : d.members) CHECK(is_ccv_extendable(c.lg).ok);
  CandidateSet a = filter_artefacts(d);
  CHECK(a.size() == 24);
  for (const auto& c : a.members) CHECK(artefact_rejection(c.lg).empty());
  CandidateSet q = compute_Q(a);
  CHECK(q.size() == 9);

  std::set<std::vector<int>> fig;
  for (const auto& n : q_members()) fig.insert(labelled_canonical_form(n.lg));
  CHECK(forms(q) == fig);
  auto fa = forms(a);
  for (const auto& f : fig) CHECK(fa.count(f) == 1);

  std::ostringstream os;
  write_provenance(os, q);
  const std::string prov = os.str();
  CHECK(std::count(prov.begin(), prov.end(), '\n') == 9);
}

TEST_CASE("members of Q have vertex-transitive covers") {
  ProbeOptions po;
  po.max_m = 8;
  po.stop_at_first = true;
  for (const auto& n : q_members()) {
    CAPTURE(n.name);
    ProbeReport r = probe_candidate(n.lg, po, n.name);
    REQUIRE_FALSE(r.hits.empty());
    CHECK(r.hits.front().order > po.order_floor);
  }
}

TEST_CASE("exceptional quotients") {
  ProbeOptions po;
  po.max_m = 8;
  for (const auto& d : exceptional_deltas()) {
    CAPTURE(d.name);
    CHECK(d.lg.num_vertices() >= 4);
    ProbeReport r = probe_candidate(d.lg, po, d.name);
    for (int o : r.orders()) CHECK(o > po.order_floor);
    // none has a vertex-transitive cover above 20 vertices
    CHECK(r.hits.empty());
  }
}

TEST_CASE("index base") {
  auto E = [](int u, int v, int a = 1, int b = 1) { return QEdge{u, v, a, b, false}; };
  auto S = [](int u) { return QEdge{u, u, 1, 1, true}; };
  CHECK(index_base(build_lg(2, {E(0, 1), E(0, 1), E(0, 1)})) == std::vector<int>{1, 1});
  auto lg = build_lg(2, {E(0, 1, 1, 2), E(0, 0), S(1)});
  auto ib = index_base(lg);
  CHECK((ib[0] == 2 * ib[1] || ib[1] == 2 * ib[0]));
}
