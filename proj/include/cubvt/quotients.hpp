#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cubvt/labelled.hpp"
#include "cubvt/voltage.hpp"

namespace cubvt {

// Edge of a small labelled graph. u == v gives a loop, or a semiedge when semi is set.
struct QEdge {
  int u = 0, v = 0;
  int luv = 1, lvu = 1;
  bool semi = false;
};

LabelledGraph build_lg(int n, const std::vector<QEdge>& edges);

struct Candidate {
  std::string id;
  LabelledGraph lg;
  std::vector<std::string> passed;
};

struct CandidateSet {
  std::vector<Candidate> members;
  size_t size() const { return members.size(); }
};

constexpr int kMaxQuotientVertices = 5;

// Connected labelled multigraphs on at most max_vertices vertices with deg_lambda <= 3,
// up to label-preserving isomorphism.
CandidateSet enumerate_Q0(int max_vertices = kMaxQuotientVertices);

struct DiagramCheck {
  bool ok = false;
  int failed = 0;  // first failing condition (1..9)
  int u_hat = -1;
  std::string detail;
};

DiagramCheck check_diagram(const LabelledGraph& lg);
CandidateSet filter_diagram(const CandidateSet& cs);

// Empty when kept; otherwise the matched artefact ids.
std::string artefact_rejection(const LabelledGraph& lg);
CandidateSet filter_artefacts(const CandidateSet& cs);

// Smallest positive integer iota proportional to the lambda* potential.
std::vector<int> index_base(const LabelledGraph& lg);

// Every simplified ccv-extension with iota = m * index_base. With reduce set, only one
// representative per orbit under multiplying all voltages by a unit and reversing loops.
// f returns false to stop; the function then returns false too.
bool for_each_extension(const LabelledGraph& lg, int m, bool reduce,
                        const std::function<bool(const CcvGraph&)>& f);

struct ProbeOptions {
  int max_m = 12;
  int order_floor = 20;
  bool stop_at_first = false;
  // Sweep m further, up to max_m + order_floor / sum(index_base), so that small quotients reach order_floor.
  bool extend_box = true;
};

struct ProbeHit {
  int m = 0;
  std::vector<int> zeta;
  int order = 0;
};

struct ProbeReport {
  std::string id;
  std::string box;
  long long tested = 0;
  long long covers = 0;  // ccv-extensions whose cover was built
  std::vector<ProbeHit> hits;  // vertex-transitive covers above order_floor
  std::vector<int> orders() const;
};

ProbeReport probe_candidate(const LabelledGraph& lg, const ProbeOptions& opt = {}, const std::string& id = "");

CandidateSet compute_Qstar();
CandidateSet compute_Q(const CandidateSet& qstar, const ProbeOptions& opt = {});

struct NamedQuotient {
  std::string name;
  LabelledGraph lg;
  bool in_Q = false;
  bool expect_in_Qstar = true;
  // Orders of all vertex-transitive covers expected in a full sweep; empty means none.
  std::vector<int> expected_orders;
  bool reconstructed = false;
};

// The nine members of Q, the last one being Delta12.
std::vector<NamedQuotient> q_members();
// Exceptional quotients with the orders of their known vertex-transitive covers.
std::vector<NamedQuotient> exceptional_deltas();

void write_provenance(std::ostream& os, const CandidateSet& cs);

}  // namespace cubvt
