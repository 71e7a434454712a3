#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "cubvt/labelled.hpp"

namespace cubvt {

// Cyclic generalised voltage graph (base, lambda, iota, zeta).
// zeta is stored as a residue in [0, lambda(x) * iota(beg x)).
struct CcvGraph {
  LabelledGraph base;
  std::vector<int> iota;
  std::vector<int> zeta;

  CcvGraph() = default;
  CcvGraph(LabelledGraph lg, std::vector<int> iota, std::vector<int> zeta);
  int modulus(int x) const { return base.lambda[x] * iota[base.graph.beg(x)]; }
  const DartGraph& graph() const { return base.graph; }
};

// Sets zeta(x^-1) = -zeta(x) from the lower-id dart of every edge.
CcvGraph make_ccv(const LabelledGraph& lg, const std::vector<int>& iota, const std::vector<int>& zeta);

std::string validate_ccv(const CcvGraph& c);
bool tree_normalised(const CcvGraph& c, const SpanningTree& t);
CheckResult is_ccv(const CcvGraph& c, const SpanningTree& t);
bool is_simplified(const CcvGraph& c, const SpanningTree& t);
long long rho_order(const CcvGraph& c);

struct CoverGraph {
  DartGraph graph;
  std::vector<int> proj_v, proj_d;    // cover element -> base element
  std::vector<int> index_v, index_d;  // cover element -> subscript
  std::vector<int> vertex_offset, dart_offset;
  std::vector<int> rho_v, rho_d;
  int vertex(int v, int i) const { return vertex_offset[v] + i; }
};

CoverGraph cover(const CcvGraph& c);
// Edge multiset from the adjacency rules for simplified voltages, as sorted (min, max) pairs.
std::vector<std::pair<int, int>> cover_adjacency_oracle(const CcvGraph& c, const SpanningTree& t);
CcvGraph simplify_voltage(const CcvGraph& c);

struct Endset {
  long long offset = 0, stride = 0, modulus = 1;
  bool contains(long long j) const;
  std::vector<long long> elements() const;
};

Endset endset(const CcvGraph& c, const Walk& w);
// All lifts of w starting at (beg w_1, 0).
std::vector<Walk> lifts(const CcvGraph& c, const CoverGraph& cov, const Walk& w);
bool is_lambda_reduced(const LabelledGraph& lg, const Walk& w);
// Projection of a cover walk.
Walk project(const CoverGraph& cov, const Walk& w);

void write_ccv(std::ostream& os, const CcvGraph& c);
CcvGraph read_ccv(std::istream& is);
void write_fibres(std::ostream& os, const CoverGraph& cov);

}  // namespace cubvt
