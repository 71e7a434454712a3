#pragma once

#include <boost/rational.hpp>

#include <iosfwd>
#include <string>
#include <vector>

#include "cubvt/dart_graph.hpp"

namespace cubvt {

using Rational = boost::rational<long long>;

struct LabelledGraph {
  DartGraph graph;
  std::vector<int> lambda;

  LabelledGraph() = default;
  LabelledGraph(DartGraph g, std::vector<int> lam);
  int num_vertices() const { return graph.num_vertices(); }
  int num_darts() const { return graph.num_darts(); }
};

struct EdgeType {
  int i = 1, j = 1;
  bool operator==(const EdgeType&) const = default;
};

EdgeType edge_type(const LabelledGraph& lg, int x);
bool has_type(const LabelledGraph& lg, int x, int i, int j);
Rational lambda_star(const LabelledGraph& lg, const Walk& w);
int deg_lambda(const LabelledGraph& lg, int v);

// Spanning tree as parent darts; parent_dart[v] runs from the parent into v.
struct SpanningTree {
  int root = 0;
  std::vector<int> parent_dart;
  std::vector<char> in_tree;  // per dart, both darts of a tree edge marked
  std::vector<int> order;     // root first, parents before children
};

SpanningTree bfs_tree(const DartGraph& g, int root = 0);
// Tree that contains every [i,j]-edge with i != j; throws Error if impossible.
SpanningTree spanning_tree(const LabelledGraph& lg);
// Darts of the tree path from the root to v.
Walk tree_path(const DartGraph& g, const SpanningTree& t, int v);
std::vector<Rational> tree_potential(const LabelledGraph& lg, const SpanningTree& t);

bool is_extendable(const LabelledGraph& lg);

struct CheckResult {
  bool ok = true;
  int failed = 0;  // number of the first failed condition
  std::string detail;
  explicit operator bool() const { return ok; }
  static CheckResult pass() { return {}; }
  static CheckResult fail(int c, std::string d) { return {false, c, std::move(d)}; }
};

CheckResult is_ccv_extendable(const LabelledGraph& lg);

// Label-preserving canonical form; brute force over invariant-respecting vertex orders.
constexpr int kMaxLabelledCanonVertices = 8;
std::vector<int> labelled_canonical_form(const LabelledGraph& lg);
std::vector<int> multigraph_canonical_form(const DartGraph& g);
LabelledGraph from_labelled_canonical_form(const std::vector<int>& form);

void write_lg(std::ostream& os, const LabelledGraph& lg);
LabelledGraph read_lg(std::istream& is);

struct ArtefactPattern {
  std::string id;
  bool reconstructed = true;
  LabelledGraph pattern;
  std::vector<char> wildcard;  // per dart: lambda not constrained
};

struct ArtefactMatch {
  std::string id;
  std::vector<int> vertex_map;
  std::vector<int> dart_map;
};

std::vector<ArtefactPattern> read_patterns(std::istream& is);
const std::vector<ArtefactPattern>& default_patterns();
std::vector<ArtefactMatch> embeddings(const LabelledGraph& host, const ArtefactPattern& p);
std::vector<ArtefactMatch> find_artefacts(const LabelledGraph& lg,
                                          const std::vector<ArtefactPattern>& patterns = default_patterns());

}  // namespace cubvt
