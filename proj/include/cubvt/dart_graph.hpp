#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cubvt {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class EdgeKind { semiedge, loop, link };

// Graph as (V, D, beg, inv). Vertex and dart ids are dense 0..n-1.
class DartGraph {
 public:
  DartGraph() = default;
  DartGraph(int num_vertices, std::vector<int> beg, std::vector<int> inv);

  // Simple graph from an undirected edge list; darts 2e, 2e+1 per edge.
  static DartGraph from_edges(int num_vertices, const std::vector<std::pair<int, int>>& edges);
  static DartGraph from_adjacency(const std::vector<std::vector<int>>& adj);

  int num_vertices() const { return nv_; }
  int num_darts() const { return static_cast<int>(beg_.size()); }
  int beg(int x) const { return beg_[x]; }
  int inv(int x) const { return inv_[x]; }
  int end(int x) const { return beg_[inv_[x]]; }
  const std::vector<int>& darts_at(int v) const { return out_[v]; }
  int valence(int v) const { return static_cast<int>(out_[v].size()); }
  const std::vector<int>& begs() const { return beg_; }
  const std::vector<int>& invs() const { return inv_; }

  // Neighbour lists (one entry per link dart); meaningful for simple graphs.
  std::vector<std::vector<int>> adjacency() const;
  // Each link edge once as (beg, end) with beg <= end, sorted.
  std::vector<std::pair<int, int>> edge_list() const;

 private:
  int nv_ = 0;
  std::vector<int> beg_, inv_;
  std::vector<std::vector<int>> out_;
};

struct Walk {
  std::vector<int> darts;
};

// Empty string means ok.
std::string validate(const DartGraph& g);
EdgeKind edge_kind(const DartGraph& g, int x);
bool parallel(const DartGraph& g, int x, int y);
bool is_simple(const DartGraph& g);
bool is_connected(const DartGraph& g);
bool is_cubic(const DartGraph& g);

bool is_walk(const DartGraph& g, const Walk& w);
bool is_closed(const DartGraph& g, const Walk& w);
bool is_reduced(const DartGraph& g, const Walk& w);
// Cyclically reduced closed path.
bool is_cycle(const DartGraph& g, const Walk& w);
Walk inverse_walk(const DartGraph& g, const Walk& w);

// Shortest cycle, or nullopt for forests.
std::optional<Walk> shortest_cycle(const DartGraph& g);
std::optional<int> girth(const DartGraph& g);

constexpr int kMaxCycleLength = 12;
constexpr int kMaxCycleVertices = 5000;
long long count_c_cycles_through(const DartGraph& g, int x, int c);
// All cycles of length <= max_len, each once, as walks starting at their smallest dart.
std::vector<Walk> cycles_up_to(const DartGraph& g, int max_len);

void write_dg(std::ostream& os, const DartGraph& g);
DartGraph read_dg(std::istream& is);
void write_edge_list(std::ostream& os, const DartGraph& g);

}  // namespace cubvt
