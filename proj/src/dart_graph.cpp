#include "cubvt/dart_graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <set>

namespace cubvt {

DartGraph::DartGraph(int num_vertices, std::vector<int> beg, std::vector<int> inv)
    : nv_(num_vertices), beg_(std::move(beg)), inv_(std::move(inv)) {
  if (beg_.size() != inv_.size()) throw Error("beg and inv differ in length");
  out_.assign(std::max(nv_, 0), {});
  for (int x = 0; x < num_darts(); ++x)
    if (beg_[x] >= 0 && beg_[x] < nv_) out_[beg_[x]].push_back(x);
}

DartGraph DartGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> beg, inv;
  for (auto [u, v] : edges) {
    int x = static_cast<int>(beg.size());
    beg.push_back(u);
    beg.push_back(v);
    inv.push_back(x + 1);
    inv.push_back(x);
  }
  return DartGraph(n, beg, inv);
}

DartGraph DartGraph::from_adjacency(const std::vector<std::vector<int>>& adj) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < static_cast<int>(adj.size()); ++u)
    for (int v : adj[u])
      if (u < v) edges.emplace_back(u, v);
  return from_edges(static_cast<int>(adj.size()), edges);
}

std::vector<std::vector<int>> DartGraph::adjacency() const {
  std::vector<std::vector<int>> adj(nv_);
  for (int v = 0; v < nv_; ++v)
    for (int x : out_[v])
      if (inv_[x] != x) adj[v].push_back(end(x));
  return adj;
}

std::vector<std::pair<int, int>> DartGraph::edge_list() const {
  std::vector<std::pair<int, int>> e;
  for (int x = 0; x < num_darts(); ++x) {
    int y = inv_[x];
    if (y == x || x > y) continue;
    e.emplace_back(std::min(beg_[x], beg_[y]), std::max(beg_[x], beg_[y]));
  }
  std::sort(e.begin(), e.end());
  return e;
}

std::string validate(const DartGraph& g) {
  if (g.num_vertices() <= 0) return "vertex set empty";
  for (int x = 0; x < g.num_darts(); ++x) {
    if (g.beg(x) < 0 || g.beg(x) >= g.num_vertices()) return "beg out of range at dart " + std::to_string(x);
    int y = g.inv(x);
    if (y < 0 || y >= g.num_darts()) return "inv out of range at dart " + std::to_string(x);
    if (g.inv(y) != x) return "inv not involution at dart " + std::to_string(x);
  }
  return {};
}

EdgeKind edge_kind(const DartGraph& g, int x) {
  if (x < 0 || x >= g.num_darts()) throw Error("unknown dart id " + std::to_string(x));
  if (g.inv(x) == x) return EdgeKind::semiedge;
  if (g.end(x) == g.beg(x)) return EdgeKind::loop;
  return EdgeKind::link;
}

bool parallel(const DartGraph& g, int x, int y) {
  return x != y && g.beg(x) == g.beg(y) && g.end(x) == g.end(y);
}

bool is_simple(const DartGraph& g) {
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::set<int> ends;
    for (int x : g.darts_at(v)) {
      if (edge_kind(g, x) != EdgeKind::link) return false;
      if (!ends.insert(g.end(x)).second) return false;
    }
  }
  return true;
}

bool is_connected(const DartGraph& g) {
  if (g.num_vertices() == 0) return false;
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int x : g.darts_at(v)) {
      int w = g.end(x);
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.num_vertices();
}

bool is_cubic(const DartGraph& g) {
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.valence(v) != 3) return false;
  return true;
}

bool is_walk(const DartGraph& g, const Walk& w) {
  if (w.darts.empty()) return false;
  for (int x : w.darts)
    if (x < 0 || x >= g.num_darts()) return false;
  for (size_t i = 0; i + 1 < w.darts.size(); ++i)
    if (g.end(w.darts[i]) != g.beg(w.darts[i + 1])) return false;
  return true;
}

bool is_closed(const DartGraph& g, const Walk& w) {
  return g.end(w.darts.back()) == g.beg(w.darts.front());
}

bool is_reduced(const DartGraph& g, const Walk& w) {
  for (size_t i = 0; i + 1 < w.darts.size(); ++i)
    if (w.darts[i + 1] == g.inv(w.darts[i])) return false;
  return true;
}

bool is_cycle(const DartGraph& g, const Walk& w) {
  if (!is_walk(g, w) || !is_closed(g, w) || !is_reduced(g, w)) return false;
  if (w.darts.back() == g.inv(w.darts.front())) return false;
  std::set<int> vs;
  for (int x : w.darts)
    if (!vs.insert(g.beg(x)).second) return false;
  return true;
}

Walk inverse_walk(const DartGraph& g, const Walk& w) {
  Walk r;
  for (auto it = w.darts.rbegin(); it != w.darts.rend(); ++it) r.darts.push_back(g.inv(*it));
  return r;
}

std::optional<Walk> shortest_cycle(const DartGraph& g) {
  for (int x = 0; x < g.num_darts(); ++x)
    if (edge_kind(g, x) == EdgeKind::loop) return Walk{{x}};
  for (int x = 0; x < g.num_darts(); ++x)
    for (int y : g.darts_at(g.beg(x)))
      if (edge_kind(g, x) == EdgeKind::link && edge_kind(g, y) == EdgeKind::link && parallel(g, x, y))
        return Walk{{x, g.inv(y)}};

  const int n = g.num_vertices();
  int best = -1;
  Walk best_walk;
  std::vector<int> dist(n), par(n);
  for (int r = 0; r < n; ++r) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(par.begin(), par.end(), -1);
    std::queue<int> q;
    dist[r] = 0;
    q.push(r);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (best >= 0 && 2 * dist[u] + 1 >= best) break;
      for (int y : g.darts_at(u)) {
        if (g.inv(y) == y || (par[u] >= 0 && y == g.inv(par[u]))) continue;
        int w = g.end(y);
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          par[w] = y;
          q.push(w);
        } else {
          int len = dist[u] + dist[w] + 1;
          if (best < 0 || len < best) {
            std::vector<int> a, b;
            for (int t = u; t != r; t = g.beg(par[t])) a.push_back(par[t]);
            for (int t = w; t != r; t = g.beg(par[t])) b.push_back(par[t]);
            Walk c;
            c.darts.assign(a.rbegin(), a.rend());
            c.darts.push_back(y);
            for (int d : b) c.darts.push_back(g.inv(d));
            if (is_cycle(g, c)) {
              best = len;
              best_walk = c;
            }
          }
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best_walk;
}

std::optional<int> girth(const DartGraph& g) {
  auto c = shortest_cycle(g);
  if (!c) return std::nullopt;
  return static_cast<int>(c->darts.size());
}

namespace {

void check_cycle_bounds(const DartGraph& g, int c) {
  if (c < 1 || c > kMaxCycleLength) throw Error("cycle length outside 1.." + std::to_string(kMaxCycleLength));
  if (g.num_vertices() > kMaxCycleVertices) throw Error("graph too large for cycle counting");
}

struct CycleDfs {
  const DartGraph& g;
  int start, target_len;
  std::vector<char> on_path;
  std::vector<int> path;
  long long count = 0;
  std::vector<Walk>* sink = nullptr;
  int min_vertex = -1;  // when set, interior vertices must exceed it

  void run(int len) {
    int last = path.back();
    int u = g.end(last);
    for (int y : g.darts_at(u)) {
      if (y == g.inv(last) || g.inv(y) == y) continue;
      int w = g.end(y);
      if (len + 1 == target_len) {
        if (w == start && y != g.inv(path.front())) {
          ++count;
          if (sink) {
            path.push_back(y);
            sink->push_back(Walk{path});
            path.pop_back();
          }
        }
        continue;
      }
      if (on_path[w] || w == start || w < min_vertex) continue;
      on_path[w] = 1;
      path.push_back(y);
      run(len + 1);
      path.pop_back();
      on_path[w] = 0;
    }
  }
};

}  // namespace

long long count_c_cycles_through(const DartGraph& g, int x, int c) {
  check_cycle_bounds(g, c);
  if (g.inv(x) == x) return 0;
  if (c == 1) return edge_kind(g, x) == EdgeKind::loop ? 1 : 0;
  CycleDfs d{g, g.beg(x), c, std::vector<char>(g.num_vertices(), 0), {x}};
  int w = g.end(x);
  if (w == d.start) return 0;
  d.on_path[w] = 1;
  d.run(1);
  return d.count;
}

std::vector<Walk> cycles_up_to(const DartGraph& g, int max_len) {
  check_cycle_bounds(g, max_len);
  std::vector<Walk> out;
  for (int x = 0; x < g.num_darts(); ++x) {
    EdgeKind k = edge_kind(g, x);
    if (k == EdgeKind::loop && x < g.inv(x)) out.push_back(Walk{{x}});
  }
  for (int s = 0; s < g.num_vertices(); ++s) {
    for (int x : g.darts_at(s)) {
      if (edge_kind(g, x) != EdgeKind::link || g.end(x) < s) continue;
      for (int len = 2; len <= max_len; ++len) {
        std::vector<Walk> found;
        CycleDfs d{g, s, len, std::vector<char>(g.num_vertices(), 0), {x}};
        d.sink = &found;
        d.min_vertex = s;
        d.on_path[g.end(x)] = 1;
        d.run(1);
        for (auto& w : found) {
          // keep one orientation: compare first and last darts' far ends
          int a = w.darts.front(), b = g.inv(w.darts.back());
          if (len == 2 ? a < b : g.end(a) < g.end(b)) out.push_back(std::move(w));
        }
      }
    }
  }
  return out;
}

void write_dg(std::ostream& os, const DartGraph& g) {
  os << "dartgraph " << g.num_vertices() << ' ' << g.num_darts() << '\n';
  for (int x = 0; x < g.num_darts(); ++x) os << "dart " << x << ' ' << g.beg(x) << ' ' << g.inv(x) << '\n';
}

DartGraph read_dg(std::istream& is) {
  std::string tag;
  int nv = 0, nd = 0;
  if (!(is >> tag >> nv >> nd) || tag != "dartgraph") throw Error("expected 'dartgraph <nV> <nD>'");
  std::vector<int> beg(nd, -1), inv(nd, -1);
  for (int i = 0; i < nd; ++i) {
    int id, b, v;
    if (!(is >> tag >> id >> b >> v) || tag != "dart" || id < 0 || id >= nd) throw Error("bad dart line");
    beg[id] = b;
    inv[id] = v;
  }
  DartGraph g(nv, beg, inv);
  if (auto err = validate(g); !err.empty()) throw Error("invalid dart graph: " + err);
  return g;
}

void write_edge_list(std::ostream& os, const DartGraph& g) {
  for (auto [u, v] : g.edge_list()) os << u << ' ' << v << '\n';
}

}  // namespace cubvt
