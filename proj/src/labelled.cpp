#include "cubvt/labelled.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>

namespace cubvt {

extern const char* const kArtefactData;

LabelledGraph::LabelledGraph(DartGraph g, std::vector<int> lam) : graph(std::move(g)), lambda(std::move(lam)) {
  if (static_cast<int>(lambda.size()) != graph.num_darts()) throw Error("lambda must be defined on every dart");
  for (int l : lambda)
    if (l < 1) throw Error("lambda values must be positive");
}

EdgeType edge_type(const LabelledGraph& lg, int x) {
  int a = lg.lambda[x], b = lg.lambda[lg.graph.inv(x)];
  return {std::min(a, b), std::max(a, b)};
}

bool has_type(const LabelledGraph& lg, int x, int i, int j) {
  return lg.graph.inv(x) != x && edge_type(lg, x) == EdgeType{i, j};
}

Rational lambda_star(const LabelledGraph& lg, const Walk& w) {
  if (!is_walk(lg.graph, w)) throw Error("not a walk");
  Rational r(1);
  for (int x : w.darts) r *= Rational(lg.lambda[x], lg.lambda[lg.graph.inv(x)]);
  return r;
}

int deg_lambda(const LabelledGraph& lg, int v) {
  if (v < 0 || v >= lg.num_vertices()) throw Error("unknown vertex " + std::to_string(v));
  int s = 0;
  for (int x : lg.graph.darts_at(v)) s += lg.lambda[x];
  return s;
}

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int a) { return p[a] == a ? a : p[a] = find(p[a]); }
  bool unite(int a, int b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

SpanningTree orient(const DartGraph& g, std::vector<char> in_tree, int root) {
  SpanningTree t;
  t.root = root;
  t.in_tree = std::move(in_tree);
  t.parent_dart.assign(g.num_vertices(), -2);
  t.parent_dart[root] = -1;
  std::queue<int> q;
  q.push(root);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    t.order.push_back(v);
    for (int x : g.darts_at(v)) {
      int w = g.end(x);
      if (t.in_tree[x] && t.parent_dart[w] == -2) {
        t.parent_dart[w] = x;
        q.push(w);
      }
    }
  }
  if (static_cast<int>(t.order.size()) != g.num_vertices()) throw Error("graph is disconnected");
  return t;
}

}  // namespace

SpanningTree bfs_tree(const DartGraph& g, int root) {
  std::vector<char> in_tree(g.num_darts(), 0);
  std::vector<char> seen(g.num_vertices(), 0);
  std::queue<int> q;
  q.push(root);
  seen[root] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int x : g.darts_at(v)) {
      int w = g.end(x);
      if (!seen[w]) {
        seen[w] = 1;
        in_tree[x] = in_tree[g.inv(x)] = 1;
        q.push(w);
      }
    }
  }
  return orient(g, std::move(in_tree), root);
}

SpanningTree spanning_tree(const LabelledGraph& lg) {
  const DartGraph& g = lg.graph;
  UnionFind uf(g.num_vertices());
  std::vector<char> in_tree(g.num_darts(), 0);
  for (int x = 0; x < g.num_darts(); ++x) {
    int y = g.inv(x);
    if (y <= x || lg.lambda[x] == lg.lambda[y]) continue;
    if (!uf.unite(g.beg(x), g.end(x)))
      throw Error("no spanning tree contains all [i,j]-edges with i != j");
    in_tree[x] = in_tree[y] = 1;
  }
  std::vector<char> seen(g.num_vertices(), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int x : g.darts_at(v)) {
      int w = g.end(x);
      if (w != v && uf.unite(v, w)) in_tree[x] = in_tree[g.inv(x)] = 1;
      if (!seen[w]) {
        seen[w] = 1;
        q.push(w);
      }
    }
  }
  return orient(g, std::move(in_tree), 0);
}

Walk tree_path(const DartGraph& g, const SpanningTree& t, int v) {
  Walk w;
  for (int u = v; u != t.root; u = g.beg(t.parent_dart[u])) w.darts.push_back(t.parent_dart[u]);
  std::reverse(w.darts.begin(), w.darts.end());
  return w;
}

std::vector<Rational> tree_potential(const LabelledGraph& lg, const SpanningTree& t) {
  std::vector<Rational> p(lg.num_vertices(), Rational(1));
  for (int v : t.order) {
    int x = t.parent_dart[v];
    if (x >= 0) p[v] = p[lg.graph.beg(x)] * Rational(lg.lambda[x], lg.lambda[lg.graph.inv(x)]);
  }
  return p;
}

bool is_extendable(const LabelledGraph& lg) {
  if (!is_connected(lg.graph)) throw Error("disconnected input");
  auto t = bfs_tree(lg.graph);
  auto p = tree_potential(lg, t);
  const DartGraph& g = lg.graph;
  for (int x = 0; x < g.num_darts(); ++x)
    if (p[g.beg(x)] * Rational(lg.lambda[x], lg.lambda[g.inv(x)]) != p[g.end(x)]) return false;
  return true;
}

CheckResult is_ccv_extendable(const LabelledGraph& lg) {
  const DartGraph& g = lg.graph;
  if (!is_extendable(lg)) return CheckResult::fail(1, "not extendable");
  for (int x = 0; x < g.num_darts(); ++x)
    if (lg.lambda[x] == lg.lambda[g.inv(x)] && lg.lambda[x] != 1)
      return CheckResult::fail(2, "dart " + std::to_string(x) + " has lambda(x)=lambda(x^-1)>1");
  for (int x = 0; x < g.num_darts(); ++x)
    for (int y : g.darts_at(g.beg(x)))
      if (parallel(g, x, y) && lg.lambda[x] != 1)
        return CheckResult::fail(3, "parallel dart " + std::to_string(x) + " has lambda>1");
  // two semiedges at a vertex both need voltage iota/2, so their lifts coincide
  for (int v = 0; v < g.num_vertices(); ++v) {
    const auto& at = g.darts_at(v);
    if (std::count_if(at.begin(), at.end(), [&](int x) { return g.inv(x) == x; }) > 1)
      return CheckResult::fail(3, "two semiedges at vertex " + std::to_string(v));
  }
  for (int x = 0; x < g.num_darts(); ++x)
    if (g.inv(x) == x && lg.lambda[x] != 1)
      return CheckResult::fail(4, "semiedge " + std::to_string(x) + " has lambda>1");
  for (int v = 0; v < g.num_vertices(); ++v)
    if (deg_lambda(lg, v) != 3) return CheckResult::fail(5, "deg_lambda(" + std::to_string(v) + ") != 3");
  return CheckResult::pass();
}

// ---- canonical forms ----

namespace {

// Edge records (kind, u, w, a, b) under a vertex relabelling.
std::vector<int> encode(const DartGraph& g, const std::vector<int>& lam, const std::vector<int>& pos) {
  std::vector<std::array<int, 5>> recs;
  for (int x = 0; x < g.num_darts(); ++x) {
    int y = g.inv(x);
    if (y < x) continue;
    int a = lam.empty() ? 0 : lam[x], b = lam.empty() ? 0 : lam[y];
    if (y == x) {
      recs.push_back({0, pos[g.beg(x)], pos[g.beg(x)], a, 0});
      continue;
    }
    int pu = pos[g.beg(x)], pw = pos[g.beg(y)];
    if (std::make_pair(pu, a) > std::make_pair(pw, b)) std::swap(pu, pw), std::swap(a, b);
    recs.push_back({1, pu, pw, a, b});
  }
  std::sort(recs.begin(), recs.end());
  std::vector<int> out{g.num_vertices()};
  for (auto& r : recs) out.insert(out.end(), r.begin(), r.end());
  return out;
}

std::vector<int> canonical(const DartGraph& g, const std::vector<int>& lam) {
  const int n = g.num_vertices();
  if (n > kMaxLabelledCanonVertices) throw Error("labelled canonical form limited to 8 vertices");
  // invariant per vertex: sorted (kind, own lambda, other lambda) of its darts
  std::vector<std::vector<int>> inv(n);
  for (int v = 0; v < n; ++v) {
    std::vector<std::array<int, 3>> d;
    for (int x : g.darts_at(v))
      d.push_back({static_cast<int>(edge_kind(g, x)), lam.empty() ? 0 : lam[x], lam.empty() ? 0 : lam[g.inv(x)]});
    std::sort(d.begin(), d.end());
    for (auto& a : d) inv[v].insert(inv[v].end(), a.begin(), a.end());
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return inv[a] < inv[b]; });
  // blocks of equal invariant; permute within blocks
  std::vector<std::pair<int, int>> blocks;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && inv[order[j]] == inv[order[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  std::vector<int> best;
  std::vector<int> pos(n);
  auto rec = [&](auto& self, size_t bi) -> void {
    if (bi == blocks.size()) {
      for (int i = 0; i < n; ++i) pos[order[i]] = i;
      auto e = encode(g, lam, pos);
      if (best.empty() || e < best) best = std::move(e);
      return;
    }
    auto [s, t] = blocks[bi];
    std::sort(order.begin() + s, order.begin() + t);
    do {
      self(self, bi + 1);
    } while (std::next_permutation(order.begin() + s, order.begin() + t));
  };
  rec(rec, 0);
  return best;
}

}  // namespace

std::vector<int> labelled_canonical_form(const LabelledGraph& lg) { return canonical(lg.graph, lg.lambda); }

std::vector<int> multigraph_canonical_form(const DartGraph& g) { return canonical(g, {}); }

LabelledGraph from_labelled_canonical_form(const std::vector<int>& form) {
  int n = form.at(0);
  std::vector<int> beg, inv, lam;
  for (size_t i = 1; i + 4 < form.size(); i += 5) {
    int kind = form[i], u = form[i + 1], w = form[i + 2], a = form[i + 3], b = form[i + 4];
    int x = static_cast<int>(beg.size());
    if (kind == 0) {
      beg.push_back(u), inv.push_back(x), lam.push_back(a);
    } else {
      beg.push_back(u), inv.push_back(x + 1), lam.push_back(a);
      beg.push_back(w), inv.push_back(x), lam.push_back(b);
    }
  }
  return LabelledGraph(DartGraph(n, beg, inv), lam);
}

// ---- io ----

void write_lg(std::ostream& os, const LabelledGraph& lg) {
  write_dg(os, lg.graph);
  for (int x = 0; x < lg.num_darts(); ++x) os << "lambda " << x << ' ' << lg.lambda[x] << '\n';
}

namespace {

LabelledGraph read_lg_impl(std::istream& is, std::vector<char>* wildcard) {
  DartGraph g = read_dg(is);
  std::vector<int> lam(g.num_darts(), 0);
  if (wildcard) wildcard->assign(g.num_darts(), 0);
  for (int i = 0; i < g.num_darts(); ++i) {
    std::string tag, val;
    int id;
    if (!(is >> tag >> id >> val) || tag != "lambda" || id < 0 || id >= g.num_darts())
      throw Error("bad lambda line");
    if (val == "*" && wildcard) {
      (*wildcard)[id] = 1;
      lam[id] = 1;
    } else {
      lam[id] = std::stoi(val);
    }
  }
  return LabelledGraph(g, lam);
}

}  // namespace

LabelledGraph read_lg(std::istream& is) { return read_lg_impl(is, nullptr); }

std::vector<ArtefactPattern> read_patterns(std::istream& is) {
  std::vector<ArtefactPattern> out;
  std::string tag;
  while (is >> tag) {
    if (tag.starts_with("#")) {
      std::string rest;
      std::getline(is, rest);
      continue;
    }
    if (tag != "pattern") throw Error("expected 'pattern <id> reconstructed <bool>'");
    ArtefactPattern p;
    std::string kw, flag;
    if (!(is >> p.id >> kw >> flag) || kw != "reconstructed") throw Error("bad pattern header");
    p.reconstructed = flag == "true";
    p.pattern = read_lg_impl(is, &p.wildcard);
    out.push_back(std::move(p));
  }
  return out;
}

const std::vector<ArtefactPattern>& default_patterns() {
  static const std::vector<ArtefactPattern> pats = [] {
    std::istringstream is(kArtefactData);
    return read_patterns(is);
  }();
  return pats;
}

std::vector<ArtefactMatch> embeddings(const LabelledGraph& host, const ArtefactPattern& p) {
  const DartGraph& G = host.graph;
  const DartGraph& P = p.pattern.graph;
  std::vector<ArtefactMatch> out;
  std::vector<int> vmap(P.num_vertices(), -1), dmap(P.num_darts(), -1);
  std::vector<char> vused(G.num_vertices(), 0), dused(G.num_darts(), 0);

  auto lam_ok = [&](int pd, int hd) { return p.wildcard[pd] || p.pattern.lambda[pd] == host.lambda[hd]; };
  // Bind pattern vertex pv to host vertex hv; returns false on conflict, sets `bound` if newly bound.
  auto bind = [&](int pv, int hv, bool& bound) {
    bound = false;
    if (vmap[pv] >= 0) return vmap[pv] == hv;
    if (vused[hv]) return false;
    vmap[pv] = hv, vused[hv] = 1, bound = true;
    return true;
  };
  auto unbind = [&](int pv) { vused[vmap[pv]] = 0, vmap[pv] = -1; };

  auto rec = [&](auto& self, int pd) -> void {
    while (pd < P.num_darts() && dmap[pd] >= 0) ++pd;
    if (pd == P.num_darts()) {
      for (int v = 0; v < P.num_vertices(); ++v)
        if (vmap[v] < 0) return;
      out.push_back({p.id, vmap, dmap});
      return;
    }
    int pq = P.inv(pd);
    for (int hd = 0; hd < G.num_darts(); ++hd) {
      if (dused[hd] || !lam_ok(pd, hd)) continue;
      int hq = G.inv(hd);
      if ((pq == pd) != (hq == hd)) continue;
      if (pq != pd && (dused[hq] || !lam_ok(pq, hq))) continue;
      bool b1, b2 = false;
      if (!bind(P.beg(pd), G.beg(hd), b1)) continue;
      if (!bind(P.beg(pq), G.beg(hq), b2)) {
        if (b1) unbind(P.beg(pd));
        continue;
      }
      dmap[pd] = hd, dused[hd] = 1;
      dmap[pq] = hq, dused[hq] = 1;
      self(self, pd + 1);
      dused[hd] = 0, dused[hq] = 0, dmap[pd] = -1, dmap[pq] = -1;
      if (b2) unbind(P.beg(pq));
      if (b1) unbind(P.beg(pd));
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<ArtefactMatch> find_artefacts(const LabelledGraph& lg, const std::vector<ArtefactPattern>& patterns) {
  std::vector<ArtefactMatch> out;
  for (const auto& p : patterns) {
    auto e = embeddings(lg, p);
    out.insert(out.end(), e.begin(), e.end());
  }
  return out;
}

}  // namespace cubvt
