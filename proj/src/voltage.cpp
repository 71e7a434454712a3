#include "cubvt/voltage.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>

namespace cubvt {

namespace {
long long mod(long long a, long long m) { return ((a % m) + m) % m; }
}  // namespace

CcvGraph::CcvGraph(LabelledGraph lg, std::vector<int> io, std::vector<int> ze)
    : base(std::move(lg)), iota(std::move(io)), zeta(std::move(ze)) {
  if (static_cast<int>(iota.size()) != base.num_vertices()) throw Error("iota must be defined on every vertex");
  if (static_cast<int>(zeta.size()) != base.num_darts()) throw Error("zeta must be defined on every dart");
  for (int i : iota)
    if (i < 1) throw Error("iota values must be positive");
  for (int x = 0; x < base.num_darts(); ++x) zeta[x] = static_cast<int>(mod(zeta[x], modulus(x)));
}

CcvGraph make_ccv(const LabelledGraph& lg, const std::vector<int>& iota, const std::vector<int>& zeta) {
  std::vector<int> z = zeta;
  const DartGraph& g = lg.graph;
  for (int x = 0; x < g.num_darts(); ++x)
    if (g.inv(x) > x) z[g.inv(x)] = -zeta[x];
  return CcvGraph(lg, iota, z);
}

std::string validate_ccv(const CcvGraph& c) {
  const DartGraph& g = c.graph();
  if (auto e = validate(g); !e.empty()) return e;
  for (int x = 0; x < g.num_darts(); ++x) {
    int y = g.inv(x);
    if (c.modulus(x) != c.modulus(y)) return "ratio equation fails at dart " + std::to_string(x);
    if (mod(c.zeta[x] + c.zeta[y], c.modulus(x)) != 0)
      return "inverse voltage equation fails at dart " + std::to_string(x);
  }
  return {};
}

bool tree_normalised(const CcvGraph& c, const SpanningTree& t) {
  for (int x = 0; x < c.graph().num_darts(); ++x)
    if (t.in_tree[x] && c.zeta[x] != 0) return false;
  return true;
}

CheckResult is_ccv(const CcvGraph& c, const SpanningTree& t) {
  if (!tree_normalised(c, t)) throw Error("voltage not tree-normalised");
  const DartGraph& g = c.graph();
  const auto& lam = c.base.lambda;
  for (int x = 0; x < g.num_darts(); ++x)
    if (std::gcd(lam[x], lam[g.inv(x)]) != 1) return CheckResult::fail(1, "gcd(lambda) > 1 at " + std::to_string(x));
  for (int x = 0; x < g.num_darts(); ++x)
    for (int y : g.darts_at(g.beg(x))) {
      if (!parallel(g, x, y)) continue;
      int d = std::gcd(c.iota[g.beg(x)], c.iota[g.end(x)]);
      if (mod(c.zeta[x] - c.zeta[y], d) == 0)
        return CheckResult::fail(2, "parallel darts " + std::to_string(x) + "," + std::to_string(y));
    }
  for (int x = 0; x < g.num_darts(); ++x)
    if (g.inv(x) == x && c.zeta[x] % c.iota[g.beg(x)] == 0)
      return CheckResult::fail(3, "semiedge " + std::to_string(x) + " has zero voltage");
  int d = 0;
  for (int z : c.zeta) d = std::gcd(d, z);
  for (int i : c.iota) d = std::gcd(d, i);
  if (d != 1) return CheckResult::fail(4, "gcd of voltages and indices is " + std::to_string(d));
  for (int v = 0; v < g.num_vertices(); ++v)
    if (deg_lambda(c.base, v) != 3) return CheckResult::fail(5, "deg_lambda != 3 at " + std::to_string(v));
  return CheckResult::pass();
}

bool is_simplified(const CcvGraph& c, const SpanningTree& t) {
  const DartGraph& g = c.graph();
  for (int x = 0; x < g.num_darts(); ++x) {
    int y = g.inv(x), u = g.beg(x), io = c.iota[u];
    if (t.in_tree[x] && c.zeta[x] != 0) return false;
    if (y != x && c.base.lambda[x] != c.base.lambda[y] && !t.in_tree[x]) return false;
    if (c.zeta[x] >= std::gcd(io, c.iota[g.beg(y)])) return false;
    EdgeKind k = edge_kind(g, x);
    if (k == EdgeKind::semiedge && 2 * c.zeta[x] != io) return false;
    if (k == EdgeKind::loop && (c.zeta[x] == 0 || 2 * c.zeta[x] == io)) return false;
  }
  return true;
}

long long rho_order(const CcvGraph& c) {
  long long l = 1;
  for (int x = 0; x < c.graph().num_darts(); ++x) l = std::lcm(l, static_cast<long long>(c.modulus(x)));
  for (int i : c.iota) l = std::lcm(l, static_cast<long long>(i));
  return l;
}

CoverGraph cover(const CcvGraph& c) {
  if (auto e = validate_ccv(c); !e.empty()) throw Error("invalid ccv graph: " + e);
  const DartGraph& g = c.graph();
  CoverGraph cv;
  int nv = 0, nd = 0;
  for (int v = 0; v < g.num_vertices(); ++v) cv.vertex_offset.push_back(nv), nv += c.iota[v];
  for (int x = 0; x < g.num_darts(); ++x) cv.dart_offset.push_back(nd), nd += c.modulus(x);
  std::vector<int> beg(nd), inv(nd);
  cv.proj_v.resize(nv), cv.index_v.resize(nv), cv.rho_v.resize(nv);
  cv.proj_d.resize(nd), cv.index_d.resize(nd), cv.rho_d.resize(nd);
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int i = 0; i < c.iota[v]; ++i) {
      int id = cv.vertex_offset[v] + i;
      cv.proj_v[id] = v, cv.index_v[id] = i;
      cv.rho_v[id] = cv.vertex_offset[v] + (i + 1) % c.iota[v];
    }
  for (int x = 0; x < g.num_darts(); ++x) {
    int n = c.modulus(x), u = g.beg(x), y = g.inv(x);
    for (int i = 0; i < n; ++i) {
      int id = cv.dart_offset[x] + i;
      beg[id] = cv.vertex_offset[u] + i % c.iota[u];
      inv[id] = cv.dart_offset[y] + static_cast<int>(mod(i + c.zeta[x], n));
      cv.proj_d[id] = x, cv.index_d[id] = i;
      cv.rho_d[id] = cv.dart_offset[x] + (i + 1) % n;
    }
  }
  cv.graph = DartGraph(nv, beg, inv);
  return cv;
}

std::vector<std::pair<int, int>> cover_adjacency_oracle(const CcvGraph& c, const SpanningTree& t) {
  if (!is_simplified(c, t)) throw Error("voltage not simplified");
  const DartGraph& g = c.graph();
  std::vector<int> off(g.num_vertices());
  for (int v = 1; v < g.num_vertices(); ++v) off[v] = off[v - 1] + c.iota[v - 1];
  std::vector<std::pair<int, int>> e;
  auto add = [&](int u, long long i, int v, long long j) {
    int a = off[u] + static_cast<int>(mod(i, c.iota[u])), b = off[v] + static_cast<int>(mod(j, c.iota[v]));
    e.emplace_back(std::min(a, b), std::max(a, b));
  };
  for (int x = 0; x < g.num_darts(); ++x) {
    int y = g.inv(x);
    if (y < x) continue;
    int u = g.beg(x), v = g.beg(y), z = c.zeta[x];
    int lx = c.base.lambda[x], ly = c.base.lambda[y];
    switch (edge_kind(g, x)) {
      case EdgeKind::semiedge:  // u_i ~ u_{i + iota/2}
        for (int i = 0; i < c.iota[u] / 2; ++i) add(u, i, u, i + c.iota[u] / 2);
        break;
      case EdgeKind::loop:  // u_i ~ u_{i + zeta}
        for (int i = 0; i < c.iota[u]; ++i) add(u, i, u, i + z);
        break;
      case EdgeKind::link:
        if (lx == 1 && ly == 1) {  // u_i ~ v_{i + zeta}
          for (int i = 0; i < c.iota[u]; ++i) add(u, i, v, i + z);
        } else if (lx == 1 || ly == 1) {  // u_{i + k iota(v)} ~ v_i, u on the lambda = 1 side
          int p = lx == 1 ? u : v, q = lx == 1 ? v : u, j = std::max(lx, ly);
          for (int i = 0; i < c.iota[q]; ++i)
            for (int k = 0; k < j; ++k) add(p, i + k * c.iota[q], q, i);
        } else {  // both labels > 1: u_a ~ v_b iff a = b mod gcd
          int d = std::gcd(c.iota[u], c.iota[v]);
          for (int a = 0; a < c.iota[u]; ++a)
            for (int b = 0; b < c.iota[v]; ++b)
              if (mod(a - b, d) == 0) add(u, a, v, b);
        }
        break;
    }
  }
  std::sort(e.begin(), e.end());
  return e;
}

CcvGraph simplify_voltage(const CcvGraph& c) {
  const DartGraph& g = c.graph();
  SpanningTree t = spanning_tree(c.base);
  std::vector<long long> s(g.num_vertices(), 0);
  for (int v : t.order) {
    int x = t.parent_dart[v];
    if (x >= 0) s[v] = s[g.beg(x)] - c.zeta[x];
  }
  std::vector<int> z(g.num_darts());
  for (int x = 0; x < g.num_darts(); ++x)
    z[x] = static_cast<int>(mod(c.zeta[x] + s[g.end(x)] - s[g.beg(x)], c.modulus(x)));
  CcvGraph out(c.base, c.iota, z);

  // the relabelling (v,i) -> (v, i + s(v)) must carry cover edges onto cover edges
  CoverGraph a = cover(c), b = cover(out);
  std::vector<int> map(a.graph.num_vertices());
  for (int id = 0; id < a.graph.num_vertices(); ++id) {
    int v = a.proj_v[id];
    map[id] = b.vertex(v, static_cast<int>(mod(a.index_v[id] + s[v], c.iota[v])));
  }
  auto ea = a.graph.edge_list(), eb = b.graph.edge_list();
  for (auto& [p, q] : ea) {
    p = map[p], q = map[q];
    if (p > q) std::swap(p, q);
  }
  std::sort(ea.begin(), ea.end());
  if (ea != eb) throw Error("internal: simplified voltage does not give an isomorphic cover");
  return out;
}

bool Endset::contains(long long j) const {
  long long d = std::gcd(stride, modulus);
  return mod(j - offset, d == 0 ? modulus : d) == 0;
}

std::vector<long long> Endset::elements() const {
  std::vector<long long> out;
  for (long long j = 0; j < modulus; ++j)
    if (contains(j)) out.push_back(j);
  return out;
}

Endset endset(const CcvGraph& c, const Walk& w) {
  const DartGraph& g = c.graph();
  if (!is_walk(g, w)) throw Error("not a walk");
  Endset e;
  e.modulus = c.iota[g.end(w.darts.back())];
  long long sum = 0;
  for (int x : w.darts) {
    sum += c.zeta[x];
    e.stride = std::gcd(e.stride, static_cast<long long>(c.iota[g.beg(x)]));
  }
  e.offset = mod(sum, e.modulus);
  return e;
}

std::vector<Walk> lifts(const CcvGraph& c, const CoverGraph& cov, const Walk& w) {
  const DartGraph& g = c.graph();
  if (!is_walk(g, w)) throw Error("not a walk");
  std::vector<Walk> out;
  Walk cur;
  auto rec = [&](auto& self, size_t k, int at) -> void {
    if (k == w.darts.size()) {
      out.push_back(cur);
      return;
    }
    for (int y : cov.graph.darts_at(at)) {
      if (cov.proj_d[y] != w.darts[k]) continue;
      cur.darts.push_back(y);
      self(self, k + 1, cov.graph.end(y));
      cur.darts.pop_back();
    }
  };
  rec(rec, 0, cov.vertex(g.beg(w.darts.front()), 0));
  return out;
}

bool is_lambda_reduced(const LabelledGraph& lg, const Walk& w) {
  const DartGraph& g = lg.graph;
  const auto& d = w.darts;
  for (size_t i = 0; i + 1 < d.size(); ++i)
    if (d[i + 1] == g.inv(d[i]) && lg.lambda[g.inv(d[i])] == 1) return false;
  if (is_closed(g, w) && d.back() == g.inv(d.front()) && lg.lambda[d.front()] == 1) return false;
  return true;
}

Walk project(const CoverGraph& cov, const Walk& w) {
  Walk p;
  for (int y : w.darts) p.darts.push_back(cov.proj_d[y]);
  return p;
}

void write_ccv(std::ostream& os, const CcvGraph& c) {
  write_lg(os, c.base);
  for (int v = 0; v < c.base.num_vertices(); ++v) os << "iota " << v << ' ' << c.iota[v] << '\n';
  for (int x = 0; x < c.base.num_darts(); ++x) os << "zeta " << x << ' ' << c.zeta[x] << '\n';
}

CcvGraph read_ccv(std::istream& is) {
  LabelledGraph lg = read_lg(is);
  std::vector<int> iota(lg.num_vertices()), zeta(lg.num_darts());
  std::string tag;
  int id, val;
  for (int i = 0; i < lg.num_vertices(); ++i) {
    if (!(is >> tag >> id >> val) || tag != "iota" || id < 0 || id >= lg.num_vertices()) throw Error("bad iota line");
    iota[id] = val;
  }
  for (int i = 0; i < lg.num_darts(); ++i) {
    if (!(is >> tag >> id >> val) || tag != "zeta" || id < 0 || id >= lg.num_darts()) throw Error("bad zeta line");
    zeta[id] = val;
  }
  return CcvGraph(lg, iota, zeta);
}

void write_fibres(std::ostream& os, const CoverGraph& cov) {
  for (int v = 0; v < cov.graph.num_vertices(); ++v)
    os << "v " << v << ' ' << cov.proj_v[v] << ' ' << cov.index_v[v] << '\n';
  for (int x = 0; x < cov.graph.num_darts(); ++x)
    os << "d " << x << ' ' << cov.proj_d[x] << ' ' << cov.index_d[x] << '\n';
}

}  // namespace cubvt
