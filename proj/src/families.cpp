#include "cubvt/families.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cubvt {

namespace {

int md(long long a, long long m) { return static_cast<int>(((a % m) + m) % m); }

void require(bool ok, const std::string& what) {
  if (!ok) throw Error("parameters out of domain: " + what);
}

DartGraph from_edge_set(int n, std::vector<std::pair<int, int>> e) {
  for (auto& [u, v] : e)
    if (u > v) std::swap(u, v);
  std::sort(e.begin(), e.end());
  DartGraph g = DartGraph::from_edges(n, e);
  if (!is_simple(g) || !is_cubic(g) || !is_connected(g)) throw Error("construction is not a simple connected cubic graph");
  return g;
}

// Every vertex of a cubic graph blown up into a triangle.
DartGraph truncate(const DartGraph& g) {
  std::vector<std::pair<int, int>> e;
  for (int x = 0; x < g.num_darts(); ++x) {
    if (x < g.inv(x)) e.emplace_back(x, g.inv(x));
    const auto& at = g.darts_at(g.beg(x));
    for (int y : at)
      if (x < y) e.emplace_back(x, y);
  }
  return from_edge_set(g.num_darts(), e);
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::Prism: return "Prism";
    case Family::Moeb: return "Moeb";
    case Family::GP: return "GP";
    case Family::Haar: return "Haar";
    case Family::X: return "X";
    case Family::Y: return "Y";
    case Family::SDW: return "SDW";
    case Family::Tutte8Cage: return "Tutte8Cage";
    case Family::TruncatedTetrahedron: return "TruncatedTetrahedron";
    case Family::Delta12Cover: return "Delta12Cover";
  }
  return "?";
}

std::optional<Family> parse_family(const std::string& name) {
  for (Family f : {Family::Prism, Family::Moeb, Family::GP, Family::Haar, Family::X, Family::Y, Family::SDW,
                   Family::Tutte8Cage, Family::TruncatedTetrahedron, Family::Delta12Cover})
    if (family_name(f) == name) return f;
  return std::nullopt;
}

std::string FamilySpec::str() const {
  std::ostringstream os;
  os << family_name(family) << '(';
  for (size_t i = 0; i < params.size(); ++i) os << (i ? "," : "") << params[i];
  os << ')';
  return os.str();
}

std::vector<std::string> family_domains() {
  return {
      "Prism m            m >= 3",
      "Moeb n             n >= 4 even",
      "GP m,r             m >= 3, 1 <= r < m/2 (r > m/2 replaced by m-r)",
      "Haar n,i,j         i != j nonzero mod n, gcd(n,i,j) = 1",
      "X k                k odd, k > 1",
      "Y k                k odd, k > 1",
      "SDW m,t            m >= 3, t >= 3",
      "Tutte8Cage         (no parameters)",
      "TruncatedTetrahedron (no parameters)",
      "Delta12Cover m,r,s m > 3, 0 < r < 2m, 0 <= s < m, cover connected and simple",
  };
}

DartGraph prism(int m) { return generalized_petersen(m, 1); }

DartGraph moebius_ladder(int n) {
  require(n >= 4 && n % 2 == 0, "Moeb needs even n >= 4");
  std::vector<std::pair<int, int>> e;
  for (int x = 0; x < n; ++x) e.emplace_back(x, (x + 1) % n);
  for (int x = 0; x < n / 2; ++x) e.emplace_back(x, x + n / 2);
  return from_edge_set(n, e);
}

DartGraph generalized_petersen(int m, int r) {
  require(m >= 3 && r >= 1 && r < m, "GP needs m >= 3, 0 < r < m");
  if (2 * r > m) r = m - r;
  require(2 * r != m, "GP needs r != m/2");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < m; ++i) {
    e.emplace_back(i, (i + 1) % m);
    e.emplace_back(i, m + i);
    if (2 * r < m) e.emplace_back(m + i, m + (i + r) % m);
  }
  // inner edges i ~ i+r listed once per i
  return from_edge_set(2 * m, e);
}

DartGraph haar_graph(int n, int i, int j) {
  require(n >= 2, "Haar needs n >= 2");
  i = md(i, n), j = md(j, n);
  require(i != 0 && j != 0 && i != j, "Haar needs distinct nonzero i, j");
  require(std::gcd(n, std::gcd(i, j)) == 1, "Haar graph disconnected");
  std::vector<std::pair<int, int>> e;
  for (int x = 0; x < n; ++x)
    for (int s : {0, i, j}) e.emplace_back(x, n + (x + s) % n);
  return from_edge_set(2 * n, e);
}

DartGraph x_graph(int k) {
  require(k > 1 && k % 2 == 1, "X needs odd k > 1");
  int n = 2 * k;
  int r = k % 4 == 1 ? (k + 3) / 2 : (k + 3) / 2 + k;
  auto u = [&](int i) { return md(i, n); };
  auto v = [&](int i) { return n + md(i, n); };
  auto w = [&](int i) { return 2 * n + md(i, n); };
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    if (i < k) e.emplace_back(u(i), u(i + k));
    e.emplace_back(u(i), v(i));
    e.emplace_back(u(i), w(i));
    e.emplace_back(v(i), w(i + 1));
    e.emplace_back(v(i), w(i + r));
  }
  return from_edge_set(3 * n, e);
}

DartGraph y_graph(int k) {
  require(k > 1 && k % 2 == 1, "Y needs odd k > 1");
  int n = 2 * k;
  auto u = [&](int i) { return md(i, n); };
  auto v = [&](int i) { return n + md(i, n); };
  auto w = [&](int i) { return 2 * n + md(i, n); };
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    e.emplace_back(u(i), u(i + 1));
    e.emplace_back(u(i), v(i));
    e.emplace_back(v(i), w(i));
    e.emplace_back(v(i), w(i + 2));
    if (i < k) e.emplace_back(w(i), w(i + k));
  }
  return from_edge_set(3 * n, e);
}

int sdw_vertex(int m, int t, int x, int i, int j) { return (md(x, m) * t + md(i, t)) * 2 + j; }

DartGraph sdw(int m, int t) {
  require(m >= 3 && t >= 3, "SDW needs m, t >= 3");
  std::vector<std::pair<int, int>> e;
  for (int x = 0; x < m; ++x)
    for (int i = 0; i < t; ++i) {
      e.emplace_back(sdw_vertex(m, t, x, i, 0), sdw_vertex(m, t, x, i + 1, 1));
      e.emplace_back(sdw_vertex(m, t, x, i, 0), sdw_vertex(m, t, x, i - 1, 1));
      e.emplace_back(sdw_vertex(m, t, x, i, 1), sdw_vertex(m, t, x + 1, i, 0));
    }
  return from_edge_set(2 * m * t, e);
}

DartGraph tutte_8_cage() {
  static const std::vector<std::pair<int, int>> e = {
      {0, 1},   {0, 17},  {0, 29},  {1, 2},   {1, 22},  {2, 3},   {2, 9},   {3, 4},   {3, 26},
      {4, 5},   {4, 13},  {5, 6},   {5, 18},  {6, 7},   {6, 23},  {7, 8},   {7, 28},  {8, 9},
      {8, 15},  {9, 10},  {10, 11}, {10, 19}, {11, 12}, {11, 24}, {12, 13}, {12, 29}, {13, 14},
      {14, 15}, {14, 21}, {15, 16}, {16, 17}, {16, 25}, {17, 18}, {18, 19}, {19, 20}, {20, 21},
      {20, 27}, {21, 22}, {22, 23}, {23, 24}, {24, 25}, {25, 26}, {26, 27}, {27, 28}, {28, 29}};
  return from_edge_set(30, e);
}

DartGraph truncated_tetrahedron() { return truncate(moebius_ladder(4)); }

CcvGraph delta12(int m, int r, int s) {
  require(m > 3, "Delta12 needs m > 3");
  // darts: a->u, u->a, b->v, v->b, u->v (0), v->u, u->v (r), v->u, a->b (s), b->a
  std::vector<int> beg{2, 0, 3, 1, 0, 1, 0, 1, 2, 3};
  std::vector<int> inv{1, 0, 3, 2, 5, 4, 7, 6, 9, 8};
  std::vector<int> lam{2, 1, 2, 1, 1, 1, 1, 1, 1, 1};
  std::vector<int> zeta{0, 0, 0, 0, 0, 0, r, 0, s, 0};
  return make_ccv(LabelledGraph(DartGraph(4, beg, inv), lam), {2 * m, 2 * m, m, m}, zeta);
}

DartGraph gamma12(int m, int r, int s) {
  CcvGraph c = delta12(m, r, s);
  require(is_ccv(c, spanning_tree(c.base)).ok, "Delta12 parameters do not give a ccv-graph");
  return cover(c).graph;
}

Perm phi_iso(int m) {
  require(m > 3 && m % 2 == 1, "phi needs odd m > 3");
  // gamma12 vertex ids: u_i = i, v_i = 2m + i, a_i = 4m + i, b_i = 5m + i
  auto u = [&](int i) { return md(i, 2 * m); };
  auto v = [&](int i) { return 2 * m + md(i, 2 * m); };
  auto a = [&](int i) { return 4 * m + md(i, m); };
  auto b = [&](int i) { return 5 * m + md(i, m); };
  Perm p(6 * m);
  for (int x = 0; x < m; ++x) {
    bool even = x % 2 == 0;
    p[sdw_vertex(m, 3, x, 0, 0)] = b(x + 1);
    p[sdw_vertex(m, 3, x, 0, 1)] = a(x);
    p[sdw_vertex(m, 3, x, 1, 0)] = even ? u(x + m) : u(x);
    p[sdw_vertex(m, 3, x, 1, 1)] = even ? v(x + 1) : v(x + m + 1);
    p[sdw_vertex(m, 3, x, 2, 0)] = even ? u(x) : u(x + m);
    p[sdw_vertex(m, 3, x, 2, 1)] = even ? v(x + m + 1) : v(x + 1);
  }
  return p;
}

DartGraph build(const FamilySpec& s) {
  auto need = [&](size_t k) {
    if (s.params.size() != k) throw Error(family_name(s.family) + " takes " + std::to_string(k) + " parameters");
  };
  const auto& p = s.params;
  switch (s.family) {
    case Family::Prism: need(1); return prism(p[0]);
    case Family::Moeb: need(1); return moebius_ladder(p[0]);
    case Family::GP: need(2); return generalized_petersen(p[0], p[1]);
    case Family::Haar: need(3); return haar_graph(p[0], p[1], p[2]);
    case Family::X: need(1); return x_graph(p[0]);
    case Family::Y: need(1); return y_graph(p[0]);
    case Family::SDW: need(2); return sdw(p[0], p[1]);
    case Family::Tutte8Cage: need(0); return tutte_8_cage();
    case Family::TruncatedTetrahedron: need(0); return truncated_tetrahedron();
    case Family::Delta12Cover: need(3); return gamma12(p[0], p[1], p[2]);
  }
  throw Error("unknown family");
}

int family_order(const FamilySpec& s) {
  const auto& p = s.params;
  switch (s.family) {
    case Family::Prism: return 2 * p.at(0);
    case Family::Moeb: return p.at(0);
    case Family::GP: return 2 * p.at(0);
    case Family::Haar: return 2 * p.at(0);
    case Family::X:
    case Family::Y: return 6 * p.at(0);
    case Family::SDW: return 2 * p.at(0) * p.at(1);
    case Family::Tutte8Cage: return 30;
    case Family::TruncatedTetrahedron: return 12;
    case Family::Delta12Cover: return 6 * p.at(0);
  }
  return 0;
}

bool haar_is_circulant(int m, int x, int y) {
  require(m >= 5, "Haar criterion needs m >= 5");
  x = md(x, m), y = md(y, m);
  require(std::gcd(m, std::gcd(x, y)) == 1, "Haar graph disconnected");
  if (m % 2 == 0) return false;
  auto same = [](int p, int q, int r, int s) { return (p == r && q == s) || (p == s && q == r); };
  for (int a = 1; a < m; ++a) {
    if (std::gcd(a, m) != 1) continue;
    if (same(x, y, a, md(2 * a, m)) || same(x, y, a, md(-a, m))) return true;
  }
  return false;
}

std::optional<std::pair<int, int>> haar_normalise(int m, int x, int y) {
  std::optional<std::pair<int, int>> best;
  const int set[3] = {0, md(x, m), md(y, m)};
  for (int alpha = 1; alpha < m; ++alpha) {
    if (std::gcd(alpha, m) != 1) continue;
    for (int s0 : set) {
      int r = -1, s = -1;
      for (int z : set) {
        if (z == s0) continue;
        int t = md(static_cast<long long>(alpha) * (z - s0), m);
        if (r < 0) r = t; else s = t;
      }
      for (auto [p, q] : {std::pair{r, s}, std::pair{s, r}})
        if (m % p == 0 && std::gcd(p, q) == 1 && (!best || std::pair{p, q} < *best)) best = {p, q};
    }
  }
  return best;
}

KnownProperties known_properties(const FamilySpec& spec) {
  KnownProperties k;
  const auto& p = spec.params;
  k.order = family_order(spec);
  const int n = *k.order;
  auto both = [&](Rational e, int kap) {
    k.eta = e;
    k.kappa = kap;
  };
  switch (spec.family) {
    case Family::Prism: {
      int m = p.at(0);
      if (m == 4) both(Rational(4, 3), 2);
      else both(Rational(m % 2 ? 1 : 2), m % 2 ? 1 : 2);
      k.girth = m == 3 ? 3 : 4;
      if (m > 4) k.signature = CSignature{4, {1, 1, 2}};
      break;
    }
    case Family::Moeb:
      both(Rational(1), 1);
      break;
    case Family::GP: {
      int m = p.at(0), r = std::min(p.at(1), m - p.at(1));
      if (r == 1) return known_properties({Family::Prism, {m}});
      if (m == 5 && r == 2) {
        both(Rational(5, 3), 2);
        k.girth = 5;
        k.signature = CSignature{5, {4, 4, 4}};
        k.aut_order = 120;
        k.arc_transitive = true;
      } else if (m == 8 && r == 3) {
        both(Rational(4, 3), 2);
      } else if ((m == 10 && r == 2) || ((r * r) % m == 1 || (r * r) % m == m - 1)) {
        if (n > 20 || (m == 10 && r == 2)) both(Rational(2), 2);
        else k.kappa = 2;
      }
      break;
    }
    case Family::Haar: {
      int m = p.at(0), x = md(p.at(1), m), y = md(p.at(2), m);
      if (m == 7 && ((x == 1 && y == 3) || (x == 3 && y == 1))) {
        both(Rational(7, 4), 2);
        k.girth = 6;
        break;
      }
      bool in_case = false;
      for (auto [r, s] : {std::pair{x, y}, std::pair{y, x}}) {
        if (m % r || std::gcd(r, s) != 1) continue;
        bool bad = m % 2 == 1 && ((std::min(r, s) == 1 && std::max(r, s) == m - 1) ||
                                  (std::min(r, s) == 1 && std::max(r, s) == 2));
        if (!bad) in_case = true;
      }
      if (m % 2 == 1 && m >= 5 && haar_is_circulant(m, x, y)) in_case = false;
      if (in_case && n > 20) both(Rational(2), 2);
      break;
    }
    case Family::X:
    case Family::Y: {
      int kk = p.at(0);
      if (kk % 6 == 3) {
        k.kappa = 3;
        if (spec.family == Family::Y && kk == 3) k.eta = Rational(3, 2);
        else if (n > 20) k.eta = Rational(3);
      }
      break;
    }
    case Family::SDW: {
      int m = p.at(0), t = p.at(1);
      if (t != 3) break;
      if (m == 3) both(Rational(3, 2), 3);
      else if (m % 3 != 0) both(Rational(2), 2);
      else if (m % 6 == 0) both(Rational(6), 6);
      else both(Rational(3), 6);
      if (m > 3) {
        k.girth = 6;
        k.signature = CSignature{6, {2, 3, 3}};
        k.aut_order = 12LL * m;
      }
      break;
    }
    case Family::Tutte8Cage:
      both(Rational(3), 3);
      k.girth = 8;
      k.aut_order = 1440;
      k.arc_transitive = true;
      break;
    case Family::TruncatedTetrahedron:
      both(Rational(3), 3);
      break;
    case Family::Delta12Cover:
      break;
  }
  return k;
}

}  // namespace cubvt
