#include "cubvt/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

namespace cubvt {

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

namespace {

template <class F>
void for_each_cycle_length(const Perm& p, F f) {
  std::vector<char> seen(p.size(), 0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = static_cast<int>(i); !seen[j]; j = p[j]) seen[j] = 1, ++len;
    f(len);
  }
}

}  // namespace

long long perm_order(const Perm& p) {
  long long o = 1;
  for_each_cycle_length(p, [&](int len) { o = std::lcm(o, static_cast<long long>(len)); });
  return o;
}

int longest_orbit(const Perm& p) {
  int m = 0;
  for_each_cycle_length(p, [&](int len) { m = std::max(m, len); });
  return m;
}

bool semiregular(const Perm& p) {
  int first = -1;
  bool ok = true;
  for_each_cycle_length(p, [&](int len) {
    if (first < 0) first = len;
    if (len != first) ok = false;
  });
  return ok && first > 1;
}

namespace {

// Compressed adjacency with sorted neighbour lists.
struct Csr {
  int n = 0;
  std::vector<int> off, nb;
  explicit Csr(const DartGraph& g) : n(g.num_vertices()) {
    auto adj = g.adjacency();
    off.push_back(0);
    for (auto& a : adj) {
      std::sort(a.begin(), a.end());
      nb.insert(nb.end(), a.begin(), a.end());
      off.push_back(static_cast<int>(nb.size()));
    }
  }
  bool adjacent(int u, int v) const {
    return std::binary_search(nb.begin() + off[u], nb.begin() + off[u + 1], v);
  }
};

bool maps_edges(const Csr& a, const Csr& b, const Perm& p) {
  if (a.nb.size() != b.nb.size()) return false;
  for (int u = 0; u < a.n; ++u)
    for (int k = a.off[u]; k < a.off[u + 1]; ++k)
      if (!b.adjacent(p[u], p[a.nb[k]])) return false;
  return true;
}

inline uint64_t mix(uint64_t h, uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h *= 0xbf58476d1ce4e5b9ULL;
  return h ^ (h >> 31);
}

struct Colouring {
  std::vector<int> col;
  int ncol = 1;
  uint64_t trace = 0;
};

// Colour refinement; colours stay canonical ranks of signatures.
void refine(const Csr& g, Colouring& c) {
  const int n = g.n;
  std::vector<int> keys(g.nb.size()), order(n), fresh(n);
  while (true) {
    for (int v = 0; v < n; ++v) {
      for (int k = g.off[v]; k < g.off[v + 1]; ++k) keys[k] = c.col[g.nb[k]];
      std::sort(keys.begin() + g.off[v], keys.begin() + g.off[v + 1]);
    }
    std::iota(order.begin(), order.end(), 0);
    auto less = [&](int a, int b) {
      if (c.col[a] != c.col[b]) return c.col[a] < c.col[b];
      return std::lexicographical_compare(keys.begin() + g.off[a], keys.begin() + g.off[a + 1],
                                          keys.begin() + g.off[b], keys.begin() + g.off[b + 1]);
    };
    std::sort(order.begin(), order.end(), less);
    int k = 0;
    uint64_t t = c.trace;
    for (int i = 0; i < n;) {
      int j = i;
      while (j < n && !less(order[i], order[j])) fresh[order[j++]] = k;
      int v = order[i];
      t = mix(t, static_cast<uint64_t>(c.col[v]));
      for (int q = g.off[v]; q < g.off[v + 1]; ++q) t = mix(t, static_cast<uint64_t>(keys[q]) + 7);
      t = mix(t, static_cast<uint64_t>(j - i) << 20);
      ++k;
      i = j;
    }
    bool done = k == c.ncol;
    c.col.swap(fresh);
    c.ncol = k;
    c.trace = t;
    if (done) return;
  }
}

Colouring unit_colouring(const Csr& g, const std::vector<int>& colours = {}) {
  Colouring c;
  c.col.assign(g.n, 0);
  if (!colours.empty()) {
    std::vector<int> vals(colours);
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    for (int v = 0; v < g.n; ++v)
      c.col[v] = static_cast<int>(std::lower_bound(vals.begin(), vals.end(), colours[v]) - vals.begin());
    c.ncol = static_cast<int>(vals.size());
    for (int x : vals) c.trace = mix(c.trace, static_cast<uint64_t>(x));
  }
  c.trace = mix(c.trace, static_cast<uint64_t>(g.n));
  refine(g, c);
  return c;
}

Colouring individualise(const Csr& g, const Colouring& c, int v) {
  Colouring r;
  r.col.resize(c.col.size());
  int cv = c.col[v];
  for (size_t u = 0; u < c.col.size(); ++u) r.col[u] = c.col[u] + (c.col[u] > cv ? 1 : 0);
  r.col[v] = cv + 1;
  r.ncol = c.ncol + 1;
  r.trace = mix(c.trace, static_cast<uint64_t>(cv) + 0x51);
  refine(g, r);
  return r;
}

// Lowest non-singleton colour class, vertices in increasing order.
std::vector<int> target_cell(const Colouring& c) {
  std::vector<int> size(c.ncol, 0);
  for (int x : c.col) ++size[x];
  int t = -1;
  for (int k = 0; k < c.ncol; ++k)
    if (size[k] > 1) {
      t = k;
      break;
    }
  std::vector<int> cell;
  if (t < 0) return cell;
  for (size_t v = 0; v < c.col.size(); ++v)
    if (c.col[v] == t) cell.push_back(static_cast<int>(v));
  return cell;
}

Perm leaf_map(const Colouring& l, const Colouring& r) {
  Perm pos(r.col.size());
  for (size_t v = 0; v < r.col.size(); ++v) pos[r.col[v]] = static_cast<int>(v);
  Perm p(l.col.size());
  for (size_t v = 0; v < l.col.size(); ++v) p[v] = pos[l.col[v]];
  return p;
}

// Searches for an isomorphism a -> b compatible with the two colourings.
std::optional<Perm> match(const Csr& a, const Csr& b, const Colouring& l, const Colouring& r) {
  if (l.trace != r.trace || l.ncol != r.ncol) return std::nullopt;
  if (l.ncol == a.n) {
    Perm p = leaf_map(l, r);
    if (maps_edges(a, b, p)) return p;
    return std::nullopt;
  }
  auto cell = target_cell(l);
  int colour = l.col[cell[0]];
  Colouring l2 = individualise(a, l, cell[0]);
  for (int w = 0; w < b.n; ++w) {
    if (r.col[w] != colour) continue;
    if (auto p = match(a, b, l2, individualise(b, r, w))) return p;
  }
  return std::nullopt;
}

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int a) { return p[a] == a ? a : p[a] = find(p[a]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

void check_simple(const DartGraph& g) {
  if (!is_simple(g)) throw Error("symmetry routines need a simple graph");
  if (g.num_vertices() > kMaxSymmetryVertices) throw Error("graph exceeds the symmetry size bound");
}

}  // namespace

bool is_automorphism(const DartGraph& g, const Perm& p) {
  if (static_cast<int>(p.size()) != g.num_vertices()) return false;
  std::vector<char> hit(p.size(), 0);
  for (int x : p) {
    if (x < 0 || x >= g.num_vertices() || hit[x]) return false;
    hit[x] = 1;
  }
  Csr c(g);
  return maps_edges(c, c, p);
}

long long PermGroup::size() const {
  if (!enumerable()) throw Error("automorphism group exceeds the enumeration cap");
  return static_cast<long long>(order + 0.5L);
}

void PermGroup::for_each(const std::function<void(const Perm&)>& f) const {
  if (!enumerable()) throw Error("automorphism group exceeds the enumeration cap");
  auto rec = [&](auto& self, size_t level, const Perm& acc) -> void {
    if (level == transversal.size()) {
      f(acc);
      return;
    }
    for (const Perm& t : transversal[level]) self(self, level + 1, compose(acc, t));
  };
  rec(rec, 0, identity_perm(degree));
}

std::vector<Perm> PermGroup::elements() const {
  std::vector<Perm> out;
  for_each([&](const Perm& p) { out.push_back(p); });
  return out;
}

PermGroup automorphism_group(const DartGraph& g, long long cap) { return automorphism_group(g, {}, cap); }

PermGroup automorphism_group(const DartGraph& g, const std::vector<int>& colours, long long cap) {
  check_simple(g);
  Csr c(g);
  PermGroup grp;
  grp.degree = g.num_vertices();
  grp.cap = cap;
  std::vector<int> gen_level;
  Colouring cur = unit_colouring(c, colours);
  auto orbit_of = [&](int point, size_t level) {
    std::vector<int> orb{point};
    std::vector<char> in(g.num_vertices(), 0);
    in[point] = 1;
    for (size_t k = 0; k < orb.size(); ++k)
      for (size_t gi = 0; gi < grp.generators.size(); ++gi) {
        if (gen_level[gi] < static_cast<int>(level)) continue;
        int y = grp.generators[gi][orb[k]];
        if (!in[y]) in[y] = 1, orb.push_back(y);
      }
    return orb;
  };
  for (size_t level = 0;; ++level) {
    auto cell = target_cell(cur);
    if (cell.empty()) break;
    int b = cell[0];
    grp.base.push_back(b);
    Colouring left = individualise(c, cur, b);
    for (int w : cell) {
      if (w == b) continue;
      auto orb = orbit_of(b, level);
      if (std::find(orb.begin(), orb.end(), w) != orb.end()) continue;
      if (auto p = match(c, c, left, individualise(c, cur, w))) {
        grp.generators.push_back(*p);
        gen_level.push_back(static_cast<int>(level));
      }
    }
    cur = std::move(left);
  }
  // transversals from the strong generators
  for (size_t level = 0; level < grp.base.size(); ++level) {
    int b = grp.base[level];
    std::vector<int> orb{b};
    std::vector<Perm> reps{identity_perm(grp.degree)};
    std::vector<int> where(grp.degree, -1);
    where[b] = 0;
    for (size_t k = 0; k < orb.size(); ++k)
      for (size_t gi = 0; gi < grp.generators.size(); ++gi) {
        if (gen_level[gi] < static_cast<int>(level)) continue;
        int y = grp.generators[gi][orb[k]];
        if (where[y] >= 0) continue;
        where[y] = static_cast<int>(orb.size());
        orb.push_back(y);
        reps.push_back(compose(grp.generators[gi], reps[k]));
      }
    grp.order *= static_cast<long double>(orb.size());
    grp.orbit.push_back(std::move(orb));
    grp.transversal.push_back(std::move(reps));
  }
  return grp;
}

std::optional<Perm> find_automorphism_mapping(const DartGraph& g, int v, int w) {
  check_simple(g);
  Csr c(g);
  Colouring root = unit_colouring(c);
  if (root.col[v] != root.col[w]) return std::nullopt;
  return match(c, c, individualise(c, root, v), individualise(c, root, w));
}

std::optional<Perm> find_isomorphism(const DartGraph& a, const DartGraph& b) {
  check_simple(a);
  check_simple(b);
  if (a.num_vertices() != b.num_vertices() || a.num_darts() != b.num_darts()) return std::nullopt;
  Csr ca(a), cb(b);
  return match(ca, cb, unit_colouring(ca), unit_colouring(cb));
}

bool is_isomorphic(const DartGraph& a, const DartGraph& b) { return find_isomorphism(a, b).has_value(); }

namespace {

struct CanonSearch {
  const Csr& g;
  const std::vector<int>& colours;
  bool have = false;
  std::vector<uint32_t> best_cert;
  std::vector<uint64_t> best_trace;
  Perm best_lab;
  std::vector<uint64_t> path_trace;
  std::vector<int> prefix;
  std::vector<Perm> autos;

  std::vector<uint32_t> certificate(const Perm& lab) const {
    std::vector<uint32_t> cert;
    for (int u = 0; u < g.n; ++u)
      for (int k = g.off[u]; k < g.off[u + 1]; ++k) {
        int v = g.nb[k];
        if (u < v) {
          uint32_t a = lab[u], b = lab[v];
          if (a > b) std::swap(a, b);
          cert.push_back(a * static_cast<uint32_t>(g.n) + b);
        }
      }
    std::sort(cert.begin(), cert.end());
    if (!colours.empty()) {
      std::vector<uint32_t> byp(g.n);
      for (int u = 0; u < g.n; ++u) byp[lab[u]] = static_cast<uint32_t>(colours[u]);
      cert.insert(cert.end(), byp.begin(), byp.end());
    }
    return cert;
  }

  // -1, 0, 1 comparing the current trace path with the best leaf's prefix
  int compare_path() const {
    for (size_t i = 0; i < path_trace.size(); ++i) {
      if (i >= best_trace.size()) return 1;
      if (path_trace[i] != best_trace[i]) return path_trace[i] < best_trace[i] ? -1 : 1;
    }
    return 0;
  }

  void run(const Colouring& node) {
    path_trace.push_back(node.trace);
    int cmp = have ? compare_path() : -1;
    if (cmp > 0) {
      path_trace.pop_back();
      return;
    }
    if (node.ncol == g.n) {
      Perm lab(node.col.begin(), node.col.end());
      auto cert = certificate(lab);
      if (!have || cmp < 0 || cert < best_cert) {
        have = true;
        best_cert = std::move(cert);
        best_trace = path_trace;
        best_lab = lab;
      } else if (cert == best_cert) {
        autos.push_back(compose(inverse(best_lab), lab));
      }
      path_trace.pop_back();
      return;
    }
    auto cell = target_cell(node);
    std::vector<int> done;
    size_t autos_seen = static_cast<size_t>(-1);
    UnionFind uf(g.n);
    for (int w : cell) {
      if (autos.size() != autos_seen) {
        autos_seen = autos.size();
        uf = UnionFind(g.n);
        for (const Perm& a : autos) {
          bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int p) { return a[p] == p; });
          if (fixes)
            for (int v = 0; v < g.n; ++v) uf.unite(v, a[v]);
        }
      }
      if (std::any_of(done.begin(), done.end(), [&](int d) { return uf.find(d) == uf.find(w); })) continue;
      done.push_back(w);
      prefix.push_back(w);
      run(individualise(g, node, w));
      prefix.pop_back();
    }
    path_trace.pop_back();
  }
};

std::string to_bytes(int n, const std::vector<uint32_t>& cert) {
  std::string s;
  auto put = [&](uint32_t v) {
    for (int i = 0; i < 4; ++i) s.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  };
  put(static_cast<uint32_t>(n));
  for (uint32_t v : cert) put(v);
  return s;
}

}  // namespace

std::string canonical_form(const DartGraph& g, const std::vector<int>& colours) {
  check_simple(g);
  Csr c(g);
  CanonSearch s{c, colours, false, {}, {}, {}, {}, {}, {}};
  s.run(unit_colouring(c, colours));
  return to_bytes(g.num_vertices(), s.best_cert);
}

std::string canonical_form(const DartGraph& g) { return canonical_form(g, {}); }

long long meo(const PermGroup& grp) {
  long long m = 1;
  grp.for_each([&](const Perm& p) { m = std::max(m, perm_order(p)); });
  return m;
}

namespace {

// Minimal block containing a and b (Atkinson), as a block id per point.
std::vector<int> minimal_blocks(int n, const std::vector<Perm>& gens, int a, int b) {
  UnionFind uf(n);
  std::vector<std::pair<int, int>> todo{{a, b}};
  uf.unite(a, b);
  while (!todo.empty()) {
    auto [x, y] = todo.back();
    todo.pop_back();
    for (const Perm& s : gens)
      if (uf.find(s[x]) != uf.find(s[y])) {
        uf.unite(s[x], s[y]);
        todo.emplace_back(s[x], s[y]);
      }
  }
  std::vector<int> id(n);
  for (int v = 0; v < n; ++v) id[v] = uf.find(v);
  return id;
}

bool elementary_abelian_2(const std::vector<Perm>& gens) {
  for (size_t i = 0; i < gens.size(); ++i) {
    if (perm_order(gens[i]) > 2) return false;
    for (size_t j = 0; j < i; ++j)
      if (compose(gens[i], gens[j]) != compose(gens[j], gens[i])) return false;
  }
  return true;
}

}  // namespace

OrderStats order_stats(const DartGraph& g, const PermGroup& grp, uint64_t seed) {
  OrderStats st;
  const int n = grp.degree;
  st.meo_witness = st.semiregular_witness = identity_perm(n);
  auto see = [&](const Perm& p) {
    long long o = perm_order(p);
    if (o > st.meo) st.meo = o, st.meo_witness = p;
    if (o > st.semiregular_order && semiregular(p)) st.semiregular_order = o, st.semiregular_witness = p;
  };
  if (grp.enumerable()) {
    grp.for_each(see);
    return st;
  }
  st.enumerated = false;
  // a block system with elementary abelian 2-kernel N and |G/N| within the cap
  std::vector<int> blocks;
  PermGroup kernel;
  // minimal block systems, smallest blocks first; the first usable kernel wins
  std::map<std::pair<int, std::vector<int>>, bool> systems;
  for (int b = 1; b < n; ++b) {
    auto id = minimal_blocks(n, grp.generators, 0, b);
    systems[{static_cast<int>(std::count(id.begin(), id.end(), id[0])), id}] = true;
  }
  for (const auto& [key, unused] : systems) {
    PermGroup k = automorphism_group(g, key.second, grp.cap);
    long double q = grp.order / k.order;
    if (q > static_cast<long double>(grp.cap) || !elementary_abelian_2(k.generators)) continue;
    blocks = key.second, kernel = std::move(k);
    break;
  }
  if (blocks.empty()) throw Error("automorphism group exceeds the cap and has no usable block system");
  auto block_image = [&](const Perm& p) {
    std::vector<int> img(n);
    for (int v = 0; v < n; ++v) img[v] = blocks[p[v]];
    // one entry per block suffices
    std::vector<int> key;
    for (int v = 0; v < n; ++v)
      if (blocks[v] == v) key.push_back(img[v]);
    return key;
  };
  // coset representatives of G/N, which acts faithfully on the blocks
  std::map<std::vector<int>, size_t> seen;
  std::vector<Perm> reps{identity_perm(n)};
  seen[block_image(reps[0])] = 0;
  for (size_t i = 0; i < reps.size(); ++i)
    for (const Perm& s : grp.generators) {
      Perm p = compose(s, reps[i]);
      if (seen.emplace(block_image(p), reps.size()).second) reps.push_back(std::move(p));
    }
  long double expect = grp.order / kernel.order;
  if (std::abs(static_cast<long double>(reps.size()) - expect) > 0.5L) throw Error("coset enumeration disagrees with the group order");
  // every x in gN has order k or 2k, k the order of gN; 2k iff some g*n_i or g itself reaches it
  std::vector<long long> best(reps.size());
  for (size_t i = 0; i < reps.size(); ++i) {
    see(reps[i]);
    best[i] = perm_order(reps[i]);
    for (const Perm& t : kernel.generators) {
      Perm p = compose(reps[i], t);
      see(p);
      best[i] = std::max(best[i], perm_order(p));
    }
  }
  std::mt19937_64 rng(seed);
  std::vector<size_t> idx(reps.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return best[a] > best[b]; });
  for (size_t i : idx) {
    if (st.semiregular_order == st.meo || best[i] <= st.semiregular_order) break;
    for (int trial = 0; trial < 256 && st.semiregular_order < best[i]; ++trial) {
      Perm p = reps[i];
      for (const Perm& t : kernel.generators)
        if (rng() & 1) p = compose(p, t);
      see(p);
    }
  }
  st.exact = st.semiregular_order == st.meo;
  return st;
}

OrderStats order_stats(const DartGraph& g, long long cap) { return order_stats(g, automorphism_group(g, cap)); }

long long meo(const DartGraph& g, long long cap) { return order_stats(g, cap).meo; }

Rational eta(const DartGraph& g, long long cap) { return Rational(g.num_vertices(), meo(g, cap)); }

bool is_semiregular(const DartGraph& g, const Perm& p) {
  if (!is_automorphism(g, p)) throw Error("permutation is not an automorphism");
  return semiregular(p);
}

int kappa(const PermGroup& grp) {
  int best = grp.degree;
  grp.for_each([&](const Perm& p) {
    if (semiregular(p)) best = std::min(best, static_cast<int>(grp.degree / perm_order(p)));
  });
  return best;
}

int kappa(const DartGraph& g, long long cap) {
  OrderStats st = order_stats(g, cap);
  if (!st.exact) throw Error("kappa undetermined: group beyond the cap and no semiregular element of order meo found");
  return static_cast<int>(g.num_vertices() / st.semiregular_order);
}

bool is_vertex_transitive(const DartGraph& g, const std::vector<Perm>& known) {
  check_simple(g);
  Csr c(g);
  Colouring root = unit_colouring(c);
  if (root.ncol != 1) return false;
  UnionFind uf(g.num_vertices());
  for (const Perm& p : known)
    for (int v = 0; v < g.num_vertices(); ++v) uf.unite(v, p[v]);
  Colouring left = individualise(c, root, 0);
  for (int w = 1; w < g.num_vertices(); ++w) {
    if (uf.find(w) == uf.find(0)) continue;
    auto p = match(c, c, left, individualise(c, root, w));
    if (!p) return false;
    for (int v = 0; v < g.num_vertices(); ++v) uf.unite(v, (*p)[v]);
  }
  return true;
}

bool is_vertex_transitive(const PermGroup& grp) {
  return !grp.orbit.empty() ? static_cast<int>(grp.orbit[0].size()) == grp.degree : grp.degree <= 1;
}

bool is_arc_transitive(const DartGraph& g, const PermGroup& grp) {
  if (!is_vertex_transitive(grp)) return false;
  // darts as (u, neighbour index)
  Csr c(g);
  UnionFind uf(static_cast<int>(c.nb.size()));
  auto dart = [&](int u, int v) {
    return static_cast<int>(std::lower_bound(c.nb.begin() + c.off[u], c.nb.begin() + c.off[u + 1], v) - c.nb.begin());
  };
  for (const Perm& p : grp.generators)
    for (int u = 0; u < c.n; ++u)
      for (int k = c.off[u]; k < c.off[u + 1]; ++k) uf.unite(k, dart(p[u], p[c.nb[k]]));
  for (size_t k = 1; k < c.nb.size(); ++k)
    if (uf.find(static_cast<int>(k)) != uf.find(0)) return false;
  return true;
}

bool is_arc_transitive(const DartGraph& g) { return is_arc_transitive(g, automorphism_group(g)); }

CSignature c_signature(const DartGraph& g, int v, int c) {
  if (g.valence(v) != 3) throw Error("c-signature needs a cubic vertex");
  CSignature s;
  s.c = c;
  for (int k = 0; k < 3; ++k) s.eps[k] = count_c_cycles_through(g, g.darts_at(v)[k], c);
  std::sort(s.eps.begin(), s.eps.end());
  return s;
}

bool is_cycle_regular(const DartGraph& g, int c) {
  CSignature s0 = c_signature(g, 0, c);
  for (int v = 1; v < g.num_vertices(); ++v)
    if (!(c_signature(g, v, c) == s0)) return false;
  return true;
}

}  // namespace cubvt
