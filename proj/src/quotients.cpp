#include "cubvt/quotients.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>

#include "cubvt/families.hpp"
#include "cubvt/symmetry.hpp"

namespace cubvt {

LabelledGraph build_lg(int n, const std::vector<QEdge>& edges) {
  std::vector<int> beg, inv, lam;
  for (const QEdge& e : edges) {
    int x = static_cast<int>(beg.size());
    if (e.semi) {
      if (e.u != e.v) throw Error("semiedge needs u == v");
      beg.push_back(e.u);
      inv.push_back(x);
      lam.push_back(e.luv);
      continue;
    }
    beg.insert(beg.end(), {e.u, e.v});
    inv.insert(inv.end(), {x + 1, x});
    lam.insert(lam.end(), {e.luv, e.lvu});
  }
  DartGraph g(n, beg, inv);
  std::string err = validate(g);
  if (!err.empty()) throw Error(err);
  return LabelledGraph(std::move(g), lam);
}

namespace {

// Multigraphs with valence <= 3 on exactly n vertices, connected, one per isomorphism class.
std::vector<std::pair<std::vector<int>, DartGraph>> multigraphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  std::vector<int> mult(pairs.size()), loops(n), semis(n), val(n);
  std::map<std::vector<int>, DartGraph> seen;

  auto emit = [&] {
    std::vector<int> beg, inv;
    auto link = [&](int a, int b) {
      int x = static_cast<int>(beg.size());
      beg.insert(beg.end(), {a, b});
      inv.insert(inv.end(), {x + 1, x});
    };
    for (size_t p = 0; p < pairs.size(); ++p)
      for (int k = 0; k < mult[p]; ++k) link(pairs[p].first, pairs[p].second);
    for (int v = 0; v < n; ++v)
      if (loops[v]) link(v, v);
    for (int v = 0; v < n; ++v)
      for (int k = 0; k < semis[v]; ++k) {
        beg.push_back(v);
        inv.push_back(static_cast<int>(inv.size()));
      }
    DartGraph g(n, beg, inv);
    if (!is_connected(g)) return;
    auto form = multigraph_canonical_form(g);
    seen.emplace(std::move(form), std::move(g));
  };

  // slots: pairs, then loops, then semiedges
  std::function<void(size_t)> rec = [&](size_t slot) {
    size_t np = pairs.size();
    if (slot == np + 2 * n) {
      emit();
      return;
    }
    if (slot < np) {
      auto [a, b] = pairs[slot];
      for (int k = 0; val[a] + k <= 3 && val[b] + k <= 3; ++k) {
        mult[slot] = k;
        val[a] += k, val[b] += k;
        rec(slot + 1);
        val[a] -= k, val[b] -= k;
      }
      mult[slot] = 0;
    } else if (slot < np + n) {
      int v = static_cast<int>(slot - np);
      for (int k = 0; k <= 1 && val[v] + 2 * k <= 3; ++k) {
        loops[v] = k;
        val[v] += 2 * k;
        rec(slot + 1);
        val[v] -= 2 * k;
      }
      loops[v] = 0;
    } else {
      int v = static_cast<int>(slot - np - n);
      for (int k = 0; val[v] + k <= 3; ++k) {
        semis[v] = k;
        rec(slot + 1);
      }
      semis[v] = 0;
    }
  };
  rec(0);
  std::vector<std::pair<std::vector<int>, DartGraph>> out(seen.begin(), seen.end());
  return out;
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

}  // namespace

CandidateSet enumerate_Q0(int max_vertices) {
  struct Row {
    int n;
    std::vector<int> mform, lform;
  };
  std::vector<Row> rows;
  for (int n = 1; n <= max_vertices; ++n) {
    for (auto& [mform, g] : multigraphs(n)) {
      std::set<std::vector<int>> forms;
      const int nd = g.num_darts();
      std::vector<int> lam(nd, 1), budget(n, 3);
      std::function<void(int)> rec = [&](int x) {
        if (x == nd) {
          forms.insert(labelled_canonical_form(LabelledGraph(g, lam)));
          return;
        }
        int v = g.beg(x);
        for (int l = 1; l <= budget[v]; ++l) {
          lam[x] = l;
          budget[v] -= l;
          rec(x + 1);
          budget[v] += l;
        }
      };
      rec(0);
      for (const auto& f : forms) rows.push_back({n, mform, f});
    }
  }
  std::sort(rows.begin(), rows.end(),
            [](const Row& a, const Row& b) { return std::tie(a.n, a.mform, a.lform) < std::tie(b.n, b.mform, b.lform); });
  CandidateSet cs;
  for (size_t i = 0; i < rows.size(); ++i)
    cs.members.push_back({"Q0-" + std::to_string(i), from_labelled_canonical_form(rows[i].lform), {"q0"}});
  return cs;
}

DiagramCheck check_diagram(const LabelledGraph& lg) {
  DiagramCheck r;
  const DartGraph& g = lg.graph;
  auto fail = [&](int c, std::string d) {
    r.ok = false;
    r.failed = c;
    r.detail = std::move(d);
    return r;
  };
  if (!is_connected(g)) return fail(1, "disconnected");
  if (!is_extendable(lg)) return fail(1, "not extendable");
  for (int v = 0; v < lg.num_vertices(); ++v)
    if (deg_lambda(lg, v) != 3) return fail(2, "deg_lambda(" + std::to_string(v) + ") != 3");
  CheckResult c = is_ccv_extendable(lg);
  if (!c.ok) {
    // ccv-extendability numbers its conditions extendable, [i,i], parallel, semiedge, degree
    static const int to_diagram[] = {0, 1, 3, 4, 5, 2};
    return fail(to_diagram[c.failed], c.detail);
  }
  if (lg.num_vertices() > kMaxQuotientVertices) return fail(6, "more than 5 vertices");

  SpanningTree t = spanning_tree(lg);
  std::vector<Rational> pot = tree_potential(lg, t);
  int worst = 7;
  for (int u = 0; u < lg.num_vertices(); ++u) {
    // a [1,1]-link to a different vertex; loops only count on a one-vertex graph
    bool eleven = false;
    for (int x : g.darts_at(u))
      if (g.inv(x) != x && lg.lambda[x] == 1 && lg.lambda[g.inv(x)] == 1 &&
          (g.end(x) != u || lg.num_vertices() == 1))
        eleven = true;
    if (!eleven) continue;
    // tree paths from u, once along t and once along a bfs tree rooted at u
    std::vector<Rational> other = tree_potential(lg, bfs_tree(g, u));
    bool c8 = true;
    Rational sum(0);
    for (int v = 0; v < lg.num_vertices(); ++v) {
      if (v == u) continue;
      Rational s = pot[v] / pot[u];
      if (s != other[v] / other[u]) throw Error("lambda* of tree paths depends on the tree");
      if (s < Rational(1, 6)) c8 = false;
      sum += s;
    }
    if (!c8) {
      worst = std::max(worst, 8);
      continue;
    }
    if (sum > Rational(2)) {
      worst = std::max(worst, 9);
      continue;
    }
    r.ok = true;
    r.u_hat = u;
    return r;
  }
  static const char* msg[] = {"", "", "", "", "", "", "", "no vertex on a [1,1]-link", "lambda* below 1/6",
                              "lambda* sum above 2"};
  return fail(worst, msg[worst]);
}

CandidateSet filter_diagram(const CandidateSet& cs) {
  CandidateSet out;
  for (const Candidate& c : cs.members) {
    DiagramCheck d = check_diagram(c.lg);
    if (!d.ok) continue;
    Candidate k = c;
    k.passed.push_back("diagram(u=" + std::to_string(d.u_hat) + ")");
    out.members.push_back(std::move(k));
  }
  return out;
}

std::string artefact_rejection(const LabelledGraph& lg) {
  bool three = std::any_of(lg.lambda.begin(), lg.lambda.end(), [](int l) { return l == 3; });
  std::set<std::string> hits;
  for (const ArtefactMatch& m : find_artefacts(lg)) {
    bool chain = m.id == "A6" || m.id == "A7";
    if (chain || three) hits.insert(m.id);
  }
  return join(std::vector<std::string>(hits.begin(), hits.end()), ",");
}

CandidateSet filter_artefacts(const CandidateSet& cs) {
  CandidateSet out;
  for (const Candidate& c : cs.members) {
    if (!artefact_rejection(c.lg).empty()) continue;
    Candidate k = c;
    k.passed.push_back("artefacts");
    out.members.push_back(std::move(k));
  }
  return out;
}

std::vector<int> index_base(const LabelledGraph& lg) {
  if (!is_extendable(lg)) throw Error("labelled graph is not extendable");
  std::vector<Rational> pot = tree_potential(lg, bfs_tree(lg.graph, 0));
  long long den = 1, num = 0;
  for (const Rational& p : pot) den = lcm_ll(den, p.denominator());
  std::vector<int> base;
  for (const Rational& p : pot) {
    long long v = p.numerator() * (den / p.denominator());
    base.push_back(static_cast<int>(v));
    num = std::gcd(num, v);
  }
  for (int& b : base) b = static_cast<int>(b / num);
  return base;
}

bool for_each_extension(const LabelledGraph& lg, int m, bool reduce, const std::function<bool(const CcvGraph&)>& f) {
  const DartGraph& g = lg.graph;
  std::vector<int> iota = index_base(lg);
  for (int& i : iota) i *= m;
  SpanningTree t = spanning_tree(lg);
  std::vector<int> zeta(g.num_darts(), 0);

  struct Free {
    int dart, mod;
    bool loop;
  };
  std::vector<Free> free;
  for (int x = 0; x < g.num_darts(); ++x) {
    int y = g.inv(x);
    int n = iota[g.beg(x)];
    if (y == x) {
      if (n % 2) return true;
      zeta[x] = n / 2;
    } else if (x < y && !t.in_tree[x]) {
      bool loop = g.beg(x) == g.beg(y);
      if (loop && n < 3) return true;
      free.push_back({x, std::gcd(n, iota[g.beg(y)]), loop});
    }
  }
  long long big = 1;
  for (int i : iota) big = lcm_ll(big, i);
  std::vector<int> units;
  if (reduce)
    for (int a = 2; a < big; ++a)
      if (std::gcd<long long>(a, big) == 1) units.push_back(a);

  auto norm = [](const Free& fr, long long v) {
    int z = static_cast<int>(((v % fr.mod) + fr.mod) % fr.mod);
    return fr.loop ? std::min(z, fr.mod - z) : z;
  };
  std::vector<int> val(free.size()), img(free.size());
  auto minimal = [&] {
    for (int a : units) {
      for (size_t k = 0; k < free.size(); ++k) img[k] = norm(free[k], static_cast<long long>(a) * val[k]);
      if (img < val) return false;
    }
    return true;
  };
  std::function<bool(size_t)> rec = [&](size_t k) -> bool {
    if (k == free.size()) {
      if (reduce && !minimal()) return true;
      for (size_t i = 0; i < free.size(); ++i) zeta[free[i].dart] = val[i];
      CcvGraph c = make_ccv(lg, iota, zeta);
      if (!is_ccv(c, t).ok) return true;
      return f(c);
    }
    const Free& fr = free[k];
    int lo = fr.loop ? 1 : 0;
    int hi = fr.loop && reduce ? (fr.mod - 1) / 2 : fr.mod - 1;
    for (int v = lo; v <= hi; ++v) {
      if (fr.loop && 2 * v == fr.mod) continue;
      val[k] = v;
      if (!rec(k + 1)) return false;
    }
    return true;
  };
  return rec(0);
}

namespace {

// Number of cycles of each length 3..8 through a vertex.
std::vector<long long> cycle_profile(const DartGraph& g, int v) {
  std::vector<long long> p;
  for (int c = 3; c <= 8; ++c) {
    long long s = 0;
    for (int x : g.darts_at(v)) s += count_c_cycles_through(g, x, c);
    p.push_back(s);
  }
  return p;
}

bool cover_is_vt(const CoverGraph& cov, int nbase) {
  const DartGraph& g = cov.graph;
  std::vector<long long> ref = cycle_profile(g, cov.vertex(0, 0));
  for (int v = 1; v < nbase; ++v)
    if (cycle_profile(g, cov.vertex(v, 0)) != ref) return false;
  return is_vertex_transitive(g, {cov.rho_v});
}

}  // namespace

std::vector<int> ProbeReport::orders() const {
  std::set<int> s;
  for (const ProbeHit& h : hits) s.insert(h.order);
  return {s.begin(), s.end()};
}

ProbeReport probe_candidate(const LabelledGraph& lg, const ProbeOptions& opt, const std::string& id) {
  if (!is_extendable(lg)) throw Error("probe needs an extendable labelled graph");
  if (!is_ccv_extendable(lg).ok) throw Error("probe needs a ccv-extendable labelled graph");
  ProbeReport rep;
  rep.id = id;
  std::vector<int> base = index_base(lg);
  int sum = std::accumulate(base.begin(), base.end(), 0);
  int top = opt.max_m + (opt.extend_box ? opt.order_floor / sum : 0);
  std::ostringstream box;
  box << "m=1.." << top << " iota=m*(";
  for (size_t i = 0; i < base.size(); ++i) box << (i ? "," : "") << base[i];
  box << ") voltages=full residue ranges up to units";
  rep.box = box.str();
  for (int m = 1; m <= top; ++m) {
    if (m * sum <= opt.order_floor) continue;
    bool go = for_each_extension(lg, m, true, [&](const CcvGraph& c) {
      ++rep.tested;
      CoverGraph cov = cover(c);
      ++rep.covers;
      if (!is_simple(cov.graph) || !is_connected(cov.graph) || !is_cubic(cov.graph))
        throw Error("ccv-extension with a cover that is not simple connected cubic");
      if (!cover_is_vt(cov, lg.num_vertices())) return true;
      if (!is_vertex_transitive(automorphism_group(cov.graph)))
        throw Error("vertex-transitivity not confirmed by the full group");
      std::vector<int> z;
      for (int x = 0; x < lg.num_darts(); ++x)
        if (x < lg.graph.inv(x)) z.push_back(c.zeta[x]);
      rep.hits.push_back({m, z, cov.graph.num_vertices()});
      return !opt.stop_at_first;
    });
    if (!go) break;
  }
  return rep;
}

CandidateSet compute_Qstar() { return filter_artefacts(filter_diagram(enumerate_Q0())); }

CandidateSet compute_Q(const CandidateSet& qstar, const ProbeOptions& opt) {
  ProbeOptions o = opt;
  o.stop_at_first = true;
  CandidateSet out;
  for (const Candidate& c : qstar.members) {
    ProbeReport rep = probe_candidate(c.lg, o, c.id);
    if (rep.hits.empty()) continue;
    Candidate k = c;
    const ProbeHit& h = rep.hits.front();
    k.passed.push_back("probe(m=" + std::to_string(h.m) + ",order=" + std::to_string(h.order) + ")");
    out.members.push_back(std::move(k));
  }
  return out;
}

std::vector<NamedQuotient> q_members() {
  auto E = [](int u, int v) { return QEdge{u, v, 1, 1, false}; };
  auto S = [](int u) { return QEdge{u, u, 1, 1, true}; };
  std::vector<NamedQuotient> q;
  auto add = [&](std::string name, int n, std::vector<QEdge> e) {
    q.push_back({std::move(name), build_lg(n, e), true, true, {}, false});
  };
  add("loop+semiedge", 1, {E(0, 0), S(0)});
  add("theta", 2, {E(0, 1), E(0, 1), E(0, 1)});
  add("dumbbell", 2, {E(0, 1), E(0, 0), E(1, 1)});
  add("double-link+semiedges", 2, {E(0, 1), E(0, 1), S(0), S(1)});
  add("triangle+semiedges", 3, {E(0, 1), E(1, 2), E(2, 0), S(0), S(1), S(2)});
  add("triangle-doubled", 3, {E(0, 1), E(0, 1), E(1, 2), E(2, 0), S(2)});
  add("path+loops", 3, {E(0, 1), E(1, 2), E(0, 0), E(2, 2), S(1)});
  add("double+path+loop", 3, {E(0, 1), E(0, 1), S(0), E(1, 2), E(2, 2)});
  q.push_back({"Delta12", delta12(5, 1, 2).base, true, true, {}, false});
  return q;
}

std::vector<NamedQuotient> exceptional_deltas() {
  auto E = [](int u, int v, int luv = 1, int lvu = 1) { return QEdge{u, v, luv, lvu, false}; };
  auto S = [](int u) { return QEdge{u, u, 1, 1, true}; };
  std::vector<NamedQuotient> d;
  auto add = [&](std::string name, int n, std::vector<QEdge> e, std::vector<int> orders) {
    d.push_back({std::move(name), build_lg(n, e), false, true, std::move(orders), true});
  };
  // a=0 b=1 c=2 d=3 e=4; E(u, v, 1, 2) puts v on the side seeing two of u
  add("Delta1", 4, {E(0, 2, 1, 2), E(0, 3, 1, 2), E(0, 1), E(1, 1), E(2, 3)}, {12});
  add("Delta2", 4, {E(0, 3, 1, 2), S(3), E(0, 1), E(0, 1), E(1, 2, 1, 2), S(2)}, {});
  add("Delta6", 4, {S(0), E(0, 3, 1, 2), E(0, 1), E(1, 1), E(3, 2), E(2, 2)}, {18});
  add("Delta7", 4, {E(0, 3, 1, 2), E(0, 1, 1, 2), E(0, 2), E(2, 2), S(1), S(3)}, {12});
  add("Delta8", 4, {S(0), S(1), E(0, 1), E(0, 3, 1, 2), E(1, 2, 1, 2), E(2, 3)}, {6});
  add("Delta9", 4, {E(0, 3, 1, 3), E(0, 1, 1, 2), S(1), E(0, 2), E(2, 2)}, {});
  add("Delta10", 5, {E(0, 3, 1, 3), E(0, 1), E(0, 1), E(1, 2, 1, 2), E(2, 4, 1, 3)}, {});
  add("Delta11", 4, {E(0, 2, 1, 2), E(0, 1), E(1, 3, 1, 2), S(0), S(1), S(2), S(3)}, {});
  return d;
}

void write_provenance(std::ostream& os, const CandidateSet& cs) {
  for (const Candidate& c : cs.members) {
    os << c.id << ' ' << c.lg.num_vertices() << "v " << join(c.passed, ",") << '\n';
  }
}

}  // namespace cubvt
