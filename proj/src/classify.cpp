#include "cubvt/classify.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "cubvt/quotients.hpp"

namespace cubvt {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::case_1a: return "case-1a";
    case Verdict::case_1b: return "case-1b";
    case Verdict::case_2a: return "case-2a";
    case Verdict::case_2b: return "case-2b";
    case Verdict::case_2c: return "case-2c";
    case Verdict::case_3a: return "case-3a";
    case Verdict::case_3b: return "case-3b";
    case Verdict::case_3c: return "case-3c";
    case Verdict::case_3d: return "case-3d";
    case Verdict::case_4: return "case-4";
    case Verdict::not_covered: return "not-covered";
    case Verdict::not_cubic_vt: return "not-cubic-VT";
    case Verdict::too_small: return "too-small";
  }
  return "?";
}

int verdict_kappa(Verdict v) {
  switch (v) {
    case Verdict::case_1a:
    case Verdict::case_1b: return 1;
    case Verdict::case_2a:
    case Verdict::case_2b:
    case Verdict::case_2c: return 2;
    case Verdict::case_3a:
    case Verdict::case_3b:
    case Verdict::case_3c:
    case Verdict::case_3d: return 3;
    case Verdict::case_4: return 6;
    default: return 0;
  }
}

namespace {

bool gp_in_theorem(int m, int r) {
  if (m < 5 || r < 2 || 2 * r >= m) return false;
  int sq = r * r % m;
  return sq == 1 || sq == m - 1 || (m == 10 && r == 2);
}

bool haar_in_theorem(int m, int r, int s) {
  if (m < 3 || r < 1 || s < 1 || r > m - 1 || s > m - 1 || r == s) return false;
  if (m % r != 0 || std::gcd(r, s) != 1) return false;
  if (m % 2 == 0) return true;
  auto is = [&](int a, int b) { return (r == a && s == b) || (r == b && s == a); };
  if (is(1, m - 1) || is(1, 2)) return false;
  // pairs affine-equivalent to the two excluded ones, e.g. {1, (m+1)/2}, are circulants as well
  return m < 5 || !haar_is_circulant(m, r, s);
}

}  // namespace

std::optional<Verdict> spec_case(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::Prism:
      if (p.at(0) < 3) return std::nullopt;
      return p[0] % 2 ? Verdict::case_1a : Verdict::case_2a;
    case Family::Moeb:
      if (p.at(0) < 4 || p[0] % 2) return std::nullopt;
      return Verdict::case_1b;
    case Family::GP:
      if (p.at(1) == 1) return spec_case({Family::Prism, {p[0]}});
      if (gp_in_theorem(p.at(0), p.at(1))) return Verdict::case_2b;
      return std::nullopt;
    case Family::Haar:
      if (haar_in_theorem(p.at(0), p.at(1), p.at(2))) return Verdict::case_2c;
      return std::nullopt;
    case Family::X:
      if (p.at(0) % 6 == 3) return Verdict::case_3a;
      return std::nullopt;
    case Family::Y:
      if (p.at(0) % 6 == 3) return Verdict::case_3b;
      return std::nullopt;
    case Family::Tutte8Cage: return Verdict::case_3c;
    case Family::TruncatedTetrahedron: return Verdict::case_3d;
    case Family::SDW:
      if (p.at(1) == 3 && p.at(0) % 6 == 3 && p[0] >= 9) return Verdict::case_4;
      return std::nullopt;
    case Family::Delta12Cover: return std::nullopt;
  }
  return std::nullopt;
}

std::vector<TheoremInstance> theorem_specs(int n) {
  std::vector<TheoremInstance> out;
  auto add = [&](Verdict v, Family f, std::vector<int> p) { out.push_back({v, {f, std::move(p)}}); };
  if (n % 2 == 0) {
    int m = n / 2;
    if (m >= 3 && m % 2) add(Verdict::case_1a, Family::Prism, {m});
    if (n >= 4) add(Verdict::case_1b, Family::Moeb, {n});
    if (m >= 4 && m % 2 == 0) add(Verdict::case_2a, Family::Prism, {m});
    for (int r = 2; 2 * r < m; ++r)
      if (gp_in_theorem(m, r)) add(Verdict::case_2b, Family::GP, {m, r});
    for (int r = 1; r < m; ++r)
      for (int s = 1; s < m; ++s)
        if (haar_in_theorem(m, r, s)) add(Verdict::case_2c, Family::Haar, {m, r, s});
  }
  if (n % 6 == 0 && (n / 6) % 6 == 3) {
    add(Verdict::case_3a, Family::X, {n / 6});
    add(Verdict::case_3b, Family::Y, {n / 6});
  }
  if (n == 30) add(Verdict::case_3c, Family::Tutte8Cage, {});
  if (n == 12) add(Verdict::case_3d, Family::TruncatedTetrahedron, {});
  if (n % 6 == 0 && (n / 6) % 6 == 3 && n / 6 >= 9) add(Verdict::case_4, Family::SDW, {n / 6, 3});
  return out;
}

namespace {

struct OrderIndex {
  std::vector<TheoremInstance> instances;
  std::multimap<std::string, size_t> by_form;
};

std::mutex index_mutex;
std::map<int, std::shared_ptr<const OrderIndex>> index_cache;

std::shared_ptr<const OrderIndex> order_index(int n) {
  {
    std::lock_guard lock(index_mutex);
    if (auto it = index_cache.find(n); it != index_cache.end()) return it->second;
  }
  auto idx = std::make_shared<OrderIndex>();
  std::set<std::string> haar_seen;
  for (auto& inst : theorem_specs(n)) {
    std::string form = canonical_form(build(inst.spec));
    if (inst.verdict == Verdict::case_2c && !haar_seen.insert(form).second) continue;
    idx->by_form.emplace(form, idx->instances.size());
    idx->instances.push_back(inst);
  }
  std::lock_guard lock(index_mutex);
  return index_cache.emplace(n, std::move(idx)).first->second;
}

}  // namespace

std::vector<TheoremInstance> theorem_instances(int n) { return order_index(n)->instances; }

std::string ClassificationResult::str() const {
  std::ostringstream os;
  os << (id.empty() ? "graph" : id) << ' ' << verdict_name(verdict) << " n=" << n;
  if (vertex_transitive) {
    os << " meo=" << meo << " eta=" << eta.numerator();
    if (eta.denominator() != 1) os << '/' << eta.denominator();
    os << " kappa=" << kappa;
  }
  if (witness_family) os << " witness=" << witness_family->str();
  if (!matches.empty()) {
    os << " matches=";
    for (size_t i = 0; i < matches.size(); ++i)
      os << (i ? "," : "") << verdict_name(matches[i].verdict) << ':' << matches[i].spec.str();
  }
  if (theorem_violation) os << " THEOREM-VIOLATION";
  return os.str();
}

namespace {

bool is_isomorphism(const DartGraph& a, const DartGraph& b, const Perm& p) {
  if (a.num_vertices() != b.num_vertices() || static_cast<int>(p.size()) != a.num_vertices()) return false;
  auto eb = b.edge_list();
  std::set<std::pair<int, int>> target(eb.begin(), eb.end());
  auto ea = a.edge_list();
  if (ea.size() != eb.size()) return false;
  for (auto [u, v] : ea) {
    int x = p[u], y = p[v];
    if (x > y) std::swap(x, y);
    if (!target.count({x, y})) return false;
  }
  return true;
}

}  // namespace

ClassificationResult classify(const DartGraph& g, const std::string& id, long long cap) {
  if (!is_simple(g) || !is_connected(g) || !is_cubic(g)) throw Error("classify needs a simple connected cubic graph");
  if (g.num_vertices() > kMaxSymmetryVertices) throw Error("graph exceeds the symmetry vertex cap");
  ClassificationResult res;
  res.id = id;
  res.n = g.num_vertices();
  PermGroup grp = automorphism_group(g, cap);
  res.vertex_transitive = is_vertex_transitive(grp);
  if (!res.vertex_transitive) {
    res.verdict = Verdict::not_cubic_vt;
    return res;
  }
  OrderStats st = order_stats(g, grp);
  if (!st.exact) throw Error("kappa undetermined beyond the enumeration cap");
  res.meo = st.meo;
  res.witness_auto = st.meo_witness;
  res.kappa = static_cast<int>(res.n / st.semiregular_order);
  res.eta = Rational(res.n, res.meo);
  if (res.n <= 20) {
    res.verdict = Verdict::too_small;
    return res;
  }
  auto idx = order_index(res.n);
  auto [lo, hi] = idx->by_form.equal_range(canonical_form(g));
  std::vector<size_t> hit;
  for (auto it = lo; it != hi; ++it) hit.push_back(it->second);
  std::sort(hit.begin(), hit.end());
  for (size_t i : hit) res.matches.push_back(idx->instances[i]);
  bool covered = res.eta <= 3;
  if (!covered || res.matches.empty()) {
    res.verdict = Verdict::not_covered;
    res.theorem_violation = covered != !res.matches.empty();
    return res;
  }
  const TheoremInstance& first = res.matches.front();
  DartGraph target = build(first.spec);
  auto iso = find_isomorphism(g, target);
  if (!iso || !is_isomorphism(g, target, *iso)) throw Error("canonical forms agree but no isomorphism was verified");
  if (!is_automorphism(g, res.witness_auto) || 3 * perm_order(res.witness_auto) < res.n)
    throw Error("witness automorphism failed verification");
  res.verdict = first.verdict;
  res.witness_family = first.spec;
  res.witness_iso = *iso;
  return res;
}

std::vector<FamilySpec> theorem_sweep(int min_order, int max_order) {
  std::vector<FamilySpec> out;
  for (int n = min_order + 1; n <= max_order; ++n)
    for (auto& inst : theorem_instances(n)) out.push_back(inst.spec);
  return out;
}

EtaKappaReport report_eta_kappa(const std::vector<FamilySpec>& sweep, long long cap) {
  EtaKappaReport rep;
  for (const auto& spec : sweep) {
    DartGraph g = build(spec);
    OrderStats st = order_stats(g, cap);
    if (!st.exact) throw Error("kappa undetermined for " + spec.str());
    EtaKappaRow row;
    row.name = spec.str();
    row.order = g.num_vertices();
    row.eta = Rational(row.order, st.meo);
    row.kappa = static_cast<int>(row.order / st.semiregular_order);
    row.girth = girth(g);
    if (row.girth && *row.girth <= kMaxCycleLength) row.signature = c_signature(g, 0, *row.girth);
    rep.rows.push_back(row);
  }
  for (int r = 1; r <= 3; ++r)
    for (const auto& row : rep.rows)
      if (row.eta <= r) rep.f[r - 1] = std::max(rep.f[r - 1], row.kappa);
  return rep;
}

namespace {

std::string rat(const Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

using Lines = std::vector<LedgerLine>;

LedgerLine line(bool pass, std::string id, std::string details) { return {pass, std::move(id), std::move(details)}; }

// cover against the adjacency oracle, rho and fibres, for every reduced extension with m <= max_m
Lines check_covers(const VerifyOptions& opt) {
  Lines out;
  for (const auto& q : q_members()) {
    long long n_ext = 0;
    std::string bad;
    for (int m = 1; m <= opt.max_m && bad.empty(); ++m) {
      for_each_extension(q.lg, m, true, [&](const CcvGraph& c) {
        ++n_ext;
        CoverGraph cov = cover(c);
        auto edges = cov.graph.edge_list();
        auto oracle = cover_adjacency_oracle(c, spanning_tree(c.base));
        std::string where = " m=" + std::to_string(m);
        if (edges != oracle) bad = "oracle mismatch" + where;
        else if (!is_simple(cov.graph) || !is_connected(cov.graph) || !is_cubic(cov.graph)) bad = "not simple cubic" + where;
        else if (!is_automorphism(cov.graph, cov.rho_v)) bad = "rho not an automorphism" + where;
        else {
          for (int v = 0; v < cov.graph.num_vertices() && bad.empty(); ++v) {
            // the rho-orbit of v is exactly its fibre
            int len = 0, w = v;
            do {
              if (cov.proj_v[w] != cov.proj_v[v]) bad = "rho leaves a fibre" + where;
              w = cov.rho_v[w];
              ++len;
            } while (w != v && bad.empty());
            if (bad.empty() && len != c.iota[cov.proj_v[v]]) bad = "rho orbit is not the fibre" + where;
          }
        }
        return bad.empty();
      });
    }
    out.push_back(line(bad.empty(), "cover.oracle." + q.name,
                       bad.empty() ? std::to_string(n_ext) + " extensions" : bad));
  }
  return out;
}

Lines check_walks(const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  auto qs = q_members();
  int lift_bad = 0, cyc_bad = 0, cycles = 0;
  for (int k = 0; k < opt.walks; ++k) {
    const auto& q = qs[rng() % qs.size()];
    int m = 3 + static_cast<int>(rng() % 4);
    CcvGraph c;
    bool found = false;
    int pick = static_cast<int>(rng() % 8), seen = 0;
    for_each_extension(q.lg, m, true, [&](const CcvGraph& e) {
      c = e;
      found = true;
      return seen++ < pick;
    });
    if (!found) continue;
    const DartGraph& g = c.graph();
    CoverGraph cov = cover(c);
    Walk w;
    int at = static_cast<int>(rng() % g.num_vertices());
    int len = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < len; ++i) {
      const auto& d = g.darts_at(at);
      int x = d[rng() % d.size()];
      w.darts.push_back(x);
      at = g.end(x);
    }
    std::set<long long> ends;
    for (const Walk& l : lifts(c, cov, w)) ends.insert(cov.index_v[cov.graph.end(l.darts.back())]);
    auto es = endset(c, w).elements();
    if (std::set<long long>(es.begin(), es.end()) != ends) ++lift_bad;
    if (k % 50 == 0) {
      for (const Walk& cyc : cycles_up_to(cov.graph, 8)) {
        ++cycles;
        Walk p = project(cov, cyc);
        if (!is_lambda_reduced(c.base, p) || !is_closed(g, p)) ++cyc_bad;
        if (!endset(c, p).contains(0)) ++cyc_bad;
      }
    }
  }
  return {line(lift_bad == 0, "cover.walks.endset", std::to_string(opt.walks) + " walks, " + std::to_string(lift_bad) + " mismatches"),
          line(cyc_bad == 0, "cover.walks.cycles", std::to_string(cycles) + " cycles, " + std::to_string(cyc_bad) + " failures")};
}

Lines check_families() {
  Lines out;
  std::vector<FamilySpec> specs = {
      {Family::Prism, {3}}, {Family::Prism, {4}}, {Family::Prism, {5}}, {Family::Prism, {6}},
      {Family::Moeb, {8}}, {Family::GP, {5, 2}}, {Family::GP, {8, 3}}, {Family::GP, {10, 2}},
      {Family::Haar, {7, 1, 3}}, {Family::X, {9}}, {Family::Y, {3}}, {Family::Y, {9}},
      {Family::SDW, {3, 3}}, {Family::SDW, {4, 3}}, {Family::SDW, {5, 3}}, {Family::SDW, {6, 3}},
      {Family::SDW, {7, 3}}, {Family::SDW, {9, 3}}, {Family::Tutte8Cage, {}}, {Family::TruncatedTetrahedron, {}}};
  for (const auto& spec : specs) {
    KnownProperties k = known_properties(spec);
    DartGraph g = build(spec);
    PermGroup grp = automorphism_group(g);
    std::ostringstream bad;
    if (k.order && *k.order != g.num_vertices()) bad << " order " << g.num_vertices();
    if (!is_vertex_transitive(grp)) bad << " not VT";
    Rational e(g.num_vertices(), meo(grp));
    if (k.eta && *k.eta != e) bad << " eta " << rat(e);
    int kap = kappa(grp);
    if (k.kappa && *k.kappa != kap) bad << " kappa " << kap;
    auto gi = girth(g);
    if (k.girth && gi != k.girth) bad << " girth " << gi.value_or(0);
    if (k.aut_order && *k.aut_order != grp.size()) bad << " |Aut| " << grp.size();
    if (k.arc_transitive && *k.arc_transitive != is_arc_transitive(g, grp)) bad << " arc-transitivity";
    if (k.signature && !is_cycle_regular(g, k.signature->c)) bad << " not cycle-regular";
    if (k.signature && c_signature(g, 0, k.signature->c) != *k.signature) bad << " signature";
    std::string b = bad.str();
    out.push_back(line(b.empty(), "family.known." + spec.str(),
                       b.empty() ? "eta=" + rat(e) + " kappa=" + std::to_string(kap) : "mismatch:" + b));
  }
  for (int m : {5, 7, 9, 11}) {
    Perm phi = phi_iso(m);
    DartGraph a = sdw(m, 3), b = gamma12(m, 1, 2);
    bool ok = is_isomorphism(a, b, phi) && canonical_form(a) == canonical_form(b);
    out.push_back(line(ok, "family.phi." + std::to_string(m), ok ? "SDW(m,3) = Gamma12(m,1,2)" : "phi is not an isomorphism"));
  }
  return out;
}

Lines check_quotients(const VerifyOptions& opt) {
  Lines out;
  CandidateSet qs = compute_Qstar();
  out.push_back(line(qs.size() == 20, "quotients.qstar-count", std::to_string(qs.size()) + " (target 20)"));
  ProbeOptions po;
  po.max_m = opt.max_m;
  CandidateSet q = compute_Q(qs, po);
  std::set<std::vector<int>> got, want;
  for (const auto& c : q.members) got.insert(labelled_canonical_form(c.lg));
  for (const auto& f : q_members()) want.insert(labelled_canonical_form(f.lg));
  out.push_back(line(q.size() == 9, "quotients.q-count", std::to_string(q.size()) + " (target 9)"));
  out.push_back(line(got == want, "quotients.q-members", got == want ? "matches the nine members of Q" : "differs"));
  CandidateSet q2 = compute_Q(filter_diagram(enumerate_Q0()), po);
  out.push_back(line(q2.size() == 9, "quotients.q-from-diagram", std::to_string(q2.size()) + " (target 9)"));
  for (const auto& d : exceptional_deltas()) {
    ProbeOptions full = po;
    full.order_floor = 0;
    full.extend_box = false;
    auto orders = probe_candidate(d.lg, full, d.name).orders();
    std::vector<int> big, want_big;
    for (int o : orders) if (o > 20) big.push_back(o);
    for (int o : d.expected_orders) if (o > 20) want_big.push_back(o);
    std::ostringstream det;
    det << "orders {";
    for (size_t i = 0; i < orders.size(); ++i) det << (i ? "," : "") << orders[i];
    det << "} expected {";
    for (size_t i = 0; i < d.expected_orders.size(); ++i) det << (i ? "," : "") << d.expected_orders[i];
    det << '}';
    if (orders != d.expected_orders) det << " small-order difference";
    out.push_back(line(big == want_big, "quotients.delta." + d.name, det.str()));
  }
  return out;
}

Lines check_theorem(const VerifyOptions& opt) {
  Lines out;
  auto sweep = theorem_sweep(20, opt.max_order);
  for (const auto& spec : sweep) {
    DartGraph g = build(spec);
    long long o = meo(g);
    out.push_back(line(3 * o >= g.num_vertices(), "theorem.forward." + spec.str(),
                       "n=" + std::to_string(g.num_vertices()) + " meo=" + std::to_string(o)));
    auto res = classify(g, spec.str());
    auto want = spec_case(spec);
    bool ok = want && std::any_of(res.matches.begin(), res.matches.end(),
                                  [&](const TheoremInstance& t) { return t.verdict == *want; }) &&
              !res.theorem_violation && res.kappa == verdict_kappa(*want);
    out.push_back(line(ok, "theorem.roundtrip." + spec.str(), res.str()));
  }
  for (int m : {5, 7, 9, 11}) {
    CcvGraph c = delta12(m, 1, 2);
    long long o = rho_order(c);
    out.push_back(line(o == 2 * m && 3 * o >= 6 * m, "theorem.forward.Gamma12(" + std::to_string(m) + ",1,2)",
                       "rho order " + std::to_string(o)));
  }
  auto rep = report_eta_kappa(sweep);
  bool f_ok = rep.f == std::array<int, 3>{1, 2, 6};
  out.push_back(line(f_ok, "theorem.report-f", "f(1)=" + std::to_string(rep.f[0]) + " f(2)=" + std::to_string(rep.f[1]) +
                                                   " f(3)=" + std::to_string(rep.f[2])));
  auto small = classify(generalized_petersen(10, 2));
  out.push_back(line(small.verdict == Verdict::too_small && small.eta <= 3, "theorem.boundary.GP(10,2)", small.str()));
  return out;
}

}  // namespace

std::vector<LedgerLine> verify_all(const VerifyOptions& opt) {
  std::vector<std::future<Lines>> jobs;
  jobs.push_back(std::async(std::launch::async, check_covers, opt));
  jobs.push_back(std::async(std::launch::async, check_walks, opt));
  jobs.push_back(std::async(std::launch::async, check_families));
  jobs.push_back(std::async(std::launch::async, check_quotients, opt));
  jobs.push_back(std::async(std::launch::async, check_theorem, opt));
  Lines all;
  for (auto& j : jobs) {
    try {
      for (auto& l : j.get()) all.push_back(std::move(l));
    } catch (const std::exception& e) {
      all.push_back(line(false, "harness.exception", e.what()));
    }
  }
  std::stable_sort(all.begin(), all.end(), [](const LedgerLine& a, const LedgerLine& b) { return a.id < b.id; });
  return all;
}

void write_ledger(std::ostream& os, const VerifyOptions& opt, const std::vector<LedgerLine>& lines) {
  int fails = static_cast<int>(std::count_if(lines.begin(), lines.end(), [](const LedgerLine& l) { return !l.pass; }));
  os << "# cubvt verify-all seed=" << opt.seed << " max-order=" << opt.max_order << " max-m=" << opt.max_m
     << " checks=" << lines.size() << " failed=" << fails << '\n';
  for (const auto& l : lines) os << (l.pass ? "PASS " : "FAIL ") << l.id << ' ' << l.details << '\n';
}

}  // namespace cubvt
