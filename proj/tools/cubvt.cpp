#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "cubvt/classify.hpp"
#include "cubvt/families.hpp"
#include "cubvt/quotients.hpp"
#include "cubvt/symmetry.hpp"
#include "cubvt/voltage.hpp"

using namespace cubvt;

namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot read " + path);
  return is;
}

// Writes to the file, or to stdout when path is empty.
template <class F>
void emit(const std::string& path, F&& f) {
  if (path.empty()) {
    f(std::cout);
    return;
  }
  std::ofstream os(path);
  if (!os) throw Error("cannot write " + path);
  f(os);
}

std::string rat(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << '/' << r.denominator();
  return os.str();
}

std::vector<int> parse_params(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(std::stoi(tok));
  return out;
}

FamilySpec family_spec(const std::string& name, const std::string& params) {
  auto f = parse_family(name);
  if (!f) throw Error("unknown family " + name);
  return {*f, parse_params(params)};
}

void analyze(std::ostream& os, const DartGraph& g, long long cap) {
  os << "vertices " << g.num_vertices() << "\ndarts " << g.num_darts() << '\n';
  os << "simple " << is_simple(g) << "\nconnected " << is_connected(g) << "\ncubic " << is_cubic(g) << '\n';
  auto gi = girth(g);
  os << "girth " << (gi ? std::to_string(*gi) : "inf") << '\n';
  if (!is_simple(g)) return;
  PermGroup grp = automorphism_group(g, cap);
  os << "aut_order " << static_cast<double>(grp.order) << (grp.enumerable() ? "" : " generators-only") << '\n';
  bool vt = is_vertex_transitive(grp);
  os << "vertex_transitive " << vt << "\narc_transitive " << is_arc_transitive(g, grp) << '\n';
  OrderStats st = order_stats(g, grp);
  os << "meo " << st.meo << "\neta " << rat(Rational(g.num_vertices(), st.meo)) << '\n';
  os << "kappa " << g.num_vertices() / st.semiregular_order << (st.exact ? "" : " (upper bound)") << '\n';
  if (is_cubic(g) && gi)
    for (int c = *gi; c <= std::min(*gi + 2, kMaxCycleLength); ++c) {
      auto s = c_signature(g, 0, c);
      os << "signature " << s.c << ' ' << s.eps[0] << ' ' << s.eps[1] << ' ' << s.eps[2] << '\n';
    }
}

std::string opt_str(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

// Tab-separated expected-value record of a family member.
void known_row(std::ostream& os, const FamilySpec& s) {
  KnownProperties k = known_properties(s);
  os << s.str() << '\t' << opt_str(k.order) << '\t' << (k.eta ? rat(*k.eta) : "-") << '\t' << opt_str(k.kappa) << '\t'
     << opt_str(k.girth) << '\t';
  if (k.signature)
    os << k.signature->c << ':' << k.signature->eps[0] << ',' << k.signature->eps[1] << ',' << k.signature->eps[2];
  else
    os << '-';
  os << '\t' << (k.aut_order ? std::to_string(*k.aut_order) : "-") << '\t'
     << (k.arc_transitive ? (*k.arc_transitive ? "1" : "0") : "-") << '\n';
}

const std::vector<FamilySpec> kKnownTable = {
    {Family::Prism, {4}},  {Family::Prism, {5}},  {Family::Prism, {6}},      {Family::Moeb, {8}},
    {Family::GP, {5, 2}},  {Family::GP, {8, 3}},  {Family::GP, {10, 2}},     {Family::GP, {13, 5}},
    {Family::Haar, {7, 1, 3}}, {Family::Haar, {12, 1, 5}}, {Family::X, {9}}, {Family::Y, {3}},
    {Family::Y, {9}},      {Family::SDW, {3, 3}}, {Family::SDW, {4, 3}},     {Family::SDW, {6, 3}},
    {Family::SDW, {9, 3}}, {Family::SDW, {15, 3}}, {Family::Tutte8Cage, {}}, {Family::TruncatedTetrahedron, {}}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cubvt: cyclic generalised voltage graphs and cubic vertex-transitive graphs"};
  app.require_subcommand(1);
  std::string in, out, name, params, stage = "probe";
  uint64_t seed = 1;
  int max_m = 12, floor = 20, max_order = 120, min_order = 20;
  long long cap = kDefaultCap;
  bool list = false, fibres = false, known = false;

  auto with_in = [&](CLI::App* s) { s->add_option("--in", in, "input file")->required(); };
  auto with_out = [&](CLI::App* s) { s->add_option("--out", out, "output file (stdout if omitted)"); };
  auto with_cap = [&](CLI::App* s) { s->add_option("--cap", cap, "group enumeration cap"); };

  auto* cov = app.add_subcommand("cover", "build the cover of a ccv file");
  with_in(cov), with_out(cov);
  cov->add_flag("--fibres", fibres, "write fibre and rho data instead of the graph");

  auto* chk = app.add_subcommand("check-ccv", "validate a ccv file and test the ccv conditions");
  with_in(chk);

  auto* simp = app.add_subcommand("simplify", "rewrite a ccv file with simplified voltages");
  with_in(simp), with_out(simp);

  auto* ana = app.add_subcommand("analyze", "symmetry parameters of a dg file");
  with_in(ana), with_out(ana), with_cap(ana);

  auto* fam = app.add_subcommand("family", "build a named family member");
  fam->add_option("--name", name, "family name");
  fam->add_option("--params", params, "comma separated parameters");
  fam->add_flag("--list", list, "print the families and their domains");
  fam->add_flag("--known", known, "print expected-value records (for --name, or a reference table)");
  with_out(fam);

  auto* enq = app.add_subcommand("enumerate-quotients", "enumerate candidate quotients");
  enq->add_option("--stage", stage, "q0, diagram, artefacts or probe")
      ->check(CLI::IsMember({"q0", "diagram", "artefacts", "probe"}));
  enq->add_option("--max-m", max_m, "probe bound on m");
  enq->add_option("--out", out, "directory for lg files and the provenance ledger");

  auto* prb = app.add_subcommand("probe-quotient", "search vertex-transitive covers of an lg file");
  with_in(prb), with_out(prb);
  prb->add_option("--max-m", max_m, "bound on m");
  prb->add_option("--floor", floor, "only report covers above this order");

  auto* cls = app.add_subcommand("classify", "classify a cubic vertex-transitive graph");
  cls->add_option("--in", in, "dg file");
  cls->add_option("--name", name, "family name instead of a file");
  cls->add_option("--params", params, "family parameters");
  with_out(cls), with_cap(cls);

  auto* rep = app.add_subcommand("report", "eta/kappa table over the theorem families");
  rep->add_option("--min-order", min_order, "exclusive lower order bound");
  rep->add_option("--max-order", max_order, "inclusive upper order bound");
  with_out(rep), with_cap(rep);

  auto* ver = app.add_subcommand("verify-all", "run every check and write a PASS/FAIL ledger");
  ver->add_option("--max-order", max_order, "upper order bound for theorem sweeps");
  ver->add_option("--max-m", max_m, "bound on m for cover and probe checks");
  ver->add_option("--seed", seed, "seed for sampled checks");
  with_out(ver);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cov) {
      auto is = open_in(in);
      CcvGraph c = read_ccv(is);
      CoverGraph cg = cover(c);
      emit(out, [&](std::ostream& os) { fibres ? write_fibres(os, cg) : write_dg(os, cg.graph); });
      if (!out.empty() && !fibres) {
        std::ofstream side(out + ".fibres");
        write_fibres(side, cg);
      }
    } else if (*chk) {
      auto is = open_in(in);
      CcvGraph c = read_ccv(is);
      if (auto e = validate_ccv(c); !e.empty()) {
        std::cout << "invalid: " << e << '\n';
        return 1;
      }
      SpanningTree t = spanning_tree(c.base);
      if (!tree_normalised(c, t)) {
        std::cout << "not tree-normalised; checking the simplified voltage\n";
        c = simplify_voltage(c);
      }
      auto r = is_ccv(c, t);
      std::cout << "simplified " << is_simplified(c, t) << '\n';
      if (r) std::cout << "ccv ok\n";
      else std::cout << "ccv fails condition " << r.failed << ": " << r.detail << '\n';
      return r ? 0 : 1;
    } else if (*simp) {
      auto is = open_in(in);
      CcvGraph c = simplify_voltage(read_ccv(is));
      emit(out, [&](std::ostream& os) { write_ccv(os, c); });
    } else if (*ana) {
      auto is = open_in(in);
      DartGraph g = read_dg(is);
      emit(out, [&](std::ostream& os) { analyze(os, g, cap); });
    } else if (*fam) {
      if (list) {
        for (const auto& l : family_domains()) std::cout << l << '\n';
        return 0;
      }
      if (known) {
        emit(out, [&](std::ostream& os) {
          os << "spec\torder\teta\tkappa\tgirth\tsignature\taut_order\tarc_transitive\n";
          if (!name.empty()) known_row(os, family_spec(name, params));
          else
            for (const auto& s : kKnownTable) known_row(os, s);
        });
        return 0;
      }
      DartGraph g = build(family_spec(name, params));
      emit(out, [&](std::ostream& os) { write_dg(os, g); });
    } else if (*enq) {
      CandidateSet cs = enumerate_Q0();
      if (stage != "q0") cs = filter_diagram(cs);
      if (stage == "artefacts" || stage == "probe") cs = filter_artefacts(cs);
      if (stage == "probe") {
        ProbeOptions po;
        po.max_m = max_m;
        cs = compute_Q(cs, po);
      }
      std::cout << stage << ' ' << cs.size() << '\n';
      if (!out.empty()) {
        std::filesystem::create_directories(out);
        for (const auto& c : cs.members) {
          std::ofstream os(std::filesystem::path(out) / (c.id + ".lg"));
          write_lg(os, c.lg);
        }
        std::ofstream os(std::filesystem::path(out) / "provenance.txt");
        write_provenance(os, cs);
      }
    } else if (*prb) {
      auto is = open_in(in);
      LabelledGraph lg = read_lg(is);
      ProbeOptions po;
      po.max_m = max_m;
      po.order_floor = floor;
      ProbeReport r = probe_candidate(lg, po, in);
      emit(out, [&](std::ostream& os) {
        os << "box " << r.box << "\ntested " << r.tested << "\ncovers " << r.covers << "\nhits " << r.hits.size() << '\n';
        for (const auto& h : r.hits) {
          os << "hit m=" << h.m << " order=" << h.order << " zeta=";
          for (size_t i = 0; i < h.zeta.size(); ++i) os << (i ? "," : "") << h.zeta[i];
          os << '\n';
        }
      });
    } else if (*cls) {
      DartGraph g;
      std::string id = in;
      if (!name.empty()) {
        FamilySpec s = family_spec(name, params);
        g = build(s);
        id = s.str();
      } else {
        auto is = open_in(in);
        g = read_dg(is);
      }
      auto r = classify(g, id, cap);
      emit(out, [&](std::ostream& os) { os << r.str() << '\n'; });
      return r.theorem_violation ? 2 : 0;
    } else if (*rep) {
      auto r = report_eta_kappa(theorem_sweep(min_order, max_order), cap);
      emit(out, [&](std::ostream& os) {
        os << "graph order eta kappa girth signature\n";
        for (const auto& row : r.rows) {
          os << row.name << ' ' << row.order << ' ' << rat(row.eta) << ' ' << row.kappa << ' '
             << (row.girth ? std::to_string(*row.girth) : "inf") << " (" << row.signature.eps[0] << ','
             << row.signature.eps[1] << ',' << row.signature.eps[2] << ")\n";
        }
        for (int k = 0; k < 3; ++k) os << "f(" << k + 1 << ") = " << r.f[k] << '\n';
      });
    } else if (*ver) {
      VerifyOptions vo;
      vo.max_order = max_order;
      vo.max_m = max_m;
      vo.seed = seed;
      auto lines = verify_all(vo);
      emit(out, [&](std::ostream& os) { write_ledger(os, vo, lines); });
      for (const auto& l : lines)
        if (!l.pass) return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
