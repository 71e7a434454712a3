#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubvt/families.hpp"
#include "cubvt/symmetry.hpp"

namespace cubvt {

enum class Verdict {
  case_1a, case_1b, case_2a, case_2b, case_2c,
  case_3a, case_3b, case_3c, case_3d, case_4,
  not_covered, not_cubic_vt, too_small
};

std::string verdict_name(Verdict v);
// kappa the theorem attaches to a case; 0 for the non-case verdicts.
int verdict_kappa(Verdict v);

struct TheoremInstance {
  Verdict verdict;
  FamilySpec spec;
};

// Every instance of the theorem's families at order n, in case order. Haar pairs that
// give isomorphic graphs are kept once (the first in lexicographic order).
std::vector<TheoremInstance> theorem_instances(int n);
// Same, without the Haar dedupe: the literal parameter sets.
std::vector<TheoremInstance> theorem_specs(int n);
// The case a spec belongs to, if it is one of the theorem's parameter sets.
std::optional<Verdict> spec_case(const FamilySpec& spec);

struct ClassificationResult {
  std::string id;
  Verdict verdict = Verdict::not_cubic_vt;
  int n = 0;
  bool vertex_transitive = false;
  long long meo = 0;
  Rational eta{0};
  int kappa = 0;
  std::vector<TheoremInstance> matches;
  std::optional<FamilySpec> witness_family;
  Perm witness_iso;   // graph -> build(witness_family)
  Perm witness_auto;  // automorphism of order meo
  // eta <= 3 and n > 20 but no family matched, or eta > 3 and some family matched.
  bool theorem_violation = false;
  std::string str() const;
};

ClassificationResult classify(const DartGraph& g, const std::string& id = "", long long cap = kDefaultCap);

struct EtaKappaRow {
  std::string name;
  int order = 0;
  Rational eta{0};
  int kappa = 0;
  std::optional<int> girth;
  CSignature signature;
};

struct EtaKappaReport {
  std::vector<EtaKappaRow> rows;
  // f[r-1]: max kappa over rows with eta <= r, r = 1, 2, 3; 0 when no row qualifies.
  std::array<int, 3> f{};
};

EtaKappaReport report_eta_kappa(const std::vector<FamilySpec>& sweep, long long cap = kDefaultCap);
// Theorem family specs with min_order < n <= max_order.
std::vector<FamilySpec> theorem_sweep(int min_order, int max_order);

struct LedgerLine {
  bool pass = false;
  std::string id;
  std::string details;
};

struct VerifyOptions {
  int max_order = 120;
  int max_m = 12;
  uint64_t seed = 1;
  int walks = 1000;
};

// Sorted by check id.
std::vector<LedgerLine> verify_all(const VerifyOptions& opt = {});
void write_ledger(std::ostream& os, const VerifyOptions& opt, const std::vector<LedgerLine>& lines);

}  // namespace cubvt
