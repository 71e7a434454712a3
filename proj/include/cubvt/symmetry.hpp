#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cubvt/dart_graph.hpp"
#include "cubvt/labelled.hpp"

namespace cubvt {

using Perm = std::vector<int>;

Perm identity_perm(int n);
Perm compose(const Perm& a, const Perm& b);  // (a o b)(v) = a(b(v))
Perm inverse(const Perm& p);
long long perm_order(const Perm& p);
// Longest cycle of p.
int longest_orbit(const Perm& p);
// All cycles of p have the same length and p is not the identity.
bool semiregular(const Perm& p);
bool is_automorphism(const DartGraph& g, const Perm& p);

constexpr long long kDefaultCap = 1'000'000;
constexpr int kMaxSymmetryVertices = 1024;

// Automorphism group of a simple graph as a base with strong generators.
class PermGroup {
 public:
  int degree = 0;
  std::vector<Perm> generators;
  std::vector<int> base;
  // transversal[i][k]: element mapping base[i] to orbit[i][k], fixing base[0..i-1]
  std::vector<std::vector<int>> orbit;
  std::vector<std::vector<Perm>> transversal;
  long double order = 1;
  long long cap = kDefaultCap;

  bool enumerable() const { return order <= static_cast<long double>(cap); }
  long long size() const;  // throws if not enumerable
  // Visits every element; throws if the group exceeds the cap.
  void for_each(const std::function<void(const Perm&)>& f) const;
  std::vector<Perm> elements() const;
};

PermGroup automorphism_group(const DartGraph& g, long long cap = kDefaultCap);
// Automorphisms preserving every vertex colour.
PermGroup automorphism_group(const DartGraph& g, const std::vector<int>& colours, long long cap = kDefaultCap);
std::optional<Perm> find_automorphism_mapping(const DartGraph& g, int v, int w);
std::optional<Perm> find_isomorphism(const DartGraph& a, const DartGraph& b);
bool is_isomorphic(const DartGraph& a, const DartGraph& b);
std::string canonical_form(const DartGraph& g);
// Canonical form that also distinguishes vertex colours.
std::string canonical_form(const DartGraph& g, const std::vector<int>& colours);

// Element-order data of Aut(g). Beyond the enumeration cap the group is split along a block
// system whose kernel is an elementary abelian 2-group: meo stays exact, while the largest
// semiregular order is searched by sampling each coset.
struct OrderStats {
  long long meo = 1;
  Perm meo_witness;
  long long semiregular_order = 1;  // largest order of a semiregular element found
  Perm semiregular_witness;
  bool enumerated = true;
  bool exact = true;  // semiregular_order is proven maximal
};

OrderStats order_stats(const DartGraph& g, const PermGroup& grp, uint64_t seed = 1);
OrderStats order_stats(const DartGraph& g, long long cap = kDefaultCap);

long long meo(const PermGroup& grp);
long long meo(const DartGraph& g, long long cap = kDefaultCap);
Rational eta(const DartGraph& g, long long cap = kDefaultCap);
bool is_semiregular(const DartGraph& g, const Perm& p);
int kappa(const PermGroup& grp);
int kappa(const DartGraph& g, long long cap = kDefaultCap);

// Orbit partition seeded with known automorphisms; used for fast transitivity tests.
bool is_vertex_transitive(const DartGraph& g, const std::vector<Perm>& known = {});
bool is_vertex_transitive(const PermGroup& grp);
bool is_arc_transitive(const DartGraph& g);
bool is_arc_transitive(const DartGraph& g, const PermGroup& grp);

struct CSignature {
  int c = 0;
  std::array<long long, 3> eps{};
  bool operator==(const CSignature&) const = default;
};

CSignature c_signature(const DartGraph& g, int v, int c);
bool is_cycle_regular(const DartGraph& g, int c);

}  // namespace cubvt
