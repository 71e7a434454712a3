#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubvt/dart_graph.hpp"
#include "cubvt/symmetry.hpp"
#include "cubvt/voltage.hpp"

namespace cubvt {

enum class Family { Prism, Moeb, GP, Haar, X, Y, SDW, Tutte8Cage, TruncatedTetrahedron, Delta12Cover };

struct FamilySpec {
  Family family;
  std::vector<int> params;
  std::string str() const;
  bool operator==(const FamilySpec&) const = default;
};

std::string family_name(Family f);
std::optional<Family> parse_family(const std::string& name);
// One line per family: name, parameters, domain.
std::vector<std::string> family_domains();

DartGraph prism(int m);
DartGraph moebius_ladder(int n);
DartGraph generalized_petersen(int m, int r);
DartGraph haar_graph(int n, int i, int j);
DartGraph x_graph(int k);
DartGraph y_graph(int k);
DartGraph sdw(int m, int t);
DartGraph tutte_8_cage();
DartGraph truncated_tetrahedron();
DartGraph build(const FamilySpec& spec);
// Order of build(spec) without building it.
int family_order(const FamilySpec& spec);

int sdw_vertex(int m, int t, int x, int i, int j);

// Base vertices u=0, v=1, a=2, b=3 with iota (2m, 2m, m, m).
CcvGraph delta12(int m, int r, int s);
DartGraph gamma12(int m, int r, int s);
// Image in gamma12(m,1,2) of every vertex of SDW(m,3).
Perm phi_iso(int m);

bool haar_is_circulant(int m, int x, int y);
// Affine-equivalent connection pair (r, s) with r | m and gcd(r, s) = 1, if any.
std::optional<std::pair<int, int>> haar_normalise(int m, int x, int y);

struct KnownProperties {
  std::optional<int> order;
  std::optional<Rational> eta;
  std::optional<int> kappa;
  std::optional<int> girth;
  std::optional<CSignature> signature;
  std::optional<long long> aut_order;
  std::optional<bool> arc_transitive;
};

KnownProperties known_properties(const FamilySpec& spec);

}  // namespace cubvt
