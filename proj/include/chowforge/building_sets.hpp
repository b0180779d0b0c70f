#pragma once

#include <string>
#include <vector>

#include "chowforge/graded_quotient.hpp"
#include "chowforge/lattice.hpp"
#include "chowforge/polynomial.hpp"

namespace chowforge {

/// Subset of L \ {0̂} (element ids, ascending). factors[x] = max G_{<=x}.
struct BuildingSet {
  std::vector<int> elements;
  std::vector<std::vector<int>> factors;

  bool contains(int x) const;
};

struct BuildingSetReport {
  bool ok = true;
  int witness = -1;  // element whose lower interval fails to factor
  std::string reason;
};

/// Checks that the join map prod [0̂, G_i] -> [0̂, x] is a poset isomorphism for every x.
/// Throws NotAtomic.
BuildingSetReport is_building_set(const Lattice& l, const std::vector<int>& g);
/// Throws NotABuildingSet or NotAtomic.
BuildingSet make_building_set(const Lattice& l, std::vector<int> g);
/// Elements whose lower interval is not a nontrivial product.
BuildingSet minimal_building_set(const Lattice& l);
BuildingSet maximal_building_set(const Lattice& l);
/// True when [0̂, x] is the product of [0̂, a] and [0̂, b] for some a, b > 0̂ under the join map.
bool is_reducible(const Lattice& l, int x);

/// Minimal non-faces: antichains of size >= 2 with join in G, minimal under inclusion.
struct NestedComplex {
  std::vector<std::vector<int>> minimal_nonfaces;
  bool is_nested(const std::vector<int>& s) const;
};
NestedComplex nested_complex(const Lattice& l, const BuildingSet& g);

/// D(L, G) with the atom forms eliminated: x_A = -sum_{G > A} x_G.
/// Variables are the non-atoms of G, rank ascending.
struct DlgPresentation {
  PresentedAlgebra algebra;
  std::vector<int> variable_elements;
  NestedComplex complex;
};
DlgPresentation dlg_presentation(const Lattice& l, const BuildingSet& g, FieldDescriptor field = {});

/// Every building set of l (subsets of L \ {0̂} passing the check). Exponential; small lattices only.
std::vector<BuildingSet> all_building_sets(const Lattice& l);

/// Element ids from labels such as "1,2,3,123" or "a,b,e".
std::vector<int> parse_elements(const Lattice& l, const std::string& text);

}  // namespace chowforge
