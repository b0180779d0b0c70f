#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chowforge/lattice.hpp"
#include "chowforge/matroid.hpp"

namespace chowforge {

/// Simple matroids on 1..max_n elements up to isomorphism, from bases.
/// Sorted by ground size, rank, then canonical basis list. 17 for max_n = 5.
std::vector<Matroid> small_simple_matroids(int max_n = 5);

/// 4x5 matrix with columns e1, e2, e3, e1+e2+e3, e4.
Matroid figure2_matroid();
/// Cycle matroid of the 4-cycle.
Matroid cycle4_matroid();
/// 0 < a,b,c,d; e covers a,b; f covers c,d; 1 covers e,f.
Lattice figure3_lattice();

struct CorpusEntry {
  std::string name;
  Matroid matroid;
};

/// small_simple_matroids(5) then U56, fig2, MC4, B3.
std::vector<CorpusEntry> matroid_corpus();
/// Matroid by corpus name ("U3,3" style names also accepted).
std::optional<Matroid> corpus_matroid(const std::string& name);

}  // namespace chowforge
