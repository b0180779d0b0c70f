#pragma once

#include <string>
#include <vector>

#include "chowforge/lattice.hpp"

namespace chowforge {

enum class Ordering { less, equal, greater };

/// Higher rank is greater. At equal rank the descending element lists are
/// compared position by position; the set holding the smaller element at the
/// first difference is greater. If one list is a prefix of the other the
/// longer one is greater.
Ordering coatom_compare(int rank_a, ElementSet a, int rank_b, ElementSet b);
Ordering coatom_compare(const Matroid& m, ElementSet a, ElementSet b);

/// A total order on all elements of a lattice.
class CoatomOrder {
 public:
  CoatomOrder() = default;
  /// `ascending` lists every element id once, smallest first. Throws OrderNotTotal.
  CoatomOrder(const Lattice& l, std::vector<int> ascending);
  bool less(int a, int b) const { return pos_[static_cast<std::size_t>(a)] < pos_[static_cast<std::size_t>(b)]; }
  int position(int a) const { return pos_[static_cast<std::size_t>(a)]; }
  const std::vector<int>& ascending() const { return seq_; }

 private:
  std::vector<int> pos_, seq_;
};

/// The rank-then-descending-list order on a lattice of flats.
CoatomOrder coatom_order(const Lattice& l);

/// coat(F) sorted ascending in the order.
std::vector<int> sorted_coatoms(const Lattice& l, const CoatomOrder& ord, int f);
/// The |coat(F)|+1 prefixes of sorted_coatoms, shortest first.
std::vector<std::vector<int>> initial_segments(const Lattice& l, const CoatomOrder& ord, int f);
/// {G∧G' : G in segment} ∩ coat(G'), ascending in the order. Throws NotACoatomOfF
/// when G' is not in the segment.
std::vector<int> coat_restricted(const Lattice& l, const CoatomOrder& ord, const std::vector<int>& segment, int gp);

struct OrderReport {
  bool pass = true;
  std::string property;  // "(i)" or "(ii)"
  int f = -1, g = -1, gp = -1;
  long checked_pairs = 0, checked_segments = 0;
  std::string describe(const Lattice& l) const;
};

OrderReport verify_total_coatom_order(const Lattice& l, const CoatomOrder& ord);

}  // namespace chowforge
