#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chowforge/element_set.hpp"
#include "chowforge/matroid.hpp"

namespace chowforge {

/// Finite lattice with dense element ids 0..size-1.
/// Lattices of flats also carry the flat of each element; ids are sorted by
/// rank, then by ascending element list.
class Lattice {
 public:
  static Lattice of_flats(const Matroid& m);
  /// covers are (lower, upper) pairs of element ids.
  static Lattice from_covers(std::vector<std::string> names, const std::vector<std::pair<int, int>>& covers);

  int size() const { return n_; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  bool leq(int a, int b) const { return leq_[static_cast<std::size_t>(a * n_ + b)] != 0; }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }
  int meet(int a, int b) const { return meet_[static_cast<std::size_t>(a * n_ + b)]; }
  int join(int a, int b) const { return join_[static_cast<std::size_t>(a * n_ + b)]; }
  /// Length of the longest chain from the bottom.
  int rank(int a) const { return rank_[static_cast<std::size_t>(a)]; }
  int height() const { return rank(top_); }
  bool is_graded() const { return graded_; }
  bool covers(int lower, int upper) const;
  const std::vector<int>& covers_up(int a) const { return up_[static_cast<std::size_t>(a)]; }
  /// Elements covered by a.
  const std::vector<int>& coatoms_of(int a) const { return down_[static_cast<std::size_t>(a)]; }
  const std::vector<int>& atoms() const { return up_[static_cast<std::size_t>(bottom_)]; }
  const std::vector<std::vector<int>>& by_rank() const { return by_rank_; }
  const std::string& name(int a) const { return names_[static_cast<std::size_t>(a)]; }
  int index_of_name(const std::string& s) const;

  bool has_sets() const { return !sets_.empty(); }
  ElementSet set(int a) const { return sets_[static_cast<std::size_t>(a)]; }
  /// Throws NotAFlat.
  int index_of(ElementSet s) const;
  std::optional<int> find(ElementSet s) const;
  const Matroid* matroid() const { return matroid_.get(); }

  /// Ids x with a <= x <= b, in id order. Throws NotComparable.
  std::vector<int> interval_ids(int a, int b) const;
  Lattice interval(int a, int b) const;
  /// Ids x with x >= a / x <= a.
  std::vector<int> up_set(int a) const;
  std::vector<int> down_set(int a) const;

 private:
  void finish();  // covers, ranks, meet/join tables
  int n_ = 0;
  int bottom_ = 0, top_ = 0;
  bool graded_ = true;
  std::vector<char> leq_;
  std::vector<int> meet_, join_, rank_;
  std::vector<std::vector<int>> up_, down_, by_rank_;
  std::vector<std::string> names_;
  std::vector<ElementSet> sets_;
  std::unordered_map<std::uint64_t, int> index_;
  std::shared_ptr<const Matroid> matroid_;
};

struct GeometricReport {
  bool atomic = true;
  bool semimodular = true;
  /// Element that is not a join of atoms, or the pair violating semimodularity.
  std::vector<int> witness;
  bool geometric() const { return atomic && semimodular; }
};

/// Atomic and (upper) semimodular: a∧b ⋖ a, b implies a, b ⋖ a∨b.
GeometricReport is_geometric(const Lattice& l);

/// Element name for reports: the flat as digits for flat lattices.
std::string element_label(const Lattice& l, int a);

}  // namespace chowforge
