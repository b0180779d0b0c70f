#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "chowforge/element_set.hpp"
#include "chowforge/scalar.hpp"

namespace chowforge {

/// Ground sets larger than this are rejected; the rank table has 2^n entries.
constexpr int kMaxMatroidGround = 20;

struct UniformBacking {
  int r = 0;
};
struct LinearBacking {
  std::vector<std::vector<Rational>> rows;  // columns are the elements
  FieldDescriptor field;
};
struct GraphicBacking {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // element i is edges[i-1]
};
struct BasesBacking {
  std::vector<ElementSet> bases;
};
struct FlatsBacking {
  std::vector<ElementSet> flats;
};
using Backing = std::variant<UniformBacking, LinearBacking, GraphicBacking, BasesBacking, FlatsBacking>;

const char* backing_name(const Backing& b);

class Matroid {
 public:
  static Matroid uniform(int r, int n);
  static Matroid linear(std::vector<std::vector<Rational>> rows, FieldDescriptor field = {});
  /// Vertices are 1..v; loops allowed.
  static Matroid graphic(int vertices, std::vector<std::pair<int, int>> edges);
  static Matroid from_bases(int n, std::vector<ElementSet> bases);
  static Matroid from_flats(int n, std::vector<ElementSet> flats);

  int ground_size() const { return n_; }
  ElementSet ground() const { return ElementSet::range(n_); }
  int rank() const { return rank_table_.back(); }
  int rank(ElementSet x) const;
  ElementSet closure(ElementSet x) const;
  bool is_flat(ElementSet x) const { return closure(x) == x; }
  bool is_independent(ElementSet x) const { return rank(x) == x.size(); }
  bool is_simple() const;
  /// Flats grouped by rank; each group sorted by ascending element list.
  const std::vector<std::vector<ElementSet>>& flats_by_rank() const { return flats_; }
  std::vector<ElementSet> flats() const;
  std::vector<ElementSet> bases() const;
  std::vector<ElementSet> hyperplanes() const;

  const Backing& backing() const { return backing_; }
  /// Original label of each element 1..n (index 0 unused).
  const std::vector<int>& labels() const { return labels_; }
  const std::string& name() const { return name_; }
  Matroid& set_name(std::string n) {
    name_ = std::move(n);
    return *this;
  }

 private:
  Matroid(int n, std::vector<std::uint8_t> ranks, Backing backing);
  static Matroid from_rank_table(int n, std::vector<std::uint8_t> ranks);
  void check(ElementSet x) const;

  int n_ = 0;
  std::vector<std::uint8_t> rank_table_;
  Backing backing_;
  std::vector<std::vector<ElementSet>> flats_;
  std::vector<int> labels_;
  std::string name_;

  friend Matroid simplify(const Matroid& m);
  friend Matroid restriction(const Matroid& m, ElementSet f);
  friend Matroid truncation(const Matroid& m);
  friend Matroid dual(const Matroid& m);
  friend Matroid free_coextension(const Matroid& m);
};

/// Simple matroid on the rank-one flats, ordered by least element.
Matroid simplify(const Matroid& m);
/// M|F relabelled to 1..|F| in increasing order.
Matroid restriction(const Matroid& m, ElementSet f);
/// rk X = min(rk_M X, rk M - 1).
Matroid truncation(const Matroid& m);
Matroid dual(const Matroid& m);
/// Ground E + {n+1}.
Matroid free_coextension(const Matroid& m);

/// Lexicographic comparison of sets by ascending element lists.
bool ascending_less(ElementSet a, ElementSet b);

}  // namespace chowforge
