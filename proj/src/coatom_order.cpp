#include "chowforge/coatom_order.hpp"

#include <algorithm>

namespace chowforge {

Ordering coatom_compare(int rank_a, ElementSet a, int rank_b, ElementSet b) {
  if (rank_a != rank_b) return rank_a > rank_b ? Ordering::greater : Ordering::less;
  auto x = a.descending(), y = b.descending();
  std::size_t m = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (x[i] == y[i]) continue;
    return x[i] < y[i] ? Ordering::greater : Ordering::less;
  }
  if (x.size() == y.size()) return Ordering::equal;
  return x.size() > y.size() ? Ordering::greater : Ordering::less;
}

Ordering coatom_compare(const Matroid& m, ElementSet a, ElementSet b) {
  return coatom_compare(m.rank(a), a, m.rank(b), b);
}

CoatomOrder::CoatomOrder(const Lattice& l, std::vector<int> ascending) : pos_(static_cast<std::size_t>(l.size()), -1), seq_(std::move(ascending)) {
  if (static_cast<int>(seq_.size()) != l.size()) throw Error(ErrorKind::OrderNotTotal, "order does not list every element");
  for (std::size_t i = 0; i < seq_.size(); ++i) {
    int a = seq_[i];
    if (a < 0 || a >= l.size() || pos_[static_cast<std::size_t>(a)] >= 0)
      throw Error(ErrorKind::OrderNotTotal, "order repeats or misses an element");
    pos_[static_cast<std::size_t>(a)] = static_cast<int>(i);
  }
}

CoatomOrder coatom_order(const Lattice& l) {
  if (!l.has_sets()) throw Error(ErrorKind::OrderNotTotal, "comparator needs a lattice of flats");
  std::vector<int> ids(static_cast<std::size_t>(l.size()));
  for (int i = 0; i < l.size(); ++i) ids[static_cast<std::size_t>(i)] = i;
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    return coatom_compare(l.rank(a), l.set(a), l.rank(b), l.set(b)) == Ordering::less;
  });
  return CoatomOrder(l, ids);
}

std::vector<int> sorted_coatoms(const Lattice& l, const CoatomOrder& ord, int f) {
  std::vector<int> c = l.coatoms_of(f);
  std::sort(c.begin(), c.end(), [&](int a, int b) { return ord.less(a, b); });
  return c;
}

std::vector<std::vector<int>> initial_segments(const Lattice& l, const CoatomOrder& ord, int f) {
  std::vector<int> c = sorted_coatoms(l, ord, f);
  std::vector<std::vector<int>> out;
  for (std::size_t m = 0; m <= c.size(); ++m) out.emplace_back(c.begin(), c.begin() + static_cast<long>(m));
  return out;
}

std::vector<int> coat_restricted(const Lattice& l, const CoatomOrder& ord, const std::vector<int>& segment, int gp) {
  if (std::find(segment.begin(), segment.end(), gp) == segment.end())
    throw Error(ErrorKind::NotACoatomOfF, element_label(l, gp) + " is not in the segment");
  std::vector<int> out;
  for (int g : segment) {
    int m = l.meet(g, gp);
    if (l.covers(m, gp) && std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [&](int a, int b) { return ord.less(a, b); });
  return out;
}

OrderReport verify_total_coatom_order(const Lattice& l, const CoatomOrder& ord) {
  OrderReport rep;
  for (int f = 0; f < l.size(); ++f) {
    std::vector<int> coat = sorted_coatoms(l, ord, f);
    // (i)
    for (std::size_t j = 0; j < coat.size(); ++j)
      for (std::size_t i = 0; i < j; ++i) {
        int g = coat[i], gp = coat[j];
        ++rep.checked_pairs;
        int gg = l.meet(g, gp);
        bool found = false;
        for (std::size_t k = 0; k < j && !found; ++k) {
          int gpp = coat[k];
          if (l.covers(l.meet(gp, gpp), gp) && l.leq(gg, gpp)) found = true;
        }
        if (!found) {
          rep.pass = false;
          rep.property = "(i)";
          rep.f = f;
          rep.g = g;
          rep.gp = gp;
          return rep;
        }
      }
    // (ii)
    for (std::size_t m = 1; m <= coat.size(); ++m) {
      ++rep.checked_segments;
      std::vector<int> seg(coat.begin(), coat.begin() + static_cast<long>(m));
      int gp = seg.back();
      std::vector<int> cr = coat_restricted(l, ord, seg, gp);
      std::vector<int> below = sorted_coatoms(l, ord, gp);
      bool prefix = cr.size() <= below.size() && std::equal(cr.begin(), cr.end(), below.begin());
      if (!prefix) {
        rep.pass = false;
        rep.property = "(ii)";
        rep.f = f;
        rep.gp = gp;
        return rep;
      }
    }
  }
  return rep;
}

std::string OrderReport::describe(const Lattice& l) const {
  if (pass) return "pass (" + std::to_string(checked_pairs) + " pairs, " + std::to_string(checked_segments) + " segments)";
  std::string s = "fail " + property + " at F=" + element_label(l, f);
  if (g >= 0) s += " G=" + element_label(l, g);
  if (gp >= 0) s += " G'=" + element_label(l, gp);
  return s;
}

}  // namespace chowforge
