#include "chowforge/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace chowforge {

Lattice Lattice::of_flats(const Matroid& m) {
  Lattice l;
  l.matroid_ = std::make_shared<const Matroid>(m);
  l.sets_ = m.flats();
  l.n_ = static_cast<int>(l.sets_.size());
  for (int i = 0; i < l.n_; ++i) {
    l.index_[l.sets_[static_cast<std::size_t>(i)].bits()] = i;
    l.names_.push_back(l.sets_[static_cast<std::size_t>(i)].to_string());
  }
  std::size_t nn = static_cast<std::size_t>(l.n_) * static_cast<std::size_t>(l.n_);
  l.leq_.assign(nn, 0);
  l.meet_.assign(nn, 0);
  l.join_.assign(nn, 0);
  for (int a = 0; a < l.n_; ++a)
    for (int b = 0; b < l.n_; ++b) {
      ElementSet x = l.sets_[static_cast<std::size_t>(a)], y = l.sets_[static_cast<std::size_t>(b)];
      std::size_t k = static_cast<std::size_t>(a * l.n_ + b);
      l.leq_[k] = x.is_subset_of(y);
      l.meet_[k] = l.index_.at((x & y).bits());
      l.join_[k] = l.index_.at(m.closure(x | y).bits());
    }
  l.bottom_ = 0;
  l.top_ = l.n_ - 1;
  l.finish();
  return l;
}

Lattice Lattice::from_covers(std::vector<std::string> names, const std::vector<std::pair<int, int>>& covers) {
  Lattice l;
  l.n_ = static_cast<int>(names.size());
  if (l.n_ == 0) throw Error(ErrorKind::NotALattice, "empty poset");
  l.names_ = std::move(names);
  int n = l.n_;
  std::vector<std::vector<int>> up(static_cast<std::size_t>(n));
  for (auto [a, b] : covers) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) throw Error(ErrorKind::MalformedSpec, "bad cover pair");
    up[static_cast<std::size_t>(a)].push_back(b);
  }
  l.leq_.assign(static_cast<std::size_t>(n * n), 0);
  for (int a = 0; a < n; ++a) {
    std::vector<int> stack{a};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (l.leq_[static_cast<std::size_t>(a * n + x)]) continue;
      l.leq_[static_cast<std::size_t>(a * n + x)] = 1;
      for (int y : up[static_cast<std::size_t>(x)]) stack.push_back(y);
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (l.leq(a, b) && l.leq(b, a))
        throw Error(ErrorKind::NotALattice, "cycle through " + l.names_[static_cast<std::size_t>(a)] + " and " + l.names_[static_cast<std::size_t>(b)]);
  l.meet_.assign(static_cast<std::size_t>(n * n), -1);
  l.join_.assign(static_cast<std::size_t>(n * n), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int glb = -1, lub = -1;
      for (int c = 0; c < n; ++c) {
        if (l.leq(c, a) && l.leq(c, b)) {
          bool greatest = true;
          for (int d = 0; d < n && greatest; ++d)
            if (l.leq(d, a) && l.leq(d, b) && !l.leq(d, c)) greatest = false;
          if (greatest) glb = c;
        }
        if (l.leq(a, c) && l.leq(b, c)) {
          bool least = true;
          for (int d = 0; d < n && least; ++d)
            if (l.leq(a, d) && l.leq(b, d) && !l.leq(c, d)) least = false;
          if (least) lub = c;
        }
      }
      if (glb < 0 || lub < 0)
        throw Error(ErrorKind::NotALattice, "no unique " + std::string(glb < 0 ? "meet" : "join") + " for " +
                                                l.names_[static_cast<std::size_t>(a)] + ", " + l.names_[static_cast<std::size_t>(b)]);
      l.meet_[static_cast<std::size_t>(a * n + b)] = glb;
      l.join_[static_cast<std::size_t>(a * n + b)] = lub;
    }
  l.bottom_ = l.meet(0, 0);
  l.top_ = l.join(0, 0);
  for (int a = 0; a < n; ++a) {
    l.bottom_ = l.meet(l.bottom_, a);
    l.top_ = l.join(l.top_, a);
  }
  l.finish();
  return l;
}

void Lattice::finish() {
  int n = n_;
  up_.assign(static_cast<std::size_t>(n), {});
  down_.assign(static_cast<std::size_t>(n), {});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!less(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < n && cover; ++c)
        if (less(a, c) && less(c, b)) cover = false;
      if (cover) {
        up_[static_cast<std::size_t>(a)].push_back(b);
        down_[static_cast<std::size_t>(b)].push_back(a);
      }
    }
  // longest chain from the bottom, processing elements by number of elements below
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> below(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (less(b, a)) ++below[static_cast<std::size_t>(a)];
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return below[static_cast<std::size_t>(x)] < below[static_cast<std::size_t>(y)]; });
  rank_.assign(static_cast<std::size_t>(n), 0);
  for (int a : order)
    for (int b : down_[static_cast<std::size_t>(a)]) rank_[static_cast<std::size_t>(a)] = std::max(rank_[static_cast<std::size_t>(a)], rank_[static_cast<std::size_t>(b)] + 1);
  graded_ = true;
  for (int a = 0; a < n; ++a)
    for (int b : up_[static_cast<std::size_t>(a)])
      if (rank_[static_cast<std::size_t>(b)] != rank_[static_cast<std::size_t>(a)] + 1) graded_ = false;
  by_rank_.assign(static_cast<std::size_t>(rank_[static_cast<std::size_t>(top_)] + 1), {});
  for (int a = 0; a < n; ++a) by_rank_[static_cast<std::size_t>(rank_[static_cast<std::size_t>(a)])].push_back(a);
}

bool Lattice::covers(int lower, int upper) const {
  const auto& u = up_[static_cast<std::size_t>(lower)];
  return std::find(u.begin(), u.end(), upper) != u.end();
}

int Lattice::index_of_name(const std::string& s) const {
  for (int a = 0; a < n_; ++a)
    if (names_[static_cast<std::size_t>(a)] == s) return a;
  throw Error(ErrorKind::NotAFlat, "no element named '" + s + "'");
}

int Lattice::index_of(ElementSet s) const {
  auto it = index_.find(s.bits());
  if (it == index_.end()) throw Error(ErrorKind::NotAFlat, s.to_string() + " is not a flat");
  return it->second;
}

std::optional<int> Lattice::find(ElementSet s) const {
  auto it = index_.find(s.bits());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> Lattice::interval_ids(int a, int b) const {
  if (!leq(a, b)) throw Error(ErrorKind::NotComparable, name(a) + " is not below " + name(b));
  std::vector<int> out;
  for (int x = 0; x < n_; ++x)
    if (leq(a, x) && leq(x, b)) out.push_back(x);
  return out;
}

std::vector<int> Lattice::up_set(int a) const {
  std::vector<int> out;
  for (int x = 0; x < n_; ++x)
    if (leq(a, x)) out.push_back(x);
  return out;
}

std::vector<int> Lattice::down_set(int a) const {
  std::vector<int> out;
  for (int x = 0; x < n_; ++x)
    if (leq(x, a)) out.push_back(x);
  return out;
}

Lattice Lattice::interval(int a, int b) const {
  std::vector<int> ids = interval_ids(a, b);
  std::vector<int> local(static_cast<std::size_t>(n_), -1);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    local[static_cast<std::size_t>(ids[i])] = static_cast<int>(i);
    names.push_back(name(ids[i]));
  }
  std::vector<std::pair<int, int>> cov;
  for (int x : ids)
    for (int y : up_[static_cast<std::size_t>(x)])
      if (local[static_cast<std::size_t>(y)] >= 0) cov.emplace_back(local[static_cast<std::size_t>(x)], local[static_cast<std::size_t>(y)]);
  Lattice out = from_covers(std::move(names), cov);
  if (has_sets()) {
    for (int x : ids) {
      out.sets_.push_back(set(x));
      out.index_[set(x).bits()] = local[static_cast<std::size_t>(x)];
    }
  }
  return out;
}

GeometricReport is_geometric(const Lattice& l) {
  GeometricReport rep;
  const auto& atoms = l.atoms();
  for (int x = 0; x < l.size(); ++x) {
    int j = l.bottom();
    for (int a : atoms)
      if (l.leq(a, x)) j = l.join(j, a);
    if (j != x) {
      rep.atomic = false;
      rep.witness = {x};
      return rep;
    }
  }
  for (int a = 0; a < l.size(); ++a)
    for (int b = a + 1; b < l.size(); ++b) {
      int m = l.meet(a, b), j = l.join(a, b);
      if (l.covers(m, a) && l.covers(m, b) && !(l.covers(a, j) && l.covers(b, j))) {
        rep.semimodular = false;
        rep.witness = {a, b};
        return rep;
      }
    }
  return rep;
}

std::string element_label(const Lattice& l, int a) {
  if (l.has_sets()) return l.set(a).empty() ? "{}" : l.set(a).to_string();
  return l.name(a);
}

}  // namespace chowforge
