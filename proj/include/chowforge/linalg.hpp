#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <queue>
#include <utility>
#include <vector>

#include "chowforge/scalar.hpp"

namespace chowforge {

/// Sparse vector: (index, value) pairs sorted by index, no zero values.
template <class K>
using SparseVec = std::vector<std::pair<int, K>>;

template <class K>
SparseVec<K> sparse_from_dense(const std::vector<K>& d) {
  SparseVec<K> out;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (!is_zero(d[i])) out.emplace_back(static_cast<int>(i), d[i]);
  return out;
}

template <class K>
std::vector<K> dense_from_sparse(const SparseVec<K>& s, int n) {
  std::vector<K> out(static_cast<std::size_t>(n), K(0));
  for (const auto& [i, v] : s) out[static_cast<std::size_t>(i)] = v;
  return out;
}

/// a + c*b
template <class K>
SparseVec<K> axpy(const SparseVec<K>& a, const K& c, const SparseVec<K>& b) {
  SparseVec<K> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      K v = c * b[j].second;
      if (!is_zero(v)) out.emplace_back(b[j].first, v);
      ++j;
    } else {
      K v = a[i].second + c * b[j].second;
      if (!is_zero(v)) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

template <class K>
SparseVec<K> scale(const SparseVec<K>& a, const K& c) {
  SparseVec<K> out;
  if (is_zero(c)) return out;
  out.reserve(a.size());
  for (const auto& [i, v] : a) out.emplace_back(i, v * c);
  return out;
}

/// Builds a sparse vector from unsorted, possibly repeated entries.
template <class K>
SparseVec<K> sparse_collect(std::vector<std::pair<int, K>> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  SparseVec<K> out;
  for (auto& e : entries) {
    if (!out.empty() && out.back().first == e.first) {
      out.back().second += e.second;
      if (is_zero(out.back().second)) out.pop_back();
    } else if (!is_zero(e.second)) {
      out.push_back(std::move(e));
    }
  }
  return out;
}

/// Incremental row echelon form. Pivots are the leftmost surviving column,
/// so columns listed first are eliminated first.
template <class K>
class RowEchelon {
 public:
  explicit RowEchelon(int ncols = 0) : ncols_(ncols), pivot_row_(static_cast<std::size_t>(ncols), -1) {}

  int ncols() const { return ncols_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  bool is_pivot(int c) const { return pivot_row_[static_cast<std::size_t>(c)] >= 0; }
  int pivot_row(int c) const { return pivot_row_[static_cast<std::size_t>(c)]; }
  const SparseVec<K>& row(int r) const { return rows_[static_cast<std::size_t>(r)]; }
  int pivot_col(int r) const { return rows_[static_cast<std::size_t>(r)].front().first; }

  /// Removes every pivot-column entry of v.
  SparseVec<K> reduce(const SparseVec<K>& v) const {
    bool touches = false;
    for (const auto& e : v)
      if (is_pivot(e.first)) {
        touches = true;
        break;
      }
    if (!touches) return v;
    ensure_scratch();
    std::priority_queue<int, std::vector<int>, std::greater<int>> heap;
    for (const auto& [i, x] : v) {
      acc_[static_cast<std::size_t>(i)] = x;
      mark_[static_cast<std::size_t>(i)] = 1;
      heap.push(i);
    }
    SparseVec<K> out;
    while (!heap.empty()) {
      int c = heap.top();
      heap.pop();
      auto cu = static_cast<std::size_t>(c);
      mark_[cu] = 0;
      if (is_zero(acc_[cu])) continue;
      int pr = pivot_row_[cu];
      if (pr < 0) {
        out.emplace_back(c, acc_[cu]);
        acc_[cu] = K(0);
        continue;
      }
      K f = acc_[cu];
      for (const auto& [j, y] : rows_[static_cast<std::size_t>(pr)]) {
        auto ju = static_cast<std::size_t>(j);
        acc_[ju] -= f * y;
        if (!mark_[ju] && j != c) {
          mark_[ju] = 1;
          heap.push(j);
        }
      }
      acc_[cu] = K(0);
    }
    return out;
  }

  /// Returns true when v was independent of the current rows.
  bool insert(const SparseVec<K>& v) {
    SparseVec<K> r = reduce(v);
    if (r.empty()) return false;
    K inv = inverse(r.front().second);
    for (auto& e : r) e.second *= inv;
    pivot_row_[static_cast<std::size_t>(r.front().first)] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(r));
    return true;
  }

  bool contains(const SparseVec<K>& v) const { return reduce(v).empty(); }

  /// Makes every row free of other rows' pivot columns.
  void make_reduced(const std::function<void()>& tick = {}) {
    for (std::size_t k = rows_.size(); k-- > 0;) {
      if (tick && k % 64 == 0) tick();
      SparseVec<K> tail(rows_[k].begin() + 1, rows_[k].end());
      SparseVec<K> red = reduce(tail);
      SparseVec<K> full;
      full.reserve(red.size() + 1);
      full.push_back(rows_[k].front());
      for (auto& e : red) full.push_back(std::move(e));
      rows_[k] = std::move(full);
    }
  }

  std::vector<int> pivot_columns() const {
    std::vector<int> out;
    for (int c = 0; c < ncols_; ++c)
      if (is_pivot(c)) out.push_back(c);
    return out;
  }

 private:
  void ensure_scratch() const {
    if (acc_.size() != static_cast<std::size_t>(ncols_)) {
      acc_.assign(static_cast<std::size_t>(ncols_), K(0));
      mark_.assign(static_cast<std::size_t>(ncols_), 0);
    }
  }

  int ncols_;
  std::vector<int> pivot_row_;
  std::vector<SparseVec<K>> rows_;
  mutable std::vector<K> acc_;
  mutable std::vector<char> mark_;
};

/// Basis of {c : sum c_r images[r] = 0} for a map with `n` domain vectors.
/// The second member is the rank of the map.
template <class K>
std::pair<std::vector<SparseVec<K>>, int> kernel_basis(const std::vector<SparseVec<K>>& images, int codim,
                                                       const std::function<void()>& tick = {}) {
  int n = static_cast<int>(images.size());
  std::vector<std::vector<std::pair<int, K>>> cols(static_cast<std::size_t>(codim));
  for (int r = 0; r < n; ++r)
    for (const auto& [c, v] : images[static_cast<std::size_t>(r)]) cols[static_cast<std::size_t>(c)].emplace_back(r, v);
  RowEchelon<K> ech(n);
  long done = 0;
  for (auto& col : cols) {
    ech.insert(col);  // entries already sorted by r
    if (tick && ++done % 64 == 0) tick();
  }
  ech.make_reduced(tick);
  std::vector<SparseVec<K>> ker(static_cast<std::size_t>(n));
  for (int k = 0; k < ech.rank(); ++k) {
    const auto& row = ech.row(k);
    int p = row.front().first;
    for (std::size_t t = 1; t < row.size(); ++t) ker[static_cast<std::size_t>(row[t].first)].emplace_back(p, -row[t].second);
  }
  std::vector<SparseVec<K>> out;
  for (int f = 0; f < n; ++f) {
    if (ech.is_pivot(f)) continue;
    auto v = std::move(ker[static_cast<std::size_t>(f)]);
    v.emplace_back(f, K(1));
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    out.push_back(std::move(v));
  }
  return {std::move(out), ech.rank()};
}

template <class K>
int rank_of(const std::vector<SparseVec<K>>& vecs, int ncols) {
  RowEchelon<K> ech(ncols);
  for (const auto& v : vecs) ech.insert(v);
  return ech.rank();
}

}  // namespace chowforge
