#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "chowforge/graded_quotient.hpp"

namespace chowforge {

/// Graded Betti numbers beta[i][j] of the residue field, for i <= i_max, j <= j_max.
struct BettiTable {
  int i_max = 0;
  int j_max = 0;
  std::vector<std::vector<long>> beta;

  long at(int i, int j) const {
    if (i < 0 || j < 0 || i > i_max || j > j_max) return 0;
    return beta[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  long total(int i) const;
  /// First (i, j) with j != i and beta nonzero, scanning i upward.
  std::optional<std::pair<int, int>> first_nonlinear() const;
  /// Macaulay2-style grid: rows j - i, columns i.
  std::string to_text() const;
};

struct BettiLimits {
  long max_domain = 4'000'000;  // largest (F_i)_t we agree to echelonize
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

namespace detail {

/// Free module over A with generators of nondecreasing degree.
struct FreeLayout {
  std::vector<int> deg;
  /// offsets of the blocks of generators with degree <= t, plus total at the end
  template <class K>
  std::vector<long> offsets(const GradedQuotient<K>& q, int t) const {
    std::vector<long> off;
    long tot = 0;
    for (int d : deg) {
      if (d > t) break;
      off.push_back(tot);
      tot += q.dim(t - d);
    }
    off.push_back(tot);
    return off;
  }
};

template <class K>
SparseVec<K> module_times_variable(const GradedQuotient<K>& q, const FreeLayout& lay, int s, const std::vector<long>& off_s,
                                   const std::vector<long>& off_t, const SparseVec<K>& u, int var) {
  std::vector<std::pair<int, K>> acc;
  std::size_t h = 0;
  for (const auto& [c, x] : u) {
    while (off_s[h + 1] <= c) ++h;
    int local = static_cast<int>(c - off_s[h]);
    auto prod = q.times_variable(s - lay.deg[h], SparseVec<K>{{local, K(1)}}, var);
    for (const auto& [j, y] : prod) acc.emplace_back(static_cast<int>(off_t[h] + j), x * y);
  }
  return sparse_collect(std::move(acc));
}

inline void check_deadline(const BettiLimits& lim) {
  if (lim.deadline && std::chrono::steady_clock::now() > *lim.deadline)
    throw Error(ErrorKind::BudgetExceeded, "time budget exhausted while computing syzygies");
}

}  // namespace detail

/// Minimal free resolution of k = A/A_+ through homological degree i_max,
/// keeping only internal degrees <= j_max.
template <class K>
BettiTable betti_of_residue_field(const GradedQuotient<K>& q, int i_max, int j_max, const BettiLimits& lim = {}) {
  if (i_max < 0 || j_max < 0) throw Error(ErrorKind::MalformedSpec, "negative Betti window");
  BettiTable tab;
  tab.i_max = i_max;
  tab.j_max = j_max;
  tab.beta.assign(static_cast<std::size_t>(i_max + 1), std::vector<long>(static_cast<std::size_t>(j_max + 1), 0));
  tab.beta[0][0] = 1;
  if (i_max == 0 || j_max == 0) return tab;

  const int n = q.nvars();
  // level 0: A itself; level 1: the basis of A_1
  detail::FreeLayout prev_lay{{0}};
  detail::FreeLayout lay;
  std::vector<SparseVec<K>> img;  // image of each generator in coordinates of the previous level
  for (int b = 0; b < q.dim(1); ++b) {
    lay.deg.push_back(1);
    img.push_back(SparseVec<K>{{b, K(1)}});
  }
  tab.beta[1][1] = q.dim(1);

  for (int i = 1; i < i_max && !lay.deg.empty(); ++i) {
    detail::FreeLayout next_lay;
    std::vector<SparseVec<K>> next_img;
    std::vector<SparseVec<K>> images_prev;  // images of the basis of (F_i)_{t-1}
    std::vector<SparseVec<K>> ker_prev;
    std::vector<long> off_prev_i;  // offsets of F_i at t-1
    for (int t = lay.deg.front(); t <= j_max; ++t) {
      detail::check_deadline(lim);
      auto off_i = lay.offsets(q, t);
      long dom = off_i.back();
      if (dom > lim.max_domain)
        throw Error(ErrorKind::BudgetExceeded, "syzygy module in homological degree " + std::to_string(i) + ", internal degree " +
                                                   std::to_string(t) + " has dimension " + std::to_string(dom));
      auto off_p_t = prev_lay.offsets(q, t);
      auto off_p_s = prev_lay.offsets(q, t - 1);
      // images of the basis b * g_h of (F_i)_t
      std::vector<SparseVec<K>> images(static_cast<std::size_t>(dom));
      for (std::size_t h = 0; h + 1 < off_i.size(); ++h) {
        int dh = lay.deg[h];
        if (dh == t) {
          images[static_cast<std::size_t>(off_i[h])] = img[h];
          continue;
        }
        int e = t - dh;
        detail::check_deadline(lim);
        for (int b = 0; b < q.dim(e); ++b) {
          auto [pb, pv] = q.parent(e, b);
          const auto& src = images_prev[static_cast<std::size_t>(off_prev_i[h] + pb)];
          images[static_cast<std::size_t>(off_i[h] + b)] =
              detail::module_times_variable(q, prev_lay, t - 1, off_p_s, off_p_t, src, pv);
        }
      }
      auto ker = kernel_basis(images, static_cast<int>(off_p_t.back()), [&] { detail::check_deadline(lim); }).first;
      // A_1 * ker_{t-1}, then new generators
      RowEchelon<K> ech(static_cast<int>(dom));
      const int kdim = static_cast<int>(ker.size());
      long done = 0;
      for (const auto& u : ker_prev) {
        if (ech.rank() == kdim) break;
        if (++done % 16 == 0) detail::check_deadline(lim);
        for (int v = 0; v < n && ech.rank() < kdim; ++v)
          ech.insert(detail::module_times_variable(q, lay, t - 1, off_prev_i, off_i, u, v));
      }
      long fresh = 0;
      for (const auto& u : ker) {
        if (ech.rank() == kdim) break;
        if (++done % 64 == 0) detail::check_deadline(lim);
        if (ech.insert(u)) {
          ++fresh;
          next_lay.deg.push_back(t);
          next_img.push_back(u);
        }
      }
      if (t <= j_max) tab.beta[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(t)] = fresh;
      images_prev = std::move(images);
      ker_prev = std::move(ker);
      off_prev_i = std::move(off_i);
    }
    prev_lay = std::move(lay);
    lay = std::move(next_lay);
    img = std::move(next_img);
  }
  return tab;
}

}  // namespace chowforge
