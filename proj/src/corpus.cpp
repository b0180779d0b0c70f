#include "chowforge/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace chowforge {

namespace {

std::vector<ElementSet> subsets_of_size(int n, int r) {
  std::vector<ElementSet> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b)
    if (std::popcount(b) == r) out.push_back(ElementSet::from_bits(b));
  return out;
}

bool exchange_holds(const std::vector<ElementSet>& bases) {
  std::set<std::uint64_t> in;
  for (auto b : bases) in.insert(b.bits());
  for (auto a : bases)
    for (auto b : bases)
      for (int x : a.ascending()) {
        if (b.contains(x)) continue;
        bool ok = false;
        for (int y : b.ascending()) {
          if (a.contains(y)) continue;
          ElementSet c = a;
          c.erase(x);
          c.insert(y);
          if (in.count(c.bits())) {
            ok = true;
            break;
          }
        }
        if (!ok) return false;
      }
  return true;
}

std::vector<std::uint64_t> canonical(const std::vector<ElementSet>& bases, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint64_t> best;
  do {
    std::vector<std::uint64_t> img;
    for (auto b : bases) {
      std::uint64_t m = 0;
      for (int x : b.ascending()) m |= std::uint64_t{1} << perm[static_cast<std::size_t>(x - 1)];
      img.push_back(m);
    }
    std::sort(img.begin(), img.end());
    if (best.empty() || img < best) best = img;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<Matroid> small_simple_matroids(int max_n) {
  std::vector<Matroid> out;
  for (int n = 1; n <= max_n; ++n)
    for (int r = 1; r <= n; ++r) {
      auto cand = subsets_of_size(n, r);
      std::set<std::vector<std::uint64_t>> seen;
      if (cand.size() > 20) throw Error(ErrorKind::BudgetExceeded, "matroid enumeration beyond 20 candidate bases");
      for (std::uint64_t fam = 1; fam < (std::uint64_t{1} << cand.size()); ++fam) {
        std::vector<ElementSet> bases;
        for (std::size_t i = 0; i < cand.size(); ++i)
          if ((fam >> i) & 1U) bases.push_back(cand[i]);
        if (!exchange_holds(bases)) continue;
        auto key = canonical(bases, n);
        if (seen.count(key)) continue;
        std::vector<ElementSet> cb;
        for (auto b : key) cb.push_back(ElementSet::from_bits(b));
        Matroid m = Matroid::from_bases(n, cb);
        if (!m.is_simple()) continue;
        seen.insert(key);
        out.push_back(m);
      }
    }
  // name: uniform ones by parameters, the rest by position
  std::vector<int> counter(static_cast<std::size_t>(max_n + 1) * static_cast<std::size_t>(max_n + 1), 0);
  std::vector<std::pair<std::vector<std::uint64_t>, Matroid>> keyed;
  for (auto& m : out) keyed.push_back({canonical(m.bases(), m.ground_size()), m});
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    const Matroid& x = a.second;
    const Matroid& y = b.second;
    if (x.ground_size() != y.ground_size()) return x.ground_size() < y.ground_size();
    if (x.rank() != y.rank()) return x.rank() < y.rank();
    return a.first < b.first;
  });
  out.clear();
  for (auto& [key, m] : keyed) {
    int n = m.ground_size(), r = m.rank();
    std::size_t all = subsets_of_size(n, r).size();
    std::string name;
    if (key.size() == all) {
      name = "U" + std::to_string(r) + "," + std::to_string(n);
    } else {
      int& c = counter[static_cast<std::size_t>(n * (max_n + 1) + r)];
      name = "S" + std::to_string(r) + "," + std::to_string(n) + "." + std::to_string(++c);
    }
    m.set_name(name);
    out.push_back(m);
  }
  return out;
}

Matroid figure2_matroid() {
  std::vector<std::vector<Rational>> rows{
      {1, 0, 0, 1, 0},
      {0, 1, 0, 1, 0},
      {0, 0, 1, 1, 0},
      {0, 0, 0, 0, 1},
  };
  Matroid m = Matroid::linear(rows);
  m.set_name("fig2");
  return m;
}

Matroid cycle4_matroid() {
  Matroid m = Matroid::graphic(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  m.set_name("MC4");
  return m;
}

Lattice figure3_lattice() {
  return Lattice::from_covers({"0", "a", "b", "c", "d", "e", "f", "1"},
                              {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 5}, {3, 6}, {4, 6}, {5, 7}, {6, 7}});
}

std::vector<CorpusEntry> matroid_corpus() {
  std::vector<CorpusEntry> out;
  for (auto& m : small_simple_matroids(5)) out.push_back({m.name(), m});
  Matroid u56 = Matroid::uniform(5, 6);
  u56.set_name("U5,6");
  out.push_back({"U5,6", u56});
  out.push_back({"fig2", figure2_matroid()});
  out.push_back({"MC4", cycle4_matroid()});
  Matroid b3 = Matroid::uniform(3, 3);
  b3.set_name("B3");
  out.push_back({"B3", b3});
  return out;
}

std::optional<Matroid> corpus_matroid(const std::string& name) {
  for (auto& e : matroid_corpus())
    if (e.name == name) return e.matroid;
  return std::nullopt;
}

}  // namespace chowforge
