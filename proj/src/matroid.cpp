#include "chowforge/matroid.hpp"

#include <algorithm>
#include <numeric>

namespace chowforge {

namespace {

std::size_t idx(ElementSet x) { return static_cast<std::size_t>(x.bits()); }

void check_ground(int n) {
  if (n < 1) throw Error(ErrorKind::EmptyGroundSet, "ground set must have at least one element");
  if (n > kMaxMatroidGround)
    throw Error(ErrorKind::MalformedSpec, "ground set of size " + std::to_string(n) + " exceeds " +
                                              std::to_string(kMaxMatroidGround));
}

int rank_rational(const std::vector<std::vector<Rational>>& rows, ElementSet cols) {
  std::vector<int> c = cols.ascending();
  std::vector<std::vector<Rational>> a;
  for (const auto& row : rows) {
    std::vector<Rational> r;
    for (int j : c) r.push_back(row[static_cast<std::size_t>(j - 1)]);
    a.push_back(std::move(r));
  }
  int rank = 0;
  std::size_t m = a.size();
  for (std::size_t col = 0; col < c.size() && static_cast<std::size_t>(rank) < m; ++col) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < m && sgn(a[piv][col]) == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[static_cast<std::size_t>(rank)]);
    auto& pr = a[static_cast<std::size_t>(rank)];
    for (std::size_t i = 0; i < m; ++i) {
      if (i == static_cast<std::size_t>(rank) || sgn(a[i][col]) == 0) continue;
      Rational f = a[i][col] / pr[col];
      for (std::size_t k = col; k < c.size(); ++k) a[i][k] -= f * pr[k];
    }
    ++rank;
  }
  return rank;
}

int rank_modp(const std::vector<std::vector<Rational>>& rows, ElementSet cols, std::uint32_t p) {
  ModulusScope scope(p);
  std::vector<int> c = cols.ascending();
  std::vector<std::vector<ModP>> a;
  for (const auto& row : rows) {
    std::vector<ModP> r;
    for (int j : c) r.push_back(from_rational<ModP>(row[static_cast<std::size_t>(j - 1)]));
    a.push_back(std::move(r));
  }
  int rank = 0;
  std::size_t m = a.size();
  for (std::size_t col = 0; col < c.size() && static_cast<std::size_t>(rank) < m; ++col) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < m && a[piv][col].v == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[static_cast<std::size_t>(rank)]);
    auto& pr = a[static_cast<std::size_t>(rank)];
    ModP inv = inverse(pr[col]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == static_cast<std::size_t>(rank) || a[i][col].v == 0) continue;
      ModP f = a[i][col] * inv;
      for (std::size_t k = col; k < c.size(); ++k) a[i][k] -= f * pr[k];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::uint8_t> table_from(int n, auto&& rank_fn) {
  std::vector<std::uint8_t> t(std::size_t{1} << n);
  for (std::uint64_t b = 0; b < t.size(); ++b) t[b] = static_cast<std::uint8_t>(rank_fn(ElementSet::from_bits(b)));
  return t;
}

std::vector<ElementSet> bases_from_table(int n, const std::vector<std::uint8_t>& t) {
  std::vector<ElementSet> out;
  int r = t.back();
  for (std::uint64_t b = 0; b < t.size(); ++b) {
    ElementSet x = ElementSet::from_bits(b);
    if (x.size() == r && t[b] == r) out.push_back(x);
  }
  (void)n;
  std::sort(out.begin(), out.end(), ascending_less);
  return out;
}

}  // namespace

bool ascending_less(ElementSet a, ElementSet b) {
  auto x = a.ascending(), y = b.ascending();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

const char* backing_name(const Backing& b) {
  switch (b.index()) {
    case 0: return "uniform";
    case 1: return "linear";
    case 2: return "graphic";
    case 3: return "bases";
    default: return "flats";
  }
}

Matroid::Matroid(int n, std::vector<std::uint8_t> ranks, Backing backing)
    : n_(n), rank_table_(std::move(ranks)), backing_(std::move(backing)) {
  // unit increase and monotonicity
  for (std::uint64_t b = 0; b < rank_table_.size(); ++b) {
    for (int e = 1; e <= n_; ++e) {
      std::uint64_t bit = std::uint64_t{1} << (e - 1);
      if (b & bit) continue;
      int a = rank_table_[b], c = rank_table_[b | bit];
      if (c < a || c > a + 1)
        throw Error(ErrorKind::MalformedSpec, "rank function not a matroid rank at " +
                                                  ElementSet::from_bits(b).to_string() + " + " + std::to_string(e));
    }
  }
  if (rank_table_[0] != 0) throw Error(ErrorKind::MalformedSpec, "rank of empty set is nonzero");
  flats_.assign(static_cast<std::size_t>(rank() + 1), {});
  for (std::uint64_t b = 0; b < rank_table_.size(); ++b) {
    bool flat = true;
    for (int e = 1; e <= n_ && flat; ++e) {
      std::uint64_t bit = std::uint64_t{1} << (e - 1);
      if (!(b & bit) && rank_table_[b | bit] == rank_table_[b]) flat = false;
    }
    if (flat) flats_[rank_table_[b]].push_back(ElementSet::from_bits(b));
  }
  for (auto& g : flats_) std::sort(g.begin(), g.end(), ascending_less);
  labels_.resize(static_cast<std::size_t>(n_ + 1));
  std::iota(labels_.begin(), labels_.end(), 0);
}

Matroid Matroid::from_rank_table(int n, std::vector<std::uint8_t> ranks) {
  auto bases = bases_from_table(n, ranks);
  return Matroid(n, std::move(ranks), BasesBacking{std::move(bases)});
}

Matroid Matroid::uniform(int r, int n) {
  check_ground(n);
  if (r < 0 || r > n) throw Error(ErrorKind::MalformedSpec, "uniform rank " + std::to_string(r) + " outside 0.." + std::to_string(n));
  auto t = table_from(n, [r](ElementSet x) { return std::min(x.size(), r); });
  return Matroid(n, std::move(t), UniformBacking{r});
}

Matroid Matroid::linear(std::vector<std::vector<Rational>> rows, FieldDescriptor field) {
  if (rows.empty()) throw Error(ErrorKind::MalformedSpec, "matrix has no rows");
  int n = static_cast<int>(rows.front().size());
  check_ground(n);
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != n) throw Error(ErrorKind::MalformedSpec, "ragged matrix rows");
  if (!field.is_rational() && !is_prime_u32(field.characteristic))
    throw Error(ErrorKind::MalformedSpec, "field characteristic " + std::to_string(field.characteristic) + " is not prime");
  std::vector<std::uint8_t> t;
  if (field.is_rational()) {
    t = table_from(n, [&](ElementSet x) { return rank_rational(rows, x); });
  } else {
    t = table_from(n, [&](ElementSet x) { return rank_modp(rows, x, field.characteristic); });
  }
  return Matroid(n, std::move(t), LinearBacking{std::move(rows), field});
}

Matroid Matroid::graphic(int vertices, std::vector<std::pair<int, int>> edges) {
  int n = static_cast<int>(edges.size());
  check_ground(n);
  for (auto [u, v] : edges)
    if (u < 1 || v < 1 || u > vertices || v > vertices)
      throw Error(ErrorKind::MalformedSpec, "edge endpoint outside 1.." + std::to_string(vertices));
  auto t = table_from(n, [&](ElementSet x) {
    std::vector<int> parent(static_cast<std::size_t>(vertices + 1));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
      while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      return a;
    };
    int r = 0;
    for (int e : x.ascending()) {
      auto [u, v] = edges[static_cast<std::size_t>(e - 1)];
      int a = find(u), b = find(v);
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        ++r;
      }
    }
    return r;
  });
  return Matroid(n, std::move(t), GraphicBacking{vertices, std::move(edges)});
}

Matroid Matroid::from_bases(int n, std::vector<ElementSet> bases) {
  check_ground(n);
  if (bases.empty()) throw Error(ErrorKind::MalformedSpec, "no bases given");
  ElementSet g = ElementSet::range(n);
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  for (auto b : bases) {
    if (!b.is_subset_of(g)) throw Error(ErrorKind::ElementOutOfRange, "basis " + b.to_string());
    if (b.size() != bases.front().size())
      throw Error(ErrorKind::MalformedSpec, "bases " + bases.front().to_string() + " and " + b.to_string() + " differ in size");
  }
  std::vector<char> is_basis(std::size_t{1} << n, 0);
  for (auto b : bases) is_basis[idx(b)] = 1;
  for (auto b1 : bases)
    for (auto b2 : bases) {
      for (int x : (b1 - b2).ascending()) {
        bool ok = false;
        for (int y : (b2 - b1).ascending()) {
          ElementSet c = b1;
          c.erase(x);
          c.insert(y);
          if (is_basis[idx(c)]) {
            ok = true;
            break;
          }
        }
        if (!ok)
          throw Error(ErrorKind::MalformedSpec, "basis exchange fails for " + b1.to_string() + ", " + b2.to_string());
      }
    }
  auto t = table_from(n, [&](ElementSet x) {
    int r = 0;
    for (auto b : bases) r = std::max(r, (x & b).size());
    return r;
  });
  std::sort(bases.begin(), bases.end(), ascending_less);
  return Matroid(n, std::move(t), BasesBacking{std::move(bases)});
}

Matroid Matroid::from_flats(int n, std::vector<ElementSet> flats) {
  check_ground(n);
  ElementSet g = ElementSet::range(n);
  std::sort(flats.begin(), flats.end());
  flats.erase(std::unique(flats.begin(), flats.end()), flats.end());
  for (auto f : flats)
    if (!f.is_subset_of(g)) throw Error(ErrorKind::ElementOutOfRange, "flat " + f.to_string());
  if (std::find(flats.begin(), flats.end(), g) == flats.end())
    throw Error(ErrorKind::MalformedSpec, "flat list does not contain the ground set");
  std::vector<char> is_flat(std::size_t{1} << n, 0);
  for (auto f : flats) is_flat[idx(f)] = 1;
  for (auto a : flats)
    for (auto b : flats)
      if (!is_flat[idx(a & b)])
        throw Error(ErrorKind::MalformedSpec, "intersection of " + a.to_string() + " and " + b.to_string() + " is not a flat");
  // the flats covering each F partition E - F
  for (auto f : flats) {
    ElementSet seen;
    for (auto c : flats) {
      if (!f.is_proper_subset_of(c)) continue;
      bool cover = true;
      for (auto d : flats)
        if (f.is_proper_subset_of(d) && d.is_proper_subset_of(c)) {
          cover = false;
          break;
        }
      if (!cover) continue;
      ElementSet extra = c - f;
      if (!(extra & seen).empty())
        throw Error(ErrorKind::MalformedSpec, "covers of " + f.to_string() + " overlap at " + c.to_string());
      seen = seen | extra;
    }
    if (seen != g - f) throw Error(ErrorKind::MalformedSpec, "covers of " + f.to_string() + " do not partition the rest");
  }
  // rank = height in the flat poset
  std::vector<ElementSet> by_size = flats;
  std::sort(by_size.begin(), by_size.end(), [](ElementSet a, ElementSet b) { return a.size() < b.size(); });
  std::vector<int> height(std::size_t{1} << n, -1);
  for (auto f : by_size) {
    int h = 0;
    for (auto d : by_size)
      if (d.is_proper_subset_of(f)) h = std::max(h, height[idx(d)] + 1);
    height[idx(f)] = h;
  }
  auto t = table_from(n, [&](ElementSet x) {
    ElementSet cl = g;
    for (auto f : flats)
      if (x.is_subset_of(f)) cl = cl & f;
    return height[idx(cl)];
  });
  std::sort(flats.begin(), flats.end(), ascending_less);
  return Matroid(n, std::move(t), FlatsBacking{std::move(flats)});
}

void Matroid::check(ElementSet x) const {
  if (!x.is_subset_of(ground()))
    throw Error(ErrorKind::ElementOutOfRange, x.to_string() + " not contained in 1.." + std::to_string(n_));
}

int Matroid::rank(ElementSet x) const {
  check(x);
  return rank_table_[idx(x)];
}

ElementSet Matroid::closure(ElementSet x) const {
  check(x);
  int r = rank_table_[idx(x)];
  ElementSet cl = x;
  for (int e = 1; e <= n_; ++e) {
    if (x.contains(e)) continue;
    ElementSet y = x;
    y.insert(e);
    if (rank_table_[idx(y)] == r) cl.insert(e);
  }
  return cl;
}

bool Matroid::is_simple() const {
  for (int e = 1; e <= n_; ++e) {
    if (rank(ElementSet{e}) != 1) return false;
    for (int f = e + 1; f <= n_; ++f)
      if (rank(ElementSet{e, f}) != 2) return false;
  }
  return true;
}

std::vector<ElementSet> Matroid::flats() const {
  std::vector<ElementSet> out;
  for (const auto& g : flats_) out.insert(out.end(), g.begin(), g.end());
  return out;
}

std::vector<ElementSet> Matroid::bases() const { return bases_from_table(n_, rank_table_); }

std::vector<ElementSet> Matroid::hyperplanes() const {
  if (rank() == 0) return {};
  return flats_[static_cast<std::size_t>(rank() - 1)];
}

Matroid simplify(const Matroid& m) {
  if (m.rank() == 0) throw Error(ErrorKind::AllLoops, "every element is a loop");
  std::vector<ElementSet> atoms = m.flats_by_rank()[1];
  std::sort(atoms.begin(), atoms.end(), [](ElementSet a, ElementSet b) { return a.min_element() < b.min_element(); });
  int k = static_cast<int>(atoms.size());
  auto t = table_from(k, [&](ElementSet x) {
    ElementSet u;
    for (int i : x.ascending()) u = u | atoms[static_cast<std::size_t>(i - 1)];
    return m.rank(u);
  });
  Matroid out = Matroid::from_rank_table(k, std::move(t));
  for (int i = 1; i <= k; ++i) out.labels_[static_cast<std::size_t>(i)] = m.labels_[static_cast<std::size_t>(atoms[static_cast<std::size_t>(i - 1)].min_element())];
  return out;
}

Matroid restriction(const Matroid& m, ElementSet f) {
  if (!f.is_subset_of(m.ground())) throw Error(ErrorKind::ElementOutOfRange, f.to_string());
  if (f.empty()) throw Error(ErrorKind::EmptyGroundSet, "restriction to the empty set");
  std::vector<int> elems = f.ascending();
  int k = static_cast<int>(elems.size());
  auto t = table_from(k, [&](ElementSet x) {
    ElementSet y;
    for (int i : x.ascending()) y.insert(elems[static_cast<std::size_t>(i - 1)]);
    return m.rank(y);
  });
  Matroid out = Matroid::from_rank_table(k, std::move(t));
  for (int i = 1; i <= k; ++i) out.labels_[static_cast<std::size_t>(i)] = m.labels_[static_cast<std::size_t>(elems[static_cast<std::size_t>(i - 1)])];
  return out;
}

Matroid truncation(const Matroid& m) {
  if (m.rank() == 0) throw Error(ErrorKind::RankZero, "truncation of a rank-zero matroid");
  int cap = m.rank() - 1;
  auto t = table_from(m.n_, [&](ElementSet x) { return std::min(m.rank(x), cap); });
  Matroid out = Matroid::from_rank_table(m.n_, std::move(t));
  out.labels_ = m.labels_;
  return out;
}

Matroid dual(const Matroid& m) {
  ElementSet g = m.ground();
  auto t = table_from(m.n_, [&](ElementSet x) { return x.size() + m.rank(g - x) - m.rank(); });
  Matroid out = Matroid::from_rank_table(m.n_, std::move(t));
  out.labels_ = m.labels_;
  return out;
}

Matroid free_coextension(const Matroid& m) {
  if (!m.is_simple()) throw Error(ErrorKind::NotSimple, "free coextension needs a simple matroid");
  int n = m.n_;
  check_ground(n + 1);
  auto t = table_from(n + 1, [&](ElementSet x) {
    if (x.contains(n + 1)) {
      ElementSet f = x;
      f.erase(n + 1);
      return m.rank(f) + 1;
    }
    return m.is_independent(x) ? m.rank(x) : m.rank(x) + 1;
  });
  Matroid out = Matroid::from_rank_table(n + 1, std::move(t));
  for (int i = 1; i <= n; ++i) out.labels_[static_cast<std::size_t>(i)] = m.labels_[static_cast<std::size_t>(i)];
  return out;
}

}  // namespace chowforge
