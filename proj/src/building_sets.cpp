#include "chowforge/building_sets.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <sstream>

namespace chowforge {

namespace {

constexpr long kMaxProduct = 1L << 14;

// join map prod [0, f_i] -> [0, x]; empty string when it is an order isomorphism
std::string join_map_defect(const Lattice& l, const std::vector<int>& f, int x) {
  std::vector<int> target = l.down_set(x);
  if (f.empty()) return target.size() == 1 ? std::string{} : "no element of G below";
  std::vector<std::vector<int>> parts;
  long n = 1;
  for (int g : f) {
    parts.push_back(l.down_set(g));
    n *= static_cast<long>(parts.back().size());
    if (n > kMaxProduct) throw Error(ErrorKind::BudgetExceeded, "interval product too large");
  }
  if (n != static_cast<long>(target.size()))
    return "product has " + std::to_string(n) + " elements, interval has " + std::to_string(target.size());
  std::vector<std::vector<int>> tuples;
  std::vector<int> joins;
  std::vector<char> hit(static_cast<std::size_t>(l.size()), 0);
  for (long t = 0; t < n; ++t) {
    long rest = t;
    std::vector<int> tup;
    int j = l.bottom();
    for (const auto& p : parts) {
      int y = p[static_cast<std::size_t>(rest % static_cast<long>(p.size()))];
      rest /= static_cast<long>(p.size());
      tup.push_back(y);
      j = l.join(j, y);
    }
    if (hit[static_cast<std::size_t>(j)]) return "join map is not injective";
    hit[static_cast<std::size_t>(j)] = 1;
    tuples.push_back(std::move(tup));
    joins.push_back(j);
  }
  for (long p = 0; p < n; ++p)
    for (long q = 0; q < n; ++q) {
      if (!l.leq(joins[static_cast<std::size_t>(p)], joins[static_cast<std::size_t>(q)])) continue;
      const auto& a = tuples[static_cast<std::size_t>(p)];
      const auto& b = tuples[static_cast<std::size_t>(q)];
      for (std::size_t i = 0; i < a.size(); ++i)
        if (!l.leq(a[i], b[i])) return "join map does not reflect the order";
    }
  return {};
}

std::vector<int> maximal_below(const Lattice& l, const std::vector<int>& g, int x) {
  std::vector<int> below, out;
  for (int y : g)
    if (l.leq(y, x)) below.push_back(y);
  for (int y : below) {
    bool top = true;
    for (int z : below)
      if (l.less(y, z)) top = false;
    if (top) out.push_back(y);
  }
  return out;
}

void require_atomic(const Lattice& l) {
  if (!is_geometric(l).atomic) throw Error(ErrorKind::NotAtomic, "lattice is not atomic");
}

std::vector<int> normalized(const Lattice& l, std::vector<int> g) {
  for (int x : g)
    if (x < 0 || x >= l.size() || x == l.bottom())
      throw Error(ErrorKind::MalformedSpec, "building set members must be elements above the bottom");
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

}  // namespace

bool BuildingSet::contains(int x) const { return std::binary_search(elements.begin(), elements.end(), x); }

BuildingSetReport is_building_set(const Lattice& l, const std::vector<int>& g0) {
  require_atomic(l);
  std::vector<int> g = normalized(l, g0);
  BuildingSetReport rep;
  for (int x = 0; x < l.size(); ++x) {
    if (x == l.bottom()) continue;
    std::string bad = join_map_defect(l, maximal_below(l, g, x), x);
    if (!bad.empty()) {
      rep.ok = false;
      rep.witness = x;
      rep.reason = element_label(l, x) + ": " + bad;
      return rep;
    }
  }
  return rep;
}

BuildingSet make_building_set(const Lattice& l, std::vector<int> g) {
  g = normalized(l, std::move(g));
  auto rep = is_building_set(l, g);
  if (!rep.ok) throw Error(ErrorKind::NotABuildingSet, rep.reason);
  BuildingSet b;
  b.elements = g;
  b.factors.resize(static_cast<std::size_t>(l.size()));
  for (int x = 0; x < l.size(); ++x)
    if (x != l.bottom()) b.factors[static_cast<std::size_t>(x)] = maximal_below(l, g, x);
  return b;
}

bool is_reducible(const Lattice& l, int x) {
  std::vector<int> atoms;
  for (int a : l.atoms())
    if (l.leq(a, x)) atoms.push_back(a);
  std::size_t k = atoms.size();
  if (k < 2) return false;
  // split containing atoms[0] on the first side
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k) - 1; mask += 2) {
    int a = l.bottom(), b = l.bottom();
    for (std::size_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1U) a = l.join(a, atoms[i]);
      else b = l.join(b, atoms[i]);
    }
    if (a == x || b == x) continue;
    if (join_map_defect(l, {a, b}, x).empty()) return true;
  }
  return false;
}

BuildingSet minimal_building_set(const Lattice& l) {
  require_atomic(l);
  std::vector<int> g;
  for (int x = 0; x < l.size(); ++x)
    if (x != l.bottom() && !is_reducible(l, x)) g.push_back(x);
  return make_building_set(l, g);
}

BuildingSet maximal_building_set(const Lattice& l) {
  require_atomic(l);
  std::vector<int> g;
  for (int x = 0; x < l.size(); ++x)
    if (x != l.bottom()) g.push_back(x);
  return make_building_set(l, g);
}

bool NestedComplex::is_nested(const std::vector<int>& s) const {
  for (const auto& nf : minimal_nonfaces)
    if (std::all_of(nf.begin(), nf.end(), [&](int x) { return std::find(s.begin(), s.end(), x) != s.end(); }))
      return false;
  return true;
}

NestedComplex nested_complex(const Lattice& l, const BuildingSet& b) {
  const auto& g = b.elements;
  if (g.size() > 64) throw Error(ErrorKind::BudgetExceeded, "building set too large for the nested complex");
  std::size_t n = g.size();
  std::vector<std::uint64_t> nonfaces;
  // level-by-level over antichains that contain no known non-face
  std::vector<std::pair<std::uint64_t, int>> level;  // (mask, join)
  for (std::size_t i = 0; i < n; ++i) level.push_back({std::uint64_t{1} << i, g[i]});
  while (!level.empty()) {
    std::vector<std::pair<std::uint64_t, int>> next;
    for (auto [mask, join] : level) {
      int last = 63 - std::countl_zero(mask);
      for (std::size_t j = static_cast<std::size_t>(last) + 1; j < n; ++j) {
        bool anti = true;
        for (std::size_t i = 0; i < n && anti; ++i)
          if (((mask >> i) & 1U) && l.comparable(g[i], g[j])) anti = false;
        if (!anti) continue;
        std::uint64_t m = mask | (std::uint64_t{1} << j);
        bool covered = false;
        for (std::uint64_t nf : nonfaces)
          if ((nf & m) == nf) covered = true;
        if (covered) continue;
        int jn = l.join(join, g[j]);
        if (b.contains(jn)) nonfaces.push_back(m);
        else next.push_back({m, jn});
      }
    }
    level = std::move(next);
  }
  NestedComplex c;
  for (std::uint64_t nf : nonfaces) {
    std::vector<int> s;
    for (std::size_t i = 0; i < n; ++i)
      if ((nf >> i) & 1U) s.push_back(g[i]);
    c.minimal_nonfaces.push_back(std::move(s));
  }
  std::sort(c.minimal_nonfaces.begin(), c.minimal_nonfaces.end());
  return c;
}

DlgPresentation dlg_presentation(const Lattice& l, const BuildingSet& b, FieldDescriptor field) {
  require_atomic(l);
  for (int a : l.atoms())
    if (!b.contains(a)) throw Error(ErrorKind::NotABuildingSet, "atom " + element_label(l, a) + " is missing");
  DlgPresentation d;
  d.complex = nested_complex(l, b);
  for (int x : b.elements)
    if (l.rank(x) >= 2) d.variable_elements.push_back(x);
  std::stable_sort(d.variable_elements.begin(), d.variable_elements.end(),
                   [&](int x, int y) { return l.rank(x) < l.rank(y); });
  int nv = static_cast<int>(d.variable_elements.size());
  std::vector<int> var_of(static_cast<std::size_t>(l.size()), -1);
  for (int v = 0; v < nv; ++v) var_of[static_cast<std::size_t>(d.variable_elements[static_cast<std::size_t>(v)])] = v;
  auto form = [&](int x) {
    if (var_of[static_cast<std::size_t>(x)] >= 0) return Polynomial::variable(nv, var_of[static_cast<std::size_t>(x)]);
    Polynomial p(nv);
    for (int y : b.elements)
      if (l.less(x, y)) p = p - Polynomial::variable(nv, var_of[static_cast<std::size_t>(y)]);
    return p;
  };
  auto& alg = d.algebra;
  alg.name = "D(L,G)";
  for (int x : d.variable_elements) alg.variables.push_back("x_" + element_label(l, x));
  for (const auto& nf : d.complex.minimal_nonfaces) {
    Polynomial p = Polynomial::constant(nv, 1);
    for (int x : nf) p = p * form(x);
    if (!p.terms().empty()) alg.relations.push_back(p);
  }
  alg.max_degree = std::max(1, l.height());
  alg.field = field;
  return d;
}

std::vector<BuildingSet> all_building_sets(const Lattice& l) {
  require_atomic(l);
  std::vector<int> optional;
  for (int x = 0; x < l.size(); ++x)
    if (x != l.bottom() && l.rank(x) >= 2) optional.push_back(x);
  if (optional.size() > 20) throw Error(ErrorKind::BudgetExceeded, "too many candidate subsets");
  std::vector<BuildingSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << optional.size()); ++mask) {
    std::vector<int> g = l.atoms();
    for (std::size_t i = 0; i < optional.size(); ++i)
      if ((mask >> i) & 1U) g.push_back(optional[i]);
    if (is_building_set(l, g).ok) out.push_back(make_building_set(l, g));
  }
  std::sort(out.begin(), out.end(), [](const BuildingSet& a, const BuildingSet& b) {
    return a.elements.size() != b.elements.size() ? a.elements.size() < b.elements.size() : a.elements < b.elements;
  });
  return out;
}

std::vector<int> parse_elements(const Lattice& l, const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c) || c == '{' || c == '}'; }),
              tok.end());
    if (tok.empty()) continue;
    int id = -1;
    for (int a = 0; a < l.size(); ++a)
      if (l.name(a) == tok || element_label(l, a) == tok) id = a;
    if (id < 0 && l.has_sets()) id = l.index_of(ElementSet::parse(tok));
    if (id < 0) throw Error(ErrorKind::NotAFlat, "no element '" + tok + "'");
    out.push_back(id);
  }
  return out;
}

}  // namespace chowforge
