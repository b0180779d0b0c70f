#include "chowforge/koszul.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace chowforge {

namespace {

std::vector<int> not_below_flats(const ChowRing& r, int f) {
  std::vector<int> out;
  for (int g : r.variable_flats())
    if (!r.lattice().leq(g, f)) out.push_back(g);
  return out;
}

void sort_by_variable(const ChowRing& r, std::vector<int>& v) {
  std::sort(v.begin(), v.end(), [&](int a, int b) { return r.variable_of(a) < r.variable_of(b); });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::string flats_string(const ChowRing& r, const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + r.flat_name(v[i]);
  return s;
}

// colon predicted when G' leaves an up-set
FiltrationIdeal f0_colon(const ChowRing& r, int gp) {
  if (r.flat_rank(gp) >= r.colon_threshold()) return FiltrationIdeal::f1(r, gp, sorted_coatoms(r.lattice(), r.order(), gp));
  return FiltrationIdeal::positive(r);
}

// colon predicted when the last element leaves a nonempty segment of coat(F)
FiltrationIdeal f1_colon(const ChowRing& r, const std::vector<int>& seg) {
  const Lattice& l = r.lattice();
  int gp = seg.back();
  if (seg.size() == 1) return FiltrationIdeal::f0(r, not_below_flats(r, gp));
  if (r.flat_rank(gp) < r.colon_threshold()) return FiltrationIdeal::positive(r);
  std::vector<int> cr = coat_restricted(l, r.order(), seg, gp);
  std::vector<int> below = sorted_coatoms(l, r.order(), gp);
  if (cr.size() > below.size() || !std::equal(cr.begin(), cr.end(), below.begin()))
    throw Error(ErrorKind::ClosedFormInapplicable, "coat_G(" + r.flat_name(gp) + ") is not an initial segment");
  for (std::size_t k = 0; k + 1 < seg.size(); ++k) {
    int m = l.meet(seg[k], gp);
    bool found = false;
    for (int f : cr)
      if (l.leq(m, f)) found = true;
    if (!found) throw Error(ErrorKind::ClosedFormInapplicable, "covering condition fails at " + r.flat_name(seg[k]));
  }
  return FiltrationIdeal::f1(r, gp, cr);
}

}  // namespace

FiltrationIdeal FiltrationIdeal::positive(const ChowRing& r) { return f0(r, r.variable_flats()); }

FiltrationIdeal FiltrationIdeal::f0(const ChowRing& r, std::vector<int> upset) {
  const Lattice& l = r.lattice();
  for (int g : upset) {
    if (g < 0 || g >= l.size() || !r.is_variable(g)) throw Error(ErrorKind::MalformedSpec, "up-set member is not a variable");
  }
  sort_by_variable(r, upset);
  for (int g : upset)
    for (int h : r.variable_flats())
      if (l.less(g, h) && !std::binary_search(upset.begin(), upset.end(), h,
                                              [&](int a, int b) { return r.variable_of(a) < r.variable_of(b); }))
        throw Error(ErrorKind::MalformedSpec, "not an up-set: misses " + r.flat_name(h));
  FiltrationIdeal i;
  i.tag = Tag::f0;
  i.upset = std::move(upset);
  return i;
}

FiltrationIdeal FiltrationIdeal::f1(const ChowRing& r, int flat, std::vector<int> segment) {
  const Lattice& l = r.lattice();
  if (flat < 0 || flat >= l.size() || !r.is_variable(flat)) throw Error(ErrorKind::MalformedSpec, "F1 flat is not a variable");
  std::vector<int> coat = sorted_coatoms(l, r.order(), flat);
  if (segment.size() > coat.size() || !std::equal(segment.begin(), segment.end(), coat.begin()))
    throw Error(ErrorKind::MalformedSpec, "not an initial segment of coat(" + r.flat_name(flat) + ")");
  for (int g : segment)
    if (!r.is_variable(g)) throw Error(ErrorKind::MalformedSpec, "segment member is not a variable");
  FiltrationIdeal i;
  i.tag = Tag::f1;
  i.flat = flat;
  i.segment = std::move(segment);
  return i;
}

std::vector<int> FiltrationIdeal::generators(const ChowRing& r) const {
  if (tag == Tag::f0) return upset;
  std::vector<int> g = not_below_flats(r, flat);
  g.insert(g.end(), segment.begin(), segment.end());
  sort_by_variable(r, g);
  return g;
}

std::string FiltrationIdeal::to_string(const ChowRing& r) const {
  if (tag == Tag::f0) return "F0{" + flats_string(r, upset) + "}";
  return "F1(" + r.flat_name(flat) + "; " + flats_string(r, segment) + ")";
}

WitnessStep filtration_witness_step(const ChowRing& r, const FiltrationIdeal& i) {
  const Lattice& l = r.lattice();
  if (i.is_zero(r)) throw Error(ErrorKind::ZeroIdeal, "the zero ideal has no witness step");
  if (i.tag == FiltrationIdeal::Tag::f1 && i.segment.empty())
    return filtration_witness_step(r, FiltrationIdeal::f0(r, not_below_flats(r, i.flat)));
  WitnessStep s;
  if (i.tag == FiltrationIdeal::Tag::f0) {
    int gp = -1;
    for (int g : i.upset) {
      bool minimal = true;
      for (int h : i.upset)
        if (l.less(h, g)) minimal = false;
      if (minimal && (gp < 0 || r.order().less(g, gp))) gp = g;
    }
    std::vector<int> rest;
    for (int g : i.upset)
      if (g != gp) rest.push_back(g);
    s.j = FiltrationIdeal::f0(r, rest);
    s.x = gp;
    s.c = f0_colon(r, gp);
    return s;
  }
  std::vector<int> seg = i.segment;
  s.x = seg.back();
  s.c = f1_colon(r, seg);
  seg.pop_back();
  s.j = FiltrationIdeal::f1(r, i.flat, seg);
  return s;
}

std::string FiltrationReport::to_text() const {
  std::ostringstream s;
  s << (pass ? "pass" : "FAIL") << (complete ? "" : " (incomplete walk, not a certificate)") << ": " << visited
    << " ideals visited, " << steps_checked << " steps checked";
  if (sampled) s << ", " << sampled << " sampled members";
  s << '\n';
  for (const auto& v : violations) s << "  " << v << '\n';
  return s.str();
}

namespace {

// checks (J : x) = C with I = J + (x); returns an empty string on success
std::string check_step(const ChowRing& r, const std::vector<int>& igens, const WitnessStep& st) {
  const auto& a = r.oracle();
  std::vector<int> jg = st.j.generators(r);
  std::vector<int> expect = jg;
  expect.push_back(st.x);
  sort_by_variable(r, expect);
  if (expect != igens || std::find(jg.begin(), jg.end(), st.x) != jg.end()) return "I != J + (x)";
  auto jr = variable_ideal(r, jg);
  auto ir = variable_ideal(r, igens);
  auto x = r.oracle_variable(st.x);
  auto cq = colon(jr, x);
  // I/J is cyclic on x: dim (I/J)_d = dim (A/(J:x))_{d-1}
  bool strict = false;
  for (int d = 0; d <= a.max_degree(); ++d) {
    int lhs = ir.dim(d) - jr.dim(d);
    int rhs = d == 0 ? 0 : a.dim(d - 1) - cq.dim(d - 1);
    if (lhs != rhs) return "I/J is not cyclic in degree " + std::to_string(d);
    if (lhs > 0) strict = true;
  }
  if (!strict) return "J = I";
  auto lin = is_generated_by_linear_forms(cq);
  if (!lin.linear) return "(J:I) needs " + std::to_string(lin.deficit) + " generators of degree " + std::to_string(lin.degree);
  auto cr = variable_ideal(r, st.c.generators(r));
  if (!equals_ideal(cq, cr)) return "(J:I) differs from " + st.c.to_string(r);
  return {};
}

using DimCache = std::map<std::vector<int>, std::vector<int>>;

const std::vector<int>& ideal_dims(const ChowRing& r, const std::vector<int>& gens, DimCache& cache) {
  auto it = cache.find(gens);
  if (it == cache.end()) it = cache.emplace(gens, variable_ideal(r, gens).dims()).first;
  return it->second;
}

// Same check without forming J : x. C ⊆ J : x holds when x_G x ∈ J for each generator G
// of C; equality then follows from dim (J:x)_{d-1} = dim A_{d-1} - dim I_d + dim J_d.
std::string check_walk_step(const ChowRing& r, const std::vector<int>& igens, const WitnessStep& st, DimCache& cache) {
  const auto& a = r.oracle();
  std::vector<int> jg = st.j.generators(r);
  std::vector<int> expect = jg;
  expect.push_back(st.x);
  sort_by_variable(r, expect);
  if (expect != igens || std::find(jg.begin(), jg.end(), st.x) != jg.end()) return "I != J + (x)";
  auto jr = variable_ideal(r, jg);
  cache.emplace(jg, jr.dims());
  const auto& id = ideal_dims(r, igens, cache);
  auto cg = st.c.generators(r);
  const auto& cd = ideal_dims(r, cg, cache);
  auto x = r.oracle_variable(st.x);
  for (int g : cg)
    if (!jr.contains(a.multiply(r.oracle_variable(g), x))) return "x_" + r.flat_name(g) + " is not in (J:I)";
  bool strict = false;
  for (int d = 0; d <= a.max_degree(); ++d) {
    int lhs = id[static_cast<std::size_t>(d)] - jr.dim(d);
    int rhs = d == 0 ? 0 : a.dim(d - 1) - cd[static_cast<std::size_t>(d - 1)];
    if (lhs != rhs) return "(J:I) differs from " + st.c.to_string(r) + " in degree " + std::to_string(d - 1);
    if (lhs > 0) strict = true;
  }
  if (!strict) return "J = I";
  return {};
}

}  // namespace

FiltrationReport verify_filtration(const ChowRing& r, const WalkOptions& opt) {
  FiltrationReport rep;
  std::set<std::vector<int>> seen;
  DimCache cache;
  std::deque<FiltrationIdeal> queue{FiltrationIdeal::zero(), FiltrationIdeal::positive(r)};
  while (!queue.empty()) {
    FiltrationIdeal i = std::move(queue.front());
    queue.pop_front();
    std::vector<int> gens = i.generators(r);
    if (!seen.insert(gens).second) continue;
    ++rep.visited;
    if (rep.visited > opt.max_nodes) {
      rep.complete = false;
      rep.pass = false;
      break;
    }
    if (gens.empty()) continue;
    WitnessStep st;
    try {
      st = filtration_witness_step(r, i);
    } catch (const Error& e) {
      rep.pass = false;
      rep.violations.push_back(i.to_string(r) + ": " + e.what());
      continue;
    }
    ++rep.steps_checked;
    std::string bad = check_walk_step(r, gens, st, cache);
    if (!bad.empty()) {
      rep.pass = false;
      rep.violations.push_back(i.to_string(r) + " -> x_" + r.flat_name(st.x) + ": " + bad);
    }
    queue.push_back(st.j);
    queue.push_back(st.c);
  }
  // random members of the family with a random admissible step
  std::mt19937_64 rng(opt.seed);
  const auto& vars = r.variable_flats();
  const Lattice& l = r.lattice();
  for (long s = 0; s < opt.samples && !vars.empty(); ++s) {
    ++rep.sampled;
    WitnessStep st;
    std::vector<int> igens;
    std::string label;
    try {
      if (rng() % 2 == 0) {
        // up-closure of a random subset, random minimal element removed
        std::vector<int> up;
        for (int g : vars)
          if (rng() % 3 == 0) up.push_back(g);
        if (up.empty()) up.push_back(vars[rng() % vars.size()]);
        std::vector<int> closed;
        for (int h : vars)
          for (int g : up)
            if (l.leq(g, h)) {
              closed.push_back(h);
              break;
            }
        auto i = FiltrationIdeal::f0(r, closed);
        std::vector<int> mins;
        for (int g : i.upset) {
          bool minimal = true;
          for (int h : i.upset)
            if (l.less(h, g)) minimal = false;
          if (minimal) mins.push_back(g);
        }
        int gp = mins[rng() % mins.size()];
        std::vector<int> rest;
        for (int g : i.upset)
          if (g != gp) rest.push_back(g);
        st.j = FiltrationIdeal::f0(r, rest);
        st.x = gp;
        st.c = f0_colon(r, gp);
        igens = i.upset;
        label = i.to_string(r);
      } else {
        std::vector<int> cands;
        for (int f : vars)
          if (r.flat_rank(f) >= r.colon_threshold()) cands.push_back(f);
        if (cands.empty()) continue;
        int f = cands[rng() % cands.size()];
        auto coat = sorted_coatoms(l, r.order(), f);
        std::size_t m = 1 + rng() % coat.size();
        auto i = FiltrationIdeal::f1(r, f, std::vector<int>(coat.begin(), coat.begin() + static_cast<long>(m)));
        st = filtration_witness_step(r, i);
        igens = i.generators(r);
        label = i.to_string(r);
      }
    } catch (const Error& e) {
      rep.pass = false;
      rep.violations.push_back(std::string("sample: ") + e.what());
      continue;
    }
    std::string bad = check_step(r, igens, st);
    if (!bad.empty()) {
      rep.pass = false;
      rep.violations.push_back("sample " + label + " -> x_" + r.flat_name(st.x) + ": " + bad);
    }
  }
  return rep;
}

std::string KoszulCertificate::to_text() const {
  std::ostringstream s;
  s << "HF: " << polynomial_string(hilbert) << '\n';
  s << "betti (i <= " << i_max << ", j <= " << betti.j_max << "):\n" << betti.to_text();
  s << "beta_i:";
  for (int i = 0; i <= i_max; ++i) s << ' ' << betti.total(i);
  s << '\n';
  s << "1/HS(-t): " << poincare.to_string() << '\n';
  if (witness) s << "nonlinear: beta_{" << witness->first << "," << witness->second << "} = " << betti.at(witness->first, witness->second) << '\n';
  s << "linear to homological degree " << i_max << ": " << (linear ? "yes" : "no") << '\n';
  s << "Froberg identity to t^" << i_max << ": " << (froberg ? "yes" : "no") << '\n';
  return s.str();
}

}  // namespace chowforge
