// Acceptance run: one PASS/FAIL line per criterion.
// Usage: acceptance [criterion numbers...]   (default: all)

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chowforge/augmented.hpp"
#include "chowforge/building_sets.hpp"
#include "chowforge/chow_ring.hpp"
#include "chowforge/colon_suite.hpp"
#include "chowforge/corpus.hpp"
#include "chowforge/koszul.hpp"

using namespace chowforge;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<int> trimmed(std::vector<int> v) {
  while (v.size() > 1 && v.back() == 0) v.pop_back();
  return v;
}

std::string hf_string(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

const char* kind_name(ChowKind k) { return k == ChowKind::augmented ? "aChow" : "Chow"; }

// Every corpus ring, small first.
std::vector<std::pair<std::string, ChowKind>> corpus_rings() {
  std::vector<std::pair<std::string, ChowKind>> out;
  for (auto kind : {ChowKind::standard, ChowKind::augmented})
    for (const auto& e : matroid_corpus()) out.push_back({e.name, kind});
  return out;
}

Outcome with_limit(Outcome o, double elapsed, double limit) {
  if (elapsed > limit) {
    o.pass = false;
    o.detail += "; took " + std::to_string(elapsed) + " s, limit " + std::to_string(limit) + " s";
  }
  return o;
}

// 1
Outcome fig2_order() {
  auto t0 = Clock::now();
  Lattice l = Lattice::of_flats(figure2_matroid());
  CoatomOrder ord = coatom_order(l);
  auto coat = sorted_coatoms(l, ord, l.top());
  std::string got;
  for (auto it = coat.rbegin(); it != coat.rend(); ++it) got += (got.empty() ? "" : ">") + element_label(l, *it);
  Outcome o;
  o.pass = l.size() == 24 && got == "1234>125>135>235>145>245>345";
  o.detail = std::to_string(l.size()) + " flats, coat(E): " + got;
  return with_limit(o, seconds_since(t0), 1.0);
}

// 2
Outcome corpus_orders() {
  auto t0 = Clock::now();
  Outcome o;
  long pairs = 0, segs = 0;
  int n = 0;
  for (const auto& e : matroid_corpus()) {
    Lattice l = Lattice::of_flats(e.matroid);
    auto rep = verify_total_coatom_order(l, coatom_order(l));
    pairs += rep.checked_pairs;
    segs += rep.checked_segments;
    ++n;
    if (!rep.pass) {
      o.pass = false;
      o.detail += e.name + ": " + rep.describe(l) + "; ";
    }
  }
  o.detail += std::to_string(n) + " lattices, " + std::to_string(pairs) + " pairs, " + std::to_string(segs) + " segments";
  return with_limit(o, seconds_since(t0), 60.0);
}

// 3
Outcome nested_basis_counts() {
  auto t0 = Clock::now();
  Outcome o;
  int n = 0;
  for (const auto& [name, kind] : corpus_rings()) {
    ChowRing r(*corpus_matroid(name), kind);
    auto hf = trimmed(r.hilbert_function());
    auto oracle = trimmed(r.oracle().hilbert_function());
    ++n;
    if (hf != oracle) {
      o.pass = false;
      o.detail += std::string(kind_name(kind)) + "(" + name + "): " + hf_string(hf) + " vs " + hf_string(oracle) + "; ";
    }
  }
  o.detail += std::to_string(n) + " rings";
  return with_limit(o, seconds_since(t0), 300.0);
}

// 4
Outcome gorenstein_suite() {
  Outcome o;
  int n = 0;
  for (const auto& [name, kind] : corpus_rings()) {
    auto g = gorenstein_report(ChowRing(*corpus_matroid(name), kind));
    ++n;
    if (!g.pass()) {
      o.pass = false;
      o.detail += std::string(kind_name(kind)) + "(" + name + "); ";
    }
  }
  o.detail += std::to_string(n) + " rings";
  return o;
}

// 5
Outcome colon_suites() {
  Outcome o;
  long instances = 0, inapplicable = 0;
  for (const auto& [name, kind] : corpus_rings()) {
    ChowRing r(*corpus_matroid(name), kind);
    bool exhaustive = r.matroid().ground_size() <= 4;
    auto rep = colon_suite(r, exhaustive ? -1 : 200, 1);
    instances += rep.instances;
    inapplicable += rep.inapplicable;
    if (!exhaustive && rep.instances < 200) {
      o.pass = false;
      o.detail += std::string(kind_name(kind)) + "(" + name + ") only " + std::to_string(rep.instances) + " samples; ";
    }
    if (!rep.pass()) {
      o.pass = false;
      o.detail += std::string(kind_name(kind)) + "(" + name + "): " + rep.failures.front() + "; ";
    }
  }
  o.detail += std::to_string(instances) + " colons compared, " + std::to_string(inapplicable) + " without closed form";
  return o;
}

// 6
Outcome u56_colons() {
  auto t0 = Clock::now();
  ChowRing r(Matroid::uniform(5, 6));
  const Lattice& l = r.lattice();
  const auto& a = r.oracle();
  auto var = [&](std::initializer_list<int> s) { return r.oracle_variable(l.index_of(ElementSet(s))); };
  auto flat = [&](std::initializer_list<int> s) { return l.index_of(ElementSet(s)); };
  auto x = var({1, 2, 5, 6});
  auto ann = colon(zero_ideal(a), x);
  auto q = a.multiply(var({1, 2}), x);
  Outcome o;

  auto c1 = colon(variable_ideal(r, {flat({1, 2, 3, 4})}), x);
  auto want1 = ideal_sum(ann, ideal_span(a, std::vector<Elem<Rational>>{q}));
  bool ok1 = equals_ideal(c1, want1) && is_minimal_generator(c1, q);
  o.detail += std::string("(x_1234):x_1256 ") + (ok1 ? "ok" : "differs");

  auto c2 = colon(variable_ideal(r, {flat({1, 2, 3, 4}), flat({2, 3, 4, 5}), flat({3, 4, 5, 6}), flat({1, 4, 5, 6}),
                                     flat({1, 2, 3, 6})}),
                  x);
  auto want2 = ideal_sum(ann, ideal_span(a, std::vector<Elem<Rational>>{var({1, 2, 5}), var({1, 2, 6}), q}));
  bool ok2 = equals_ideal(c2, want2) && is_minimal_generator(c2, q);
  o.detail += std::string(", cycle colon ") + (ok2 ? "ok" : "differs from (0:x_1256) + (x_125, x_126, x_12 x_1256)");
  if (!ok2) {
    // report what the colon is instead
    auto q25 = a.multiply(var({2, 5}), x);
    auto found = ideal_sum(ann, ideal_span(a, std::vector<Elem<Rational>>{var({1, 2, 6}), var({1, 5, 6}), q25}));
    if (equals_ideal(c2, found) && is_minimal_generator(c2, q25))
      o.detail += "; computed: (0:x_1256) + (x_126, x_156, x_25 x_1256), quadratic generator minimal";
    o.detail += std::string("; x_125 in colon: ") + (c2.contains(var({1, 2, 5})) ? "yes" : "no");
  }
  o.pass = ok1 && ok2;
  return with_limit(o, seconds_since(t0), 120.0);
}

// 7
Outcome koszul_corpus() {
  auto t0 = Clock::now();
  const double limit = 600.0;
  Outcome o;
  int certified = 0;
  std::vector<std::string> unfinished, failed;
  auto rings = corpus_rings();
  std::stable_sort(rings.begin(), rings.end(), [](const auto& a, const auto& b) {
    return corpus_matroid(a.first)->ground_size() < corpus_matroid(b.first)->ground_size();
  });
  for (const auto& [name, kind] : rings) {
    std::string label = std::string(kind_name(kind)) + "(" + name + ")";
    double left = limit - seconds_since(t0);
    if (left <= 0) {
      unfinished.push_back(label + " not reached");
      continue;
    }
    ChowRing r(*corpus_matroid(name), kind);
    BettiLimits lim;
    lim.deadline = Clock::now() + std::chrono::milliseconds(static_cast<long>(std::min(left, 90.0) * 1000));
    try {
      // Over GF(p) with the same Hilbert function, Betti numbers bound those over Q from above.
      ModulusScope scope(32003);
      auto qp = r.build_oracle<ModP>();
      auto c = koszul_certificate(qp, 4, lim);
      if (c.hilbert != trimmed(r.oracle().hilbert_function())) unfinished.push_back(label + " HF differs mod p");
      else if (c.pass()) ++certified;
      else failed.push_back(label);
    } catch (const Error& e) {
      unfinished.push_back(label + " " + e.what());
    }
  }
  o.pass = failed.empty() && unfinished.empty();
  o.detail = std::to_string(certified) + " certified through i=4";
  for (const auto& f : failed) o.detail += "; not Koszul: " + f;
  for (const auto& u : unfinished) o.detail += "; unverified: " + u;
  return with_limit(o, seconds_since(t0), limit);
}

// 8
Outcome filtration_walks() {
  Outcome o;
  long visited = 0, steps = 0;
  int n = 0;
  for (const auto& [name, kind] : corpus_rings()) {
    auto rep = verify_filtration(ChowRing(*corpus_matroid(name), kind));
    visited += rep.visited;
    steps += rep.steps_checked;
    ++n;
    if (!rep.pass || !rep.complete) {
      o.pass = false;
      o.detail += std::string(kind_name(kind)) + "(" + name + "): " + rep.to_text() + "; ";
    }
  }
  o.detail += std::to_string(n) + " rings, " + std::to_string(visited) + " ideals, " + std::to_string(steps) + " steps";
  return o;
}

// 9
Outcome counterexamples() {
  Outcome o;
  auto check_min = [&](const std::string& label, const Lattice& l, const BuildingSet& g) {
    GradedQuotient<Rational> q(dlg_presentation(l, g).algebra);
    auto hf = trimmed(q.hilbert_function());
    auto c = koszul_certificate(q, 3);
    bool ok = hf == std::vector<int>{1, 1, 1} && c.betti.at(2, 3) == 1;
    o.detail += label + " HF " + hf_string(hf) + " beta_{2,3}=" + std::to_string(c.betti.at(2, 3)) + "; ";
    if (!ok) o.pass = false;
  };
  Lattice b3 = Lattice::of_flats(Matroid::uniform(3, 3));
  check_min("D(B3,{1,2,3,123})", b3, make_building_set(b3, parse_elements(b3, "1,2,3,123")));
  Lattice mc4 = Lattice::of_flats(cycle4_matroid());
  check_min("D(L(MC4),G_min)", mc4, minimal_building_set(mc4));

  Lattice f3 = figure3_lattice();
  GradedQuotient<Rational> q(dlg_presentation(f3, maximal_building_set(f3)).algebra);
  auto hf = trimmed(q.hilbert_function());
  auto c = koszul_certificate(q, 4);
  int soc = 0;
  for (int d : socle(q).dims()) soc += d;
  bool ok = hf == std::vector<int>{1, 3} && c.pass() && soc == 3;
  o.detail += "fig3 G_max HF " + hf_string(hf) + (c.pass() ? " Koszul" : " not Koszul") + " socle " + std::to_string(soc);
  if (!ok) o.pass = false;
  return o;
}

// 10
Outcome quotient_checks() {
  Outcome o;
  int n = 0;
  for (const auto& [name, kind] : corpus_rings()) {
    auto rep = quotient_isomorphism_checks(ChowRing(*corpus_matroid(name), kind));
    ++n;
    if (!rep.pass()) {
      o.pass = false;
      o.detail += std::string(kind_name(kind)) + "(" + name + "): " + rep.to_text() + "; ";
    }
  }
  o.detail += std::to_string(n) + " rings";
  return o;
}

// 11
Outcome coextension_checks() {
  Outcome o;
  int n = 0;
  for (const auto& e : matroid_corpus()) {
    if (e.matroid.ground_size() > 5) continue;
    auto flats = free_coextension_flats_check(e.matroid);
    auto building = free_coextension_building_set_check(e.matroid);
    ++n;
    if (!flats.pass() || !building.pass()) {
      o.pass = false;
      o.detail += e.name + ": " + flats.to_text() + building.to_text() + "; ";
    }
  }
  o.detail += std::to_string(n) + " matroids with n <= 5";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> all = {
      {1, "fig2 lattice and coatom order", fig2_order},
      {2, "coatom order over the corpus", corpus_orders},
      {3, "nested basis counts match oracle HF", nested_basis_counts},
      {4, "Gorenstein suite", gorenstein_suite},
      {5, "closed-form colon suite", colon_suites},
      {6, "U56 colons with a quadratic generator", u56_colons},
      {7, "Koszul certificates through i=4", koszul_corpus},
      {8, "filtration walk", filtration_walks},
      {9, "building set counterexamples", counterexamples},
      {10, "quotient isomorphisms", quotient_checks},
      {11, "free coextension flats and G_aug", coextension_checks},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::stoi(argv[i]));
  int failures = 0;
  for (const auto& c : all) {
    if (!only.empty() && !only.count(c.id)) continue;
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    char t[32];
    std::snprintf(t, sizeof t, "%.2fs", seconds_since(t0));
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << t << "): " << o.detail << std::endl;
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
