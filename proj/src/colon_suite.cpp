#include "chowforge/colon_suite.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace chowforge {

std::string ColonSuiteReport::to_text() const {
  std::ostringstream s;
  s << instances << " instances";
  for (const auto& [rule, n] : by_rule) s << ", " << rule << " " << n;
  s << ", " << inapplicable << " without closed form";
  if (!failures.empty()) s << ", " << failures.size() << " FAILED";
  s << '\n';
  for (const auto& f : failures) s << "  " << f << '\n';
  return s.str();
}

namespace {

struct Runner {
  const ChowRing& r;
  ColonSuiteReport& rep;
  std::map<int, std::unique_ptr<ChowRing>> restricted;

  std::string flats(const std::vector<int>& v) const {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + r.flat_name(v[i]);
    return s + "}";
  }

  void record(const std::string& rule, const std::string& what, bool ok) {
    ++rep.instances;
    ++rep.by_rule[rule];
    if (!ok) rep.failures.push_back(rule + " " + what);
  }

  void truncation() {
    if (!r.is_variable(r.lattice().top())) return;
    auto got = colon(zero_ideal(r.oracle()), r.oracle_variable(r.lattice().top()));
    record("truncation", "(0:x_E)", equals_ideal(got, realize(r, truncation_annihilator(r))));
  }

  void restriction(int f) {
    auto& rf = restricted[f];
    if (!rf) rf = std::make_unique<ChowRing>(chowforge::restriction(r.matroid(), r.lattice().set(f)), r.kind());
    auto ker = restriction_kernel_oracle(r, *rf, f);
    record("restriction-kernel", "F=" + r.flat_name(f), equals_ideal(ker, realize(r, restriction_kernel(r, f))));
  }

  void upset(const std::vector<int>& up, int f) {
    auto got = colon(variable_ideal(r, up), r.oracle_variable(f));
    record("upset-colon", flats(up) + " : x_" + r.flat_name(f), equals_ideal(got, realize(r, upset_colon(r, up, f))));
  }

  void hyperplane(int h) {
    auto got = colon(zero_ideal(r.oracle()), r.oracle_variable(h));
    record("hyperplane-annihilator", "H=" + r.flat_name(h), equals_ideal(got, realize(r, hyperplane_annihilator(r, h))));
  }

  void set_annihilator(const std::vector<int>& hs) {
    auto got = colon(zero_ideal(r.oracle()), variable_ideal(r, hs));
    record("hyperplane-set-annihilator", flats(hs), equals_ideal(got, realize(r, hyperplane_set_annihilator(r, hs))));
  }

  void set_colon(const std::vector<int>& hs, int hp) {
    IdealDescriptor d;
    try {
      d = hyperplane_set_colon(r, hs, hp);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CoveringConditionViolated) throw;
      ++rep.inapplicable;
      return;
    }
    auto got = colon(variable_ideal(r, hs), r.oracle_variable(hp));
    record("hyperplane-set-colon", flats(hs) + " : x_" + r.flat_name(hp), equals_ideal(got, realize(r, d)));
  }

  // variable flats that are neither below f nor above it
  std::vector<int> free_flats(int f) const {
    std::vector<int> out;
    for (int g : r.variable_flats())
      if (!r.lattice().comparable(g, f)) out.push_back(g);
    // larger rank first so upward closure can be decided greedily
    std::stable_sort(out.begin(), out.end(), [&](int a, int b) { return r.flat_rank(a) > r.flat_rank(b); });
    return out;
  }

  std::vector<int> above(int f) const {
    std::vector<int> out;
    for (int g : r.variable_flats())
      if (r.lattice().less(f, g)) out.push_back(g);
    return out;
  }

  // all up-sets containing (f, E] and avoiding [0, f]
  void each_upset(int f, long cap, const std::function<void(const std::vector<int>&)>& fn) const {
    const Lattice& l = r.lattice();
    std::vector<int> fr = free_flats(f);
    std::vector<int> cur = above(f);
    long count = 0;
    std::function<void(std::size_t)> go = [&](std::size_t k) {
      if (count >= cap) return;
      if (k == fr.size()) {
        ++count;
        fn(cur);
        return;
      }
      go(k + 1);
      int g = fr[k];
      for (int h : r.variable_flats())
        if (l.less(g, h) && std::find(cur.begin(), cur.end(), h) == cur.end()) return;
      cur.push_back(g);
      go(k + 1);
      cur.pop_back();
    };
    go(0);
  }
};

}  // namespace

ColonSuiteReport colon_suite(const ChowRing& r, long samples, std::uint64_t seed, long max_upsets) {
  ColonSuiteReport rep;
  Runner run{r, rep, {}};
  const Lattice& l = r.lattice();
  std::vector<int> hyp = r.hyperplanes();
  if (samples < 0) {
    run.truncation();
    for (int f : r.variable_flats()) run.restriction(f);
    for (int f : r.variable_flats()) run.each_upset(f, max_upsets, [&](const std::vector<int>& up) { run.upset(up, f); });
    for (int h : hyp) run.hyperplane(h);
    if (hyp.size() > 20) throw Error(ErrorKind::BudgetExceeded, "too many hyperplanes for the exhaustive suite");
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << hyp.size()); ++mask) {
      std::vector<int> hs;
      for (std::size_t i = 0; i < hyp.size(); ++i)
        if ((mask >> i) & 1U) hs.push_back(hyp[i]);
      run.set_annihilator(hs);
      for (std::size_t i = 0; i < hyp.size(); ++i)
        if (!((mask >> i) & 1U)) run.set_colon(hs, hyp[i]);
    }
    return rep;
  }
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  const auto& vars = r.variable_flats();
  if (vars.empty()) return rep;
  run.truncation();
  long target = rep.instances + samples;
  long guard = 0;
  while (rep.instances < target && guard++ < 50 * (samples + 1)) {
    switch (rng() % 5) {
      case 0:
        run.restriction(vars[pick(vars.size())]);
        break;
      case 1: {
        int f = vars[pick(vars.size())];
        // random up-set: above(f) plus the up-closure of a random set of free flats
        std::vector<int> up = run.above(f);
        for (int g : run.free_flats(f))
          if (rng() % 3 == 0)
            for (int h : vars)
              if (l.leq(g, h) && !l.leq(h, f) && std::find(up.begin(), up.end(), h) == up.end()) up.push_back(h);
        run.upset(up, f);
        break;
      }
      case 2:
        if (!hyp.empty()) run.hyperplane(hyp[pick(hyp.size())]);
        break;
      default: {
        if (hyp.size() < 2) break;
        std::vector<int> hs;
        for (int h : hyp)
          if (rng() % 3 == 0) hs.push_back(h);
        if (hs.empty()) hs.push_back(hyp[pick(hyp.size())]);
        if (rng() % 2) {
          run.set_annihilator(hs);
        } else {
          std::vector<int> rest;
          for (int h : hyp)
            if (std::find(hs.begin(), hs.end(), h) == hs.end()) rest.push_back(h);
          if (rest.empty()) break;
          run.set_colon(hs, rest[pick(rest.size())]);
        }
      }
    }
  }
  return rep;
}

}  // namespace chowforge
