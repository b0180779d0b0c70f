#include "chowforge/augmented.hpp"

#include <sstream>

#include "chowforge/building_sets.hpp"
#include "chowforge/series.hpp"

namespace chowforge {

namespace {

std::string hf_string(std::vector<int> hf) {
  while (hf.size() > 1 && hf.back() == 0) hf.pop_back();
  std::string s = "(";
  for (std::size_t i = 0; i < hf.size(); ++i) s += (i ? "," : "") + std::to_string(hf[i]);
  return s + ")";
}

}  // namespace

CheckReport free_coextension_flats_check(const Matroid& m) {
  CheckReport rep;
  Matroid c = free_coextension(m);
  int n = m.ground_size();
  int e = n + 1;
  rep.add("rank", c.rank() == m.rank() + 1, std::to_string(c.rank()));
  long bad_with = 0, bad_without = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    ElementSet f = ElementSet::from_bits(bits);
    ElementSet fe = f;
    fe.insert(e);
    if (c.is_flat(fe) != m.is_flat(f)) ++bad_with;
    if (c.is_flat(f) != m.is_independent(f)) ++bad_without;
    if (c.rank(fe) != m.rank(f) + 1) ++bad_with;
  }
  rep.add("F+e flat iff F flat", bad_with == 0, std::to_string(bad_with) + " mismatches");
  rep.add("F flat iff F independent", bad_without == 0, std::to_string(bad_without) + " mismatches");
  return rep;
}

std::vector<int> augmented_building_set(const Lattice& coext, int e) {
  std::vector<int> g = coext.atoms();
  for (int x = 0; x < coext.size(); ++x)
    if (coext.set(x).contains(e)) g.push_back(x);
  return g;
}

CheckReport free_coextension_building_set_check(const Matroid& m) {
  CheckReport rep;
  Matroid c = free_coextension(m);
  Lattice l = Lattice::of_flats(c);
  std::vector<int> g = augmented_building_set(l, m.ground_size() + 1);
  auto bs = is_building_set(l, g);
  rep.add("G_aug is a building set", bs.ok, bs.ok ? std::to_string(g.size()) + " elements" : bs.reason);
  if (!bs.ok) return rep;
  auto d = dlg_presentation(l, make_building_set(l, g));
  GradedQuotient<Rational> q(d.algebra);
  ChowRing a(m, ChowKind::augmented);
  auto hd = q.hilbert_function();
  auto ha = a.hilbert_function();
  while (hd.size() > 1 && hd.back() == 0) hd.pop_back();
  while (ha.size() > 1 && ha.back() == 0) ha.pop_back();
  rep.add("HF(D(L, G_aug)) = HF(aChow)", hd == ha, hf_string(hd) + " vs " + hf_string(ha));
  return rep;
}

}  // namespace chowforge
