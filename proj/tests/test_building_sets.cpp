#include "doctest.h"

#include "chowforge/building_sets.hpp"
#include "chowforge/chow_ring.hpp"
#include "chowforge/corpus.hpp"
#include "chowforge/koszul.hpp"

using namespace chowforge;

namespace {

std::vector<int> trimmed(std::vector<int> v) {
  while (v.size() > 1 && v.back() == 0) v.pop_back();
  return v;
}

std::vector<std::string> labels(const Lattice& l, const std::vector<int>& xs) {
  std::vector<std::string> out;
  for (int x : xs) out.push_back(element_label(l, x));
  return out;
}

}  // namespace

TEST_CASE("building sets of B3") {
  Lattice l = Lattice::of_flats(Matroid::uniform(3, 3));
  CHECK(is_building_set(l, parse_elements(l, "1,2,3,123")).ok);
  // Boolean: every interval splits into atoms
  CHECK(labels(l, minimal_building_set(l).elements) == std::vector<std::string>{"1", "2", "3"});
  CHECK(maximal_building_set(l).elements.size() == 7);
  CHECK(is_building_set(l, parse_elements(l, "1,2,3,12")).ok);
  auto bad = is_building_set(l, parse_elements(l, "1,2,3,12,13"));
  CHECK_FALSE(bad.ok);
  CHECK(element_label(l, bad.witness) == "123");
  CHECK_THROWS_AS(make_building_set(l, parse_elements(l, "1,2,3,12,13")), Error);
  CHECK_THROWS_AS(parse_elements(l, "1,4"), Error);
  // without 123: at most one rank 2 flat; with 123: any
  CHECK(all_building_sets(l).size() == 12);
  Lattice u = Lattice::of_flats(Matroid::uniform(3, 4));
  auto atoms_only = is_building_set(u, u.atoms());
  CHECK_FALSE(atoms_only.ok);
  CHECK(atoms_only.witness == u.top());
}

TEST_CASE("reducible elements") {
  Lattice l = Lattice::of_flats(Matroid::uniform(3, 3));
  CHECK(is_reducible(l, l.index_of(ElementSet{1, 2})));
  CHECK(is_reducible(l, l.top()));
  CHECK_FALSE(is_reducible(l, l.index_of(ElementSet{1})));
  Lattice u = Lattice::of_flats(Matroid::uniform(3, 4));
  CHECK_FALSE(is_reducible(u, u.top()));
}

TEST_CASE("nested complex") {
  Lattice l = Lattice::of_flats(Matroid::uniform(3, 3));
  auto g = make_building_set(l, parse_elements(l, "1,2,3,123"));
  auto c = nested_complex(l, g);
  CHECK(c.minimal_nonfaces.size() == 1);
  CHECK(c.is_nested(parse_elements(l, "1,2")));
  CHECK_FALSE(c.is_nested(parse_elements(l, "1,2,3")));
}

TEST_CASE("maximal building set reproduces the Chow ring") {
  for (const char* name : {"U2,3", "U3,3", "U3,4", "S3,5.1", "fig2"}) {
    auto m = *corpus_matroid(name);
    Lattice l = Lattice::of_flats(m);
    auto d = dlg_presentation(l, maximal_building_set(l));
    GradedQuotient<Rational> q(d.algebra);
    CHECK(trimmed(q.hilbert_function()) == trimmed(ChowRing(m).hilbert_function()));
  }
}

TEST_CASE("D(B3, G_min) is not Koszul") {
  Lattice l = Lattice::of_flats(Matroid::uniform(3, 3));
  auto d = dlg_presentation(l, make_building_set(l, parse_elements(l, "1,2,3,123")));
  GradedQuotient<Rational> q(d.algebra);
  CHECK(trimmed(q.hilbert_function()) == std::vector<int>{1, 1, 1});
  auto c = koszul_certificate(q, 3);
  CHECK(c.betti.at(2, 3) == 1);
  CHECK_FALSE(c.linear);
}

TEST_CASE("D(L(MC4), G_min) is not Koszul") {
  Lattice l = Lattice::of_flats(cycle4_matroid());
  auto g = minimal_building_set(l);
  auto d = dlg_presentation(l, g);
  GradedQuotient<Rational> q(d.algebra);
  CHECK(trimmed(q.hilbert_function()) == std::vector<int>{1, 1, 1});
  CHECK(koszul_certificate(q, 3).betti.at(2, 3) == 1);
}

TEST_CASE("atomic lattice that is not semimodular") {
  Lattice l = figure3_lattice();
  auto geo = is_geometric(l);
  CHECK(geo.atomic);
  CHECK_FALSE(geo.semimodular);
  auto g = maximal_building_set(l);
  auto d = dlg_presentation(l, g);
  GradedQuotient<Rational> q(d.algebra);
  CHECK(trimmed(q.hilbert_function()) == std::vector<int>{1, 3});
  CHECK(koszul_certificate(q, 3).pass());
  auto s = socle(q);
  int total = 0;
  for (int x : s.dims()) total += x;
  CHECK(total == 3);
}

TEST_CASE("non-atomic lattice") {
  // chain 0 < a < 1
  Lattice l = Lattice::from_covers({"0", "a", "1"}, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(maximal_building_set(l), Error);
}
