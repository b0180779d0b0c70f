#include "doctest.h"

#include "chowforge/augmented.hpp"
#include "chowforge/corpus.hpp"

using namespace chowforge;

namespace {
std::vector<int> trimmed(std::vector<int> v) {
  while (v.size() > 1 && v.back() == 0) v.pop_back();
  return v;
}
}  // namespace

TEST_CASE("rank one augmented ring") {
  ChowRing r(Matroid::uniform(1, 1), ChowKind::augmented);
  CHECK(trimmed(r.hilbert_function()) == std::vector<int>{1, 1});
  CHECK(r.nvars() == 1);
}

TEST_CASE("aChow(U23)") {
  ChowRing r(Matroid::uniform(2, 3), ChowKind::augmented);
  CHECK(r.nvars() == 4);
  CHECK(trimmed(r.hilbert_function()) == std::vector<int>{1, 4, 1});
  auto p = r.presentation();
  Polynomial x1x2 = Polynomial::variable(r.nvars(), r.variable_of(r.lattice().index_of(ElementSet{1}))) *
                    Polynomial::variable(r.nvars(), r.variable_of(r.lattice().index_of(ElementSet{2})));
  CHECK(std::find(p.relations.begin(), p.relations.end(), x1x2) != p.relations.end());
  auto top2 = r.nested_basis(2);
  REQUIRE(top2.size() == 1);
  CHECK(r.to_string(top2[0]) == "x_123^2");
}

TEST_CASE("augmented socle is x_E^rk") {
  for (auto [rk, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {3, 4}, {4, 5}}) {
    auto g = gorenstein_report(ChowRing(Matroid::uniform(rk, n), ChowKind::augmented));
    CHECK(g.pass());
  }
}

TEST_CASE("augmented truncation annihilator") {
  ChowRing r(Matroid::uniform(2, 3), ChowKind::augmented);
  auto d = truncation_annihilator(r);
  CHECK(d.flats.size() == 3);
  CHECK(equals_ideal(colon(zero_ideal(r.oracle()), r.oracle_variable(r.lattice().top())), realize(r, d)));
  CHECK(quotient_isomorphism_checks(r).pass());
  CHECK(hyperplane_set_annihilator(r, {}).shape == IdealDescriptor::Shape::unit);
}

TEST_CASE("free coextension flats") {
  for (const auto& e : matroid_corpus())
    if (e.matroid.ground_size() <= 5) CHECK(free_coextension_flats_check(e.matroid).pass());
}

TEST_CASE("G_aug is a building set") {
  for (auto [rk, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 3}, {3, 3}}) {
    auto rep = free_coextension_building_set_check(Matroid::uniform(rk, n));
    CHECK_MESSAGE(rep.pass(), rep.to_text());
  }
}
