#include "doctest.h"

#include "chowforge/chow_ring.hpp"
#include "chowforge/coatom_order.hpp"
#include "chowforge/corpus.hpp"
#include "chowforge/lattice.hpp"

using namespace chowforge;

namespace {
int id(const Lattice& l, std::initializer_list<int> s) { return l.index_of(ElementSet(s)); }
}  // namespace

TEST_CASE("boolean lattice profile") {
  Lattice l = Lattice::of_flats(Matroid::uniform(3, 3));
  REQUIRE(l.by_rank().size() == 4);
  CHECK(l.by_rank()[0].size() == 1);
  CHECK(l.by_rank()[1].size() == 3);
  CHECK(l.by_rank()[2].size() == 3);
  CHECK(l.by_rank()[3].size() == 1);
}

TEST_CASE("lattice of U34 plus a coloop") {
  Lattice l = Lattice::of_flats(figure2_matroid());
  CHECK(l.size() == 24);
  CHECK(l.atoms().size() == 5);
  CHECK(l.by_rank()[2].size() == 10);
  CHECK(l.coatoms_of(l.top()).size() == 7);
  CHECK(l.meet(id(l, {1, 2, 3, 4}), id(l, {1, 2, 5})) == id(l, {1, 2}));
  CHECK(l.join(id(l, {1, 2}), id(l, {3, 5})) == l.top());
  CHECK(l.meet(id(l, {1, 2}), id(l, {1, 2})) == id(l, {1, 2}));
  CHECK_THROWS_AS(l.index_of(ElementSet{1, 2, 3}), Error);
}

TEST_CASE("U56 coatoms are the 4-subsets") {
  Lattice l = Lattice::of_flats(Matroid::uniform(5, 6));
  auto co = l.coatoms_of(l.top());
  CHECK(co.size() == 15);
  for (int h : co) CHECK(l.set(h).size() == 4);
}

TEST_CASE("meet and join agree with brute force") {
  for (const auto& e : matroid_corpus()) {
    Lattice l = Lattice::of_flats(e.matroid);
    for (int a = 0; a < l.size(); ++a)
      for (int b = 0; b < l.size(); ++b) {
        CHECK(l.set(l.meet(a, b)) == (l.set(a) & l.set(b)));
        CHECK(l.set(l.join(a, b)) == e.matroid.closure(l.set(a) | l.set(b)));
      }
  }
}

TEST_CASE("geometric test") {
  CHECK(is_geometric(Lattice::of_flats(Matroid::uniform(3, 3))).geometric());
  for (const auto& e : matroid_corpus()) CHECK(is_geometric(Lattice::of_flats(e.matroid)).geometric());
  auto g = is_geometric(figure3_lattice());
  CHECK(g.atomic);
  CHECK_FALSE(g.semimodular);
  CHECK(!g.witness.empty());
}

TEST_CASE("raw lattice rejects non-lattices") {
  // two maximal elements over the same pair of atoms
  CHECK_THROWS_AS(Lattice::from_covers({"0", "a", "b", "c", "d", "1"},
                                       {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}}),
                  Error);
}

TEST_CASE("interval") {
  Lattice l = Lattice::of_flats(figure2_matroid());
  Lattice i = l.interval(l.bottom(), id(l, {1, 2, 3, 4}));
  CHECK(i.height() == 3);
  CHECK_THROWS_AS(l.interval(id(l, {1, 2}), id(l, {3, 5})), Error);
}

TEST_CASE("coatom comparator") {
  Matroid f = figure2_matroid();
  CHECK(coatom_compare(f, ElementSet{1, 2, 3, 4}, ElementSet{1, 2, 5}) == Ordering::greater);
  CHECK(coatom_compare(f, ElementSet{1, 2, 5}, ElementSet{1, 3, 5}) == Ordering::greater);
  CHECK(coatom_compare(f, ElementSet{1, 2, 5}, ElementSet{1, 2, 5}) == Ordering::equal);
}

TEST_CASE("coatom order of U34 plus a coloop") {
  Lattice l = Lattice::of_flats(figure2_matroid());
  CoatomOrder ord = coatom_order(l);
  auto co = sorted_coatoms(l, ord, l.top());
  std::vector<std::string> names;
  for (auto it = co.rbegin(); it != co.rend(); ++it) names.push_back(element_label(l, *it));
  CHECK(names == std::vector<std::string>{"1234", "125", "135", "235", "145", "245", "345"});
  CHECK(verify_total_coatom_order(l, ord).pass);
}

TEST_CASE("scrambled order fails") {
  Lattice l = Lattice::of_flats(figure2_matroid());
  CoatomOrder ord = coatom_order(l);
  auto seq = ord.ascending();
  auto a = std::find(seq.begin(), seq.end(), id(l, {1, 2, 3, 4}));
  auto b = std::find(seq.begin(), seq.end(), id(l, {3, 4, 5}));
  std::iter_swap(a, b);
  auto rep = verify_total_coatom_order(l, CoatomOrder(l, seq));
  CHECK_FALSE(rep.pass);
}

TEST_CASE("initial segments and restricted coatoms") {
  Lattice b3 = Lattice::of_flats(Matroid::uniform(3, 3));
  CoatomOrder o3 = coatom_order(b3);
  CHECK(initial_segments(b3, o3, b3.top()).size() == 4);
  Lattice l = Lattice::of_flats(figure2_matroid());
  CoatomOrder ord = coatom_order(l);
  int h = id(l, {1, 2, 5});
  CHECK(coat_restricted(l, ord, {id(l, {1, 2, 3, 4}), h}, h) == std::vector<int>{id(l, {1, 2})});
  CHECK(coat_restricted(l, ord, {h}, h).empty());
}

TEST_CASE("order restricts to intervals") {
  for (const auto& e : matroid_corpus()) {
    Lattice l = Lattice::of_flats(e.matroid);
    CoatomOrder ord = coatom_order(l);
    for (int f = 0; f < l.size(); ++f) {
      if (f == l.bottom()) continue;
      Matroid r = restriction(e.matroid, l.set(f));
      Lattice lr = Lattice::of_flats(r);
      CoatomOrder orr = coatom_order(lr);
      ElementSet fs = l.set(f);
      std::vector<int> below = l.down_set(f);
      for (int a : below)
        for (int b : below) {
          int ra = lr.index_of(compress(l.set(a), fs));
          int rb = lr.index_of(compress(l.set(b), fs));
          if (ord.less(a, b) != orr.less(ra, rb)) FAIL("restriction changes the order in " << e.name);
        }
    }
  }
}

TEST_CASE("coatom order passes on the corpus") {
  for (const auto& e : matroid_corpus()) {
    Lattice l = Lattice::of_flats(e.matroid);
    CHECK(verify_total_coatom_order(l, coatom_order(l)).pass);
  }
}
