#include "doctest.h"

#include "chowforge/corpus.hpp"
#include "chowforge/matroid.hpp"

using namespace chowforge;

TEST_CASE("uniform 3,3 is free") {
  Matroid m = Matroid::uniform(3, 3);
  CHECK(m.rank() == 3);
  for (std::uint64_t b = 0; b < 8; ++b) CHECK(m.is_independent(ElementSet::from_bits(b)));
}

TEST_CASE("bases 12,13,23 give U23") {
  Matroid m = Matroid::from_bases(3, {ElementSet{1, 2}, ElementSet{1, 3}, ElementSet{2, 3}});
  CHECK(m.rank() == 2);
  CHECK(m.flats().size() == 5);
}

TEST_CASE("malformed bases are rejected") {
  CHECK_THROWS_AS(Matroid::from_bases(3, {ElementSet{1, 2}, ElementSet{3}}), Error);
  CHECK_THROWS_AS(Matroid::from_bases(4, {ElementSet{1, 2}, ElementSet{3, 4}}), Error);
  CHECK_THROWS_AS(Matroid::from_flats(3, {ElementSet{}, ElementSet{1, 2}, ElementSet{2, 3}, ElementSet{1, 2, 3}}), Error);
}

TEST_CASE("rank queries") {
  CHECK(Matroid::uniform(5, 6).rank(ElementSet{1, 2, 3, 4}) == 4);
  Matroid f = figure2_matroid();
  CHECK(f.rank() == 4);
  CHECK(f.rank(ElementSet{}) == 0);
  CHECK(f.rank(ElementSet{1, 2, 3, 4}) == 3);
  CHECK_THROWS_AS(f.rank(ElementSet{6}), Error);
}

TEST_CASE("closure in the figure 2 matroid") {
  Matroid f = figure2_matroid();
  CHECK(f.closure(ElementSet{1, 2}) == ElementSet{1, 2});
  CHECK(f.closure(ElementSet{1, 2, 3}) == ElementSet{1, 2, 3, 4});
  for (auto fl : f.flats()) CHECK(f.closure(fl) == fl);
}

TEST_CASE("simplification") {
  // 1 and 2 parallel
  Matroid p = Matroid::from_bases(3, {ElementSet{1, 3}, ElementSet{2, 3}});
  Matroid s = simplify(p);
  CHECK(s.ground_size() == 2);
  CHECK(s.rank() == 2);
  CHECK(s.is_simple());
  // 3 a loop
  Matroid l = Matroid::from_bases(3, {ElementSet{1}, ElementSet{2}});
  CHECK(simplify(l).ground_size() == 1);
  CHECK_THROWS_AS(simplify(Matroid::uniform(0, 2)), Error);
}

TEST_CASE("restriction") {
  Matroid r = restriction(Matroid::uniform(3, 4), ElementSet{1, 2});
  CHECK(r.ground_size() == 2);
  CHECK(r.rank() == 2);
  Matroid f = figure2_matroid();
  Matroid h = restriction(f, ElementSet{1, 2, 3, 4});
  CHECK(h.rank() == 3);
  std::size_t below = 0;
  for (auto fl : f.flats())
    if (fl.is_subset_of(ElementSet{1, 2, 3, 4})) ++below;
  CHECK(h.flats().size() == below);
}

TEST_CASE("truncation removes the hyperplanes") {
  Matroid t = truncation(Matroid::uniform(3, 3));
  CHECK(t.rank() == 2);
  CHECK(t.flats().size() == 5);
  CHECK(truncation(t).rank() == 1);
  for (const auto& e : matroid_corpus()) {
    const Matroid& m = e.matroid;
    if (m.rank() < 2) continue;
    Matroid tm = truncation(m);
    auto hyp = m.hyperplanes();
    std::size_t expect = 0;
    for (auto fl : m.flats())
      if (std::find(hyp.begin(), hyp.end(), fl) == hyp.end()) {
        ++expect;
        CHECK(tm.is_flat(fl));
      }
    CHECK(tm.flats().size() == expect);
  }
  CHECK_THROWS_AS(truncation(Matroid::uniform(0, 1)), Error);
}

TEST_CASE("dual and free coextension") {
  Matroid d = dual(Matroid::uniform(2, 3));
  CHECK(d.rank() == 1);
  CHECK(d.bases().size() == 3);
  Matroid c = free_coextension(Matroid::uniform(2, 3));
  CHECK(c.ground_size() == 4);
  CHECK(c.rank() == 3);
  int with_e = 0, without = 0;
  for (auto fl : c.flats()) (fl.contains(4) ? with_e : without)++;
  CHECK(with_e == 5);
  CHECK(without == 7);
}

TEST_CASE("rank axioms and closure laws on the corpus") {
  for (const auto& e : matroid_corpus()) {
    const Matroid& m = e.matroid;
    int n = m.ground_size();
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
      ElementSet x = ElementSet::from_bits(a);
      ElementSet cx = m.closure(x);
      CHECK(x.is_subset_of(cx));
      CHECK(m.closure(cx) == cx);
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
        ElementSet y = ElementSet::from_bits(b);
        if (m.rank(x) + m.rank(y) < m.rank(x | y) + m.rank(x & y)) FAIL("submodularity fails in " << e.name);
        if (x.is_subset_of(y) && !cx.is_subset_of(m.closure(y))) FAIL("closure not monotone in " << e.name);
      }
    }
  }
}

TEST_CASE("corpus of small simple matroids") {
  auto small = small_simple_matroids(5);
  CHECK(small.size() == 17);
  for (const auto& m : small) CHECK(m.is_simple());
  CHECK(matroid_corpus().size() == 21);
}
