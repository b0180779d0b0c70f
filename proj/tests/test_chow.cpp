#include "doctest.h"

#include "chowforge/chow_ring.hpp"
#include "chowforge/colon_suite.hpp"
#include "chowforge/corpus.hpp"
#include "chowforge/io.hpp"

using namespace chowforge;

namespace {

int flat(const ChowRing& r, std::initializer_list<int> s) { return r.lattice().index_of(ElementSet(s)); }

std::vector<std::string> names(const ChowRing& r, const std::vector<NestedMonomial>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(r.to_string(m));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> trimmed(std::vector<int> v) {
  while (v.size() > 1 && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(ChowRing(Matroid::uniform(0, 2)), Error);
  CHECK_THROWS_AS(ChowRing(Matroid::from_bases(3, {ElementSet{1, 3}, ElementSet{2, 3}})), Error);
}

TEST_CASE("variables and order of Chow(U33)") {
  ChowRing r(Matroid::uniform(3, 3));
  CHECK(r.nvars() == 4);
  CHECK(r.variable_names().front().rfind("x_", 0) == 0);
  // rank ascending: the top is the smallest variable
  CHECK(r.flat_of(r.nvars() - 1) == r.lattice().top());
}

TEST_CASE("nested basis of Chow(U33)") {
  ChowRing r(Matroid::uniform(3, 3));
  CHECK(names(r, r.nested_basis(0)) == std::vector<std::string>{"1"});
  CHECK(names(r, r.nested_basis(1)) == std::vector<std::string>{"x_12", "x_123", "x_13", "x_23"});
  CHECK(names(r, r.nested_basis(2)) == std::vector<std::string>{"x_123^2"});
  CHECK(r.nested_basis(3).empty());
}

TEST_CASE("Hilbert series") {
  CHECK(polynomial_string(ChowRing(Matroid::uniform(2, 3)).hilbert_function()) == "1 + t");
  CHECK(polynomial_string(ChowRing(Matroid::uniform(3, 3)).hilbert_function()) == "1 + 4t + t^2");
  CHECK(polynomial_string(ChowRing(Matroid::uniform(3, 4)).hilbert_function()) == "1 + 7t + t^2");
}

TEST_CASE("multiplication in Chow(U33)") {
  ChowRing r(Matroid::uniform(3, 3));
  auto x12 = r.variable(flat(r, {1, 2}));
  auto x13 = r.variable(flat(r, {1, 3}));
  auto top = r.variable(flat(r, {1, 2, 3}));
  CHECK(r.multiply(x12, x13).is_zero());
  CHECK(r.to_string(r.multiply(x12, x12)) == "-x_123^2");
  CHECK(r.multiply(x12, top).is_zero());
}

TEST_CASE("nested basis agrees with the oracle and products agree") {
  for (const auto& e : matroid_corpus()) {
    if (e.matroid.ground_size() > 5) continue;
    for (auto kind : {ChowKind::standard, ChowKind::augmented}) {
      ChowRing r(e.matroid, kind);
      CHECK(trimmed(r.hilbert_function()) == trimmed(r.oracle().hilbert_function()));
      // basis pairs against the oracle
      for (int i = 0; i <= r.socle_degree(); ++i)
        for (const auto& a : r.nested_basis(i))
          for (int j = i; i + j <= r.socle_degree(); ++j)
            for (const auto& b : r.nested_basis(j)) {
              ChowElement ea, eb;
              ea.add(a, 1);
              eb.add(b, 1);
              auto prod = r.multiply(ea, eb);
              auto want = r.oracle().multiply(r.to_oracle(ea), r.to_oracle(eb));
              auto got = r.to_oracle(prod);
              if (got.v != want.v) FAIL(e.name << ": " << r.to_string(a) << " * " << r.to_string(b));
            }
    }
  }
}

TEST_CASE("Groebner basis lies in the ideal") {
  ChowRing r(Matroid::uniform(3, 4));
  auto gb = r.groebner_basis();
  CHECK_FALSE(gb.empty());
  for (const auto& p : gb) CHECK(r.normal_form(p).is_zero());
  CHECK(r.monomial_order().size() == static_cast<std::size_t>(r.nvars()));
}

TEST_CASE("remark relations") {
  for (const auto& e : matroid_corpus()) {
    if (e.matroid.rank() < 3 || e.matroid.ground_size() > 5) continue;
    ChowRing r(e.matroid);
    int top = r.lattice().top();
    int rk = r.rank();
    auto xe = r.variable(top);
    for (int h : r.hyperplanes()) {
      auto xh = r.variable(h);
      CHECK(r.multiply(xh, xe).is_zero());
      auto xh_pow = r.one();
      for (int k = 0; k < r.flat_rank(h); ++k) xh_pow = r.multiply(xh_pow, xh);
      auto xe_pow = r.one();
      for (int k = 0; k < rk - 1; ++k) xe_pow = r.multiply(xe_pow, xe);
      CHECK(r.sum(xh_pow, xe_pow).is_zero());
    }
  }
}

TEST_CASE("augmented remark relations") {
  for (auto [rk, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {3, 4}}) {
    ChowRing r(Matroid::uniform(rk, n), ChowKind::augmented);
    int top = r.lattice().top();
    auto xe = r.variable(top);
    for (int h : r.hyperplanes()) {
      auto xh = r.variable(h);
      CHECK(r.multiply(xh, xe).is_zero());
      auto xh_pow = r.one();
      for (int k = 0; k <= r.flat_rank(h); ++k) xh_pow = r.multiply(xh_pow, xh);
      auto xe_pow = r.one();
      for (int k = 0; k < rk; ++k) xe_pow = r.multiply(xe_pow, xe);
      CHECK(r.sum(xh_pow, xe_pow).is_zero());
    }
  }
}

TEST_CASE("Gorenstein") {
  for (const auto& e : matroid_corpus()) {
    if (e.matroid.ground_size() > 5) continue;
    for (auto kind : {ChowKind::standard, ChowKind::augmented}) CHECK(gorenstein_report(ChowRing(e.matroid, kind)).pass());
  }
}

TEST_CASE("hyperplane ideal basis spans the ideal") {
  ChowRing r(Matroid::uniform(3, 3));
  int h12 = flat(r, {1, 2});
  CHECK(names(r, hyperplane_ideal_basis(r, {h12}, 1)) == std::vector<std::string>{"x_12"});
  CHECK(names(r, hyperplane_ideal_basis(r, {h12}, 2)) == std::vector<std::string>{"x_123^2"});
  CHECK(hyperplane_ideal_basis(r, {}, 1).empty());
  CHECK_THROWS_AS(hyperplane_ideal_basis(r, {flat(r, {1})}, 1), Error);
  for (const auto& e : matroid_corpus()) {
    if (e.matroid.ground_size() > 4 || e.matroid.rank() < 2) continue;
    for (auto kind : {ChowKind::standard, ChowKind::augmented}) {
      ChowRing c(e.matroid, kind);
      auto hyp = c.hyperplanes();
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << hyp.size()); ++mask) {
        std::vector<int> hs;
        for (std::size_t i = 0; i < hyp.size(); ++i)
          if ((mask >> i) & 1U) hs.push_back(hyp[i]);
        auto ideal = variable_ideal(c, hs);
        for (int d = 0; d <= c.socle_degree(); ++d) {
          auto basis = hyperplane_ideal_basis(c, hs, d);
          CHECK(static_cast<int>(basis.size()) == ideal.dim(d));
          for (const auto& m : basis) {
            ChowElement x;
            x.add(m, 1);
            CHECK(ideal.contains(c.to_oracle(x)));
          }
        }
      }
    }
  }
}

TEST_CASE("closed forms on U33") {
  ChowRing r(Matroid::uniform(3, 3));
  CHECK(truncation_annihilator(r).to_string(r) == "(x_12, x_13, x_23)");
  auto a = hyperplane_annihilator(r, flat(r, {1, 2}));
  std::vector<std::string> got;
  for (int f : a.flats) got.push_back(r.flat_name(f));
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<std::string>{"123", "13", "23"});
}

TEST_CASE("covering condition fails for 1234 and 1256 in U56") {
  ChowRing r(Matroid::uniform(5, 6));
  CHECK_THROWS_AS(hyperplane_set_colon(r, {flat(r, {1, 2, 3, 4})}, flat(r, {1, 2, 5, 6})), Error);
  CHECK_FALSE(covering_condition(r, {flat(r, {1, 2, 3, 4})}, flat(r, {1, 2, 5, 6})));
}

TEST_CASE("closed forms equal oracle colons on small matroids") {
  for (const auto& e : matroid_corpus()) {
    if (e.matroid.ground_size() > 4) continue;
    for (auto kind : {ChowKind::standard, ChowKind::augmented}) {
      auto rep = colon_suite(ChowRing(e.matroid, kind));
      CHECK_MESSAGE(rep.pass(), e.name << ": " << rep.to_text());
    }
  }
}

TEST_CASE("quotient isomorphisms") {
  ChowRing r(Matroid::uniform(3, 4));
  auto ann = colon(zero_ideal(r.oracle()), r.oracle_variable(r.lattice().top()));
  CHECK(trimmed(ann.quotient_dims()) == std::vector<int>{1, 1});
  CHECK(quotient_isomorphism_checks(r).pass());
  CHECK(quotient_isomorphism_checks(ChowRing(figure2_matroid())).pass());
  CHECK(quotient_isomorphism_checks(ChowRing(Matroid::uniform(2, 4))).pass());
}

TEST_CASE("element JSON round trip") {
  ChowRing r(Matroid::uniform(3, 4));
  auto x = r.sum(r.variable(flat(r, {1, 2})), r.scaled(r.variable(flat(r, {1, 2, 3, 4})), Rational(3, 2)));
  auto sq = r.multiply(x, x);
  auto j = element_to_json(r, sq);
  CHECK(element_from_json(r, j) == sq);
  CHECK(element_from_json(r, j["terms"]) == sq);
  ChowRing a(Matroid::uniform(3, 4), ChowKind::augmented);
  CHECK_THROWS_AS(element_from_json(a, j), Error);
}
