#include "doctest.h"

#include <set>

#include "chowforge/corpus.hpp"
#include "chowforge/koszul.hpp"

using namespace chowforge;

TEST_CASE("certificate for Chow(U33)") {
  ChowRing r(Matroid::uniform(3, 3));
  auto c = koszul_certificate(r.oracle(), 3);
  CHECK(c.pass());
  CHECK(c.hilbert == std::vector<int>{1, 4, 1});
  CHECK(c.betti.total(1) == 4);
  CHECK(c.betti.total(2) == 15);
  CHECK(c.betti.total(3) == 56);
  CHECK(c.to_text().find("56") != std::string::npos);
}

TEST_CASE("certificate over GF(p) matches Q") {
  ChowRing r(Matroid::uniform(3, 4));
  ModulusScope scope(32003);
  auto qp = r.build_oracle<ModP>();
  auto cp = koszul_certificate(qp, 3);
  auto cq = koszul_certificate(r.oracle(), 3);
  CHECK(cp.hilbert == cq.hilbert);
  CHECK(cp.betti.beta == cq.betti.beta);
  CHECK(cp.pass());
}

TEST_CASE("augmented certificates") {
  for (auto [rk, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 3}, {3, 3}}) {
    ChowRing r(Matroid::uniform(rk, n), ChowKind::augmented);
    CHECK(koszul_certificate(r.oracle(), 3).pass());
  }
}

TEST_CASE("filtration members") {
  ChowRing r(Matroid::uniform(3, 4));
  auto& l = r.lattice();
  int top = l.top();
  int h12 = l.index_of(ElementSet{1, 2});
  auto pos = FiltrationIdeal::positive(r);
  CHECK(pos.generators(r).size() == static_cast<std::size_t>(r.nvars()));
  CHECK(FiltrationIdeal::zero().is_zero(r));
  CHECK(FiltrationIdeal::f0(r, {top}).generators(r) == std::vector<int>{top});
  CHECK_THROWS_AS(FiltrationIdeal::f0(r, {h12}), Error);
  CHECK_THROWS_AS(FiltrationIdeal::f0(r, {l.index_of(ElementSet{1})}), Error);
  auto f1 = FiltrationIdeal::f1(r, top, {});
  CHECK(f1.to_string(r).rfind("F1(", 0) == 0);
  auto coat = r.order().ascending();
  std::vector<int> wrong{coat.back()};
  if (coat.size() > 1) CHECK_THROWS_AS(FiltrationIdeal::f1(r, top, wrong), Error);
}

TEST_CASE("witness step of the zero ideal") {
  ChowRing r(Matroid::uniform(3, 3));
  CHECK_THROWS_AS(filtration_witness_step(r, FiltrationIdeal::zero()), Error);
}

TEST_CASE("witness steps remove one generator") {
  ChowRing r(figure2_matroid());
  auto step = filtration_witness_step(r, FiltrationIdeal::positive(r));
  auto i = FiltrationIdeal::positive(r).generators(r);
  auto j = step.j.generators(r);
  CHECK(j.size() + 1 == i.size());
  std::set<int> js(j.begin(), j.end());
  js.insert(step.x);
  CHECK(js == std::set<int>(i.begin(), i.end()));
  auto colon_oracle = colon(variable_ideal(r, j), r.oracle_variable(step.x));
  CHECK(equals_ideal(colon_oracle, realize(r, IdealDescriptor{IdealDescriptor::Shape::generated, "", step.c.generators(r)})));
}

TEST_CASE("filtration walk on small rings") {
  for (const char* name : {"U2,3", "U3,3", "U3,4", "S3,5.1", "U4,4", "fig2", "MC4"}) {
    auto m = corpus_matroid(name);
    REQUIRE(m.has_value());
    for (auto kind : {ChowKind::standard, ChowKind::augmented}) {
      if (kind == ChowKind::augmented && m->ground_size() > 4) continue;
      auto rep = verify_filtration(ChowRing(*m, kind));
      CHECK_MESSAGE(rep.pass, name << ": " << rep.to_text());
      CHECK(rep.complete);
      CHECK(rep.steps_checked + 1 >= rep.visited);
    }
  }
}

TEST_CASE("filtration samples") {
  WalkOptions opt;
  opt.samples = 25;
  opt.seed = 7;
  auto rep = verify_filtration(ChowRing(Matroid::uniform(4, 5)), opt);
  CHECK(rep.pass);
  CHECK(rep.sampled == 25);
}

TEST_CASE("walk budget") {
  WalkOptions opt;
  opt.max_nodes = 3;
  auto rep = verify_filtration(ChowRing(Matroid::uniform(4, 4)), opt);
  CHECK_FALSE(rep.complete);
  CHECK_FALSE(rep.pass);
}
