#include "doctest.h"

#include "chowforge/betti.hpp"
#include "chowforge/chow_ring.hpp"
#include "chowforge/graded_quotient.hpp"
#include "chowforge/koszul.hpp"
#include "chowforge/series.hpp"

using namespace chowforge;

namespace {

PresentedAlgebra one_variable(int power, int cutoff) {
  PresentedAlgebra a;
  a.variables = {"x"};
  a.relations = {Polynomial::variable(1, 0).pow(power)};
  a.max_degree = cutoff;
  return a;
}

PresentedAlgebra free_algebra(int k, int cutoff) {
  PresentedAlgebra a;
  for (int i = 0; i < k; ++i) a.variables.push_back("y" + std::to_string(i));
  a.max_degree = cutoff;
  return a;
}

long binom(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("k[x]/(x^3)") {
  GradedQuotient<Rational> q(one_variable(3, 4));
  CHECK(q.hilbert_function() == std::vector<int>{1, 1, 1, 0, 0});
  CHECK(q.is_artinian());
}

TEST_CASE("free algebras have binomial dimensions") {
  for (int k = 1; k <= 4; ++k) {
    GradedQuotient<Rational> q(free_algebra(k, 4));
    for (int d = 0; d <= 4; ++d) CHECK(q.dim(d) == binom(k + d - 1, d));
    CHECK_FALSE(q.is_artinian());
  }
}

TEST_CASE("cutoff below the relation degree") {
  CHECK_THROWS_AS(GradedQuotient<Rational>(one_variable(3, 2)), Error);
}

TEST_CASE("inhomogeneous relation") {
  PresentedAlgebra a = one_variable(2, 3);
  a.relations[0] = a.relations[0] + Polynomial::variable(1, 0);
  CHECK_THROWS_AS(GradedQuotient<Rational>{a}, Error);
}

TEST_CASE("socle of Chow(U33)") {
  ChowRing r(Matroid::uniform(3, 3));
  const auto& q = r.oracle();
  CHECK(q.hilbert_function() == std::vector<int>{1, 4, 1, 0});
  auto s = socle(q);
  CHECK(s.dims() == std::vector<int>{0, 0, 1, 0});
  auto top = r.to_oracle(r.multiply(r.variable(r.lattice().top()), r.variable(r.lattice().top())));
  CHECK(s.contains(top));
}

TEST_CASE("colon by one and linkage") {
  ChowRing r(Matroid::uniform(3, 4));
  const auto& q = r.oracle();
  auto hs = r.hyperplanes();
  std::vector<int> two(hs.begin(), hs.begin() + 2);
  auto j = variable_ideal(r, two);
  CHECK(equals_ideal(colon(j, q.one()), j));
  auto ann = annihilator(j);
  CHECK(equals_ideal(annihilator(ann), j));
}

TEST_CASE("(x_1234) : x_1256 in U56 is not linear") {
  ChowRing r(Matroid::uniform(5, 6));
  const Lattice& l = r.lattice();
  int h = l.index_of(ElementSet{1, 2, 3, 4});
  int hp = l.index_of(ElementSet{1, 2, 5, 6});
  auto c = colon(variable_ideal(r, {h}), r.oracle_variable(hp));
  auto x12 = r.oracle_variable(l.index_of(ElementSet{1, 2}));
  auto g = r.oracle().multiply(x12, r.oracle_variable(hp));
  CHECK(c.contains(g));
  CHECK(is_minimal_generator(c, g));
  CHECK_FALSE(is_generated_by_linear_forms(c).linear);
}

TEST_CASE("annihilator of x_E in Chow(U34)") {
  ChowRing r(Matroid::uniform(3, 4));
  auto ann = colon(zero_ideal(r.oracle()), r.oracle_variable(r.lattice().top()));
  CHECK(equals_ideal(ann, variable_ideal(r, r.hyperplanes())));
  CHECK(is_generated_by_linear_forms(ann).linear);
}

TEST_CASE("betti numbers of hypersurfaces") {
  GradedQuotient<Rational> q2(one_variable(2, 3));
  auto b2 = betti_of_residue_field(q2, 5, 6);
  for (int i = 0; i <= 5; ++i)
    for (int j = 0; j <= 6; ++j) CHECK(b2.at(i, j) == (i == j ? 1 : 0));
  GradedQuotient<Rational> q3(one_variable(3, 4));
  auto b3 = betti_of_residue_field(q3, 3, 5);
  CHECK(b3.at(0, 0) == 1);
  CHECK(b3.at(1, 1) == 1);
  CHECK(b3.at(2, 3) == 1);
  CHECK(b3.at(3, 4) == 1);
  CHECK(b3.total(2) == 1);
  CHECK(b3.first_nonlinear() == std::make_pair(2, 3));
}

TEST_CASE("betti numbers mod p agree on Chow(U33)") {
  ChowRing r(Matroid::uniform(3, 3));
  auto bq = betti_of_residue_field(r.oracle(), 3, 4);
  ModulusScope scope(32003);
  auto qp = r.build_oracle<ModP>();
  auto bp = betti_of_residue_field(qp, 3, 4);
  CHECK(bq.beta == bp.beta);
  CHECK(bq.total(3) == 56);
}

TEST_CASE("betti budget") {
  ChowRing r(Matroid::uniform(3, 4));
  BettiLimits lim;
  lim.max_domain = 10;
  CHECK_THROWS_AS(betti_of_residue_field(r.oracle(), 4, 5, lim), Error);
}

TEST_CASE("series") {
  auto p = poincare_from_hilbert(RationalSeries::polynomial(std::vector<int>{1, 4, 1}), 3);
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == 4);
  CHECK(p.coeff(2) == 15);
  CHECK(p.coeff(3) == 56);
  CHECK(polynomial_string(std::vector<int>{1, 4, 1}) == "1 + 4t + t^2");
  CHECK(polynomial_string(std::vector<int>{1, 1}) == "1 + t");
  CHECK_THROWS_AS(poincare_from_hilbert(RationalSeries::polynomial(std::vector<int>{2, 1}), 2), Error);
  auto m = multiply(RationalSeries::polynomial(std::vector<int>{1, 1}), RationalSeries::polynomial(std::vector<int>{1, -1}));
  CHECK(m.coeff(1) == 0);
}

TEST_CASE("Froberg identity on a non-Koszul ring fails the linearity test") {
  GradedQuotient<Rational> q(one_variable(3, 4));
  auto c = koszul_certificate(q, 3);
  CHECK_FALSE(c.linear);
  CHECK(c.witness == std::make_pair(2, 3));
}
