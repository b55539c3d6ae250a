#include <doctest.h>

#include <cmath>

#include "qtorus/experiments.hpp"
#include "qtorus/transference.hpp"

using namespace qtorus;

TEST_SUITE_BEGIN("transference");

TEST_CASE("pi_z basics") {
  const Theta th = Theta::golden(2);
  Rng rng(3);
  const QtElement x = random_element(th, 2, 6, rng);

  // identity point
  CHECK(max_coeff_abs(pi_z(x, TorusPoint(std::vector<double>{0.0, 0.0})) - x) == 0.0);

  // d=1: U at s=1/4 picks up the phase i
  const Theta line = Theta::zero(1);
  const QtElement rot = pi_z(QtElement::generator(line, 1), TorusPoint(std::vector<double>{0.25}));
  CHECK(std::abs(rot.coeff({1}) - Complex{0.0, 1.0}) <= 1e-15);

  // Parseval norm preserved exactly and trace preserved
  CHECK(l2_norm(pi_z(x, TorusPoint(std::vector<double>{0.31, 0.77}))) ==
        doctest::Approx(l2_norm(x)).epsilon(1e-14));
  CHECK(trace(pi_z(x, TorusPoint(std::vector<double>{0.31, 0.77}))) == trace(x));
}

TEST_CASE("pi_z is an algebra automorphism and a group action") {
  Rng rng(5);
  const Theta th = random_theta(2, rng);
  const QtElement x = random_element(th, 2, 5, rng);
  const QtElement y = random_element(th, 2, 5, rng);
  const TorusPoint z(std::vector<double>{0.13, 0.58});
  const TorusPoint w(std::vector<double>{0.4, 0.91});

  CHECK(max_coeff_abs(pi_z(mul(x, y), z) - mul(pi_z(x, z), pi_z(y, z))) <= 1e-12);

  const TorusPoint zw(std::vector<double>{z.s[0] + w.s[0], z.s[1] + w.s[1]});
  CHECK(max_coeff_abs(pi_z(pi_z(x, z), w) - pi_z(x, zw)) <= 1e-12);
}

TEST_CASE("twist and evaluation") {
  const Theta th = Theta::golden(2);
  Rng rng(7);
  const QtElement x = random_element(th, 2, 6, rng);
  const OperatorTrigPoly f = twist(x);

  // twist(unit) is the constant term
  const OperatorTrigPoly u = twist(QtElement::unit(th));
  CHECK(u.terms.size() == 1);
  CHECK(u.terms.count(zero_index(2)) == 1);

  // single monomial: one term at its own frequency
  const OperatorTrigPoly g = twist(QtElement::monomial(th, {1, -2}, {0.0, 3.0}));
  CHECK(g.terms.size() == 1);
  CHECK(std::abs(g.terms.at({1, -2}).coeff({1, -2}) - Complex{0.0, 3.0}) == 0.0);

  // evaluating the twist recovers pi_z
  for (int trial = 0; trial < 10; ++trial) {
    const TorusPoint z(std::vector<double>{rng.uniform(), rng.uniform()});
    CHECK(max_coeff_abs(evaluate(f, z) - pi_z(x, z)) <= 1e-13);
  }

  // L2 isometry of the embedding
  CHECK(opvalued_l2_norm(f) == doctest::Approx(l2_norm(x)).epsilon(1e-14));
  CHECK(opvalued_l2_norm(twist(QtElement::monomial(th, {2, 1}))) == doctest::Approx(1.0));

  // two orthogonal terms: Parseval in both tensor legs
  OperatorTrigPoly two(th);
  two.set_term({1, 0}, QtElement::monomial(th, {0, 1}, {3.0, 0.0}));
  two.set_term({0, 2}, QtElement::monomial(th, {1, 1}, {0.0, 4.0}));
  CHECK(opvalued_l2_norm(two) == doctest::Approx(5.0).epsilon(1e-14));
}

TEST_CASE("twist multiplies into pointwise products") {
  Rng rng(11);
  const Theta th = random_theta(2, rng);
  const QtElement x = random_element(th, 2, 4, rng);
  const QtElement y = random_element(th, 2, 4, rng);
  const OperatorTrigPoly prod = mul(twist(x), twist(y));
  for (int trial = 0; trial < 8; ++trial) {
    const TorusPoint z(std::vector<double>{rng.uniform(), rng.uniform()});
    CHECK(max_coeff_abs(evaluate(prod, z) - pi_z(mul(x, y), z)) <= 1e-12);
  }
}

TEST_CASE("conditional expectation closed form") {
  const Theta th = Theta::golden(2);
  Rng rng(13);
  const QtElement x = random_element(th, 2, 6, rng);

  // fixes twist images
  const OperatorTrigPoly f = twist(x);
  const OperatorTrigPoly ef = conditional_expectation(f);
  CHECK(ef.terms.size() == f.terms.size());
  for (const auto& [n, fn] : f.terms) CHECK(max_coeff_abs(ef.terms.at(n) - fn) == 0.0);

  // off-diagonal term dies: term at (0,1) holding U^(1,0)
  OperatorTrigPoly g(th);
  g.set_term({0, 1}, QtElement::monomial(th, {1, 0}));
  CHECK(conditional_expectation(g).terms.empty());

  // diagonal term survives untouched
  OperatorTrigPoly h(th);
  h.set_term({1, 0}, QtElement::monomial(th, {1, 0}, {2.0, 0.0}));
  const OperatorTrigPoly eh = conditional_expectation(h);
  CHECK(eh.terms.size() == 1);
  CHECK(std::abs(eh.terms.at({1, 0}).coeff({1, 0}) - Complex{2.0, 0.0}) == 0.0);

  // idempotent, unit preserving, trace preserving on the constant term
  OperatorTrigPoly mixed(th);
  mixed.set_term({0, 0}, random_element(th, 1, 3, rng));
  mixed.set_term({1, 1}, random_element(th, 2, 3, rng));
  mixed.set_term({0, 2}, random_element(th, 2, 3, rng));
  const OperatorTrigPoly once = conditional_expectation(mixed);
  const OperatorTrigPoly twice = conditional_expectation(once);
  CHECK(once.terms.size() == twice.terms.size());
  for (const auto& [n, fn] : once.terms) CHECK(max_coeff_abs(twice.terms.at(n) - fn) == 0.0);

  // contraction in the opvalued L2 norm
  CHECK(opvalued_l2_norm(once) <= opvalued_l2_norm(mixed) + 1e-12);
}

TEST_CASE("conditional expectation matches the defining integral") {
  // quadrature cross-check of the diagonal-extraction closed form
  Rng rng(17);
  const Theta th = random_theta(2, rng);
  OperatorTrigPoly f(th);
  f.set_term({0, 0}, random_element(th, 1, 3, rng));
  f.set_term({1, 0}, random_element(th, 1, 3, rng));
  f.set_term({-1, 1}, random_element(th, 1, 3, rng));
  const OperatorTrigPoly closed = conditional_expectation(f);
  const OperatorTrigPoly quad = conditional_expectation_by_quadrature(f, 7);
  CHECK(closed.terms.size() == quad.terms.size());
  for (const auto& [n, fn] : closed.terms) {
    REQUIRE(quad.terms.count(n) == 1);
    CHECK(max_coeff_abs(quad.terms.at(n) - fn) <= 1e-12);
  }
}

TEST_CASE("lp isometry probe") {
  Rng rng(19);
  const Theta th = random_theta(2, rng);
  const QtElement x = random_element(th, 2, 5, rng);
  std::vector<TorusPoint> zs;
  for (int i = 0; i < 12; ++i) zs.push_back(TorusPoint(std::vector<double>{rng.uniform(), rng.uniform()}));

  CHECK(lp_isometry_probe(QtElement::unit(th), 3.0, zs, 3) == 0.0);
  CHECK(lp_isometry_probe(x, 2.0, zs, 4) <= 1e-12);  // Parseval: phases drop
  CHECK(lp_isometry_probe(x, 4.0, zs, 4) <= 1e-8);
  CHECK(lp_isometry_probe(x, 1.5, zs, 4) <= 1e-8);
}

TEST_SUITE_END();
