#include <doctest.h>

#include <cmath>

#include "qtorus/experiments.hpp"
#include "qtorus/schur.hpp"

using namespace qtorus;

TEST_SUITE_BEGIN("schur");

TEST_CASE("schur multiply basics") {
  Rng rng(3);
  const Theta th = random_theta(2, rng);
  const TruncatedRep A = represent(random_element(th, 2, 6, rng), 2);

  // psi = 1 is the identity map
  SchurSymbol one{2, [](const MultiIndex&, const MultiIndex&) { return Complex{1.0, 0.0}; }};
  CHECK(max_entry_distance(schur_multiply(one, A), A) == 0.0);

  // Kronecker diagonal extracts the diagonal
  SchurSymbol diag{2, [](const MultiIndex& m, const MultiIndex& n) {
                     return m == n ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
                   }};
  const TruncatedRep D = schur_multiply(diag, A);
  CHECK((D.mat - Eigen::MatrixXcd(A.mat.diagonal().asDiagonal())).cwiseAbs().maxCoeff() == 0.0);

  // rank-one symbol is diagonal conjugation: psi(m,n) = a(m) conj(b(n))
  auto aval = [](const MultiIndex& m) {
    return std::polar(1.0, 0.3 * m[0] - 0.1 * m[1]);
  };
  auto bval = [](const MultiIndex& n) {
    return std::polar(0.5, 0.7 * n[0] + 0.2 * n[1]);
  };
  SchurSymbol rank1{2, [aval, bval](const MultiIndex& m, const MultiIndex& n) {
                      return aval(m) * std::conj(bval(n));
                    }};
  const TruncatedRep R = schur_multiply(rank1, A);
  Eigen::VectorXcd da(A.dim()), db(A.dim());
  for (long i = 0; i < A.dim(); ++i) {
    da(i) = aval(A.box.at(i));
    db(i) = bval(A.box.at(i));
  }
  const Eigen::MatrixXcd expected = da.asDiagonal() * A.mat * db.asDiagonal().toDenseMatrix().adjoint();
  CHECK((R.mat - expected).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("toeplitz lift") {
  const MultiplierSymbol f = fejer_symbol(2, 2);
  const SchurSymbol lift = toeplitz_lift(f);
  CHECK(std::abs(lift.eval({1, 0}, {0, 0}) - f.eval({1, 0})) == 0.0);
  CHECK(std::abs(lift.eval({2, 1}, {1, 1}) - f.eval({1, 0})) == 0.0);
  // banded mask: vanishes past the bandwidth
  CHECK(lift.eval({2, 2}, {-1, -1}) == Complex{0.0, 0.0});

  // multiplicativity of the lift
  const MultiplierSymbol g = circular_poisson_symbol(0.5, 2);
  const SchurSymbol liftfg = toeplitz_lift(compose(f, g));
  const SchurSymbol liftf = toeplitz_lift(f), liftg = toeplitz_lift(g);
  for (int i = -2; i <= 2; ++i)
    for (int j = -2; j <= 2; ++j) {
      const MultiIndex m{i, j}, n{j, i};
      CHECK(std::abs(liftfg.eval(m, n) - liftf.eval(m, n) * liftg.eval(m, n)) <= 1e-15);
    }
}

TEST_CASE("fourier-schur identity") {
  // phi = 1: both sides equal the plain representation
  Rng rng(7);
  {
    const Theta th = random_theta(2, rng);
    const QtElement x = random_element(th, 2, 6, rng);
    CHECK(fs_identity_check(constant_one_symbol(2), x, 3) == 0.0);
  }

  // random symbols, elements, thetas: entrywise identity to rounding
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 2 + trial % 2;
    const Theta th = random_theta(d, rng);
    const QtElement x = random_element(th, 3, 6, rng);
    const int N = rng.uniform_int(1, d == 3 ? 2 : 4);
    const uint64_t h = rng.next_u64();
    MultiplierSymbol phi;
    phi.d = d;
    phi.eval = [h](const MultiIndex& m) {
      uint64_t k = h;
      for (int v : m) k = k * 1099511628211ULL + static_cast<uint64_t>(v + 7919);
      Rng local(k);
      return Complex{local.uniform(-1.0, 1.0), local.uniform(-1.0, 1.0)};
    };
    CHECK(fs_identity_check(phi, x, N) <= 1e-13);
  }

  // circular poisson symbol case
  const Theta th = Theta::golden(2);
  const QtElement x = random_element(th, 3, 8, rng);
  CHECK(fs_identity_check(circular_poisson_symbol(0.7, 2), x, 3) <= 1e-13);
}

TEST_CASE("schur product with poisson lift preserves PSD") {
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const Theta th = random_theta(2, rng);
    const QtElement y = random_element(th, 2, 5, rng);
    const TruncatedRep P = represent(mul(adjoint(y), y), 3);
    const SchurSymbol lift = toeplitz_lift(circular_poisson_symbol(0.8, 2));
    CHECK(min_eigenvalue(schur_multiply(lift, P), 1e-8) >= -1e-8);
  }
}

TEST_CASE("anticommuting probe") {
  // single unitary
  const AnticommutingReport single = anticommuting_probe({Complex{1.0, 0.0}}, 2);
  CHECK(single.identity_ok);
  CHECK(single.op_norm_value == doctest::Approx(1.0).epsilon(1e-10));

  // alpha = (1,1): x*x + xx* = 4 unit
  const AnticommutingReport pair = anticommuting_probe({Complex{1.0, 0.0}, Complex{1.0, 0.0}}, 2);
  CHECK(pair.identity_ok);
  CHECK(pair.sandwich_ok);
  CHECK(pair.alpha_l2 == doctest::Approx(std::sqrt(2.0)));

  // alpha = (1,1,1) at N=3: sqrt(3) <= norm <= sqrt(6)
  const AnticommutingReport triple =
      anticommuting_probe({Complex{1.0, 0.0}, Complex{1.0, 0.0}, Complex{1.0, 0.0}}, 3);
  CHECK(triple.identity_ok);
  CHECK(triple.op_norm_value >= std::sqrt(3.0) - 1e-8);
  CHECK(triple.op_norm_value <= std::sqrt(6.0) + 1e-8);

  // random complex coefficients
  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const int K = rng.uniform_int(2, 3);
    std::vector<Complex> alpha(K);
    for (auto& a : alpha) a = rng.complex_in_disc();
    const AnticommutingReport rep = anticommuting_probe(alpha, 3);
    CHECK(rep.identity_defect <= 1e-12);
    CHECK(rep.sandwich_ok);
  }
}

TEST_CASE("cb lower bound is a bounded exploration") {
  // the identity symbol has cb norm 1; lower bounds must sit below 1 + noise
  const Theta th = Theta::anticommuting(2);
  const double lb = schur_cb_lower_bound(constant_one_symbol(2), th, 2, 2, 4, 99);
  CHECK(lb <= 1.0 + 1e-10);
  CHECK(lb > 0.9);  // the ratio is exactly 1 for every draw
}

TEST_SUITE_END();
