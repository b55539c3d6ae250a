#include <doctest.h>

#include <limits>

#include "qtorus/lattice.hpp"

using namespace qtorus;

TEST_SUITE_BEGIN("lattice");

TEST_CASE("index norms") {
  CHECK(index_norm({0, 0, 0}, 1.0) == 0.0);
  CHECK(index_norm({0, 0}, 2.0) == 0.0);
  CHECK(index_norm({3, -4}, 2.0) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(index_norm({3, -4}, 1.0) == 7.0);
  CHECK(index_norm({3, -4}, std::numeric_limits<double>::infinity()) == 4.0);
  CHECK_THROWS_AS(index_norm({1}, 3.0), std::invalid_argument);
}

TEST_CASE("folner overlap exact values") {
  // N=1, d=1, k=1: Z_1 cap (Z_1+1) = {0,1}
  CHECK(folner_overlap(1, {1}) == Rational(2, 3));
  CHECK(folner_overlap(1, {1, 1}) == Rational(4, 9));
  CHECK(folner_overlap(5, {0, 0, 0}) == Rational(1, 1));
  CHECK(folner_overlap(2, {-3}) == Rational(2, 5));
}

TEST_CASE("folner overlap by enumeration") {
  // brute-force oracle: count the shifted-box intersection directly
  for (int N = 0; N <= 3; ++N) {
    FolnerBox box(N, 2);
    for (int k0 = -2 * N - 2; k0 <= 2 * N + 2; ++k0) {
      for (int k1 = -2 * N - 2; k1 <= 2 * N + 2; ++k1) {
        long count = 0;
        for (long i = 0; i < box.size(); ++i) {
          const MultiIndex m = box.at(i);
          if (box.contains({m[0] + k0, m[1] + k1})) ++count;
        }
        const Rational got = folner_overlap(N, {k0, k1});
        CHECK(got == Rational(count, box.size()));
      }
    }
  }
}

TEST_CASE("folner overlap properties") {
  // symmetry, monotonicity toward 1, and the vanishing threshold
  const std::vector<MultiIndex> ks = {{1, -2}, {3, 0}, {-4, 4}, {0, 7}};
  for (const auto& k : ks) {
    long kmax = index_norm_inf(k);
    double prev = 0.0;
    for (int N = 0; N <= 12; ++N) {
      const Rational o = folner_overlap(N, k);
      CHECK(folner_overlap(N, negate(k)) == o);
      CHECK((o.num == 0) == (2 * N + 1 <= kmax));
      if (2 * N + 1 > kmax) {
        CHECK(o.value() >= prev);
        prev = o.value();
      }
    }
    CHECK(prev > 0.5);  // heading to 1
  }
}

TEST_CASE("box enumeration round trip") {
  FolnerBox box(2, 3);
  CHECK(box.size() == 125);
  for (long i = 0; i < box.size(); ++i) CHECK(box.index_of(box.at(i)) == i);
  CHECK_THROWS_AS(box.index_of({3, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(folner_overlap(-1, {1}), std::invalid_argument);
}

TEST_SUITE_END();
