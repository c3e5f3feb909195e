#include <doctest.h>

#include <cmath>
#include <random>

#include "burgers/errors.hpp"
#include "burgers/tridiagonal.hpp"

using namespace burgers;

TEST_CASE("thomas solve against apply") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int n : {1, 2, 3, 10, 257}) {
    Tridiagonal A(n);
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) {
      if (i > 0) A.lower[i] = u(rng);
      if (i + 1 < n) A.upper[i] = u(rng);
      A.diag[i] = 3.0 + u(rng);
      x[i] = u(rng);
    }
    const auto b = A.apply(x);
    const auto y = thomas_solve(A, b);
    for (int i = 0; i < n; ++i) CHECK(y[i] == doctest::Approx(x[i]).epsilon(1e-12));
  }
}

TEST_CASE("dense accessor is zero off the band") {
  Tridiagonal A(4);
  A.diag = {1, 2, 3, 4};
  A.upper = {5, 6, 7, 0};
  A.lower = {0, 8, 9, 10};
  CHECK(A.at(0, 0) == 1);
  CHECK(A.at(0, 1) == 5);
  CHECK(A.at(1, 0) == 8);
  CHECK(A.at(0, 2) == 0);
  CHECK(A.at(3, 0) == 0);
}

TEST_CASE("zero pivot is reported") {
  Tridiagonal A(2);
  A.diag = {0.0, 1.0};
  A.upper = {1.0, 0.0};
  A.lower = {0.0, 1.0};
  CHECK_THROWS_AS(thomas_solve(A, std::vector<double>{1, 1}), SingularTridiagonal);

  Tridiagonal B(2);
  B.diag = {1.0, 1.0};
  B.upper = {1.0, 0.0};
  B.lower = {0.0, 1.0};  // second pivot 1 - 1 = 0
  CHECK_THROWS_AS(thomas_solve(B, std::vector<double>{1, 1}), SingularTridiagonal);
}
