#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "logt/errors.hpp"
#include "logt/linalg.hpp"
#include "logt/rng.hpp"
#include "test_util.hpp"

using namespace logt;
using namespace logt::testing;

TEST_CASE("construction symmetrizes and validates") {
  SymMatrix a(2, {1.0, 3.0, 1.0, 2.0});
  CHECK(a(0, 1) == doctest::Approx(2.0));
  CHECK(a(1, 0) == doctest::Approx(2.0));

  CHECK_THROWS_AS(SymMatrix(0), ConfigError);
  CHECK_THROWS_AS(SymMatrix(2, {1.0, 2.0, 3.0}), ConfigError);
  CHECK_THROWS_AS(SymMatrix(2, {1.0, std::nan(""), 0.0, 1.0}), ConfigError);
}

TEST_CASE("frob_norm") {
  CHECK(frob_norm(SymMatrix(3)) == 0.0);
  CHECK(frob_norm(SymMatrix::diagonal({3.0, 4.0})) == doctest::Approx(5.0));

  SymMatrix ones(5);
  for (int i = 0; i < 5; ++i)
    for (int j = i; j < 5; ++j) ones.set(i, j, 1.0);
  CHECK(frob_norm(ones) == doctest::Approx(5.0));
}

TEST_CASE("axpy and dot") {
  Rng rng(7);
  const SymMatrix x = random_symmetric(4, rng);
  const SymMatrix y = random_symmetric(4, rng);

  CHECK(max_abs_diff(axpy(0.0, x, y), y) == 0.0);
  CHECK(dot(x, x) == doctest::Approx(frob_norm(x) * frob_norm(x)));
  CHECK(frob_norm(axpy(-1.0, x, x)) == 0.0);

  CHECK_THROWS_AS(axpy(1.0, x, SymMatrix(3)), ConfigError);
  CHECK_THROWS_AS(dot(x, SymMatrix(3)), ConfigError);
}

TEST_CASE("sym_eig identity and diagonal") {
  const auto id = sym_eig(SymMatrix::identity(3));
  for (double lam : id.eigenvalues) CHECK(lam == doctest::Approx(1.0));

  const auto diag = sym_eig(SymMatrix::diagonal({3.0, -1.0}));
  CHECK(diag.eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(diag.eigenvalues[1] == doctest::Approx(3.0));
}

TEST_CASE("sym_eig reconstructs a seeded random 5x5") {
  Rng rng(12345);
  const SymMatrix a = random_symmetric(5, rng);
  const auto eig = sym_eig(a);
  const double scale = std::max(1.0, frob_norm(a));
  CHECK(frob_norm(axpy(-1.0, reconstruct(eig), a)) <= 1e-8 * scale);
  CHECK(orthogonality_error(eig) <= 1e-8);
}

TEST_CASE("sym_eig reconstruction and orthogonality over 1000 seeded matrices") {
  Rng rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const int dim = 2 + static_cast<int>(rng.below(9));  // 2..10
    const SymMatrix a = random_symmetric(dim, rng, -5.0, 5.0);
    const auto eig = sym_eig(a);
    const double scale = std::max(1.0, frob_norm(a));
    REQUIRE(frob_norm(axpy(-1.0, reconstruct(eig), a)) <= 1e-8 * scale);
    REQUIRE(orthogonality_error(eig) <= 1e-8);
    for (std::size_t i = 1; i < eig.eigenvalues.size(); ++i) {
      REQUIRE(eig.eigenvalues[i - 1] <= eig.eigenvalues[i]);
    }
  }
}

TEST_CASE("eigenvalues shift with A + cI") {
  Rng rng(5);
  const SymMatrix a = random_symmetric(6, rng);
  const double c = 2.75;
  const auto base = sym_eig(a);
  const auto shifted = sym_eig(axpy(c, SymMatrix::identity(6), a));
  for (std::size_t i = 0; i < base.eigenvalues.size(); ++i) {
    CHECK(std::abs(shifted.eigenvalues[i] - (base.eigenvalues[i] + c)) <= 1e-8);
  }
}

TEST_CASE("trace equals eigenvalue sum") {
  Rng rng(6);
  const SymMatrix a = random_symmetric(7, rng, -3.0, 3.0);
  const auto eig = sym_eig(a);
  double sum = 0.0;
  for (double lam : eig.eigenvalues) sum += lam;
  CHECK(std::abs(sum - trace_of(a)) <= 1e-8);
}
