#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logt/domain.hpp"
#include "logt/errors.hpp"
#include "test_util.hpp"

using namespace logt;
using namespace logt::testing;

TEST_CASE("psd projection clamps negative eigenvalues") {
  Domain cone = Domain::psd_cone(2);
  const SymMatrix projected = cone.project(SymMatrix::diagonal({2.0, -1.0}));
  CHECK(max_abs_diff(projected, SymMatrix::diagonal({2.0, 0.0})) <= 1e-12);
}

TEST_CASE("psd projection fixes psd inputs") {
  Domain cone = Domain::psd_cone(4);
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const SymMatrix q = random_psd(4, rng);
    CHECK(max_abs_diff(cone.project(q), q) <= 1e-9);
  }
}

TEST_CASE("frobenius ball rescales") {
  Domain ball = Domain::frob_ball(2, 1.0);
  const SymMatrix x = SymMatrix::diagonal({3.0, 4.0});
  const SymMatrix projected = ball.project(x);
  CHECK(max_abs_diff(projected, SymMatrix::diagonal({0.6, 0.8})) <= 1e-12);

  // inside the ball: identity map
  const SymMatrix small = SymMatrix::diagonal({0.1, 0.1});
  CHECK(max_abs_diff(ball.project(small), small) == 0.0);
}

TEST_CASE("capped cone clamps then rescales") {
  Domain capped = Domain::psd_cone_capped(2, 1.0);
  const SymMatrix projected = capped.project(SymMatrix::diagonal({3.0, -4.0}));
  CHECK(max_abs_diff(projected, SymMatrix::diagonal({1.0, 0.0})) <= 1e-12);
}

TEST_CASE("unconstrained is the identity") {
  Domain dom = Domain::unconstrained(3);
  Rng rng(3);
  const SymMatrix x = random_symmetric(3, rng);
  CHECK(max_abs_diff(dom.project(x), x) == 0.0);
}

TEST_CASE("contains") {
  Domain cone = Domain::psd_cone(2);
  CHECK(cone.contains(SymMatrix::identity(2), 1e-9));
  CHECK_FALSE(cone.contains(SymMatrix::diagonal({1.0, -1.0}), 1e-9));

  Domain ball = Domain::frob_ball(2, 5.0);
  CHECK(ball.contains(SymMatrix::diagonal({3.0, 4.0}), 1e-9));  // exactly on the boundary
  CHECK_FALSE(ball.contains(SymMatrix::diagonal({3.0, 4.1}), 1e-9));
}

TEST_CASE("projection is idempotent") {
  Rng rng(21);
  Domain cone = Domain::psd_cone(5);
  Domain capped = Domain::psd_cone_capped(5, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const SymMatrix x = random_symmetric(5, rng, -2.0, 2.0);
    for (Domain* dom : {&cone, &capped}) {
      const SymMatrix once = dom->project(x);
      const SymMatrix twice = dom->project(once);
      CHECK(frob_norm(axpy(-1.0, once, twice)) <= 1e-9);
    }
  }
}

TEST_CASE("projection is nonexpansive over 500 seeded pairs") {
  Rng rng(31);
  Domain cone = Domain::psd_cone(4);
  for (int trial = 0; trial < 500; ++trial) {
    const SymMatrix x = random_symmetric(4, rng, -3.0, 3.0);
    const SymMatrix y = random_symmetric(4, rng, -3.0, 3.0);
    const double before = frob_norm(axpy(-1.0, x, y));
    const double after = frob_norm(axpy(-1.0, cone.project(x), cone.project(y)));
    REQUIRE(after <= before + 1e-9);
  }
}

TEST_CASE("psd projection is nearest among random psd candidates") {
  Rng rng(41);
  Domain cone = Domain::psd_cone(3);
  for (int trial = 0; trial < 100; ++trial) {
    const SymMatrix x = random_symmetric(3, rng, -2.0, 2.0);
    const double dist = frob_norm(axpy(-1.0, cone.project(x), x));
    for (int q = 0; q < 1000; ++q) {
      const SymMatrix candidate = random_psd(3, rng);
      REQUIRE(dist <= frob_norm(axpy(-1.0, candidate, x)) + 1e-9);
    }
  }
}

TEST_CASE("projection counter is exact") {
  Domain cone = Domain::psd_cone(2);
  CHECK(cone.projection_count() == 0);
  const SymMatrix x = SymMatrix::identity(2);
  for (int i = 1; i <= 17; ++i) {
    cone.project(x);
    CHECK(cone.projection_count() == i);
  }
}

TEST_CASE("dimension mismatch is rejected") {
  Domain cone = Domain::psd_cone(2);
  CHECK_THROWS_AS(cone.project(SymMatrix::identity(3)), ConfigError);
  CHECK_THROWS_AS(Domain::frob_ball(2, -1.0), ConfigError);
}
