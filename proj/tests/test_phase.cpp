// Critical line shape, tricritical constants, and growth-exponent fits.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "hardmap/numeric.hpp"
#include "hardmap/phase.hpp"

using namespace hardmap;

namespace {

// The parametric formulas in exact rational arithmetic.
mpq_class z_of_u_exact(const mpq_class& u) {
  mpq_class w = 1 + 2 * u;
  return 4 * u * w * w * w * w;
}

mpq_class g2_of_u_exact(const mpq_class& u) {
  mpq_class w2 = (1 + 2 * u) * (1 + 2 * u);
  mpq_class w8 = w2 * w2 * w2 * w2;
  return (1 + 8 * u + 10 * u * u) / (8 * w8);
}

}  // namespace

TEST_CASE("tricritical constants come from the parametric endpoints") {
  mpq_class u_minus = frac(-1, 10);
  CHECK(z_of_u_exact(u_minus) == frac(-512, 3125));
  CHECK(g2_of_u_exact(u_minus) == frac(234375, 1048576));
  mpq_class u_plus = frac(1, 2);
  CHECK(z_of_u_exact(u_plus) == 32);
  CHECK(g2_of_u_exact(u_plus) == frac(15, 4096));
  // and the high-z closed form agrees at the junction
  CHECK(frac(1, 8 * 32) - frac(1, 4 * 32 * 32) == frac(15, 4096));

  TricriticalExact e = tricritical_exact();
  CHECK(e.z_minus == frac(-512, 3125));
  CHECK(e.g2_minus == frac(234375, 1048576));
  CHECK(e.z_plus == 32);
  CHECK(e.g2_plus == frac(15, 4096));

  auto [minus, plus] = tricritical_points();
  CHECK(minus.z == doctest::Approx(-0.16384).epsilon(1e-15));
  CHECK(minus.g_c_squared == doctest::Approx(234375.0 / 1048576).epsilon(1e-15));
  CHECK(minus.branch == CriticalPoint::Branch::Parametric);
  REQUIRE(minus.u.has_value());
  CHECK(*minus.u == doctest::Approx(-0.1).epsilon(1e-15));
  CHECK(plus.z == 32);
  CHECK(plus.g_c_squared == 15.0 / 4096);
  CHECK(plus.branch == CriticalPoint::Branch::HighZ);
  REQUIRE(plus.u.has_value());
  CHECK(*plus.u == 0.5);
}

TEST_CASE("critical line: branches, continuity, and limits") {
  CriticalPoint at32 = critical_line(32);
  CHECK(at32.branch == CriticalPoint::Branch::HighZ);
  CHECK_FALSE(at32.u.has_value());
  CHECK(std::fabs(at32.g_c_squared - 15.0 / 4096) < 1e-12);

  // parametric side of the junction
  CriticalPoint below = critical_line(std::nextafter(32.0, 0.0));
  CHECK(below.branch == CriticalPoint::Branch::Parametric);
  REQUIRE(below.u.has_value());
  CHECK(*below.u == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::fabs(below.g_c_squared - 15.0 / 4096) < 1e-12);

  // z -> 0+ approaches the particle-free singularity at 1/8
  CHECK(std::fabs(critical_line(1e-10).g_c_squared - 0.125) < 1e-10);
  CHECK(critical_line(0).g_c_squared == doctest::Approx(0.125).epsilon(1e-14));

  // endpoint of the line
  CriticalPoint endpoint = critical_line(-512.0 / 3125.0);
  REQUIRE(endpoint.u.has_value());
  CHECK(*endpoint.u == doctest::Approx(-0.1).epsilon(1e-12));
  CHECK(endpoint.g_c_squared == doctest::Approx(234375.0 / 1048576).epsilon(1e-12));

  // far out on the high-z branch
  CHECK(critical_line(1000).g_c_squared == doctest::Approx(1.0 / 8000 - 1.0 / 4e6));

  CHECK_THROWS_AS(critical_line(-0.164), std::domain_error);
  CHECK_THROWS_AS(critical_line(-1), std::domain_error);
  CHECK_THROWS_AS(critical_line(std::nan("")), std::domain_error);
}

TEST_CASE("g_c^2 decreases along the whole line") {
  double prev = critical_line(-512.0 / 3125.0).g_c_squared;
  for (int i = 1; i <= 60; ++i) {
    double z = -512.0 / 3125.0 + (100.0 + 512.0 / 3125.0) * i / 60;
    double cur = critical_line(z).g_c_squared;
    CAPTURE(z);
    CHECK(cur < prev);
    prev = cur;
  }
  // parametric invariants on a few interior points
  for (double z : {-0.1, 0.5, 7.0, 31.0}) {
    CriticalPoint p = critical_line(z);
    REQUIRE(p.u.has_value());
    double w = 1 + 2 * *p.u;
    CHECK(4 * *p.u * w * w * w * w == doctest::Approx(z).epsilon(1e-12));
  }
}

TEST_CASE("growth exponent hits 5/2 on the generic line and 7/3 at the endpoint") {
  GrowthFit fit = growth_fit(0, 25, 400);
  CHECK(fit.n == std::vector<long>{25, 50, 100, 200, 400});
  REQUIRE(fit.slope.size() == 4);
  REQUIRE(fit.extrapolated.size() == 3);
  CHECK(fit.gamma == fit.extrapolated.back());
  // running slopes climb toward gamma, refinements tighten monotonically
  for (std::size_t k = 1; k < fit.slope.size(); ++k) CHECK(fit.slope[k] > fit.slope[k - 1]);
  for (std::size_t k = 1; k < fit.extrapolated.size(); ++k)
    CHECK(std::fabs(fit.extrapolated[k] - 2.5) < std::fabs(fit.extrapolated[k - 1] - 2.5));
  CHECK(std::fabs(fit.gamma - 2.5) < 0.05);

  CHECK(std::fabs(growth_exponent(1, 25, 400) - 2.5) < 0.1);
  CHECK(std::fabs(growth_exponent(32, 25, 400) - 7.0 / 3) < 0.15);
}

TEST_CASE("growth estimate sharpens as n_max grows") {
  double prev = 1;
  for (long n_max : {100, 200, 400}) {
    double err = std::fabs(growth_exponent(0, n_max / 16, n_max) - 2.5);
    CAPTURE(n_max);
    CHECK(err < prev);
    prev = err;
  }
}

TEST_CASE("growth fit rejects short ladders and off-line z") {
  CHECK_THROWS_AS(growth_exponent(0, 0, 400), std::invalid_argument);
  CHECK_THROWS_AS(growth_exponent(0, 10, 5), std::invalid_argument);
  CHECK_THROWS_AS(growth_exponent(0, 200, 400), std::invalid_argument);  // two anchors
  CHECK_THROWS_AS(growth_exponent(frac(-1, 5), 25, 400), std::domain_error);
}
