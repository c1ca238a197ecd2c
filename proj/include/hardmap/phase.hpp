// Critical line, tricritical constants, and growth-exponent estimates.
//
// The critical line in the (z, g^2) plane is g_c^2 = 1/(8z) - 1/(4z^2) for
// z >= 32 and is given parametrically below by
//   z = 4u(1+2u)^4,   g_c^2 = (1+8u+10u^2) / (8(1+2u)^8),
// with u in [-1/10, 1/2]. z(u) is strictly increasing there, so the
// parametric branch is inverted by bisection. The line ends at
// z = -512/3125 (u = -1/10) and the branches join at z = 32 (u = 1/2),
// the two tricritical points. Rooted map counts grow like
// g_c^{-2n} n^{-gamma} with gamma = 5/2 on the generic line and 7/3 at the
// tricritical points.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

namespace hardmap {

struct CriticalPoint {
  enum class Branch { HighZ, Parametric };
  double z = 0;
  double g_c_squared = 0;
  Branch branch = Branch::HighZ;
  std::optional<double> u;  // parametric branch parameter when known
};

// Throws std::domain_error for z below -512/3125, where the line ends.
CriticalPoint critical_line(double z);

// The tricritical constants as exact rationals.
struct TricriticalExact {
  mpq_class z_minus, g2_minus;
  mpq_class z_plus, g2_plus;
};
TricriticalExact tricritical_exact();

// The two tricritical points (z = -512/3125 first, z = 32 second) with
// their branch parameters filled in.
std::pair<CriticalPoint, CriticalPoint> tricritical_points();

// Fit of gamma in a_n ~ g_c^{-2n} n^{-gamma}, a_n the per-particle count
// polynomial of 2n-vertex maps evaluated at exact rational z. Anchors are a
// halving ladder below n_max; slope[k] is the finite-difference estimate of
// gamma between anchors k and k+1, and extrapolated[k] refines slope[k+1]
// with slope[k] assuming a 1/n correction (Richardson). The estimate gamma
// is the last extrapolated value. Rationals stay exact until the log.
struct GrowthFit {
  std::vector<long> n;               // ascending anchors
  std::vector<double> slope;         // size n.size()-1
  std::vector<double> extrapolated;  // size slope.size()-1
  double gamma = 0;
};

// Requires at least three anchors between n_min and n_max (that is,
// n_max >= 4 n_min), else throws std::invalid_argument; propagates
// std::domain_error for z off the critical line's range.
GrowthFit growth_fit(const mpq_class& z, long n_min, long n_max);
double growth_exponent(const mpq_class& z, long n_min, long n_max);

}  // namespace hardmap
