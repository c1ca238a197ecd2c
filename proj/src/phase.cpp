// Critical line evaluation and growth-exponent fitting.

#include "hardmap/phase.hpp"

#include <cmath>
#include <stdexcept>

#include "hardmap/numeric.hpp"
#include "hardmap/solver.hpp"

namespace hardmap {

namespace {

constexpr double kZMinus = -512.0 / 3125.0;
constexpr double kZPlus = 32.0;
constexpr double kUMin = -0.1;
constexpr double kUMax = 0.5;

double z_of_u(double u) {
  double w = 1 + 2 * u;
  return 4 * u * w * w * w * w;
}

double g2_of_u(double u) {
  double w2 = (1 + 2 * u) * (1 + 2 * u);
  double w8 = w2 * w2 * w2 * w2;
  return (1 + 8 * u + 10 * u * u) / (8 * w8);
}

// Bisection assumes z(u) increases across the bracket; check it once on a
// fine grid before trusting it.
void ensure_monotone_bracket() {
  static const bool increasing = [] {
    double prev = z_of_u(kUMin);
    for (int i = 1; i <= 1000; ++i) {
      double cur = z_of_u(kUMin + (kUMax - kUMin) * i / 1000);
      if (cur <= prev) return false;
      prev = cur;
    }
    return true;
  }();
  if (!increasing) throw std::logic_error("z(u) fails to increase on the bracket");
}

double solve_u(double z) {
  ensure_monotone_bracket();
  double lo = kUMin, hi = kUMax;
  while (hi - lo > 1e-14 * std::max(1.0, std::abs(hi))) {
    double mid = 0.5 * (lo + hi);
    (z_of_u(mid) < z ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

CriticalPoint critical_line(double z) {
  if (!(z >= kZMinus)) throw std::domain_error("critical_line: z below -512/3125");
  CriticalPoint p;
  p.z = z;
  if (z >= kZPlus) {
    p.branch = CriticalPoint::Branch::HighZ;
    p.g_c_squared = 1 / (8 * z) - 1 / (4 * z * z);
  } else {
    double u = solve_u(z);
    p.branch = CriticalPoint::Branch::Parametric;
    p.u = u;
    p.g_c_squared = g2_of_u(u);
  }
  return p;
}

TricriticalExact tricritical_exact() {
  TricriticalExact t;
  t.z_minus = frac(-512, 3125);
  t.g2_minus = frac(234375, 1048576);
  t.z_plus = 32;
  t.g2_plus = frac(15, 4096);
  return t;
}

std::pair<CriticalPoint, CriticalPoint> tricritical_points() {
  TricriticalExact e = tricritical_exact();
  CriticalPoint minus{e.z_minus.get_d(), e.g2_minus.get_d(), CriticalPoint::Branch::Parametric,
                      kUMin};
  CriticalPoint plus{e.z_plus.get_d(), e.g2_plus.get_d(), CriticalPoint::Branch::HighZ, kUMax};
  return {minus, plus};
}

GrowthFit growth_fit(const mpq_class& z, long n_min, long n_max) {
  if (n_min < 1 || n_max < n_min)
    throw std::invalid_argument("growth_fit: need 1 <= n_min <= n_max");
  GrowthFit fit;
  for (long n = n_max; n >= n_min; n /= 2) fit.n.push_back(n);
  std::reverse(fit.n.begin(), fit.n.end());
  if (fit.n.size() < 3)
    throw std::invalid_argument("growth_fit: halving ladder too short for a stable fit");

  double log_gc2 = std::log(critical_line(z.get_d()).g_c_squared);
  std::vector<double> s;
  s.reserve(fit.n.size());
  for (long n : fit.n) {
    mpq_class a_n = closed_formula(n).eval(z);
    if (a_n <= 0) throw std::domain_error("growth_fit: count polynomial not positive at z");
    // log(a_n g_c^{2n}), the n^{-gamma} part of the asymptotics
    s.push_back(log_mpq(a_n) + static_cast<double>(n) * log_gc2);
  }
  for (std::size_t k = 0; k + 1 < fit.n.size(); ++k) {
    double dlog = std::log(static_cast<double>(fit.n[k + 1]) / static_cast<double>(fit.n[k]));
    fit.slope.push_back(-(s[k + 1] - s[k]) / dlog);
  }
  for (std::size_t k = 1; k < fit.slope.size(); ++k)
    fit.extrapolated.push_back(2 * fit.slope[k] - fit.slope[k - 1]);
  fit.gamma = fit.extrapolated.back();
  return fit;
}

double growth_exponent(const mpq_class& z, long n_min, long n_max) {
  return growth_fit(z, n_min, n_max).gamma;
}

}  // namespace hardmap
