#include <stdexcept>

#include "hardmap/solver.hpp"

namespace hardmap {

namespace {
ZPoly zvar() { return ZPoly::monomial(1, 1); }
ZPoly z2var() { return ZPoly::monomial(1, 2); }
}  // namespace

IsingSystem solve_ising_system(int order) {
  const int N = order;
  GSeries one = GSeries::constant(ZPoly(1), N);
  GSeries g = GSeries::monomial(ZPoly(1), 1, N);
  GSeries gz = GSeries::monomial(zvar(), 1, N);
  GSeries g2z = GSeries::monomial(zvar(), 2, N);
  GSeries g2z2 = GSeries::monomial(z2var(), 2, N);

  IsingSystem cur{GSeries(N), one, GSeries(N), GSeries(N), GSeries(N), GSeries(N), one};
  for (int sweep = 0; sweep <= N + 2; ++sweep) {
    GSeries v2 = cur.v * cur.v;
    GSeries v3 = v2 * cur.v;
    IsingSystem next = cur;
    next.a = (g * cur.r).scaled(ZPoly(3));
    next.b = one + (g * cur.r * cur.r).scaled(ZPoly(3)) + (g * cur.s).scaled(ZPoly(3));
    next.c = -(g2z * v3);
    next.r = (g * v2 * cur.u).scaled(ZPoly(3)) + gz * next.b;
    next.s = g * v3 + gz * next.c;
    next.u = (g * cur.r).scaled(ZPoly(3)) + gz - g2z2 * next.a;
    next.v = next.b + (g2z * v2 * cur.u).scaled(ZPoly(3));
    bool stable = next.a == cur.a && next.b == cur.b && next.c == cur.c && next.r == cur.r &&
                  next.s == cur.s && next.u == cur.u && next.v == cur.v;
    cur = next;
    if (stable) {
      for (const GSeries* f : {&cur.a, &cur.b, &cur.c, &cur.r, &cur.s, &cur.u, &cur.v})
        if (!f->integer_coeffs())
          throw std::logic_error("Ising system produced non-integer coefficients");
      return cur;
    }
  }
  throw std::logic_error("Ising system did not stabilize");
}

GSeries g_qtising(int order) {
  IsingSystem sys = solve_ising_system(order);
  const int N = order;
  GSeries g = GSeries::monomial(ZPoly(1), 1, N);
  GSeries g2 = GSeries::monomial(ZPoly(1), 2, N);
  GSeries g3z = GSeries::monomial(zvar(), 3, N);
  GSeries r3 = sys.r * sys.r * sys.r;
  GSeries res =
      g * sys.r - g2 * (r3 + (sys.r * sys.s).scaled(ZPoly(6))) - g3z * sys.v * sys.v * sys.v;
  if (!res.integer_coeffs())
    throw std::logic_error("Ising map series has non-integer coefficients");
  return res;
}

GSeries eqforP_residual(int order) {
  IsingSystem sys = solve_ising_system(order);
  const int N = order;
  GSeries one = GSeries::constant(ZPoly(1), N);
  // 1 - g^2 z^2 as a series in g
  GSeries shell = one - GSeries::monomial(z2var(), 2, N);
  GSeries p = sys.v * shell.inverse();
  GSeries x = GSeries::monomial(ZPoly(1), 1, N) * shell * shell;
  GSeries v = GSeries::monomial(zvar(), 1, N);
  GSeries p3 = p * p * p;
  GSeries lhs = p - one - (x * x * p3).scaled(ZPoly(3));
  GSeries bracket = one - (x * p).scaled(ZPoly(3));
  return lhs * bracket * bracket - v * v * p;
}

}  // namespace hardmap
