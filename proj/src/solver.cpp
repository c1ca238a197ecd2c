#include "hardmap/solver.hpp"

#include <stdexcept>

#include "hardmap/numeric.hpp"

namespace hardmap {

namespace {
ZPoly zvar() { return ZPoly::monomial(1, 1); }
}  // namespace

HPSystem solve_hp_system(int order) {
  const int N = order;
  GSeries one = GSeries::constant(ZPoly(1), N);
  GSeries g = GSeries::monomial(ZPoly(1), 1, N);
  GSeries gz = GSeries::monomial(zvar(), 1, N);
  GSeries g2z = GSeries::monomial(zvar(), 2, N);
  GSeries g3z = GSeries::monomial(zvar(), 3, N);

  HPSystem cur{one, GSeries(N), GSeries(N), one};  // S = V = 1, T = R = 0
  for (int sweep = 0; sweep <= N + 2; ++sweep) {
    GSeries v2 = cur.v * cur.v;
    HPSystem next = cur;
    next.s = one + (g * cur.r).scaled(ZPoly(2));
    next.t = -(g3z * v2 * v2);
    next.r = g * v2 + gz * cur.s * cur.s + (g2z * cur.t).scaled(ZPoly(2));
    next.v = next.s + (g2z * cur.v * next.s).scaled(ZPoly(2));
    bool stable = next.s == cur.s && next.t == cur.t && next.r == cur.r && next.v == cur.v;
    cur = next;
    if (stable) {
      for (const GSeries* f : {&cur.s, &cur.t, &cur.r, &cur.v})
        if (!f->integer_coeffs())
          throw std::logic_error("hard-particle system produced non-integer coefficients");
      return cur;
    }
  }
  throw std::logic_error("hard-particle system did not stabilize");
}

GSeries g_bmhp(int order) {
  HPSystem sys = solve_hp_system(order);
  const int N = order;
  GSeries g = GSeries::monomial(ZPoly(1), 1, N);
  GSeries g2z = GSeries::monomial(zvar(), 2, N);
  GSeries v2 = sys.v * sys.v;
  GSeries g_leaf = sys.r;
  GSeries g_bud =
      g * sys.r * sys.r + g2z * (g * v2 * v2 + (sys.s * sys.t).scaled(ZPoly(4)));
  GSeries res = g * (g_leaf - g_bud);
  if (!res.integer_coeffs()) throw std::logic_error("map series has non-integer coefficients");
  return res;
}

ZPoly closed_formula(long n) {
  if (n < 1) throw std::invalid_argument("closed formula needs n >= 1");
  ensure_factorials(4 * n);
  // (3/2) 2^n / ((n+1)(n+2)) * sum over j, p of
  //   (-1/2)^p C(2n-j, n) C(n-j, p) C(4n-2j, j-2p) z^j
  mpq_class prefactor(mpz_class(3) << n, 2 * (n + 1) * (n + 2));
  prefactor.canonicalize();
  std::vector<mpq_class> coeffs(n + 1, mpq_class(0));
  for (long j = 0; j <= n; ++j) {
    mpq_class acc = 0;
    mpq_class sign_pow(1);
    for (long p = 0; 2 * p <= j; ++p) {
      mpz_class term = binomial(2 * n - j, n) * binomial(n - j, p) * binomial(4 * n - 2 * j, j - 2 * p);
      acc += sign_pow * term;
      sign_pow *= mpq_class(-1, 2);
    }
    coeffs[j] = prefactor * acc;
  }
  ZPoly result(std::move(coeffs));
  if (!result.nonneg_integer_coeffs())
    throw std::logic_error("closed formula produced a non-integral or negative count");
  return result;
}

GSeries free_energy(const GSeries& g) {
  GSeries f(g.order());
  for (int a = 0; a <= g.order(); ++a) {
    const ZPoly& row = g.coeff(a);
    if (row.is_zero()) continue;
    std::vector<mpq_class> out(row.degree() + 1, mpq_class(0));
    for (int b = 0; b <= row.degree(); ++b) {
      mpq_class c = row.coeff(b);
      if (c == 0) continue;
      if (a <= b)
        throw std::domain_error("free energy integral needs a > b on every nonzero coefficient");
      mpq_class scaled = c * mpq_class(2, 3);
      scaled /= (a - b);
      out[b] = scaled;
    }
    f.set_coeff(a, ZPoly(std::move(out)));
  }
  return f;
}

ConjugationReport conjugation_checks(int order) {
  ConjugationReport rep{true, {}};
  HPSystem sys = solve_hp_system(order);
  GSeries g = g_bmhp(order);
  for (int n = 1; 2 * n <= order; ++n) {
    ZPoly lhs = g.coeff(2 * n);
    ZPoly from_r = sys.r.coeff(2 * n - 1);
    from_r.scale(frac(3, n + 2));
    ZPoly from_s = sys.s.coeff(2 * n);
    from_s.scale(frac(3, 2 * (n + 2)));
    if (!(lhs == from_r)) {
      rep.all_ok = false;
      rep.failures.push_back("R relation fails at 2n = " + std::to_string(2 * n));
    }
    if (!(lhs == from_s)) {
      rep.all_ok = false;
      rep.failures.push_back("S relation fails at 2n = " + std::to_string(2 * n));
    }
  }
  return rep;
}

}  // namespace hardmap
