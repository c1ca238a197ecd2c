// Series solver checks: the fixed-point solution against the published
// low-order table, the closed-form coefficients, free-energy inversion, the
// log identity, conjugation relations, and the Ising reduction (its g^2..g^5
// prefix was expanded by hand and frozen here).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hardmap/solver.hpp"

using namespace hardmap;

namespace {

ZPoly zp(std::initializer_list<long> ints) {
  std::vector<mpq_class> c;
  for (long v : ints) c.emplace_back(v);
  return ZPoly(std::move(c));
}

// 2n -> per-particle counts of rooted bicubic maps with hard particles
const std::vector<std::pair<int, ZPoly>> kMapTable = {
    {2, zp({1, 1})},
    {4, zp({3, 9, 3})},
    {6, zp({12, 60, 66, 12})},
    {8, zp({56, 392, 780, 460, 56})},
    {10, zp({288, 2592, 7584, 8400, 3168, 288})},
};

}  // namespace

TEST_CASE("hard-particle system low-order structure") {
  HPSystem sys = solve_hp_system(8);
  CHECK(sys.r.coeff(1) == zp({1, 1}));
  CHECK(sys.r.coeff(0).is_zero());
  CHECK(sys.s.coeff(0) == ZPoly(1));
  CHECK(sys.t.coeff(0).is_zero());
  CHECK(sys.t.coeff(3) == zp({0, -1}));  // T starts at -z g^3

  // no-particle specialization of S: 1, 2, 8, 40, 224 at even orders
  const long s0[] = {1, 2, 8, 40, 224};
  for (int k = 0; k <= 4; ++k) {
    CHECK(sys.s.coeff(2 * k).coeff(0) == s0[k]);
    if (2 * k + 1 <= 8) CHECK(sys.s.coeff(2 * k + 1).is_zero());
  }

  for (const GSeries* f : {&sys.s, &sys.t, &sys.r, &sys.v}) CHECK(f->integer_coeffs());
}

TEST_CASE("quartic line holds for the factorized V branch") {
  int N = 12;
  HPSystem sys = solve_hp_system(N);
  GSeries one = GSeries::constant(ZPoly(1), N);
  GSeries g = GSeries::monomial(ZPoly(1), 1, N);
  GSeries g2z = GSeries::monomial(ZPoly::monomial(1, 1), 2, N);
  GSeries g4z2 = GSeries::monomial(ZPoly::monomial(1, 2), 4, N);
  GSeries v2 = sys.v * sys.v;

  // V = 1 + 2gR + 2g^2 zV^2 - 4g^4 z^2 V^2 S
  GSeries quartic =
      one + (g * sys.r).scaled(ZPoly(2)) + (g2z * v2).scaled(ZPoly(2)) - (g4z2 * v2 * sys.s).scaled(ZPoly(4));
  CHECK(sys.v == quartic);

  // and the factorized form annihilates the branch actually solved
  GSeries factor1 = one - (g2z * sys.v).scaled(ZPoly(2));
  GSeries factor2 = sys.v - sys.s - (g2z * sys.v * sys.s).scaled(ZPoly(2));
  CHECK(factor2.is_zero());
  CHECK((factor1 * factor2).is_zero());
}

TEST_CASE("map series matches the published table") {
  GSeries g = g_bmhp(10);
  for (const auto& [two_n, poly] : kMapTable) CHECK(g.coeff(two_n) == poly);
  for (int odd = 1; odd <= 9; odd += 2) CHECK(g.coeff(odd).is_zero());
  CHECK(g.coeff(0).is_zero());
}

TEST_CASE("leaf series equals R") {
  int N = 10;
  HPSystem sys = solve_hp_system(N);
  GSeries g = GSeries::monomial(ZPoly(1), 1, N);
  GSeries gz = GSeries::monomial(ZPoly::monomial(1, 1), 1, N);
  GSeries g2z = GSeries::monomial(ZPoly::monomial(1, 1), 2, N);
  GSeries v2 = sys.v * sys.v;
  GSeries leaf = g * v2 + gz * sys.s * sys.s + (g2z * sys.t).scaled(ZPoly(2));
  CHECK(leaf == sys.r);
}

TEST_CASE("closed formula agrees with the table and the solver") {
  CHECK(closed_formula(1) == zp({1, 1}));
  for (const auto& [two_n, poly] : kMapTable) CHECK(closed_formula(two_n / 2) == poly);

  GSeries g = g_bmhp(16);
  for (int n = 6; n <= 8; ++n) CHECK(closed_formula(n) == g.coeff(2 * n));

  CHECK_THROWS_AS(closed_formula(0), std::invalid_argument);
}

TEST_CASE("free energy inverts the Euler operator") {
  GSeries g = g_bmhp(10);
  GSeries f = free_energy(g);
  CHECK(f.coeff(2).coeff(0) == mpq_class(1, 3));
  CHECK(f.coeff(2).coeff(1) == mpq_class(2, 3));

  // G = (3/2)(g d/dg - z d/dz) F
  GSeries recovered = (f.euler_g() - f.euler_z()).scaled(ZPoly(mpq_class(3, 2)));
  CHECK(recovered == g);

  GSeries bad(2);
  bad.set_coeff(1, ZPoly::monomial(1, 1));  // coefficient with a = b
  CHECK_THROWS_AS(free_energy(bad), std::domain_error);
}

TEST_CASE("second log derivative identity") {
  int N = 10;
  GSeries f = free_energy(g_bmhp(N));
  // ((1/g) d/dg)^2 (g^4 F): the g^a z^b coefficient picks up (a+4)(a+2)
  GSeries lhs(N);
  for (int a = 0; a <= N; ++a) {
    ZPoly row = f.coeff(a);
    row.scale(mpq_class((a + 4) * (a + 2)));
    lhs.set_coeff(a, row);
  }
  GSeries rhs = solve_hp_system(N).v.log().scaled(ZPoly(4));
  CHECK(lhs == rhs);
}

TEST_CASE("conjugation relations") {
  ConjugationReport rep = conjugation_checks(10);
  CHECK(rep.all_ok);
  CHECK(rep.failures.empty());
}

TEST_CASE("Ising system hand-expanded prefix") {
  IsingSystem sys = solve_ising_system(6);
  CHECK(sys.c.coeff(2) == zp({0, -1}));
  CHECK(sys.r.coeff(1) == zp({0, 1}));
  CHECK(sys.r.coeff(2) == zp({0, 3}));
  CHECK(sys.v.coeff(2) == ZPoly(3));
  CHECK(sys.v.coeff(3) == ZPoly::monomial(6, 2));

  GSeries g = g_qtising(6);
  CHECK(g.coeff(0).is_zero());
  CHECK(g.coeff(1).is_zero());
  CHECK(g.coeff(2) == zp({0, 1}));
  CHECK(g.coeff(3) == zp({0, 2}));
  CHECK(g.coeff(4) == zp({0, 6}));
  CHECK(g.coeff(5) == ZPoly(std::vector<mpq_class>{0, 18, 0, 2}));
}

TEST_CASE("Ising side identities") {
  int N = 10;
  IsingSystem sys = solve_ising_system(N);
  GSeries g2z = GSeries::monomial(ZPoly::monomial(1, 1), 2, N);
  CHECK((sys.b - sys.v) == -(g2z * sys.v * sys.v * sys.u).scaled(ZPoly(3)));

  CHECK(eqforP_residual(12).is_zero());

  // at z = 0 the shell is trivial and V solves V = 1 + 3g^2 V^3
  GSeries v0(N);
  for (int n = 0; n <= N; ++n) v0.set_coeff(n, ZPoly(sys.v.coeff(n).coeff(0)));
  GSeries one = GSeries::constant(ZPoly(1), N);
  GSeries g2 = GSeries::monomial(ZPoly(1), 2, N);
  CHECK(v0 == one + (g2 * v0 * v0 * v0).scaled(ZPoly(3)));

  // and the map series vanishes: every quasi-tetravalent map carries particles
  GSeries q = g_qtising(8);
  for (int n = 0; n <= 8; ++n) CHECK(q.coeff(n).coeff(0) == 0);
}

TEST_CASE("solver edge orders") {
  HPSystem s0 = solve_hp_system(0);
  CHECK(s0.s == GSeries::constant(ZPoly(1), 0));
  CHECK(s0.r.is_zero());
  CHECK(g_bmhp(0).is_zero());
  CHECK(solve_ising_system(0).v == GSeries::constant(ZPoly(1), 0));
}
