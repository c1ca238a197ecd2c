// Exact series solutions of the tree / map counting systems.
//
// The hard-particle system in (S, T, R, V) and the quasi-tetravalent Ising
// system in (A, B, C, R, S, U, V) are solved by fixed-point iteration on
// truncated series; each sweep is exact, convergence means two consecutive
// sweeps agree, and a solution must stabilize within order + 2 sweeps.
#pragma once

#include "hardmap/gseries.hpp"

namespace hardmap {

struct HPSystem {
  GSeries s, t, r, v;
};

// S = 1 + 2gR, T = -g^3 z V^4, R = gV^2 + gzS^2 + 2g^2 zT, V = S + 2g^2 zVS.
HPSystem solve_hp_system(int order);

// Generating series of rooted bicubic maps with hard particles,
// G = g (G_leaf - G_bud) with G_leaf = R and G_bud = gR^2 + g^2 z(gV^4 + 4ST).
GSeries g_bmhp(int order);

// Per-particle polynomial counting rooted maps with 2n vertices, evaluated
// from the closed triple-binomial sum. Coefficients are asserted integral.
ZPoly closed_formula(long n);

// Free energy: divide the g^a z^b coefficient by (3/2)(a - b). Every nonzero
// coefficient of the input must have a > b.
GSeries free_energy(const GSeries& g);

struct ConjugationReport {
  bool all_ok;
  std::vector<std::string> failures;
};
// G|g^{2n} = 3/(n+2) R|g^{2n-1} = 3/(2(n+2)) S|g^{2n} for 1 <= 2n <= order.
ConjugationReport conjugation_checks(int order);

struct IsingSystem {
  GSeries a, b, c, r, s, u, v;
};

// A = 3gR, B = 1 + 3gR^2 + 3gS, C = -g^2 zV^3, R = 3gV^2 U + gzB,
// S = gV^3 + gzC, U = 3gR + gz - g^2 z^2 A, V = B + 3g^2 zV^2 U.
IsingSystem solve_ising_system(int order);

// G = gR - g^2 (R^3 + 6RS + gzV^3) over the Ising system.
GSeries g_qtising(int order);

// Residual of the single equation satisfied by P = V / (1 - g^2 z^2), in the
// division-free form (P - 1 - 3x^2 P^3)(1 - 3xP)^2 - v^2 P with
// x = g (1 - g^2 z^2)^2 and v = gz. Identically zero when the system holds.
GSeries eqforP_residual(int order);

}  // namespace hardmap
