#pragma once

// Named contexts and objects shared by the unit tests, the acceptance suite
// and the CLI selftest.

#include "commacat/cocomma.hpp"
#include "commacat/comma.hpp"
#include "commacat/stability.hpp"
#include "commacat/wall_scan.hpp"

namespace commacat::fixtures {

RepCategory finvect();
/// Rep(1 -> 2) over F_2: vertex 0 -> vertex 1.
RepCategory a2();

/// (id / id) on FinVect(F_2).
CommaCategory arrow();
/// Z_A = -dim, Z_B = i dim.
StabilityFunction arrow_stability();

/// (id_FinVect / Hom(P_0, -)) with B = Rep(1 -> 2): the toy coherent systems.
CommaCategory toy();
/// Gamma = k, F = P_0 (+) S_1 (dims (1,2)), sigma into the P_0 summand.
CommaObject toy_system(const CommaCategory& toy);
/// gamma = 1, deg = (-1, 1), rk = (1, 1).
ToyGeometry toy_geometry();

/// (eval_0 / id) with A = Rep(1 -> 2), so that (A,0,0) has nontrivial HN.
CommaCategory quiver_side();
/// Z_A = -deg + i rk with the toy functionals, Z_B = i dim.
StabilityFunction quiver_side_stability();

/// (one_plus / zero) on FinVect under the attempt policy.
CommaCategory one_plus_zero();

/// (id \ Hom(-, k)) on FinVect: framed modules.
CoCommaCategory framed();

}  // namespace commacat::fixtures
