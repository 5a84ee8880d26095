#pragma once

#include "pqn/calculus.hpp"
#include "pqn/report.hpp"
#include "pqn/rng.hpp"

namespace pqn {

/// Seeded exact checks of the bracket-calculus identities. Each runs `reps`
/// independent random instances on the given chart and fails with the first
/// nonzero defect as witness. Ids are stable and sort in logical order.

/// d(d eta) = 0 for random forms of every degree.
CheckResult checkDSquared(const Chart& chart, Rng rng, int reps);

/// Cartan formula against the frame-expansion route
/// (L_X eta)(Y...) = X(eta(Y...)) - sum eta(..,[X,Y_i],..).
CheckResult checkCartan(const Chart& chart, Rng rng, int reps);

/// [L_X, i_Y] = i_{[X,Y]} on random forms.
CheckResult checkCartanCommutator(const Chart& chart, Rng rng, int reps);

/// (K1) graded antisymmetry of the Koszul bracket, arbitrary bivector.
CheckResult checkK1(const Chart& chart, Rng rng, int reps);

/// (K3) graded Leibniz rule of the Koszul bracket, arbitrary bivector.
CheckResult checkK3(const Chart& chart, Rng rng, int reps);

/// [f, eta]_pi = i_{pi# df} eta, cross-checked against a reduction that only
/// uses the 1-form base cases and the Leibniz rule.
CheckResult checkK2All(const Chart& chart, Rng rng, int reps);

/// Graded Jacobi identity for Poisson bivectors.
CheckResult checkGradedJacobiPoisson(const Chart& chart, Rng rng, int reps);

/// With a non-Poisson bivector a Jacobi counterexample must exist; the
/// result passes when one is exhibited (witness carries the defect).
/// Needs dim >= 3.
CheckResult checkGradedJacobiCounterexample(const Chart& chart, Rng rng, int reps);

/// Negative control: the sign-flipped Schouten convention must break graded
/// Jacobi for the Schouten bracket; passes when a nonzero defect is found.
CheckResult checkSchoutenFlipBreaksJacobi(const Chart& chart, Rng rng, int reps);

/// Graded Jacobi for the (standard) Schouten bracket on multivectors.
CheckResult checkSchoutenJacobi(const Chart& chart, Rng rng, int reps);

/// d_N via i_N d - d i_N against the alternating-sum frame expansion,
/// evaluated on random vector fields.
CheckResult checkDnTwoRoutes(const Chart& chart, Rng rng, int reps);

/// d_pi = schouten(pi, .) against the algebroid-differential expansion over
/// the Koszul bracket and pi#, evaluated on random 1-forms. Poisson pi.
CheckResult checkLichnerowiczTwoRoutes(const Chart& chart, Rng rng, int reps);

/// [Omega,Omega]_pi(X,Y,Z) = 2 cyclic(<[Om.X,Om.Y]_pi,Z> - L(Omega(Y,Z))).
CheckResult checkDorfman(const Chart& chart, Rng rng, int reps);

/// For closed Omega: d_{pi# Om.flat} eta = [Omega, eta]_pi. Poisson pi.
CheckResult checkMonella(const Chart& chart, Rng rng, int reps);

/// d_N(i_{X^Y} Om) = i_X d_N i_Y Om - i_Y d_N i_X Om - i_{X^Y} d_N Om
///   - i_{[X,Y]_N} Om, arbitrary N and Omega.
CheckResult checkDnOmegaLemma(const Chart& chart, Rng rng, int reps);

/// For closed Omega:
/// [Om.X, Om.Y]_pi = Om.flat[X,Y]_{pi#Om.flat} + (1/2) i_{X^Y}[Om,Om]_pi.
CheckResult checkKoszulLemma(const Chart& chart, Rng rng, int reps);

/// Same with the Omega-pi bracket on the right, arbitrary Omega.
CheckResult checkKoszulBis(const Chart& chart, Rng rng, int reps);

/// T_N(fX, Y) = f T_N(X, Y) for random polynomial f.
CheckResult checkTorsionTensorial(const Chart& chart, Rng rng, int reps);

/// d_N is a derivation of the Koszul bracket exactly for compatible (pi, N):
/// verified positively on a compatible fixture and negatively on an
/// incompatible one.
CheckResult checkDnDerivationIffCompatible(const Chart& chart, Rng rng, int reps);

/// All of the above bundled with stable ids ("bracket/01-..." ...).
CheckReport bracketIdentitySuite(const Chart& chart, Rng rng, int reps);

}  // namespace pqn
