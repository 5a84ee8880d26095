#pragma once

#include "pqn/calculus.hpp"
#include "pqn/report.hpp"
#include "pqn/rng.hpp"

namespace pqn {

/// Candidate structure (pi, N, phi) on a chart. The defining identities are
/// checked by checkPqn, never assumed.
struct PqnStructure {
  Chart chart;
  MultiVector pi;   // degree 2
  EndoField n;
  Form phi;         // degree 3

  PqnStructure(Chart chart_, MultiVector pi_, EndoField n_, Form phi_);

  friend bool operator==(const PqnStructure& a, const PqnStructure& b) {
    return a.chart == b.chart && a.pi == b.pi && a.n == b.n && a.phi == b.phi;
  }
};

/// pass iff schouten(pi,pi) = 0 exactly; witness is the trivector [pi,pi].
CheckReport checkPoisson(const MultiVector& pi);

/// (a) N pi# = pi# N* as endomorphism equality; (b) vanishing of the
/// Magri-Morosi concomitant on coordinate 1-forms plus an f-bilinearity
/// guard. (b) is skipped when (a) fails (pi_N is not defined then).
CheckReport checkCompatibility(const MultiVector& pi, const EndoField& n);

/// Full axiom battery: Poisson, compatibility, d phi = 0, d(i_N phi) = 0,
/// torsion identity T_N = pi#(i phi) on the coordinate frame with an
/// f-linearity guard.
CheckReport checkPqn(const PqnStructure& s);

/// Bivector pi_N with sharp map N pi#. Throws PreconditionError (carrying
/// the defect) when N pi# != pi# N*, since the result would not be
/// antisymmetric.
MultiVector makePiN(const MultiVector& pi, const EndoField& n);

/// Deformation by a closed 2-form: (pi, N + pi# Omega.flat,
/// phi + d_N Omega + (1/2)[Omega,Omega]_pi). Rejects non-closed Omega and
/// structures failing checkPqn.
PqnStructure deform(const PqnStructure& s, const Form& omega);

/// d_N Omega + (1/2)[Omega,Omega]_pi + phi; zero iff the deformed structure
/// has vanishing 3-form.
Form mcResidual(const PqnStructure& s, const Form& omega);

/// pass iff deform(deform(s, omega2), omega1) == deform(s, omega1 + omega2)
/// componentwise.
CheckReport actionCompose(const PqnStructure& s, const Form& omega1, const Form& omega2);

/// Derivation/differential laws of the induced structure, checked exactly on
/// a seeded battery of forms: d_N is a degree-1 derivation of the wedge and
/// of the Koszul bracket, d_N phi = 0, d_N^2 = [phi, .]_pi, and the
/// recovered anchor/bracket laws (anchor NX, bracket [X,Y]_N). Meaningful
/// only for structures that pass checkPqn.
CheckReport checkQuasiLieBialgebroidLaws(const PqnStructure& s, Rng rng);

}  // namespace pqn
