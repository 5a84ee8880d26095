#pragma once

#include "pqn/tensor.hpp"

namespace pqn {

/// Exterior derivative. For an n-form the result has degree n+1 and is the
/// distinguished structural zero (trivialByDegree()).
Form exteriorD(const Form& eta);

/// Exterior derivative of a function (convenience wrapper).
Form exteriorD(const Polynomial& f, const Chart& chart);

/// Lie bracket of vector fields.
VectorField lieBracket(const VectorField& x, const VectorField& y);

/// Vector field applied to a function.
Polynomial applyVectorField(const VectorField& x, const Polynomial& f);

/// Lie derivative of a form along a vector field (Cartan formula).
Form lieDerivativeForm(const VectorField& x, const Form& eta);

/// Convention knob for the function base case of the Schouten bracket.
/// FlippedFunctionTerm deliberately breaks graded Jacobi and exists as a
/// negative control for the identity suites.
enum class SchoutenSign { Standard, FlippedFunctionTerm };

/// Schouten bracket of multivector fields. Degree p+q-1; restricts to the
/// Lie bracket on vector fields, [X,f] = X(f), [f,P] = -i_{df}P.
MultiVector schouten(const MultiVector& p, const MultiVector& q,
                     SchoutenSign sign = SchoutenSign::Standard);

/// Generalized Schouten (Koszul) bracket of forms induced by a bivector pi,
/// computed by monomial reduction to the 1-form/1-form and 1-form/function
/// base cases.
Form koszulBracket(const Form& eta1, const Form& eta2, const MultiVector& pi);

/// d_N = i_N d - d i_N; a degree +1 derivation.
Form dN(const EndoField& n, const Form& eta);

/// Deformed bracket [X,Y]_N = [NX,Y] + [X,NY] - N[X,Y].
VectorField bracketN(const EndoField& n, const VectorField& x, const VectorField& y);

/// Nijenhuis torsion T_N(X,Y) = [NX,NY] - N[X,Y]_N.
VectorField nijenhuisTorsion(const EndoField& n, const VectorField& x, const VectorField& y);

/// The torsion as a (1,2)-tensor: the value on every increasing frame pair
/// (i,j), which determines it by tensoriality and antisymmetry.
std::vector<std::pair<IndexTuple, VectorField>> nijenhuisTorsionFrame(const EndoField& n);

/// Lichnerowicz differential of the cotangent algebroid of pi on
/// multivectors: d_pi = schouten(pi, .). On functions d_pi f = -pi# df.
MultiVector lichnerowiczD(const MultiVector& pi, const MultiVector& p);

/// L^pi_alpha Y = L_{pi# alpha} Y + pi#(i_Y d alpha).
VectorField piLieDerivative(const Form& alpha, const VectorField& y, const MultiVector& pi);

/// [X,Y]^pi_Omega = L^pi_{Omega.flat X} Y - L^pi_{Omega.flat Y} X - d_pi(Omega(X,Y)).
VectorField omegaPiBracket(const VectorField& x, const VectorField& y, const Form& omega,
                           const MultiVector& pi);

/// Magri-Morosi concomitant
/// C(a,b) = [a,b]_{piN} - [N*a,b]_pi - [a,N*b]_pi + N*[a,b]_pi;
/// piN must be the bivector with sharp map N pi#.
Form compatibilityConcomitant(const MultiVector& pi, const MultiVector& piN, const EndoField& n,
                              const Form& alpha, const Form& beta);

}  // namespace pqn
