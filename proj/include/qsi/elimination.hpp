#ifndef QSI_ELIMINATION_HPP
#define QSI_ELIMINATION_HPP

#include <utility>

#include "qsi/bipoly.hpp"
#include "qsi/subresultant.hpp"

namespace qsi {

// Two quadrics in the monic normal form
//   f = z^2 + p1(x,y) z + p0(x,y),  g = z^2 + q1(x,y) z + q0(x,y)
// with deg p1, q1 <= 1 and deg p0, q0 <= 2.
struct MonicZPair {
  BiPoly p1, p0, q1, q0;

  MonicZPair() = default;
  MonicZPair(BiPoly p1_, BiPoly p0_, BiPoly q1_, BiPoly q0_);

  Rational eval_f(const Rational& x, const Rational& y, const Rational& z) const;
  Rational eval_g(const Rational& x, const Rational& y, const Rational& z) const;
  double eval_f(double x, double y, double z) const;
  double eval_g(double x, double y, double z) const;
};

// Everything the plane analysis needs, computed once from a MonicZPair:
// the resultant s0 (cutcurve equation), its squarefree part, the linear
// subresultant coefficients, both discriminants and the line p1 - q1.
struct EliminationBundle {
  BiPoly s0;             // Resultant(f, g; z), total degree <= 4
  BiPoly s0_squarefree;  // distinct-factor part of s0
  BiPoly s1_lin;         // q1 - p1   (coefficient of z in Sres_1)
  BiPoly s1_const;       // q0 - p0   (constant coefficient of Sres_1)
  BiPoly delta1;         // p1^2 - 4 p0
  BiPoly delta2;         // q1^2 - 4 q0
  BiPoly line;           // p1 - q1
  bool degenerate = false;  // s0 == 0: the quadrics share a z-component
};

// Generic subresultants of univariate polynomials over Rational, UniPoly or
// BiPoly coefficients are available through qsi/subresultant.hpp; these
// helpers wrap the two instantiations the pipeline needs.

// Sres_j(f, g; z) for the monic pair; returns the coefficient list in z
// (ascending).  j = 0 gives [resultant], j = 1 gives [q0 - p0, q1 - p1].
std::vector<BiPoly> subresultant_in_z(const MonicZPair& pair, int j);

// Sres_j(A, B; y) of two bivariate polynomials viewed in y over Q[x].
// Returns the coefficient list in y (each entry a UniPoly in x).
std::vector<UniPoly> subresultant_in_y(const BiPoly& A, const BiPoly& B, int j);

// Builds the bundle from the closed formula
//   s0 = (p0 - q0)^2 - (p1 - q1) (p0 q1 - q0 p1)
// and cross-checks the determinant route and the discriminant identity in
// debug builds.
EliminationBundle compute_bundle(const MonicZPair& pair);

// Exact check of the identity
//   s0 = 1/16 [ (p1-q1)^4 + (d1-d2)^2 - 2 (p1-q1)^2 (d1+d2) ],
// plus agreement of the closed formula with the Def-style determinant.
bool verify_cutcurve_identity(const MonicZPair& pair);

// Exact gradient of s0.
std::pair<BiPoly, BiPoly> grad_s0(const EliminationBundle& bundle);

}  // namespace qsi

#endif
