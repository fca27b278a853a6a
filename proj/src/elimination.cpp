#include "qsi/elimination.hpp"

#include <cassert>
#include <stdexcept>

namespace qsi {

MonicZPair::MonicZPair(BiPoly p1_, BiPoly p0_, BiPoly q1_, BiPoly q0_)
    : p1(std::move(p1_)), p0(std::move(p0_)), q1(std::move(q1_)), q0(std::move(q0_)) {
  if (p1.total_degree() > 1 || q1.total_degree() > 1)
    throw std::invalid_argument("MonicZPair: linear z-coefficient has degree > 1");
  if (p0.total_degree() > 2 || q0.total_degree() > 2)
    throw std::invalid_argument("MonicZPair: constant z-coefficient has degree > 2");
}

Rational MonicZPair::eval_f(const Rational& x, const Rational& y, const Rational& z) const {
  return z * z + p1.eval(x, y) * z + p0.eval(x, y);
}

Rational MonicZPair::eval_g(const Rational& x, const Rational& y, const Rational& z) const {
  return z * z + q1.eval(x, y) * z + q0.eval(x, y);
}

double MonicZPair::eval_f(double x, double y, double z) const {
  return z * z + p1.eval_double(x, y) * z + p0.eval_double(x, y);
}

double MonicZPair::eval_g(double x, double y, double z) const {
  return z * z + q1.eval_double(x, y) * z + q0.eval_double(x, y);
}

std::vector<BiPoly> subresultant_in_z(const MonicZPair& pair, int j) {
  RingPoly<BiPoly> F, G;
  BiPoly one = BiPoly::constant(Rational(1));
  F.c = {pair.p0, pair.p1, one};
  G.c = {pair.q0, pair.q1, one};
  F.trim();
  G.trim();
  RingPoly<BiPoly> s = subresultant_poly(F, G, j, one);
  std::vector<BiPoly> out = s.c;
  out.resize(j + 1);
  return out;
}

std::vector<UniPoly> subresultant_in_y(const BiPoly& A, const BiPoly& B, int j) {
  RingPoly<UniPoly> P, Q;
  P.c = A.coeffs_in_y();
  Q.c = B.coeffs_in_y();
  P.trim();
  Q.trim();
  UniPoly one = UniPoly::constant(Rational(1), Var::X);
  RingPoly<UniPoly> s = subresultant_poly(P, Q, j, one);
  std::vector<UniPoly> out = s.c;
  out.resize(j + 1);
  return out;
}

EliminationBundle compute_bundle(const MonicZPair& pair) {
  EliminationBundle b;
  BiPoly pd = pair.p0 - pair.q0;
  BiPoly ld = pair.p1 - pair.q1;
  b.s0 = pd * pd - ld * (pair.p0 * pair.q1 - pair.q0 * pair.p1);
  b.s1_lin = pair.q1 - pair.p1;
  b.s1_const = pair.q0 - pair.p0;
  b.delta1 = pair.p1 * pair.p1 - pair.p0.scaled(Rational(4));
  b.delta2 = pair.q1 * pair.q1 - pair.q0.scaled(Rational(4));
  b.line = ld;
  b.degenerate = b.s0.is_zero();
  if (!b.degenerate) b.s0_squarefree = bivariate_squarefree(b.s0);
  assert(b.s0.total_degree() <= 4);
#ifndef NDEBUG
  assert(verify_cutcurve_identity(pair));
#endif
  return b;
}

bool verify_cutcurve_identity(const MonicZPair& pair) {
  BiPoly pd = pair.p0 - pair.q0;
  BiPoly ld = pair.p1 - pair.q1;
  BiPoly closed = pd * pd - ld * (pair.p0 * pair.q1 - pair.q0 * pair.p1);

  // determinant route
  std::vector<BiPoly> det_s0 = subresultant_in_z(pair, 0);
  if (det_s0[0] != closed) return false;
  std::vector<BiPoly> s1 = subresultant_in_z(pair, 1);
  if (s1[1] != pair.q1 - pair.p1 || s1[0] != pair.q0 - pair.p0) return false;

  // discriminant identity
  BiPoly d1 = pair.p1 * pair.p1 - pair.p0.scaled(Rational(4));
  BiPoly d2 = pair.q1 * pair.q1 - pair.q0.scaled(Rational(4));
  BiPoly ld2 = ld * ld;
  BiPoly rhs = ld2 * ld2 + (d1 - d2) * (d1 - d2) - (ld2 * (d1 + d2)).scaled(Rational(2));
  return rhs.scaled(Rational(1, 16)) == closed;
}

std::pair<BiPoly, BiPoly> grad_s0(const EliminationBundle& bundle) {
  return {bundle.s0.deriv_x(), bundle.s0.deriv_y()};
}

}  // namespace qsi
