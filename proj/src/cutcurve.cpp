#include "qsi/cutcurve.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "qsi/factor.hpp"

namespace qsi {

namespace {

const UniPoly kOne = UniPoly::constant(Rational(1));
const UniPoly kId({Rational(0), Rational(1)});

struct LineCoeffs {
  Rational a, b, c;  // a x + b y + c
};

LineCoeffs line_coefficients(const BiPoly& line) {
  return {line.coeff(1, 0), line.coeff(0, 1), line.coeff(0, 0)};
}

RegionSide side_from_signs(int s1, int s2) {
  if (s1 < 0 || s2 < 0) return RegionSide::Outside;
  if (s1 == 0 || s2 == 0) return RegionSide::Boundary;
  return RegionSide::Inside;
}

void set_region_state(SingularPoint* sp, const AdmissibleRegion& region) {
  sp->side = side_from_signs(sp->location.sign_of(region.delta1),
                             sp->location.sign_of(region.delta2));
  sp->in_region = sp->side != RegionSide::Outside;
}

// substitute x -> x' - lam*y into a bivariate polynomial
BiPoly shear_x(const BiPoly& p, const Rational& lam) {
  if (lam.is_zero()) return p;
  BiPoly xs = BiPoly::monomial(1, 0, Rational(1)) - BiPoly::monomial(0, 1, lam);
  BiPoly out;
  for (const auto& [m, c] : p.terms()) {
    BiPoly term = BiPoly::constant(c) * xs.pow(m.i) * BiPoly::monomial(0, m.j, Rational(1));
    out = out + term;
  }
  return out;
}

bool leading_y_is_nonzero_constant(const BiPoly& p) {
  int dy = p.degree_y();
  if (dy < 0) return false;
  UniPoly lc = p.coeff_of_y(dy);
  return lc.degree() == 0 && !lc.coeff(0).is_zero();
}

void push_unique(std::vector<AlgebraicPoint2D>* pts, const AlgebraicPoint2D& p) {
  for (const auto& q : *pts)
    if (AlgebraicPoint2D::same_point(q, p)) return;
  pts->push_back(p);
}

}  // namespace

RegionSide region_contains(const AdmissibleRegion& region, const AlgebraicPoint2D& pt) {
  return side_from_signs(pt.sign_of(region.delta1), pt.sign_of(region.delta2));
}

RegionSide region_contains(const AdmissibleRegion& region, const Rational& x, const Rational& y) {
  return side_from_signs(region.delta1.eval(x, y).sign(), region.delta2.eval(x, y).sign());
}

// ---------------- conic system solver ----------------

ConicSystemSolution solve_conic_system(const BiPoly& A, const BiPoly& B) {
  if (A.is_zero() || B.is_zero())
    throw std::invalid_argument("solve_conic_system: zero input curve");
  ConicSystemSolution out;
  if (A.is_constant() || B.is_constant()) return out;  // nonzero constants: empty zero set

  // shared one-dimensional component?
  if (BiPoly::proportional(A, B)) {
    out.shared_component = true;
    return out;
  }
  if (A.degree_y() > 0 && B.degree_y() > 0) {
    BiPoly g = gcd_in_y(A, B);
    if (g.degree_y() > 0) {
      out.shared_component = true;
      return out;
    }
  }
  {
    // shared factor depending on one variable only
    UniPoly ca = A.content_x(), cb = B.content_x();
    if (ca.degree() > 0 && cb.degree() > 0 && UniPoly::gcd(ca, cb).degree() > 0) {
      out.shared_component = true;
      return out;
    }
    UniPoly cay = A.content_y(), cby = B.content_y();
    if (cay.degree() > 0 && cby.degree() > 0 && UniPoly::gcd(cay, cby).degree() > 0) {
      out.shared_component = true;
      return out;
    }
  }

  const long lams[] = {0, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5, 6};
  for (long lam_l : lams) {
    Rational lam(lam_l);
    BiPoly As = shear_x(A, lam), Bs = shear_x(B, lam);
    // constant leading y-coefficients keep the resultant faithful at every x
    if (As.degree_y() > 0 && !leading_y_is_nonzero_constant(As)) continue;
    if (Bs.degree_y() > 0 && !leading_y_is_nonzero_constant(Bs)) continue;
    if (As.degree_y() == 0 || Bs.degree_y() == 0) {
      // one curve depends on x' alone: intersect by substitution
      const BiPoly& xonly = As.degree_y() == 0 ? As : Bs;
      const BiPoly& other = As.degree_y() == 0 ? Bs : As;
      UniPoly xpoly = xonly.coeff_of_y(0);
      if (xpoly.degree() < 1) continue;  // constant: no finite intersection
      bool all_resolved = true;
      std::vector<AlgebraicPoint2D> found;
      for (const AlgebraicNumber& x0 : isolate_real_roots(xpoly)) {
        if (!x0.is_rational()) {
          all_resolved = false;  // y would be nested-algebraic: try a shear
          continue;
        }
        UniPoly sec = other.subst_x(x0.rational_value());
        if (sec.is_zero() || sec.degree() < 1) continue;
        for (const AlgebraicNumber& y0 : isolate_real_roots(sec)) {
          // unshear: x = x' - lam*y
          UniPoly xn = UniPoly::constant(x0.rational_value(), Var::Y) -
                       UniPoly({Rational(0), lam}, Var::Y);
          found.push_back(AlgebraicPoint2D(y0, xn, UniPoly::constant(Rational(1), Var::Y),
                                           UniPoly({Rational(0), Rational(1)}, Var::Y),
                                           UniPoly::constant(Rational(1), Var::Y)));
        }
      }
      if (!all_resolved) continue;
      for (const auto& p : found)
        if (p.lies_on(A) && p.lies_on(B)) push_unique(&out.points, p);
      return out;
    }

    std::vector<UniPoly> res = subresultant_in_y(As, Bs, 0);
    UniPoly R = res[0];
    if (R.is_zero()) {
      out.shared_component = true;
      return out;
    }
    if (R.degree() < 1) return out;  // no affine solutions
    std::vector<UniPoly> s1 = subresultant_in_y(As, Bs, 1);
    UniPoly s10 = s1[0], s11 = s1[1];
    bool all_resolved = true;
    std::vector<AlgebraicPoint2D> found;
    for (const AlgebraicNumber& x0 : isolate_real_roots(R)) {
      if (x0.sign_of(s11) == 0) {
        all_resolved = false;
        continue;
      }
      // y = -s10/s11 at x'; unshear x = x' + lam*s10/s11
      UniPoly xn = kId * s11 + s10.scaled(lam);
      found.push_back(AlgebraicPoint2D(x0, xn, s11, -s10, s11));
    }
    if (!all_resolved) continue;
    for (const auto& p : found)
      if (p.lies_on(A) && p.lies_on(B)) push_unique(&out.points, p);
    return out;
  }
  throw std::runtime_error("solve_conic_system: no shear resolved all intersections");
}

// ---------------- on-line singular points ----------------

OnLineSingular singular_on_line(const EliminationBundle& bundle, const AdmissibleRegion& region) {
  OnLineSingular out;
  const BiPoly& line = bundle.line;
  if (line.is_zero())
    throw std::logic_error("singular_on_line: p1 == q1 identically (conic special case)");
  LineCoeffs lc = line_coefficients(line);
  BiPoly diff = bundle.delta1 - bundle.delta2;

  auto emit = [&](AlgebraicPoint2D pt) {
    SingularPoint sp;
    sp.location = std::move(pt);
    sp.kind = SingularKind::OnLine;
    sp.lift = LiftStrategy::QuadraticFormula;
    set_region_state(&sp, region);
    out.points.push_back(std::move(sp));
  };

  if (!lc.b.is_zero()) {
    // y = -(a x + c)/b
    UniPoly ynum({-lc.c, -lc.a});
    UniPoly yden = UniPoly::constant(lc.b);
    UniPoly T = diff.subst_y_rational_cleared(ynum, yden);
    if (T.is_zero()) {
      out.line_in_cutcurve = true;
      return out;
    }
    if (T.degree() >= 1)
      for (const AlgebraicNumber& x0 : isolate_real_roots(T))
        emit(AlgebraicPoint2D::y_of_x(x0, ynum, yden));
    return out;
  }
  if (!lc.a.is_zero()) {
    // vertical line x = -c/a
    Rational x0 = -lc.c / lc.a;
    UniPoly T = diff.subst_x(x0);
    if (T.is_zero()) {
      out.line_in_cutcurve = true;
      return out;
    }
    if (T.degree() >= 1)
      for (const AlgebraicNumber& y0 : isolate_real_roots(T))
        emit(AlgebraicPoint2D::x_of_y(y0, UniPoly::constant(x0, Var::Y),
                                      UniPoly::constant(Rational(1), Var::Y)));
    return out;
  }
  // p1 - q1 is a nonzero constant: the "line" is empty
  return out;
}

UniPoly tau(const MonicZPair& pair, const EliminationBundle& bundle) {
  (void)pair;
  const BiPoly& line = bundle.line;
  if (line.is_zero()) throw std::logic_error("tau: p1 == q1 identically");
  LineCoeffs lc = line_coefficients(line);
  BiPoly diff = bundle.delta1 - bundle.delta2;
  if (!lc.b.is_zero()) {
    UniPoly T = diff.subst_y_rational_cleared(UniPoly({-lc.c, -lc.a}), UniPoly::constant(lc.b));
    if (T.is_zero()) return UniPoly();  // whole line inside the cutcurve
    if (T.degree() == 0) return kOne;
    return T.squarefree_part();
  }
  if (!lc.a.is_zero()) return UniPoly({lc.c, lc.a});  // the line polynomial itself, in x
  return kOne;  // p1 - q1 a nonzero constant: no line, no roots
}

// ---------------- tangential singular points ----------------

std::vector<SingularPoint> tangential_singular(const EliminationBundle& bundle,
                                               const MonicZPair& pair,
                                               const AdmissibleRegion& region) {
  std::vector<SingularPoint> out;
  if (bundle.degenerate || bundle.line.is_zero()) return out;

  BiPoly core = bundle.s0_squarefree;
  UniPoly contx = core.content_x();
  if (contx.degree() > 0) core = core.divide_by_unipoly_x(contx);
  UniPoly conty = core.content_y();
  if (conty.degree() > 0) core = core.divide_by_unipoly_y(conty);

  std::vector<AlgebraicPoint2D> candidates;

  if (core.degree_y() >= 1 && core.degree_x() >= 1) {
    BiPoly Sx = core.deriv_x(), Sy = core.deriv_y();
    std::vector<UniPoly> gcd_parts;
    UniPoly U10, U11, V10, V11;
    bool have_u1 = false, have_v1 = false;
    if (!Sx.is_zero()) {
      UniPoly U0 = subresultant_in_y(core, Sx, 0)[0];
      if (!U0.is_zero() && U0.degree() >= 1) gcd_parts.push_back(U0.squarefree_part());
      if (std::min(core.degree_y(), Sx.degree_y()) >= 1) {
        auto U1 = subresultant_in_y(core, Sx, 1);
        U10 = U1[0];
        U11 = U1[1];
        have_u1 = true;
      }
    }
    if (!Sy.is_zero()) {
      UniPoly V0 = subresultant_in_y(core, Sy, 0)[0];
      if (!V0.is_zero() && V0.degree() >= 1) gcd_parts.push_back(V0.squarefree_part());
      if (std::min(core.degree_y(), Sy.degree_y()) >= 1) {
        auto V1 = subresultant_in_y(core, Sy, 1);
        V10 = V1[0];
        V11 = V1[1];
        have_v1 = true;
      }
    }
    if (have_u1 && have_v1) {
      UniPoly W = U10 * V11 - V10 * U11;
      if (!W.is_zero() && W.degree() >= 1) gcd_parts.push_back(W.squarefree_part());
    }
    if (!gcd_parts.empty()) {
      UniPoly G = gcd_parts[0];
      for (size_t i = 1; i < gcd_parts.size(); ++i) G = UniPoly::gcd(G, gcd_parts[i]);
      UniPoly t = tau(pair, bundle);
      UniPoly omega = G;
      if (!t.is_zero() && t.degree() >= 1) {
        UniPoly gt = UniPoly::gcd(G, t);
        if (gt.degree() >= 1) omega = G.exact_div(gt);
      }
      if (omega.degree() >= 1) {
        for (const AlgebraicNumber& x0 : isolate_real_roots(omega)) {
          if (have_u1 && x0.sign_of(U11) != 0) {
            candidates.push_back(AlgebraicPoint2D::y_of_x(x0, -U10, U11));
          } else if (have_v1 && x0.sign_of(V11) != 0) {
            candidates.push_back(AlgebraicPoint2D::y_of_x(x0, -V10, V11));
          }
          // both denominators vanishing would put a squared common factor in
          // s0(x0, y) and both partials, impossible at degree <= 4 in y
        }
      }
    }
  }

  // crossings of rational axis-parallel line components with the rest of the
  // curve are singular points of the curve as well
  if (contx.degree() > 0) {
    for (const AlgebraicNumber& r : isolate_real_roots(contx)) {
      if (!r.is_rational()) continue;  // tracing safety comes from the discriminant
      const Rational& x0 = r.rational_value();
      BiPoly rest = bundle.s0_squarefree.divide_by_unipoly_x(UniPoly({-x0, Rational(1)}));
      UniPoly sec = rest.subst_x(x0);
      if (sec.degree() >= 1)
        for (const AlgebraicNumber& y0 : isolate_real_roots(sec))
          candidates.push_back(AlgebraicPoint2D::x_of_y(y0, UniPoly::constant(x0, Var::Y),
                                                        UniPoly::constant(Rational(1), Var::Y)));
    }
  }
  if (conty.degree() > 0) {
    for (const AlgebraicNumber& r : isolate_real_roots(conty)) {
      if (!r.is_rational()) continue;
      const Rational& y0 = r.rational_value();
      UniPoly ypoly({-y0, Rational(1)});
      ypoly.set_var(Var::Y);
      BiPoly rest = bundle.s0_squarefree.divide_by_unipoly_y(ypoly);
      UniPoly sec = rest.subst_y(y0);
      if (sec.degree() >= 1)
        for (const AlgebraicNumber& x0 : isolate_real_roots(sec))
          candidates.push_back(AlgebraicPoint2D::y_of_x(x0, UniPoly::constant(y0), kOne));
    }
  }

  // exact verification: S0 = 0, grad S0 = 0, p1 != q1 (the construction is a
  // necessary condition; spurious roots are filtered here)
  BiPoly gx = bundle.s0.deriv_x(), gy = bundle.s0.deriv_y();
  std::vector<AlgebraicPoint2D> verified;
  for (const auto& pt : candidates) {
    if (!pt.lies_on(bundle.s0)) continue;
    if (!pt.lies_on(gx) || !pt.lies_on(gy)) continue;
    if (pt.sign_of(bundle.line) == 0) continue;
    push_unique(&verified, pt);
  }
  std::sort(verified.begin(), verified.end(), AlgebraicPoint2D::less_xy);
  for (auto& pt : verified) {
    SingularPoint sp;
    sp.location = std::move(pt);
    sp.kind = SingularKind::Tangential;
    sp.lift = LiftStrategy::LinearSubresultant;
    set_region_state(&sp, region);
    out.push_back(std::move(sp));
  }
  return out;
}

// ---------------- silhouette intersections ----------------

SilhouettePoints silhouette_cut_points(const EliminationBundle& bundle, const MonicZPair& pair) {
  SilhouettePoints out;
  BiPoly A = (pair.p0 + pair.q0).scaled(Rational(2)) - pair.p1 * pair.q1;
  if (A.is_zero()) {
    out.degenerate_shared_component = true;
    return out;
  }
  for (int i = 1; i <= 2; ++i) {
    const BiPoly& delta = (i == 1) ? bundle.delta1 : bundle.delta2;
    if (delta.is_constant()) {
      if (delta.is_zero()) out.degenerate_shared_component = true;
      continue;  // nonzero constant discriminant: empty silhouette
    }
    ConicSystemSolution sol = solve_conic_system(A, delta);
    if (sol.shared_component) {
      out.degenerate_shared_component = true;
      continue;
    }
    for (const auto& pt : sol.points) {
      if (!pt.lies_on(bundle.s0)) continue;  // the simpler system is equivalent only on S0
      BoundaryPoint bp;
      bp.location = pt;
      bp.silhouette = i;
      bp.region_vertex = classify_vertex(bundle, pair, pt);
      out.points.push_back(std::move(bp));
    }
  }
  std::sort(out.points.begin(), out.points.end(),
            [](const BoundaryPoint& u, const BoundaryPoint& v) {
              if (u.silhouette != v.silhouette) return u.silhouette < v.silhouette;
              return AlgebraicPoint2D::less_xy(u.location, v.location);
            });
  return out;
}

bool classify_vertex(const EliminationBundle& bundle, const MonicZPair& pair,
                     const AlgebraicPoint2D& pt) {
  (void)pair;
  bool vertex = pt.sign_of(bundle.delta1) == 0 && pt.sign_of(bundle.delta2) == 0;
  if (vertex && pt.sign_of(bundle.line) != 0)
    throw std::logic_error("classify_vertex: region vertex off the line p1 = q1");
  return vertex;
}

bool no_common_offline_check(const EliminationBundle& bundle, const MonicZPair& pair) {
  SilhouettePoints sp = silhouette_cut_points(bundle, pair);
  for (const BoundaryPoint& b : sp.points) {
    // a point on the cutcurve and on both silhouettes must sit on the line
    const BiPoly& other = (b.silhouette == 1) ? bundle.delta2 : bundle.delta1;
    if (b.location.sign_of(other) != 0) continue;
    if (b.location.sign_of(bundle.line) != 0) return false;
  }
  return true;
}

// ---------------- whole-plane analysis ----------------

CutcurveAnalysis analyze_cutcurve(const MonicZPair& pair) {
  CutcurveAnalysis an;
  an.bundle = compute_bundle(pair);
  an.region = AdmissibleRegion{an.bundle.delta1, an.bundle.delta2};
  if (an.bundle.degenerate) {
    an.degenerate_shared_z = true;
    return an;
  }

  if (an.bundle.line.is_zero()) {
    // the cutcurve is the conic p0 - q0 = 0 counted twice; every point of it
    // is singular and the lifting uses the quadratic formula throughout
    an.p1_equals_q1 = true;
    an.conic = pair.p0 - pair.q0;
    if (an.conic.is_constant()) return an;  // parallel surfaces: empty cutcurve
    for (int i = 1; i <= 2; ++i) {
      const BiPoly& delta = (i == 1) ? an.bundle.delta1 : an.bundle.delta2;
      if (delta.is_constant()) continue;
      ConicSystemSolution sol = solve_conic_system(an.conic, delta);
      if (sol.shared_component) {
        an.silhouette_degenerate = true;
        continue;
      }
      for (const auto& pt : sol.points) {
        BoundaryPoint bp;
        bp.location = pt;
        bp.silhouette = i;
        bp.region_vertex = classify_vertex(an.bundle, pair, pt);
        an.boundary_points.push_back(std::move(bp));
      }
    }
    return an;
  }

  OnLineSingular onl = singular_on_line(an.bundle, an.region);
  an.line_in_cutcurve = onl.line_in_cutcurve;
  an.singular_points = std::move(onl.points);

  if (an.line_in_cutcurve) {
    // peel the line factor (it divides s0 at least twice since every point of
    // it is singular) and record the crossings with the residual curve
    BiPoly residual = an.bundle.s0;
    int mult = 0;
    while (residual.divisible_by(an.bundle.line)) {
      residual = residual.exact_div(an.bundle.line);
      ++mult;
    }
    assert(mult >= 2);
    an.line_multiplicity = mult;
    an.line_residual = residual;
    LineCoeffs lc = line_coefficients(an.bundle.line);
    auto emit_crossing = [&](AlgebraicPoint2D pt) {
      SingularPoint sp;
      sp.location = std::move(pt);
      sp.kind = SingularKind::OnLine;
      sp.lift = LiftStrategy::QuadraticFormula;
      set_region_state(&sp, an.region);
      an.singular_points.push_back(std::move(sp));
    };
    if (!lc.b.is_zero()) {
      UniPoly ynum({-lc.c, -lc.a});
      UniPoly yden = UniPoly::constant(lc.b);
      UniPoly cross = residual.subst_y_rational_cleared(ynum, yden);
      if (cross.degree() >= 1)
        for (const AlgebraicNumber& x0 : isolate_real_roots(cross))
          emit_crossing(AlgebraicPoint2D::y_of_x(x0, ynum, yden));
    } else if (!lc.a.is_zero()) {
      Rational x0 = -lc.c / lc.a;
      UniPoly cross = residual.subst_x(x0);
      if (cross.degree() >= 1)
        for (const AlgebraicNumber& y0 : isolate_real_roots(cross))
          emit_crossing(AlgebraicPoint2D::x_of_y(y0, UniPoly::constant(x0, Var::Y),
                                                 UniPoly::constant(Rational(1), Var::Y)));
    }
  }

  for (SingularPoint& sp : tangential_singular(an.bundle, pair, an.region))
    an.singular_points.push_back(std::move(sp));

  SilhouettePoints sil = silhouette_cut_points(an.bundle, pair);
  an.silhouette_degenerate = sil.degenerate_shared_component;
  an.boundary_points = std::move(sil.points);

  // region vertices are singular points in their own right and sit on the line
  for (const BoundaryPoint& bp : an.boundary_points) {
    if (!bp.region_vertex) continue;
    bool known = false;
    for (SingularPoint& sp : an.singular_points) {
      if (AlgebraicPoint2D::same_point(sp.location, bp.location)) {
        sp.kind = SingularKind::RegionVertex;
        known = true;
        break;
      }
    }
    if (!known) {
      SingularPoint sp;
      sp.location = bp.location;
      sp.kind = SingularKind::RegionVertex;
      sp.lift = LiftStrategy::QuadraticFormula;
      set_region_state(&sp, an.region);
      an.singular_points.push_back(std::move(sp));
    }
  }

  std::vector<SingularPoint> dedup;
  for (auto& sp : an.singular_points) {
    bool dup = false;
    for (const auto& q : dedup)
      if (AlgebraicPoint2D::same_point(q.location, sp.location)) {
        dup = true;
        break;
      }
    if (!dup) dedup.push_back(std::move(sp));
  }
  std::sort(dedup.begin(), dedup.end(), [](const SingularPoint& u, const SingularPoint& v) {
    return AlgebraicPoint2D::less_xy(u.location, v.location);
  });
  an.singular_points = std::move(dedup);
  return an;
}

}  // namespace qsi
