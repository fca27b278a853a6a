#ifndef QSI_CUTCURVE_HPP
#define QSI_CUTCURVE_HPP

#include <vector>

#include "qsi/algebraic.hpp"
#include "qsi/elimination.hpp"

namespace qsi {

// The set {delta1 >= 0 and delta2 >= 0}: the only part of the plane where
// the cutcurve corresponds to real intersection points.
struct AdmissibleRegion {
  BiPoly delta1, delta2;
};

enum class RegionSide { Inside, Boundary, Outside };

// Sign-correct classification; Boundary only when some delta is exactly zero.
RegionSide region_contains(const AdmissibleRegion& region, const AlgebraicPoint2D& pt);
RegionSide region_contains(const AdmissibleRegion& region, const Rational& x, const Rational& y);

enum class SingularKind { OnLine, Tangential, RegionVertex };
enum class LiftStrategy { QuadraticFormula, LinearSubresultant };

struct SingularPoint {
  AlgebraicPoint2D location;
  SingularKind kind;
  RegionSide side = RegionSide::Outside;
  bool in_region = false;  // Inside or Boundary
  LiftStrategy lift = LiftStrategy::QuadraticFormula;
};

struct BoundaryPoint {
  AlgebraicPoint2D location;
  int silhouette = 1;          // which discriminant vanishes
  bool region_vertex = false;  // on both silhouettes
};

// Exact solver for a pair of curves of total degree <= 2.  Finds all common
// real points with exact coordinates, shearing coordinates when points line
// up vertically.  shared_component is set when the curves overlap in a
// one-dimensional set.
struct ConicSystemSolution {
  std::vector<AlgebraicPoint2D> points;
  bool shared_component = false;
};
ConicSystemSolution solve_conic_system(const BiPoly& A, const BiPoly& B);

// Singular points of the cutcurve on the line p1 = q1: the intersections of
// {delta1 - delta2 = 0} with the line.  line_in_cutcurve reports the case
// where the substitution vanishes identically (the entire line belongs to
// the cutcurve and every point of it is singular).
struct OnLineSingular {
  std::vector<SingularPoint> points;
  bool line_in_cutcurve = false;
};
OnLineSingular singular_on_line(const EliminationBundle& bundle, const AdmissibleRegion& region);

// The univariate polynomial carrying the x-coordinates of the on-line
// singular points: substitute the solved line into delta1 - delta2 and take
// the squarefree part (zero when the whole line lies in the cutcurve);
// for a vertical line the line polynomial itself; 1 when p1 - q1 is a
// nonzero constant.
UniPoly tau(const MonicZPair& pair, const EliminationBundle& bundle);

// Singular points off the line (projections of tangential intersections),
// located through the subresultant chains of (s0, ds0/dx; y) and
// (s0, ds0/dy; y).  Every candidate is verified exactly against
// s0 = 0, grad s0 = 0, p1 != q1 before acceptance.
std::vector<SingularPoint> tangential_singular(const EliminationBundle& bundle,
                                               const MonicZPair& pair,
                                               const AdmissibleRegion& region);

// Cutcurve-silhouette intersections through the simpler equivalent system
// 2(p0 + q0) - p1 q1 = 0, delta_i = 0; solutions are filtered by s0 = 0.
struct SilhouettePoints {
  std::vector<BoundaryPoint> points;
  bool degenerate_shared_component = false;
};
SilhouettePoints silhouette_cut_points(const EliminationBundle& bundle, const MonicZPair& pair);

// True iff delta1 = delta2 = 0 at the point (which must lie on the
// cutcurve); when true the point necessarily sits on the line p1 = q1.
bool classify_vertex(const EliminationBundle& bundle, const MonicZPair& pair,
                     const AlgebraicPoint2D& pt);

// Checks that every common point of the cutcurve and both silhouettes
// satisfies p1 = q1 (the system with p1 != q1 has no real solutions).
bool no_common_offline_check(const EliminationBundle& bundle, const MonicZPair& pair);

// Whole-plane analysis driving the lifting stage.
struct CutcurveAnalysis {
  EliminationBundle bundle;
  AdmissibleRegion region;
  bool degenerate_shared_z = false;  // s0 == 0
  bool p1_equals_q1 = false;         // cutcurve is the double conic p0 - q0
  BiPoly conic;                      // p0 - q0 when p1_equals_q1
  bool line_in_cutcurve = false;
  int line_multiplicity = 0;  // multiplicity of the line factor in s0
  BiPoly line_residual;       // s0 / line^multiplicity
  std::vector<SingularPoint> singular_points;
  std::vector<BoundaryPoint> boundary_points;
  bool silhouette_degenerate = false;
};
CutcurveAnalysis analyze_cutcurve(const MonicZPair& pair);

}  // namespace qsi

#endif
