#ifndef QSI_LIFTING_HPP
#define QSI_LIFTING_HPP

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qsi/cutcurve.hpp"
#include "qsi/quadric.hpp"

namespace qsi {

struct InternalInconsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class LiftSource { S1Formula, QuadraticOnF, QuadraticOnG };

struct LiftedPoint {
  std::array<double, 3> p{0, 0, 0};
  LiftSource source = LiftSource::S1Formula;
  int multiplicity = 1;
  bool exact = false;  // coordinates are exactly rational
  std::array<Rational, 3> exact_coords{};
  std::string label;  // provenance tag for special points
};

// Lifts an exact planar cutcurve point to space.  Points off the line p1=q1
// get the single linear-subresultant root; points on the line are lifted by
// the quadratic formula on f (up to two roots, one double root when the
// discriminant vanishes).  Throws std::domain_error when the point is not on
// the cutcurve.
std::vector<LiftedPoint> lift(const AlgebraicPoint2D& pt, const MonicZPair& pair,
                              const EliminationBundle& bundle, double precision = 1e-13);

// Sorted, deduplicated x-coordinates where the traced curve can change
// structure: singular points, boundary points, vertical tangents or
// x-extremes (discriminant roots of the squarefree cutcurve in y) and
// degree drops of the leading y-coefficient.
std::vector<AlgebraicNumber> critical_x_values(const CutcurveAnalysis& an);

// value = (a(x) + b(x) * sqrt(r(x))) / c(x); b == 0 for plain rational
// functions
struct RadicalExpr1D {
  UniPoly a, b, r, c;
  bool is_rational() const { return b.is_zero() || r.is_zero(); }
  double eval(double x) const;
  std::string to_string(const char* var = "x") const;
};

// z through the quadratic formula on one of the surfaces, evaluated on the
// curve point (x, y): z = (-zlin(x,y) + sz*sqrt(zdisc(x,y)))/2
struct ZQuadraticForm {
  BiPoly zlin, zdisc;
  int sz = 1;
  double eval(double x, double y) const;
  std::string to_string() const;
};

struct XInterval {
  std::optional<AlgebraicNumber> lo, hi;  // nullopt: unbounded side
  bool lo_closed = true, hi_closed = true;
  std::string to_string() const;
};

struct ParamBranch {
  RadicalExpr1D y;
  std::variant<RadicalExpr1D, ZQuadraticForm> z;
  std::vector<XInterval> domain;
  bool on_line = false;  // branch lies in the line p1 = q1
};

struct Polyline3 {
  std::vector<std::array<double, 3>> pts;
  std::string start_anchor, end_anchor;  // labels of exact special points
};

struct CurveBranch {
  enum class Kind { Parameterized, Polyline } kind = Kind::Polyline;
  ParamBranch param;
  Polyline3 polyline;
};

struct TraceOptions {
  int samples_per_interval = 20;
  double precision = 1e-12;      // refinement width for numeric output
  double window_halfwidth = 8;   // clip for unbounded branches
};

// Closed-form branches when every factor of the squarefree cutcurve has
// degree <= 2 in y (empty vector when any factor resists, in which case the
// caller discretizes).
std::vector<CurveBranch> try_parameterize(const CutcurveAnalysis& an, const MonicZPair& pair);

// Discretization: exact per-sample root isolation between critical x-values,
// verified branch counts, linear-subresultant lifting (quadratic on the
// line).  Never samples at a singular x.
std::vector<CurveBranch> trace_branches(const CutcurveAnalysis& an, const MonicZPair& pair,
                                        const TraceOptions& opts);

struct IntersectionResult {
  std::vector<CurveBranch> branches;
  std::vector<LiftedPoint> isolated_points;
  std::vector<LiftedPoint> singular_lifted;
  bool identical_quadrics = false;
  bool shared_component = false;
  bool empty_intersection = false;
  bool parameterized = false;  // closed-form path taken
};

struct AssembleOptions {
  TraceOptions trace;
  enum class Path { Auto, Parameterize, Discretize } path = Path::Auto;
};

// Runs the decision logic (closed form when possible, otherwise
// discretization), lifts singular points, detects isolated points and maps
// everything back through the normalization transform.
IntersectionResult assemble(const CutcurveAnalysis& an, const MonicZPair& pair,
                            const NormalizedScene& scene, const AssembleOptions& opts);

}  // namespace qsi

#endif
