#ifndef QSI_IO_HPP
#define QSI_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "qsi/lifting.hpp"

namespace qsi {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two quadrics, each given either as ten coefficients in the order
//   x^2 y^2 z^2 xy xz yz x y z 1
// on a "quadric:" line, or as a symmetric 4x4 matrix after a "matrix:" line.
// Values may be integers, fractions ("3/7") or decimal strings ("0.25"),
// all converted exactly.
struct InputDocument {
  Quadric first, second;
  std::array<Rational, 10> coeffs1{}, coeffs2{};
};

InputDocument parse_input(std::istream& in);
InputDocument parse_input_file(const std::string& path);

struct RunOptions {
  AssembleOptions assemble;
  bool no_transform = false;
  int precision_digits = 12;
};

struct RunResult {
  InputDocument input;
  NormalizedScene scene;
  std::optional<CutcurveAnalysis> analysis;  // monic path only
  std::optional<MixedProjection> mixed_projection;
  IntersectionResult result;
  bool mixed = false;
  RunOptions options;
  double timing_ms = 0;
};

// Executes the full pipeline: normalize, analyze the cutcurve, find special
// points, parameterize or discretize, lift, map back.
RunResult run(const InputDocument& input, const RunOptions& options);

// Versioned self-describing result document.  Deterministic for fixed input
// and flags except for the trailing timing line (suppressed when
// include_timing is false).
void write_output_document(std::ostream& os, const RunResult& rr, bool include_timing = true);

// Same content as a JSON object.
void write_json(std::ostream& os, const RunResult& rr);

// Wavefront OBJ: one object per branch with v/l records, isolated points as
// single-vertex objects with p records.
void export_polylines_obj(std::ostream& os, const IntersectionResult& result);

// Delimited table: branch id, point index, x, y, z per row.
void export_polylines_table(std::ostream& os, const IntersectionResult& result);
std::vector<std::vector<std::array<double, 3>>> read_polylines_table(std::istream& is);

struct PlotOptions {
  double xmin = -4, xmax = 4, ymin = -4, ymax = 4;
  int resolution = 64;  // grid cells per axis
};

// Sampled plane picture: zero-crossing points of s0, both silhouettes and
// the line, a region-membership grid, and the special points.
void emit_plot2d(std::ostream& os, const RunResult& rr, const PlotOptions& opts);

}  // namespace qsi

#endif
