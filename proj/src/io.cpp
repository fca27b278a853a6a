#include "qsi/io.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace qsi {

namespace {

std::string fmt_double(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

}  // namespace

// ---------------- input parsing ----------------

InputDocument parse_input(std::istream& in) {
  InputDocument doc;
  int found = 0;
  std::string line;
  int lineno = 0;
  auto bad = [&](const std::string& what) {
    std::ostringstream os;
    os << "line " << lineno << ": " << what;
    throw ParseError(os.str());
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "quadric:") {
      if (found >= 2) bad("more than two quadrics");
      if (toks.size() != 11) bad("expected 10 coefficients after 'quadric:'");
      std::array<Rational, 10> c;
      for (int i = 0; i < 10; ++i) {
        try {
          c[i] = Rational(toks[i + 1]);
        } catch (const std::exception& e) {
          bad(std::string("coefficient ") + std::to_string(i + 1) + ": " + e.what());
        }
      }
      Quadric q = Quadric::from_coefficients(c);
      if (found == 0) {
        doc.first = q;
        doc.coeffs1 = c;
      } else {
        doc.second = q;
        doc.coeffs2 = c;
      }
      ++found;
    } else if (toks[0] == "matrix:") {
      if (found >= 2) bad("more than two quadrics");
      std::array<std::array<Rational, 4>, 4> m;
      for (int r = 0; r < 4; ++r) {
        if (!std::getline(in, line)) bad("matrix: unexpected end of file");
        ++lineno;
        std::vector<std::string> row = tokenize(line);
        if (row.size() != 4) bad("matrix row needs 4 entries");
        for (int cix = 0; cix < 4; ++cix) {
          try {
            m[r][cix] = Rational(row[cix]);
          } catch (const std::exception& e) {
            bad(std::string("matrix entry: ") + e.what());
          }
        }
      }
      Quadric q;
      try {
        q = Quadric(m);
      } catch (const std::exception& e) {
        bad(e.what());
      }
      if (found == 0) {
        doc.first = q;
        doc.coeffs1 = q.coefficients();
      } else {
        doc.second = q;
        doc.coeffs2 = q.coefficients();
      }
      ++found;
    } else {
      bad("unrecognized directive '" + toks[0] + "'");
    }
  }
  if (found != 2) throw ParseError("input must contain exactly two quadrics, found " +
                                   std::to_string(found));
  return doc;
}

InputDocument parse_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file '" + path + "'");
  return parse_input(in);
}

// ---------------- mixed-pair tracing ----------------

namespace {

// discretization of the (2,1) projection: lift z = -q0/q1 off the q1 = 0
// locus, quadratic formula on f where q1 = q0 = 0
IntersectionResult assemble_mixed(const MixedZPair& mp, const MixedProjection& proj,
                                  const NormalizedScene& scene, const TraceOptions& opts) {
  IntersectionResult res;
  if (proj.s0.is_zero()) {
    res.shared_component = true;
    return res;
  }
  BiPoly s_sf = bivariate_squarefree(proj.s0);
  UniPoly contx = s_sf.content_x();
  if (contx.degree() > 0) s_sf = s_sf.divide_by_unipoly_x(contx);
  if (s_sf.degree_y() < 1) {
    res.empty_intersection = true;
    return res;
  }

  // critical x values: curve extremes, leading-coefficient drops, boundary
  // points with delta1 = 0 and crossings of q1 = 0
  std::vector<AlgebraicNumber> crit;
  auto add_roots = [&](const UniPoly& p) {
    if (!p.is_zero() && p.degree() >= 1)
      for (const AlgebraicNumber& t : isolate_real_roots(p)) crit.push_back(t);
  };
  add_roots(subresultant_in_y(s_sf, s_sf.deriv_y(), 0)[0]);
  add_roots(s_sf.coeff_of_y(s_sf.degree_y()));
  add_roots(contx);
  for (const BiPoly* other : {&proj.delta1, &proj.q1}) {
    if (other->is_zero() || other->is_constant()) continue;
    ConicSystemSolution sol = solve_conic_system(s_sf, *other);
    if (!sol.shared_component)
      for (const auto& pt : sol.points) crit.push_back(pt.x_algebraic());
  }
  std::sort(crit.begin(), crit.end(), [](const AlgebraicNumber& u, const AlgebraicNumber& v) {
    return AlgebraicNumber::compare(u, v) < 0;
  });
  crit.erase(std::unique(crit.begin(), crit.end(),
                         [](const AlgebraicNumber& u, const AlgebraicNumber& v) {
                           return AlgebraicNumber::compare(u, v) == 0;
                         }),
             crit.end());

  std::vector<std::pair<Rational, Rational>> gaps;
  if (crit.empty()) {
    Rational wnd(static_cast<long>(opts.window_halfwidth));
    gaps.push_back({-wnd, wnd});
  } else {
    for (auto& cx : crit) cx.refine_to(Rational(1, 1048576));
    for (size_t i = 0; i + 1 < crit.size(); ++i)
      while (!(crit[i].upper() <= crit[i + 1].lower())) {
        crit[i].refine_to((crit[i].upper() - crit[i].lower()) * Rational(1, 2));
        crit[i + 1].refine_to((crit[i + 1].upper() - crit[i + 1].lower()) * Rational(1, 2));
      }
    Rational span = crit.back().upper() - crit.front().lower();
    Rational pad = std::max(Rational(1), span * Rational(1, 4));
    gaps.push_back({crit.front().lower() - pad, crit.front().lower()});
    for (size_t i = 0; i + 1 < crit.size(); ++i)
      gaps.push_back({crit[i].upper(), crit[i + 1].lower()});
    gaps.push_back({crit.back().upper(), crit.back().upper() + pad});
  }

  const Rational kWidth(1, 1000000000000L);
  for (const auto& [glo, ghi] : gaps) {
    if (!(glo < ghi)) continue;
    int k = std::max(2, opts.samples_per_interval);
    Rational step = (ghi - glo) / Rational(static_cast<long>(k + 1));
    std::vector<Polyline3> lines;
    int expected = -1;
    bool consistent = true;
    std::vector<std::vector<std::array<double, 3>>> cols;
    for (int j = 1; j <= k && consistent; ++j) {
      Rational alpha = glo + step * Rational(static_cast<long>(j));
      UniPoly py = s_sf.subst_x(alpha);
      std::vector<std::array<double, 3>> col;
      if (!py.is_zero() && py.degree() >= 1) {
        UniPoly d1y = proj.delta1.subst_x(alpha);
        UniPoly q1y = proj.q1.subst_x(alpha);
        UniPoly q0y = proj.q0.subst_x(alpha);
        for (const AlgebraicNumber& y : isolate_real_roots(py)) {
          if (y.sign_of(d1y) < 0) continue;
          int sq1 = q1y.is_zero() ? 0 : y.sign_of(q1y);
          if (sq1 != 0) {
            // z = -q0/q1, via refinement
            Rational pw = kWidth;
            for (int iter = 0; iter < 60; ++iter) {
              y.refine_to(pw);
              RatInterval I = y.interval();
              RatInterval D = eval_interval(q1y, I);
              if (!D.contains_zero()) {
                RatInterval Z = -(eval_interval(q0y, I) / D);
                col.push_back({alpha.to_double(), y.approx(), Z.mid_double()});
                break;
              }
              pw = pw * Rational(1, 16);
            }
          } else {
            if (y.sign_of(q0y) != 0) continue;  // spurious resultant root
            // quadratic on f
            y.refine_to(kWidth);
            RatInterval I = y.interval();
            double p1v = eval_interval(mp.p1.subst_x(alpha), I).mid_double();
            double dd = eval_interval(proj.delta1.subst_x(alpha), I).mid_double();
            if (dd < 0) dd = 0;
            col.push_back({alpha.to_double(), y.approx(), (-p1v - std::sqrt(dd)) / 2});
            col.push_back({alpha.to_double(), y.approx(), (-p1v + std::sqrt(dd)) / 2});
          }
        }
      }
      if (expected < 0) {
        expected = static_cast<int>(col.size());
        lines.resize(col.size());
      } else if (static_cast<int>(col.size()) != expected) {
        consistent = false;
        break;
      }
      cols.push_back(std::move(col));
    }
    if (!consistent)
      throw InternalInconsistencyError("mixed trace: branch count changed inside an interval");
    for (const auto& col : cols)
      for (size_t s = 0; s < col.size(); ++s) lines[s].pts.push_back(col[s]);
    for (Polyline3& pl : lines) {
      if (pl.pts.size() < 2) continue;
      CurveBranch br;
      br.kind = CurveBranch::Kind::Polyline;
      br.polyline = std::move(pl);
      res.branches.push_back(std::move(br));
    }
  }

  if (!scene.to_original.is_identity())
    for (CurveBranch& br : res.branches)
      for (auto& q : br.polyline.pts) q = scene.to_original.apply(q);
  res.empty_intersection = res.branches.empty();
  return res;
}

}  // namespace

// ---------------- pipeline ----------------

RunResult run(const InputDocument& input, const RunOptions& options) {
  auto t0 = std::chrono::steady_clock::now();
  RunResult rr;
  rr.input = input;
  rr.options = options;
  rr.scene = normalize(input.first, input.second, !options.no_transform);
  if (rr.scene.is_mixed()) {
    rr.mixed = true;
    rr.mixed_projection = project_mixed(rr.scene.mixed());
    rr.result =
        assemble_mixed(rr.scene.mixed(), *rr.mixed_projection, rr.scene, options.assemble.trace);
  } else {
    rr.analysis = analyze_cutcurve(rr.scene.monic());
    rr.result = assemble(*rr.analysis, rr.scene.monic(), rr.scene, options.assemble);
  }
  if (Quadric::proportional(input.first, input.second)) rr.result.identical_quadrics = true;
  auto t1 = std::chrono::steady_clock::now();
  rr.timing_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return rr;
}

// ---------------- output document ----------------

namespace {

std::string point2_str(const AlgebraicPoint2D& pt) {
  std::ostringstream os;
  auto xc = pt.x_closed();
  auto yc = pt.y_closed();
  os << "x=";
  if (xc)
    os << xc->to_string();
  else
    os << "~" << fmt_double(pt.x_approx());
  os << " y=";
  if (yc)
    os << yc->to_string();
  else
    os << "~" << fmt_double(pt.y_approx());
  return os.str();
}

const char* kind_str(SingularKind k) {
  switch (k) {
    case SingularKind::OnLine: return "on-line";
    case SingularKind::Tangential: return "tangential";
    case SingularKind::RegionVertex: return "region-vertex";
  }
  return "?";
}

const char* side_str(RegionSide s) {
  switch (s) {
    case RegionSide::Inside: return "inside";
    case RegionSide::Boundary: return "boundary";
    case RegionSide::Outside: return "outside";
  }
  return "?";
}

const char* source_str(LiftSource s) {
  switch (s) {
    case LiftSource::S1Formula: return "s1-formula";
    case LiftSource::QuadraticOnF: return "quadratic-on-f";
    case LiftSource::QuadraticOnG: return "quadratic-on-g";
  }
  return "?";
}

void write_branches(std::ostream& os, const IntersectionResult& result) {
  os << "[branches] count: " << result.branches.size()
     << " path: " << (result.parameterized ? "parameterized" : "discretized") << "\n";
  int bid = 0;
  for (const CurveBranch& br : result.branches) {
    ++bid;
    if (br.kind == CurveBranch::Kind::Parameterized) {
      os << "branch " << bid << ": parameterized" << (br.param.on_line ? " on-line" : "") << "\n";
      os << "  y(x) = " << br.param.y.to_string() << "\n";
      if (std::holds_alternative<RadicalExpr1D>(br.param.z))
        os << "  z(x) = " << std::get<RadicalExpr1D>(br.param.z).to_string() << "\n";
      else
        os << "  z(x,y) = " << std::get<ZQuadraticForm>(br.param.z).to_string() << "\n";
      os << "  domain:";
      for (const XInterval& iv : br.param.domain) os << " " << iv.to_string();
      os << "\n";
    } else {
      os << "branch " << bid << ": polyline n=" << br.polyline.pts.size();
      if (!br.polyline.start_anchor.empty()) os << " start=" << br.polyline.start_anchor;
      if (!br.polyline.end_anchor.empty()) os << " end=" << br.polyline.end_anchor;
      os << "\n";
      for (const auto& q : br.polyline.pts)
        os << "  " << fmt_double(q[0]) << " " << fmt_double(q[1]) << " " << fmt_double(q[2])
           << "\n";
    }
  }
}

}  // namespace

void write_output_document(std::ostream& os, const RunResult& rr, bool include_timing) {
  os << "qsi-result v1\n";
  os << "precision: 1e-" << rr.options.precision_digits << "\n";
  os << "[input]\n";
  auto write_coeffs = [&](const char* tag, const std::array<Rational, 10>& c) {
    os << tag << ":";
    for (const Rational& r : c) os << " " << r.to_string();
    os << "\n";
  };
  write_coeffs("quadric1", rr.input.coeffs1);
  write_coeffs("quadric2", rr.input.coeffs2);

  os << "[normalization]\n";
  os << "transform: " << rr.scene.to_original.to_string() << "\n";
  os << "scale1: " << rr.scene.scale1.to_string() << "\n";
  os << "scale2: " << rr.scene.scale2.to_string() << "\n";
  if (rr.mixed) {
    const MixedZPair& mp = rr.scene.mixed();
    os << "form: mixed (2,1)\n";
    os << "p1: " << mp.p1.to_string() << "\n";
    os << "p0: " << mp.p0.to_string() << "\n";
    os << "q1: " << mp.q1.to_string() << "\n";
    os << "q0: " << mp.q0.to_string() << "\n";
  } else {
    const MonicZPair& pr = rr.scene.monic();
    os << "form: monic (2,2)\n";
    os << "p1: " << pr.p1.to_string() << "\n";
    os << "p0: " << pr.p0.to_string() << "\n";
    os << "q1: " << pr.q1.to_string() << "\n";
    os << "q0: " << pr.q0.to_string() << "\n";
  }

  os << "[cutcurve]\n";
  if (rr.mixed) {
    const MixedProjection& proj = *rr.mixed_projection;
    os << "s0: " << proj.s0.to_string() << "\n";
    os << "delta1: " << proj.delta1.to_string() << "\n";
    os << "pieces: {s0=0, delta1>=0, q1!=0} + {s0=0, delta1>=0, q1=0, q0=0}\n";
    if (proj.q1_vanishes_identically) os << "flags: planar-section\n";
  } else {
    const CutcurveAnalysis& an = *rr.analysis;
    os << "s0: " << an.bundle.s0.to_string() << "\n";
    if (!an.bundle.degenerate)
      os << "s0_squarefree: " << an.bundle.s0_squarefree.to_string() << "\n";
    os << "delta1: " << an.bundle.delta1.to_string() << "\n";
    os << "delta2: " << an.bundle.delta2.to_string() << "\n";
    os << "line: " << an.bundle.line.to_string() << "\n";
    std::vector<std::string> flags;
    if (rr.result.identical_quadrics) flags.push_back("identical-quadrics");
    if (an.degenerate_shared_z) flags.push_back("shared-component");
    if (an.p1_equals_q1) flags.push_back("conic-cutcurve");
    if (an.line_in_cutcurve) flags.push_back("line-in-cutcurve");
    if (an.silhouette_degenerate) flags.push_back("silhouette-degenerate");
    if (rr.result.empty_intersection) flags.push_back("empty-intersection");
    os << "flags:";
    for (const auto& f : flags) os << " " << f;
    os << "\n";
    if (an.line_in_cutcurve)
      os << "line_residual: " << an.line_residual.to_string()
         << " multiplicity: " << an.line_multiplicity << "\n";

    os << "[singular-points] count: " << an.singular_points.size() << "\n";
    int si = 0;
    for (const SingularPoint& sp : an.singular_points) {
      ++si;
      os << "S" << si << ": kind=" << kind_str(sp.kind) << " region=" << side_str(sp.side) << " "
         << point2_str(sp.location);
      os << " lift=" << (sp.lift == LiftStrategy::QuadraticFormula ? "quadratic-formula"
                                                                   : "s1-formula");
      os << "\n";
    }
    os << "[boundary-points] count: " << an.boundary_points.size() << "\n";
    int bi = 0;
    for (const BoundaryPoint& bp : an.boundary_points) {
      ++bi;
      os << "B" << bi << ": silhouette=" << bp.silhouette
         << " vertex=" << (bp.region_vertex ? "yes" : "no") << " " << point2_str(bp.location)
         << "\n";
    }
  }

  write_branches(os, rr.result);

  os << "[lifted-points]\n";
  os << "singular:";
  for (const LiftedPoint& lp : rr.result.singular_lifted)
    os << " (" << fmt_double(lp.p[0]) << ", " << fmt_double(lp.p[1]) << ", " << fmt_double(lp.p[2])
       << " " << lp.label << " " << source_str(lp.source) << " m=" << lp.multiplicity
       << (lp.exact ? " exact" : "") << ")";
  os << "\n";
  os << "isolated:";
  for (const LiftedPoint& lp : rr.result.isolated_points)
    os << " (" << fmt_double(lp.p[0]) << ", " << fmt_double(lp.p[1]) << ", " << fmt_double(lp.p[2])
       << " " << lp.label << ")";
  os << "\n";
  os << "[summary]\n";
  os << "empty-intersection: " << (rr.result.empty_intersection ? "yes" : "no") << "\n";
  os << "status: ok\n";
  if (include_timing) os << "timing-ms: " << rr.timing_ms << "\n";
}

// ---------------- json ----------------

void write_json(std::ostream& os, const RunResult& rr) {
  nlohmann::json j;
  j["schema"] = "qsi-result-v1";
  auto coeffs = [&](const std::array<Rational, 10>& c) {
    std::vector<std::string> v;
    for (const auto& r : c) v.push_back(r.to_string());
    return v;
  };
  j["input"]["quadric1"] = coeffs(rr.input.coeffs1);
  j["input"]["quadric2"] = coeffs(rr.input.coeffs2);
  j["normalization"]["transform"] = rr.scene.to_original.to_string();
  j["mixed"] = rr.mixed;
  if (rr.analysis) {
    const CutcurveAnalysis& an = *rr.analysis;
    j["cutcurve"]["s0"] = an.bundle.s0.to_string();
    j["cutcurve"]["delta1"] = an.bundle.delta1.to_string();
    j["cutcurve"]["delta2"] = an.bundle.delta2.to_string();
    j["cutcurve"]["line"] = an.bundle.line.to_string();
    j["cutcurve"]["line_in_cutcurve"] = an.line_in_cutcurve;
    j["cutcurve"]["conic_cutcurve"] = an.p1_equals_q1;
    auto& sing = j["singular_points"] = nlohmann::json::array();
    for (const SingularPoint& sp : an.singular_points) {
      nlohmann::json e;
      e["kind"] = kind_str(sp.kind);
      e["region"] = side_str(sp.side);
      e["x"] = sp.location.x_approx();
      e["y"] = sp.location.y_approx();
      auto xc = sp.location.x_closed(), yc = sp.location.y_closed();
      if (xc) e["x_exact"] = xc->to_string();
      if (yc) e["y_exact"] = yc->to_string();
      sing.push_back(e);
    }
    auto& bnd = j["boundary_points"] = nlohmann::json::array();
    for (const BoundaryPoint& bp : an.boundary_points) {
      nlohmann::json e;
      e["silhouette"] = bp.silhouette;
      e["vertex"] = bp.region_vertex;
      e["x"] = bp.location.x_approx();
      e["y"] = bp.location.y_approx();
      bnd.push_back(e);
    }
  }
  j["parameterized"] = rr.result.parameterized;
  auto& branches = j["branches"] = nlohmann::json::array();
  for (const CurveBranch& br : rr.result.branches) {
    nlohmann::json e;
    if (br.kind == CurveBranch::Kind::Parameterized) {
      e["kind"] = "parameterized";
      e["y"] = br.param.y.to_string();
      if (std::holds_alternative<RadicalExpr1D>(br.param.z))
        e["z"] = std::get<RadicalExpr1D>(br.param.z).to_string();
      else
        e["z"] = std::get<ZQuadraticForm>(br.param.z).to_string();
      std::vector<std::string> dom;
      for (const XInterval& iv : br.param.domain) dom.push_back(iv.to_string());
      e["domain"] = dom;
    } else {
      e["kind"] = "polyline";
      auto& pts = e["points"] = nlohmann::json::array();
      for (const auto& q : br.polyline.pts) pts.push_back({q[0], q[1], q[2]});
      if (!br.polyline.start_anchor.empty()) e["start_anchor"] = br.polyline.start_anchor;
      if (!br.polyline.end_anchor.empty()) e["end_anchor"] = br.polyline.end_anchor;
    }
    branches.push_back(e);
  }
  auto points_json = [&](const std::vector<LiftedPoint>& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const LiftedPoint& lp : v) {
      nlohmann::json e;
      e["p"] = {lp.p[0], lp.p[1], lp.p[2]};
      e["source"] = source_str(lp.source);
      e["multiplicity"] = lp.multiplicity;
      e["exact"] = lp.exact;
      e["label"] = lp.label;
      arr.push_back(e);
    }
    return arr;
  };
  j["singular_lifted"] = points_json(rr.result.singular_lifted);
  j["isolated_points"] = points_json(rr.result.isolated_points);
  j["flags"]["identical_quadrics"] = rr.result.identical_quadrics;
  j["flags"]["shared_component"] = rr.result.shared_component;
  j["flags"]["empty_intersection"] = rr.result.empty_intersection;
  os << j.dump(2) << "\n";
}

// ---------------- exports ----------------

void export_polylines_obj(std::ostream& os, const IntersectionResult& result) {
  os << "# qsi polyline export\n";
  int vbase = 1;
  int bid = 0;
  for (const CurveBranch& br : result.branches) {
    if (br.kind != CurveBranch::Kind::Polyline) continue;
    ++bid;
    os << "o branch_" << bid << "\n";
    for (const auto& q : br.polyline.pts)
      os << "v " << fmt_double(q[0]) << " " << fmt_double(q[1]) << " " << fmt_double(q[2]) << "\n";
    os << "l";
    for (size_t i = 0; i < br.polyline.pts.size(); ++i) os << " " << (vbase + i);
    os << "\n";
    vbase += static_cast<int>(br.polyline.pts.size());
  }
  int pid = 0;
  for (const LiftedPoint& lp : result.isolated_points) {
    ++pid;
    os << "o isolated_" << pid << "\n";
    os << "v " << fmt_double(lp.p[0]) << " " << fmt_double(lp.p[1]) << " " << fmt_double(lp.p[2])
       << "\n";
    os << "p " << vbase << "\n";
    ++vbase;
  }
}

void export_polylines_table(std::ostream& os, const IntersectionResult& result) {
  os << "# qsi-points v1\n# branch index x y z\n";
  int bid = 0;
  for (const CurveBranch& br : result.branches) {
    if (br.kind != CurveBranch::Kind::Polyline) continue;
    int idx = 0;
    for (const auto& q : br.polyline.pts)
      os << bid << " " << idx++ << " " << fmt_double(q[0]) << " " << fmt_double(q[1]) << " "
         << fmt_double(q[2]) << "\n";
    ++bid;
  }
}

std::vector<std::vector<std::array<double, 3>>> read_polylines_table(std::istream& is) {
  std::vector<std::vector<std::array<double, 3>>> out;
  std::string line;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    int branch, idx;
    double x, y, z;
    if (ls >> branch >> idx >> x >> y >> z) {
      if (static_cast<int>(out.size()) <= branch) out.resize(branch + 1);
      out[branch].push_back({x, y, z});
    }
  }
  return out;
}

void emit_plot2d(std::ostream& os, const RunResult& rr, const PlotOptions& opts) {
  if (opts.xmax <= opts.xmin || opts.ymax <= opts.ymin)
    throw std::invalid_argument("emit_plot2d: empty bounds");
  int n = std::max(1, opts.resolution);
  os << "qsi-plot2d v1\n";
  os << "bounds: " << fmt_double(opts.xmin) << " " << fmt_double(opts.xmax) << " "
     << fmt_double(opts.ymin) << " " << fmt_double(opts.ymax) << "\n";
  os << "resolution: " << n << "\n";

  BiPoly s0, d1, d2, linep;
  if (rr.mixed) {
    s0 = rr.mixed_projection->s0;
    d1 = rr.mixed_projection->delta1;
  } else {
    s0 = rr.analysis->bundle.s0;
    d1 = rr.analysis->bundle.delta1;
    d2 = rr.analysis->bundle.delta2;
    linep = rr.analysis->bundle.line;
  }

  double dx = (opts.xmax - opts.xmin) / n, dy = (opts.ymax - opts.ymin) / n;
  auto crossings = [&](const BiPoly& p, const char* name) {
    if (p.is_zero()) return;
    os << "[curve " << name << "]\n";
    // zero crossings along grid edges, linear interpolation
    std::vector<std::vector<double>> vals(n + 1, std::vector<double>(n + 1));
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j)
        vals[i][j] = p.eval_double(opts.xmin + i * dx, opts.ymin + j * dy);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        double x0 = opts.xmin + i * dx, y0 = opts.ymin + j * dy;
        if (i < n) {
          double a = vals[i][j], b = vals[i + 1][j];
          if ((a <= 0 && b > 0) || (a >= 0 && b < 0)) {
            double t = a / (a - b);
            os << fmt_double(x0 + t * dx) << " " << fmt_double(y0) << "\n";
          }
        }
        if (j < n) {
          double a = vals[i][j], b = vals[i][j + 1];
          if ((a <= 0 && b > 0) || (a >= 0 && b < 0)) {
            double t = a / (a - b);
            os << fmt_double(x0) << " " << fmt_double(y0 + t * dy) << "\n";
          }
        }
      }
  };
  crossings(s0, "s0");
  crossings(d1, "delta1");
  crossings(d2, "delta2");
  crossings(linep, "line");

  os << "[region-grid]\n";
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      double x = opts.xmin + i * dx, y = opts.ymin + j * dy;
      bool in = d1.is_zero() || d1.eval_double(x, y) >= 0;
      if (!d2.is_zero()) in = in && d2.eval_double(x, y) >= 0;
      os << fmt_double(x) << " " << fmt_double(y) << " " << (in ? 1 : 0) << "\n";
    }

  os << "[points]\n";
  if (rr.analysis) {
    int si = 0;
    for (const SingularPoint& sp : rr.analysis->singular_points)
      os << "S" << ++si << " " << fmt_double(sp.location.x_approx()) << " "
         << fmt_double(sp.location.y_approx()) << " " << kind_str(sp.kind) << "\n";
    int bi = 0;
    for (const BoundaryPoint& bp : rr.analysis->boundary_points)
      os << "B" << ++bi << " " << fmt_double(bp.location.x_approx()) << " "
         << fmt_double(bp.location.y_approx()) << " silhouette-" << bp.silhouette << "\n";
  }
}

}  // namespace qsi
