// Command-line front end: reads a two-quadric input file, runs the
// projection/lifting pipeline and writes the requested outputs.

#include <cmath>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "qsi/io.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitInternal = 4;

std::ofstream open_or_die(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open output file '" + path + "'");
  return os;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"intersection curve of two quadric surfaces via projection and lifting"};
  std::string input_path, mesh_path, plot_path, json_path, out_path;
  int samples = 20;
  int precision = 12;
  bool force_param = false, force_disc = false, no_transform = false, no_timing = false;
  std::vector<double> plot_bounds;
  int plot_resolution = 64;

  app.add_option("input", input_path, "input file with two quadrics")->required();
  app.add_option("--samples", samples, "points per interval when discretizing")
      ->check(CLI::PositiveNumber);
  app.add_option("--precision", precision, "refinement width 10^-digits for numeric output")
      ->check(CLI::Range(3, 40));
  app.add_flag("--parameterize", force_param, "force the closed-form path");
  app.add_flag("--discretize", force_disc, "force the discretization path");
  app.add_option("--mesh", mesh_path, "write branches as a Wavefront OBJ polyline mesh");
  app.add_option("--plot2d", plot_path, "write a 2D plane picture (curves, region, points)");
  app.add_option("--json", json_path, "write the result as JSON");
  app.add_option("--output", out_path, "write the result document here instead of stdout");
  app.add_flag("--no-transform", no_transform,
               "never change coordinates; a (2,1) pair takes the mixed path");
  app.add_flag("--no-timing", no_timing, "omit the timing line (byte-identical reruns)");
  app.add_option("--plot-bounds", plot_bounds, "plot window: xmin xmax ymin ymax")->expected(4);
  app.add_option("--plot-resolution", plot_resolution, "plot grid cells per axis")
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);
  if (force_param && force_disc) {
    std::cerr << "error: --parameterize and --discretize are mutually exclusive\n";
    return 1;
  }

  try {
    qsi::InputDocument doc = qsi::parse_input_file(input_path);
    qsi::RunOptions opts;
    opts.assemble.trace.samples_per_interval = samples;
    opts.assemble.trace.precision = std::pow(10.0, -precision);
    opts.precision_digits = precision;
    opts.no_transform = no_transform;
    if (force_param) opts.assemble.path = qsi::AssembleOptions::Path::Parameterize;
    if (force_disc) opts.assemble.path = qsi::AssembleOptions::Path::Discretize;

    qsi::RunResult rr = qsi::run(doc, opts);

    if (!out_path.empty()) {
      auto os = open_or_die(out_path);
      qsi::write_output_document(os, rr, !no_timing);
    } else {
      qsi::write_output_document(std::cout, rr, !no_timing);
    }
    if (!json_path.empty()) {
      auto os = open_or_die(json_path);
      qsi::write_json(os, rr);
    }
    if (!mesh_path.empty()) {
      const qsi::IntersectionResult* to_export = &rr.result;
      qsi::IntersectionResult discretized;
      if (rr.result.parameterized && rr.analysis) {
        std::cerr << "note: result is parameterized; discretizing with default sampling for the "
                     "mesh export\n";
        qsi::AssembleOptions dopts = opts.assemble;
        dopts.path = qsi::AssembleOptions::Path::Discretize;
        discretized = qsi::assemble(*rr.analysis, rr.scene.monic(), rr.scene, dopts);
        to_export = &discretized;
      }
      auto os = open_or_die(mesh_path);
      qsi::export_polylines_obj(os, *to_export);
    }
    if (!plot_path.empty()) {
      qsi::PlotOptions popts;
      if (plot_bounds.size() == 4) {
        popts.xmin = plot_bounds[0];
        popts.xmax = plot_bounds[1];
        popts.ymin = plot_bounds[2];
        popts.ymax = plot_bounds[3];
      }
      popts.resolution = plot_resolution;
      auto os = open_or_die(plot_path);
      qsi::emit_plot2d(os, rr, popts);
    }
    return 0;
  } catch (const qsi::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const qsi::UnsupportedCaseError& e) {
    std::cerr << "unsupported case: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const qsi::InternalInconsistencyError& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
