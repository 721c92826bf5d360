#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "isoperilab/cone.hpp"
#include "isoperilab/errors.hpp"
#include "isoperilab/families.hpp"
#include "isoperilab/functionals.hpp"
#include "isoperilab/json_io.hpp"
#include "isoperilab/optimizer.hpp"
#include "isoperilab/verification.hpp"

namespace {

using namespace isoperilab;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text << std::endl;
  else
    write_text_file(out_path, text);
}

int run(int argc, char** argv) {
  CLI::App app{"isoperilab: planar convex-geometry laboratory"};
  app.require_subcommand(1);

  std::string in_path, out_path, trace_path, csv_path;
  std::string format = "json";
  double radius = 1.0;
  std::uint64_t seed = 1;

  auto* eval_cmd = app.add_subcommand("eval", "Functional report for a polygon JSON file");
  eval_cmd->add_option("--in", in_path, "polygon JSON file")->required();
  eval_cmd->add_option("--out", out_path, "output file (default: stdout)");
  bool skip_fraenkel = false;
  eval_cmd->add_flag("--skip-fraenkel", skip_fraenkel, "omit the Fraenkel asymmetry");

  auto* cone_cmd = app.add_subcommand("cone-check", "Interior-cone report for (polygon, R)");
  cone_cmd->add_option("--in", in_path, "polygon JSON file")->required();
  cone_cmd->add_option("--radius", radius, "class parameter R")->capture_default_str();
  cone_cmd->add_option("--out", out_path, "output file (default: stdout)");
  int edge_samples = 64;
  cone_cmd->add_option("--edge-samples", edge_samples, "diagnostic samples per edge")
      ->capture_default_str();

  auto* scan_cmd = app.add_subcommand("rect-scan", "Closed form a(l) vs pipeline table");
  std::vector<double> grid{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8};
  scan_cmd->add_option("--grid", grid, "rectangle parameters l")->delimiter(',');
  scan_cmd->add_option("--format", format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  scan_cmd->add_option("--out", out_path, "output file (default: stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Inequality checks on a generated corpus");
  std::size_t count = 200;
  double delta = 0.1;
  verify_cmd->add_option("--count", count, "corpus size")->capture_default_str();
  verify_cmd->add_option("--seed", seed, "base seed")->capture_default_str();
  verify_cmd->add_option("--radius", radius, "class parameter R")->capture_default_str();
  verify_cmd->add_option("--delta", delta, "deficit cutoff for the bound constant")
      ->capture_default_str();
  verify_cmd->add_option("--out", out_path, "BoundReport JSON file (default: stdout)");
  verify_cmd->add_option("--csv", csv_path, "also write per-body rows as CSV");

  auto* opt_cmd = app.add_subcommand("optimize", "Annealing search for low F in the class");
  OptConfig cfg;
  opt_cmd->add_option("--radius", cfg.R, "class parameter R")->capture_default_str();
  opt_cmd->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  opt_cmd->add_option("--iterations", cfg.iterations, "iterations per restart")
      ->capture_default_str();
  opt_cmd->add_option("--vertices", cfg.n_vertices, "vertex budget")->capture_default_str();
  opt_cmd->add_option("--restarts", cfg.restarts, "independent chains")->capture_default_str();
  opt_cmd->add_option("--t0", cfg.t0, "initial temperature")->capture_default_str();
  opt_cmd->add_option("--gamma", cfg.gamma, "temperature decay")->capture_default_str();
  opt_cmd->add_option("--sigma", cfg.sigma, "move scale (fraction of sqrt(pi))")
      ->capture_default_str();
  opt_cmd->add_flag("--rectangle-only", cfg.rectangle_only,
                    "restrict the search to the rectangle family");
  opt_cmd->add_option("--out", out_path, "OptResult JSON file (default: stdout)");
  opt_cmd->add_option("--trace", trace_path, "write the improvement trace as CSV");

  auto* gen_cmd = app.add_subcommand("gen", "Emit a family shape as polygon JSON");
  std::string family;
  double l = 0.5, amplitude = 0.05;
  int n = 64, m = 8;
  gen_cmd
      ->add_option("--family", family,
                   "rectangle | ngon | perturbed-disk | random-body | random-hull")
      ->required()
      ->check(CLI::IsMember({"rectangle", "ngon", "perturbed-disk", "random-body", "random-hull"}));
  gen_cmd->add_option("--l", l, "rectangle parameter")->capture_default_str();
  gen_cmd->add_option("--n", n, "vertex count")->capture_default_str();
  gen_cmd->add_option("--amplitude", amplitude, "radial perturbation")->capture_default_str();
  gen_cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();
  gen_cmd->add_option("--m", m, "point draws for random families")->capture_default_str();
  gen_cmd->add_option("--radius", radius, "class parameter for random-body")
      ->capture_default_str();
  gen_cmd->add_option("--out", out_path, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }

  if (eval_cmd->parsed()) {
    const ConvexPolygon p = load_polygon(in_path);
    emit(functional_report_to_json(shape_functional(p, {}, {}, !skip_fraenkel)), out_path);
    return 0;
  }
  if (cone_cmd->parsed()) {
    const ConvexPolygon p = load_polygon(in_path);
    ClassSpec spec;
    spec.R = radius;
    spec.edge_samples = edge_samples;
    emit(cone_report_to_json(cone_condition(p, spec, {}, true)), out_path);
    return 0;
  }
  if (scan_cmd->parsed()) {
    const RectScanTable table = rect_scan(grid);
    emit(format == "csv" ? rect_scan_to_csv(table) : rect_scan_to_json(table), out_path);
    return 0;
  }
  if (verify_cmd->parsed()) {
    const auto corpus = mixed_corpus(count, seed);
    const BoundReport rep = estimate_bound_constant(corpus, delta, radius);
    if (!csv_path.empty()) write_text_file(csv_path, corpus_to_csv(evaluate_corpus(corpus, radius)));
    emit(bound_report_to_json(rep), out_path);
    return rep.violations > 0 ? 1 : 0;
  }
  if (opt_cmd->parsed()) {
    const OptResult res = minimize_functional(cfg);
    if (!trace_path.empty()) write_text_file(trace_path, trace_to_csv(res.trace));
    emit(opt_result_to_json(res), out_path);
    return 0;
  }
  if (gen_cmd->parsed()) {
    ConvexPolygon shape = [&] {
      if (family == "rectangle") return rectangle(l);
      if (family == "ngon") return regular_ngon(n);
      if (family == "perturbed-disk") return perturbed_disk(n, amplitude, seed);
      if (family == "random-body") return random_convex_body(seed, m, radius);
      return random_hull(seed, m);
    }();
    emit(polygon_to_json(shape), out_path);
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const isoperilab::Error& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
}
