// Command-line front end: estimate bounds from a moments file, run the
// exact-diagonalization oracle on a state file, sweep random ensembles, or
// study noise degradation.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "negmom/io.hpp"
#include "negmom/pipeline.hpp"
#include "negmom/sweep.hpp"

namespace {

constexpr int kExitNoFeasibleOrder = 2;
constexpr int kExitSchemaError = 3;

void write_output(const nlohmann::ordered_json& doc, const std::string& path) {
  const std::string text = doc.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

struct EstimateOptions {
  std::string input;
  std::string output;
  double range_a = -0.5;
  double range_b = 1.0;
  bool range_a_set = false;
  bool range_b_set = false;
  int max_order = 5;
  std::string precheck = "warn";
  double tol_det = 1e-10;
  double tol_root = 1e-8;
  double tol_residual = 1e-8;
};

int run_estimate(const EstimateOptions& opt) {
  negmom::MomentsInput input = negmom::read_moments_file(opt.input);

  negmom::SpectralRange range = input.range;
  if (opt.range_a_set || opt.range_b_set)
    range = negmom::SpectralRange(opt.range_a_set ? opt.range_a : input.range.a,
                                  opt.range_b_set ? opt.range_b : input.range.b);

  negmom::PipelineConfig config;
  config.range = range;
  config.max_order = opt.max_order;
  config.precheck_mode = negmom::parse_precheck_mode(opt.precheck);
  config.tol.det = opt.tol_det;
  config.tol.root = opt.tol_root;
  config.tol.residual = opt.tol_residual;

  const negmom::BoundReport report = negmom::run_pipeline(input.seq, config);
  write_output(negmom::bound_report_json(report), opt.output);
  return report.no_feasible_order ? kExitNoFeasibleOrder : 0;
}

struct OracleOptions {
  std::string state;
  std::string output;
  int max_order = 5;
};

int run_oracle(const OracleOptions& opt) {
  const negmom::DensityMatrix rho = negmom::read_state_file(opt.state);
  const negmom::SpectrumReport report = negmom::exact_spectrum_report(rho);
  const negmom::MomentSequence moments = negmom::pt_moments(rho, opt.max_order);

  nlohmann::ordered_json doc;
  doc["dim_a"] = rho.dim_a();
  doc["dim_b"] = rho.dim_b();
  doc["spectrum"] = negmom::spectrum_report_json(report);
  doc["estimate_input"] =
      negmom::moments_input_json(moments, negmom::SpectralRange{});
  write_output(doc, opt.output);
  return 0;
}

struct SweepOptions {
  std::string kind = "haar_pure";
  std::vector<int> dims = {2, 2};
  int count = 100;
  std::uint64_t seed = 0;
  int max_order = 5;
  std::string out;
};

int run_sweep_cmd(const SweepOptions& opt) {
  negmom::SweepSpec spec;
  spec.kind = negmom::parse_state_kind(opt.kind);
  spec.dim_a = opt.dims.at(0);
  spec.dim_b = opt.dims.at(1);
  spec.count = opt.count;
  spec.seed = opt.seed;
  spec.max_order = opt.max_order;

  const std::string csv = negmom::sweep_csv(negmom::run_sweep(spec));
  if (opt.out.empty()) {
    std::cout << csv;
    return 0;
  }
  std::ofstream out(opt.out);
  if (!out) throw std::runtime_error("cannot write " + opt.out);
  out << csv;
  return 0;
}

struct DegradeOptions {
  std::string input;
  std::string output;
  double sigma = 1e-3;
  int trials = 100;
  std::uint64_t seed = 0;
  int max_order = 5;
};

int run_degrade(const DegradeOptions& opt) {
  const negmom::MomentsInput input = negmom::read_moments_file(opt.input);

  negmom::PipelineConfig config;
  config.range = input.range;
  config.max_order = opt.max_order;

  nlohmann::ordered_json trials = nlohmann::ordered_json::array();
  int with_lower = 0;
  double lower_sum = 0.0;
  for (int t = 0; t < opt.trials; ++t) {
    const std::uint64_t trial_seed = opt.seed + static_cast<std::uint64_t>(t);
    const negmom::MomentSequence noisy =
        negmom::perturb(input.seq, opt.sigma, trial_seed);
    const negmom::BoundReport report = negmom::run_pipeline(noisy, config);

    nlohmann::ordered_json row;
    row["trial"] = t;
    row["seed"] = trial_seed;
    row["lower"] = report.best_lower ? nlohmann::ordered_json(report.best_lower->negativity)
                                     : nlohmann::ordered_json();
    row["upper"] = report.best_upper ? nlohmann::ordered_json(report.best_upper->negativity)
                                     : nlohmann::ordered_json();
    nlohmann::ordered_json failed = nlohmann::ordered_json::array();
    for (const negmom::DegradationEvent& ev : report.degradation_trace) {
      nlohmann::ordered_json item;
      item["order"] = ev.order;
      item["reason"] = ev.reason;
      failed.push_back(std::move(item));
    }
    row["failed_orders"] = std::move(failed);
    row["bound_crossing"] = report.bound_crossing;
    trials.push_back(std::move(row));

    if (report.best_lower) {
      ++with_lower;
      lower_sum += report.best_lower->negativity;
    }
  }

  nlohmann::ordered_json doc;
  doc["sigma"] = opt.sigma;
  doc["trials"] = opt.trials;
  doc["summary"] = {
      {"lower_bound_fraction",
       opt.trials > 0 ? static_cast<double>(with_lower) / opt.trials : 0.0},
      {"mean_lower", with_lower > 0 ? lower_sum / with_lower : 0.0}};
  doc["rows"] = std::move(trials);
  write_output(doc, opt.output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified entanglement-negativity bounds from low-order "
               "moments of the partially transposed density matrix"};
  app.require_subcommand(1);

  EstimateOptions est;
  CLI::App* estimate = app.add_subcommand(
      "estimate", "Bounds from a moments file via the degradation pipeline");
  estimate->add_option("--input", est.input, "moments JSON file")->required();
  estimate->add_option("--output", est.output, "report path (stdout if omitted)");
  estimate->add_option("--range-a", est.range_a, "lower support endpoint");
  estimate->add_option("--range-b", est.range_b, "upper support endpoint");
  estimate->add_option("--max-order", est.max_order, "highest order to attempt");
  estimate->add_option("--precheck", est.precheck, "enforce|warn|skip")
      ->check(CLI::IsMember({"enforce", "warn", "skip"}));
  estimate->add_option("--tol-det", est.tol_det, "determinant sign tolerance");
  estimate->add_option("--tol-root", est.tol_root, "root tolerance");
  estimate->add_option("--tol-residual", est.tol_residual,
                       "moment reproduction tolerance");

  OracleOptions ora;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "Exact spectrum and moments of a state file");
  oracle->add_option("--state", ora.state, "state JSON file")->required();
  oracle->add_option("--output", ora.output, "output path (stdout if omitted)");
  oracle->add_option("--max-order", ora.max_order, "moments to emit");

  SweepOptions swp;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Random-state ensemble sweep with oracle comparison");
  sweep->add_option("--kind", swp.kind,
                    "haar_pure|induced_mixed|separable_mixture|werner");
  sweep->add_option("--dims", swp.dims, "dim_a dim_b")->expected(2);
  sweep->add_option("--count", swp.count, "number of states");
  sweep->add_option("--seed", swp.seed, "base seed");
  sweep->add_option("--max-order", swp.max_order, "highest order to attempt");
  sweep->add_option("--out", swp.out, "CSV path (stdout if omitted)");

  DegradeOptions deg;
  CLI::App* degrade = app.add_subcommand(
      "degrade", "Noise-degradation trials on a moments file");
  degrade->add_option("--input", deg.input, "moments JSON file")->required();
  degrade->add_option("--output", deg.output, "output path (stdout if omitted)");
  degrade->add_option("--sigma", deg.sigma, "relative noise scale");
  degrade->add_option("--trials", deg.trials, "number of trials");
  degrade->add_option("--seed", deg.seed, "base seed");
  degrade->add_option("--max-order", deg.max_order, "highest order to attempt");

  CLI11_PARSE(app, argc, argv);

  try {
    if (estimate->parsed()) {
      est.range_a_set = estimate->count("--range-a") > 0;
      est.range_b_set = estimate->count("--range-b") > 0;
      return run_estimate(est);
    }
    if (oracle->parsed()) return run_oracle(ora);
    if (sweep->parsed()) return run_sweep_cmd(swp);
    if (degrade->parsed()) return run_degrade(deg);
  } catch (const negmom::SchemaError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitSchemaError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
