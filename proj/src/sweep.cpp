#include "negmom/sweep.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

#include "negmom/density_matrix.hpp"

namespace negmom {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kSandwichTol = 1e-8;

std::string format_value(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(spec.count));

  for (int i = 0; i < spec.count; ++i) {
    SweepRow row;
    row.seed = spec.seed + static_cast<std::uint64_t>(i);
    row.kind = to_string(spec.kind);
    row.dim_a = spec.dim_a;
    row.dim_b = spec.dim_b;
    row.n_exact = kNaN;
    row.n3_lower = kNaN;
    row.nexp_lower = kNaN;
    row.n4_upper = kNaN;
    row.mu0_bound = kNaN;

    try {
      double werner_p = 1.0;
      if (spec.kind == StateKind::werner)
        werner_p = spec.count > 1 ? static_cast<double>(i) / (spec.count - 1) : 1.0;

      const auto start = std::chrono::steady_clock::now();
      const DensityMatrix state =
          gen_random_state(spec.kind, spec.dim_a, spec.dim_b, row.seed, werner_p);
      const SpectrumReport oracle = exact_spectrum_report(state);
      const MomentSequence moments = pt_moments(state, spec.max_order);

      PipelineConfig config;
      config.range = spec.range;
      config.max_order = spec.max_order;
      config.precheck_mode = spec.precheck_mode;
      config.seed = row.seed;
      const BoundReport report = run_pipeline(moments, config);
      const auto stop = std::chrono::steady_clock::now();
      row.millis =
          std::chrono::duration<double, std::milli>(stop - start).count();

      row.n_exact = oracle.negativity;
      double exp_one_norm = kNaN;
      if (report.exp_fit) {
        row.nexp_lower = report.exp_fit->negativity;
        exp_one_norm = report.exp_fit->one_norm;
      }
      double best_mu0 = kNaN;
      for (const OrderAttempt& attempt : report.orders) {
        if (attempt.bound) {
          if (attempt.order == 3) row.n3_lower = attempt.bound->negativity;
          if (attempt.order == 4) row.n4_upper = attempt.bound->negativity;
        }
        if (attempt.backstep &&
            (std::isnan(best_mu0) || attempt.backstep->mu0_bound > best_mu0))
          best_mu0 = attempt.backstep->mu0_bound;
      }
      row.mu0_bound = best_mu0;

      row.quality = std::string(report.best_lower
                                    ? to_string(report.best_lower->quality)
                                    : "none") +
                    "|" +
                    (report.best_upper ? to_string(report.best_upper->quality)
                                       : "none");

      row.sandwich_ok =
          !std::isnan(row.n3_lower) && !std::isnan(row.n4_upper) &&
          !std::isnan(row.nexp_lower) &&
          row.n3_lower <= oracle.negativity + kSandwichTol &&
          oracle.negativity <= row.n4_upper + kSandwichTol &&
          exp_one_norm <= oracle.one_norm + kSandwichTol;
    } catch (const std::exception& e) {
      row.error = e.what();
      row.quality = "error";
      row.sandwich_ok = false;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "seed,kind,dimA,dimB,N_exact,N3_lower,Nexp_lower,N4_upper,mu0_bound,"
        "sandwich_ok,quality\n";
  for (const SweepRow& row : rows) {
    os << row.seed << ',' << row.kind << ',' << row.dim_a << ',' << row.dim_b
       << ',' << format_value(row.n_exact) << ',' << format_value(row.n3_lower)
       << ',' << format_value(row.nexp_lower) << ','
       << format_value(row.n4_upper) << ',' << format_value(row.mu0_bound)
       << ',' << (row.sandwich_ok ? 1 : 0) << ',' << row.quality << '\n';
  }
  return os.str();
}

}  // namespace negmom
