#include "negmom/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "negmom/errors.hpp"

namespace negmom {

namespace {

constexpr double kValidateTol = 1e-6;

bool residuals_certified(const PrincipalRepresentation& rep,
                         const MomentSequence& seq,
                         const std::optional<double>& mu0_stderr,
                         double tol_residual) {
  const std::vector<double> e = seq.extended();
  for (std::size_t j = 0; j < rep.residuals.size(); ++j) {
    double allowed = tol_residual * std::max(1.0, std::abs(e[j]));
    if (j == 0) {
      if (mu0_stderr) allowed += 5.0 * *mu0_stderr;
    } else {
      allowed += 5.0 * seq.std_error(static_cast<int>(j));
    }
    if (std::abs(rep.residuals[j]) > allowed) return false;
  }
  return true;
}

}  // namespace

PrecheckMode parse_precheck_mode(const std::string& name) {
  if (name == "enforce") return PrecheckMode::enforce;
  if (name == "warn") return PrecheckMode::warn;
  if (name == "skip") return PrecheckMode::skip;
  throw std::invalid_argument("unknown precheck mode: " + name);
}

const char* to_string(PrecheckMode mode) {
  switch (mode) {
    case PrecheckMode::enforce: return "enforce";
    case PrecheckMode::warn: return "warn";
    case PrecheckMode::skip: return "skip";
  }
  return "?";
}

BoundReport run_pipeline(const MomentSequence& seq, const PipelineConfig& config) {
  if (config.max_order < 3)
    throw std::invalid_argument("pipeline needs max_order >= 3");
  if (!(config.tol.det > 0.0) || !(config.tol.root > 0.0) ||
      !(config.tol.residual > 0.0))
    throw std::invalid_argument("tolerances must be positive");

  BoundReport report;
  report.findings = validate(seq, config.range, kValidateTol);

  const int top = std::min(config.max_order, seq.max_order());

  for (int order = top; order >= 3; --order) {
    OrderAttempt attempt;
    attempt.order = order;
    const MomentSequence sub = truncate(seq, order);

    if (config.precheck_mode != PrecheckMode::skip) {
      attempt.precheck =
          classify(sub, config.range, config.tol.det, ClassifyMode::shifted_precheck);
      if (attempt.precheck->verdict == Verdict::infeasible) {
        if (config.precheck_mode == PrecheckMode::enforce) {
          attempt.failure = "Infeasible: shifted pre-check failed under enforce";
          report.degradation_trace.push_back({order, *attempt.failure});
          report.orders.push_back(std::move(attempt));
          continue;
        }
        attempt.notes.push_back(
            "pre-check inconsistent with a nonnegative spectrum: NPT "
            "signature or noise");
      }
    }

    try {
      const BackstepResult back =
          mu0_lower_bound(sub, config.range, config.tol.det);
      attempt.backstep = back;
      const MomentSequence ext = sub.with_mu0(back.mu0_bound);
      attempt.extended_check =
          classify(ext, config.range, config.tol.det, ClassifyMode::with_c0);
      if (attempt.extended_check->verdict == Verdict::infeasible)
        attempt.notes.push_back(
            "extended system infeasible at the backstep mu0; data are "
            "inconsistent at this order");

      PrincipalRepresentation rep;
      BoundQuality quality = BoundQuality::strict;
      try {
        const CharPolynomial poly =
            char_polynomial(ext, config.range, config.tol.det);
        const std::vector<double> roots =
            find_roots(poly, config.range, config.tol.root);
        rep = solve_weights(roots, ext, config.tol.root, poly.endpoint_root);
      } catch (const DegeneratePolynomial&) {
        rep = singular_recovery(ext, config.range, config.tol.det);
        quality = BoundQuality::singular_exact;
      }

      NegativityBound bound = assemble_bound(rep, order, config.range);
      bound.quality = quality;
      if (quality == BoundQuality::strict &&
          !residuals_certified(rep, ext, back.mu0_stderr, config.tol.residual))
        bound.quality = BoundQuality::degraded;
      attempt.bound = std::move(bound);
    } catch (const MomentProblemError& err) {
      attempt.failure = err.kind() + ": " + err.what();
      report.degradation_trace.push_back({order, *attempt.failure});
    }
    report.orders.push_back(std::move(attempt));
  }

  if (seq.max_order() >= 4) {
    const double mu2 = seq.value(2);
    const double mu4 = seq.value(4);
    if (mu2 > 0.0 && mu4 > 0.0) report.exp_fit = exp_fit_lower(mu2, mu4);
  }

  auto eligible_lower = [](const NegativityBound& b) {
    if (b.quality == BoundQuality::degraded) return false;
    return b.direction == BoundDirection::lower ||
           b.quality == BoundQuality::singular_exact;
  };
  auto eligible_upper = [](const NegativityBound& b) {
    if (b.quality == BoundQuality::degraded) return false;
    return b.direction == BoundDirection::upper ||
           b.quality == BoundQuality::singular_exact;
  };

  if (report.exp_fit && eligible_lower(*report.exp_fit))
    report.best_lower = report.exp_fit;
  for (const OrderAttempt& attempt : report.orders) {
    if (!attempt.bound) continue;
    const NegativityBound& b = *attempt.bound;
    if (eligible_lower(b) &&
        (!report.best_lower || b.negativity > report.best_lower->negativity))
      report.best_lower = b;
    if (eligible_upper(b) &&
        (!report.best_upper || b.negativity < report.best_upper->negativity))
      report.best_upper = b;
  }

  report.no_feasible_order = true;
  for (const OrderAttempt& attempt : report.orders)
    if (attempt.bound) report.no_feasible_order = false;

  report.bound_crossing =
      report.best_lower && report.best_upper &&
      report.best_lower->negativity >
          report.best_upper->negativity + config.tol.residual;

  return report;
}

}  // namespace negmom
