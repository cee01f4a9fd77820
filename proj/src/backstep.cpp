#include "negmom/backstep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "negmom/errors.hpp"
#include "negmom/hankel.hpp"

namespace negmom {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct AffineMinor {
  std::string id;
  double at_zero = 0.0;  // det with mu0 = 0
  double at_one = 0.0;   // det with mu0 = 1
  double scale = 0.0;
};

// mu0 sits only in the corner entry, so every leading minor is affine in it
// and two evaluations recover the line det(mu0) = A + B mu0.
std::vector<AffineMinor> affine_minors(const std::vector<double>& measured,
                                       const SpectralRange& range, double tol) {
  std::vector<double> c(measured.size() + 1);
  std::copy(measured.begin(), measured.end(), c.begin() + 1);

  c[0] = 0.0;
  const auto minors0 = existence_minors(c, range, tol);
  c[0] = 1.0;
  const auto minors1 = existence_minors(c, range, tol);

  std::vector<AffineMinor> out;
  out.reserve(minors0.size());
  for (std::size_t i = 0; i < minors0.size(); ++i) {
    AffineMinor m;
    m.id = minors0[i].id;
    m.at_zero = minors0[i].det;
    m.at_one = minors1[i].det;
    m.scale = std::max(minors0[i].scale, minors1[i].scale);
    out.push_back(std::move(m));
  }
  return out;
}

struct SolvedBound {
  double mu0 = 1.0;
  std::string active = "trace";
  std::vector<BackstepCandidate> candidates;
  bool degenerate_violation = false;
  std::string degenerate_id;
  bool capped_below_bound = false;
  std::string capping_id;
};

SolvedBound solve_bound(const std::vector<double>& measured,
                        const SpectralRange& range, double tol) {
  SolvedBound result;
  double best = -std::numeric_limits<double>::infinity();

  const auto minors = affine_minors(measured, range, tol);
  for (const AffineMinor& m : minors) {
    const double slope = m.at_one - m.at_zero;
    const double cut = tol * std::max(m.scale, 1e-300);
    if (std::abs(slope) <= cut) {
      if (m.at_zero < -cut) {
        result.degenerate_violation = true;
        result.degenerate_id = m.id;
        return result;
      }
      continue;  // constant and satisfied: no information about mu0
    }
    const double threshold = -m.at_zero / slope;
    const bool lower_type = slope > 0.0;
    result.candidates.push_back({m.id, threshold, lower_type});
    if (lower_type && threshold > best) {
      best = threshold;
      result.active = m.id;
    }
  }

  result.mu0 = std::max(1.0, best);
  if (best < 1.0) result.active = "trace";

  for (const BackstepCandidate& cand : result.candidates) {
    if (!cand.lower_type &&
        cand.threshold < result.mu0 - tol * std::max(1.0, std::abs(result.mu0))) {
      result.capped_below_bound = true;
      result.capping_id = cand.constraint_id;
      return result;
    }
  }
  return result;
}

double bound_value_or_nan(std::vector<double> measured,
                          const SpectralRange& range, double tol) {
  const SolvedBound solved = solve_bound(measured, range, tol);
  if (solved.degenerate_violation || solved.capped_below_bound) return kNaN;
  return solved.mu0;
}

}  // namespace

BackstepResult mu0_lower_bound(const MomentSequence& seq,
                               const SpectralRange& range, double tol) {
  if (seq.max_order() < 3)
    throw std::invalid_argument("backstep needs moments up to order 3");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");

  const std::vector<double>& measured = seq.values();
  const SolvedBound solved = solve_bound(measured, range, tol);

  if (solved.degenerate_violation) {
    std::ostringstream os;
    os << "constraint " << solved.degenerate_id
       << " is violated but does not involve mu0; the system cannot "
          "constrain mu0 at this order";
    throw DegenerateBackstep(os.str());
  }
  if (solved.capped_below_bound) {
    std::ostringstream os;
    os << "constraint " << solved.capping_id
       << " caps mu0 below the lower bound " << solved.mu0
       << "; no feasible mu0 at this order";
    throw DegenerateBackstep(os.str());
  }

  BackstepResult result;
  result.mu0_bound = solved.mu0;
  result.active_constraint = solved.active;
  result.all_candidates = solved.candidates;

  if (seq.has_std_errors()) {
    double var = 0.0;
    bool usable = true;
    for (int k = 2; k <= seq.max_order() && usable; ++k) {
      const double sd = seq.std_error(k);
      if (sd == 0.0) continue;
      const double h = 1e-7 * std::max(1.0, std::abs(seq.value(k)));
      std::vector<double> bumped = measured;
      bumped[static_cast<std::size_t>(k - 1)] += h;
      const double up = bound_value_or_nan(bumped, range, tol);
      bumped[static_cast<std::size_t>(k - 1)] -= 2.0 * h;
      const double down = bound_value_or_nan(bumped, range, tol);
      if (std::isnan(up) || std::isnan(down)) {
        usable = false;
        break;
      }
      const double grad = (up - down) / (2.0 * h);
      var += grad * grad * sd * sd;
    }
    if (usable) result.mu0_stderr = std::sqrt(var);
  }

  return result;
}

}  // namespace negmom
