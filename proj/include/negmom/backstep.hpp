#ifndef NEGMOM_BACKSTEP_HPP
#define NEGMOM_BACKSTEP_HPP

#include <optional>
#include <string>
#include <vector>

#include "negmom/moments.hpp"

namespace negmom {

struct BackstepCandidate {
  std::string constraint_id;
  double threshold = 0.0;
  bool lower_type = true;  // false: the constraint caps mu0 from above
};

struct BackstepResult {
  double mu0_bound = 1.0;
  std::string active_constraint;
  std::vector<BackstepCandidate> all_candidates;
  /// First-order noise propagation onto mu0_bound when the input carries
  /// standard errors. Reported only; never used to widen the bound.
  std::optional<double> mu0_stderr;
};

/// Backwards extension: the greatest lower bound for the unknown zeroth
/// moment mu0 (nonzero eigenvalue count) consistent with the measured
/// moments over [a, b].
///
/// mu0 enters every existence determinant only through the corner entry, so
/// each determinant is affine in mu0 and det = 0 solves in closed form.
/// Constraints whose mu0 coefficient is positive give lower thresholds; the
/// bound is their maximum, clamped below by 1 (unit trace forces at least
/// one nonzero eigenvalue). Constraints with negligible mu0 coefficient are
/// not solved: if such a determinant is violated the data cannot constrain
/// mu0 at this order and DegenerateBackstep is thrown, as it is when an
/// anti-monotone constraint caps mu0 below the lower bound.
BackstepResult mu0_lower_bound(const MomentSequence& seq,
                               const SpectralRange& range, double tol);

}  // namespace negmom

#endif
