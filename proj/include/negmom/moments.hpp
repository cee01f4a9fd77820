#ifndef NEGMOM_MOMENTS_HPP
#define NEGMOM_MOMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace negmom {

/// Integration interval [a, b] assumed to contain the eigenvalue support.
/// The widest admissible interval is [-1/2, 1]; narrower intervals are
/// allowed and tighten the bounds, wider ones are rejected.
struct SpectralRange {
  double a = -0.5;
  double b = 1.0;

  SpectralRange() = default;
  SpectralRange(double a_, double b_);

  double span() const { return b - a; }
  double abs_max() const;
};

enum class Severity { warning, error };

struct Finding {
  Severity severity;
  int order;  // offending order, or 0 for sequence-level findings
  std::string message;
};

/// Ordered trace moments c_k for k = 1..n_max, with parity semantics:
/// even orders are magnitude moments (mu), odd orders are signed (nu).
/// An optional zeroth moment mu0 (nonzero eigenvalue count) is attached
/// only after a backwards extension. Instances are immutable values.
class MomentSequence {
public:
  explicit MomentSequence(std::vector<double> values);
  MomentSequence(std::vector<double> values, std::vector<double> std_errors);

  int max_order() const { return static_cast<int>(values_.size()); }
  double value(int order) const;

  bool has_std_errors() const { return !std_errors_.empty(); }
  /// Standard error for one order; 0 when none was recorded.
  double std_error(int order) const;

  bool has_mu0() const { return mu0_.has_value(); }
  double mu0() const;
  MomentSequence with_mu0(double mu0) const;

  /// {mu0, c_1, ..., c_n}; requires mu0 to be set.
  std::vector<double> extended() const;

  const std::vector<double>& values() const { return values_; }

  static bool is_even_order(int order) { return order % 2 == 0; }
  static const char* parity_label(int order) {
    return is_even_order(order) ? "mu" : "nu";
  }

private:
  std::vector<double> values_;       // index k-1 holds order k
  std::vector<double> std_errors_;   // empty, or same length as values_
  std::optional<double> mu0_;
};

/// Soft consistency diagnostics: trace deviation, negative even moments,
/// and magnitude violations of the support bound |c_k| <= r^{k-2} mu2 for
/// r = max(|a|, b). Structural problems throw at construction instead;
/// this never throws. Recorded standard errors widen the thresholds, so
/// exact sequences are judged strictly and measured ones leniently.
std::vector<Finding> validate(const MomentSequence& seq,
                              const SpectralRange& range, double tol);

/// Adds zero-mean Gaussian noise of standard deviation sigma*|c_k| to every
/// order k >= 2 and records those deviations as standard errors. Order 1 is
/// exact by construction and left untouched. Draws are keyed by (seed,
/// order), so truncation commutes with perturbation.
MomentSequence perturb(const MomentSequence& seq, double sigma,
                       std::uint64_t seed);

/// Prefix of orders 1..new_max. Any attached mu0 is dropped: a backwards
/// extension is specific to the set of moments it was computed from.
MomentSequence truncate(const MomentSequence& seq, int new_max);

}  // namespace negmom

#endif
