#ifndef NEGMOM_ERRORS_HPP
#define NEGMOM_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace negmom {

/// Base class for errors that signal inconsistent or noise-corrupted moment
/// data. The degradation loop catches these and retries at a lower order;
/// they are expected runtime outcomes, not bugs.
class MomentProblemError : public std::runtime_error {
public:
  MomentProblemError(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

/// The backstep system cannot constrain mu0 (vanishing cofactor with a
/// violated determinant, or mutually infeasible constraints).
struct DegenerateBackstep : MomentProblemError {
  explicit DegenerateBackstep(const std::string& what)
      : MomentProblemError("DegenerateBackstep", what) {}
};

/// Characteristic determinant vanishes identically; the system is singular
/// and has fewer point masses than the generic solve assumes.
struct DegeneratePolynomial : MomentProblemError {
  explicit DegeneratePolynomial(const std::string& what)
      : MomentProblemError("DegeneratePolynomial", what) {}
};

struct ComplexRoots : MomentProblemError {
  explicit ComplexRoots(const std::string& what)
      : MomentProblemError("ComplexRoots", what) {}
};

struct RootOutOfRange : MomentProblemError {
  explicit RootOutOfRange(const std::string& what)
      : MomentProblemError("RootOutOfRange", what) {}
};

/// A solved weight is negative beyond tolerance: no nonnegative measure
/// matches the data through these roots.
struct InconsistentWeights : MomentProblemError {
  explicit InconsistentWeights(const std::string& what)
      : MomentProblemError("InconsistentWeights", what) {}
};

/// Root separation below tolerance; the Vandermonde solve is unreliable.
struct IllConditionedRoots : MomentProblemError {
  explicit IllConditionedRoots(const std::string& what)
      : MomentProblemError("IllConditionedRoots", what) {}
};

/// Singular recovery found a Hankel kernel that is not one-dimensional.
struct AmbiguousKernel : MomentProblemError {
  explicit AmbiguousKernel(const std::string& what)
      : MomentProblemError("AmbiguousKernel", what) {}
};

}  // namespace negmom

#endif
