#ifndef NEGMOM_PRINCIPAL_HPP
#define NEGMOM_PRINCIPAL_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "negmom/moments.hpp"

namespace negmom {

/// Characteristic polynomial of the lower principal representation.
/// coeffs holds the interior part in ascending degree. For an even number
/// of measured orders the representation additionally pins a root at the
/// lower endpoint a; that root is carried symbolically (endpoint_root), not
/// folded into the coefficients, so downstream code can append it exactly.
struct CharPolynomial {
  Eigen::VectorXd coeffs;
  bool endpoint_root = false;
  double endpoint = 0.0;
  double scale = 0.0;  // magnitude reference for degeneracy tests
};

/// Point-mass solution of a truncated moment problem: weights at roots.
struct PrincipalRepresentation {
  std::vector<double> roots;    // ascending
  std::vector<double> weights;  // same length, nonnegative up to tolerance
  bool has_endpoint_root = false;
  std::vector<double> residuals;  // index j = reproduction error of c_j, j = 0..n

  double max_abs_residual() const;
};

enum class BoundDirection { lower, upper };
enum class BoundQuality { strict, singular_exact, degraded };

struct NegativityBound {
  BoundDirection direction = BoundDirection::lower;
  int order = 0;  // highest moment order used
  double negativity = 0.0;
  double one_norm = 1.0;
  double log_negativity = 0.0;
  PrincipalRepresentation representation;
  BoundQuality quality = BoundQuality::strict;
};

const char* to_string(BoundDirection direction);
const char* to_string(BoundQuality quality);

/// Expands the characteristic determinant along its symbolic last column
/// (1, lambda, ..., lambda^m). Requires seq.mu0. Odd max_order uses the
/// plain Hankel rows; even max_order uses the a-shifted rows
/// c_{k+1} - a c_k and flags the extra endpoint root. Throws
/// DegeneratePolynomial when every coefficient is below tol*scale.
CharPolynomial char_polynomial(const MomentSequence& seq,
                               const SpectralRange& range, double tol);

/// Real roots via companion-matrix eigenvalues, sorted ascending, with the
/// pinned endpoint root appended exactly when flagged. Imaginary parts
/// beyond tol throw ComplexRoots; roots outside [a - tol, b + tol] throw
/// RootOutOfRange; a vanishing leading coefficient throws
/// DegeneratePolynomial (the system has fewer masses than its degree).
std::vector<double> find_roots(const CharPolynomial& poly,
                               const SpectralRange& range, double tol);

/// Weights from the square Vandermonde system over the r highest orders
/// (r = number of roots); every remaining order, including c_0 = mu0, is
/// then checked and reported as a residual. Roots closer than tol throw
/// IllConditionedRoots; a weight below -tol*(1 + |w|_1) throws
/// InconsistentWeights.
PrincipalRepresentation solve_weights(const std::vector<double>& roots,
                                      const MomentSequence& seq, double tol,
                                      bool endpoint_pinned = false);

/// Negativity from a representation: sum of weight * |root| over negative
/// roots (the endpoint root contributes |a| M_a when a < 0), clamped at 0.
/// Odd orders give lower bounds, even orders upper bounds.
NegativityBound assemble_bound(const PrincipalRepresentation& rep, int order,
                               const SpectralRange& range);

/// Unique solution of a singularly positive system: finds the smallest r
/// whose (r+1)x(r+1) moment Hankel is numerically singular, reads the
/// monic characteristic polynomial off its one-dimensional kernel
/// (Prony-style), then solves roots and weights as usual. Requires seq.mu0.
PrincipalRepresentation singular_recovery(const MomentSequence& seq,
                                          const SpectralRange& range,
                                          double tol);

/// Closed-form three-replica lower bound: backstep, quadratic
/// characteristic equation, then N = M1 |lambda1| when lambda1 < 0 (zero
/// otherwise). Falls back to singular recovery when the quadratic
/// degenerates. Agrees with the generic pipeline at order 3.
NegativityBound bound_order3(double mu2, double nu3, const SpectralRange& range,
                             double tol_det = 1e-10, double tol_root = 1e-8);

/// Closed-form four-replica upper bound: backstep, the a-shifted quadratic
/// for the interior roots, and the elimination formulas for M_a a and
/// M1 lambda1; the endpoint mass contributes |a| M_a. Agrees with the
/// generic pipeline at order 4.
NegativityBound bound_order4(double mu2, double nu3, double mu4,
                             const SpectralRange& range,
                             double tol_det = 1e-10, double tol_root = 1e-8);

/// Two-point exponential fit through mu2 and mu4 evaluated at order 1:
/// one-norm >= mu2^{3/2} mu4^{-1/2} by log-convexity of the even moments.
NegativityBound exp_fit_lower(double mu2, double mu4);

}  // namespace negmom

#endif
