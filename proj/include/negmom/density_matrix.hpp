#ifndef NEGMOM_DENSITY_MATRIX_HPP
#define NEGMOM_DENSITY_MATRIX_HPP

#include <Eigen/Dense>
#include <vector>

#include "negmom/moments.hpp"

namespace negmom {

using ComplexMatrix = Eigen::MatrixXcd;

/// Bipartite density matrix on dim_a (x) dim_b with row-major composite
/// index i_A*dim_b + i_B. Construction enforces Hermiticity, unit trace and
/// positive semidefiniteness.
class DensityMatrix {
public:
  DensityMatrix(int dim_a, int dim_b, ComplexMatrix entries);

  int dim_a() const { return dim_a_; }
  int dim_b() const { return dim_b_; }
  int dim() const { return dim_a_ * dim_b_; }
  const ComplexMatrix& entries() const { return entries_; }

private:
  int dim_a_;
  int dim_b_;
  ComplexMatrix entries_;
};

enum class Subsystem { A, B };

/// Transposes the chosen tensor factor: for subsystem B,
/// X[(i,j),(k,l)] = rho[(i,l),(k,j)]. The result is Hermitian with unit
/// trace but generally not positive. Applying it twice is the identity.
ComplexMatrix partial_transpose(const DensityMatrix& rho,
                                Subsystem subsystem = Subsystem::B);

/// Index-permutation form for arbitrary (not necessarily positive) input.
ComplexMatrix partial_transpose(const ComplexMatrix& x, int dim_a, int dim_b,
                                Subsystem subsystem = Subsystem::B);

struct SpectrumReport {
  std::vector<double> eigenvalues;  // ascending
  double one_norm = 0.0;
  double negativity = 0.0;
  double log_negativity = 0.0;
  int nonzero_count = 0;
};

/// Moments c_k = Tr((rho^PT)^k) for k = 1..n_max, computed by repeated
/// matrix multiplication (never through the eigendecomposition, which is
/// reserved for the oracle).
MomentSequence pt_moments(const DensityMatrix& rho, int n_max);

/// Exact-diagonalization oracle: full spectrum of rho^PT plus the derived
/// negativity, one-norm and log-negativity. nonzero_count uses the rank
/// tolerance |lambda| > 1e-10 * max(1, ||X||).
SpectrumReport exact_spectrum_report(const DensityMatrix& rho);

/// Same report for an already partially transposed (Hermitian) matrix.
SpectrumReport spectrum_report_of(const ComplexMatrix& hermitian);

}  // namespace negmom

#endif
