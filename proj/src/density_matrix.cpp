#include "negmom/density_matrix.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace negmom {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kPsdTol = 1e-10;
constexpr double kRankTol = 1e-10;

}  // namespace

DensityMatrix::DensityMatrix(int dim_a, int dim_b, ComplexMatrix entries)
    : dim_a_(dim_a), dim_b_(dim_b), entries_(std::move(entries)) {
  if (dim_a_ < 2 || dim_b_ < 2)
    throw std::invalid_argument("bipartition dimensions must be >= 2");
  const int d = dim_a_ * dim_b_;
  if (entries_.rows() != d || entries_.cols() != d) {
    std::ostringstream os;
    os << "matrix is " << entries_.rows() << "x" << entries_.cols()
       << " but the declared bipartition needs " << d << "x" << d;
    throw std::invalid_argument(os.str());
  }

  const double mag = entries_.cwiseAbs().maxCoeff();
  const double herm_dev = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > kHermitianTol * std::max(mag, 1.0))
    throw std::invalid_argument("matrix is not Hermitian within tolerance");

  const std::complex<double> tr = entries_.trace();
  if (std::abs(tr - std::complex<double>(1.0, 0.0)) > kTraceTol)
    throw std::invalid_argument("matrix trace is not 1 within tolerance");

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(entries_,
                                                      Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigensolver failed to converge");
  if (solver.eigenvalues().minCoeff() < -kPsdTol)
    throw std::invalid_argument("matrix is not positive semidefinite");
}

ComplexMatrix partial_transpose(const ComplexMatrix& x, int dim_a, int dim_b,
                                Subsystem subsystem) {
  const int d = dim_a * dim_b;
  if (x.rows() != d || x.cols() != d)
    throw std::invalid_argument(
        "matrix size does not match the declared bipartition");
  ComplexMatrix out(d, d);
  for (int ia = 0; ia < dim_a; ++ia)
    for (int ib = 0; ib < dim_b; ++ib)
      for (int ka = 0; ka < dim_a; ++ka)
        for (int kb = 0; kb < dim_b; ++kb) {
          const int row = ia * dim_b + ib;
          const int col = ka * dim_b + kb;
          if (subsystem == Subsystem::B)
            out(row, col) = x(ia * dim_b + kb, ka * dim_b + ib);
          else
            out(row, col) = x(ka * dim_b + ib, ia * dim_b + kb);
        }
  return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, Subsystem subsystem) {
  return partial_transpose(rho.entries(), rho.dim_a(), rho.dim_b(), subsystem);
}

MomentSequence pt_moments(const DensityMatrix& rho, int n_max) {
  if (n_max < 2) throw std::invalid_argument("pt_moments needs n_max >= 2");
  const ComplexMatrix x = partial_transpose(rho, Subsystem::B);
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(n_max));
  ComplexMatrix power = x;
  values.push_back(power.trace().real());
  for (int k = 2; k <= n_max; ++k) {
    power = power * x;
    values.push_back(power.trace().real());
  }
  return MomentSequence(std::move(values));
}

SpectrumReport spectrum_report_of(const ComplexMatrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian,
                                                      Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigensolver failed to converge");

  SpectrumReport report;
  const auto& ev = solver.eigenvalues();
  report.eigenvalues.assign(ev.data(), ev.data() + ev.size());

  double one_norm = 0.0;
  double negative_part = 0.0;
  double spectral_norm = 0.0;
  for (double lambda : report.eigenvalues) {
    one_norm += std::abs(lambda);
    if (lambda < 0.0) negative_part += -lambda;
    spectral_norm = std::max(spectral_norm, std::abs(lambda));
  }
  const double rank_cut = kRankTol * std::max(1.0, spectral_norm);
  int nonzero = 0;
  for (double lambda : report.eigenvalues)
    if (std::abs(lambda) > rank_cut) ++nonzero;

  report.one_norm = one_norm;
  report.negativity = negative_part;
  report.log_negativity = std::log(one_norm);
  report.nonzero_count = nonzero;
  return report;
}

SpectrumReport exact_spectrum_report(const DensityMatrix& rho) {
  return spectrum_report_of(partial_transpose(rho, Subsystem::B));
}

}  // namespace negmom
