#include "negmom/random_states.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace negmom {

namespace {

using Engine = std::mt19937_64;

Eigen::VectorXcd gaussian_vector(Engine& engine, int dim) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i) {
    const double re = normal(engine);
    const double im = normal(engine);
    v(i) = std::complex<double>(re, im);
  }
  return v;
}

Eigen::VectorXcd haar_pure_vector(Engine& engine, int dim) {
  Eigen::VectorXcd v = gaussian_vector(engine, dim);
  return v / v.norm();
}

ComplexMatrix haar_pure_density(Engine& engine, int dim) {
  const Eigen::VectorXcd v = haar_pure_vector(engine, dim);
  return v * v.adjoint();
}

ComplexMatrix induced_mixed_density(Engine& engine, int dim) {
  // partial trace over an environment of the same dimension
  const int env = dim;
  Eigen::MatrixXcd w(dim, env);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int i = 0; i < dim; ++i)
    for (int e = 0; e < env; ++e)
      w(i, e) = std::complex<double>(normal(engine), normal(engine));
  w /= w.norm();
  return w * w.adjoint();
}

ComplexMatrix separable_mixture_density(Engine& engine, int da, int db) {
  const int components = da * db;
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> weights(static_cast<std::size_t>(components));
  double total = 0.0;
  for (double& w : weights) {
    w = expo(engine);
    total += w;
  }
  ComplexMatrix rho = ComplexMatrix::Zero(da * db, da * db);
  for (double w : weights) {
    const ComplexMatrix rho_a = haar_pure_density(engine, da);
    const ComplexMatrix rho_b = haar_pure_density(engine, db);
    rho += (w / total) * Eigen::kroneckerProduct(rho_a, rho_b).eval();
  }
  return rho;
}

ComplexMatrix werner_density(double p) {
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("werner parameter must lie in [0, 1]");
  Eigen::VectorXcd phi = Eigen::VectorXcd::Zero(4);
  phi(0) = 1.0 / std::sqrt(2.0);
  phi(3) = 1.0 / std::sqrt(2.0);
  return p * (phi * phi.adjoint()) +
         (1.0 - p) * 0.25 * ComplexMatrix::Identity(4, 4);
}

}  // namespace

StateKind parse_state_kind(const std::string& name) {
  if (name == "haar_pure") return StateKind::haar_pure;
  if (name == "induced_mixed") return StateKind::induced_mixed;
  if (name == "separable_mixture") return StateKind::separable_mixture;
  if (name == "werner") return StateKind::werner;
  throw std::invalid_argument("unknown state kind: " + name);
}

const char* to_string(StateKind kind) {
  switch (kind) {
    case StateKind::haar_pure: return "haar_pure";
    case StateKind::induced_mixed: return "induced_mixed";
    case StateKind::separable_mixture: return "separable_mixture";
    case StateKind::werner: return "werner";
  }
  return "?";
}

DensityMatrix gen_random_state(StateKind kind, int dim_a, int dim_b,
                               std::uint64_t seed, double werner_p) {
  if (dim_a < 2 || dim_b < 2)
    throw std::invalid_argument("bipartition dimensions must be >= 2");
  Engine engine(seed);
  switch (kind) {
    case StateKind::haar_pure:
      return DensityMatrix(dim_a, dim_b, haar_pure_density(engine, dim_a * dim_b));
    case StateKind::induced_mixed:
      return DensityMatrix(dim_a, dim_b,
                           induced_mixed_density(engine, dim_a * dim_b));
    case StateKind::separable_mixture:
      return DensityMatrix(dim_a, dim_b,
                           separable_mixture_density(engine, dim_a, dim_b));
    case StateKind::werner:
      if (dim_a != 2 || dim_b != 2)
        throw std::invalid_argument("werner states are two-qubit only");
      return DensityMatrix(2, 2, werner_density(werner_p));
  }
  throw std::invalid_argument("unknown state kind");
}

}  // namespace negmom
