#include "negmom/principal.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "negmom/backstep.hpp"
#include "negmom/errors.hpp"

namespace negmom {

namespace {

double hadamard(const Eigen::MatrixXd& m) {
  double out = 1.0;
  for (int i = 0; i < m.rows(); ++i) out *= m.row(i).norm();
  return out;
}

// Expansion of det([h_{r+j} | lambda^r]) along the symbolic last column.
// rows r = 0..m, columns j = 0..m-1; coeffs[r] = (-1)^{r+m} det(minor_r).
Eigen::VectorXd expand_last_column(const std::vector<double>& h, int m,
                                   double& scale_out) {
  Eigen::MatrixXd base(m + 1, m);
  for (int r = 0; r <= m; ++r)
    for (int j = 0; j < m; ++j)
      base(r, j) = h[static_cast<std::size_t>(r + j)];

  Eigen::VectorXd coeffs(m + 1);
  double scale = 0.0;
  Eigen::MatrixXd minor(m, m);
  for (int r = 0; r <= m; ++r) {
    int row = 0;
    for (int i = 0; i <= m; ++i) {
      if (i == r) continue;
      minor.row(row++) = base.row(i);
    }
    const double sign = ((r + m) % 2 == 0) ? 1.0 : -1.0;
    coeffs(r) = sign * minor.determinant();
    scale = std::max(scale, hadamard(minor));
  }
  scale_out = scale;
  return coeffs;
}

std::vector<double> quadratic_roots(double q0, double q1, double q2,
                                    double scale, double tol) {
  const double disc = q1 * q1 - 4.0 * q2 * q0;
  if (disc < -tol * std::max(scale * scale, 1e-300)) {
    std::ostringstream os;
    os << "negative discriminant " << disc;
    throw ComplexRoots(os.str());
  }
  const double sq = std::sqrt(std::max(disc, 0.0));
  // cancellation-free quadratic formula
  const double t = (q1 >= 0.0) ? -0.5 * (q1 + sq) : -0.5 * (q1 - sq);
  double x1, x2;
  if (t != 0.0) {
    x1 = t / q2;
    x2 = q0 / t;
  } else {
    x1 = 0.0;
    x2 = -q1 / q2;
  }
  if (x1 > x2) std::swap(x1, x2);
  return {x1, x2};
}

void check_in_range(const std::vector<double>& roots, const SpectralRange& range,
                    double tol) {
  for (double x : roots) {
    if (x < range.a - tol || x > range.b + tol) {
      std::ostringstream os;
      os << "root " << x << " outside [" << range.a << ", " << range.b << "]";
      throw RootOutOfRange(os.str());
    }
  }
}

PrincipalRepresentation representation_from(const std::vector<double>& roots,
                                            const std::vector<double>& weights,
                                            const std::vector<double>& extended,
                                            bool endpoint) {
  PrincipalRepresentation rep;
  rep.roots = roots;
  rep.weights = weights;
  rep.has_endpoint_root = endpoint;
  rep.residuals.resize(extended.size());
  for (std::size_t j = 0; j < extended.size(); ++j) {
    double reproduced = 0.0;
    for (std::size_t k = 0; k < roots.size(); ++k)
      reproduced += weights[k] * std::pow(roots[k], static_cast<double>(j));
    rep.residuals[j] = reproduced - extended[j];
  }
  return rep;
}

NegativityBound finish_bound(double negativity, int order,
                             PrincipalRepresentation rep) {
  NegativityBound bound;
  bound.direction = MomentSequence::is_even_order(order) ? BoundDirection::upper
                                                         : BoundDirection::lower;
  bound.order = order;
  bound.negativity = std::max(0.0, negativity);
  bound.one_norm = 1.0 + 2.0 * bound.negativity;
  bound.log_negativity = std::log(bound.one_norm);
  bound.representation = std::move(rep);
  return bound;
}

}  // namespace

double PrincipalRepresentation::max_abs_residual() const {
  double out = 0.0;
  for (double r : residuals) out = std::max(out, std::abs(r));
  return out;
}

const char* to_string(BoundDirection direction) {
  return direction == BoundDirection::lower ? "lower" : "upper";
}

const char* to_string(BoundQuality quality) {
  switch (quality) {
    case BoundQuality::strict: return "strict";
    case BoundQuality::singular_exact: return "singular-exact";
    case BoundQuality::degraded: return "degraded";
  }
  return "?";
}

CharPolynomial char_polynomial(const MomentSequence& seq,
                               const SpectralRange& range, double tol) {
  if (seq.max_order() < 3)
    throw std::invalid_argument("characteristic solve needs orders up to 3");
  const std::vector<double> e = seq.extended();
  const int count = static_cast<int>(e.size());

  CharPolynomial poly;
  std::vector<double> h;
  if (count % 2 == 0) {
    // well-constrained: plain rows, interior roots only
    h = e;
    poly.endpoint_root = false;
  } else {
    // ill-constrained: a-shifted rows plus a root pinned at a
    h.resize(e.size() - 1);
    for (std::size_t k = 0; k + 1 < e.size(); ++k)
      h[k] = e[k + 1] - range.a * e[k];
    poly.endpoint_root = true;
  }
  poly.endpoint = range.a;

  const int m = static_cast<int>(h.size()) / 2;
  poly.coeffs = expand_last_column(h, m, poly.scale);

  const double cut = tol * std::max(poly.scale, 1e-300);
  if (poly.coeffs.cwiseAbs().maxCoeff() <= cut)
    throw DegeneratePolynomial(
        "characteristic determinant vanishes identically");
  return poly;
}

std::vector<double> find_roots(const CharPolynomial& poly,
                               const SpectralRange& range, double tol) {
  const int degree = static_cast<int>(poly.coeffs.size()) - 1;
  if (degree < 1) throw std::invalid_argument("constant polynomial");

  const double cut = tol * std::max(poly.scale, 1e-300);
  if (poly.coeffs.cwiseAbs().maxCoeff() <= cut)
    throw DegeneratePolynomial("all coefficients vanish");
  if (std::abs(poly.coeffs(degree)) <= cut)
    throw DegeneratePolynomial(
        "leading coefficient vanishes: fewer masses than the generic degree");

  std::vector<double> roots;
  if (degree == 1) {
    roots.push_back(-poly.coeffs(0) / poly.coeffs(1));
  } else {
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(degree, degree);
    for (int i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < degree; ++i)
      companion(i, degree - 1) = -poly.coeffs(i) / poly.coeffs(degree);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);
    if (solver.info() != Eigen::Success)
      throw ComplexRoots("companion eigensolver failed");
    for (int i = 0; i < degree; ++i) {
      const std::complex<double> z = solver.eigenvalues()(i);
      if (std::abs(z.imag()) > tol * (1.0 + std::abs(z.real()))) {
        std::ostringstream os;
        os << "complex root " << z.real() << " + " << z.imag() << "i";
        throw ComplexRoots(os.str());
      }
      roots.push_back(z.real());
    }
  }

  check_in_range(roots, range, tol);
  if (poly.endpoint_root) roots.push_back(poly.endpoint);
  std::sort(roots.begin(), roots.end());
  return roots;
}

PrincipalRepresentation solve_weights(const std::vector<double>& roots,
                                      const MomentSequence& seq, double tol,
                                      bool endpoint_pinned) {
  const int r = static_cast<int>(roots.size());
  if (r < 1) throw std::invalid_argument("no roots");
  const int n = seq.max_order();
  if (r > n + 1)
    throw std::invalid_argument("more roots than available moment orders");

  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (std::abs(roots[static_cast<std::size_t>(i)] -
                   roots[static_cast<std::size_t>(j)]) < tol) {
        std::ostringstream os;
        os << "roots " << roots[static_cast<std::size_t>(i)] << " and "
           << roots[static_cast<std::size_t>(j)] << " are not separated";
        throw IllConditionedRoots(os.str());
      }

  const std::vector<double> e = seq.extended();

  // square system over the r highest orders
  Eigen::MatrixXd v(r, r);
  Eigen::VectorXd rhs(r);
  for (int i = 0; i < r; ++i) {
    const int order = n - r + 1 + i;
    for (int k = 0; k < r; ++k)
      v(i, k) = std::pow(roots[static_cast<std::size_t>(k)],
                         static_cast<double>(order));
    rhs(i) = e[static_cast<std::size_t>(order)];
  }
  const Eigen::VectorXd w = v.colPivHouseholderQr().solve(rhs);
  if (!w.allFinite())
    throw IllConditionedRoots("Vandermonde solve produced non-finite weights");

  const double weight_scale = 1.0 + w.cwiseAbs().sum();
  for (int k = 0; k < r; ++k)
    if (w(k) < -tol * weight_scale) {
      std::ostringstream os;
      os << "weight " << w(k) << " at root " << roots[static_cast<std::size_t>(k)]
         << " is negative";
      throw InconsistentWeights(os.str());
    }

  return representation_from(roots, {w.data(), w.data() + r}, e,
                             endpoint_pinned);
}

NegativityBound assemble_bound(const PrincipalRepresentation& rep, int order,
                               const SpectralRange& /*range*/) {
  double negativity = 0.0;
  for (std::size_t k = 0; k < rep.roots.size(); ++k)
    if (rep.roots[k] < 0.0) negativity += rep.weights[k] * (-rep.roots[k]);
  return finish_bound(negativity, order, rep);
}

PrincipalRepresentation singular_recovery(const MomentSequence& seq,
                                          const SpectralRange& range,
                                          double tol) {
  const std::vector<double> e = seq.extended();
  const int n = seq.max_order();

  for (int r = 1; 2 * r <= n; ++r) {
    Eigen::MatrixXd hankel(r + 1, r + 1);
    for (int i = 0; i <= r; ++i)
      for (int j = 0; j <= r; ++j)
        hankel(i, j) = e[static_cast<std::size_t>(i + j)];

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(hankel, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double top = std::max(sv(0), 1e-300);
    if (sv(r) > tol * top) continue;  // not singular at this size

    if (r >= 1 && sv(r - 1) <= tol * top)
      throw AmbiguousKernel("moment Hankel kernel is not one-dimensional");

    Eigen::VectorXd kernel = svd.matrixV().col(r);
    if (std::abs(kernel(r)) <= tol * kernel.norm())
      throw AmbiguousKernel("kernel polynomial drops degree");
    kernel /= kernel(r);  // monic

    CharPolynomial poly;
    poly.coeffs = kernel;
    poly.endpoint_root = false;
    poly.endpoint = range.a;
    poly.scale = kernel.cwiseAbs().maxCoeff();

    const std::vector<double> roots = find_roots(poly, range, tol * 10.0);
    PrincipalRepresentation rep = solve_weights(roots, seq, tol * 10.0);

    for (std::size_t j = 0; j < rep.residuals.size(); ++j)
      if (std::abs(rep.residuals[j]) >
          1e4 * tol * std::max(1.0, std::abs(e[j]))) {
        std::ostringstream os;
        os << "recovered representation misses order " << j << " by "
           << rep.residuals[j];
        throw AmbiguousKernel(os.str());
      }
    return rep;
  }
  throw AmbiguousKernel("no singular moment Hankel found to recover from");
}

NegativityBound bound_order3(double mu2, double nu3, const SpectralRange& range,
                             double tol_det, double tol_root) {
  const MomentSequence seq({1.0, mu2, nu3});
  const BackstepResult back = mu0_lower_bound(seq, range, tol_det);
  const MomentSequence ext = seq.with_mu0(back.mu0_bound);
  const double mu0 = back.mu0_bound;

  // det [[mu0, 1, 1], [1, mu2, x], [mu2, nu3, x^2]] expanded by hand
  const double q2 = mu0 * mu2 - 1.0;
  const double q1 = -(mu0 * nu3 - mu2);
  const double q0 = nu3 - mu2 * mu2;

  const Eigen::Vector2d row_top(mu0, 1.0), row_mid(1.0, mu2), row_bot(mu2, nu3);
  const double scale =
      std::max({row_mid.norm() * row_bot.norm(), row_top.norm() * row_bot.norm(),
                row_top.norm() * row_mid.norm()});
  const double cut = tol_det * std::max(scale, 1e-300);

  if (std::max({std::abs(q0), std::abs(q1), std::abs(q2)}) <= cut ||
      std::abs(q2) <= cut) {
    PrincipalRepresentation rep = singular_recovery(ext, range, tol_det);
    NegativityBound bound = assemble_bound(rep, 3, range);
    bound.quality = BoundQuality::singular_exact;
    return bound;
  }

  const std::vector<double> roots = quadratic_roots(q0, q1, q2, scale, tol_root);
  check_in_range(roots, range, tol_root);
  const double l1 = roots[0];
  const double l2 = roots[1];

  PrincipalRepresentation rep = solve_weights(roots, ext, tol_root);
  const double negativity =
      l1 < 0.0 ? (mu2 * l2 - nu3) / (l1 * (l1 - l2)) : 0.0;
  return finish_bound(negativity, 3, std::move(rep));
}

NegativityBound bound_order4(double mu2, double nu3, double mu4,
                             const SpectralRange& range, double tol_det,
                             double tol_root) {
  const MomentSequence seq({1.0, mu2, nu3, mu4});
  const BackstepResult back = mu0_lower_bound(seq, range, tol_det);
  const MomentSequence ext = seq.with_mu0(back.mu0_bound);
  const double mu0 = back.mu0_bound;
  const double a = range.a;

  const double d0 = 1.0 - a * mu0;
  const double d1 = mu2 - a;
  const double d2 = nu3 - a * mu2;
  const double d3 = mu4 - a * nu3;

  const double q2 = d0 * d2 - d1 * d1;
  const double q1 = -(d0 * d3 - d1 * d2);
  const double q0 = d1 * d3 - d2 * d2;

  const Eigen::Vector2d r0(d0, d1), r1(d1, d2), r2(d2, d3);
  const double scale = std::max(
      {r1.norm() * r2.norm(), r0.norm() * r2.norm(), r0.norm() * r1.norm()});
  const double cut = tol_det * std::max(scale, 1e-300);

  if (std::max({std::abs(q0), std::abs(q1), std::abs(q2)}) <= cut ||
      std::abs(q2) <= cut) {
    PrincipalRepresentation rep = singular_recovery(ext, range, tol_det);
    NegativityBound bound = assemble_bound(rep, 4, range);
    bound.quality = BoundQuality::singular_exact;
    return bound;
  }

  const std::vector<double> interior =
      quadratic_roots(q0, q1, q2, scale, tol_root);
  check_in_range(interior, range, tol_root);
  const double l1 = interior[0];
  const double l2 = interior[1];

  std::vector<double> roots = {a, l1, l2};
  std::sort(roots.begin(), roots.end());
  PrincipalRepresentation rep = solve_weights(roots, ext, tol_root, true);

  // elimination formulas: the first quotient is M_a a, the second M_1 l_1
  const double denom_a = (a - l2) * (a * a - l1 * l1);
  const double denom_1 = (l2 - l1) * (l1 * l1 - a * a);
  if (std::abs(denom_a) < tol_root || std::abs(denom_1) < tol_root)
    throw IllConditionedRoots("endpoint and interior roots nearly coincide");

  const double ma_a = (l1 * l1 * (l2 - mu2) - l2 * nu3 + mu4) / denom_a;
  const double m1_l1 = (l2 * nu3 - mu4 - a * a * (l2 - mu2)) / denom_1;

  double negativity = 0.0;
  if (a < 0.0) negativity += -ma_a;        // |a| M_a
  if (l1 < 0.0) negativity += -m1_l1;      // |l1| M_1
  return finish_bound(negativity, 4, std::move(rep));
}

NegativityBound exp_fit_lower(double mu2, double mu4) {
  if (!(mu2 > 0.0) || !(mu4 > 0.0))
    throw std::invalid_argument("exponential fit needs positive even moments");
  const double fit = mu2 * std::sqrt(mu2 / mu4);  // g_1(1) with Lambda = sqrt(mu4/mu2)
  NegativityBound bound = finish_bound(0.5 * (fit - 1.0), 4, {});
  bound.direction = BoundDirection::lower;  // convexity puts the fit below mu~(1)
  return bound;
}

}  // namespace negmom
