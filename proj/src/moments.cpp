#include "negmom/moments.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace negmom {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// splitmix64, used to decorrelate per-order noise streams
std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

SpectralRange::SpectralRange(double a_, double b_) : a(a_), b(b_) {
  require(std::isfinite(a) && std::isfinite(b), "spectral range must be finite");
  require(a < b, "spectral range requires a < b");
  require(a >= -0.5, "spectral range requires a >= -1/2");
  require(b <= 1.0, "spectral range requires b <= 1");
}

double SpectralRange::abs_max() const { return std::max(std::abs(a), std::abs(b)); }

MomentSequence::MomentSequence(std::vector<double> values)
    : MomentSequence(std::move(values), {}) {}

MomentSequence::MomentSequence(std::vector<double> values,
                               std::vector<double> std_errors)
    : values_(std::move(values)), std_errors_(std::move(std_errors)) {
  require(values_.size() >= 2, "moment sequence needs orders 1..n with n >= 2");
  for (double v : values_)
    require(std::isfinite(v), "moment values must be finite");
  if (!std_errors_.empty()) {
    require(std_errors_.size() == values_.size(),
            "standard errors must cover every order");
    for (double s : std_errors_)
      require(std::isfinite(s) && s >= 0.0, "standard errors must be >= 0");
  }
}

double MomentSequence::value(int order) const {
  if (order < 1 || order > max_order())
    throw std::out_of_range("moment order out of range");
  return values_[static_cast<std::size_t>(order - 1)];
}

double MomentSequence::std_error(int order) const {
  if (order < 1 || order > max_order())
    throw std::out_of_range("moment order out of range");
  if (std_errors_.empty()) return 0.0;
  return std_errors_[static_cast<std::size_t>(order - 1)];
}

double MomentSequence::mu0() const {
  if (!mu0_) throw std::logic_error("mu0 not set; run a backstep first");
  return *mu0_;
}

MomentSequence MomentSequence::with_mu0(double mu0) const {
  require(std::isfinite(mu0), "mu0 must be finite");
  MomentSequence out = *this;
  out.mu0_ = mu0;
  return out;
}

std::vector<double> MomentSequence::extended() const {
  std::vector<double> out;
  out.reserve(values_.size() + 1);
  out.push_back(mu0());
  out.insert(out.end(), values_.begin(), values_.end());
  return out;
}

std::vector<Finding> validate(const MomentSequence& seq,
                              const SpectralRange& range, double tol) {
  std::vector<Finding> findings;
  auto add = [&](Severity sev, int order, const std::string& msg) {
    findings.push_back({sev, order, msg});
  };

  const double r = range.abs_max();

  double slack1 = tol + 5.0 * seq.std_error(1);
  if (std::abs(seq.value(1) - 1.0) > slack1) {
    std::ostringstream os;
    os << "trace constraint violated: nu1 = " << seq.value(1);
    add(Severity::error, 1, os.str());
  }

  for (int k = 2; k <= seq.max_order(); ++k) {
    const double ck = seq.value(k);
    const double slack = tol + 5.0 * seq.std_error(k);
    if (MomentSequence::is_even_order(k) && ck < -slack) {
      std::ostringstream os;
      os << "even moment negative at order " << k << ": mu" << k << " = " << ck;
      add(Severity::error, k, os.str());
    }
  }

  // support bound: |c_k| <= r^{k-2} mu2 for any spectrum inside [a, b]
  const double mu2 = seq.value(2);
  if (mu2 > 0.0) {
    for (int k = 3; k <= seq.max_order(); ++k) {
      const double cap = std::pow(r, k - 2) * mu2;
      const double slack = tol * std::max(1.0, cap) + 5.0 * seq.std_error(k);
      if (std::abs(seq.value(k)) > cap + slack) {
        std::ostringstream os;
        os << "order " << k << " magnitude " << std::abs(seq.value(k))
           << " exceeds support bound " << cap;
        add(Severity::warning, k, os.str());
      }
    }
  }

  return findings;
}

MomentSequence perturb(const MomentSequence& seq, double sigma,
                       std::uint64_t seed) {
  if (!(sigma >= 0.0)) throw std::invalid_argument("sigma must be >= 0");

  std::vector<double> values = seq.values();
  std::vector<double> errors(values.size(), 0.0);
  for (int k = 2; k <= seq.max_order(); ++k) {
    const double sd = sigma * std::abs(seq.value(k));
    errors[static_cast<std::size_t>(k - 1)] = sd;
    if (sd == 0.0) continue;
    std::mt19937_64 engine(mix64(seed ^ mix64(static_cast<std::uint64_t>(k))));
    std::normal_distribution<double> normal(0.0, sd);
    values[static_cast<std::size_t>(k - 1)] += normal(engine);
  }
  return MomentSequence(std::move(values), std::move(errors));
}

MomentSequence truncate(const MomentSequence& seq, int new_max) {
  if (new_max < 2 || new_max > seq.max_order())
    throw std::out_of_range("truncation order must lie in [2, n_max]");
  std::vector<double> values(seq.values().begin(),
                             seq.values().begin() + new_max);
  if (!seq.has_std_errors()) return MomentSequence(std::move(values));
  std::vector<double> errors;
  errors.reserve(static_cast<std::size_t>(new_max));
  for (int k = 1; k <= new_max; ++k) errors.push_back(seq.std_error(k));
  return MomentSequence(std::move(values), std::move(errors));
}

}  // namespace negmom
