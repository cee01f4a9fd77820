#include "negmom/hankel.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace negmom {

namespace {

double leading_det(const Eigen::MatrixXd& m, int size) {
  if (size == 1) return m(0, 0);
  return m.topLeftCorner(size, size).determinant();
}

// Hadamard bound: product of row norms. Keeps the sign test relative, so
// verdicts are invariant under rescaling all moments by a constant.
double hadamard_scale(const Eigen::MatrixXd& m, int size) {
  double scale = 1.0;
  for (int i = 0; i < size; ++i)
    scale *= m.row(i).head(size).norm();
  return scale;
}

std::string minor_id(const char* matrix, int size) {
  std::ostringstream os;
  os << matrix << "[" << size << "x" << size << "]";
  return os.str();
}

void append_minors(const Eigen::MatrixXd& m, const char* name, double tol,
                   std::vector<MinorRecord>& out) {
  for (int size = 1; size <= m.rows(); ++size) {
    MinorRecord rec;
    rec.id = minor_id(name, size);
    rec.size = size;
    rec.det = leading_det(m, size);
    rec.scale = hadamard_scale(m, size);
    if (rec.det < -tol * rec.scale)
      rec.status = MinorStatus::violated;
    else if (std::abs(rec.det) <= tol * rec.scale)
      rec.status = MinorStatus::tight;
    else
      rec.status = MinorStatus::ok;
    out.push_back(std::move(rec));
  }
}

}  // namespace

HankelPair hankel_pair(const std::vector<double>& c, const SpectralRange& range,
                       CountParity parity) {
  const int count = static_cast<int>(c.size());
  const bool even = count % 2 == 0;
  if (parity == CountParity::even_count && !even)
    throw std::invalid_argument("even_count parity with an odd moment count");
  if (parity == CountParity::odd_count && even)
    throw std::invalid_argument("odd_count parity with an even moment count");

  const double a = range.a;
  const double b = range.b;
  HankelPair pair;
  pair.parity = parity;

  if (parity == CountParity::even_count) {
    if (count < 2)
      throw std::invalid_argument("even_count needs at least c_0, c_1");
    const int m = count / 2 - 1;
    pair.h1.resize(m + 1, m + 1);
    pair.h2.resize(m + 1, m + 1);
    for (int i = 0; i <= m; ++i)
      for (int j = 0; j <= m; ++j) {
        const double lo = c[static_cast<std::size_t>(i + j)];
        const double hi = c[static_cast<std::size_t>(i + j + 1)];
        pair.h1(i, j) = hi - a * lo;
        pair.h2(i, j) = b * lo - hi;
      }
  } else {
    if (count < 3)
      throw std::invalid_argument("odd_count needs at least c_0, c_1, c_2");
    const int m = (count - 1) / 2;
    pair.h1.resize(m + 1, m + 1);
    for (int i = 0; i <= m; ++i)
      for (int j = 0; j <= m; ++j)
        pair.h1(i, j) = c[static_cast<std::size_t>(i + j)];
    pair.h2.resize(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        pair.h2(i, j) = (a + b) * c[static_cast<std::size_t>(i + j + 1)] -
                        a * b * c[static_cast<std::size_t>(i + j)] -
                        c[static_cast<std::size_t>(i + j + 2)];
  }
  return pair;
}

std::vector<MinorRecord> existence_minors(const std::vector<double>& c,
                                          const SpectralRange& range,
                                          double tol) {
  const CountParity parity =
      c.size() % 2 == 0 ? CountParity::even_count : CountParity::odd_count;
  const HankelPair pair = hankel_pair(c, range, parity);
  std::vector<MinorRecord> out;
  append_minors(pair.h1, "H1", tol, out);
  if (pair.h2.rows() > 0) append_minors(pair.h2, "H2", tol, out);
  return out;
}

Classification classify(const MomentSequence& seq, const SpectralRange& range,
                        double tol, ClassifyMode mode) {
  std::vector<double> c;
  if (mode == ClassifyMode::with_c0) {
    c = seq.extended();  // throws if mu0 is unset
  } else {
    c = seq.values();  // nu1 plays the role of the zeroth entry
  }

  Classification result;
  result.mode = mode;
  result.details = existence_minors(c, range, tol);

  bool violated = false;
  bool tight = false;
  for (const MinorRecord& rec : result.details) {
    violated = violated || rec.status == MinorStatus::violated;
    tight = tight || rec.status == MinorStatus::tight;
  }
  result.verdict = violated ? Verdict::infeasible
                 : tight    ? Verdict::singularly_positive
                            : Verdict::strictly_positive;
  return result;
}

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::strictly_positive: return "strictly-positive";
    case Verdict::singularly_positive: return "singularly-positive";
    case Verdict::infeasible: return "infeasible";
  }
  return "?";
}

}  // namespace negmom
