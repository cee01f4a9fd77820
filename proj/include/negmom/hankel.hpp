#ifndef NEGMOM_HANKEL_HPP
#define NEGMOM_HANKEL_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "negmom/moments.hpp"

namespace negmom {

/// Parity of the number of known moments c_0..c_n. An even count is the
/// well-constrained case, an odd count the ill-constrained one; the two use
/// different Hankel forms.
enum class CountParity { even_count, odd_count };

struct HankelPair {
  Eigen::MatrixXd h1;
  Eigen::MatrixXd h2;
  CountParity parity;
};

/// The two existence matrices for a moment vector c_0..c_n over [a, b].
///
/// even count (n = 2m+1):  H1[i,j] = c_{i+j+1} - a c_{i+j}
///                         H2[i,j] = b c_{i+j} - c_{i+j+1}      both (m+1)^2
/// odd count  (n = 2m):    H1[i,j] = c_{i+j}                    (m+1)^2
///                         H2[i,j] = (a+b) c_{i+j+1} - ab c_{i+j} - c_{i+j+2}
///                                                              m^2
HankelPair hankel_pair(const std::vector<double>& c, const SpectralRange& range,
                       CountParity parity);

enum class Verdict { strictly_positive, singularly_positive, infeasible };
enum class ClassifyMode { with_c0, shifted_precheck };
enum class MinorStatus { ok, tight, violated };

struct MinorRecord {
  std::string id;    // e.g. "H1[2x2]"
  int size = 0;
  double det = 0.0;
  double scale = 0.0;  // Hadamard bound, used for the relative sign test
  MinorStatus status = MinorStatus::ok;
};

struct Classification {
  Verdict verdict = Verdict::strictly_positive;
  ClassifyMode mode = ClassifyMode::with_c0;
  std::vector<MinorRecord> details;
};

/// All leading principal minors of both Hankel matrices for c_0..c_n, with
/// each determinant tested against tol * (product of row norms).
std::vector<MinorRecord> existence_minors(const std::vector<double>& c,
                                          const SpectralRange& range,
                                          double tol);

/// Existence verdict for a moment system.
///
/// with_c0 uses the extended vector (mu0, c_1..c_n) and requires seq.mu0 to
/// be set. shifted_precheck uses the measured orders alone, with nu1 = 1
/// playing the role of the zeroth entry; on signed spectra these pre-checks
/// can fail even for exact data, so callers treat them as advisory.
///
/// infeasible iff some determinant < -tol*scale; singularly_positive iff
/// none is violated and at least one lies within tol*scale of zero.
Classification classify(const MomentSequence& seq, const SpectralRange& range,
                        double tol, ClassifyMode mode);

const char* to_string(Verdict verdict);

}  // namespace negmom

#endif
