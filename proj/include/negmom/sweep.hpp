#ifndef NEGMOM_SWEEP_HPP
#define NEGMOM_SWEEP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "negmom/pipeline.hpp"
#include "negmom/random_states.hpp"

namespace negmom {

struct SweepSpec {
  StateKind kind = StateKind::haar_pure;
  int dim_a = 2;
  int dim_b = 2;
  int count = 100;
  std::uint64_t seed = 0;
  int max_order = 5;
  SpectralRange range{};
  PrecheckMode precheck_mode = PrecheckMode::warn;
};

/// One sampled state: oracle values, the main bounds, and the sandwich
/// verdict against the oracle. Missing bounds are NaN.
struct SweepRow {
  std::uint64_t seed = 0;
  std::string kind;
  int dim_a = 0;
  int dim_b = 0;
  double n_exact = 0.0;
  double n3_lower = 0.0;
  double nexp_lower = 0.0;
  double n4_upper = 0.0;
  double mu0_bound = 0.0;  // largest backstep bound over successful orders
  bool sandwich_ok = false;
  std::string quality;  // chosen lower/upper qualities, "lower|upper"
  double millis = 0.0;
  std::optional<std::string> error;
};

/// Deterministic per spec.seed; row i uses seed spec.seed + i. For the
/// werner kind the mixing parameter sweeps a uniform grid over [0, 1]
/// instead. Generation or pipeline failures mark the row and the sweep
/// continues.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// CSV with the fixed header
/// seed,kind,dimA,dimB,N_exact,N3_lower,Nexp_lower,N4_upper,mu0_bound,sandwich_ok,quality
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace negmom

#endif
