#ifndef NEGMOM_RANDOM_STATES_HPP
#define NEGMOM_RANDOM_STATES_HPP

#include <cstdint>
#include <string>

#include "negmom/density_matrix.hpp"

namespace negmom {

enum class StateKind {
  haar_pure,          // Haar-random pure state on A (x) B
  induced_mixed,      // partial trace of a Haar pure state on (AB) (x) E, dim E = dim AB
  separable_mixture,  // convex mixture of random product states (PPT by construction)
  werner,             // p |Phi+><Phi+| + (1-p) I/4, two qubits only
};

StateKind parse_state_kind(const std::string& name);
const char* to_string(StateKind kind);

/// Deterministic per (kind, dims, seed). werner requires dim_a = dim_b = 2
/// and p in [0, 1]; p is ignored for the other kinds.
DensityMatrix gen_random_state(StateKind kind, int dim_a, int dim_b,
                               std::uint64_t seed, double werner_p = 1.0);

}  // namespace negmom

#endif
