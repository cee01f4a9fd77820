#ifndef NEGMOM_IO_HPP
#define NEGMOM_IO_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "negmom/density_matrix.hpp"
#include "negmom/pipeline.hpp"

namespace negmom {

/// Malformed or semantically invalid input document (CLI exit code 3).
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MomentsInput {
  MomentSequence seq;
  SpectralRange range;
};

// moments document:
//   {"range": {"a": -0.5, "b": 1.0},              optional, defaults shown
//    "moments": [{"order": 1, "value": 1.0},
//                {"order": 2, "value": 0.58, "stderr": 0.001}, ...]}
// orders contiguous from 1
MomentsInput parse_moments_input(const nlohmann::json& j);
MomentsInput read_moments_file(const std::string& path);
nlohmann::ordered_json moments_input_json(const MomentSequence& seq,
                                          const SpectralRange& range);

// state document:
//   {"dim_a": 2, "dim_b": 2, "entries": [[re, im], ...]}
// entries flat in row-major composite index i_A*dim_b + i_B
DensityMatrix parse_state_input(const nlohmann::json& j);
DensityMatrix read_state_file(const std::string& path);

nlohmann::ordered_json spectrum_report_json(const SpectrumReport& report);
nlohmann::ordered_json bound_json(const NegativityBound& bound);
nlohmann::ordered_json classification_json(const Classification& c);
nlohmann::ordered_json backstep_json(const BackstepResult& r);
nlohmann::ordered_json bound_report_json(const BoundReport& report);

}  // namespace negmom

#endif
