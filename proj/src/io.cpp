#include "negmom/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace negmom {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

double require_number(const json& j, const std::string& context) {
  if (!j.is_number()) throw SchemaError(context + " must be a number");
  return j.get<double>();
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw SchemaError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace

MomentsInput parse_moments_input(const json& j) {
  if (!j.is_object()) throw SchemaError("moments document must be an object");

  SpectralRange range;
  if (j.contains("range")) {
    const json& r = j.at("range");
    if (!r.is_object()) throw SchemaError("range must be an object");
    const double a = r.contains("a") ? require_number(r.at("a"), "range.a") : -0.5;
    const double b = r.contains("b") ? require_number(r.at("b"), "range.b") : 1.0;
    try {
      range = SpectralRange(a, b);
    } catch (const std::invalid_argument& e) {
      throw SchemaError(e.what());
    }
  }

  if (!j.contains("moments") || !j.at("moments").is_array())
    throw SchemaError("moments document needs a \"moments\" array");
  const json& arr = j.at("moments");
  if (arr.size() < 2) throw SchemaError("need at least orders 1 and 2");

  std::vector<double> values(arr.size(), 0.0);
  std::vector<double> errors(arr.size(), 0.0);
  bool any_error = false;
  std::vector<bool> seen(arr.size(), false);
  for (const json& item : arr) {
    if (!item.is_object() || !item.contains("order") || !item.contains("value"))
      throw SchemaError("each moment needs \"order\" and \"value\"");
    if (!item.at("order").is_number_integer())
      throw SchemaError("moment order must be an integer");
    const int order = item.at("order").get<int>();
    if (order < 1 || order > static_cast<int>(arr.size()))
      throw SchemaError("moment orders must be contiguous from 1");
    if (seen[static_cast<std::size_t>(order - 1)])
      throw SchemaError("duplicate moment order");
    seen[static_cast<std::size_t>(order - 1)] = true;
    values[static_cast<std::size_t>(order - 1)] =
        require_number(item.at("value"), "moment value");
    if (item.contains("stderr")) {
      const double se = require_number(item.at("stderr"), "moment stderr");
      if (se < 0.0) throw SchemaError("stderr must be >= 0");
      errors[static_cast<std::size_t>(order - 1)] = se;
      any_error = true;
    }
  }
  for (bool s : seen)
    if (!s) throw SchemaError("moment orders must be contiguous from 1");

  try {
    MomentSequence seq = any_error
                             ? MomentSequence(std::move(values), std::move(errors))
                             : MomentSequence(std::move(values));
    return {std::move(seq), range};
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
}

MomentsInput read_moments_file(const std::string& path) {
  return parse_moments_input(load_json(path));
}

ordered_json moments_input_json(const MomentSequence& seq,
                                const SpectralRange& range) {
  ordered_json doc;
  doc["range"] = {{"a", range.a}, {"b", range.b}};
  ordered_json arr = ordered_json::array();
  for (int k = 1; k <= seq.max_order(); ++k) {
    ordered_json item;
    item["order"] = k;
    item["value"] = seq.value(k);
    if (seq.has_std_errors()) item["stderr"] = seq.std_error(k);
    arr.push_back(std::move(item));
  }
  doc["moments"] = std::move(arr);
  return doc;
}

DensityMatrix parse_state_input(const json& j) {
  if (!j.is_object()) throw SchemaError("state document must be an object");
  if (!j.contains("dim_a") || !j.contains("dim_b") || !j.contains("entries"))
    throw SchemaError("state document needs dim_a, dim_b and entries");
  if (!j.at("dim_a").is_number_integer() || !j.at("dim_b").is_number_integer())
    throw SchemaError("dimensions must be integers");
  const int da = j.at("dim_a").get<int>();
  const int db = j.at("dim_b").get<int>();
  if (da < 2 || db < 2) throw SchemaError("dimensions must be >= 2");
  const json& entries = j.at("entries");
  if (!entries.is_array()) throw SchemaError("entries must be an array");
  const int d = da * db;
  if (static_cast<int>(entries.size()) != d * d) {
    std::ostringstream os;
    os << "entries has " << entries.size() << " elements, expected " << d * d;
    throw SchemaError(os.str());
  }
  ComplexMatrix m(d, d);
  int idx = 0;
  for (const json& pair : entries) {
    if (!pair.is_array() || pair.size() != 2)
      throw SchemaError("each entry must be a [re, im] pair");
    const double re = require_number(pair.at(0), "entry real part");
    const double im = require_number(pair.at(1), "entry imaginary part");
    m(idx / d, idx % d) = std::complex<double>(re, im);
    ++idx;
  }
  try {
    return DensityMatrix(da, db, std::move(m));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
}

DensityMatrix read_state_file(const std::string& path) {
  return parse_state_input(load_json(path));
}

ordered_json spectrum_report_json(const SpectrumReport& report) {
  ordered_json doc;
  doc["eigenvalues"] = report.eigenvalues;
  doc["one_norm"] = report.one_norm;
  doc["negativity"] = report.negativity;
  doc["log_negativity"] = report.log_negativity;
  doc["nonzero_count"] = report.nonzero_count;
  return doc;
}

ordered_json bound_json(const NegativityBound& bound) {
  ordered_json doc;
  doc["direction"] = to_string(bound.direction);
  doc["order"] = bound.order;
  doc["negativity"] = bound.negativity;
  doc["one_norm"] = bound.one_norm;
  doc["log_negativity"] = bound.log_negativity;
  doc["quality"] = to_string(bound.quality);
  const PrincipalRepresentation& rep = bound.representation;
  if (!rep.roots.empty()) {
    ordered_json r;
    r["roots"] = rep.roots;
    r["weights"] = rep.weights;
    r["endpoint_root"] = rep.has_endpoint_root;
    r["residuals"] = rep.residuals;
    doc["representation"] = std::move(r);
  }
  return doc;
}

ordered_json classification_json(const Classification& c) {
  ordered_json doc;
  doc["verdict"] = to_string(c.verdict);
  doc["mode"] = c.mode == ClassifyMode::with_c0 ? "with_c0" : "shifted_precheck";
  ordered_json details = ordered_json::array();
  for (const MinorRecord& rec : c.details) {
    ordered_json item;
    item["id"] = rec.id;
    item["det"] = rec.det;
    item["scale"] = rec.scale;
    item["status"] = rec.status == MinorStatus::ok      ? "ok"
                     : rec.status == MinorStatus::tight ? "tight"
                                                        : "violated";
    details.push_back(std::move(item));
  }
  doc["details"] = std::move(details);
  return doc;
}

ordered_json backstep_json(const BackstepResult& r) {
  ordered_json doc;
  doc["mu0_bound"] = r.mu0_bound;
  doc["active_constraint"] = r.active_constraint;
  ordered_json cands = ordered_json::array();
  for (const BackstepCandidate& c : r.all_candidates) {
    ordered_json item;
    item["constraint"] = c.constraint_id;
    item["threshold"] = c.threshold;
    item["type"] = c.lower_type ? "lower" : "upper";
    cands.push_back(std::move(item));
  }
  doc["candidates"] = std::move(cands);
  if (r.mu0_stderr) doc["mu0_stderr"] = *r.mu0_stderr;
  return doc;
}

ordered_json bound_report_json(const BoundReport& report) {
  ordered_json doc;

  ordered_json findings = ordered_json::array();
  for (const Finding& f : report.findings) {
    ordered_json item;
    item["severity"] = f.severity == Severity::error ? "error" : "warning";
    item["order"] = f.order;
    item["message"] = f.message;
    findings.push_back(std::move(item));
  }
  doc["findings"] = std::move(findings);

  ordered_json orders = ordered_json::array();
  for (const OrderAttempt& attempt : report.orders) {
    ordered_json item;
    item["order"] = attempt.order;
    if (attempt.precheck)
      item["precheck"] = classification_json(*attempt.precheck);
    if (attempt.backstep) item["backstep"] = backstep_json(*attempt.backstep);
    if (attempt.extended_check)
      item["extended_check"] = classification_json(*attempt.extended_check);
    if (attempt.bound) item["bound"] = bound_json(*attempt.bound);
    if (!attempt.notes.empty()) item["notes"] = attempt.notes;
    if (attempt.failure) item["failure"] = *attempt.failure;
    orders.push_back(std::move(item));
  }
  doc["orders"] = std::move(orders);

  doc["exp_fit"] = report.exp_fit ? bound_json(*report.exp_fit) : ordered_json();
  ordered_json best;
  best["lower"] = report.best_lower ? bound_json(*report.best_lower) : ordered_json();
  best["upper"] = report.best_upper ? bound_json(*report.best_upper) : ordered_json();
  doc["chosen_best"] = std::move(best);

  ordered_json trace = ordered_json::array();
  for (const DegradationEvent& ev : report.degradation_trace) {
    ordered_json item;
    item["order"] = ev.order;
    item["reason"] = ev.reason;
    trace.push_back(std::move(item));
  }
  doc["degradation_trace"] = std::move(trace);
  doc["bound_crossing"] = report.bound_crossing;
  doc["no_feasible_order"] = report.no_feasible_order;
  return doc;
}

}  // namespace negmom
