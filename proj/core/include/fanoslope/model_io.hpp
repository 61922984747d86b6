#ifndef FANOSLOPE_MODEL_IO_HPP
#define FANOSLOPE_MODEL_IO_HPP

#include <string>

#include <json.hpp>

#include "fanoslope/model.hpp"

namespace fanoslope::fanomodel {

/// Parses a model document. Field names are fixed; unknown fields are
/// rejected. Rationals are "p" or "p/q" strings; tensor entries are
/// {"indices": "H1 H1 H2", "value": "2"} with basis names space-joined in
/// non-decreasing basis order.
VarietyModel model_from_json(const nlohmann::json& doc);
VarietyModel load_model_file(const std::string& path);

nlohmann::json model_to_json(const VarietyModel& m);

/// Resolves a CLI divisor spec: a named divisor, or comma-separated
/// rational coordinates in basis order ("-1,1,1").
DivisorClass parse_divisor_spec(const VarietyModel& m, const std::string& spec);

} // namespace fanoslope::fanomodel

#endif
