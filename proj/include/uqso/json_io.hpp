#pragma once

// JSON formats: parameter files, representation dumps and reports.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "uqso/djembed.hpp"
#include "uqso/pbw.hpp"
#include "uqso/reps.hpp"

namespace uqso::io {

using Json = nlohmann::ordered_json;

Json complex_to_json(Complex z);
/// Accepts {"re": x, "im": y}; a bare number is read as a real value.
Complex complex_from_json(const Json& j);

/// {"n", "orderK", "t", "mTop": [...], "h": [{"i","j","value"}...], "c": [...]}
Json params_to_json(const reps::ParamsOmega& omega);
reps::ParamsOmega params_from_json(const Json& j);

/// {"dim", "generators": [{"name", "entries": [[row, col, {"re","im"}]...]}...]}
Json rep_to_json(const std::vector<reps::SparseOperator>& ops);
std::vector<reps::SparseOperator> rep_from_json(const Json& j);

/// [{"relation", "residual"}..., {"commutantDim"}]
Json residual_report_to_json(const reps::ResidualReport& report, std::optional<std::size_t> commutant_dim);

/// [{"check", "mode", "pass", "residual"}...]
Json check_report_to_json(const djembed::CheckReport& report);

/// [{"relation", "exactZero", "residual"}...] with the residual in normal form.
Json relation_report_to_json(const pbw::RelationReport& report);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

} // namespace uqso::io
