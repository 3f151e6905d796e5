#pragma once

#include "pdnf/problem.hpp"

#include <json.hpp>

#include <string>

namespace pdnf {

using Json = nlohmann::json;

Json to_json(const Poly& p, const std::vector<std::string>& names);
Json to_json(const VectorField& X, const std::vector<std::string>& names);

/// Runs the pipeline selected by spec.mode and returns the report. Keys are
/// sorted and every number is exact text, so identical specs give identical
/// bytes. Module errors propagate as pdnf::Error.
Json run(const ProblemSpec& spec);

/// run() serialized with two-space indentation and a trailing newline.
std::string run_to_string(const ProblemSpec& spec);

}  // namespace pdnf
