#pragma once

#include <nlohmann/json.hpp>

#include "bigcell/groups.hpp"
#include "bigcell/report.hpp"

namespace bigcell {

using ordered_json = nlohmann::ordered_json;

/// Matrix schema:
/// { "family": "SL", "n": 2, "p": 3, "e": 1, "entries": [["1","1/3"],["0","1"]] }
ordered_json group_element_to_json(const GroupElement& g);
GroupElement group_element_from_json(const nlohmann::json& j);

/// A reps file is a JSON array of matrix objects.
std::vector<GroupElement> reps_from_json(const nlohmann::json& j);

ordered_json report_to_json(const SuiteReport& report);

ordered_json mat_entries_to_json(const Mat& m);

} // namespace bigcell
