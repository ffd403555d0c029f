#include "bigcell/json_io.hpp"

namespace bigcell {

ordered_json mat_entries_to_json(const Mat& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json group_element_to_json(const GroupElement& g) {
    FieldRef f = g.m.field();
    ordered_json j;
    j["family"] = family_name(g.family);
    j["n"] = g.n;
    j["p"] = f.p;
    j["e"] = f.e;
    j["entries"] = mat_entries_to_json(g.m);
    return j;
}

GroupElement group_element_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("matrix JSON: expected an object");
    for (const char* key : {"family", "n", "p", "entries"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("matrix JSON: missing field \"") + key + "\"");
    Family family = family_from_name(j.at("family").get<std::string>());
    int n = j.at("n").get<int>();
    int p = j.at("p").get<int>();
    int e = j.contains("e") ? j.at("e").get<int>() : 1;
    const FieldRef f{p, e};
    const auto& entries = j.at("entries");
    if (!entries.is_array() || static_cast<int>(entries.size()) != n)
        throw std::invalid_argument("matrix JSON: \"entries\" must be an n x n array");
    Mat m = Mat::zero(n, n, f);
    for (int i = 0; i < n; ++i) {
        const auto& row = entries.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw std::invalid_argument("matrix JSON: row " + std::to_string(i) +
                                        " must have n entries");
        for (int k = 0; k < n; ++k) {
            try {
                m.at(i, k) = parse_scalar(row.at(static_cast<std::size_t>(k)).get<std::string>(), f);
            } catch (const std::invalid_argument& err) {
                throw std::invalid_argument("matrix JSON: entry (" + std::to_string(i) + "," +
                                            std::to_string(k) + "): " + err.what());
            }
        }
    }
    return make_group_element(family, n, std::move(m));
}

std::vector<GroupElement> reps_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("reps JSON: expected an array of matrices");
    std::vector<GroupElement> out;
    out.reserve(j.size());
    for (const auto& item : j) out.push_back(group_element_from_json(item));
    return out;
}

ordered_json report_to_json(const SuiteReport& report) {
    ordered_json j;
    j["suite"] = report.suite;
    ordered_json checks = ordered_json::array();
    for (const auto& c : report.checks) {
        ordered_json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    j["pass"] = report.pass();
    return j;
}

} // namespace bigcell
