#ifndef LYAPQ_REPORT_HPP
#define LYAPQ_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace lyapq {

inline constexpr int report_schema_version = 1;

// One emitted record: the command, its echoed inputs, named numeric outputs
// and run diagnostics. Serializes to a JSON line or to CSV rows; both carry
// the same numbers and are byte-stable for identical configs.
struct ReportRecord {
    std::string command;
    nlohmann::json inputs = nlohmann::json::object();
    nlohmann::json outputs = nlohmann::json::object();
    nlohmann::json diagnostics = nlohmann::json::object();
    // tabular payload (sweep rows, spectrum intervals, verify rows)
    std::vector<std::string> table_columns;
    std::vector<std::vector<nlohmann::json>> table_rows;

    nlohmann::json to_json() const;
    std::string to_json_lines() const;  // record line + one line per table row
    std::string to_csv() const;         // header row + rows; scalar outputs as a one-row table
};

} // namespace lyapq

#endif
