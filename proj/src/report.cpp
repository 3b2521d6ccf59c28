#include "lyapq/report.hpp"

#include <sstream>

namespace lyapq {

nlohmann::json ReportRecord::to_json() const {
    nlohmann::json j;
    j["schema_version"] = report_schema_version;
    j["command"] = command;
    j["inputs"] = inputs;
    j["outputs"] = outputs;
    j["diagnostics"] = diagnostics;
    if (!table_columns.empty()) {
        j["table"] = {{"columns", table_columns}, {"rows", nlohmann::json::array()}};
        for (const auto& row : table_rows) j["table"]["rows"].push_back(row);
    }
    return j;
}

std::string ReportRecord::to_json_lines() const {
    nlohmann::json head = to_json();
    head.erase("table");
    std::ostringstream os;
    os << head.dump() << "\n";
    for (const auto& row : table_rows) {
        nlohmann::json line = nlohmann::json::object();
        for (size_t i = 0; i < table_columns.size() && i < row.size(); ++i) line[table_columns[i]] = row[i];
        os << line.dump() << "\n";
    }
    return os.str();
}

namespace {
std::string csv_cell(const nlohmann::json& v) {
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (s.find_first_of(",\"\n") != std::string::npos) {
            std::string quoted = "\"";
            for (char ch : s) {
                if (ch == '"') quoted += '"';
                quoted += ch;
            }
            quoted += '"';
            return quoted;
        }
        return s;
    }
    return v.dump();
}
} // namespace

std::string ReportRecord::to_csv() const {
    std::ostringstream os;
    if (!table_columns.empty()) {
        for (size_t i = 0; i < table_columns.size(); ++i)
            os << (i ? "," : "") << csv_cell(table_columns[i]);
        os << "\n";
        for (const auto& row : table_rows) {
            for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
            os << "\n";
        }
        return os.str();
    }
    // scalar outputs become a single-row table
    size_t i = 0;
    for (auto it = outputs.begin(); it != outputs.end(); ++it, ++i) os << (i ? "," : "") << it.key();
    os << "\n";
    i = 0;
    for (auto it = outputs.begin(); it != outputs.end(); ++it, ++i) os << (i ? "," : "") << csv_cell(it.value());
    os << "\n";
    return os.str();
}

} // namespace lyapq
