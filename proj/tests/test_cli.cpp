#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lyapq/cli.hpp"

using nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = lyapq::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data_file(const std::string& name) { return std::string(LYAPQ_TEST_DATA) + "/" + name; }

// minimal structural validation against the shipped schema: "type",
// "required" and per-property recursion cover everything the schema uses
bool validates(const json& value, const json& schema) {
    if (schema.contains("type")) {
        const std::string t = schema["type"];
        if (t == "object" && !value.is_object()) return false;
        if (t == "array" && !value.is_array()) return false;
        if (t == "string" && !value.is_string()) return false;
        if (t == "integer" && !value.is_number_integer()) return false;
        if (t == "number" && !value.is_number()) return false;
    }
    if (schema.contains("required"))
        for (const auto& key : schema["required"])
            if (!value.contains(key.get<std::string>())) return false;
    if (schema.contains("properties") && value.is_object()) {
        for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it) {
            if (value.contains(it.key()) && !validates(value[it.key()], it.value())) return false;
        }
    }
    if (schema.contains("items") && value.is_array()) {
        for (const auto& item : value)
            if (!validates(item, schema["items"])) return false;
    }
    return true;
}

json load_schema() {
    std::ifstream in(std::string(LYAPQ_SOURCE_DIR) + "/schema/report.schema.json");
    REQUIRE(in.good());
    json s;
    in >> s;
    return s;
}

} // namespace

TEST_CASE("le on a user-defined identity cocycle") {
    const CliRun r = run({"le", "--matrix", data_file("identity.json"), "--beta", "1/3"});
    REQUIRE(r.code == 0);
    const json rec = json::parse(r.out.substr(0, r.out.find('\n')));
    CHECK(rec["command"] == "le");
    CHECK(rec["outputs"]["backend"] == "rational");
    CHECK(std::abs(rec["outputs"]["le"].get<double>()) < 1e-12);
    CHECK(validates(rec, load_schema()));
}

TEST_CASE("region command emits the full verdict") {
    const CliRun r = run({"region", "--lambda", "1,0.5,0.5"});
    REQUIRE(r.code == 0);
    const json rec = json::parse(r.out.substr(0, r.out.find('\n')));
    CHECK(rec["outputs"]["region"] == "III");
    CHECK(rec["outputs"]["criticality"] == "subcritical");
    CHECK(std::abs(rec["outputs"]["le_on_spectrum"].get<double>()) < 1e-14);
    CHECK(validates(rec, load_schema()));
}

TEST_CASE("duality command") {
    const CliRun r = run({"duality", "--lambda", "0,0.5,0"});
    REQUIRE(r.code == 0);
    const json rec = json::parse(r.out.substr(0, r.out.find('\n')));
    CHECK(rec["outputs"]["dual"][1] == doctest::Approx(2.0));
    CHECK(rec["outputs"]["dual_region"] == "II");
}

TEST_CASE("sweep emits a deterministic table in both formats") {
    const std::vector<std::string> args = {"sweep",  "--model", "harper", "--lambda", "0,0.5,0",
                                           "--beta", "1/5",     "--E",    "1.0",      "--eps-min",
                                           "-0.2",   "--eps-max", "0.2",  "--steps",  "7"};
    const CliRun a = run(args);
    const CliRun b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);  // bit-identical reports for identical configs

    std::vector<std::string> csv_args = args;
    csv_args.insert(csv_args.begin(), {"--format", "csv"});
    const CliRun c = run(csv_args);
    REQUIRE(c.code == 0);
    CHECK(c.out.rfind("eps,le,slope_2pi,kink", 0) == 0);

    // header line of the jsonl report validates against the schema
    const json rec = json::parse(a.out.substr(0, a.out.find('\n')));
    CHECK(validates(rec, load_schema()));
    CHECK(rec["inputs"]["steps"] == 7);
}

TEST_CASE("config file supplies defaults, flags win") {
    const std::string path = std::string(LYAPQ_TEST_DATA) + "/tmp_config.ini";
    {
        std::ofstream cfg(path);
        cfg << "format=csv\n";
    }
    const CliRun from_cfg = run({"--config", path, "region", "--lambda", "0.5,0.5,0.3"});
    REQUIRE(from_cfg.code == 0);
    CHECK(from_cfg.out.find("region") != std::string::npos);
    CHECK(from_cfg.out.find('{') == std::string::npos);  // csv, not json
    const CliRun override_cfg =
        run({"--config", path, "--format", "jsonl", "region", "--lambda", "0.5,0.5,0.3"});
    REQUIRE(override_cfg.code == 0);
    CHECK(override_cfg.out.find('{') == 0);
    std::remove(path.c_str());
}

TEST_CASE("exit codes") {
    CHECK(run({"le", "--model", "nosuch", "--beta", "golden"}).code == 2);
    CHECK(run({"le", "--model", "harper", "--beta", "golden"}).code == 2);  // missing lambda
    CHECK(run({"le", "--lambda", "0,.5,0", "--beta", "bogus"}).code == 2);
    CHECK(run({"le", "--lambda", "-1,.5,0", "--beta", "golden"}).code == 2);
    CHECK(run({"le", "--lambda", "0,.5,0", "--beta", "golden", "--backend", "rational"}).code == 2);
    CHECK(run({"verify", "nosuchpanel"}).code == 2);
    CHECK(run({"spectrum", "--lambda", "0,.5,0", "--method", "floquet", "--beta", "golden"}).code == 2);
    CHECK(run({"nosuchcommand"}).code == 2);
}
