#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rmrll/errors.hpp"
#include "rmrll/experiments.hpp"

using namespace rmrll;
using nlohmann::json;

namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

json load_schema(const std::string& name) {
    std::ifstream f(std::string(RMRLL_SCHEMA_DIR) + "/" + name);
    REQUIRE(f.good());
    return json::parse(f);
}

bool type_matches(const json& value, const std::string& type) {
    if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
    if (type == "number") return value.is_number();
    if (type == "string") return value.is_string();
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "null") return value.is_null();
    if (type == "boolean") return value.is_boolean();
    return false;
}

// minimal checker for the shipped schemas: required keys, per-key types
// (possibly a union), and the additionalProperties switch
void check_against_schema(const json& value, const json& schema) {
    const std::string top_type = schema.value("type", "object");
    if (top_type == "array") {
        REQUIRE(value.is_array());
        for (const json& item : value) check_against_schema(item, schema.at("items"));
        return;
    }
    REQUIRE(value.is_object());
    for (const auto& req : schema.value("required", json::array()))
        CHECK(value.contains(req.get<std::string>()));
    const json props = schema.value("properties", json::object());
    for (const auto& [key, sub] : value.items()) {
        if (!props.contains(key)) {
            if (!schema.value("additionalProperties", true)) FAIL("unexpected key ", key);
            continue;
        }
        const json& tspec = props.at(key).at("type");
        bool ok = false;
        if (tspec.is_string())
            ok = type_matches(sub, tspec.get<std::string>());
        else
            for (const auto& t : tspec) ok = ok || type_matches(sub, t.get<std::string>());
        CHECK_MESSAGE(ok, "type mismatch for key ", key);
    }
}

} // namespace

TEST_CASE("rates table columns and limits") {
    std::ostringstream out;
    cmd_rates(RatesConfig{1, 0.5, 2, 60}, OutputFormat::Csv, out);
    const auto rows = parse_csv(out.str());
    REQUIRE(rows.size() == 60);  // header + 59 rows
    CHECK(rows[0] == std::vector<std::string>{"m", "d", "z", "r_m", "rate", "asymptote", "gap"});
    const auto& last = rows.back();
    CHECK(last[0] == "60");
    CHECK(std::stod(last[6]) <= 0.05);

    // d = 2 and d = 3 share the asymptote column
    std::ostringstream o2, o3;
    cmd_rates(RatesConfig{2, 0.5, 3, 10}, OutputFormat::Csv, o2);
    cmd_rates(RatesConfig{3, 0.5, 3, 10}, OutputFormat::Csv, o3);
    const auto r2 = parse_csv(o2.str()), r3 = parse_csv(o3.str());
    for (std::size_t i = 1; i < r2.size(); ++i) CHECK(r2[i][5] == r3[i][5]);

    // d = 0 reports the full-code rate
    std::ostringstream o0;
    cmd_rates(RatesConfig{0, 0.5, 8, 8}, OutputFormat::Csv, o0);
    const auto r0 = parse_csv(o0.str());
    CHECK(std::stod(r0[1][4]) == doctest::Approx(163.0 / 256.0));  // dim RM(8,4) = 163

    std::ostringstream oj;
    cmd_rates(RatesConfig{1, 0.5, 2, 5}, OutputFormat::Json, oj);
    const json j = json::parse(oj.str());
    REQUIRE(j.is_array());
    CHECK(j.size() == 4);
    CHECK(j[0]["m"] == 2);

    std::ostringstream sink;
    CHECK_THROWS_AS(cmd_rates(RatesConfig{1, 1.5, 2, 5}, OutputFormat::Csv, sink),
                    std::invalid_argument);
    CHECK_THROWS_AS(cmd_rates(RatesConfig{1, 0.5, 9, 5}, OutputFormat::Csv, sink),
                    std::invalid_argument);
}

TEST_CASE("bounds curve structure and regeneration") {
    std::ostringstream a, b;
    cmd_bounds(BoundsConfig{1, 0.01}, a);
    cmd_bounds(BoundsConfig{1, 0.01}, b);
    CHECK(a.str() == b.str());  // byte-identical regeneration

    const auto rows = parse_csv(a.str());
    REQUIRE(rows.size() == 100);  // header + 99 grid points
    CHECK(rows[0] ==
          std::vector<std::string>{"R", "achievable", "upper_bound", "trivial", "coset_baseline"});
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double R = std::stod(rows[i][0]);
        CHECK(std::stod(rows[i][1]) == doctest::Approx(R / 2).epsilon(1e-9));
    }
    const auto& r20 = rows[20];  // R = 0.20
    CHECK(std::stod(r20[2]) < std::stod(r20[3]));
    const auto& r50 = rows[50];  // R = 0.50
    CHECK(rows[50][2] == rows[50][3]);
    (void)r50;
}

TEST_CASE("simulate determinism and edge channels") {
    SimulateConfig cfg;
    cfg.ms = {5};
    cfg.d = 1;
    cfg.epsilon = 0.3;
    cfg.trials = 200;
    cfg.seed = 11;

    std::ostringstream a, b;
    cmd_simulate(cfg, OutputFormat::Csv, a);
    cmd_simulate(cfg, OutputFormat::Csv, b);
    CHECK(a.str() == b.str());

    cfg.epsilon = 0.0;
    std::ostringstream zero;
    cmd_simulate(cfg, OutputFormat::Csv, zero);
    const auto rows = parse_csv(zero.str());
    CHECK(rows[1][4] == "0");

    // exactly one channel parameter
    SimulateConfig bad = cfg;
    bad.p = 0.1;
    std::ostringstream sink;
    CHECK_THROWS_AS(cmd_simulate(bad, OutputFormat::Csv, sink), std::invalid_argument);

    // BSC above the oracle guard is refused, tiny BSC runs
    SimulateConfig bsc;
    bsc.ms = {7};
    bsc.d = 1;
    bsc.p = 0.05;
    bsc.trials = 10;
    CHECK_THROWS_AS(cmd_simulate(bsc, OutputFormat::Csv, sink), guard_error);
    bsc.ms = {4};
    std::ostringstream ok;
    cmd_simulate(bsc, OutputFormat::Csv, ok);
    CHECK(parse_csv(ok.str()).size() == 2);
}

TEST_CASE("simulate json matches the shipped schema") {
    SimulateConfig cfg;
    cfg.ms = {4, 5};
    cfg.d = 1;
    cfg.epsilon = 0.25;
    cfg.trials = 50;
    cfg.seed = 3;
    std::ostringstream out;
    cmd_simulate(cfg, OutputFormat::Json, out);
    const json rows = json::parse(out.str());
    check_against_schema(rows, load_schema("simulate.schema.json"));
    REQUIRE(rows.size() == 2);
    CHECK(rows[0]["m"] == 4);
    CHECK(rows[1]["m"] == 5);
}

TEST_CASE("oracle report values and schema") {
    std::ostringstream out;
    cmd_oracle(OracleConfig{2, 1}, out);
    const json rep = json::parse(out.str());
    check_against_schema(rep, load_schema("oracle.schema.json"));
    CHECK(rep["constrained_count"] == "4");
    CHECK(rep["filter_count"] == "5");
    CHECK(rep["dim"] == 3);

    std::ostringstream o30;
    cmd_oracle(OracleConfig{3, 0}, o30);
    CHECK(json::parse(o30.str())["constrained_count"] == "1");

    std::ostringstream o42;
    cmd_oracle(OracleConfig{4, 2}, o42);
    const json rep42 = json::parse(o42.str());
    check_against_schema(rep42, load_schema("oracle.schema.json"));
    const auto constrained = std::stoll(rep42["constrained_count"].get<std::string>());
    const auto filtered = std::stoll(rep42["filter_count"].get<std::string>());
    CHECK(constrained >= 1);
    CHECK(filtered >= constrained);
}

TEST_CASE("weights dump") {
    std::ostringstream out;
    cmd_weights(WeightsConfig{2, 1}, OutputFormat::Csv, out);
    const auto rows = parse_csv(out.str());
    REQUIRE(rows.size() == 6);  // header + weights 0..4
    CHECK(rows[1] == std::vector<std::string>{"0", "1"});
    CHECK(rows[3] == std::vector<std::string>{"2", "6"});
    CHECK(rows[5] == std::vector<std::string>{"4", "1"});

    std::ostringstream oj;
    cmd_weights(WeightsConfig{3, 1}, OutputFormat::Json, oj);
    const json j = json::parse(oj.str());
    CHECK(j["dim"] == 4);
    CHECK(j["counts"][4]["count"] == 14);
}

TEST_CASE("channel capacity command") {
    std::ostringstream out;
    cmd_channel_cap(ChannelCapConfig{0.3, std::nullopt, std::nullopt}, OutputFormat::Csv, out);
    const auto rows = parse_csv(out.str());
    CHECK(rows[1][0] == "bec");
    CHECK(std::stod(rows[1][2]) == doctest::Approx(0.7));

    std::ostringstream oj;
    cmd_channel_cap(ChannelCapConfig{std::nullopt, 0.11, std::nullopt}, OutputFormat::Json, oj);
    const json j = json::parse(oj.str());
    CHECK(j["channel"] == "bsc");
    CHECK(std::abs(j["capacity"].get<double>() - 0.5) <= 0.002);

    std::ostringstream sink;
    CHECK_THROWS_AS(
        cmd_channel_cap(ChannelCapConfig{0.3, 0.1, std::nullopt}, OutputFormat::Csv, sink),
        std::invalid_argument);
    CHECK_THROWS_AS(
        cmd_channel_cap(ChannelCapConfig{}, OutputFormat::Csv, sink),
        std::invalid_argument);
}
