#pragma once

#include "isodescent/descent.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace isodescent::cli {

inline constexpr const char* kSchemaVersion = "1";

struct InputEcho {
    std::string param;  // "t", "r" or "s"
    Rational value;
    long height = 0;
    std::string fixtures;
};

struct RunStats {
    double seconds = 0;
    size_t cache_hits = 0, cache_misses = 0;
};

nlohmann::json point_json(const CurvePoint& p);
nlohmann::json selmer_json(const SelmerGroup& g);
nlohmann::json report_json(const DescentReport& rep, const InputEcho& in, const RunStats* stats = nullptr);

// One "path,value" line per leaf of the document.
std::string to_csv(const nlohmann::json& doc);
std::string report_text(const DescentReport& rep);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// which: 3.1, 3.2, table1, table2, table3 or all
std::vector<CheckResult> verify_paper(const std::string& which, const std::string& fixtures_path);

// Exit codes: 0 success, 1 verification failure, 2 bad input, 3 precision failure.
int run(int argc, char** argv);

std::string default_fixtures_path();

}  // namespace isodescent::cli
