#include "isodescent/cli.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace isodescent;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "isodescent");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    auto* old_out = std::cout.rdbuf(out.rdbuf());
    auto* old_err = std::cerr.rdbuf(err.rdbuf());
    int code = cli::run(static_cast<int>(argv.size()), argv.data());
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
    return {code, out.str(), err.str()};
}

// Every string leaf that looks numeric must parse back to a canonical rational.
void check_rationals(const json& j, const std::string& path, size_t& count) {
    if (j.is_object()) {
        for (auto& [k, v] : j.items()) check_rationals(v, path + "." + k, count);
    } else if (j.is_array()) {
        for (size_t i = 0; i < j.size(); ++i) check_rationals(j[i], path + "[" + std::to_string(i) + "]", count);
    } else if (j.is_string()) {
        auto s = j.get<std::string>();
        bool numeric = !s.empty() && s.find_first_not_of("-0123456789/") == std::string::npos;
        if (numeric) {
            CAPTURE(path);
            REQUIRE(to_string(parse_rational(s)) == s);
            ++count;
        }
    }
}

std::filesystem::path temp_file(const char* name) {
    auto p = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove(p);
    return p;
}

}  // namespace

TEST_CASE("analyze emits schema v1 JSON whose rationals round-trip") {
    auto r = run_cli({"analyze", "--t", "8", "--height", "16"});
    REQUIRE(r.code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["schema_version"] == "1");
    CHECK(doc["input"]["parameter"] == "t");
    CHECK(doc["report"]["t"] == "8");
    CHECK(doc["report"]["rank"]["lower"] == 1);
    CHECK(doc["report"]["rank"]["upper"] == 1);
    CHECK(doc["report"]["selmer"]["phi_hat"]["log2_size"] == 2);
    CHECK(doc["report"]["unresolved"]["count"] == 0);
    CHECK_FALSE(doc.contains("statistics"));
    size_t count = 0;
    check_rationals(doc, "", count);
    CHECK(count > 10);
    bool found = false;
    for (auto& p : doc["report"]["found_points"])
        if (p["d_class"] == "1*2^2" && p["source"] == "search") found = true;
    CHECK(found);
}

TEST_CASE("analyze by r with fixtures and no phi4") {
    auto r = run_cli({"analyze", "--r", "11/69", "--height", "5", "--no-phi4", "--fixtures", cli::default_fixtures_path()});
    REQUIRE(r.code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["input"]["parameter"] == "r");
    CHECK(doc["report"]["r"] == "11/69");
    CHECK(doc["report"]["rank"]["lower"] == 2);
    CHECK(doc["report"]["rank"]["upper"] == 4);
    CHECK(doc["report"]["selmer"]["phi_hat"].is_null());
    CHECK(doc["report"]["size_relation"]["predicted_log2"] == 11);
}

TEST_CASE("output is identical with a cold and a warm cache") {
    auto cache = temp_file("isodescent_cli_cache.jsonl");
    std::vector<std::string> args = {"analyze", "--t", "3/2", "--height", "10", "--cache", cache.string()};
    auto cold = run_cli(args);
    REQUIRE(cold.code == 0);
    CHECK(std::filesystem::file_size(cache) > 0);
    auto warm = run_cli(args);
    REQUIRE(warm.code == 0);
    CHECK(cold.out == warm.out);
    auto plain = run_cli({"analyze", "--t", "3/2", "--height", "10"});
    CHECK(plain.out == cold.out);
    args.push_back("--stats");
    auto stats = run_cli(args);
    auto doc = json::parse(stats.out);
    CHECK(doc["statistics"]["cache_misses"] == 0);
    CHECK(doc["statistics"]["cache_hits"].get<long>() > 0);
    std::filesystem::remove(cache);
}

TEST_CASE("parallel jobs give the same report") {
    auto a = run_cli({"analyze", "--t", "5", "--height", "10"});
    auto b = run_cli({"analyze", "--t", "5", "--height", "10", "--jobs", "4"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("csv and text formats") {
    auto c = run_cli({"analyze", "--t", "8", "--height", "16", "--format", "csv"});
    REQUIRE(c.code == 0);
    CHECK(c.out.rfind("path,value\n", 0) == 0);
    CHECK(c.out.find("report.rank.lower,1\n") != std::string::npos);
    CHECK(c.out.find("schema_version,1\n") != std::string::npos);
    auto t = run_cli({"analyze", "--t", "8", "--height", "16", "--format", "text"});
    REQUIRE(t.code == 0);
    CHECK(t.out.find("rank bounds: 1 <= R <= 1") != std::string::npos);
}

TEST_CASE("selmer subcommand") {
    auto r = run_cli({"selmer", "--t", "8", "--isogeny", "eta", "--format", "json"});
    REQUIRE(r.code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["selmer"]["log2_size"] == 2);
    auto p = run_cli({"selmer", "--t", "3/2"});
    REQUIRE(p.code == 0);
    CHECK(p.out.find("size 2^1") != std::string::npos);
    CHECK(p.out.find("-9") != std::string::npos);
}

TEST_CASE("verify-paper subsets") {
    auto r = run_cli({"verify-paper", "--which", "3.2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    auto t3 = run_cli({"verify-paper", "--which", "table3"});
    CHECK(t3.code == 0);
}

TEST_CASE("exit codes") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"analyze", "--t", "0"}).code == 2);
    CHECK(run_cli({"analyze", "--t", "abc"}).code == 2);
    CHECK(run_cli({"analyze", "--r", "1"}).code == 2);
    CHECK(run_cli({"analyze", "--t", "8", "--r", "2"}).code == 2);
    CHECK(run_cli({"analyze", "--t", "8", "--format", "xml"}).code == 2);
    CHECK(run_cli({"verify-paper", "--which", "table9"}).code == 2);
    CHECK(run_cli({"selmer", "--t", "0"}).code == 2);

    // a corrupted fixture row must fail verification
    auto bad = temp_file("isodescent_bad_fixtures.csv");
    {
        std::ifstream in(cli::default_fixtures_path());
        std::ofstream out(bad);
        std::string line;
        std::getline(in, line);
        out << line << "\n";
        std::getline(in, line);
        out << line << "1\n";
    }
    auto r = run_cli({"verify-paper", "--which", "table3", "--fixtures", bad.string()});
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
    std::filesystem::remove(bad);
}
