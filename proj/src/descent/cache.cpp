#include "isodescent/descent.hpp"

#include <json.hpp>

#include <fstream>

namespace isodescent {

SolvabilityCache::SolvabilityCache(std::string path) : path_(std::move(path)) {
    if (path_.empty()) return;
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            auto j = nlohmann::json::parse(line);
            table_[j.at("key").get<std::string>()] = j.at("verdict").get<bool>();
        } catch (const nlohmann::json::exception&) {
            // a torn trailing line from an interrupted run is skipped
        }
    }
}

std::optional<bool> SolvabilityCache::lookup(const std::string& key) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = table_.find(key);
    if (it == table_.end()) {
        ++misses_;
        return std::nullopt;
    }
    ++hits_;
    return it->second;
}

void SolvabilityCache::record(const std::string& key, const std::string& t, const std::string& d,
                              const std::string& tag, const std::string& place, bool verdict,
                              const std::string& certificate) {
    std::lock_guard<std::mutex> lock(mu_);
    if (!table_.emplace(key, verdict).second) return;
    if (path_.empty()) return;
    nlohmann::json j{{"key", key},  {"t", t},           {"d", d},
                     {"space", tag}, {"place", place}, {"precision", kMaxRefinementDepth},
                     {"verdict", verdict}, {"certificate", certificate}};
    std::ofstream out(path_, std::ios::app);
    out << j.dump() << "\n";
}

}  // namespace isodescent
