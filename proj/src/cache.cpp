#include "ktlift/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <unordered_map>

#include "json.hpp"

namespace ktlift::lr_cache {

namespace {

struct State {
    std::mutex mu;
    std::unordered_map<std::string, std::int64_t> map;
    std::uint64_t hits = 0;
    std::uint64_t misses = 0;
};

State& state() {
    static State s;
    return s;
}

} // namespace

bool lookup(const std::string& key, std::int64_t& out) {
    State& s = state();
    std::lock_guard<std::mutex> lock(s.mu);
    auto it = s.map.find(key);
    if (it == s.map.end()) {
        ++s.misses;
        return false;
    }
    ++s.hits;
    out = it->second;
    return true;
}

void insert(const std::string& key, std::int64_t value) {
    State& s = state();
    std::lock_guard<std::mutex> lock(s.mu);
    auto [it, fresh] = s.map.emplace(key, value);
    if (!fresh && it->second != value) {
        std::abort(); // cache corruption: same key, different value
    }
}

std::size_t size() {
    State& s = state();
    std::lock_guard<std::mutex> lock(s.mu);
    return s.map.size();
}

std::uint64_t hits() {
    State& s = state();
    std::lock_guard<std::mutex> lock(s.mu);
    return s.hits;
}

std::uint64_t misses() {
    State& s = state();
    std::lock_guard<std::mutex> lock(s.mu);
    return s.misses;
}

void clear_memory() {
    State& s = state();
    std::lock_guard<std::mutex> lock(s.mu);
    s.map.clear();
    s.hits = s.misses = 0;
}

std::string default_path() {
    if (const char* env = std::getenv("KTLIFT_CACHE")) return env;
    return "lr_cache.json";
}

bool load(const std::string& path) {
    std::ifstream in(path);
    if (!in) return false;
    nlohmann::json j;
    try {
        in >> j;
        if (!j.is_object() || j.value("version", -1) != kFileVersion) return false;
        const auto& entries = j.at("entries");
        if (!entries.is_object()) return false;
        State& s = state();
        std::lock_guard<std::mutex> lock(s.mu);
        for (auto it = entries.begin(); it != entries.end(); ++it) {
            if (!it.value().is_number_integer()) return false;
            s.map[it.key()] = it.value().get<std::int64_t>();
        }
    } catch (const nlohmann::json::exception&) {
        return false;
    }
    return true;
}

void save(const std::string& path) {
    nlohmann::json entries = nlohmann::json::object();
    {
        State& s = state();
        std::lock_guard<std::mutex> lock(s.mu);
        for (const auto& [k, v] : s.map) entries[k] = v;
    }
    nlohmann::json j;
    j["version"] = kFileVersion;
    j["entries"] = std::move(entries);
    std::ofstream out(path);
    out << j.dump() << '\n';
}

} // namespace ktlift::lr_cache
