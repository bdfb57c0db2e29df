#pragma once

#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "ffa/errors.hpp"
#include "ffa/version.hpp"

namespace ffa {

inline uint64_t fnv1a64(const std::string& s) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

// Key material covers everything the payload depends on; kCodeVersion makes
// algorithm changes invalidate old entries.
inline std::string cache_key(const std::string& modulus, const std::string& d,
                             const std::string& c, const std::string& op) {
    std::ostringstream os;
    os << modulus << '|' << d << '|' << c << '|' << op << '|' << kCodeVersion;
    std::ostringstream hex;
    hex << std::hex << fnv1a64(os.str());
    return hex.str();
}

struct CacheEntry {
    std::string key;
    std::string created_at;  // ISO 8601 UTC
    int exit_code = 0;
    std::string payload;  // the exact bytes the producing run emitted
};

inline std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

inline std::filesystem::path default_cache_dir() {
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
        return std::filesystem::path(xdg) / "ffa";
    if (const char* home = std::getenv("HOME"))
        return std::filesystem::path(home) / ".cache" / "ffa";
    return std::filesystem::path(".ffa-cache");
}

// One JSON file per entry, named by the key.  A hit replays the stored
// payload byte for byte along with the stored exit code.
class Cache {
  public:
    explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    std::optional<CacheEntry> lookup(const std::string& key) const {
        const std::filesystem::path p = dir_ / (key + ".json");
        std::ifstream in(p, std::ios::binary);
        if (!in) return std::nullopt;
        nlohmann::json j;
        try {
            in >> j;
            CacheEntry e;
            e.key = j.at("key").get<std::string>();
            e.created_at = j.at("created_at").get<std::string>();
            e.exit_code = j.at("exit_code").get<int>();
            e.payload = j.at("payload").get<std::string>();
            if (e.key != key) return std::nullopt;
            return e;
        } catch (const nlohmann::json::exception&) {
            return std::nullopt;  // corrupt entry: treat as a miss
        }
    }

    void store(const CacheEntry& e) const {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        if (ec) throw IoError("cache: cannot create " + dir_.string());
        nlohmann::json j;
        j["created_at"] = e.created_at;
        j["exit_code"] = e.exit_code;
        j["key"] = e.key;
        j["payload"] = e.payload;
        const std::filesystem::path p = dir_ / (e.key + ".json");
        std::ofstream out(p, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cache: cannot write " + p.string());
        out << j.dump(2) << "\n";
    }

    const std::filesystem::path& dir() const { return dir_; }

  private:
    std::filesystem::path dir_;
};

}  // namespace ffa
