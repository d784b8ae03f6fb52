#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

namespace jordanrep {

inline constexpr const char* kToolVersion = "0.3.0";

struct CacheKey {
    std::string command;  // includes any extra parameters, e.g. "image:samples=20"
    std::size_t n = 0;
    std::string partition;
    std::uint64_t seed = 0;

    friend bool operator==(const CacheKey&, const CacheKey&) = default;
};

struct CacheRecord {
    CacheKey key;
    nlohmann::json payload;
    std::string tool_version;
};

nlohmann::json to_json_line(const CacheRecord& r);
/// nullopt for lines that are not well-formed records.
std::optional<CacheRecord> parse_cache_line(const std::string& line);

/// Append-only JSON-lines result cache in <dir>/results.jsonl.
///
/// Records written by a different tool version never match. A directory
/// that cannot be created or written disables the cache with one warning.
class ResultCache {
public:
    ResultCache() = default;  // disabled
    ResultCache(const std::filesystem::path& dir, std::string tool_version, std::ostream& warnings);

    bool enabled() const { return enabled_; }
    const std::filesystem::path& file() const { return file_; }

    std::optional<nlohmann::json> lookup(const CacheKey& key) const;
    void store(const CacheKey& key, const nlohmann::json& payload);

private:
    bool enabled_ = false;
    std::filesystem::path file_;
    std::string version_;
    std::ostream* warnings_ = nullptr;
};

}  // namespace jordanrep
