#include "jordanrep/cache.hpp"

#include <fstream>
#include <system_error>

namespace jordanrep {

nlohmann::json to_json_line(const CacheRecord& r) {
    return {{"key",
             {{"command", r.key.command}, {"n", r.key.n}, {"partition", r.key.partition}, {"seed", r.key.seed}}},
            {"payload", r.payload},
            {"tool_version", r.tool_version}};
}

std::optional<CacheRecord> parse_cache_line(const std::string& line) {
    const auto j = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object() || !j.contains("key") || !j.contains("payload") ||
        !j.contains("tool_version"))
        return std::nullopt;
    try {
        const auto& k = j.at("key");
        CacheRecord r;
        r.key.command = k.at("command").get<std::string>();
        r.key.n = k.at("n").get<std::size_t>();
        r.key.partition = k.at("partition").get<std::string>();
        r.key.seed = k.at("seed").get<std::uint64_t>();
        r.payload = j.at("payload");
        r.tool_version = j.at("tool_version").get<std::string>();
        return r;
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;
    }
}

ResultCache::ResultCache(const std::filesystem::path& dir, std::string tool_version, std::ostream& warnings)
    : version_(std::move(tool_version)), warnings_(&warnings) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    file_ = dir / "results.jsonl";
    std::ofstream probe(file_, std::ios::app);
    if (ec || !probe) {
        warnings << "warning: cache directory " << dir << " is not writable; caching disabled\n";
        return;
    }
    enabled_ = true;
}

std::optional<nlohmann::json> ResultCache::lookup(const CacheKey& key) const {
    if (!enabled_) return std::nullopt;
    std::ifstream in(file_);
    if (!in) return std::nullopt;
    std::optional<nlohmann::json> hit;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto rec = parse_cache_line(line);
        if (!rec) {
            if (warnings_) *warnings_ << "warning: skipping corrupt cache line " << line_no << " in " << file_ << "\n";
            continue;
        }
        if (rec->key == key && rec->tool_version == version_) hit = std::move(rec->payload);
    }
    return hit;
}

void ResultCache::store(const CacheKey& key, const nlohmann::json& payload) {
    if (!enabled_) return;
    std::ofstream out(file_, std::ios::app);
    if (!out) {
        if (warnings_) *warnings_ << "warning: cannot append to " << file_ << "; caching disabled\n";
        enabled_ = false;
        return;
    }
    out << to_json_line({key, payload, version_}).dump() << '\n';
}

}  // namespace jordanrep
