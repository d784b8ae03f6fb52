#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace jordanrep {

struct RunConfig {
    std::uint64_t seed = 0;
    std::size_t max_n = 6;
    std::size_t samples_per_stratum = 20;
    long entry_bound = 3;
    bool json = false;
};

/// Throws InputError unless max_n >= 1 and samples_per_stratum >= 1.
void validate(const RunConfig& config);

struct ClaimResult {
    std::string id;
    std::string title;
    bool pass = false;
    std::string witness;
};

struct VerifyReport {
    std::vector<ClaimResult> claims;

    bool all_pass() const;
    /// 0 when every claim passes, 2 otherwise.
    int exit_code() const { return all_pass() ? 0 : 2; }
};

/// Runs every structural check up to config.max_n. Failures are recorded in
/// the report, never thrown. Deterministic in the config.
VerifyReport verify_suite(const RunConfig& config);

void print_report(const VerifyReport& report, std::ostream& out);
void to_json(nlohmann::json& j, const VerifyReport& report);

/// Number of partitions of n by the standard recurrence on the largest part.
std::size_t partition_count(std::size_t n);

}  // namespace jordanrep
