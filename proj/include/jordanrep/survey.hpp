#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "jordanrep/imgalg.hpp"
#include "jordanrep/repmod.hpp"
#include "jordanrep/strata.hpp"

namespace jordanrep {

// Batch kernels over (partition, seed) grids. Each kernel has an OpenMP
// version and a serial reference with identical output; results are always
// ordered by partition, then seed, never by completion order.

struct SurveyOptions {
    std::size_t samples_per_partition = 20;
    std::uint64_t base_seed = 0;
    long entry_bound = 3;
    bool image = true;          // image algebra report + word-span oracle
    bool endomorphisms = true;  // End(ρ) semisimple dimension
};

struct SampleAnalysis {
    Partition partition;
    std::uint64_t seed = 0;
    bool relation_holds = false;
    bool y_nilpotent = false;
    std::optional<ImageReport> image;
    std::optional<std::size_t> word_span;  // word_span_dim(X, Y, 2n)
    std::optional<Indecomposability> endo;

    friend bool operator==(const SampleAnalysis& a, const SampleAnalysis& b);
};

SampleAnalysis analyze_sample(const SamplePoint& s, const SurveyOptions& opts);

std::vector<Stratum> strata_table_serial(std::size_t n);
std::vector<Stratum> strata_table_parallel(std::size_t n);

std::vector<SamplePoint> sample_batch_serial(const Partition& p, std::uint64_t first_seed, std::size_t count,
                                             long entry_bound);
std::vector<SamplePoint> sample_batch_parallel(const Partition& p, std::uint64_t first_seed, std::size_t count,
                                               long entry_bound);

std::vector<SampleAnalysis> survey_serial(const std::vector<Partition>& parts, const SurveyOptions& opts);
std::vector<SampleAnalysis> survey_parallel(const std::vector<Partition>& parts, const SurveyOptions& opts);

/// Worker threads the parallel kernels will use.
int worker_threads();

}  // namespace jordanrep
