#include "jordanrep/survey.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "jordanrep/polynomial.hpp"

namespace jordanrep {

namespace {

bool same_report(const ImageReport& a, const ImageReport& b) {
    return a.n == b.n && a.dim == b.dim && a.bound == b.bound && a.within_bound == b.within_bound &&
           a.distinct_eigenvalues == b.distinct_eigenvalues && a.semisimple_dim == b.semisimple_dim &&
           a.basic == b.basic && a.local == b.local && a.loops == b.loops && a.radical_dim == b.radical_dim &&
           a.rad2_dim == b.rad2_dim;
}

// Runs body(i) for i in [0, count) across the OpenMP team and rethrows the
// first exception on the calling thread.
template <typename Body>
void parallel_for(std::size_t count, Body body) {
    std::exception_ptr error;
    const auto total = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < total; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(jordanrep_parallel_for_error)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
}

struct Task {
    std::size_t partition_index;
    std::uint64_t seed;
};

std::vector<Task> survey_tasks(const std::vector<Partition>& parts, const SurveyOptions& opts) {
    std::vector<Task> tasks;
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (std::size_t s = 0; s < opts.samples_per_partition; ++s) tasks.push_back({p, opts.base_seed + s});
    return tasks;
}

}  // namespace

bool operator==(const SampleAnalysis& a, const SampleAnalysis& b) {
    if (!(a.partition == b.partition) || a.seed != b.seed || a.relation_holds != b.relation_holds ||
        a.y_nilpotent != b.y_nilpotent || a.word_span != b.word_span)
        return false;
    if (a.image.has_value() != b.image.has_value() || (a.image && !same_report(*a.image, *b.image))) return false;
    if (a.endo.has_value() != b.endo.has_value()) return false;
    return !a.endo || (a.endo->absolutely_indecomposable == b.endo->absolutely_indecomposable &&
                       a.endo->semisimple_dim == b.endo->semisimple_dim);
}

SampleAnalysis analyze_sample(const SamplePoint& s, const SurveyOptions& opts) {
    SampleAnalysis out{s.partition, s.seed, false, false, std::nullopt, std::nullopt, std::nullopt};
    out.relation_holds = check_relation(s.x, s.y);
    out.y_nilpotent = is_nilpotent(s.y);
    if (!out.relation_holds) return out;
    const Representation rho(s.x, s.y);
    if (opts.image) {
        const MatrixAlgebra alg = generated_subalgebra(rho.x(), rho.y());
        out.image = image_report(rho, alg);
        out.word_span = word_span_dim(rho.x(), rho.y(), 2 * rho.n());
    }
    if (opts.endomorphisms) out.endo = indecomposability_class(rho);
    return out;
}

std::vector<Stratum> strata_table_serial(std::size_t n) {
    std::vector<Stratum> out;
    for (const auto& p : partitions(n)) out.push_back(make_stratum(p));
    return out;
}

std::vector<Stratum> strata_table_parallel(std::size_t n) {
    const auto parts = partitions(n);
    std::vector<std::optional<Stratum>> slots(parts.size());
    parallel_for(parts.size(), [&](std::size_t i) { slots[i] = make_stratum(parts[i]); });
    std::vector<Stratum> out;
    out.reserve(slots.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

std::vector<SamplePoint> sample_batch_serial(const Partition& p, std::uint64_t first_seed, std::size_t count,
                                             long entry_bound) {
    const FiberSolution fiber = solve_fiber(p);
    std::vector<SamplePoint> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(sample_point(p, fiber, first_seed + i, entry_bound));
    return out;
}

std::vector<SamplePoint> sample_batch_parallel(const Partition& p, std::uint64_t first_seed, std::size_t count,
                                               long entry_bound) {
    const FiberSolution fiber = solve_fiber(p);
    std::vector<std::optional<SamplePoint>> slots(count);
    parallel_for(count, [&](std::size_t i) { slots[i] = sample_point(p, fiber, first_seed + i, entry_bound); });
    std::vector<SamplePoint> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

std::vector<SampleAnalysis> survey_serial(const std::vector<Partition>& parts, const SurveyOptions& opts) {
    std::vector<FiberSolution> fibers;
    for (const auto& p : parts) fibers.push_back(solve_fiber(p));
    std::vector<SampleAnalysis> out;
    for (const auto& t : survey_tasks(parts, opts)) {
        const auto& p = parts[t.partition_index];
        out.push_back(analyze_sample(sample_point(p, fibers[t.partition_index], t.seed, opts.entry_bound), opts));
    }
    return out;
}

std::vector<SampleAnalysis> survey_parallel(const std::vector<Partition>& parts, const SurveyOptions& opts) {
    std::vector<std::optional<FiberSolution>> fibers(parts.size());
    parallel_for(parts.size(), [&](std::size_t i) { fibers[i] = solve_fiber(parts[i]); });
    const auto tasks = survey_tasks(parts, opts);
    std::vector<std::optional<SampleAnalysis>> slots(tasks.size());
    parallel_for(tasks.size(), [&](std::size_t i) {
        const auto& t = tasks[i];
        const auto& p = parts[t.partition_index];
        slots[i] = analyze_sample(sample_point(p, *fibers[t.partition_index], t.seed, opts.entry_bound), opts);
    });
    std::vector<SampleAnalysis> out;
    out.reserve(slots.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

int worker_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace jordanrep
