#include "jordanrep/strata.hpp"

#include <algorithm>
#include <sstream>

#include "jordanrep/error.hpp"
#include "jordanrep/json_io.hpp"
#include "jordanrep/linalg.hpp"
#include "jordanrep/random.hpp"

namespace jordanrep {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw InputError("partition must have at least one part");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0) throw InputError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw InputError("partition parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

Partition Partition::parse(std::string_view text) {
    std::vector<unsigned> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        std::string_view field = text.substr(start, comma - start);
        while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
        if (field.empty() || field.size() > 6 ||
            !std::all_of(field.begin(), field.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw InputError("malformed partition '" + std::string(text) + "' (expected e.g. 3,2,1)");
        parts.push_back(static_cast<unsigned>(std::stoul(std::string(field))));
        start = comma + 1;
    }
    return Partition(std::move(parts));
}

std::string Partition::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    return os.str();
}

std::vector<Partition> partitions(std::size_t n) {
    if (n == 0) throw InputError("partitions of 0 requested; n must be at least 1");
    std::vector<Partition> out;
    std::vector<unsigned> a{static_cast<unsigned>(n)};
    for (;;) {
        out.emplace_back(a);
        // Next in reverse-lex order: strip trailing 1s, decrement the last
        // part k > 1 and refill with parts of size k - 1.
        std::size_t ones = 0;
        while (!a.empty() && a.back() == 1) {
            a.pop_back();
            ++ones;
        }
        if (a.empty()) break;
        const unsigned k = a.back() - 1;
        a.pop_back();
        std::size_t rest = ones + k + 1;
        while (rest >= k) {
            a.push_back(k);
            rest -= k;
        }
        if (rest > 0) a.push_back(static_cast<unsigned>(rest));
    }
    return out;
}

RatMatrix jordan_nilpotent(const Partition& p) {
    RatMatrix j(p.n(), p.n());
    std::size_t offset = 0;
    for (auto size : p.parts()) {
        for (std::size_t i = 0; i + 1 < size; ++i) j(offset + i, offset + i + 1) = 1;
        offset += size;
    }
    return j;
}

std::size_t centralizer_dim_formula(const Partition& p) {
    std::size_t total = 0;
    for (auto a : p.parts())
        for (auto b : p.parts()) total += std::min(a, b);
    return total;
}

FiberSolution solve_fiber(const Partition& p) {
    const std::size_t n = p.n();
    const RatMatrix j = jordan_nilpotent(p);
    const auto sol = solve_affine(commutator_operator(j), (j * j).vec());
    if (!sol)
        throw InvariantViolation("X*J - J*X = J^2 has no solution for partition " + p.str());
    FiberSolution out{RatMatrix::from_vec(sol->particular, n, n), {}};
    out.kernel_basis.reserve(sol->kernel_basis.size());
    for (const auto& k : sol->kernel_basis) out.kernel_basis.push_back(RatMatrix::from_vec(k, n, n));
    return out;
}

std::size_t relation_fiber_dim(const RatMatrix& y) {
    const auto sol = solve_affine(commutator_operator(y), (y * y).vec());
    if (!sol) throw InvariantViolation("X*Y - Y*X = Y^2 has no solution for the given Y");
    return sol->kernel_basis.size();
}

Stratum make_stratum(const Partition& p) {
    const FiberSolution f = solve_fiber(p);
    const std::size_t n = p.n();
    Stratum s{p, 0, f.kernel_basis.size(), 0};
    s.orbit_dim = n * n - f.kernel_basis.size();
    s.total_dim = s.orbit_dim + s.fiber_dim;
    return s;
}

std::vector<Stratum> strata_table(std::size_t n) {
    std::vector<Stratum> out;
    for (const auto& p : partitions(n)) out.push_back(make_stratum(p));
    return out;
}

namespace {

RatMatrix random_integer_matrix(Rng& rng, std::size_t n, long bound) {
    RatMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) g(i, k) = rng.uniform(-bound, bound);
    return g;
}

}  // namespace

SamplePoint sample_point(const Partition& p, const FiberSolution& fiber, std::uint64_t seed, long entry_bound) {
    if (entry_bound < 1) throw InputError("entry_bound must be at least 1");
    std::vector<std::uint64_t> keys{seed, static_cast<std::uint64_t>(entry_bound)};
    keys.insert(keys.end(), p.parts().begin(), p.parts().end());
    Rng rng = Rng::keyed(keys);

    const std::size_t n = p.n();
    long bound = entry_bound;
    RatMatrix g;
    for (int attempt = 0;; ++attempt) {
        if (attempt > 0 && attempt % 64 == 0) bound *= 2;
        g = random_integer_matrix(rng, n, bound);
        if (!determinant(g).is_zero()) break;
    }
    RatMatrix x = fiber.particular;
    const long coefficient_bound = kCoefficientBoundFactor * entry_bound;
    for (const auto& k : fiber.kernel_basis) x += k * rng.rational(coefficient_bound);
    const RatMatrix g_inv = inverse(g);
    return {g * x * g_inv, g * jordan_nilpotent(p) * g_inv, p, seed};
}

SamplePoint sample_point(const Partition& p, std::uint64_t seed, long entry_bound) {
    return sample_point(p, solve_fiber(p), seed, entry_bound);
}

bool is_block_toeplitz(const RatMatrix& m, const Partition& p) {
    if (m.rows() != p.n() || m.cols() != p.n()) throw InputError("matrix size does not match partition");
    std::vector<std::size_t> offsets{0};
    for (auto s : p.parts()) offsets.push_back(offsets.back() + s);
    for (std::size_t bi = 0; bi < p.length(); ++bi)
        for (std::size_t bj = 0; bj < p.length(); ++bj)
            for (std::size_t i = offsets[bi] + 1; i < offsets[bi + 1]; ++i)
                for (std::size_t k = offsets[bj] + 1; k < offsets[bj + 1]; ++k)
                    if (m(i, k) != m(i - 1, k - 1)) return false;
    return true;
}

void to_json(nlohmann::json& j, const Partition& p) { j = p.parts(); }

void to_json(nlohmann::json& j, const Stratum& s) {
    j = {{"partition", s.partition.parts()},
         {"orbit_dim", s.orbit_dim},
         {"fiber_dim", s.fiber_dim},
         {"total_dim", s.total_dim}};
}

}  // namespace jordanrep
