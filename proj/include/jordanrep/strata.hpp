#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "jordanrep/matrix.hpp"

namespace jordanrep {

/// Weakly decreasing sequence of positive parts.
class Partition {
public:
    /// Throws InputError unless parts is nonempty, positive and weakly decreasing.
    explicit Partition(std::vector<unsigned> parts);

    /// "3,2,1"
    static Partition parse(std::string_view text);

    const std::vector<unsigned>& parts() const { return parts_; }
    std::size_t n() const { return n_; }
    std::size_t length() const { return parts_.size(); }
    bool is_full_block() const { return parts_.size() == 1; }

    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<unsigned> parts_;
    std::size_t n_ = 0;
};

/// All partitions of n in reverse-lexicographic order, starting at (n).
std::vector<Partition> partitions(std::size_t n);

/// Block-diagonal nilpotent Jordan matrix with blocks of the given sizes.
RatMatrix jordan_nilpotent(const Partition& p);

/// Σ_{i,j} min(n_i, n_j): the dimension of the centralizer of J_P.
std::size_t centralizer_dim_formula(const Partition& p);

struct FiberSolution {
    RatMatrix particular;
    /// Basis of the centralizer of J_P.
    std::vector<RatMatrix> kernel_basis;
};

/// Solves X·J − J·X = J² for X with J = jordan_nilpotent(p).
FiberSolution solve_fiber(const Partition& p);

/// Solves X·Y − Y·X = Y² for X given an arbitrary Y. Returns the dimension
/// of the solution space, or throws InvariantViolation if inconsistent.
std::size_t relation_fiber_dim(const RatMatrix& y);

struct Stratum {
    Partition partition;
    std::size_t orbit_dim = 0;
    std::size_t fiber_dim = 0;
    std::size_t total_dim = 0;

    friend bool operator==(const Stratum&, const Stratum&) = default;
};

Stratum make_stratum(const Partition& p);

/// One stratum per partition of n, in partition order.
std::vector<Stratum> strata_table(std::size_t n);

struct SamplePoint {
    RatMatrix x;
    RatMatrix y;
    Partition partition;
    std::uint64_t seed = 0;
};

/// Fiber coefficients are p/q with |p| <= factor·entry_bound and
/// 1 <= q <= factor·entry_bound.
inline constexpr long kCoefficientBoundFactor = 16;

/// Conjugates a random point of the fiber over J_P by a random invertible
/// integer matrix with entries in [-entry_bound, entry_bound] (the box
/// doubles after every 64 singular draws). Deterministic in
/// (p, seed, entry_bound).
SamplePoint sample_point(const Partition& p, std::uint64_t seed, long entry_bound = 3);

/// Same, reusing an already solved fiber.
SamplePoint sample_point(const Partition& p, const FiberSolution& fiber, std::uint64_t seed,
                         long entry_bound = 3);

/// True when every block of m (blocks cut by the partition) is constant
/// along its diagonals.
bool is_block_toeplitz(const RatMatrix& m, const Partition& p);

void to_json(nlohmann::json& j, const Partition& p);
void to_json(nlohmann::json& j, const Stratum& s);

}  // namespace jordanrep
