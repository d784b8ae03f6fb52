#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>

#include "jordanrep/rational.hpp"

namespace jordanrep {

/// splitmix64 finalizer, used to fold seeds and keys into one engine seed.
std::uint64_t splitmix64(std::uint64_t x);

/// Deterministic generator: std::mt19937_64 (fully specified by the
/// standard) plus a portable bounded draw, so sample streams reproduce
/// across standard libraries. std::uniform_int_distribution is avoided on
/// purpose since its algorithm is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    /// Folds every key into the seed with splitmix64.
    static Rng keyed(std::span<const std::uint64_t> keys);
    static Rng keyed(std::initializer_list<std::uint64_t> keys) {
        return keyed(std::span<const std::uint64_t>(keys.begin(), keys.size()));
    }

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi] by rejection on the top remainder.
    long uniform(long lo, long hi);

    /// numerator in [-bound, bound], denominator in [1, bound].
    Rational rational(long bound);

    /// Nonzero rational with the same ranges.
    Rational nonzero_rational(long bound);

private:
    std::mt19937_64 engine_;
};

}  // namespace jordanrep
