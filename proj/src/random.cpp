#include "jordanrep/random.hpp"

#include "jordanrep/error.hpp"

namespace jordanrep {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng Rng::keyed(std::span<const std::uint64_t> keys) {
    std::uint64_t h = 0;
    for (auto k : keys) h = splitmix64(h ^ k);
    return Rng(h);
}

long Rng::uniform(long lo, long hi) {
    if (hi < lo) throw InputError("empty integer range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span + 1) % span;
    std::uint64_t r;
    do {
        r = engine_();
    } while (r > limit);
    return lo + static_cast<long>(r % span);
}

Rational Rng::rational(long bound) {
    const long num = uniform(-bound, bound);
    const long den = uniform(1, bound);
    return {num, den};
}

Rational Rng::nonzero_rational(long bound) {
    Rational r;
    do {
        r = rational(bound);
    } while (r.is_zero());
    return r;
}

}  // namespace jordanrep
