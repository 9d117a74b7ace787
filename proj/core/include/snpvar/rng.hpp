#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace snpvar {

/// Finalizer used to scramble seeds and derive independent substreams.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// SplitMix64 stream. One 64-bit word of state, cheap to fork by
/// deriving a fresh seed per task, which keeps parallel simulations
/// independent of scheduling order.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        return mix64(z);
    }

    /// Uniform draw on the open interval (0,1); never returns 0 or 1,
    /// so it can be fed directly into quantile functions.
    double next_unit() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

/// Derive a substream seed from a root seed and an index (worker id,
/// replicate id, Monte Carlo iteration, ...).
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) {
    return mix64(root + 0x9e3779b97f4a7c15ull * (index + 1));
}

/// Derive a substream seed from a root seed and a stream name
/// ("sim", "boot", "mc", ...).
inline std::uint64_t derive_seed(std::uint64_t root, std::string_view name) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char ch : name) {
        h ^= static_cast<unsigned char>(ch);
        h *= 0x100000001b3ull;
    }
    return mix64(root ^ h);
}

namespace detail {

// Product-of-uniforms inversion; requires exp(-lambda) far from the
// denormal range, so callers must chunk large means.
inline std::uint64_t poisson_small(RngStream& rng, double lambda) {
    const double threshold = std::exp(-lambda);
    double p = 1.0;
    std::uint64_t k = 0;
    do {
        ++k;
        p *= rng.next_unit();
    } while (p > threshold);
    return k - 1;
}

} // namespace detail

/// Poisson draw. Means above 200 are split into fixed-size chunks
/// (Poisson additivity), keeping the draw sequence reproducible for a
/// given stream regardless of the mean.
inline std::uint64_t poisson_draw(RngStream& rng, double lambda) {
    if (!(lambda > 0.0)) return 0;
    std::uint64_t total = 0;
    while (lambda > 200.0) {
        total += detail::poisson_small(rng, 200.0);
        lambda -= 200.0;
    }
    return total + detail::poisson_small(rng, lambda);
}

} // namespace snpvar
