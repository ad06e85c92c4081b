#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace qspline {

/// Name recorded in reports so a run can be replayed with the same generator.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64/splitmix64-substreams";

/// One round of splitmix64; used to derive independent substream seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed of substream `stream` of a run seeded with `seed`.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return seed ^ splitmix64(stream + 0x5851F42D4C957F2DULL);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1) built from the top 53 bits; identical across standard libraries.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace qspline
