#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace flagmv {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}
} // namespace detail

// Deterministic random stream. The engine is mt19937_64 (fully specified by
// the standard) and all real-valued transforms are done here from raw 64-bit
// draws, so a given (seed, draw order) reproduces bit-for-bit everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(detail::splitmix64(seed)) {}

    // Independent substream; used for per-batch streams in Monte Carlo.
    static Rng substream(std::uint64_t seed, std::uint64_t index) {
        return Rng(detail::splitmix64(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1))));
    }

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in [0,1), 53-bit resolution.
    double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in (0,1]; safe under log().
    double uniform_pos() { return 1.0 - uniform(); }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    // Standard normal via Box-Muller (no cached spare: draw order stays flat).
    double gaussian() {
        double u = uniform_pos();
        double v = uniform();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586476925286766559 * v);
    }

    bool coin() { return (next_u64() & 1u) != 0; }

private:
    std::mt19937_64 eng_;
};

} // namespace flagmv
