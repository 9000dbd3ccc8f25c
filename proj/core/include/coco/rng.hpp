#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace coco {

/// splitmix64 finalizer; the de-facto standard 64-bit mixer.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Derives an independent stream seed from (base, a, b, c) counters.
/// Used to split the scenario seed per purpose/step/trial so that the
/// consumption order in one stream can never perturb another.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0,
                                 std::uint64_t c = 0) {
    constexpr std::uint64_t golden = 0x9e3779b97f4a7c15ULL;
    std::uint64_t h = mix64(base + golden);
    h = mix64(h ^ (a + golden));
    h = mix64(h ^ (b + golden));
    h = mix64(h ^ (c + golden));
    return h;
}

/// Deterministic random generator with a fixed Gaussian transform.
///
/// All draws are fully specified: mt19937_64 for the integer stream, a fixed
/// 53-bit mapping to [0,1), and Box-Muller for Gaussians (two uniforms per
/// draw, no caching), so traces are bit-reproducible across runs and builds.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n).
    std::uint64_t uniform_index(std::uint64_t n) { return gen_() % n; }

    /// Standard normal via Box-Muller; consumes exactly two uniforms.
    double gaussian() {
        const double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        constexpr double two_pi = 6.283185307179586476925286766559;
        return r * std::cos(two_pi * u2);
    }

  private:
    std::mt19937_64 gen_;
};

}  // namespace coco
