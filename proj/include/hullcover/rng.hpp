#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "hullcover/geom.hpp"

namespace hullcover {

/// splitmix64 finalizer, used to derive independent per-case seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic generator. Draws doubles straight from the engine bits so
/// results are identical across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() {  // [0, 1)
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::uint64_t bits() { return engine_(); }

    std::size_t index(std::size_t n) {  // [0, n)
        return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
    }

    double normal() {
        // Box-Muller; one value per call keeps the draw order obvious.
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    Point in_unit_disk() {
        const double r = std::sqrt(uniform());
        const double a = uniform(0.0, 6.283185307179586);
        return {r * std::cos(a), r * std::sin(a)};
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace hullcover
