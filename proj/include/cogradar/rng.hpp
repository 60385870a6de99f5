#pragma once

#include <cmath>
#include <cstdint>

namespace cogradar {

/// Deterministic keyed random stream built on splitmix64.
///
/// A stream is identified by (seed, a, b); draws depend only on the key and
/// the draw counter, so per-trial streams keyed by (seed, snr_index, trial)
/// give schedule-independent results under any parallel partitioning.
/// All outputs are fully specified here (no std::*_distribution), so
/// sequences are identical across platforms and standard libraries.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
        state_ = mix(mix(mix(0x9e3779b97f4a7c15ull ^ seed) + a) + b);
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    /// Uniform in [0, 1).
    double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller (both values used).
    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_double();
        while (u1 <= 0.0) u1 = next_double();
        const double u2 = next_double();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace cogradar
