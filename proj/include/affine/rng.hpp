#pragma once

#include <cmath>
#include <cstdint>

namespace affine {

// splitmix64-based stream; (seed, stream) fully determines the sequence,
// distinct streams are decorrelated by the seed/stream mixing below.
class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream) {
        state_ = mix(seed + 0x9E3779B97F4A7C15ULL * (stream + 1));
        state_ = mix(state_ ^ mix(stream + 0xBF58476D1CE4E5B9ULL));
    }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    // uniform in [0,1)
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // uniform in (0,1]
    double next_double_pos() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    double next_exp() { return -std::log(next_double_pos()); }

    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u = next_double_pos();
        double v = next_double();
        double r = std::sqrt(-2.0 * std::log(u));
        double c = std::cos(6.283185307179586477 * v);
        double s = std::sin(6.283185307179586477 * v);
        spare_ = r * s;
        have_spare_ = true;
        return r * c;
    }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace affine
