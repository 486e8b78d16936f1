#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace elax {

/// The single random source of the artifact. All randomness in an
/// experiment flows from one seed through this generator, so runs are
/// reproducible bit-for-bit.
///
/// uniform01: top 53 bits of mt19937_64 mapped to (0,1].
/// gaussian:  Box-Muller on consecutive uniform draws.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform01() {
        // in (0, 1]: avoids log(0) in Box-Muller
        return (static_cast<double>(eng_() >> 11) + 1.0) * 0x1.0p-53;
    }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace elax
