#pragma once

#include <cstdint>

namespace usg {

// splitmix64. Portable across platforms, unlike the distributions in <random>,
// so seeded weight initialization is reproducible everywhere.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform in [-scale, scale]
    double next_symmetric(double scale) { return (2.0 * next_double() - 1.0) * scale; }

    // uniform integer in [0, n), n > 0
    uint64_t next_below(uint64_t n) { return next_u64() % n; }

private:
    uint64_t state_;
};

}  // namespace usg
