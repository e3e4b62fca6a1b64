#pragma once

#include <cstdint>
#include <cmath>

// Counter-based RNG: every variate is a pure function of (seed, index), so
// samples can be generated in any order by any number of workers and still
// reproduce bit-for-bit.

namespace pcs {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct CounterRng {
    uint64_t seed = 0;

    // uniform in (0,1), never exactly 0
    double uniform(uint64_t index) const {
        uint64_t h = splitmix64(splitmix64(seed ^ 0x5851f42d4c957f2dULL) ^ index);
        return ((h >> 11) + 1.0) * 0x1.0p-53;
    }

    // standard normal via Box-Muller from the (2k, 2k+1) substream of `index`
    double normal(uint64_t index, unsigned k) const {
        double u1 = uniform(index * 64 + 2 * k);
        double u2 = uniform(index * 64 + 2 * k + 1);
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

    // uniform point on S^2 from substream k (uses slots 2k, 2k+1)
    void sphere(uint64_t index, unsigned k, double out[3]) const {
        double z = 2 * uniform(index * 64 + 2 * k) - 1;
        double phi = 6.283185307179586476925287 * uniform(index * 64 + 2 * k + 1);
        double s = std::sqrt(std::max(0.0, 1 - z * z));
        out[0] = s * std::cos(phi);
        out[1] = s * std::sin(phi);
        out[2] = z;
    }
};

}  // namespace pcs
