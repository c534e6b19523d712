#ifndef PF_RNG_HPP
#define PF_RNG_HPP

#include <cstdint>

namespace pf {

/// Counter-based deterministic generator (splitmix64 mixing). Draw i of a
/// sequence depends only on (seed, i), so a sweep partitioned across any
/// number of workers reproduces the serial output bit for bit.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t bits(std::uint64_t counter) const {
        std::uint64_t z = seed_ + (counter + 1) * 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform(std::uint64_t counter) const {
        return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double uniform(std::uint64_t counter, double lo, double hi) const {
        return lo + (hi - lo) * uniform(counter);
    }

private:
    std::uint64_t seed_;
};

} // namespace pf

#endif // PF_RNG_HPP
