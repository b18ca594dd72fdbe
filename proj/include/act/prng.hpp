#ifndef ACT_PRNG_HPP
#define ACT_PRNG_HPP

#include <cstdint>

#include "act/errors.hpp"

namespace act {

// splitmix64; fixed algorithm so seeded runs reproduce across platforms and
// standard libraries (std::uniform_int_distribution is not portable).
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() { return splitmix64(state_); }

    // Uniform integer in [lo, hi], rejection-sampled (no modulo bias).
    long uniform_int(long lo, long hi) {
        if (lo > hi) throw usage_error("uniform_int: empty range");
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<long>(next());  // full 64-bit range
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return lo + static_cast<long>(v % span);
    }

    double uniform_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Statistically independent stream for worker `index`; used by parallel
    // sampling loops so the schedule cannot affect the draw.
    Rng derived(std::uint64_t index) const {
        std::uint64_t s = state_ + 0x9e3779b97f4a7c15ULL * (index + 0x632be59bd9b4e019ULL);
        return Rng(splitmix64(s));
    }

  private:
    std::uint64_t state_;
};

} // namespace act

#endif
