#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace saw {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Deterministic random stream. mt19937_64 is fully specified by the
// standard and uniform_below uses plain rejection, so a (seed, index)
// pair yields the same draws on every platform.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : eng_(seed) {}

    // Stream for worker `index` of a run seeded with `seed`: engine
    // seeds are consecutive splitmix64 outputs, so streams do not
    // collide even for adjacent seeds.
    static RandomStream substream(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t s = seed;
        std::uint64_t v = 0;
        for (std::uint64_t i = 0; i <= index; ++i) v = splitmix64_next(s);
        return RandomStream(v);
    }

    std::uint64_t next() { return eng_(); }

    // Uniform value in [0, n). A forced choice (n == 1) consumes no
    // randomness.
    std::uint32_t uniform_below(std::uint32_t n) {
        if (n == 0) throw std::invalid_argument("uniform_below: empty range");
        if (n == 1) return 0;
        const std::uint64_t lim = (-static_cast<std::uint64_t>(n)) % n;
        for (;;) {
            std::uint64_t r = eng_();
            if (r >= lim) return static_cast<std::uint32_t>(r % n);
        }
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace saw
