#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace mipforge {

// Deterministic RNG used everywhere randomness appears. Distribution code is
// hand-rolled (std:: distributions are implementation-defined) so that equal
// seeds give equal streams on any build of the project.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    uint64_t next_u64() {
        // splitmix64
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53-bit resolution.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n), rejection-free modulo bias is acceptable for
    // n far below 2^64 but we reject anyway to keep streams well defined.
    uint64_t next_below(uint64_t n) {
        if (n == 0) return 0;
        const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % n;
    }

    int next_int(int lo, int hi) {  // inclusive range
        return lo + static_cast<int>(next_below(static_cast<uint64_t>(hi - lo + 1)));
    }

    // Standard normal via Box-Muller (no cached spare; one sample per call).
    double next_normal() {
        double u1 = next_double();
        double u2 = next_double();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

  private:
    uint64_t state_;
};

// Derives an independent substream seed from a master seed and a tuple of
// indices (e.g. per (model, pair, temperature, seed, generation)). FNV-1a
// over the mixed words; collision quality is ample for stream separation.
inline uint64_t substream_seed(uint64_t master, std::initializer_list<uint64_t> indices) {
    uint64_t h = 0xcbf29ce484222325ULL ^ master;
    auto mix = [&h](uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 0x100000001b3ULL;
        }
    };
    mix(master);
    for (uint64_t v : indices) mix(v + 0x9e3779b97f4a7c15ULL);
    return h ? h : 1;
}

inline uint64_t substream_seed(uint64_t master, std::string_view tag) {
    uint64_t h = 0xcbf29ce484222325ULL ^ master;
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h ? h : 1;
}

}  // namespace mipforge
