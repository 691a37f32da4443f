#pragma once

#include <cmath>
#include <cstdint>

namespace rnaforge {

// splitmix64 step; the workhorse behind all deterministic streams here.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline uint64_t fnv1a64(const char* data, size_t len) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (size_t i = 0; i < len; ++i) {
        h ^= static_cast<unsigned char>(data[i]);
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Counter-style stream: the initial state is a pure function of the key
// words, so independently constructed streams for the same key agree no
// matter which thread or batch slot draws from them.
class RngStream {
  public:
    explicit RngStream(uint64_t k0, uint64_t k1 = 0, uint64_t k2 = 0) {
        uint64_t s = k0;
        state_ = splitmix64(s);
        s ^= k1 * 0x9e3779b97f4a7c15ULL;
        state_ ^= splitmix64(s);
        s ^= k2 * 0xc2b2ae3d27d4eb4fULL;
        state_ ^= splitmix64(s);
        // burn one step so near-identical keys decorrelate
        next_u64();
    }

    uint64_t next_u64() { return splitmix64(state_); }

    // uniform in [0, 1)
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // uniform in [0, bound)
    uint64_t next_below(uint64_t bound) {
        // 64-bit multiply-shift; bias is negligible for the bounds used here
        return static_cast<uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

    double next_gaussian() {
        // Box-Muller, one value per call (the twin is discarded to keep
        // the stream stateless with respect to call parity).
        double u1 = next_double();
        double u2 = next_double();
        while (u1 <= 0.0) u1 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

  private:
    uint64_t state_;
};

}  // namespace rnaforge
