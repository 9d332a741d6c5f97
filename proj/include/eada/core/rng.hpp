#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace eada {

/// Deterministic splittable RNG (splitmix64 core). Streams derived by key are
/// independent of draw order in other streams, which keeps per-sample dataset
/// construction reproducible under any parallel schedule.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(mix(seed ^ 0x9e3779b97f4a7c15ULL)) {}

    /// Child stream keyed by (this stream's seed, key). Does not advance this stream.
    Rng derive(uint64_t key) const { return Rng(mix(state_ ^ mix(key + 0x632be59bd9b4e019ULL))); }
    Rng derive(uint64_t a, uint64_t b) const { return derive(a).derive(b); }

    uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    uint32_t next_u32() { return static_cast<uint32_t>(next_u64() >> 32); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n). Unbiased via rejection.
    uint64_t below(uint64_t n) {
        uint64_t threshold = (0 - n) % n;
        for (;;) {
            uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal (Box-Muller).
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        while (u1 == 0.0) u1 = uniform();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double theta = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    /// Fisher-Yates permutation of [0, n).
    std::vector<int64_t> permutation(int64_t n) {
        std::vector<int64_t> p(n);
        for (int64_t i = 0; i < n; ++i) p[i] = i;
        for (int64_t i = n - 1; i > 0; --i) {
            int64_t j = static_cast<int64_t>(below(static_cast<uint64_t>(i + 1)));
            std::swap(p[i], p[j]);
        }
        return p;
    }

    uint64_t state() const { return state_; }

    /// Rebuilds a stream from a captured state(). Any buffered Box-Muller
    /// spare is dropped, so capture only outside normal() pairs.
    static Rng from_state(uint64_t raw) {
        Rng r(0);
        r.state_ = raw;
        r.have_spare_ = false;
        return r;
    }

  private:
    static uint64_t mix(uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return z;
    }

    uint64_t state_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace eada
