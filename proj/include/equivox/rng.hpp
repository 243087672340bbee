// Deterministic, seedable randomness used by all search drivers.
//
// Streams are derived from (seed, stream index) with splitmix64, so a trial's
// draws depend only on its index, never on thread scheduling.

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace equivox {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// xoshiro-style generator seeded via splitmix64; good enough statistics for
// property sweeps and fully reproducible from a 64-bit seed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        s_[0] = splitmix64(seed);
        s_[1] = splitmix64(s_[0] ^ 0x1234567898765432ULL);
        s_[2] = splitmix64(s_[1] + 0x9e3779b97f4a7c15ULL);
        s_[3] = splitmix64(s_[2] ^ seed);
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
    }

    // Per-trial stream: independent of how trials are scheduled.
    static Rng stream(std::uint64_t seed, std::uint64_t index) {
        return Rng(splitmix64(seed ^ splitmix64(index + 0x51ed2701ULL)));
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform in [0,1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

    // Standard normal via Box-Muller (deterministic across platforms).
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u = 0.0;
        do { u = uniform(); } while (u <= 0.0);
        const double v = uniform();
        const double r = std::sqrt(-2.0 * std::log(u));
        const double a = 6.283185307179586476925286766559 * v;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    // Random point of the probability simplex (exponential spacings).
    std::vector<double> simplex(std::size_t d) {
        std::vector<double> v(d);
        double total = 0.0;
        for (auto& x : v) {
            double u = 0.0;
            do { u = uniform(); } while (u <= 0.0);
            x = -std::log(u);
            total += x;
        }
        for (auto& x : v) x /= total;
        return v;
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t s_[4];
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace equivox
