#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "incorl/errors.hpp"

namespace incorl {

// SplitMix64 finalizer, used to derive child stream keys.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seeded random stream. The engine is std::mt19937_64 (bit-exact everywhere
// by the standard); all sampling on top of it is implemented here so results
// do not depend on the standard library's distribution internals.
//
// Streams form a tree: fork(id) derives an independent child stream without
// consuming state, so per-worker / per-task streams are reproducible given
// (master seed, path of ids).
class RngStream {
public:
    explicit RngStream(std::uint64_t key) : key_(key), gen_(splitmix64(key)) {}

    RngStream fork(std::uint64_t id) const {
        return RngStream(splitmix64(key_ ^ (0x9e3779b97f4a7c15ULL * (id + 1))));
    }
    RngStream fork(std::uint64_t a, std::uint64_t b) const { return fork(a).fork(b); }
    RngStream fork(std::uint64_t a, std::uint64_t b, std::uint64_t c) const {
        return fork(a).fork(b).fork(c);
    }

    std::uint64_t key() const { return key_; }

    std::uint64_t next_u64() { return gen_(); }

    // Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Unbiased integer on [0, n) via rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw ConfigError("RngStream::below: n must be positive");
        const std::uint64_t threshold = (0 - n) % n;
        std::uint64_t x = next_u64();
        while (x < threshold) x = next_u64();
        return x % n;
    }

    int uniform_int(int lo, int hi) { // inclusive bounds
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // Standard normal via Box-Muller; the spare value is cached.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        // u1 in (0, 1] so log() is finite.
        const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    // Normal truncated to [-2, 2] standard deviations, by resampling.
    double truncated_normal() {
        double z = normal();
        while (z < -2.0 || z > 2.0) z = normal();
        return z;
    }

    // Draws k distinct indices from [0, n), uniformly without replacement,
    // in random order (partial Fisher-Yates).
    std::vector<int> sample_without_replacement(int n, int k) {
        if (k > n) throw InsufficientDataError("sample_without_replacement: k > n");
        std::vector<int> pool(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
        std::vector<int> out(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            const int j = i + static_cast<int>(below(static_cast<std::uint64_t>(n - i)));
            std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
            out[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(i)];
        }
        return out;
    }

    // In-place Fisher-Yates shuffle.
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t key_;
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace incorl
