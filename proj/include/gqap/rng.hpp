#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace gqap {

// Deterministic random stream. Wraps std::mt19937_64 (whose output sequence
// the standard pins down exactly) but does all bounded draws itself with
// rejection sampling, so results do not depend on the standard library's
// distribution implementations. One instance per run; never shared.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform integer in [lo, hi], both inclusive. Unbiased.
    int uniform_int(int lo, int hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t limit = max - max % span;
        std::uint64_t v = gen_();
        while (v >= limit)
            v = gen_();
        return lo + static_cast<int>(v % span);
    }

    // Two distinct indices in [0, n), drawn as an ordered pair: first
    // uniform over n, second uniform over the remaining n-1.
    std::pair<int, int> distinct_pair(int n) {
        int a = uniform_int(0, n - 1);
        int b = uniform_int(0, n - 2);
        if (b >= a)
            ++b;
        return {a, b};
    }

  private:
    std::mt19937_64 gen_;
};

// splitmix64 mix step; used to derive per-run seeds from a base seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

} // namespace gqap
