#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace cqgen {

// splitmix64; used to derive independent substream seeds from (seed, indices).
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

inline std::uint64_t substream_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> indices) {
    std::uint64_t s = mix64(seed);
    for (auto i : indices) s = mix64(s ^ mix64(i + 0x632BE59BD9B4E019ull));
    return s;
}

// mt19937_64 with explicit uniform/normal transforms. The standard pins the
// generator's output sequence but not the distributions', so the transforms
// live here to keep seeded runs byte-identical across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    int uniform_int(int n) {  // in [0, n)
        return static_cast<int>(static_cast<std::uint64_t>(n * uniform()));
    }

    // standard normal via Box-Muller; draws are generated in pairs
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

inline Rng make_rng(std::uint64_t seed, std::initializer_list<std::uint64_t> indices) {
    return Rng(substream_seed(seed, indices));
}

}  // namespace cqgen
