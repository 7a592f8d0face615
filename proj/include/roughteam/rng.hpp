#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace roughteam {

/// Seed used whenever the caller does not pass one. Fixed so that repeated
/// runs reproduce byte-identical outputs; every report prints the seed used.
inline constexpr std::uint64_t kDefaultSeed = 1729;

/// Deterministic random source. std::mt19937_64 has a standard-defined output
/// sequence, but the std distributions do not, so the mappings to bounded
/// ints, doubles and shuffles are done here. Identical seeds give identical
/// streams on every platform.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, bound). bound must be >= 1.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    /// Uniform in [0, 1), 53-bit resolution.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool next_bool(double probability) { return next_double() < probability; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[next_below(i)]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace roughteam
