#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "grascurve/field.hpp"

namespace grascurve {

// Deterministic sampling helper. Draws go through explicit arithmetic on the
// raw mt19937_64 stream (std distributions are implementation-defined, which
// would break byte-identical output across toolchains).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform-ish integer in [lo, hi]; the modulo bias is irrelevant for
    // sampling purposes and keeps the draw reproducible.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<std::int64_t>(next_u64() % span);
    }

    // Random rational with small height; denominators stay modest so exact
    // arithmetic stays fast.
    Rat rat(std::int64_t height = 20) {
        std::int64_t num = uniform(-height, height);
        std::int64_t den = uniform(1, height);
        Rat r(static_cast<long>(num), static_cast<long>(den));
        r.canonicalize();
        return r;
    }

    std::vector<Rat> rat_vector(std::size_t n, std::int64_t height = 20) {
        std::vector<Rat> v;
        v.reserve(n);
        for (std::size_t i = 0; i < n; ++i) v.push_back(rat(height));
        return v;
    }

    // Nonzero vector.
    std::vector<Rat> rat_vector_nonzero(std::size_t n, std::int64_t height = 20) {
        for (;;) {
            auto v = rat_vector(n, height);
            for (const auto& x : v)
                if (sgn(x) != 0) return v;
        }
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace grascurve
