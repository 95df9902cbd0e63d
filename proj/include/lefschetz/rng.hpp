#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lefschetz/rational.hpp"

namespace lefschetz {

// Seeded RNG with portable integer draws (mt19937_64 output is standardized;
// std::uniform_int_distribution is not, so draws are reduced by hand).
struct Rng {
    std::mt19937_64 gen;

    explicit Rng(uint64_t seed) : gen(seed) {}

    long int_in(long lo, long hi) {
        const uint64_t span = static_cast<uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(gen() % span);
    }
    long nonzero_in(long lo, long hi) {
        long v = 0;
        do {
            v = int_in(lo, hi);
        } while (v == 0);
        return v;
    }
    std::vector<Rational> point(size_t n, long bound) {
        std::vector<Rational> p(n);
        for (auto& c : p) c = Rational(int_in(-bound, bound));
        return p;
    }
};

}  // namespace lefschetz
