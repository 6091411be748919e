#pragma once

// Shared helpers for the test suites: a deterministic RNG (splitmix64, so
// results do not depend on the standard library's distribution details) and
// shorthand constructors.

#include "tropdeg/polynomial.hpp"

#include <cstdint>
#include <vector>

namespace testutil {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi]
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    tropdeg::Rat rat(long long lo, long long hi, long long max_den = 4) {
        long long den = range(1, max_den);
        return tropdeg::Rat(range(lo * den, hi * den), den);
    }

private:
    std::uint64_t state_;
};

inline tropdeg::Monomial mono(std::initializer_list<long long> exps) {
    std::vector<tropdeg::Int> e;
    for (auto v : exps) e.push_back(tropdeg::Int(v));
    return tropdeg::Monomial(std::move(e));
}

inline tropdeg::Point pt(std::initializer_list<long long> coords) {
    tropdeg::Point p;
    for (auto v : coords) p.push_back(tropdeg::Rat(v));
    return p;
}

inline tropdeg::RatVec rv(std::initializer_list<long long> coords) { return pt(coords); }

} // namespace testutil
