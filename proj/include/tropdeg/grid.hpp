#pragma once

// Monomial grids: the simplex grid {0 <= sum i_j <= k} and the box grid
// {0 <= i_j <= k}, enumerated in graded lexicographic order.

#include "tropdeg/matching.hpp"
#include "tropdeg/polynomial.hpp"

#include <vector>

namespace tropdeg {

enum class GridShape { Simplex, Box };

inline const char* shape_name(GridShape s) { return s == GridShape::Simplex ? "simplex" : "box"; }

struct MonomialGrid {
    std::size_t n;
    Int k;
    GridShape shape;

    Int count() const {
        if (shape == GridShape::Box) {
            Int c = 1;
            for (std::size_t i = 0; i < n; ++i) c *= k + 1;
            return c;
        }
        Int c = 1; // C(n+k, n)
        for (std::size_t i = 1; i <= n; ++i) c = c * (k + Int(i)) / Int(i);
        return c;
    }

    std::vector<Monomial> enumerate(Int budget = Int(1000000)) const {
        if (count() > budget) throw BudgetExceeded("monomial grid exceeds budget");
        std::vector<Monomial> out;
        std::vector<Int> cur(n, Int(0));
        auto rec = [&](auto&& self, std::size_t pos, Int remaining) -> void {
            if (pos == n) {
                out.emplace_back(cur);
                return;
            }
            Int limit = shape == GridShape::Box ? k : remaining;
            for (Int v = 0; v <= limit; ++v) {
                cur[pos] = v;
                self(self, pos + 1, shape == GridShape::Box ? remaining : remaining - v);
            }
            cur[pos] = 0;
        };
        rec(rec, 0, k);
        if (shape == GridShape::Simplex) {
            std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
                Int da = a.degree(), db = b.degree();
                if (da != db) return da < db;
                return a.exponents < b.exponents;
            });
        }
        return out;
    }
};

} // namespace tropdeg
