#pragma once

// Small dense exact linear algebra over the rationals: row reduction, null
// spaces, linear solves, and primitive integer rescaling of rational vectors.
// Matrices are plain vector<vector<Rat>>; sizes here are tiny (ambient
// dimension 2 or 3, grids of a few dozen monomials).

#include "tropdeg/rational.hpp"

#include <optional>
#include <vector>

namespace tropdeg {

inline Rat dot(const RatVec& a, const RatVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// In-place reduced row echelon form; returns pivot column per pivot row.
inline std::vector<std::size_t> rref(RatMat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        Rat inv = m[r][c];
        for (auto& x : m[r]) x /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(RatMat m) { return rref(m).size(); }

// Basis of {x : Mx = 0}, in the standard free-variable parametrization.
inline RatMat null_space(RatMat m, std::size_t cols) {
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    RatMat basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RatVec v(cols, Rat(0));
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (f < m[r].size()) v[pivots[r]] = -m[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solve Mx = rhs (least structure assumed); nullopt when inconsistent.
inline std::optional<RatVec> solve_linear(RatMat m, RatVec rhs, std::size_t cols) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(rhs[i]);
    auto pivots = rref(m);
    RatVec x(cols, Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols) return std::nullopt; // pivot in the rhs column
        x[pivots[r]] = m[r][cols];
    }
    return x;
}

// Orthogonal projection of x onto span(basis rows). The result depends only
// on the span, which is what makes it a canonical class label.
inline RatVec project_onto_span(const RatMat& basis, const RatVec& x) {
    std::size_t n = x.size(), k = basis.size();
    if (k == 0) return RatVec(n, Rat(0));
    RatMat gram(k, RatVec(k));
    RatVec rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
        rhs[i] = dot(basis[i], x);
        for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(basis[i], basis[j]);
    }
    auto y = solve_linear(gram, rhs, k);
    if (!y) throw std::logic_error("dependent basis in projection");
    RatVec proj(n, Rat(0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) proj[j] += (*y)[i] * basis[i][j];
    return proj;
}

// Scale a nonzero rational vector to a primitive integer vector (gcd 1),
// preserving direction.
inline std::vector<Int> to_primitive(const RatVec& v) {
    Int lcm = 1;
    for (const auto& x : v) {
        Int d = rat_den(x);
        lcm = lcm / int_gcd(lcm, d) * d;
    }
    std::vector<Int> w;
    Int g = 0;
    for (const auto& x : v) {
        Int e = rat_num(x) * (lcm / rat_den(x));
        g = int_gcd(g, e);
        w.push_back(e);
    }
    if (g == 0) throw std::invalid_argument("zero vector has no primitive form");
    for (auto& e : w) e /= g;
    return w;
}

// Canonical sign: first nonzero entry positive.
inline std::vector<Int> canonical_primitive(const RatVec& v) {
    auto w = to_primitive(v);
    for (const auto& e : w) {
        if (e == 0) continue;
        if (e < 0)
            for (auto& f : w) f = -f;
        break;
    }
    return w;
}

} // namespace tropdeg
