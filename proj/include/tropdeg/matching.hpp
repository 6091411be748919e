#pragma once

// Minimum-weight perfect matching over exact scalars, tropical
// nonsingularity, tropical rank, and the dual potentials of the diagonal
// lemma.
//
// Two solvers: exhaustive permutation enumeration (s <= 8 by default) and a
// shortest-augmenting-path assignment solver for larger matrices. Uniqueness
// is always decided through the second-best matching (forbid each optimal
// edge and re-solve; for the exhaustive path this collapses into a single
// enumeration).

#include "tropdeg/polynomial.hpp"
#include "tropdeg/scalar.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropdeg {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class EvalMatrix {
public:
    EvalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, std::vector<PerturbedScalar>(cols)) {}
    EvalMatrix(std::initializer_list<std::initializer_list<int>> vals) {
        for (auto& r : vals) data_.emplace_back(r.begin(), r.end());
        rows_ = data_.size();
        cols_ = rows_ ? data_[0].size() : 0;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    PerturbedScalar& at(std::size_t i, std::size_t j) { return data_[i][j]; }
    const PerturbedScalar& at(std::size_t i, std::size_t j) const { return data_[i][j]; }

    EvalMatrix submatrix(const std::vector<std::size_t>& rs,
                         const std::vector<std::size_t>& cs) const {
        EvalMatrix m(rs.size(), cs.size());
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < cs.size(); ++j) m.at(i, j) = at(rs[i], cs[j]);
        return m;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::vector<PerturbedScalar>> data_;
};

inline EvalMatrix build_eval_matrix(const std::vector<TropPoly>& fs,
                                    const std::vector<Point>& vs) {
    EvalMatrix m(fs.size(), vs.size());
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = 0; j < vs.size(); ++j) m.at(i, j) = eval_poly(fs[i], vs[j]).value;
    return m;
}

struct MatchingResult {
    std::vector<std::size_t> permutation; // row i matched to column permutation[i]
    PerturbedScalar value;
    bool unique = false;
    PerturbedScalar gap; // second best minus best; +inf when there is no second
};

enum class MatchMethod { Auto, Exhaustive, AugmentingPath };

namespace detail {

inline PerturbedScalar matching_value(const EvalMatrix& a, const std::vector<std::size_t>& p) {
    PerturbedScalar s{0};
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (a.at(i, p[i]).is_inf()) return PerturbedScalar::infinity();
        s += a.at(i, p[i]);
    }
    return s;
}

// Jonker-Volgenant style shortest augmenting paths with exact arithmetic;
// infinite entries are forbidden edges. Returns false when no finite perfect
// matching exists.
inline bool assignment_solve(const EvalMatrix& a, std::vector<std::size_t>& rowsol,
                             PerturbedScalar& total) {
    const std::size_t n = a.rows();
    std::vector<PerturbedScalar> u(n + 1, PerturbedScalar{0}), v(n + 1, PerturbedScalar{0});
    std::vector<std::size_t> p(n + 1, n), way(n + 1, 0); // p[j]: row matched to col j (n = none)
    for (std::size_t i = 0; i < n; ++i) {
        p[n] = i; // virtual column n holds the row being inserted
        std::size_t j0 = n;
        std::vector<PerturbedScalar> minv(n, PerturbedScalar::infinity());
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            std::size_t i0 = p[j0], j1 = n;
            PerturbedScalar delta = PerturbedScalar::infinity();
            for (std::size_t j = 0; j < n; ++j) {
                if (used[j]) continue;
                if (!a.at(i0, j).is_inf()) {
                    PerturbedScalar cur = a.at(i0, j) - u[i0] - v[j];
                    if (cur < minv[j]) {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            if (delta.is_inf()) return false; // no augmenting path
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] = v[j] - delta;
                } else {
                    minv[j] = minv[j] - delta;
                }
            }
            j0 = j1;
        } while (p[j0] != n);
        do {
            std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != n);
    }
    rowsol.assign(n, 0);
    for (std::size_t j = 0; j < n; ++j) rowsol[p[j]] = j;
    total = PerturbedScalar{0};
    for (std::size_t i = 0; i < n; ++i) total += a.at(i, rowsol[i]);
    return true;
}

} // namespace detail

inline MatchingResult min_matching(const EvalMatrix& a, MatchMethod method = MatchMethod::Auto) {
    const std::size_t n = a.rows();
    if (n == 0 || a.cols() != n) throw std::invalid_argument("min_matching needs a square matrix");
    if (method == MatchMethod::Auto)
        method = n <= 8 ? MatchMethod::Exhaustive : MatchMethod::AugmentingPath;

    MatchingResult res;
    if (method == MatchMethod::Exhaustive) {
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        PerturbedScalar best = PerturbedScalar::infinity();
        PerturbedScalar second = PerturbedScalar::infinity();
        std::vector<std::size_t> best_perm;
        do {
            PerturbedScalar v = detail::matching_value(a, perm);
            if (v < best) {
                second = best;
                best = v;
                best_perm = perm;
            } else if (v < second) {
                second = v;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (best.is_inf()) throw std::invalid_argument("no finite matching");
        res.permutation = best_perm;
        res.value = best;
        res.gap = second.is_inf() ? PerturbedScalar::infinity() : second - best;
    } else {
        std::vector<std::size_t> sol;
        PerturbedScalar total;
        if (!detail::assignment_solve(a, sol, total))
            throw std::invalid_argument("no finite matching");
        PerturbedScalar second = PerturbedScalar::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            EvalMatrix b = a;
            b.at(i, sol[i]) = PerturbedScalar::infinity();
            std::vector<std::size_t> alt;
            PerturbedScalar alt_total;
            if (detail::assignment_solve(b, alt, alt_total) && alt_total < second)
                second = alt_total;
        }
        res.permutation = sol;
        res.value = total;
        res.gap = second.is_inf() ? PerturbedScalar::infinity() : second - total;
    }
    res.unique = PerturbedScalar{0} < res.gap;
    return res;
}

inline bool is_trop_nonsingular(const EvalMatrix& a, MatchMethod method = MatchMethod::Auto) {
    try {
        return min_matching(a, method).unique;
    } catch (const std::invalid_argument&) {
        return false; // no finite matching
    }
}

namespace detail {

template <typename F>
inline bool for_each_subset(std::size_t n, std::size_t r, F&& f) {
    std::vector<std::size_t> idx(r);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        if (f(idx)) return true;
        std::size_t i = r;
        while (i-- > 0) {
            if (idx[i] != i + n - r) {
                ++idx[i];
                for (std::size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return false;
        }
    }
}

} // namespace detail

// Largest r with a tropically nonsingular r x r submatrix, exhaustively.
inline std::size_t tropical_rank(const EvalMatrix& a, std::size_t brute_limit = 8) {
    if (a.rows() > brute_limit || a.cols() > brute_limit)
        throw BudgetExceeded("rank budget exceeded");
    for (std::size_t r = std::min(a.rows(), a.cols()); r >= 1; --r) {
        bool found = detail::for_each_subset(a.rows(), r, [&](const auto& rs) {
            return detail::for_each_subset(a.cols(), r, [&](const auto& cs) {
                return is_trop_nonsingular(a.submatrix(rs, cs));
            });
        });
        if (found) return r;
    }
    return 0;
}

// Lemma-diagonal potentials: w with A[i][i] + w[i] < A[l][i] + w[l] for all
// l != i, given a square matrix whose unique optimal matching is the
// identity. Difference constraints w_i - w_l <= (A[l][i] - A[i][i]) - delta
// are solved by Bellman-Ford with slack delta = gap/(s+1).
inline std::vector<PerturbedScalar> dual_potentials(const EvalMatrix& a) {
    const std::size_t n = a.rows();
    auto mm = min_matching(a);
    if (!mm.unique) throw std::invalid_argument("matrix is tropically singular");
    for (std::size_t i = 0; i < n; ++i)
        if (mm.permutation[i] != i)
            throw std::invalid_argument("optimal matching is not the identity");

    PerturbedScalar delta =
        mm.gap.is_inf() ? PerturbedScalar{1} : div(mm.gap, Rat(Int(n) + 1));
    struct Edge {
        std::size_t from, to;
        PerturbedScalar w;
    };
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) {
            if (l == i || a.at(l, i).is_inf()) continue;
            edges.push_back({l, i, a.at(l, i) - a.at(i, i) - delta});
        }
    std::vector<PerturbedScalar> d(n, PerturbedScalar{0});
    for (std::size_t pass = 0; pass + 1 < n; ++pass) {
        bool changed = false;
        for (const auto& e : edges)
            if (d[e.from] + e.w < d[e.to]) {
                d[e.to] = d[e.from] + e.w;
                changed = true;
            }
        if (!changed) break;
    }
    for (const auto& e : edges)
        if (d[e.from] + e.w < d[e.to])
            throw std::logic_error("negative cycle in potential constraints");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) {
            if (l == i || a.at(l, i).is_inf()) continue;
            if (!(a.at(i, i) + d[i] < a.at(l, i) + d[l]))
                throw std::logic_error("potentials violate the diagonal lemma");
        }
    return d;
}

} // namespace tropdeg
