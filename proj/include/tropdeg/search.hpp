#pragma once

// Search for a maximal tropically independent subset of given monomials on a
// prevariety. Witness candidates are breakpoint-driven: on each segment the
// minimizer pattern of a family of monomials can only change where two
// restrictions cross, so segment endpoints, pairwise breakpoints, midpoints
// between consecutive candidates, and one step beyond the extremes cover
// every cell at this scale.
//
// The search is a DFS over matched (monomial, witness) pairs, extending only
// when the grown evaluation matrix stays tropically nonsingular. Any
// nonsingular square matrix with its optimal matching on the diagonal remains
// nonsingular after deleting a matched pair, so every maximal solution is
// reachable with monomial indices increasing; the enumeration is complete
// unless the budget cuts it short. Exactness is only claimed when the
// candidate set is provably sufficient (finite point sets) and the tree was
// fully explored.

#include "tropdeg/certificate.hpp"
#include "tropdeg/grid.hpp"

#include <optional>
#include <set>
#include <vector>

namespace tropdeg {

struct SearchResult {
    std::size_t size = 0;
    std::vector<std::size_t> monomials; // indices into the input list
    std::vector<Point> witnesses;
    std::optional<Certificate> certificate;
    bool exact = false;
    bool budget_exhausted = false;
    std::size_t matching_calls = 0;
};

namespace detail {

inline void add_candidate(std::vector<Rat>& ts, const Segment& seg, const Rat& t) {
    if (seg.t_in_range(t)) ts.push_back(t);
}

inline std::vector<Point> segment_candidates(const std::vector<Monomial>& monos,
                                             const Segment& seg) {
    std::vector<Rat> ts;
    if (seg.t_lo && seg.lo_closed) ts.push_back(*seg.t_lo);
    if (seg.t_hi && seg.hi_closed) ts.push_back(*seg.t_hi);
    std::set<Rat> slopes;
    for (std::size_t i = 0; i < monos.size(); ++i) {
        slopes.insert(dot(monos[i], seg.dir));
        for (std::size_t j = i + 1; j < monos.size(); ++j) {
            Rat ds = dot(monos[i], seg.dir) - dot(monos[j], seg.dir);
            if (ds == 0) continue;
            Rat t = (dot(monos[j], seg.base) - dot(monos[i], seg.base)) / ds;
            add_candidate(ts, seg, t);
        }
    }
    if (ts.empty()) {
        if (seg.t_lo && seg.t_hi)
            ts.push_back((*seg.t_lo + *seg.t_hi) / 2);
        else if (seg.t_lo)
            ts.push_back(*seg.t_lo + 1);
        else if (seg.t_hi)
            ts.push_back(*seg.t_hi - 1);
        else
            ts.push_back(0);
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    // A branch with D distinct slopes can host up to D witnesses, so refine by
    // midpoints and outward steps until there are at least D+2 parameters.
    std::size_t want = slopes.size() + 2;
    Rat step = 1;
    for (int round = 0; round < 64 && ts.size() < want; ++round) {
        std::vector<Rat> more;
        for (std::size_t i = 0; i + 1 < ts.size(); ++i) more.push_back((ts[i] + ts[i + 1]) / 2);
        if (!seg.t_lo)
            more.push_back(ts.front() - step);
        else if (ts.front() != *seg.t_lo)
            add_candidate(more, seg, (*seg.t_lo + ts.front()) / 2);
        if (!seg.t_hi)
            more.push_back(ts.back() + step);
        else if (ts.back() != *seg.t_hi)
            add_candidate(more, seg, (ts.back() + *seg.t_hi) / 2);
        ts.insert(ts.end(), more.begin(), more.end());
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
        step *= 2;
    }

    // One midpoint layer on top of the breakpoint lattice.
    std::vector<Rat> full = ts;
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) full.push_back((ts[i] + ts[i + 1]) / 2);
    if (!seg.t_lo) full.push_back(ts.front() - 1);
    if (!seg.t_hi) full.push_back(ts.back() + 1);
    std::sort(full.begin(), full.end());
    full.erase(std::unique(full.begin(), full.end()), full.end());
    std::vector<Point> pts;
    for (const auto& t : full) pts.push_back(seg.at(t));
    return pts;
}

} // namespace detail

// Witness candidates for the given monomials on V, deterministic order.
inline std::vector<Point> witness_candidates(const std::vector<Monomial>& monos,
                                             const Prevariety& v) {
    auto branches = v.one_dim_branches();
    std::vector<Point> out = branches.points;
    for (const auto& seg : branches.segments) {
        auto pts = detail::segment_candidates(monos, seg);
        out.insert(out.end(), pts.begin(), pts.end());
    }
    return out;
}

inline SearchResult search_max_independent(const std::vector<Monomial>& monos,
                                           const Prevariety& v,
                                           std::size_t budget = 20000) {
    SearchResult res;
    if (v.empty() || monos.empty()) {
        res.exact = true;
        return res;
    }
    auto branches = v.one_dim_branches();
    bool finite_points = branches.segments.empty();
    std::vector<Point> cands = witness_candidates(monos, v);

    EvalMatrix full(monos.size(), cands.size());
    for (std::size_t i = 0; i < monos.size(); ++i)
        for (std::size_t j = 0; j < cands.size(); ++j)
            full.at(i, j) = PerturbedScalar(dot(monos[i], cands[j]));

    std::vector<std::size_t> mono_sel, cand_sel;
    bool cut = false;
    std::size_t calls = 0;

    auto nonsingular = [&](const std::vector<std::size_t>& ms,
                           const std::vector<std::size_t>& cs) {
        ++calls;
        return is_trop_nonsingular(full.submatrix(ms, cs));
    };

    auto dfs = [&](auto&& self, std::size_t next_mono) -> void {
        if (mono_sel.size() > res.size) {
            res.size = mono_sel.size();
            res.monomials = mono_sel;
            res.witnesses.clear();
            for (auto c : cand_sel) res.witnesses.push_back(cands[c]);
        }
        if (mono_sel.size() + (monos.size() - next_mono) <= res.size) return; // cannot improve
        for (std::size_t g = next_mono; g < monos.size(); ++g) {
            for (std::size_t c = 0; c < cands.size(); ++c) {
                if (std::find(cand_sel.begin(), cand_sel.end(), c) != cand_sel.end()) continue;
                if (calls >= budget) {
                    cut = true;
                    return;
                }
                mono_sel.push_back(g);
                cand_sel.push_back(c);
                if (nonsingular(mono_sel, cand_sel)) self(self, g + 1);
                mono_sel.pop_back();
                cand_sel.pop_back();
                if (cut) return;
            }
        }
    };
    dfs(dfs, 0);

    res.budget_exhausted = cut;
    res.exact = finite_points && !cut;
    res.matching_calls = calls;
    if (res.size > 0) {
        std::vector<TropPoly> fs;
        for (auto m : res.monomials) fs.push_back(TropPoly::monomial(monos[m]));
        res.certificate = certify_from_points(fs, res.witnesses, v);
        if (!res.certificate)
            throw std::logic_error("nonsingular search result failed certification");
    }
    return res;
}

} // namespace tropdeg
