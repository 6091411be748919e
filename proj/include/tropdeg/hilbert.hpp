#pragma once

// Class counting t_L(k) and tropical Hilbert functions. Two monomials
// coincide on a polyhedron up to an additive constant exactly when their
// exponent difference is orthogonal to its direction space L, so the class
// label is the orthogonal projection of the exponent vector onto span(L) --
// a rational vector depending only on the span.

#include "tropdeg/certificate.hpp"
#include "tropdeg/grid.hpp"
#include "tropdeg/search.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tropdeg {

struct ClassTable {
    std::map<RatVec, Monomial> representatives; // label -> first monomial seen
    std::size_t count() const { return representatives.size(); }
};

inline ClassTable count_classes(const RatMat& basis, const MonomialGrid& grid,
                                Int budget = Int(1000000)) {
    ClassTable t;
    for (const auto& mono : grid.enumerate(budget)) {
        RatVec exps;
        for (const auto& e : mono.exponents) exps.push_back(Rat(e));
        RatVec label = project_onto_span(basis, exps);
        t.representatives.emplace(std::move(label), mono);
    }
    return t;
}

struct HilbertRecord {
    Int k;
    std::size_t lower = 0, upper = 0;
    bool exact = false;
    std::optional<Certificate> certificate;
};

namespace detail {

// m coordinate indices on which the projection of L has full rank.
inline std::vector<std::size_t> full_rank_coords(const RatMat& L, std::size_t n) {
    std::vector<std::size_t> coords;
    RatMat cols; // transposed selection
    for (std::size_t c = 0; c < n && coords.size() < L.size(); ++c) {
        RatMat trial = cols;
        RatVec col(L.size());
        for (std::size_t r = 0; r < L.size(); ++r) col[r] = L[r][c];
        trial.push_back(col);
        if (rank(trial) == trial.size()) {
            cols = std::move(trial);
            coords.push_back(c);
        }
    }
    if (coords.size() != L.size()) throw std::logic_error("direction basis has deficient rank");
    return coords;
}

// Directions of span(L) whose chosen-coordinate projections form the
// standard basis; the restriction coefficients of a monomial in the chosen
// coordinates are its dot products with these.
inline RatMat coordinate_directions(const RatMat& L, const std::vector<std::size_t>& coords,
                                    std::size_t n) {
    std::size_t m = coords.size();
    RatMat proj_t(m, RatVec(L.size()));
    for (std::size_t r = 0; r < L.size(); ++r)
        for (std::size_t c = 0; c < m; ++c) proj_t[c][r] = L[r][coords[c]];
    RatMat dirs;
    for (std::size_t c = 0; c < m; ++c) {
        RatVec e(m, Rat(0));
        e[c] = 1;
        auto y = solve_linear(proj_t, e, L.size());
        if (!y) throw std::logic_error("coordinate projection unexpectedly singular");
        RatVec d(n, Rat(0));
        for (std::size_t r = 0; r < L.size(); ++r)
            for (std::size_t j = 0; j < n; ++j) d[j] += (*y)[r] * L[r][j];
        dirs.push_back(std::move(d));
    }
    return dirs;
}

} // namespace detail

// TH of a single polyhedron is the class count, exactly; the proof is
// constructive and so is this: one representative per class, co-ordered
// witness points, diagonal-lemma potentials. A construction failure would
// contradict the statement and is reported as a hard error.
inline HilbertRecord th_polyhedron(const Polyhedron& p, const MonomialGrid& grid,
                                   Int budget = Int(1000000)) {
    ClassTable ct = count_classes(p.direction_basis(), grid, budget);
    HilbertRecord rec;
    rec.k = grid.k;
    rec.lower = rec.upper = ct.count();
    rec.exact = true;

    std::vector<Monomial> reps;
    for (const auto& [label, mono] : ct.representatives) reps.push_back(mono);

    const std::size_t m = p.dim();
    std::vector<Point> pts;
    if (m == 0) {
        pts.assign(reps.size(), p.single_point()); // single class
    } else {
        auto coords = detail::full_rank_coords(p.direction_basis(), p.ambient_dim());
        auto dirs = detail::coordinate_directions(p.direction_basis(), coords, p.ambient_dim());
        std::vector<RatVec> bs;
        for (const auto& r : reps) {
            RatVec beta(m);
            RatVec exps;
            for (const auto& e : r.exponents) exps.push_back(Rat(e));
            for (std::size_t c = 0; c < m; ++c) beta[c] = dot(exps, dirs[c]);
            bs.push_back(std::move(beta));
        }
        pts = co_ordered_points(bs, p, coords);
    }

    std::vector<TropPoly> fs;
    for (const auto& r : reps) fs.push_back(TropPoly::monomial(r));
    auto cert = certify_from_points(fs, pts, Prevariety::from_polyhedra({p}));
    if (!cert) throw std::logic_error("class representatives failed to certify on a polyhedron");
    rec.certificate = std::move(*cert);
    return rec;
}

// TH of a finite point set: exactly s once k >= n*s (co-ordered exponent
// vectors with coordinates below s); below that threshold, search bounds.
inline HilbertRecord th_points(const std::vector<Point>& points, const MonomialGrid& grid,
                               std::size_t search_budget = 20000) {
    if (points.empty()) throw std::invalid_argument("no points");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) throw std::invalid_argument("points must be distinct");

    const std::size_t n = points[0].size(), s = points.size();
    HilbertRecord rec;
    rec.k = grid.k;
    Prevariety v = Prevariety::from_points(points);

    if (grid.k >= Int(n) * Int(s)) {
        std::vector<TropPoly> fs;
        for (std::size_t i = 0; i < s; ++i) {
            std::vector<Int> exps(n);
            for (std::size_t c = 0; c < n; ++c) {
                std::vector<Rat> above;
                for (std::size_t j = 0; j < s; ++j)
                    if (points[j][c] > points[i][c]) above.push_back(points[j][c]);
                std::sort(above.begin(), above.end());
                above.erase(std::unique(above.begin(), above.end()), above.end());
                exps[c] = Int(above.size());
            }
            fs.push_back(TropPoly::monomial(Monomial(exps)));
        }
        auto cert = certify_from_points(fs, points, v);
        if (!cert) throw std::logic_error("co-ordered exponents failed to certify on points");
        rec.lower = rec.upper = s;
        rec.exact = true;
        rec.certificate = std::move(*cert);
        return rec;
    }

    auto monos = grid.enumerate();
    auto sr = search_max_independent(monos, v, search_budget);
    rec.lower = sr.size;
    rec.upper = std::min<std::size_t>(s, monos.size());
    if (sr.exact) rec.upper = std::max(rec.lower, std::min(rec.upper, sr.size));
    rec.exact = sr.exact || rec.lower == rec.upper;
    rec.certificate = std::move(sr.certificate);
    return rec;
}

// Bounds for a union: max over pieces from below (optionally improved by the
// subset search), sum over pieces from above.
inline HilbertRecord th_union_bounds(const Prevariety& v, const MonomialGrid& grid,
                                     std::size_t search_budget = 0,
                                     Int class_budget = Int(1000000)) {
    HilbertRecord rec;
    rec.k = grid.k;
    if (v.empty()) {
        rec.exact = true;
        return rec;
    }
    auto pieces = v.piece_polyhedra();
    std::size_t best_piece = 0, upper = 0;
    std::optional<Certificate> best_cert;
    for (const auto& p : pieces) {
        auto r = th_polyhedron(p, grid, class_budget);
        upper += r.upper;
        if (r.lower > best_piece) {
            best_piece = r.lower;
            best_cert = std::move(r.certificate);
        }
    }
    rec.lower = best_piece;
    rec.upper = upper;
    rec.certificate = std::move(best_cert);

    if (search_budget > 0 && rec.lower < rec.upper) {
        auto monos = grid.enumerate(class_budget);
        auto sr = search_max_independent(monos, v, search_budget);
        if (sr.size > rec.lower) {
            rec.lower = sr.size;
            rec.certificate = std::move(sr.certificate);
        }
        if (sr.exact) rec.upper = std::min(rec.upper, std::max(sr.size, rec.lower));
    }
    if (rec.lower > rec.upper) throw std::logic_error("hilbert sandwich inverted");
    rec.exact = rec.lower == rec.upper;
    return rec;
}

struct LineFormulaReport {
    Int paper_value;
    Int enumerated_value;
    bool agree;
};

// Closed form (|p|+|q|)(k-1)+1 against direct enumeration on the line
// {p x + q y = r}; the flag is reported, never asserted.
inline LineFormulaReport line_formula_check(const Int& p, const Int& q, const Int& k) {
    bool axis = (p == 0 || q == 0) && (boost::multiprecision::abs(p) + boost::multiprecision::abs(q) == 1);
    if (!axis && int_gcd(p, q) != 1)
        throw std::invalid_argument("p,q must be coprime or an axis direction");
    Int ap = p < 0 ? Int(-p) : p, aq = q < 0 ? Int(-q) : q;
    LineFormulaReport r;
    r.paper_value = (ap + aq) * (k - 1) + 1;
    RatMat basis{{Rat(q), Rat(-p)}};
    r.enumerated_value = Int(count_classes(basis, {2, k, GridShape::Simplex}).count());
    r.agree = r.paper_value == r.enumerated_value;
    return r;
}

struct PolyFitReport {
    bool stable = false;
    Int onset_k = 0;           // first k from which the d-th differences are constant
    std::vector<Rat> coeffs;   // polynomial coefficients, constant term first
};

// Empirical check that the d-th finite differences of exact values stabilize;
// fits the polynomial through the stable tail. Never asserts the theorem.
inline PolyFitReport eventual_poly_fit(const std::vector<HilbertRecord>& records, std::size_t d) {
    if (records.size() < d + 2) throw std::invalid_argument("need at least d+2 records");
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (!records[i].exact) throw std::invalid_argument("records must be exact");
        if (i > 0 && records[i].k != records[i - 1].k + 1)
            throw std::invalid_argument("records must have consecutive k");
    }
    std::vector<Rat> vals;
    for (const auto& r : records) vals.push_back(Rat(Int(r.lower)));
    std::vector<std::vector<Rat>> diffs{vals};
    for (std::size_t lev = 0; lev < d; ++lev) {
        std::vector<Rat> next;
        for (std::size_t i = 0; i + 1 < diffs.back().size(); ++i)
            next.push_back(diffs.back()[i + 1] - diffs.back()[i]);
        diffs.push_back(std::move(next));
    }
    const auto& top = diffs.back();
    std::size_t onset = top.size();
    for (std::size_t i = top.size(); i-- > 0;) {
        if (top[i] != top.back()) break;
        onset = i;
    }
    PolyFitReport rep;
    if (top.size() - onset < 2) return rep; // a single stable entry is no evidence
    rep.stable = true;
    rep.onset_k = records[onset].k;

    // Newton forward form from the onset row, expanded into coefficients.
    // p(k) = sum_j D_j * C(k - k0, j), with D_j the j-th difference at onset.
    std::vector<Rat> poly{Rat(0)}; // coefficients in k, constant first
    std::vector<Rat> binom{Rat(1)}; // C(k-k0, j) as a polynomial in k
    Rat k0(records[onset].k);
    for (std::size_t j = 0; j <= d; ++j) {
        Rat dj = diffs[j][onset];
        if (poly.size() < binom.size()) poly.resize(binom.size(), Rat(0));
        for (std::size_t c = 0; c < binom.size(); ++c) poly[c] += dj * binom[c];
        // binom *= (k - k0 - j) / (j+1)
        std::vector<Rat> nb(binom.size() + 1, Rat(0));
        Rat shift = -(k0 + Rat(Int(j)));
        for (std::size_t c = 0; c < binom.size(); ++c) {
            nb[c + 1] += binom[c];
            nb[c] += binom[c] * shift;
        }
        for (auto& x : nb) x /= Rat(Int(j) + 1);
        binom = std::move(nb);
    }
    rep.coeffs = std::move(poly);
    return rep;
}

} // namespace tropdeg
