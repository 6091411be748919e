#pragma once

// Star-degree machinery: the closed-form leading coefficient B, the lattice
// recursion producing the witness set W with its 2^s certificate, the box
// upper bound kB+1, concave slope attainment, and degree bounds assembled
// from subadditivity.

#include "tropdeg/certificate.hpp"
#include "tropdeg/envelope.hpp"
#include "tropdeg/hilbert.hpp"
#include "tropdeg/search.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace tropdeg {

// B = sum over coordinates of max(positive entry sum, -negative entry sum).
inline Int star_B(const Star& s) {
    Int b = 0;
    for (std::size_t c = 0; c < s.dim(); ++c) {
        Int pos = 0, neg = 0;
        for (const auto& d : s.directions) {
            if (d[c] > 0) pos += d[c];
            if (d[c] < 0) neg -= d[c];
        }
        b += pos > neg ? pos : neg;
    }
    return b;
}

// max over observed k of (a_k - c)/k, a valid lower bound on lim a_k/k for
// sequences with a_{kr} >= r(a_k - c).
inline Rat subadditive_lower(const std::vector<std::pair<Int, Rat>>& values, const Int& c) {
    if (values.empty()) throw std::invalid_argument("no values");
    if (c < 0) throw std::invalid_argument("c must be nonnegative");
    std::optional<Rat> best;
    const Rat* prev = nullptr;
    for (const auto& [k, a] : values) {
        if (k <= 0) throw std::invalid_argument("k must be positive");
        if (prev && a < *prev) throw std::invalid_argument("values must be non-decreasing");
        prev = &a;
        Rat bound = (a - Rat(c)) / Rat(k);
        if (!best || bound > *best) best = bound;
    }
    return *best;
}

struct StarConstruction {
    std::vector<std::pair<Int, Int>> negative_dirs; // (u_l, v_l) after normalization
    std::vector<Int> base_thresholds;               // c_l at the recursion base
    std::vector<Int> final_thresholds;              // c_l when the recursion halts
    std::vector<std::pair<Int, Int>> w_points;      // in recursion order, original coordinates
    std::vector<std::size_t> active_lines;          // line index active at each step
    Int k, B, C, D;
    bool reflect_x = false, reflect_y = false;
};

namespace detail {

struct ExtGcd {
    Int g, x, y;
};

inline ExtGcd ext_gcd(const Int& a, const Int& b) {
    if (b == 0) return {a, 1, 0};
    auto r = ext_gcd(b, a % b);
    return {r.g, r.y, r.x - (a / b) * r.y};
}

struct DynEdge {
    Int s_min, s_max;            // inner integer parameters on the line
    Int base_x, base_y;          // integer point on the line
    Int dir_x, dir_y;            // primitive direction along the line
};

// The polygon edge on {u x + v y = c} inside {dyn constraints} n [0,k]^2,
// as the range of integer inner parameters; nullopt when the edge is empty,
// has no inner integer point, or coincides with a side of the square.
inline std::optional<DynEdge> dynamic_edge(const std::vector<std::pair<Int, Int>>& dirs,
                                           const std::vector<Int>& cs, std::size_t l,
                                           const Int& k) {
    const auto& [u, v] = dirs[l];
    // coincidence with a square side is classified static
    if ((u == 0 && (v == 1 || v == -1)) || (v == 0 && (u == 1 || u == -1))) {
        Int offset = u + v > 0 ? cs[l] : -cs[l]; // line x = offset or y = offset
        if (offset == 0 || offset == k) return std::nullopt;
    }
    auto eg = ext_gcd(u, v);
    Int bx = eg.x * cs[l], by = eg.y * cs[l];
    if (eg.g == -1) {
        bx = -bx;
        by = -by;
    }
    DynEdge e{0, 0, bx, by, -v, u};
    // parameter interval from the other constraints, exact rational bounds
    std::optional<Rat> lo, hi;
    auto bound = [&](const Rat& cu, const Rat& cv, const Rat& rhs) {
        // cu*(bx + s*dx) + cv*(by + s*dy) >= rhs
        Rat slope = cu * Rat(e.dir_x) + cv * Rat(e.dir_y);
        Rat base = cu * Rat(e.base_x) + cv * Rat(e.base_y);
        if (slope == 0) {
            if (base < rhs) lo = Rat(1), hi = Rat(0); // infeasible
            return;
        }
        Rat t = (rhs - base) / slope;
        if (slope > 0) {
            if (!lo || t > *lo) lo = t;
        } else {
            if (!hi || t < *hi) hi = t;
        }
    };
    for (std::size_t j = 0; j < dirs.size(); ++j) {
        if (j == l) continue;
        bound(Rat(dirs[j].first), Rat(dirs[j].second), Rat(cs[j]));
    }
    bound(Rat(1), Rat(0), Rat(0));
    bound(Rat(-1), Rat(0), Rat(-k));
    bound(Rat(0), Rat(1), Rat(0));
    bound(Rat(0), Rat(-1), Rat(-k));
    if (!lo || !hi || !(*lo < *hi)) return std::nullopt; // not an edge of positive length
    // inner integer parameters: strictly between the vertices
    Int smin = rat_floor(*lo) + 1; // smallest integer > lo
    Int smax = rat_ceil(*hi) - 1;  // largest integer < hi
    if (smin > smax) return std::nullopt;
    e.s_min = smin;
    e.s_max = smax;
    return e;
}

} // namespace detail

struct StarCertificate {
    StarConstruction construction;
    Certificate certificate;
};

// The recursion behind the star lower bound: repeatedly pick the dynamic edge
// of lowest line index carrying an inner integer point, record the
// lexicographically smallest such point, and push that line outward. Produces
// the 2^s certificate and checks |W| >= kB - D.
inline StarCertificate star_lower_construct(const Star& star, const Int& k) {
    if (star.dim() != 2) throw std::invalid_argument("star construction needs R^2");

    // reflection normalization so the negative sums dominate both coordinates
    Int px = 0, nx = 0, py = 0, ny = 0;
    for (const auto& d : star.directions) {
        if (d[0] > 0) px += d[0];
        if (d[0] < 0) nx -= d[0];
        if (d[1] > 0) py += d[1];
        if (d[1] < 0) ny -= d[1];
    }
    StarConstruction con;
    con.reflect_x = nx < px;
    con.reflect_y = ny < py;
    con.k = k;
    con.B = star_B(star);

    std::vector<std::pair<Int, Int>> neg;
    for (const auto& d : star.directions) {
        Int u = con.reflect_x ? -d[0] : d[0];
        Int v = con.reflect_y ? -d[1] : d[1];
        if (u < 0 || v < 0) neg.emplace_back(u, v);
    }
    if (neg.empty()) throw std::logic_error("normalized star has no negative direction");
    std::sort(neg.begin(), neg.end());
    con.negative_dirs = neg;

    Int C = 0;
    for (const auto& [u, v] : neg) C += isqrt_ceil(u * u + v * v);
    con.C = C;
    if (k <= C) throw std::invalid_argument("k below construction threshold");

    Int D = 0;
    for (const auto& [u, v] : neg) {
        if (u >= 0 && v < 0) D -= C * (v - u);
        else if (u < 0 && v < 0) D -= 2 * C * (u + v);
        else D -= C * (u - v);
    }
    con.D = D;

    std::vector<Int> cs;
    for (const auto& [u, v] : neg) cs.push_back(C * (u < v ? u : v));
    con.base_thresholds = cs;

    std::vector<std::pair<Int, Int>> w; // normalized coordinates
    std::set<std::pair<Int, Int>> seen;
    while (true) {
        std::optional<std::pair<std::size_t, std::pair<Int, Int>>> pick;
        for (std::size_t l = 0; l < neg.size(); ++l) {
            auto e = detail::dynamic_edge(neg, cs, l, k);
            if (!e) continue;
            // lexicographically smallest inner point: x is monotone in s
            std::pair<Int, Int> p_lo{e->base_x + e->s_min * e->dir_x,
                                     e->base_y + e->s_min * e->dir_y};
            std::pair<Int, Int> p_hi{e->base_x + e->s_max * e->dir_x,
                                     e->base_y + e->s_max * e->dir_y};
            pick = {l, std::min(p_lo, p_hi)};
            break;
        }
        if (!pick) break;
        auto [l, p] = *pick;
        if (!seen.insert(p).second) throw std::logic_error("repeated W point");
        w.push_back(p);
        con.active_lines.push_back(l);
        cs[l] -= 1;
    }
    con.final_thresholds = cs;

    if (Int(w.size()) < k * con.B - D) throw std::logic_error("|W| below kB - D");

    // certificate: member s has exponents w_s (mapped back through the
    // reflections) and coefficient 2^s; witnesses come from the per-ray
    // envelopes, then translate back to the original apex.
    Certificate cert;
    std::vector<Rat> coeffs;
    Rat two_pow = 2;
    for (std::size_t s = 0; s < w.size(); ++s) {
        coeffs.push_back(two_pow);
        two_pow *= 2;
    }
    for (std::size_t s = 0; s < w.size(); ++s) {
        Int i = con.reflect_x ? k - w[s].first : w[s].first;
        Int j = con.reflect_y ? k - w[s].second : w[s].second;
        Rat b = coeffs[s] - (Rat(i) * star.apex[0] + Rat(j) * star.apex[1]);
        cert.members.push_back({TropPoly::monomial(Monomial({i, j})), PerturbedScalar(b)});
    }
    // witness search on the normalized star (apex at origin, reflected rays)
    for (std::size_t s = 0; s < w.size(); ++s) {
        std::size_t l = con.active_lines[s];
        std::vector<EnvLine<Rat>> lines;
        for (std::size_t s2 = 0; s2 < w.size(); ++s2) {
            Rat slope = Rat(w[s2].first * neg[l].first + w[s2].second * neg[l].second);
            lines.push_back({slope, coeffs[s2], s2});
        }
        auto env = clip_envelope(lower_envelope(lines), std::optional<Rat>(Rat(0)),
                                 std::optional<Rat>());
        std::optional<Rat> z;
        for (const auto& e : env.edges) {
            if (e.line != s) continue;
            Rat a = e.t_from ? *e.t_from : Rat(0);
            if (e.t_to)
                z = (std::max(a, Rat(0)) + *e.t_to) / 2;
            else
                z = std::max(a, Rat(0)) + 1;
            break;
        }
        if (!z) throw std::logic_error("construction member never wins on its ray");
        // point on the normalized ray, mapped back: reflect then translate
        Rat x = *z * Rat(neg[l].first), y = *z * Rat(neg[l].second);
        if (con.reflect_x) x = -x;
        if (con.reflect_y) y = -y;
        cert.witnesses.push_back({Point{x + star.apex[0], y + star.apex[1]}, s});
    }
    con.w_points = std::move(w);

    auto check = verify_certificate(cert, star_to_prevariety(star));
    if (!check.ok) throw std::logic_error("star certificate failed: " + check.diagnostic);
    return {std::move(con), std::move(cert)};
}

struct StarUpperReport {
    Int k, B;
    std::size_t search_value = 0;
    Int bound; // kB + 1
    bool within_bound = false;
    bool budget_exhausted = false;
};

// Search lower bound on TH-box(k) checked against the upper bound kB+1.
inline StarUpperReport star_upper_check(const Star& star, const Int& k, std::size_t budget) {
    if (star.dim() != 2) throw std::invalid_argument("star upper check needs R^2");
    StarUpperReport rep;
    rep.k = k;
    rep.B = star_B(star);
    rep.bound = k * rep.B + 1;
    MonomialGrid grid{2, k, GridShape::Box};
    auto sr = search_max_independent(grid.enumerate(), star_to_prevariety(star), budget);
    rep.search_value = sr.size;
    rep.budget_exhausted = sr.budget_exhausted;
    rep.within_bound = Int(sr.size) <= rep.bound;
    return rep;
}

struct ConcaveSlopesReport {
    bool ok = false;
    std::size_t fail_index = 0;     // meaningful when !ok
    std::size_t t = 0;              // doubling holds through this index
    std::vector<Rat> breakpoints;   // z_i = a_{i-1} - a_i, i = 1..t
    Rat z0;                         // threshold beyond which only slopes 0..t matter
};

// Slopes of min{i z + a_i} on the nonnegative ray: with a_{i-1} >= 2 a_i
// through index t and positive (possibly infinite) tails, every slope 0..t is
// attained; each breakpoint is checked by exact envelope evaluation.
inline ConcaveSlopesReport concave_slopes(const std::vector<ExtRat>& coeffs) {
    ConcaveSlopesReport rep;
    if (coeffs.empty()) throw std::invalid_argument("no coefficients");
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_inf()) continue;
        if (coeffs[i].finite() <= 0) {
            rep.fail_index = i;
            return rep;
        }
    }
    if (coeffs[0].is_inf()) {
        rep.fail_index = 0;
        return rep;
    }
    std::size_t t = 0;
    while (t + 1 < coeffs.size() && !coeffs[t + 1].is_inf() &&
           coeffs[t].finite() >= 2 * coeffs[t + 1].finite())
        ++t;
    rep.t = t;

    auto h = [&](const Rat& z) {
        ExtRat best = ExtRat::infinity();
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i].is_inf()) continue;
            ExtRat val(coeffs[i].finite() + Rat(Int(i)) * z);
            if (val < best) best = val;
        }
        return best.finite();
    };

    for (std::size_t i = 1; i <= t; ++i) {
        Rat z = coeffs[i - 1].finite() - coeffs[i].finite();
        rep.breakpoints.push_back(z);
        if (h(z) != coeffs[i].finite() + Rat(Int(i)) * z) {
            rep.fail_index = i;
            rep.breakpoints.clear();
            return rep;
        }
    }
    rep.z0 = 0;
    for (std::size_t j = t + 1; j < coeffs.size(); ++j) {
        if (coeffs[j].is_inf()) continue;
        Rat zj = (coeffs[t].finite() - coeffs[j].finite()) / Rat(Int(j) - Int(t));
        if (zj > rep.z0) rep.z0 = zj;
    }
    rep.ok = true;
    return rep;
}

struct DegreeBounds {
    Rat lower, upper;
    std::vector<std::string> evidence;
};

// Degree bounds for a one-dimensional prevariety: subadditive lower bound
// from the TH sweep with c = branch count, and the sum of observed per-branch
// class-count slopes from above.
inline DegreeBounds degree_bounds(const Prevariety& v, GridShape shape, const Int& kmax,
                                  std::size_t search_budget = 0) {
    if (v.empty()) throw std::invalid_argument("empty prevariety");
    if (kmax < 2) throw std::invalid_argument("kmax must be at least 2");
    std::size_t c = v.branch_count();
    std::vector<std::pair<Int, Rat>> sweep;
    for (Int k = 1; k <= kmax; ++k) {
        auto rec = th_union_bounds(v, {v.ambient_dim(), k, shape}, search_budget);
        sweep.emplace_back(k, Rat(Int(rec.lower)));
    }
    DegreeBounds out{Rat(0), Rat(0), {}};
    Rat lower = subadditive_lower(sweep, Int(c));
    out.lower = lower > 0 ? lower : Rat(0);
    out.evidence.push_back("lower: subadditive bound over k=1.." + kmax.str() +
                           " with c=" + std::to_string(c));
    Rat upper = 0;
    for (const auto& p : v.piece_polyhedra()) {
        auto t_hi = count_classes(p.direction_basis(), {v.ambient_dim(), kmax, shape}).count();
        auto t_lo = count_classes(p.direction_basis(), {v.ambient_dim(), kmax - 1, shape}).count();
        upper += Rat(Int(t_hi) - Int(t_lo));
    }
    out.upper = upper;
    out.evidence.push_back("upper: sum of per-branch class-count slopes observed at kmax=" +
                           kmax.str());
    if (out.lower > out.upper) throw std::logic_error("degree bounds inverted");
    return out;
}

// Star specialization under the box grid: the recursion gives the lower
// bound, the kB+1 inequality caps the limit at exactly B.
inline DegreeBounds degree_bounds_star(const Star& star, const Int& kmax,
                                       std::size_t search_budget = 0) {
    (void)search_budget;
    Int B = star_B(star);
    DegreeBounds out{Rat(0), Rat(B), {}};
    std::vector<std::pair<Int, Rat>> sweep;
    Int m = 0;
    {
        // branch count = ray count
        m = Int(star.directions.size());
    }
    Int C = 0;
    for (const auto& d : star.directions) {
        Int u = d[0] < 0 ? -d[0] : d[0], v = d[1] < 0 ? -d[1] : d[1];
        C += isqrt_ceil(u * u + v * v);
    }
    for (Int k = C + 1; k <= kmax; ++k) {
        auto sc = star_lower_construct(star, k);
        sweep.emplace_back(k, Rat(Int(sc.construction.w_points.size())));
    }
    if (!sweep.empty()) {
        Rat lower = subadditive_lower(sweep, m);
        out.lower = lower > 0 ? lower : Rat(0);
    }
    out.evidence.push_back("lower: subadditive bound over the |W| sweep, c = ray count");
    out.evidence.push_back("upper: B from the box bound TH(k) <= kB + 1");
    if (out.lower > out.upper) throw std::logic_error("star degree bounds inverted");
    return out;
}

} // namespace tropdeg
