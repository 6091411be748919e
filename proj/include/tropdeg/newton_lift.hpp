#pragma once

// Newton lift of a certificate on a one-dimensional prevariety in R^2, and
// the r-fold refinement construction behind the tropical-degree theorem.
//
// Genericity: the lifted coefficients receive a symbolic perturbation
// a_i + w_i * eta (eta an infinitesimal, w_i integer weights). The branch
// envelopes are computed over PerturbedScalar, so "no three of the lifted
// lines meet a branch at one point" is an exact lexicographic condition. The
// weight scheme starts with the term index and escalates to powers of
// 2, 3, 4, ... whenever a genericity check fails; each obstruction is a
// nonzero polynomial in the base, so the escalation terminates. Reported
// certificates realize eta as a small positive rational and are re-verified
// exactly.

#include "tropdeg/certificate.hpp"
#include "tropdeg/envelope.hpp"

#include <map>
#include <set>
#include <utility>
#include <vector>

namespace tropdeg {

struct NewtonLift {
    struct SupportPoint {
        Int i, j;            // exponents
        Rat a;               // lifted coefficient (b_j + the monomial's own coefficient)
        Rat weight;          // perturbation weight w
        std::size_t member;  // index into the certificate
    };
    struct BranchVertex {
        std::size_t branch;           // segment index
        PerturbedScalar t;            // envelope vertex parameter (symbolic)
        std::size_t left, right;      // support indices of the two incident edges
    };
    struct AdjacencyEdge {
        std::size_t a, b;             // support indices
        std::size_t vertex;           // index of a witnessing BranchVertex
    };

    std::vector<SupportPoint> support;
    std::vector<Segment> branches;
    std::size_t point_branches = 0;   // zero-dimensional pieces (count toward c)
    std::vector<BranchVertex> vertices;
    std::vector<AdjacencyEdge> graph; // deduplicated support adjacencies
    std::size_t components = 0;
};

namespace detail {

inline std::size_t count_components(std::size_t n, const std::vector<NewtonLift::AdjacencyEdge>& es) {
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t comps = n;
    for (const auto& e : es) {
        auto ra = find(e.a), rb = find(e.b);
        if (ra != rb) {
            parent[ra] = rb;
            --comps;
        }
    }
    return comps;
}

inline std::optional<PerturbedScalar> seg_bound(const std::optional<Rat>& b) {
    if (!b) return std::nullopt;
    return PerturbedScalar(*b);
}

} // namespace detail

// Build the lift: per-branch envelopes of the lifted lines under symbolic
// perturbation, the adjacency graph from shared envelope vertices, and the
// component bound of the connectivity lemma (checked, not assumed).
inline NewtonLift build_newton_lift(const Certificate& cert, const Prevariety& v) {
    if (v.empty() || v.ambient_dim() != 2)
        throw std::invalid_argument("newton lift needs a one-dimensional prevariety in R^2");
    auto check = verify_certificate(cert, v);
    if (!check.ok) throw std::invalid_argument("certificate does not verify: " + check.diagnostic);

    NewtonLift lift;
    for (std::size_t m = 0; m < cert.members.size(); ++m) {
        const auto& mem = cert.members[m];
        if (!mem.poly.is_monomial())
            throw std::invalid_argument("lift needs single-monomial members");
        const auto& term = mem.poly.terms()[0];
        PerturbedScalar a = mem.b + term.coeff;
        if (!a.is_pure() || a.is_inf())
            throw std::invalid_argument("lift needs finite rational coefficients");
        lift.support.push_back({term.monomial.exponents[0], term.monomial.exponents[1],
                                a.base().finite(), Rat(0), m});
    }
    auto branches = v.one_dim_branches();
    lift.branches = branches.segments;
    lift.point_branches = branches.points.size();

    for (int attempt = 0; attempt < 64; ++attempt) {
        for (std::size_t i = 0; i < lift.support.size(); ++i) {
            if (attempt == 0)
                lift.support[i].weight = Rat(Int(i));
            else {
                Rat w = 1;
                for (std::size_t p = 0; p < i; ++p) w *= Rat(Int(attempt) + 1);
                lift.support[i].weight = w;
            }
        }
        lift.vertices.clear();
        lift.graph.clear();
        bool generic = true;

        for (std::size_t l = 0; l < lift.branches.size() && generic; ++l) {
            const Segment& seg = lift.branches[l];
            std::vector<EnvLine<PerturbedScalar>> lines;
            for (std::size_t i = 0; i < lift.support.size(); ++i) {
                const auto& s = lift.support[i];
                Rat slope = Rat(s.i) * Rat(seg.dir[0]) + Rat(s.j) * Rat(seg.dir[1]);
                Rat base_off = s.a + Rat(s.i) * seg.base[0] + Rat(s.j) * seg.base[1];
                lines.push_back({slope, PerturbedScalar(ExtRat(base_off), s.weight), i});
            }
            auto env = clip_envelope(lower_envelope(lines), detail::seg_bound(seg.t_lo),
                                     detail::seg_bound(seg.t_hi));
            for (const auto& vx : env.vertices) {
                // exactly two lines may attain the minimum at a vertex
                PerturbedScalar val = env_value(lines[vx.left_line], vx.t);
                std::size_t ties = 0;
                for (const auto& ln : lines)
                    if (env_value(ln, vx.t) == val) ++ties;
                if (ties != 2) {
                    generic = false;
                    break;
                }
                lift.vertices.push_back({l, vx.t, vx.left_line, vx.right_line});
            }
        }
        if (!generic) continue;

        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (std::size_t vi = 0; vi < lift.vertices.size(); ++vi) {
            auto a = lift.vertices[vi].left, b = lift.vertices[vi].right;
            auto key = std::minmax(a, b);
            if (seen.insert(key).second) lift.graph.push_back({key.first, key.second, vi});
        }
        lift.components = detail::count_components(lift.support.size(), lift.graph);
        std::size_t c = lift.branches.size() + lift.point_branches;
        if (lift.components > c)
            throw std::logic_error("adjacency graph exceeds the branch-count component bound");
        return lift;
    }
    throw std::logic_error("no perturbation weight scheme achieved genericity");
}

// Exact check that a graph edge lifts to an edge of the lower hull: a
// supporting affine function h with h = a at both endpoints and h < a
// strictly elsewhere, decided by Fourier-Motzkin over the perturbed scalars.
inline bool edge_on_lower_hull(const NewtonLift& lift, std::size_t ea, std::size_t eb) {
    std::vector<LinCon<PerturbedScalar>> sys;
    auto row = [&](std::size_t s, Rel rel) {
        const auto& p = lift.support[s];
        LinCon<PerturbedScalar> c;
        c.coeffs = {Rat(p.i), Rat(p.j), Rat(1)};
        c.rel = rel;
        c.rhs = PerturbedScalar(ExtRat(p.a), p.weight);
        return c;
    };
    sys.push_back(row(ea, Rel::EQ));
    sys.push_back(row(eb, Rel::EQ));
    for (std::size_t s = 0; s < lift.support.size(); ++s) {
        if (s == ea || s == eb) continue;
        auto c = row(s, Rel::GT);
        // h(i,j) < a_s: flip to -h >= -a form via GT with negated coefficients
        for (auto& x : c.coeffs) x = -x;
        c.rhs = -c.rhs;
        sys.push_back(std::move(c));
    }
    return fm_feasible(std::move(sys), 3);
}

struct RefinementParams {
    Int r;
    Rat eta;                        // realized perturbation magnitude
    Rat epsilon;                    // final curvature parameter
    std::vector<Rat> witness_params; // interior witness parameters, in member order
};

struct RefinementResult {
    Certificate certificate;
    RefinementParams params;
    NewtonLift lift;
};

// The r-fold refinement: subdivide every adjacency edge of the lift into r
// parts, bend the subdivided coefficients by a strictly convex term, and put
// interior witnesses near each shared envelope vertex. epsilon starts at
// (minimal vertex slack)/(4 r^2) and is halved until the output verifies.
inline RefinementResult refine_certificate(const Certificate& cert, const Prevariety& v,
                                           const Int& r) {
    if (r < 1) throw std::invalid_argument("refinement order must be at least 1");
    auto lift = build_newton_lift(cert, v); // also validates cert and dimensions
    if (r == 1) {
        RefinementResult res{cert, {r, Rat(0), Rat(0), {}}, std::move(lift)};
        return res;
    }

    // Realize eta: small enough to keep every input-certificate inequality
    // strict (margin sigma against total weight spread) and to keep the sign
    // of every symbolic vertex slack.
    Rat sigma; // minimal strict margin of the input certificate
    bool have_sigma = false;
    for (const auto& w : cert.witnesses) {
        PerturbedScalar own =
            cert.members[w.minimizer].b + eval_poly(cert.members[w.minimizer].poly, w.point).value;
        for (std::size_t i = 0; i < cert.members.size(); ++i) {
            if (i == w.minimizer) continue;
            PerturbedScalar other = cert.members[i].b + eval_poly(cert.members[i].poly, w.point).value;
            Rat margin = (other - own).base().finite();
            if (!have_sigma || margin < sigma) {
                sigma = margin;
                have_sigma = true;
            }
        }
    }
    Rat wmax(0);
    for (const auto& s : lift.support)
        if (s.weight > wmax) wmax = s.weight;
    Rat eta = have_sigma ? sigma / (2 * (wmax + 1)) : Rat(1);

    auto realize_positive = [&](const PerturbedScalar& q) {
        // q > 0 lexicographically; shrink eta until the realization is positive
        if (!(PerturbedScalar{0} < q)) throw std::logic_error("nonpositive symbolic margin");
        while (q.realize(eta).finite() <= 0) eta /= 2;
    };
    for (const auto& vx : lift.vertices) {
        const Segment& seg = lift.branches[vx.branch];
        std::vector<EnvLine<PerturbedScalar>> lines;
        for (const auto& s : lift.support) {
            Rat slope = Rat(s.i) * Rat(seg.dir[0]) + Rat(s.j) * Rat(seg.dir[1]);
            Rat base_off = s.a + Rat(s.i) * seg.base[0] + Rat(s.j) * seg.base[1];
            lines.push_back({slope, PerturbedScalar(ExtRat(base_off), s.weight), s.member});
        }
        PerturbedScalar val = env_value(lines[vx.left], vx.t);
        for (std::size_t i = 0; i < lines.size(); ++i) {
            if (i == vx.left || i == vx.right) continue;
            realize_positive(env_value(lines[i], vx.t) - val);
        }
        if (seg.t_lo) realize_positive(vx.t - PerturbedScalar(*seg.t_lo));
        if (seg.t_hi) realize_positive(PerturbedScalar(*seg.t_hi) - vx.t);
    }

    // Realized data.
    auto realized_a = [&](std::size_t s) { return lift.support[s].a + lift.support[s].weight * eta; };

    // Minimal positive slack over vertices for the epsilon seed.
    Rat slack;
    bool have_slack = false;
    std::vector<Rat> vertex_t(lift.vertices.size());
    for (std::size_t vi = 0; vi < lift.vertices.size(); ++vi) {
        const auto& vx = lift.vertices[vi];
        const Segment& seg = lift.branches[vx.branch];
        Rat t = vx.t.realize(eta).finite();
        vertex_t[vi] = t;
        Point pv = seg.at(t);
        Rat vertex_val = realized_a(vx.left) + Rat(lift.support[vx.left].i) * pv[0] +
                         Rat(lift.support[vx.left].j) * pv[1];
        for (std::size_t s = 0; s < lift.support.size(); ++s) {
            if (s == vx.left || s == vx.right) continue;
            Rat val = realized_a(s) + Rat(lift.support[s].i) * pv[0] + Rat(lift.support[s].j) * pv[1];
            Rat gap = val - vertex_val;
            if (gap <= 0) throw std::logic_error("vertex slack lost in realization");
            if (!have_slack || gap < slack) {
                slack = gap;
                have_slack = true;
            }
        }
    }
    Rat epsilon = have_slack ? slack / (4 * Rat(r) * Rat(r)) : Rat(1, 4);

    for (int halvings = 0; halvings < 64; ++halvings, epsilon /= 2) {
        std::map<std::pair<Int, Int>, std::pair<Rat, Certificate::Witness>> members;
        auto consider = [&](Int i, Int j, const Rat& coeff, const Certificate::Witness& w) {
            auto key = std::make_pair(i, j);
            auto it = members.find(key);
            if (it == members.end())
                members.emplace(key, std::make_pair(coeff, w));
            else if (coeff < it->second.first)
                it->second = {coeff, w};
        };
        // scaled original support, with the original witnesses
        for (std::size_t s = 0; s < lift.support.size(); ++s) {
            const auto& sp = lift.support[s];
            std::size_t widx = 0;
            for (std::size_t w = 0; w < cert.witnesses.size(); ++w)
                if (cert.witnesses[w].minimizer == sp.member) widx = w;
            consider(Int(r) * sp.i, Int(r) * sp.j, Rat(r) * realized_a(s),
                     {cert.witnesses[widx].point, 0});
        }
        // interior points of every adjacency edge
        std::vector<Rat> witness_params;
        for (const auto& ge : lift.graph) {
            const auto& vx = lift.vertices[ge.vertex];
            const Segment& seg = lift.branches[vx.branch];
            const auto& A = lift.support[vx.left];
            const auto& B = lift.support[vx.right];
            Rat sA = Rat(A.i) * Rat(seg.dir[0]) + Rat(A.j) * Rat(seg.dir[1]);
            Rat sB = Rat(B.i) * Rat(seg.dir[0]) + Rat(B.j) * Rat(seg.dir[1]);
            Rat t0 = vertex_t[ge.vertex];
            for (Int p = 1; p < r; ++p) {
                Int i = (r - p) * A.i + p * B.i;
                Int j = (r - p) * A.j + p * B.j;
                Rat coeff = Rat(r - p) * realized_a(vx.left) + Rat(p) * realized_a(vx.right) -
                            epsilon * Rat(p) * Rat(r - p);
                Rat tw = t0 + epsilon * Rat(r - 2 * p) / (sB - sA);
                witness_params.push_back(tw);
                consider(i, j, coeff, {seg.at(tw), 0});
            }
        }

        Certificate out;
        for (auto& [key, val] : members) {
            out.members.push_back({TropPoly::monomial(Monomial({key.first, key.second})),
                                   PerturbedScalar(val.first)});
            val.second.minimizer = out.members.size() - 1;
            out.witnesses.push_back(val.second);
        }
        std::size_t c = lift.branches.size() + lift.point_branches;
        if (out.members.size() + Int(c) * r < lift.support.size() * r)
            throw std::logic_error("refined support smaller than the counting bound");
        if (verify_certificate(out, v).ok) {
            RefinementResult res{std::move(out), {r, eta, epsilon, std::move(witness_params)},
                                 std::move(lift)};
            return res;
        }
    }
    throw BudgetExceeded("refinement verification failed down to the smallest epsilon tried");
}

} // namespace tropdeg
