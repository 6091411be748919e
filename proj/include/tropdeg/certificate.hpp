#pragma once

// Certificates of tropical independence: members (f_j, b_j) plus one witness
// point per member at which that member is the strict unique minimizer of
// min_j {b_j + f_j}. Construction goes through the evaluation matrix, the
// assignment solver, and the diagonal-lemma potentials; verification is a
// direct exact check of every inequality.

#include "tropdeg/matching.hpp"
#include "tropdeg/polyhedron.hpp"
#include "tropdeg/prevariety.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace tropdeg {

struct Certificate {
    struct Member {
        TropPoly poly;
        PerturbedScalar b;
    };
    struct Witness {
        Point point;
        std::size_t minimizer; // member index (0-based)
    };
    std::vector<Member> members;
    std::vector<Witness> witnesses;
};

struct VerifyOutcome {
    bool ok;
    std::string diagnostic;
};

// Exact verification; never throws. The diagnostic names the first violated
// condition (1-based indices, matching the serialized form).
inline VerifyOutcome verify_certificate(const Certificate& cert, const Prevariety& v) {
    if (cert.members.empty()) return {false, "certificate has no members"};
    if (cert.members.size() != cert.witnesses.size())
        return {false, "member/witness count mismatch"};
    std::vector<bool> covered(cert.members.size(), false);
    for (std::size_t j = 0; j < cert.witnesses.size(); ++j) {
        std::size_t m = cert.witnesses[j].minimizer;
        if (m >= cert.members.size())
            return {false, "witness " + std::to_string(j + 1) + " names a missing member"};
        if (covered[m])
            return {false, "member " + std::to_string(m + 1) + " has two witnesses"};
        covered[m] = true;
    }
    for (std::size_t j = 0; j < cert.witnesses.size(); ++j) {
        const auto& w = cert.witnesses[j];
        if (!v.contains(w.point))
            return {false, "witness " + std::to_string(j + 1) + " is not in the prevariety"};
        std::size_t m = w.minimizer;
        PerturbedScalar own = cert.members[m].b + eval_poly(cert.members[m].poly, w.point).value;
        for (std::size_t i = 0; i < cert.members.size(); ++i) {
            if (i == m) continue;
            PerturbedScalar other = cert.members[i].b + eval_poly(cert.members[i].poly, w.point).value;
            if (own == other)
                return {false, "tie at witness " + std::to_string(j + 1) + " between members " +
                                   std::to_string(m + 1) + " and " + std::to_string(i + 1)};
            if (other < own) {
                std::ostringstream os;
                os << "witness " << j + 1 << ": member " << i + 1 << " (value " << other
                   << ") undercuts member " << m + 1 << " (value " << own << ")";
                return {false, os.str()};
            }
        }
    }
    return {true, ""};
}

// Build a certificate for fs with the given witnesses, or fail when the
// evaluation matrix is tropically singular. Points are permuted internally so
// the optimal matching is the identity; the potentials become the b_j.
inline std::optional<Certificate> certify_from_points(const std::vector<TropPoly>& fs,
                                                      const std::vector<Point>& vs,
                                                      const Prevariety& v) {
    if (fs.size() != vs.size()) throw std::invalid_argument("need one point per polynomial");
    if (fs.empty()) throw std::invalid_argument("no polynomials");
    for (const auto& p : vs)
        if (!v.contains(p)) throw std::invalid_argument("witness point not in prevariety");

    EvalMatrix a = build_eval_matrix(fs, vs);
    MatchingResult mm;
    try {
        mm = min_matching(a);
    } catch (const std::invalid_argument&) {
        return std::nullopt; // no finite matching
    }
    if (!mm.unique) return std::nullopt;

    std::vector<Point> perm_points(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) perm_points[i] = vs[mm.permutation[i]];
    EvalMatrix b = build_eval_matrix(fs, perm_points);
    auto w = dual_potentials(b);

    Certificate cert;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        cert.members.push_back({fs[i], w[i]});
        cert.witnesses.push_back({perm_points[i], i});
    }
    auto check = verify_certificate(cert, v);
    if (!check.ok) throw std::logic_error("constructed certificate fails: " + check.diagnostic);
    if (fs.size() <= 8 && tropical_rank(b) != fs.size())
        throw std::logic_error("certified matrix does not have full tropical rank");
    return cert;
}

// Points of P whose chosen coordinates are co-ordered with the given family
// bs (per-coordinate orders exactly reversed). Construction: relative
// interior base point, dense per-coordinate ranks of bs, offsets -delta*rank
// along directions of L whose chosen-coordinate projections form the standard
// basis, with delta halved until every point lands in P.
inline std::vector<Point> co_ordered_points(const std::vector<RatVec>& bs, const Polyhedron& p,
                                            const std::vector<std::size_t>& coords) {
    const std::size_t m = p.dim();
    if (coords.size() != m) throw std::invalid_argument("need dim(P) chosen coordinates");
    for (const auto& b : bs)
        if (b.size() != m) throw std::invalid_argument("vector length must equal dim(P)");
    for (std::size_t i = 0; i < bs.size(); ++i)
        for (std::size_t j = i + 1; j < bs.size(); ++j)
            if (bs[i] == bs[j]) throw std::invalid_argument("vectors must be pairwise distinct");

    Point x0 = p.relative_interior_point();
    if (m == 0) {
        if (bs.size() > 1) throw std::invalid_argument("P is a point but several vectors given");
        return std::vector<Point>(bs.size(), x0);
    }

    // Directions e_c in span(L) projecting to the standard basis of the
    // chosen coordinates; their existence is the full-rank precondition.
    const RatMat& L = p.direction_basis();
    RatMat proj_t(m, RatVec(L.size())); // (L restricted to coords)^T
    for (std::size_t r = 0; r < L.size(); ++r)
        for (std::size_t c = 0; c < m; ++c) proj_t[c][r] = L[r][coords[c]];
    RatMat dirs;
    for (std::size_t c = 0; c < m; ++c) {
        RatVec e(m, Rat(0));
        e[c] = 1;
        auto y = solve_linear(proj_t, e, L.size());
        if (!y) throw std::invalid_argument("projection of L onto chosen coordinates is singular");
        RatVec d(p.ambient_dim(), Rat(0));
        for (std::size_t r = 0; r < L.size(); ++r)
            for (std::size_t j = 0; j < d.size(); ++j) d[j] += (*y)[r] * L[r][j];
        dirs.push_back(std::move(d));
    }

    // Dense ranks per chosen coordinate: number of distinct values strictly
    // below, so ties share a rank.
    std::vector<std::vector<Rat>> rank(bs.size(), std::vector<Rat>(m));
    for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t i = 0; i < bs.size(); ++i) {
            std::vector<Rat> below;
            for (std::size_t j = 0; j < bs.size(); ++j)
                if (bs[j][c] < bs[i][c]) below.push_back(bs[j][c]);
            std::sort(below.begin(), below.end());
            below.erase(std::unique(below.begin(), below.end()), below.end());
            rank[i][c] = Rat(Int(below.size()));
        }
    }

    Rat delta = 1;
    for (int attempt = 0; attempt < 256; ++attempt) {
        std::vector<Point> pts;
        bool all_in = true;
        for (std::size_t i = 0; i < bs.size(); ++i) {
            Point v = x0;
            for (std::size_t c = 0; c < m; ++c)
                for (std::size_t j = 0; j < v.size(); ++j)
                    v[j] -= delta * rank[i][c] * dirs[c][j];
            if (!p.contains(v)) {
                all_in = false;
                break;
            }
            pts.push_back(std::move(v));
        }
        if (all_in) return pts;
        delta /= 2;
    }
    throw std::logic_error("no delta admits co-ordered points inside P");
}

} // namespace tropdeg
