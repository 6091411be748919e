#pragma once

// Prevarieties as finite unions of rational polyhedra, with explicit segment
// structure for the one-dimensional case, plus stars (unions of rays with a
// common apex) and the minimizer-cell decomposition of min-plus equation
// systems.

#include "tropdeg/polyhedron.hpp"
#include "tropdeg/polynomial.hpp"

#include <variant>
#include <vector>

namespace tropdeg {

struct Star {
    Point apex;
    std::vector<std::vector<Int>> directions; // primitive, pairwise distinct

    Star(Point apex_, const std::vector<RatVec>& dirs) : apex(std::move(apex_)) {
        for (const auto& d : dirs) {
            if (d.size() != apex.size()) throw std::invalid_argument("star direction dimension");
            directions.push_back(to_primitive(d));
        }
        for (std::size_t i = 0; i < directions.size(); ++i)
            for (std::size_t j = i + 1; j < directions.size(); ++j)
                if (directions[i] == directions[j])
                    throw std::invalid_argument("duplicate star direction");
        if (directions.empty()) throw std::invalid_argument("star needs a ray");
    }

    std::size_t dim() const { return apex.size(); }
};

class Prevariety {
public:
    Prevariety() = default; // empty prevariety

    static Prevariety from_polyhedra(std::vector<Polyhedron> pieces) {
        Prevariety v;
        v.polyhedra_ = std::move(pieces);
        return v;
    }
    static Prevariety from_segments(std::vector<Segment> segs) {
        Prevariety v;
        v.segments_ = std::move(segs);
        return v;
    }
    static Prevariety from_points(std::vector<Point> pts) {
        Prevariety v;
        v.points_ = std::move(pts);
        return v;
    }

    bool empty() const { return polyhedra_.empty() && segments_.empty() && points_.empty(); }

    std::size_t ambient_dim() const {
        if (!polyhedra_.empty()) return polyhedra_[0].ambient_dim();
        if (!segments_.empty()) return segments_[0].dim();
        if (!points_.empty()) return points_[0].size();
        throw std::logic_error("ambient dimension of empty prevariety");
    }

    const std::vector<Polyhedron>& polyhedra() const { return polyhedra_; }
    const std::vector<Segment>& segments() const { return segments_; }
    const std::vector<Point>& points() const { return points_; }

    bool contains(const Point& x) const {
        for (const auto& p : polyhedra_)
            if (p.contains(x)) return true;
        for (const auto& s : segments_)
            if (s.contains(x)) return true;
        for (const auto& pt : points_)
            if (pt == x) return true;
        return false;
    }

    // Number of maximal pieces; for one-dimensional prevarieties this is the
    // branch count c.
    std::size_t branch_count() const {
        return polyhedra_.size() + segments_.size() + points_.size();
    }

    // All pieces in H-representation (for class counting).
    std::vector<Polyhedron> piece_polyhedra() const {
        std::vector<Polyhedron> out = polyhedra_;
        for (const auto& s : segments_) out.push_back(segment_to_polyhedron(s));
        for (const auto& p : points_) {
            std::vector<Halfspace> cs;
            for (std::size_t i = 0; i < p.size(); ++i) {
                RatVec e(p.size(), Rat(0));
                e[i] = 1;
                cs.emplace_back(e, p[i], Rel::EQ);
            }
            out.push_back(Polyhedron(p.size(), std::move(cs)));
        }
        return out;
    }

    struct Branches {
        std::vector<Segment> segments;
        std::vector<Point> points;
    };

    // One-dimensional structure: every piece as a segment or a point.
    // Polyhedron pieces of dimension >= 2 are rejected.
    Branches one_dim_branches() const {
        Branches b;
        b.segments = segments_;
        b.points = points_;
        for (const auto& p : polyhedra_) {
            if (p.dim() == 0)
                b.points.push_back(p.single_point());
            else if (p.dim() == 1)
                b.segments.push_back(p.to_segment());
            else
                throw std::invalid_argument("prevariety has a piece of dimension >= 2");
        }
        return b;
    }

    std::size_t max_piece_dim() const {
        std::size_t d = 0;
        for (const auto& p : polyhedra_) d = std::max(d, p.dim());
        if (!segments_.empty()) d = std::max<std::size_t>(d, 1);
        return d;
    }

    Prevariety translated(const RatVec& t) const {
        Prevariety v;
        for (const auto& p : polyhedra_) v.polyhedra_.push_back(p.translated(t));
        for (auto s : segments_) {
            for (std::size_t i = 0; i < s.base.size(); ++i) s.base[i] -= t[i];
            v.segments_.push_back(std::move(s));
        }
        for (auto p : points_) {
            for (std::size_t i = 0; i < p.size(); ++i) p[i] -= t[i];
            v.points_.push_back(std::move(p));
        }
        return v;
    }

private:
    std::vector<Polyhedron> polyhedra_;
    std::vector<Segment> segments_;
    std::vector<Point> points_;
};

inline Prevariety star_to_prevariety(const Star& s) {
    std::vector<Segment> rays;
    for (const auto& d : s.directions) {
        RatVec dirq;
        for (const auto& v : d) dirq.push_back(Rat(v));
        rays.emplace_back(s.apex, dirq, Rat(0), std::nullopt);
    }
    return Prevariety::from_segments(std::move(rays));
}

namespace detail {

inline Rat pure_coeff(const PerturbedScalar& c) {
    if (!c.is_pure()) throw std::invalid_argument("perturbed coefficient in equation system");
    return c.base().finite();
}

// Constraints for "term i is a minimizer of f"; false when the cell is
// trivially empty.
inline bool min_cell_constraints(const TropPoly& f, std::size_t i, std::vector<Halfspace>& out) {
    const auto& ti = f.terms()[i];
    Rat ci = pure_coeff(ti.coeff);
    for (std::size_t l = 0; l < f.terms().size(); ++l) {
        if (l == i || f.terms()[l].coeff.is_inf()) continue;
        const auto& tl = f.terms()[l];
        RatVec normal(f.dim());
        bool nonzero = false;
        for (std::size_t j = 0; j < f.dim(); ++j) {
            normal[j] = Rat(tl.monomial.exponents[j] - ti.monomial.exponents[j]);
            nonzero = nonzero || normal[j] != 0;
        }
        Rat rhs = ci - pure_coeff(tl.coeff);
        if (!nonzero) {
            if (Rat(0) < rhs) return false;
            continue; // same exponents cannot survive canonical form anyway
        }
        out.emplace_back(std::move(normal), std::move(rhs), Rel::GE);
    }
    return true;
}

} // namespace detail

// Union over choices of a minimizing term per side per equation of the cells
// {term i minimizes f} n {term j minimizes g} n {f = g}; empty cells dropped.
inline Prevariety decompose_equations(const std::vector<std::pair<TropPoly, TropPoly>>& eqs) {
    if (eqs.empty()) throw std::invalid_argument("no equations");
    std::size_t n = eqs[0].first.dim();
    for (const auto& [f, g] : eqs)
        if (f.dim() != n || g.dim() != n) throw std::invalid_argument("mixed dimensions");

    std::vector<Polyhedron> pieces;
    std::vector<Halfspace> current;
    auto recurse = [&](auto&& self, std::size_t e) -> void {
        if (e == eqs.size()) {
            if (auto p = Polyhedron::try_make(n, current)) pieces.push_back(std::move(*p));
            return;
        }
        const auto& [f, g] = eqs[e];
        for (std::size_t i = 0; i < f.terms().size(); ++i) {
            if (f.terms()[i].coeff.is_inf()) continue;
            for (std::size_t j = 0; j < g.terms().size(); ++j) {
                if (g.terms()[j].coeff.is_inf()) continue;
                std::size_t mark = current.size();
                bool viable = detail::min_cell_constraints(f, i, current) &&
                              detail::min_cell_constraints(g, j, current);
                if (viable) {
                    const auto& tf = f.terms()[i];
                    const auto& tg = g.terms()[j];
                    RatVec normal(n);
                    bool nonzero = false;
                    for (std::size_t c = 0; c < n; ++c) {
                        normal[c] = Rat(tf.monomial.exponents[c] - tg.monomial.exponents[c]);
                        nonzero = nonzero || normal[c] != 0;
                    }
                    Rat rhs = detail::pure_coeff(tg.coeff) - detail::pure_coeff(tf.coeff);
                    if (nonzero)
                        current.emplace_back(std::move(normal), std::move(rhs), Rel::EQ);
                    else
                        viable = rhs == 0;
                }
                if (viable) self(self, e + 1);
                current.erase(current.begin() + static_cast<std::ptrdiff_t>(mark), current.end());
            }
        }
    };
    recurse(recurse, 0);
    return Prevariety::from_polyhedra(std::move(pieces));
}

} // namespace tropdeg
