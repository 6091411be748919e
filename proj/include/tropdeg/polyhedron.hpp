#pragma once

// Rational polyhedra in H-representation. Construction rejects empty sets,
// finds implicit equalities exactly, and caches the direction space L (the
// shift of the affine hull through the origin) with its dimension m.

#include "tropdeg/fourier_motzkin.hpp"
#include "tropdeg/linalg.hpp"
#include "tropdeg/segment.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace tropdeg {

struct Halfspace {
    RatVec normal;
    Rat constant;
    Rel rel; // GE: <normal,x> >= constant, EQ: equality

    Halfspace(RatVec n, Rat c, Rel r) : normal(std::move(n)), constant(std::move(c)), rel(r) {
        if (r == Rel::GT) throw std::invalid_argument("halfspaces are closed");
        bool nonzero = false;
        for (const auto& v : normal) nonzero = nonzero || v != 0;
        if (!nonzero) throw std::invalid_argument("zero normal");
    }
};

class Polyhedron {
public:
    // An empty constraint list is all of R^n.
    Polyhedron(std::size_t n, std::vector<Halfspace> cons) : cons_(std::move(cons)), n_(n) {
        for (const auto& h : cons_)
            if (h.normal.size() != n_) throw std::invalid_argument("mixed dimensions");
        if (!fm_feasible(as_lincons(), n_)) throw std::invalid_argument("empty polyhedron");
        compute_structure();
    }

    static std::optional<Polyhedron> try_make(std::size_t n, std::vector<Halfspace> cons) {
        try {
            return Polyhedron(n, std::move(cons));
        } catch (const std::invalid_argument&) {
            return std::nullopt;
        }
    }

    std::size_t ambient_dim() const { return n_; }
    std::size_t dim() const { return m_; }
    const RatMat& direction_basis() const { return L_; }
    const std::vector<Halfspace>& constraints() const { return cons_; }

    bool contains(const Point& x) const {
        if (x.size() != n_) throw std::invalid_argument("point dimension mismatch");
        for (const auto& h : cons_) {
            Rat v = dot(h.normal, x);
            if (h.rel == Rel::EQ ? v != h.constant : v < h.constant) return false;
        }
        return true;
    }

    // A point in the relative interior (strictly inside every non-implied
    // inequality, on every equality).
    Point relative_interior_point() const {
        std::vector<LinCon<Rat>> sys;
        for (std::size_t i = 0; i < cons_.size(); ++i) {
            Rel r = cons_[i].rel;
            if (r == Rel::GE && !implicit_eq_[i]) r = Rel::GT;
            if (implicit_eq_[i]) r = Rel::EQ;
            sys.push_back({cons_[i].normal, r, cons_[i].constant});
        }
        auto p = fm_point(std::move(sys), n_);
        if (!p) throw std::logic_error("nonempty polyhedron without relative interior");
        return *p;
    }

    Polyhedron translated(const RatVec& t) const {
        std::vector<Halfspace> cs;
        for (const auto& h : cons_)
            cs.emplace_back(h.normal, h.constant - dot(h.normal, t), h.rel);
        return Polyhedron(n_, std::move(cs));
    }

    // Exact interval of the line {base + t*dir} cut out by this polyhedron;
    // only meaningful when dim()==1 and base/dir span the affine hull.
    Segment to_segment() const {
        if (m_ != 1) throw std::logic_error("to_segment on polyhedron of dim != 1");
        Point base = relative_interior_point();
        RatVec dirq;
        auto w = canonical_primitive(L_[0]);
        for (const auto& v : w) dirq.push_back(Rat(v));
        std::optional<Rat> lo, hi;
        for (const auto& h : cons_) {
            Rat slope = dot(h.normal, dirq);
            Rat off = dot(h.normal, base);
            if (slope == 0) continue; // holds identically on the line
            Rat t = (h.constant - off) / slope;
            if (slope > 0) {
                if (!lo || t > *lo) lo = t;
            } else {
                if (!hi || t < *hi) hi = t;
            }
        }
        return Segment(base, dirq, lo, hi);
    }

    Point single_point() const {
        if (m_ != 0) throw std::logic_error("single_point on polyhedron of dim != 0");
        return relative_interior_point();
    }

private:
    std::vector<LinCon<Rat>> as_lincons() const {
        std::vector<LinCon<Rat>> sys;
        for (const auto& h : cons_) sys.push_back({h.normal, h.rel, h.constant});
        return sys;
    }

    void compute_structure() {
        implicit_eq_.assign(cons_.size(), false);
        for (std::size_t i = 0; i < cons_.size(); ++i) {
            if (cons_[i].rel == Rel::EQ) continue;
            auto sys = as_lincons();
            sys[i].rel = Rel::GT;
            implicit_eq_[i] = !fm_feasible(std::move(sys), n_);
        }
        RatMat eqs;
        for (std::size_t i = 0; i < cons_.size(); ++i)
            if (cons_[i].rel == Rel::EQ || implicit_eq_[i]) eqs.push_back(cons_[i].normal);
        L_ = eqs.empty() ? identity_basis() : null_space(std::move(eqs), n_);
        m_ = L_.size();
    }

    RatMat identity_basis() const {
        RatMat id(n_, RatVec(n_, Rat(0)));
        for (std::size_t i = 0; i < n_; ++i) id[i][i] = 1;
        return id;
    }

    std::vector<Halfspace> cons_;
    std::size_t n_ = 0, m_ = 0;
    RatMat L_;
    std::vector<bool> implicit_eq_;
};

// H-representation of a segment (open ends closed up; callers that care about
// openness keep the Segment).
inline Polyhedron segment_to_polyhedron(const Segment& seg) {
    std::size_t n = seg.dim();
    RatVec dirq;
    for (const auto& v : seg.dir) dirq.push_back(Rat(v));
    std::vector<Halfspace> cs;
    RatMat dir_row{dirq};
    for (auto& u : null_space(std::move(dir_row), n))
        cs.emplace_back(u, dot(u, seg.base), Rel::EQ);
    Rat d2 = dot(dirq, dirq);
    if (seg.t_lo) cs.emplace_back(dirq, dot(dirq, seg.base) + *seg.t_lo * d2, Rel::GE);
    if (seg.t_hi) {
        RatVec neg;
        for (const auto& v : dirq) neg.push_back(-v);
        cs.emplace_back(neg, -(dot(dirq, seg.base) + *seg.t_hi * d2), Rel::GE);
    }
    return Polyhedron(n, std::move(cs));
}

} // namespace tropdeg
