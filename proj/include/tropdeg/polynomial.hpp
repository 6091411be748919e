#pragma once

// Min-plus polynomials: finite sets of (exponent vector, coefficient) terms
// evaluated as min over terms of <exponents, x> + coefficient. Exponents are
// nonnegative integers; coefficients are PerturbedScalar (rational, +inf, or
// rational plus an infinitesimal part). Construction canonicalizes: duplicate
// exponent vectors merge by taking the minimum coefficient, and at least one
// coefficient must be finite.

#include "tropdeg/scalar.hpp"
#include "tropdeg/segment.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace tropdeg {

struct Monomial {
    std::vector<Int> exponents; // nonnegative

    Monomial() = default;
    explicit Monomial(std::vector<Int> e) : exponents(std::move(e)) {
        for (const auto& v : exponents)
            if (v < 0) throw std::invalid_argument("negative exponent");
    }
    std::size_t dim() const { return exponents.size(); }
    Int degree() const {
        Int s = 0;
        for (const auto& v : exponents) s += v;
        return s;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exponents == b.exponents;
    }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        return a.exponents < b.exponents;
    }
};

inline Rat dot(const Monomial& m, const Point& x) {
    Rat s = 0;
    for (std::size_t i = 0; i < m.exponents.size(); ++i) s += Rat(m.exponents[i]) * x[i];
    return s;
}

inline Rat dot(const Monomial& m, const std::vector<Int>& w) {
    Rat s = 0;
    for (std::size_t i = 0; i < m.exponents.size(); ++i) s += Rat(m.exponents[i] * w[i]);
    return s;
}

class TropPoly {
public:
    struct Term {
        Monomial monomial;
        PerturbedScalar coeff;
    };

    TropPoly(std::size_t dim, std::vector<Term> terms) : dim_(dim) {
        std::map<std::vector<Int>, PerturbedScalar> merged;
        for (auto& t : terms) {
            if (t.monomial.dim() != dim_)
                throw std::invalid_argument("term dimension mismatch");
            auto it = merged.find(t.monomial.exponents);
            if (it == merged.end())
                merged.emplace(t.monomial.exponents, t.coeff);
            else if (t.coeff < it->second)
                it->second = t.coeff;
        }
        bool any_finite = false;
        for (auto& [e, c] : merged) {
            any_finite = any_finite || !c.is_inf();
            terms_.push_back({Monomial(e), c});
        }
        if (terms_.empty()) throw std::invalid_argument("polynomial needs a term");
        if (!any_finite) throw std::invalid_argument("polynomial needs a finite term");
    }

    // Single monomial with coefficient 0 (the common case in this library).
    static TropPoly monomial(const Monomial& m, PerturbedScalar c = PerturbedScalar(0)) {
        return TropPoly(m.dim(), {{m, std::move(c)}});
    }

    std::size_t dim() const { return dim_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_monomial() const { return terms_.size() == 1; }

private:
    std::size_t dim_;
    std::vector<Term> terms_;
};

struct EvalResult {
    PerturbedScalar value;
    std::set<std::size_t> argmin; // term indices attaining the minimum
};

inline EvalResult eval_poly(const TropPoly& f, const Point& x) {
    if (x.size() != f.dim()) throw std::invalid_argument("point dimension mismatch");
    EvalResult res;
    res.value = PerturbedScalar::infinity();
    for (std::size_t i = 0; i < f.terms().size(); ++i) {
        const auto& t = f.terms()[i];
        PerturbedScalar v = t.coeff + PerturbedScalar(dot(t.monomial, x));
        if (v < res.value) {
            res.value = v;
            res.argmin = {i};
        } else if (v == res.value && !v.is_inf()) {
            res.argmin.insert(i);
        }
    }
    if (res.value.is_inf())
        res.argmin.clear(); // cannot happen for well-formed polynomials
    return res;
}

inline Int poly_degree(const TropPoly& f) {
    Int best = 0;
    bool seen = false;
    for (const auto& t : f.terms()) {
        if (t.coeff.is_inf()) continue;
        Int d = t.monomial.degree();
        if (!seen || d > best) best = d, seen = true;
    }
    return best;
}

// Restriction of f to {base + t*dir}: one affine piece per term, slope
// <exponents, dir>, offset coeff + <exponents, base>. Piece i corresponds to
// term i of f.
struct UnivariateRestriction {
    struct Piece {
        Rat slope;
        PerturbedScalar offset;
        std::size_t term; // originating term index
    };
    std::vector<Piece> pieces;
    std::optional<Rat> t_lo, t_hi;
    bool lo_closed = true, hi_closed = true;

    PerturbedScalar eval(const Rat& t) const {
        PerturbedScalar best = PerturbedScalar::infinity();
        for (const auto& p : pieces) {
            PerturbedScalar v = p.offset + PerturbedScalar(p.slope * t);
            if (v < best) best = v;
        }
        return best;
    }
};

inline UnivariateRestriction restrict_to_segment(const TropPoly& f, const Segment& seg) {
    if (seg.dim() != f.dim()) throw std::invalid_argument("segment dimension mismatch");
    UnivariateRestriction r;
    r.t_lo = seg.t_lo;
    r.t_hi = seg.t_hi;
    r.lo_closed = seg.lo_closed;
    r.hi_closed = seg.hi_closed;
    for (std::size_t i = 0; i < f.terms().size(); ++i) {
        const auto& t = f.terms()[i];
        r.pieces.push_back({dot(t.monomial, seg.dir),
                            t.coeff + PerturbedScalar(dot(t.monomial, seg.base)), i});
    }
    return r;
}

} // namespace tropdeg
