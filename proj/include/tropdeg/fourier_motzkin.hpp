#pragma once

// Fourier-Motzkin elimination over an ordered exact scalar. Variable
// coefficients are rational; right-hand sides may be Rat or PerturbedScalar
// (elimination only adds constraints and scales them by positive rationals,
// so it never needs a product of two scalars). Used for polyhedron emptiness,
// implicit equality detection, relative-interior points, and the
// supporting-plane feasibility test on lifted Newton points.
//
// Desk-scale by design: dimensions here are 2..4 and constraint counts small,
// so the classic doubling blowup never bites.

#include "tropdeg/rational.hpp"
#include "tropdeg/scalar.hpp"

#include <optional>
#include <vector>

namespace tropdeg {

enum class Rel { GE, GT, EQ };

template <typename S>
struct LinCon {
    RatVec coeffs;
    Rel rel;
    S rhs; // <coeffs, x> rel rhs
};

template <typename S>
inline S scalar_div2(const S& a);
template <>
inline Rat scalar_div2<Rat>(const Rat& a) { return a / 2; }
template <>
inline PerturbedScalar scalar_div2<PerturbedScalar>(const PerturbedScalar& a) {
    return div(a, Rat(2));
}

namespace detail {

template <typename S>
struct FMLevel {
    // constraints involving variable var (by its sign) kept for back-substitution
    std::vector<LinCon<S>> lowers, uppers;
};

// Split equalities, drop always-true rows, detect trivially false ones.
template <typename S>
inline bool preprocess(std::vector<LinCon<S>>& cons) {
    std::vector<LinCon<S>> out;
    for (auto& c : cons) {
        if (c.rel == Rel::EQ) {
            LinCon<S> ge{c.coeffs, Rel::GE, c.rhs};
            LinCon<S> le;
            le.rel = Rel::GE;
            le.rhs = -c.rhs;
            for (const auto& a : c.coeffs) le.coeffs.push_back(-a);
            out.push_back(std::move(ge));
            out.push_back(std::move(le));
        } else {
            out.push_back(std::move(c));
        }
    }
    cons.clear();
    for (auto& c : out) {
        bool all_zero = true;
        for (const auto& a : c.coeffs)
            if (a != 0) { all_zero = false; break; }
        if (all_zero) {
            S zero{0};
            bool ok = c.rel == Rel::GE ? !(zero < c.rhs) : c.rhs < zero;
            if (!ok) return false;
        } else {
            cons.push_back(std::move(c));
        }
    }
    return true;
}

// Eliminate variable `var`; false when infeasibility is already apparent.
template <typename S>
inline bool eliminate(std::vector<LinCon<S>>& cons, std::size_t var, FMLevel<S>* level) {
    std::vector<LinCon<S>> keep, pos, neg;
    for (auto& c : cons) {
        const Rat& a = c.coeffs[var];
        if (a == 0) keep.push_back(std::move(c));
        else if (a > 0) pos.push_back(std::move(c));
        else neg.push_back(std::move(c));
    }
    if (level) {
        level->lowers = pos; // a>0: x >= (rhs - rest)/a
        level->uppers = neg;
    }
    for (const auto& p : pos) {
        for (const auto& n : neg) {
            Rat pa = p.coeffs[var], na = n.coeffs[var]; // pa>0, na<0
            LinCon<S> c;
            c.rel = (p.rel == Rel::GT || n.rel == Rel::GT) ? Rel::GT : Rel::GE;
            c.coeffs.resize(p.coeffs.size());
            for (std::size_t j = 0; j < c.coeffs.size(); ++j)
                c.coeffs[j] = (-na) * p.coeffs[j] + pa * n.coeffs[j];
            c.rhs = (-na) * p.rhs + pa * n.rhs;
            bool all_zero = true;
            for (const auto& a : c.coeffs)
                if (a != 0) { all_zero = false; break; }
            if (all_zero) {
                S zero{0};
                bool ok = c.rel == Rel::GE ? !(zero < c.rhs) : c.rhs < zero;
                if (!ok) return false;
            } else {
                keep.push_back(std::move(c));
            }
        }
    }
    cons = std::move(keep);
    return true;
}

} // namespace detail

template <typename S>
inline bool fm_feasible(std::vector<LinCon<S>> cons, std::size_t nvars) {
    if (!detail::preprocess(cons)) return false;
    for (std::size_t v = nvars; v-- > 0;)
        if (!detail::eliminate<S>(cons, v, nullptr)) return false;
    return true;
}

// A feasible point, or nullopt. Chooses midpoints / unit offsets, so with all
// constraints strict the result lies in the (relative) interior.
template <typename S>
inline std::optional<std::vector<S>> fm_point(std::vector<LinCon<S>> cons, std::size_t nvars) {
    if (!detail::preprocess(cons)) return std::nullopt;
    std::vector<detail::FMLevel<S>> levels(nvars);
    for (std::size_t v = nvars; v-- > 0;)
        if (!detail::eliminate<S>(cons, v, &levels[v])) return std::nullopt;

    std::vector<S> x(nvars, S{0});
    for (std::size_t v = 0; v < nvars; ++v) {
        std::optional<S> lo, hi;
        bool lo_strict = false, hi_strict = false;
        for (const auto& c : levels[v].lowers) {
            S rest{0};
            for (std::size_t j = 0; j < v; ++j)
                if (c.coeffs[j] != 0) rest = rest + c.coeffs[j] * x[j];
            S bound = (Rat(1) / c.coeffs[v]) * (c.rhs - rest);
            bool strict = c.rel == Rel::GT;
            if (!lo || *lo < bound) {
                lo = bound;
                lo_strict = strict;
            } else if (*lo == bound) {
                lo_strict = lo_strict || strict;
            }
        }
        for (const auto& c : levels[v].uppers) {
            S rest{0};
            for (std::size_t j = 0; j < v; ++j)
                if (c.coeffs[j] != 0) rest = rest + c.coeffs[j] * x[j];
            S bound = (Rat(1) / c.coeffs[v]) * (c.rhs - rest);
            bool strict = c.rel == Rel::GT;
            if (!hi || bound < *hi) {
                hi = bound;
                hi_strict = strict;
            } else if (*hi == bound) {
                hi_strict = hi_strict || strict;
            }
        }
        if (lo && hi) {
            if (*hi < *lo) return std::nullopt;
            if (*lo == *hi) {
                if (lo_strict || hi_strict) return std::nullopt;
                x[v] = *lo;
            } else {
                x[v] = scalar_div2<S>(*lo + *hi);
            }
        } else if (lo) {
            x[v] = lo_strict ? *lo + S{1} : *lo;
        } else if (hi) {
            x[v] = hi_strict ? *hi - S{1} : *hi;
        }
    }
    return x;
}

} // namespace tropdeg
