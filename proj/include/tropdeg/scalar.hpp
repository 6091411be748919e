#pragma once

// ExtRat: exact rational extended with +infinity (absorbing under addition,
// greater than every rational).
//
// PerturbedScalar: ExtRat plus a rational multiple of a formal infinitesimal
// eta, ordered lexicographically by (base, eta coefficient). This is how the
// library talks about "sufficiently small" perturbations without ever tuning
// an epsilon: a + c*eta < b + d*eta iff a < b, or a = b and c < d.
//
// Only the operations the algorithms need are defined: addition, subtraction,
// scaling by a rational, and comparison. Two PerturbedScalars are never
// multiplied together, so no eta^2 term can arise.

#include "tropdeg/rational.hpp"

#include <compare>
#include <ostream>
#include <stdexcept>

namespace tropdeg {

class ExtRat {
public:
    ExtRat() : value_(0), inf_(false) {}
    ExtRat(Rat v) : value_(std::move(v)), inf_(false) {}
    ExtRat(int v) : value_(v), inf_(false) {}

    static ExtRat infinity() {
        ExtRat e;
        e.inf_ = true;
        return e;
    }

    bool is_inf() const { return inf_; }

    const Rat& finite() const {
        if (inf_) throw std::domain_error("finite() on +inf");
        return value_;
    }

    friend ExtRat operator+(const ExtRat& a, const ExtRat& b) {
        if (a.inf_ || b.inf_) return infinity();
        return ExtRat(a.value_ + b.value_);
    }
    friend ExtRat operator-(const ExtRat& a, const ExtRat& b) {
        if (a.inf_ && b.inf_) throw std::domain_error("inf - inf");
        if (a.inf_) return infinity();
        if (b.inf_) throw std::domain_error("x - inf");
        return ExtRat(a.value_ - b.value_);
    }
    // Scaling by a nonnegative rational keeps +inf absorbing; 0 * inf is
    // rejected rather than guessed.
    friend ExtRat operator*(const Rat& c, const ExtRat& a) {
        if (a.inf_) {
            if (c <= 0) throw std::domain_error("nonpositive scale of +inf");
            return infinity();
        }
        return ExtRat(c * a.value_);
    }

    friend bool operator==(const ExtRat& a, const ExtRat& b) {
        if (a.inf_ != b.inf_) return false;
        return a.inf_ || a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
        if (a.inf_ && b.inf_) return std::strong_ordering::equal;
        if (a.inf_) return std::strong_ordering::greater;
        if (b.inf_) return std::strong_ordering::less;
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (a.value_ > b.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const ExtRat& e) {
        return os << (e.inf_ ? std::string("inf") : rat_to_string(e.value_));
    }

private:
    Rat value_;
    bool inf_;
};

inline std::string extrat_to_string(const ExtRat& e) {
    return e.is_inf() ? "inf" : rat_to_string(e.finite());
}

inline ExtRat extrat_from_string(const std::string& s) {
    if (s == "inf") return ExtRat::infinity();
    return ExtRat(rat_from_string(s));
}

class PerturbedScalar {
public:
    PerturbedScalar() = default;
    PerturbedScalar(ExtRat base) : base_(std::move(base)) {}
    PerturbedScalar(Rat base) : base_(ExtRat(std::move(base))) {}
    PerturbedScalar(int base) : base_(ExtRat(base)) {}
    PerturbedScalar(ExtRat base, Rat eps) : base_(std::move(base)), eps_(std::move(eps)) {
        if (base_.is_inf() && eps_ != 0)
            throw std::invalid_argument("infinite base with nonzero eta part");
    }

    static PerturbedScalar infinity() { return PerturbedScalar(ExtRat::infinity()); }

    const ExtRat& base() const { return base_; }
    const Rat& eps() const { return eps_; }
    bool is_inf() const { return base_.is_inf(); }
    bool is_pure() const { return eps_ == 0; }

    friend PerturbedScalar operator+(const PerturbedScalar& a, const PerturbedScalar& b) {
        if (a.is_inf() || b.is_inf()) return infinity();
        return PerturbedScalar(a.base_ + b.base_, a.eps_ + b.eps_);
    }
    friend PerturbedScalar operator-(const PerturbedScalar& a, const PerturbedScalar& b) {
        if (a.is_inf() && !b.is_inf()) return infinity();
        return PerturbedScalar(a.base_ - b.base_, a.eps_ - b.eps_);
    }
    friend PerturbedScalar operator*(const Rat& c, const PerturbedScalar& a) {
        if (a.is_inf()) {
            if (c <= 0) throw std::domain_error("nonpositive scale of +inf");
            return infinity();
        }
        return PerturbedScalar(ExtRat(c * a.base_.finite()), c * a.eps_);
    }
    PerturbedScalar operator-() const {
        if (is_inf()) throw std::domain_error("negate +inf");
        return PerturbedScalar(ExtRat(-base_.finite()), -eps_);
    }
    PerturbedScalar& operator+=(const PerturbedScalar& o) { return *this = *this + o; }

    friend PerturbedScalar div(const PerturbedScalar& a, const Rat& c) {
        if (c == 0) throw std::domain_error("divide by zero");
        if (a.is_inf()) {
            if (c < 0) throw std::domain_error("negative divide of +inf");
            return infinity();
        }
        return PerturbedScalar(ExtRat(a.base_.finite() / c), a.eps_ / c);
    }

    friend bool operator==(const PerturbedScalar& a, const PerturbedScalar& b) {
        return a.base_ == b.base_ && a.eps_ == b.eps_;
    }
    friend std::strong_ordering operator<=>(const PerturbedScalar& a, const PerturbedScalar& b) {
        auto c = a.base_ <=> b.base_;
        if (c != std::strong_ordering::equal) return c;
        if (a.eps_ < b.eps_) return std::strong_ordering::less;
        if (a.eps_ > b.eps_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // Evaluate at a concrete eta value (used when a symbolic answer is
    // reported as an ordinary rational).
    ExtRat realize(const Rat& eta) const {
        if (is_inf()) return ExtRat::infinity();
        return ExtRat(base_.finite() + eps_ * eta);
    }

    friend std::ostream& operator<<(std::ostream& os, const PerturbedScalar& s) {
        os << s.base_;
        if (s.eps_ != 0) os << (s.eps_ > 0 ? "+" : "") << rat_to_string(s.eps_) << "*eta";
        return os;
    }

private:
    ExtRat base_;
    Rat eps_ = 0;
};

} // namespace tropdeg
