#pragma once

// One-dimensional piece of a prevariety: base + t * dir with t ranging over a
// rational interval (endpoints may be infinite, each finite endpoint open or
// closed). Directions are primitive integer vectors.

#include "tropdeg/linalg.hpp"

#include <optional>
#include <vector>

namespace tropdeg {

using Point = RatVec;

struct Segment {
    Point base;
    std::vector<Int> dir; // primitive
    std::optional<Rat> t_lo, t_hi; // nullopt = infinite end
    bool lo_closed = true, hi_closed = true;

    Segment() = default;
    Segment(Point base_, const RatVec& dir_, std::optional<Rat> lo, std::optional<Rat> hi,
            bool lo_cl = true, bool hi_cl = true)
        : base(std::move(base_)), dir(to_primitive(dir_)), t_lo(std::move(lo)),
          t_hi(std::move(hi)), lo_closed(lo_cl), hi_closed(hi_cl) {
        if (t_lo && t_hi && !(*t_lo < *t_hi))
            throw std::invalid_argument("segment needs t_lo < t_hi");
    }

    std::size_t dim() const { return base.size(); }

    Point at(const Rat& t) const {
        Point p(base);
        for (std::size_t i = 0; i < p.size(); ++i) p[i] += t * Rat(dir[i]);
        return p;
    }

    bool t_in_range(const Rat& t) const {
        if (t_lo) {
            if (t < *t_lo || (t == *t_lo && !lo_closed)) return false;
        }
        if (t_hi) {
            if (t > *t_hi || (t == *t_hi && !hi_closed)) return false;
        }
        return true;
    }

    // Membership: x = base + t*dir for an admissible t.
    bool contains(const Point& x) const {
        std::optional<Rat> t;
        for (std::size_t i = 0; i < base.size(); ++i) {
            Rat diff = x[i] - base[i];
            if (dir[i] == 0) {
                if (diff != 0) return false;
            } else {
                Rat ti = diff / Rat(dir[i]);
                if (t && *t != ti) return false;
                t = ti;
            }
        }
        return t && t_in_range(*t);
    }
};

} // namespace tropdeg
