#pragma once

// Lower envelope of finitely many affine lines t -> offset + slope*t under
// min, over a parameter interval. Slopes are rational; offsets are a generic
// ordered scalar (Rat, or PerturbedScalar when offsets carry a symbolic
// infinitesimal), so breakpoints live in the same scalar.
//
// Winners appear in decreasing slope order as t increases. The construction
// is the dual lower hull over (slope, offset) pairs with exact arithmetic.

#include "tropdeg/fourier_motzkin.hpp"
#include "tropdeg/rational.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace tropdeg {

template <typename S>
struct EnvLine {
    Rat slope;
    S offset;
    std::size_t id; // caller's index
};

template <typename S>
struct EnvelopeEdge {
    std::size_t line;            // index into the input line list
    std::optional<S> t_from;     // nullopt = -infinity
    std::optional<S> t_to;       // nullopt = +infinity
};

template <typename S>
struct Envelope {
    std::vector<EnvelopeEdge<S>> edges; // ordered by increasing t
    struct Vertex {
        S t;
        std::size_t left_line, right_line; // edge indices into the input list
    };
    std::vector<Vertex> vertices;
};

template <typename S>
inline S env_value(const EnvLine<S>& l, const S& t) {
    return l.offset + l.slope * t;
}

// Envelope over all of R. Lines sharing a slope are reduced to the cheapest;
// exact ties of (slope, offset) keep the smaller id.
template <typename S>
inline Envelope<S> lower_envelope(const std::vector<EnvLine<S>>& input) {
    if (input.empty()) throw std::invalid_argument("no lines");
    std::vector<std::size_t> order(input.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (input[a].slope != input[b].slope) return input[a].slope < input[b].slope;
        if (input[a].offset != input[b].offset) return input[a].offset < input[b].offset;
        return input[a].id < input[b].id;
    });
    // champion per slope
    std::vector<std::size_t> lines;
    for (auto i : order)
        if (lines.empty() || input[lines.back()].slope != input[i].slope) lines.push_back(i);

    // lower hull in (slope, offset): keep points strictly below chords
    std::vector<std::size_t> hull;
    for (auto i : lines) {
        while (hull.size() >= 2) {
            const auto& a = input[hull[hull.size() - 2]];
            const auto& b = input[hull[hull.size() - 1]];
            const auto& c = input[i];
            // b strictly below chord a-c <=> (c.s-a.s)*(b.o-a.o) < (b.s-a.s)*(c.o-a.o)
            S lhs = (c.slope - a.slope) * (b.offset - a.offset);
            S rhs = (b.slope - a.slope) * (c.offset - a.offset);
            if (lhs < rhs) break;
            hull.pop_back();
        }
        hull.push_back(i);
    }

    // as t increases the winner moves from the largest slope to the smallest
    std::reverse(hull.begin(), hull.end());
    Envelope<S> env;
    std::optional<S> prev;
    for (std::size_t h = 0; h < hull.size(); ++h) {
        EnvelopeEdge<S> e;
        e.line = hull[h];
        e.t_from = prev;
        if (h + 1 < hull.size()) {
            const auto& cur = input[hull[h]];
            const auto& nxt = input[hull[h + 1]];
            S t = div(nxt.offset - cur.offset, cur.slope - nxt.slope);
            e.t_to = t;
            env.vertices.push_back({t, hull[h], hull[h + 1]});
            prev = t;
        }
        env.edges.push_back(std::move(e));
    }
    return env;
}

// Clip an envelope to [lo, hi] (either end optional); edges whose winning
// interval has no interior inside the window are dropped, and vertices
// strictly inside the window are kept.
template <typename S>
inline Envelope<S> clip_envelope(const Envelope<S>& env, const std::optional<S>& lo,
                                 const std::optional<S>& hi) {
    Envelope<S> out;
    for (const auto& e : env.edges) {
        bool dead = false;
        if (hi && e.t_from && !(*e.t_from < *hi)) dead = true;
        if (lo && e.t_to && !(*lo < *e.t_to)) dead = true;
        if (dead) continue;
        EnvelopeEdge<S> c = e;
        if (lo && (!c.t_from || *c.t_from < *lo)) c.t_from = lo;
        if (hi && (!c.t_to || *hi < *c.t_to)) c.t_to = hi;
        out.edges.push_back(std::move(c));
    }
    for (const auto& v : env.vertices) {
        if (lo && !(*lo < v.t)) continue;
        if (hi && !(v.t < *hi)) continue;
        out.vertices.push_back(v);
    }
    return out;
}

} // namespace tropdeg
