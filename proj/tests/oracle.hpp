#pragma once

// Set-enumeration semantics over GF(2): the independent oracle the library
// results are compared against. Works on explicit point sets; the only
// thing it reads from a LinearRelation is the raw basis entries.

#include <cstddef>
#include <cstdint>
#include <set>
#include <utility>

#include "linrel/relation.hpp"

namespace oracle {

using Point = std::pair<unsigned, unsigned>;  // bit i of each half = coordinate i

struct Rel {
    std::size_t m = 0, n = 0;
    std::set<Point> pts;

    bool operator==(const Rel&) const = default;
};

inline Rel points_of(const linrel::LinearRelation& r) {
    Rel out{r.left_arity(), r.right_arity(), {}};
    const std::size_t d = r.dim();
    for (std::uint64_t mask = 0; mask < (1ull << d); ++mask) {
        unsigned left = 0, right = 0;
        for (std::size_t i = 0; i < d; ++i) {
            if (!(mask >> i & 1)) continue;
            for (std::size_t j = 0; j < out.m; ++j) {
                if (r.basis().at(i, j).residue()) left ^= 1u << j;
            }
            for (std::size_t j = 0; j < out.n; ++j) {
                if (r.basis().at(i, out.m + j).residue()) right ^= 1u << j;
            }
        }
        out.pts.insert({left, right});
    }
    return out;
}

inline Rel compose(const Rel& r, const Rel& s) {
    Rel out{r.m, s.n, {}};
    for (const Point& p : r.pts) {
        for (const Point& q : s.pts) {
            if (p.second == q.first) out.pts.insert({p.first, q.second});
        }
    }
    return out;
}

inline Rel meet(const Rel& r, const Rel& s) {
    Rel out{r.m, r.n, {}};
    for (const Point& p : r.pts) {
        if (s.pts.count(p)) out.pts.insert(p);
    }
    return out;
}

inline Rel join(const Rel& r, const Rel& s) {
    Rel out{r.m, r.n, {}};
    for (const Point& p : r.pts) {
        for (const Point& q : s.pts) {
            out.pts.insert({p.first ^ q.first, p.second ^ q.second});
        }
    }
    return out;
}

inline Rel opposite(const Rel& r) {
    Rel out{r.n, r.m, {}};
    for (const Point& p : r.pts) out.pts.insert({p.second, p.first});
    return out;
}

inline linrel::PropertyReport properties(const Rel& r) {
    linrel::PropertyReport rep;
    rep.total = rep.deterministic = rep.injective = rep.surjective = true;
    for (unsigned x = 0; x < (1u << r.m); ++x) {
        std::size_t count = 0;
        for (const Point& p : r.pts) {
            if (p.first == x) ++count;
        }
        if (count == 0) rep.total = false;
        if (count > 1) rep.deterministic = false;
    }
    for (unsigned y = 0; y < (1u << r.n); ++y) {
        std::size_t count = 0;
        for (const Point& p : r.pts) {
            if (p.second == y) ++count;
        }
        if (count == 0) rep.surjective = false;
        if (count > 1) rep.injective = false;
    }
    rep.is_map = rep.total && rep.deterministic;
    rep.is_bijective = rep.is_map && rep.injective && rep.surjective;
    return rep;
}

}  // namespace oracle
