#pragma once

#include <span>
#include <vector>

#include "neckstretch/building.hpp"
#include "neckstretch/errors.hpp"
#include "neckstretch/rational.hpp"

namespace neckstretch {

// Fredholm indices of unparametrized genus-0 finite energy curves with
// movable asymptotic ends, one closed formula per level. Indices are formal
// numbers here: no transversality is claimed.

struct IndexResult {
    long long index = 0;
    LevelKind formula_tag = LevelKind::top;
};

struct AreaResult {
    Rational area;
};

/// Curve in the blow-up minus the torus: s negative ends on classes
/// (k_i,l_i), degree d, e intersections with the exceptional sphere.
/// index = s - 2 + 6d - 2e + 2*sum(k_i + l_i).
inline IndexResult index_top(long long s, long long d, long long e,
                             std::span<const HomologyClass> classes) {
    if (static_cast<long long>(classes.size()) != s)
        throw length_mismatch("index_top: class list length " + std::to_string(classes.size()) +
                              " does not match s = " + std::to_string(s));
    long long kl = 0;
    for (const auto& c : classes) kl += c.k + c.l;
    return {s - 2 + 6 * d - 2 * e + 2 * kl, LevelKind::top};
}

inline IndexResult index_top(long long s, long long d, long long e,
                             const std::vector<HomologyClass>& classes) {
    return index_top(s, d, e, std::span<const HomologyClass>(classes));
}

/// Curve in the symplectization level: index = 2 s+ + s- - 2.
inline IndexResult index_neck(long long s_plus, long long s_minus) {
    if (s_plus < 0 || s_minus < 0 || s_plus + s_minus < 1)
        throw std::invalid_argument("index_neck: needs at least one puncture");
    return {2 * s_plus + s_minus - 2, LevelKind::neck};
}

/// Curve in the cotangent bundle of the torus (s positive punctures):
/// index = 2s - 2. Also the deformation index of a sub-building whose
/// uppermost level has s positive punctures.
inline IndexResult index_bottom(long long s) {
    if (s < 1) throw std::invalid_argument("index_bottom: needs at least one puncture");
    return {2 * s - 2, LevelKind::bottom};
}

/// Index of a component record, dispatching on its level.
inline IndexResult component_index(const ComponentSpec& c) {
    switch (c.level_kind) {
        case LevelKind::top: {
            std::vector<HomologyClass> classes;
            for (const auto& end : c.ends) classes.push_back(end.orbit);
            return index_top(static_cast<long long>(classes.size()), c.degree, c.exceptional, classes);
        }
        case LevelKind::neck: {
            long long sp = 0, sm = 0;
            for (const auto& end : c.ends) (end.sign == Sign::positive ? sp : sm)++;
            return index_neck(sp, sm);
        }
        case LevelKind::bottom:
            return index_bottom(static_cast<long long>(c.ends.size()));
    }
    throw std::logic_error("component_index: bad level kind");
}

/// Compactified symplectic area of a top component: R d - e + sum(k_i + 2 l_i),
/// with end classes recorded as seen from the torus. The degree-0 plane with
/// end on (1,0) has area 1 for every R; the degree-1 plane with end on (-1,0)
/// has area R - 2.
inline AreaResult area_top(const ComponentSpec& c, const Rational& R) {
    if (c.level_kind != LevelKind::top)
        throw wrong_level("area_top: component is not in the top level");
    Rational area = R * Rational(c.degree) - Rational(c.exceptional);
    for (const auto& end : c.ends) area += Rational(end.orbit.k + 2 * end.orbit.l);
    return {area};
}

/// Symplectic area R d - e of the homology class d[line] - e[exceptional].
inline Rational class_area(long long d, long long e, const Rational& R) {
    return R * Rational(d) - Rational(e);
}

/// Index after imposing `points` generic point constraints (codimension 2
/// each).
inline long long constrained_index(long long index, long long points) {
    if (points < 0) throw std::invalid_argument("constrained_index: negative point count");
    return index - 2 * points;
}

} // namespace neckstretch
