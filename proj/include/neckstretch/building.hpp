#pragma once

#include <string>
#include <vector>

#include "neckstretch/homology.hpp"

namespace neckstretch {

enum class Sign { positive, negative };

inline int sign_value(Sign s) { return s == Sign::positive ? +1 : -1; }

/// Levels of the split target: the blow-up minus the Lagrangian torus (top),
/// the symplectization of the unit cotangent bundle (neck), and the
/// cotangent bundle of the torus (bottom).
enum class LevelKind { top, neck, bottom };

inline const char* level_kind_name(LevelKind k) {
    switch (k) {
        case LevelKind::top: return "top";
        case LevelKind::neck: return "neck";
        case LevelKind::bottom: return "bottom";
    }
    return "?";
}

/// One asymptotic end of a finite energy curve. `movable` marks an end free
/// to slide in the circle family of orbits in its class (the perturbation
/// convention all index formulas here assume).
struct PunctureEnd {
    Sign sign = Sign::negative;
    HomologyClass orbit;
    bool movable = true;
};

/// One curve component of a limit building, as a combinatorial record.
/// `degree` counts intersections with the line at infinity and
/// `exceptional` intersections with the exceptional sphere; both are
/// meaningful for top components only. `cover_multiplicity` is 1 for
/// somewhere injective curves.
struct ComponentSpec {
    LevelKind level_kind = LevelKind::top;
    int level = 0;
    int genus = 0;
    long long degree = 0;
    long long exceptional = 0;
    long long cover_multiplicity = 1;
    std::vector<PunctureEnd> ends;
};

/// One side of a matching: end `end` of component `component`.
struct EndRef {
    int component = 0;
    int end = 0;
    friend bool operator==(EndRef a, EndRef b) = default;
};

/// A matched pair of ends. The positive end sits one level below the
/// negative end and both carry the same orbit class: the class of an end is
/// always recorded as seen from the torus, so no sign flip happens across a
/// matching. Reversals like "the degree-1 plane is asymptotic to (-k,-l)
/// when the degree-0 plane is asymptotic to (k,l)" are consequences of the
/// homology balance of the component joining them.
struct Matching {
    EndRef a, b;
};

/// A leveled collection of components with matched ends.
struct BuildingSpec {
    std::vector<ComponentSpec> components;
    std::vector<Matching> matchings;
    long long total_degree = 0;
    long long total_exceptional = 0;
};

/// Sum of top-component (degree, exceptional) pairs.
inline std::pair<long long, long long> summed_class(const BuildingSpec& b) {
    long long d = 0, e = 0;
    for (const auto& c : b.components) {
        if (c.level_kind == LevelKind::top) {
            d += c.degree;
            e += c.exceptional;
        }
    }
    return {d, e};
}

} // namespace neckstretch
