#pragma once

// Hand-rolled generators for the property tests: random valid buildings and
// random end-class assignments, all driven by seeded engines so failures
// reproduce.

#include <random>
#include <vector>

#include "neckstretch/building.hpp"
#include "neckstretch/rational.hpp"

namespace testgen {

using namespace neckstretch;

inline HomologyClass random_nonzero_class(std::mt19937_64& rng, long long bound = 3) {
    std::uniform_int_distribution<long long> coord(-bound, bound);
    while (true) {
        HomologyClass c{coord(rng), coord(rng)};
        if (!c.is_zero()) return c;
    }
}

inline Rational random_rational(std::mt19937_64& rng, long long num_lo, long long num_hi,
                                long long den_hi) {
    std::uniform_int_distribution<long long> num(num_lo, num_hi), den(1, den_hi);
    return Rational(num(rng), den(rng));
}

/// A random closed, valid, genus-0 building: one bottom component with 2t
/// balanced positive ends, each end feeding a chain of optional neck
/// cylinders topped by a plane. Half the planes get degree 0, half degree 1
/// with one exceptional intersection, so the total class is (t, t).
inline BuildingSpec random_building(std::mt19937_64& rng, int max_pairs = 3, int max_neck = 2) {
    std::uniform_int_distribution<int> pairs_dist(1, max_pairs), neck_dist(0, max_neck);
    const int t = pairs_dist(rng);

    std::vector<HomologyClass> classes;
    for (int i = 0; i < t; ++i) classes.push_back(random_nonzero_class(rng));

    // chain heights vary per end; the top level is the tallest chain + 1
    std::vector<int> necks(2 * t);
    int tallest = 0;
    for (auto& h : necks) {
        h = neck_dist(rng);
        tallest = std::max(tallest, h);
    }
    const int top_level = tallest + 1;

    BuildingSpec b;
    ComponentSpec hub;
    hub.level_kind = LevelKind::bottom;
    hub.level = 0;
    for (int i = 0; i < t; ++i) {
        hub.ends.push_back({Sign::positive, classes[i], true});
        hub.ends.push_back({Sign::positive, -classes[i], true});
    }
    b.components.push_back(hub);

    for (int e = 0; e < 2 * t; ++e) {
        const HomologyClass cls = e % 2 == 0 ? classes[e / 2] : -classes[e / 2];
        int below_component = 0, below_end = e;
        // neck cylinders passing the class up, then stretched to the top
        for (int h = 1; h <= necks[e]; ++h) {
            ComponentSpec cyl;
            cyl.level_kind = LevelKind::neck;
            cyl.level = h;
            cyl.ends.push_back({Sign::negative, cls, true});
            cyl.ends.push_back({Sign::positive, cls, true});
            b.components.push_back(cyl);
            const int idx = static_cast<int>(b.components.size()) - 1;
            b.matchings.push_back({{below_component, below_end}, {idx, 0}});
            below_component = idx;
            below_end = 1;
        }
        // a tall pass-through cylinder when the chain is shorter than the
        // tallest one, so every plane sits at the shared top level
        for (int h = necks[e] + 1; h < top_level; ++h) {
            ComponentSpec cyl;
            cyl.level_kind = LevelKind::neck;
            cyl.level = h;
            cyl.ends.push_back({Sign::negative, cls, true});
            cyl.ends.push_back({Sign::positive, cls, true});
            b.components.push_back(cyl);
            const int idx = static_cast<int>(b.components.size()) - 1;
            b.matchings.push_back({{below_component, below_end}, {idx, 0}});
            below_component = idx;
            below_end = 1;
        }
        ComponentSpec plane;
        plane.level_kind = LevelKind::top;
        plane.level = top_level;
        plane.degree = e % 2;
        plane.exceptional = e % 2;
        plane.ends.push_back({Sign::negative, cls, true});
        b.components.push_back(plane);
        const int idx = static_cast<int>(b.components.size()) - 1;
        b.matchings.push_back({{below_component, below_end}, {idx, 0}});
    }

    b.total_degree = t;
    b.total_exceptional = t;
    return b;
}

} // namespace testgen
