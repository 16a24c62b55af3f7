#pragma once

#include <span>
#include <vector>

#include "neckstretch/building.hpp"
#include "neckstretch/errors.hpp"

namespace neckstretch {

// Conley-Zehnder data for torus orbits under the movable-end conventions,
// the relative Chern number in the fixed torus trivialization, and the
// punctured Riemann-Roch assembly. Together these re-derive every closed
// index formula in index_area.hpp, which is exactly what the randomized
// equivalence tests pin down.

struct CZData {
    Sign sign = Sign::negative;
    bool movable = true;
    int cz = 0;
};

/// Conley-Zehnder index of a perturbed torus-orbit asymptotic operator:
/// a negative movable end gets 0, a positive movable end gets 1. Fixed
/// (non-movable) ends are outside the conventions supported here.
inline CZData cz_morse_bott(Sign sign, bool movable) {
    if (!movable)
        throw unsupported_convention("cz_morse_bott: only movable (Morse-Bott perturbed) ends are supported");
    return {sign, movable, sign == Sign::positive ? 1 : 0};
}

/// Relative first Chern number of a top component in the torus-frame
/// trivialization: 3d - e + sum(k_i + l_i). Closed degree-d curves with e
/// exceptional intersections contribute 3d - e; a degree-0 disk on a (k,l)
/// geodesic contributes k + l; the count is additive under connect sum.
inline long long relative_c1(const ComponentSpec& c) {
    if (c.level_kind != LevelKind::top)
        throw wrong_level("relative_c1: component is not in the top level");
    long long kl = 0;
    for (const auto& end : c.ends) kl += end.orbit.k + end.orbit.l;
    return 3 * c.degree - c.exceptional + kl;
}

/// Punctured Riemann-Roch for a genus-0 curve:
/// index = -chi + sum CZ(positive) - sum CZ(negative) + 2 c1,
/// with chi = 2 - #punctures and `c1_doubled` = 2 c1 supplied by the caller
/// (0 for neck and bottom levels, 2 * relative_c1 for top components).
inline long long rr_index(int genus, std::span<const CZData> czs, long long c1_doubled) {
    if (genus != 0) throw std::invalid_argument("rr_index: only genus 0 is supported");
    const long long punctures = static_cast<long long>(czs.size());
    long long cz_sum = 0;
    for (const auto& c : czs) cz_sum += c.sign == Sign::positive ? c.cz : -c.cz;
    return -(2 - punctures) + cz_sum + c1_doubled;
}

inline long long rr_index(int genus, const std::vector<CZData>& czs, long long c1_doubled) {
    return rr_index(genus, std::span<const CZData>(czs), c1_doubled);
}

/// Riemann-Roch route to the index of a component record: Morse-Bott CZ data
/// for its ends plus its relative Chern number.
inline long long rr_index_of_component(const ComponentSpec& c) {
    std::vector<CZData> czs;
    for (const auto& end : c.ends) czs.push_back(cz_morse_bott(end.sign, end.movable));
    const long long c1_doubled = c.level_kind == LevelKind::top ? 2 * relative_c1(c) : 0;
    return rr_index(c.genus, czs, c1_doubled);
}

} // namespace neckstretch
