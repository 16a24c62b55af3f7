#pragma once

#include <compare>
#include <string>

namespace neckstretch {

/// First-homology class k[boundary of the first disk] + l[boundary of the
/// second disk] on the corner torus. Closed geodesics (equivalently Reeb
/// orbits on the unit cotangent bundle) come in one circle family per
/// nonzero class.
struct HomologyClass {
    long long k = 0;
    long long l = 0;

    bool is_zero() const { return k == 0 && l == 0; }

    friend HomologyClass operator+(HomologyClass a, HomologyClass b) { return {a.k + b.k, a.l + b.l}; }
    friend HomologyClass operator-(HomologyClass a, HomologyClass b) { return {a.k - b.k, a.l - b.l}; }
    HomologyClass operator-() const { return {-k, -l}; }
    friend bool operator==(HomologyClass a, HomologyClass b) = default;
    friend auto operator<=>(HomologyClass a, HomologyClass b) = default;

    std::string str() const { return "(" + std::to_string(k) + "," + std::to_string(l) + ")"; }
};

} // namespace neckstretch
