#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "neckstretch/errors.hpp"
#include "neckstretch/homology.hpp"

namespace neckstretch {

// Ledger for the extended intersection number of building components
// against foliation leaves. Star values are not computed from geometry;
// they are bookkeeping entries constrained by the pairing's rules:
// nonnegativity for geometrically distinct curves, homotopy invariance
// across breaking (star against a broken pair sums to the intersection
// number with a nearby closed leaf), and the winding-forced lower bound
// star >= 1 when an end of the component lands on the asymptotic orbit of
// the leaf. Feasibility of a ledger is all the downstream argument needs.

enum class LeafKind { closed_fiber, degree0_plane, degree1_plane };

class StarLedger {
  public:
    explicit StarLedger(long long total_against_fiber = 1)
        : total_against_fiber_(total_against_fiber) {}

    void add_component(int id) { components_.insert(id); }
    bool has_component(int id) const { return components_.count(id) > 0; }

    /// Entries are star numbers for geometrically distinct pairs, so they
    /// must be nonnegative.
    void set_star(int id, LeafKind leaf, long long value) {
        require(id);
        if (value < 0) throw std::invalid_argument("star ledger: negative star number");
        entries_[{id, leaf}] = value;
    }

    long long star(int id, LeafKind leaf) const {
        require(id);
        auto it = entries_.find({id, leaf});
        return it == entries_.end() ? 0 : it->second;
    }

    long long total_against_fiber() const { return total_against_fiber_; }

    std::vector<int> component_ids() const { return {components_.begin(), components_.end()}; }

  private:
    void require(int id) const {
        if (!components_.count(id))
            throw unknown_component("star ledger: unknown component " + std::to_string(id));
    }

    std::set<int> components_;
    std::map<std::pair<int, LeafKind>, long long> entries_;
    long long total_against_fiber_ = 1;
};

/// star against the two planes of a broken leaf. For a nearby closed leaf C
/// this equals the plain intersection number with C.
inline long long star_broken_sum(const StarLedger& ledger, int id) {
    return ledger.star(id, LeafKind::degree0_plane) + ledger.star(id, LeafKind::degree1_plane);
}

/// Building inequality against the fiber class: the component star totals
/// cannot exceed the intersection number of the original closed curves with
/// a fiber.
inline bool fiber_budget_ok(const StarLedger& ledger) {
    long long total = 0;
    for (int id : ledger.component_ids()) total += star_broken_sum(ledger, id);
    return total <= ledger.total_against_fiber();
}

enum class SignConsistency { all_positive, all_negative, infeasible, empty };

inline const char* sign_consistency_name(SignConsistency s) {
    switch (s) {
        case SignConsistency::all_positive: return "all-positive";
        case SignConsistency::all_negative: return "all-negative";
        case SignConsistency::infeasible: return "infeasible";
        case SignConsistency::empty: return "empty";
    }
    return "?";
}

/// Orientation screen for the ends of the non-cover component, which all
/// lie on horizontal classes (k,0), k != 0. An end on (k,0) with k > 0
/// forces star >= 1 against the degree-0 plane over that orbit; an end with
/// k < 0 forces star >= 1 against the degree-1 plane. Mixed signs would
/// force both, contradicting star_broken_sum = 1, so they are infeasible.
inline SignConsistency sign_consistency(std::span<const HomologyClass> ends) {
    bool pos = false, neg = false;
    for (const auto& c : ends) {
        if (c.l != 0 || c.k == 0)
            throw non_horizontal_class("sign_consistency: class " + c.str() +
                                       " is not a nonzero horizontal class");
        (c.k > 0 ? pos : neg) = true;
    }
    if (!pos && !neg) return SignConsistency::empty;
    if (pos && neg) return SignConsistency::infeasible;
    return pos ? SignConsistency::all_positive : SignConsistency::all_negative;
}

inline SignConsistency sign_consistency(const std::vector<HomologyClass>& ends) {
    return sign_consistency(std::span<const HomologyClass>(ends));
}

} // namespace neckstretch
