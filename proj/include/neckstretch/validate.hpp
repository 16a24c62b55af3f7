#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "neckstretch/building.hpp"
#include "neckstretch/errors.hpp"

namespace neckstretch {

// Stable rule identifiers. These names are part of the CLI contract:
// check-building prints them verbatim.
namespace rule {
inline constexpr const char* orbit_nonzero = "orbit-nonzero";
inline constexpr const char* top_negativity = "top-negativity";
inline constexpr const char* bottom_positivity = "bottom-positivity";
inline constexpr const char* top_only_fields = "top-only-fields";
inline constexpr const char* degree_nonneg = "degree-nonneg";
inline constexpr const char* exceptional_nonneg = "exceptional-nonneg";
inline constexpr const char* cover_positive = "cover-positive";
inline constexpr const char* genus_nonneg = "genus-nonneg";
inline constexpr const char* level_structure = "level-structure";
inline constexpr const char* matching_levels = "matching-levels";
inline constexpr const char* matching_class = "matching-class";
inline constexpr const char* unmatched_end = "unmatched-end";
inline constexpr const char* tree = "tree";
inline constexpr const char* genus_zero = "genus-zero";
inline constexpr const char* homology_balance = "homology-balance";
inline constexpr const char* contractibility = "contractibility";
inline constexpr const char* total_class = "total-class";
} // namespace rule

struct RuleCheck {
    std::string rule;
    bool pass = true;
    std::string detail;
};

struct ValidationReport {
    std::vector<RuleCheck> checks;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const RuleCheck& c) { return c.pass; });
    }

    bool failed(std::string_view rule_id) const {
        for (const auto& c : checks)
            if (!c.pass && c.rule == rule_id) return true;
        return false;
    }

    std::vector<std::string> failed_rules() const {
        std::vector<std::string> out;
        for (const auto& c : checks)
            if (!c.pass) out.push_back(c.rule);
        return out;
    }
};

/// Closed buildings require every end matched; sub-buildings (used for
/// per-level arguments) may leave ends open.
enum class BuildingMode { closed, sub_building };

namespace detail {

inline void check(ValidationReport& r, const char* id, bool ok, std::string detail_on_fail) {
    if (ok) {
        r.checks.push_back({id, true, {}});
    } else {
        r.checks.push_back({id, false, std::move(detail_on_fail)});
    }
}

inline void component_checks(ValidationReport& r, const ComponentSpec& c, const std::string& who) {
    bool orbits_ok = true, signs_ok = true;
    for (const auto& end : c.ends) {
        if (end.orbit.is_zero()) orbits_ok = false;
        if (c.level_kind == LevelKind::top && end.sign != Sign::negative) signs_ok = false;
        if (c.level_kind == LevelKind::bottom && end.sign != Sign::positive) signs_ok = false;
    }
    check(r, rule::orbit_nonzero, orbits_ok, who + ": end asymptotic to the zero class");
    if (c.level_kind == LevelKind::top)
        check(r, rule::top_negativity, signs_ok, who + ": top component with a positive end");
    if (c.level_kind == LevelKind::bottom)
        check(r, rule::bottom_positivity, signs_ok, who + ": bottom component with a negative end");

    if (c.level_kind != LevelKind::top) {
        check(r, rule::top_only_fields, c.degree == 0 && c.exceptional == 0,
              who + ": degree/exceptional set on a non-top component");
    } else {
        check(r, rule::degree_nonneg, c.degree >= 0, who + ": negative degree");
        // e < 0 happens only for covers of the exceptional sphere, which are
        // closed degree-0 curves.
        bool e_ok = c.exceptional >= 0 || (c.degree == 0 && c.ends.empty());
        check(r, rule::exceptional_nonneg, e_ok,
              who + ": negative exceptional intersection outside a cover of the exceptional sphere");
    }
    check(r, rule::cover_positive, c.cover_multiplicity >= 1, who + ": cover multiplicity < 1");
    check(r, rule::genus_nonneg, c.genus >= 0, who + ": negative genus");
}

} // namespace detail

/// Per-component structural validation. All failures are reported; nothing
/// throws.
inline ValidationReport validate_component(const ComponentSpec& c) {
    ValidationReport r;
    detail::component_checks(r, c, "component");
    return r;
}

/// Whole-building validation: component invariants, matching rules, the
/// genus-0 tree condition, per-component homology balance, the
/// no-contractible-orbit rule, and the declared total class.
///
/// Throws malformed_matching when a matching references a missing end, pairs
/// an end with itself, or uses an end twice; everything else lands in the
/// report.
inline ValidationReport validate_building(const BuildingSpec& b, BuildingMode mode = BuildingMode::closed) {
    ValidationReport r;

    const int n = static_cast<int>(b.components.size());
    for (int i = 0; i < n; ++i)
        detail::component_checks(r, b.components[i], "component " + std::to_string(i));

    // Matching well-formedness is a hard error: the rest of the checks need
    // every reference resolvable and unambiguous.
    std::map<std::pair<int, int>, int> use_count;
    for (const auto& m : b.matchings) {
        for (EndRef ref : {m.a, m.b}) {
            if (ref.component < 0 || ref.component >= n)
                throw malformed_matching("matching references component " + std::to_string(ref.component));
            const auto& ends = b.components[ref.component].ends;
            if (ref.end < 0 || ref.end >= static_cast<int>(ends.size()))
                throw malformed_matching("matching references end " + std::to_string(ref.end) +
                                         " of component " + std::to_string(ref.component));
            if (++use_count[{ref.component, ref.end}] > 1)
                throw malformed_matching("end " + std::to_string(ref.end) + " of component " +
                                         std::to_string(ref.component) + " is matched twice");
        }
        if (m.a == m.b) throw malformed_matching("end matched with itself");
    }

    // Levels: bottoms at 0, all tops at the (shared) maximum, necks strictly
    // between when a top level exists.
    {
        bool ok = true;
        std::string why;
        int max_level = 0;
        bool has_top = false;
        int top_level = -1;
        for (const auto& c : b.components) max_level = std::max(max_level, c.level);
        for (int i = 0; i < n && ok; ++i) {
            const auto& c = b.components[i];
            if (c.level < 0) { ok = false; why = "component " + std::to_string(i) + ": negative level"; }
            if (c.level_kind == LevelKind::bottom && c.level != 0) {
                ok = false;
                why = "component " + std::to_string(i) + ": bottom component not at level 0";
            }
            if (c.level_kind == LevelKind::top) {
                if (has_top && c.level != top_level) {
                    ok = false;
                    why = "top components at different levels";
                }
                has_top = true;
                top_level = c.level;
            }
        }
        if (ok && has_top && top_level != max_level) {
            ok = false;
            why = "a component sits above the top level";
        }
        if (ok && has_top) {
            for (int i = 0; i < n && ok; ++i) {
                const auto& c = b.components[i];
                if (c.level_kind == LevelKind::neck && (c.level <= 0 || c.level >= top_level)) {
                    ok = false;
                    why = "component " + std::to_string(i) + ": neck level outside (0, top)";
                }
            }
        }
        detail::check(r, rule::level_structure, ok, why);
    }

    // Matched pairs: positive end one level below a negative end, same class.
    {
        bool levels_ok = true, classes_ok = true;
        std::string lv_why, cl_why;
        for (const auto& m : b.matchings) {
            const auto& ca = b.components[m.a.component];
            const auto& cb = b.components[m.b.component];
            const auto& ea = ca.ends[m.a.end];
            const auto& eb = cb.ends[m.b.end];
            const bool ab = ea.sign == Sign::positive && eb.sign == Sign::negative &&
                            cb.level == ca.level + 1;
            const bool ba = eb.sign == Sign::positive && ea.sign == Sign::negative &&
                            ca.level == cb.level + 1;
            if (!(ab || ba)) {
                levels_ok = false;
                lv_why = "matching (" + std::to_string(m.a.component) + "," + std::to_string(m.a.end) +
                         ")-(" + std::to_string(m.b.component) + "," + std::to_string(m.b.end) +
                         ") does not pair a positive end with a negative end one level up";
            }
            if (!(ea.orbit == eb.orbit)) {
                classes_ok = false;
                cl_why = "matched ends carry classes " + ea.orbit.str() + " and " + eb.orbit.str();
            }
        }
        detail::check(r, rule::matching_levels, levels_ok, lv_why);
        detail::check(r, rule::matching_class, classes_ok, cl_why);
    }

    if (mode == BuildingMode::closed) {
        bool ok = true;
        std::string why;
        for (int i = 0; i < n && ok; ++i) {
            for (int j = 0; j < static_cast<int>(b.components[i].ends.size()); ++j) {
                if (!use_count.count({i, j})) {
                    ok = false;
                    why = "end " + std::to_string(j) + " of component " + std::to_string(i) +
                          " is unmatched";
                    break;
                }
            }
        }
        detail::check(r, rule::unmatched_end, ok, why);
    }

    // Genus-0 condition: matching graph is a tree and every component is
    // rational.
    {
        bool genus_ok = true;
        for (const auto& c : b.components)
            if (c.genus != 0) genus_ok = false;
        detail::check(r, rule::genus_zero, genus_ok, "component of positive genus");

        bool tree_ok = n > 0;
        if (static_cast<int>(b.matchings.size()) != n - 1) tree_ok = false;
        if (tree_ok && n > 0) {
            std::vector<int> parent(n);
            for (int i = 0; i < n; ++i) parent[i] = i;
            auto find = [&](int x) {
                while (parent[x] != x) x = parent[x] = parent[parent[x]];
                return x;
            };
            int merges = 0;
            for (const auto& m : b.matchings) {
                int a = find(m.a.component), c = find(m.b.component);
                if (a == c) {
                    tree_ok = false; // cycle
                    break;
                }
                parent[a] = c;
                ++merges;
            }
            if (merges != n - 1) tree_ok = false;
        }
        detail::check(r, rule::tree, tree_ok,
                      "components and matchings do not form a tree (" + std::to_string(n) +
                          " components, " + std::to_string(b.matchings.size()) + " matchings)");
    }

    // Homology balance: neck and bottom curves live where the torus classes
    // must cancel.
    {
        bool ok = true;
        std::string why;
        for (int i = 0; i < n; ++i) {
            const auto& c = b.components[i];
            if (c.level_kind == LevelKind::top) continue;
            HomologyClass sum;
            for (const auto& end : c.ends)
                sum = end.sign == Sign::positive ? sum + end.orbit : sum - end.orbit;
            if (!sum.is_zero()) {
                ok = false;
                why = "component " + std::to_string(i) + ": signed end classes sum to " + sum.str();
                break;
            }
        }
        detail::check(r, rule::homology_balance, ok, why);
    }

    // No contractible orbits: one-ended neck/bottom curves cannot exist.
    {
        bool ok = true;
        std::string why;
        for (int i = 0; i < n; ++i) {
            const auto& c = b.components[i];
            if (c.level_kind != LevelKind::top && c.ends.size() == 1) {
                ok = false;
                why = "component " + std::to_string(i) + ": one-ended " +
                      level_kind_name(c.level_kind) + " component";
                break;
            }
        }
        detail::check(r, rule::contractibility, ok, why);
    }

    {
        auto [d, e] = summed_class(b);
        detail::check(r, rule::total_class, d == b.total_degree && e == b.total_exceptional,
                      "top components sum to class (" + std::to_string(d) + "," + std::to_string(e) +
                          "), declared (" + std::to_string(b.total_degree) + "," +
                          std::to_string(b.total_exceptional) + ")");
    }

    return r;
}

} // namespace neckstretch
