#pragma once

#include <cassert>
#include <optional>
#include <string>
#include <vector>

#include "neckstretch/building.hpp"
#include "neckstretch/capacities.hpp"
#include "neckstretch/errors.hpp"
#include "neckstretch/index_area.hpp"
#include "neckstretch/intersections.hpp"
#include "neckstretch/rational.hpp"
#include "neckstretch/rules.hpp"
#include "neckstretch/validate.hpp"

namespace neckstretch {

// The enumeration engine: arithmetic-feasible limit configurations for the
// fiber class, the degree-d feasibility search with its certificate
// frontier, and the resulting sharp embedding bound for P(1,2).

// ---------------------------------------------------------------------------
// Fiber-class limits
// ---------------------------------------------------------------------------

/// A broken fiber limit splits into a degree-0 and a degree-1 plane joined
/// through the torus levels; the single exceptional intersection sits on one
/// of the two.
enum class BrokenCase {
    e_on_degree1 = 1, // case 1: the degree-1 plane meets the exceptional sphere
    e_on_degree0 = 2, // case 2: the degree-0 plane does
};

struct FiberLimitConfig {
    enum class Kind { closed, broken };
    Kind kind = Kind::closed;
    int broken_case = 0;          // 1 or 2 when kind == broken
    HomologyClass degree0_class;  // end class of the degree-0 plane
    HomologyClass degree1_class;  // end class of the degree-1 plane
    std::optional<std::string> exclusion; // geometric rule ruling the config out
    BuildingSpec building;        // assembled representative
};

namespace detail {

inline ComponentSpec top_plane(long long degree, long long exceptional, HomologyClass end_class,
                               int level) {
    ComponentSpec c;
    c.level_kind = LevelKind::top;
    c.level = level;
    c.degree = degree;
    c.exceptional = exceptional;
    c.ends.push_back({Sign::negative, end_class, true});
    return c;
}

inline ComponentSpec bottom_component(std::vector<HomologyClass> end_classes) {
    ComponentSpec c;
    c.level_kind = LevelKind::bottom;
    c.level = 0;
    for (auto cls : end_classes) c.ends.push_back({Sign::positive, cls, true});
    return c;
}

inline BuildingSpec closed_fiber_building() {
    BuildingSpec b;
    ComponentSpec fiber;
    fiber.level_kind = LevelKind::top;
    fiber.level = 0;
    fiber.degree = 1;
    fiber.exceptional = 1;
    b.components.push_back(fiber);
    b.total_degree = 1;
    b.total_exceptional = 1;
    return b;
}

inline BuildingSpec broken_fiber_building(BrokenCase which, HomologyClass degree0_class) {
    const bool e_on_degree0 = which == BrokenCase::e_on_degree0;
    BuildingSpec b;
    b.components.push_back(top_plane(0, e_on_degree0 ? 1 : 0, degree0_class, 1));
    b.components.push_back(top_plane(1, e_on_degree0 ? 0 : 1, -degree0_class, 1));
    b.components.push_back(bottom_component({degree0_class, -degree0_class}));
    b.matchings.push_back({{2, 0}, {0, 0}});
    b.matchings.push_back({{2, 1}, {1, 0}});
    b.total_degree = 1;
    b.total_exceptional = 1;
    return b;
}

} // namespace detail

/// All integer classes (k,l) a broken fiber pair can be asymptotic to, for
/// the given exceptional-intersection case: both planes need nonnegative
/// index and the degree-0 plane has area exactly 1.
///
/// The search box |k|,|l| <= 4 is exhaustive: the area equation pins
/// k + 2l to 1 (case 1) or 2 (case 2), and the two index inequalities
/// squeeze k + l into a unit window, so any solution has |l| <= 1 and
/// |k| <= 3, comfortably inside the box.
inline std::vector<HomologyClass> enumerate_plane_classes(BrokenCase which) {
    const bool e_on_degree0 = which == BrokenCase::e_on_degree0;
    std::vector<HomologyClass> out;
    for (long long k = -4; k <= 4; ++k) {
        for (long long l = -4; l <= 4; ++l) {
            const HomologyClass cls{k, l};
            if (cls.is_zero()) continue;
            const auto degree0 = detail::top_plane(0, e_on_degree0 ? 1 : 0, cls, 1);
            const auto degree1 = detail::top_plane(1, e_on_degree0 ? 0 : 1, -cls, 1);
            if (component_index(degree0).index < 0) continue;
            if (component_index(degree1).index < 0) continue;
            // degree 0 makes the area R-independent
            if (!(area_top(degree0, Rational(0)).area == Rational(1))) continue;
            out.push_back(cls);
        }
    }
    return out;
}

inline std::vector<HomologyClass> enumerate_plane_classes(int case_id) {
    if (case_id != 1 && case_id != 2)
        throw std::invalid_argument("enumerate_plane_classes: case must be 1 or 2");
    return enumerate_plane_classes(static_cast<BrokenCase>(case_id));
}

/// Limit configurations of fiber-class spheres for 1 < R < 3. The closed
/// fiber always survives. Above R = 2 the two broken pairs become
/// arithmetically possible (the degree-1 plane has area R - 2), and the
/// case with the exceptional intersection on the degree-0 plane is flagged
/// as excluded by the blow-down rule when that rule is enabled.
inline std::vector<FiberLimitConfig> enumerate_fiber_limits(const Rational& R,
                                                            const RulesRegistry& rules = {}) {
    if (!(Rational(1) < R && R < Rational(3)))
        throw out_of_range_input("enumerate_fiber_limits: R must lie in (1,3), got " + R.str());

    std::vector<FiberLimitConfig> out;
    FiberLimitConfig closed;
    closed.kind = FiberLimitConfig::Kind::closed;
    closed.building = detail::closed_fiber_building();
    out.push_back(std::move(closed));

    // area of the degree-1 part is R - 2; a broken pair needs it positive
    if (!(R > Rational(2))) return out;

    for (BrokenCase which : {BrokenCase::e_on_degree1, BrokenCase::e_on_degree0}) {
        for (HomologyClass cls : enumerate_plane_classes(which)) {
            FiberLimitConfig cfg;
            cfg.kind = FiberLimitConfig::Kind::broken;
            cfg.broken_case = static_cast<int>(which);
            cfg.degree0_class = cls;
            cfg.degree1_class = -cls;
            if (which == BrokenCase::e_on_degree0 && rules.enabled(geometric_rule::g1_blowdown))
                cfg.exclusion = geometric_rule::g1_blowdown;
            cfg.building = detail::broken_fiber_building(which, cls);
            out.push_back(std::move(cfg));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Degree-d feasibility
// ---------------------------------------------------------------------------

/// One surviving assignment in the degree-d search. Field names follow the
/// quantities of the search itself: m counts the torus-level cylinders not
/// asymptotic to the distinguished (non-cover) component, d_prime is that
/// component's degree, s its number of negative ends.
struct DegreeDConfig {
    long long d = 0;
    long long m = 0;
    long long d_prime = 0;
    long long s = 0;
    SignConsistency sign_mode = SignConsistency::all_negative;
    Rational area_bound; // d' R - (d' - 1) - s for the chosen assignment
};

struct InfeasibilityCertificate {
    long long d = 0;
    Rational R;
    long long m = 0, d_prime = 0, s = 0; // the binding (largest-slack) branch
    Rational slack;                      // d (R-2) + 1 - d, negative
    std::string inequality;              // the instantiated area bound
    std::string frontier;                // R - 2 < 1 - 1/d, instantiated
    std::string positive_case;           // why all-positive ends cannot occur
};

struct FeasibilityResult {
    bool feasible = false;
    std::optional<DegreeDConfig> config;
    std::optional<InfeasibilityCertificate> certificate;
};

/// Degree-d limit building with 2d point constraints in the torus
/// neighborhood: searches the admissible (m, d', s, orientation)
/// assignments.
///
///  * all-positive orientations die by counting: the 2d - m ends of the
///    distinguished component and the m other cylinders each force a
///    distinct degree-1 leaf cover, and 2d such covers exceed the total
///    degree d;
///  * all-negative orientations survive iff the area bound
///    d' R - (d' - 1) - s is nonnegative (each of the s ends eats at least
///    one unit of area).
///
/// Boundary assignments with area bound exactly 0 are reported feasible:
/// the search claims arithmetic admissibility, not existence.
inline FeasibilityResult degree_d_feasibility(const Rational& R, long long d,
                                              const RulesRegistry& rules = {}) {
    if (d < 1) throw std::invalid_argument("degree_d_feasibility: d must be >= 1");

    // Exhaustive cap on s: the slack d' R - (d' - 1) - s strictly decreases
    // in s, so assignments beyond the cap are strictly worse than ones
    // inside it. The +4 margin keeps the cap visibly inactive.
    const long long s_margin = 4;

    std::optional<DegreeDConfig> best;
    std::optional<DegreeDConfig> best_mixed;
    Rational best_slack;
    // binding branch for the certificate: the largest slack seen anywhere
    std::optional<DegreeDConfig> binding;
    Rational binding_slack;

    for (long long m = 0; m <= d - 1; ++m) {
        for (long long d_prime = 1; d_prime <= d - m; ++d_prime) {
            const long long s_min = 2 * d - m;
            std::optional<Rational> prev_slack;
            for (long long s = s_min; s <= 2 * d + s_margin; ++s) {
                const Rational slack = Rational(d_prime) * R - Rational(d_prime - 1) - Rational(s);
                assert(!prev_slack || slack < *prev_slack); // cap is safe: slack falls with s
                prev_slack = slack;

                if (!binding || slack > binding_slack) {
                    binding_slack = slack;
                    binding = DegreeDConfig{d, m, d_prime, s, SignConsistency::all_negative, slack};
                }

                // The all-positive branch never survives: the 2d - m ends plus
                // the m other cylinders force 2d degree-1 leaf covers against
                // total degree d. Only the all-negative branch can be admitted.
                if (slack >= Rational(0)) {
                    if (!best || slack > best_slack) {
                        best_slack = slack;
                        best = DegreeDConfig{d, m, d_prime, s, SignConsistency::all_negative, slack};
                    }
                }

                // mixed orientations are killed by the orientation screen;
                // with the unique-leaf rule switched off that screen has no
                // comparison leaf to quote, so the branch is reported
                // admissible for exploration
                if (!rules.enabled(geometric_rule::unique_leaf) && !best_mixed) {
                    best_mixed = DegreeDConfig{d, m, d_prime, s, SignConsistency::infeasible, slack};
                }
            }
        }
    }

    FeasibilityResult result;
    if (best) {
        result.feasible = true;
        result.config = best;
        return result;
    }
    if (best_mixed) {
        result.feasible = true;
        result.config = best_mixed;
        return result;
    }

    // infeasible: instantiate the chain 0 < Area <= d (R-2) + 1 - d at the
    // binding branch (m = 0, d' = d, s = 2d maximizes the slack for R > 2)
    InfeasibilityCertificate cert;
    cert.d = d;
    cert.R = R;
    cert.m = binding->m;
    cert.d_prime = binding->d_prime;
    cert.s = binding->s;
    cert.slack = binding_slack;
    const Rational r2 = R - Rational(2);
    cert.inequality = std::to_string(d) + "*(" + r2.str() + ") + 1 - " + std::to_string(d) + " = " +
                      (Rational(d) * r2 + Rational(1) - Rational(d)).str() + " < 0";
    cert.frontier = "R - 2 = " + r2.str() + " < 1 - 1/" + std::to_string(d) + " = " +
                    (Rational(1) - Rational(1, d)).str();
    cert.positive_case = "all-positive ends excluded: " + std::to_string(2 * d) +
                         " covers of degree-1 leaves would exceed total degree " + std::to_string(d);
    result.certificate = cert;
    return result;
}

/// Connected building realizing a feasible all-negative assignment: the
/// distinguished component of degree d' = d - m with s ends on (-1,0)
/// orbits, one torus-level cylinder per end feeding a degree-0 leaf, and the
/// m remaining cylinders hung off the first (branched) bottom cover with
/// their degree-1 leaf covers.
inline BuildingSpec assemble_witness_building(const DegreeDConfig& cfg) {
    if (cfg.sign_mode != SignConsistency::all_negative)
        throw std::invalid_argument("assemble_witness_building: only all-negative assignments assemble");
    if (cfg.d_prime + cfg.m != cfg.d)
        throw std::invalid_argument("assemble_witness_building: assignment does not fill the degree");

    const HomologyClass toward{1, 0};
    BuildingSpec b;
    // distinguished component
    ComponentSpec noncover;
    noncover.level_kind = LevelKind::top;
    noncover.level = 1;
    noncover.degree = cfg.d_prime;
    noncover.exceptional = cfg.d_prime - 1;
    for (long long i = 0; i < cfg.s; ++i) noncover.ends.push_back({Sign::negative, -toward, true});
    b.components.push_back(std::move(noncover));

    const int first_cyl = 1;
    for (long long i = 0; i < cfg.s; ++i) {
        std::vector<HomologyClass> ends = {-toward, toward};
        if (i == 0) {
            // branched bottom cover carrying the m extra chains
            for (long long j = 0; j < cfg.m; ++j) {
                ends.push_back(-toward);
                ends.push_back(toward);
            }
        }
        b.components.push_back(detail::bottom_component(ends));
    }
    const int first_leaf = first_cyl + static_cast<int>(cfg.s);
    for (long long i = 0; i < cfg.s; ++i)
        b.components.push_back(detail::top_plane(0, 0, toward, 1));
    const int first_extra = first_leaf + static_cast<int>(cfg.s);
    for (long long j = 0; j < cfg.m; ++j) {
        b.components.push_back(detail::top_plane(1, 1, -toward, 1)); // degree-1 leaf cover
        b.components.push_back(detail::top_plane(0, 0, toward, 1));  // its degree-0 partner
    }

    for (long long i = 0; i < cfg.s; ++i) {
        const int cyl = first_cyl + static_cast<int>(i);
        b.matchings.push_back({{cyl, 0}, {0, static_cast<int>(i)}});
        b.matchings.push_back({{cyl, 1}, {first_leaf + static_cast<int>(i), 0}});
    }
    for (long long j = 0; j < cfg.m; ++j) {
        const int deg1 = first_extra + 2 * static_cast<int>(j);
        b.matchings.push_back({{first_cyl, 2 + 2 * static_cast<int>(j)}, {deg1, 0}});
        b.matchings.push_back({{first_cyl, 3 + 2 * static_cast<int>(j)}, {deg1 + 1, 0}});
    }

    b.total_degree = cfg.d;
    b.total_exceptional = cfg.d - 1;
    return b;
}

// ---------------------------------------------------------------------------
// Witness degree and the embedding bound
// ---------------------------------------------------------------------------

struct WitnessResult {
    enum class Status { found, none, not_needed };
    Status status = Status::none;
    long long degree = 0;
};

/// Least degree whose feasibility search comes up empty, by running the
/// search. Below R = 2 the volume bound already obstructs, and at R >= 3
/// every degree stays feasible.
inline WitnessResult witness_degree(const Rational& R, const RulesRegistry& rules = {}) {
    if (!(R > Rational(2))) return {WitnessResult::Status::not_needed, 0};
    if (!(R < Rational(3))) return {WitnessResult::Status::none, 0};
    for (long long d = 1; d <= 1'000'000; ++d) {
        if (!degree_d_feasibility(R, d, rules).feasible) return {WitnessResult::Status::found, d};
    }
    throw std::logic_error("witness_degree: search did not terminate");
}

/// Same value from the closed-form frontier: the least d with d (3-R) > 1.
inline WitnessResult witness_degree_closed_form(const Rational& R) {
    if (!(R > Rational(2))) return {WitnessResult::Status::not_needed, 0};
    if (!(R < Rational(3))) return {WitnessResult::Status::none, 0};
    const Rational gap = Rational(3) - R; // = a/b > 0; least d with d a > b
    const long long d = gap.den() / gap.num() + 1;
    return {WitnessResult::Status::found, d};
}

struct EmbeddingBound {
    Rational bound;                                       // 3
    std::vector<std::pair<long long, Rational>> schedule; // (d, 3 - 1/d)
    bool sharp = false;                                   // matches the inclusion bound
    Rational inclusion;
};

/// The supremum of the feasibility frontier: degree d forces a >= 3 - 1/d,
/// the schedule increases to 3, and 3 matches the inclusion bound from
/// above, so the embedding bound for P(1,2) is exactly 3.
inline EmbeddingBound embedding_bound_polydisk12(long long max_degree = 12) {
    if (max_degree < 2) throw std::invalid_argument("embedding_bound: max_degree must be >= 2");
    EmbeddingBound out;
    out.bound = Rational(3);
    for (long long d = 2; d <= max_degree; ++d) {
        // frontier of degree d: the slack d R - (d-1) - 2d vanishes at
        // R = (3d-1)/d = 3 - 1/d
        const Rational frontier = Rational(3 * d - 1, d);
        // the certificates confirm the algebra: feasible on the frontier,
        // infeasible just below it
        if (!degree_d_feasibility(frontier, d).feasible)
            throw std::logic_error("embedding_bound: frontier point not feasible");
        const Rational below = frontier - Rational(1, 1000 * d);
        if (below > Rational(2) && degree_d_feasibility(below, d).feasible)
            throw std::logic_error("embedding_bound: point below the frontier not excluded");
        if (!(frontier < out.bound) || !(out.bound - frontier == Rational(1, d)))
            throw std::logic_error("embedding_bound: frontier does not approach 3");
        out.schedule.emplace_back(d, frontier);
    }
    out.inclusion = inclusion_bound(Polydisk(Rational(1), Rational(2)));
    out.sharp = out.bound == out.inclusion;
    return out;
}

} // namespace neckstretch
