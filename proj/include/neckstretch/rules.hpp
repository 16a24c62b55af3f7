#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace neckstretch {

// Named geometric exclusion rules. These encode inputs the arithmetic side
// of the enumeration cannot derive on its own; they default to enabled and
// can be toggled off to explore what the pure index/area constraints allow.

namespace geometric_rule {
/// Excludes broken fiber configurations whose degree-0 plane carries the
/// exceptional intersection: blowing the exceptional sphere back down would
/// produce a circle family of planes on (2,0) geodesics all passing through
/// one point, while such planes pair to intersection number 0.
inline constexpr const char* g1_blowdown = "G1-blowdown";

/// Each (1,0) orbit bounds exactly one degree-0 leaf and each (-1,0) orbit
/// exactly one degree-1 leaf, so a component end lying over an orbit picks
/// out a unique comparison leaf.
inline constexpr const char* unique_leaf = "unique-leaf";
} // namespace geometric_rule

class RulesRegistry {
  public:
    struct Entry {
        std::string id;
        std::string description;
        bool enabled = true;
    };

    RulesRegistry() {
        entries_.push_back({geometric_rule::g1_blowdown,
                            "broken fiber pairs whose degree-0 plane meets the exceptional sphere "
                            "are excluded by blow-down positivity of intersection",
                            true});
        entries_.push_back({geometric_rule::unique_leaf,
                            "one foliation leaf per orbit in the classes (1,0) and (-1,0)", true});
    }

    bool enabled(const std::string& id) const { return find(id).enabled; }

    void set_enabled(const std::string& id, bool on) { find(id).enabled = on; }

    const std::vector<Entry>& entries() const { return entries_; }

  private:
    Entry& find(const std::string& id) {
        for (auto& e : entries_)
            if (e.id == id) return e;
        throw std::invalid_argument("rules registry: unknown rule '" + id + "'");
    }
    const Entry& find(const std::string& id) const {
        return const_cast<RulesRegistry*>(this)->find(id);
    }

    std::vector<Entry> entries_;
};

} // namespace neckstretch
