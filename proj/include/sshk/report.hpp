#pragma once

#include <map>
#include <optional>

#include "sshk/abelian.hpp"

namespace sshk {

/// One homology degree: the group (or unresolved extension pieces) plus a tag
/// naming the engine / formula that produced it.
struct DegreeEntry {
    ExtensionResult value;
    std::string provenance;  // e.g. "graph-engine", "closed-form (reference-only)"

    static DegreeEntry exact(FinGenAbGroup g, std::string prov) {
        ExtensionResult r{FinGenAbGroup::trivial(), FinGenAbGroup::trivial(), std::move(g)};
        return {std::move(r), std::move(prov)};
    }
};

struct KTheoryPair {
    ExtensionResult k0, k1;
    std::optional<std::string> unit_class;  // class of [1] in K_0, when known
    std::string provenance;
};

/// Degree-indexed homology plus the K-theory pair; the value type every engine
/// and the reference tables emit.
struct GradedReport {
    std::map<std::size_t, DegreeEntry> homology;
    std::optional<KTheoryPair> k_theory;
    std::vector<std::string> flags;

    void set(std::size_t degree, FinGenAbGroup g, std::string prov) {
        homology[degree] = DegreeEntry::exact(std::move(g), std::move(prov));
    }

    std::string to_json() const;       // canonical (sorted keys, 2-space indent)
    std::string render_table() const;  // human-readable
};

}  // namespace sshk
