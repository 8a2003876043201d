#ifndef FINGEO_CANON_HPP
#define FINGEO_CANON_HPP

#include <cstdint>

#include "fingeo/incidence.hpp"

namespace fingeo {

struct Budget : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Relabeling-invariant certificate of an incidence structure: equal
/// certificates iff the structures are isomorphic (points to points,
/// blocks to blocks).
struct CanonicalForm {
    std::vector<uint8_t> certificate;
    /// canonical rank of each original point / block
    std::vector<int> point_labels;
    std::vector<int> block_labels;

    bool operator==(const CanonicalForm& o) const {
        return certificate == o.certificate;
    }
    std::string hex() const;
};

/// Iterated colour refinement on the side-coloured incidence graph plus
/// individualize-and-refine backtracking, taking the lexicographically
/// least certificate over the leaves. Discovered automorphisms prune
/// equivalent branches. node_budget < 0 means unlimited; exceeding it
/// throws Budget.
CanonicalForm canonical_form(const IncidenceStructure& S, long long node_budget = -1);

struct IsomorphismResult {
    bool isomorphic = false;
    std::vector<int> point_map;  // A point -> B point
    std::vector<int> block_map;  // A block -> B block
};

/// Cheap invariant prechecks, then canonical forms; any returned mapping is
/// re-verified by a direct incidence check.
IsomorphismResult isomorphic(const IncidenceStructure& A, const IncidenceStructure& B,
                             long long node_budget = -1);

}  // namespace fingeo

#endif
