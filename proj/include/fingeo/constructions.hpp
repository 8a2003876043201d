#ifndef FINGEO_CONSTRUCTIONS_HPP
#define FINGEO_CONSTRUCTIONS_HPP

#include "fingeo/gq.hpp"
#include "fingeo/projective.hpp"

namespace fingeo {

enum class OvoidKind { elliptic, suzuki_tits, custom };

/// An ovoid of PG(3,q): q^2+1 points, every plane section of size 1 or q+1.
struct OvoidPG {
    OvoidKind kind;
    std::vector<int> point_ids;  // sorted indices into PG3::points()
};

struct OvoidReport {
    bool ok = false;
    long long tangent_planes = 0;  // expected q^2+1
    long long secant_planes = 0;   // expected q^3+q
    long long tangent_lines = 0;   // expected (q^2+1)(q+1)
    bool line_sections_ok = false;        // every line meets in <= 2 points
    bool unique_tangent_per_point = false;
    bool dual_ovoid_ok = false;  // tangent planes form an ovoid in the dual space
    std::string witness;         // first offending plane/line, if any
};

/// Points of PG(3,q) with the totally isotropic lines of the symplectic
/// form; a regular GQ of order (q,q). Line indices follow the canonical
/// block order of the returned structure, with labels recording PG line ids.
GQView build_wq(const PG3& pg);

/// Zero set of x0 x1 + x2^2 + x2 x3 + b x3^2 with t^2+t+b irreducible,
/// b minimal in code order.
OvoidPG elliptic_quadric(const PG3& pg);

/// The Suzuki-Tits ovoid; q = 2^e, e odd >= 3 (here: q = 8).
OvoidPG suzuki_tits(const PG3& pg);

OvoidReport verify_pg_ovoid(const PG3& pg, const std::vector<int>& pts);

/// Points of the ovoid versus its secant-plane sections: a 3-(q^2+1, q+1, 1)
/// design.
IncidenceStructure build_inversive_from_ovoid(const PG3& pg, const OvoidPG& O);

/// For even q: all PG points with the tangent lines to O; a regular GQ(q,q).
GQView build_tangent_line_gq(const PG3& pg, const OvoidPG& O);

/// Points versus planes of PG(3,q); n must be 3.
IncidenceStructure pg_hyperplane_design(int n, const PG3& pg);

}  // namespace fingeo

#endif
