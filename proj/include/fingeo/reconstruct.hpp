#ifndef FINGEO_RECONSTRUCT_HPP
#define FINGEO_RECONSTRUCT_HPP

#include "fingeo/canon.hpp"
#include "fingeo/gq.hpp"
#include "fingeo/inversive.hpp"

namespace fingeo {

/// The quadrangle built from an inversive plane of even order: its points
/// are the points and circles of the plane, its lines come one per pencil.
struct WFromI {
    GQView gq;
    int q;
    /// W point u is an inversive point iff u <= q^2, in which case it is
    /// point u; otherwise it is circle u - (q^2+1).
    int num_inversive_points;
    bool is_circle_node(int u) const { return u >= num_inversive_points; }
    int circle_of_node(int u) const { return u - num_inversive_points; }
    /// For each canonical W line index, the pencil it came from.
    std::vector<Pencil> line_pencils;
};

struct PipelineReport {
    int q = 0;
    bool valid_inversive = false;
    bool even_order = false;
    bool is_gq = false;
    bool is_regular = false;
    long long k_count = 0, k_bound = 0;
    bool k_count_attains_bound = false;
    DesignParams stars_params;
    bool stars_design_ok = false;
    bool dw_hypothesis = false;
    bool polarity_ok = false;
    bool roundtrip_ok = false;  // I -> W -> ovoid -> I canonical identity
    bool iso_checked = false;
    bool iso_to_canonical_wq = false;
    bool iso_budget_exhausted = false;
    std::vector<std::string> failures;

    bool all_ok() const {
        return valid_inversive && even_order && is_gq && is_regular &&
               k_count_attains_bound && stars_design_ok && dw_hypothesis &&
               polarity_ok && roundtrip_ok && (!iso_checked || iso_to_canonical_wq);
    }
};

/// Collinearity rules checked exhaustively: inversive points mutually
/// non-collinear; a point and a circle collinear iff incident; two circles
/// collinear iff equal or tangent. Verifies as GQ(q,q).
WFromI build_w_from_inversive(const InversivePlane& I);

/// One K_{q+1,q+1} witness per point pair e: parts {e's points, C_e} and
/// {circles through e}. Returns the number of witnesses, C(q^2+1, 2),
/// after asserting each induces a complete bipartite collinearity graph.
long long k_witness_sets(const InversivePlane& I, const WFromI& W);

/// Blocks are the stars of the GQ's points; a symmetric
/// 2-((q+1)(q^2+1), q^2+q+1, q+1) design for a GQ of order (q,q).
IncidenceStructure stars_design(const GQView& G);

/// The star map is a polarity with every point absolute: collinearity
/// extended by reflexivity is symmetric and reflexive.
bool verify_star_polarity(const GQView& G);

/// Full reconstruction: validate, gate on even order, build W, count the
/// K witnesses, stars design, projective-space hypothesis check, polarity,
/// round trip, and (optionally) canonical isomorphism with the coordinate
/// model. check_iso requires q in {2,4,8}; iso_budget < 0 is unlimited.
PipelineReport dembowski_pipeline(const IncidenceStructure& I_raw,
                                  bool check_iso = true, long long iso_budget = -1);

/// Stable key: value rendering of a report, one line per field.
std::string format_report(const PipelineReport& rep);

}  // namespace fingeo

#endif
