#ifndef FINGEO_INVERSIVE_HPP
#define FINGEO_INVERSIVE_HPP

#include "fingeo/incidence.hpp"

namespace fingeo {

struct BadPointCount : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotAffine : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotAnOval : std::runtime_error {
    Block witness;  // a collinear triple
    NotAnOval(const std::string& msg, Block w)
        : std::runtime_error(msg), witness(std::move(w)) {}
};
struct NoNucleus : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotUniqueTangent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A 3-(q^2+1, q+1, 1) design; blocks are its circles.
class InversivePlane {
public:
    const IncidenceStructure& structure() const { return S_; }
    int q() const { return q_; }
    int num_points() const { return S_.num_points(); }
    int num_circles() const { return S_.num_blocks(); }
    const DesignParams& params() const { return params_; }

    /// Circles through a pair of points (q+1 of them).
    std::vector<int> circles_through(int x, int y) const;
    /// The unique circle through three distinct points.
    int circle_through(int x, int y, int z) const;

    friend InversivePlane verify_inversive(IncidenceStructure S);

private:
    explicit InversivePlane(IncidenceStructure S) : S_(std::move(S)) {}
    IncidenceStructure S_;
    int q_ = 0;
    DesignParams params_;
};

/// A maximal family of mutually tangent circles through the carrier,
/// partitioning the remaining points.
struct Pencil {
    int carrier;
    std::vector<int> circles;  // q circle indices, sorted
};

/// Affine plane plus its points and line at infinity.
struct ProjectiveClosure {
    IncidenceStructure affine;
    IncidenceStructure plane;               // 2-(n^2+n+1, n+1, 1)
    int order;                              // n
    std::vector<std::vector<int>> classes;  // parallel classes, affine line ids
    std::vector<int> infinity_points;       // plane point id per parallel class
    int line_at_infinity;                   // block id in `plane`
    /// Block id in `plane` extending a given affine line.
    std::vector<int> extended_line;
};

/// Checks v = q^2+1, the 3-design property with lambda = 1, and that every
/// contraction is an affine plane of order q.
InversivePlane verify_inversive(IncidenceStructure S);

/// Partition of an affine plane's lines into n+1 classes of n mutually
/// disjoint lines; lines from different classes meet in one point.
std::vector<std::vector<int>> parallel_classes(const IncidenceStructure& A);

ProjectiveClosure projective_closure(const IncidenceStructure& A);

enum class LineClass { passant, tangent, secant };

/// Classifies a line against an oval by the size of their intersection;
/// validates the oval (n+1 points, no collinear triple) first.
LineClass classify_vs_oval(const IncidenceStructure& P, const Block& oval, int line);

/// The common point of all n+1 tangents to an oval in a plane of even
/// order n.
int nucleus(const IncidenceStructure& P, const Block& oval);

/// All (q+1)(q^2+1) pencils, grouped by carrier in point order; within a
/// carrier, ordered by least circle index.
std::vector<Pencil> pencils(const InversivePlane& I);

/// The unique circle of p tangent to C (q even, carrier not on C, C not
/// in p).
int tangent_in_pencil(const InversivePlane& I, const Pencil& p, int circle);

/// C_e: the circles tangent to every circle through the pair e. For even q
/// there are exactly q-1 and they partition the complement of e.
std::vector<int> common_tangent_circles(const InversivePlane& I, int x, int y);

}  // namespace fingeo

#endif
