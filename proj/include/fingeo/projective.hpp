#ifndef FINGEO_PROJECTIVE_HPP
#define FINGEO_PROJECTIVE_HPP

#include <array>
#include <map>
#include <vector>

#include "fingeo/gf.hpp"

namespace fingeo {

/// Homogeneous coordinates, normalized so the first nonzero entry is 1.
using Coords = std::array<int, 4>;

/// Points, lines and planes of PG(3,q). Points and planes are indexed in
/// lexicographic order of their normalized coordinates; lines are sorted
/// lists of point indices, themselves in lexicographic order.
class PG3 {
public:
    explicit PG3(const Field& F);

    const Field& field() const { return *F_; }
    int q() const { return F_->q(); }

    const std::vector<Coords>& points() const { return points_; }
    const std::vector<Coords>& planes() const { return planes_; }
    const std::vector<std::vector<int>>& lines() const { return lines_; }

    int point_index(const Coords& c) const;  // c need not be normalized
    int plane_index(const Coords& c) const;

    Coords normalize(const Coords& c) const;

    /// Sigma a_i x_i = 0 over the field.
    bool on_plane(const Coords& point, const Coords& plane) const;

    /// Sorted point indices of the plane's point set (q^2+q+1 of them).
    std::vector<int> plane_points(int plane_id) const;

    /// B(x,y) = x0 y1 - x1 y0 + x2 y3 - x3 y2.
    int symplectic_form(const Coords& x, const Coords& y) const;
    int symplectic_form(int point_a, int point_b) const;

    /// The plane {y : B(x,y) = 0}; an involution, and every point lies on
    /// its own image.
    int null_polarity_image(int point_id) const;
    /// Inverse direction: the point whose polar plane this is.
    int null_polarity_preimage(int plane_id) const;

private:
    const Field* F_;
    std::vector<Coords> points_, planes_;
    std::vector<std::vector<int>> lines_;
    std::map<Coords, int> point_index_, plane_index_;
};

}  // namespace fingeo

#endif
