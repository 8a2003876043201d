#include "fingeo/projective.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace fingeo {

namespace {

// All normalized representatives, in lexicographic coordinate order.
std::vector<Coords> enumerate_normalized(int q) {
    std::vector<Coords> out;
    for (int lead = 0; lead < 4; ++lead) {
        Coords c{0, 0, 0, 0};
        c[lead] = 1;
        int free = 3 - lead;
        long long total = 1;
        for (int i = 0; i < free; ++i) total *= q;
        for (long long code = 0; code < total; ++code) {
            long long rest = code;
            for (int i = 3; i > lead; --i) {
                c[i] = static_cast<int>(rest % q);
                rest /= q;
            }
            out.push_back(c);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

PG3::PG3(const Field& F) : F_(&F) {
    const int q = F.q();
    points_ = enumerate_normalized(q);
    planes_ = points_;
    for (int i = 0; i < static_cast<int>(points_.size()); ++i) {
        point_index_[points_[i]] = i;
        plane_index_[planes_[i]] = i;
    }

    // Lines as closures of point pairs under projective span.
    std::set<std::vector<int>> line_set;
    const int n = static_cast<int>(points_.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            std::vector<int> line;
            line.push_back(i);
            // x + mu*y for all mu, plus y itself
            for (int mu = 0; mu < q; ++mu) {
                Coords c;
                for (int t = 0; t < 4; ++t)
                    c[t] = F.add(points_[j][t], F.mul(mu, points_[i][t]));
                line.push_back(point_index(c));
            }
            std::sort(line.begin(), line.end());
            if (line[0] == i)  // canonical generator pair only, cheap dedup
                line_set.insert(line);
        }
    }
    lines_.assign(line_set.begin(), line_set.end());
    assert(static_cast<long long>(lines_.size()) ==
           static_cast<long long>(q * q + 1) * (q * q + q + 1));
}

Coords PG3::normalize(const Coords& c) const {
    int lead = -1;
    for (int i = 0; i < 4; ++i)
        if (c[i] != 0) {
            lead = i;
            break;
        }
    if (lead < 0) throw std::invalid_argument("zero vector has no projective point");
    int s = F_->inv(c[lead]);
    Coords out;
    for (int i = 0; i < 4; ++i) out[i] = F_->mul(s, c[i]);
    return out;
}

int PG3::point_index(const Coords& c) const {
    auto it = point_index_.find(normalize(c));
    assert(it != point_index_.end());
    return it->second;
}

int PG3::plane_index(const Coords& c) const {
    auto it = plane_index_.find(normalize(c));
    assert(it != plane_index_.end());
    return it->second;
}

bool PG3::on_plane(const Coords& point, const Coords& plane) const {
    int s = 0;
    for (int i = 0; i < 4; ++i) s = F_->add(s, F_->mul(point[i], plane[i]));
    return s == 0;
}

std::vector<int> PG3::plane_points(int plane_id) const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(points_.size()); ++i)
        if (on_plane(points_[i], planes_[plane_id])) out.push_back(i);
    return out;
}

int PG3::symplectic_form(const Coords& x, const Coords& y) const {
    const Field& F = *F_;
    int a = F.sub(F.mul(x[0], y[1]), F.mul(x[1], y[0]));
    int b = F.sub(F.mul(x[2], y[3]), F.mul(x[3], y[2]));
    return F.add(a, b);
}

int PG3::symplectic_form(int point_a, int point_b) const {
    return symplectic_form(points_[point_a], points_[point_b]);
}

int PG3::null_polarity_image(int point_id) const {
    const Coords& x = points_[point_id];
    // plane a with <a,y> = B(x,y): a = (-x1, x0, -x3, x2)
    Coords a{F_->neg(x[1]), x[0], F_->neg(x[3]), x[2]};
    return plane_index(a);
}

int PG3::null_polarity_preimage(int plane_id) const {
    const Coords& a = planes_[plane_id];
    // inverse of the map above: x = (a1, -a0, a3, -a2)
    Coords x{a[1], F_->neg(a[0]), a[3], F_->neg(a[2])};
    return point_index(x);
}

}  // namespace fingeo
