#include "fingeo/constructions.hpp"

#include <algorithm>
#include <cassert>

namespace fingeo {

GQView build_wq(const PG3& pg) {
    std::vector<Block> lines;
    for (const auto& line : pg.lines()) {
        bool isotropic = true;
        for (size_t a = 0; a < line.size() && isotropic; ++a)
            for (size_t b = a + 1; b < line.size() && isotropic; ++b)
                if (pg.symplectic_form(line[a], line[b]) != 0) isotropic = false;
        if (isotropic) lines.push_back(line);
    }
    return verify_gq(
        IncidenceStructure(static_cast<int>(pg.points().size()), std::move(lines)));
}

OvoidPG elliptic_quadric(const PG3& pg) {
    const Field& F = pg.field();
    const int q = F.q();
    // least b making t^2 + t + b irreducible (no root) over GF(q)
    int b = -1;
    for (int cand = 0; cand < q && b < 0; ++cand) {
        bool has_root = false;
        for (int t = 0; t < q; ++t)
            if (F.add(F.add(F.mul(t, t), t), cand) == 0) has_root = true;
        if (!has_root) b = cand;
    }
    assert(b >= 0);

    OvoidPG O;
    O.kind = OvoidKind::elliptic;
    for (int i = 0; i < static_cast<int>(pg.points().size()); ++i) {
        const Coords& x = pg.points()[i];
        int val = F.add(F.mul(x[0], x[1]),
                        F.add(F.mul(x[2], x[2]),
                              F.add(F.mul(x[2], x[3]), F.mul(b, F.mul(x[3], x[3])))));
        if (val == 0) O.point_ids.push_back(i);
    }
    assert(static_cast<int>(O.point_ids.size()) == q * q + 1);
    return O;
}

OvoidPG suzuki_tits(const PG3& pg) {
    const Field& F = pg.field();
    const int q = F.q();
    if (F.p() != 2 || F.e() < 3 || F.e() % 2 == 0)
        throw UnsupportedOrder("Suzuki-Tits ovoid needs q = 2^e with e odd >= 3");
    // sigma: t -> t^(2^((e+1)/2)), the square root of Frobenius squared
    long long sexp = 1LL << ((F.e() + 1) / 2);

    OvoidPG O;
    O.kind = OvoidKind::suzuki_tits;
    O.point_ids.push_back(pg.point_index(Coords{0, 0, 0, 1}));
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y) {
            int w = F.add(F.pow(x, sexp + 2), F.add(F.mul(x, y), F.pow(y, sexp)));
            O.point_ids.push_back(pg.point_index(Coords{1, x, y, w}));
        }
    std::sort(O.point_ids.begin(), O.point_ids.end());
    assert(static_cast<int>(O.point_ids.size()) == q * q + 1);
    return O;
}

OvoidReport verify_pg_ovoid(const PG3& pg, const std::vector<int>& pts) {
    OvoidReport rep;
    const int q = pg.q();
    Bitset ob(static_cast<int>(pg.points().size()));
    for (int x : pts) ob.set(x);

    if (static_cast<long long>(pts.size()) != static_cast<long long>(q) * q + 1) {
        rep.witness = "expected " + std::to_string(q * q + 1) + " points, got " +
                      std::to_string(pts.size());
        return rep;
    }

    std::vector<int> tangent_plane_of_point(pg.points().size(), -1);
    std::vector<int> tangent_planes_per_ovoid_point(pg.points().size(), 0);
    std::vector<int> tangent_planes_through(pg.points().size(), 0);
    for (int pl = 0; pl < static_cast<int>(pg.planes().size()); ++pl) {
        std::vector<int> section;
        for (int x : pts)
            if (pg.on_plane(pg.points()[x], pg.planes()[pl])) section.push_back(x);
        if (static_cast<int>(section.size()) == 1) {
            ++rep.tangent_planes;
            ++tangent_planes_per_ovoid_point[section[0]];
            for (int y = 0; y < static_cast<int>(pg.points().size()); ++y)
                if (pg.on_plane(pg.points()[y], pg.planes()[pl]))
                    ++tangent_planes_through[y];
        } else if (static_cast<int>(section.size()) == q + 1) {
            ++rep.secant_planes;
        } else {
            rep.witness = "plane " + std::to_string(pl) + " meets the set in " +
                          std::to_string(section.size()) + " points";
            return rep;
        }
    }

    rep.line_sections_ok = true;
    for (int li = 0; li < static_cast<int>(pg.lines().size()); ++li) {
        int m = 0;
        for (int x : pg.lines()[li])
            if (ob.test(x)) ++m;
        if (m > 2) {
            rep.line_sections_ok = false;
            rep.witness = "line " + std::to_string(li) + " meets the set in " +
                          std::to_string(m) + " points";
            return rep;
        }
        if (m == 1) ++rep.tangent_lines;
    }

    rep.unique_tangent_per_point = true;
    for (int x : pts)
        if (tangent_planes_per_ovoid_point[x] != 1) rep.unique_tangent_per_point = false;

    // The tangent planes, read as points of the dual space, should again be
    // an ovoid: every point lies on 1 or q+1 of them.
    rep.dual_ovoid_ok = true;
    for (int y = 0; y < static_cast<int>(pg.points().size()); ++y) {
        int c = tangent_planes_through[y];
        if (c != 1 && c != q + 1) rep.dual_ovoid_ok = false;
    }

    rep.ok = rep.line_sections_ok && rep.unique_tangent_per_point &&
             rep.tangent_planes == static_cast<long long>(q) * q + 1 &&
             rep.secant_planes == static_cast<long long>(q) * q * q + q;
    return rep;
}

IncidenceStructure build_inversive_from_ovoid(const PG3& pg, const OvoidPG& O) {
    OvoidReport rep = verify_pg_ovoid(pg, O.point_ids);
    if (!rep.ok)
        throw std::invalid_argument("point set is not an ovoid: " + rep.witness);
    std::vector<int> reindex(pg.points().size(), -1);
    for (int i = 0; i < static_cast<int>(O.point_ids.size()); ++i)
        reindex[O.point_ids[i]] = i;

    const int q = pg.q();
    std::vector<Block> circles;
    for (int pl = 0; pl < static_cast<int>(pg.planes().size()); ++pl) {
        Block section;
        for (int x : O.point_ids)
            if (pg.on_plane(pg.points()[x], pg.planes()[pl]))
                section.push_back(reindex[x]);
        if (static_cast<int>(section.size()) == q + 1) circles.push_back(std::move(section));
    }
    return IncidenceStructure(q * q + 1, std::move(circles));
}

GQView build_tangent_line_gq(const PG3& pg, const OvoidPG& O) {
    const int q = pg.q();
    if (q % 2 != 0) throw OddOrder("tangent-line GQ requires even q");
    OvoidReport rep = verify_pg_ovoid(pg, O.point_ids);
    if (!rep.ok)
        throw std::invalid_argument("point set is not an ovoid: " + rep.witness);

    Bitset ob(static_cast<int>(pg.points().size()));
    for (int x : O.point_ids) ob.set(x);
    std::vector<Block> lines;
    std::vector<int> tangents_per_point(pg.points().size(), 0);
    for (const auto& line : pg.lines()) {
        int m = 0;
        int hit = -1;
        for (int x : line)
            if (ob.test(x)) {
                ++m;
                hit = x;
            }
        if (m == 1) {
            lines.push_back(line);
            ++tangents_per_point[hit];
        }
    }
    assert(static_cast<long long>(lines.size()) ==
           static_cast<long long>(q * q + 1) * (q + 1));
    for (int x : O.point_ids) assert(tangents_per_point[x] == q + 1);
    return verify_gq(
        IncidenceStructure(static_cast<int>(pg.points().size()), std::move(lines)));
}

IncidenceStructure pg_hyperplane_design(int n, const PG3& pg) {
    if (n != 3) throw UnsupportedOrder("only PG(3,q) hyperplane designs are built");
    std::vector<Block> blocks;
    for (int pl = 0; pl < static_cast<int>(pg.planes().size()); ++pl)
        blocks.push_back(pg.plane_points(pl));
    return IncidenceStructure(static_cast<int>(pg.points().size()), std::move(blocks));
}

}  // namespace fingeo
