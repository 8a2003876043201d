#include "fingeo/inversive.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace fingeo {

std::vector<int> InversivePlane::circles_through(int x, int y) const {
    std::vector<int> out;
    for (int j = 0; j < S_.num_blocks(); ++j)
        if (S_.incident(x, j) && S_.incident(y, j)) out.push_back(j);
    return out;
}

int InversivePlane::circle_through(int x, int y, int z) const {
    for (int j = 0; j < S_.num_blocks(); ++j)
        if (S_.incident(x, j) && S_.incident(y, j) && S_.incident(z, j)) return j;
    throw std::logic_error("no circle through triple");  // impossible in a 3-design
}

InversivePlane verify_inversive(IncidenceStructure S) {
    const int v = S.num_points();
    int q = static_cast<int>(std::lround(std::sqrt(static_cast<double>(v - 1))));
    if (q < 2 || q * q + 1 != v)
        throw BadPointCount("point count " + std::to_string(v) +
                            " is not q^2+1 for any q >= 2");
    InversivePlane I(std::move(S));
    I.q_ = q;
    I.params_ = verify_t_design(I.S_, 3);
    if (I.params_.k != q + 1 || I.params_.lambda != 1)
        throw NotBalanced("not a 3-(q^2+1, q+1, 1) design", {}, I.params_.lambda);
    for (int x = 0; x < v; ++x) {
        DesignParams ap = verify_t_design(contract(I.S_, x), 2);
        if (ap.v != q * q || ap.k != q || ap.lambda != 1)
            throw NotBalanced("contraction at " + std::to_string(x) +
                                  " is not an affine plane",
                              {x}, ap.lambda);
    }
    return I;
}

std::vector<std::vector<int>> parallel_classes(const IncidenceStructure& A) {
    DesignParams ap;
    try {
        ap = verify_t_design(A, 2);
    } catch (const std::runtime_error& e) {
        throw NotAffine(std::string("not an affine plane: ") + e.what());
    }
    const int n = ap.k;
    if (ap.v != n * n || ap.lambda != 1)
        throw NotAffine("not a 2-(n^2, n, 1) design");

    const int b = A.num_blocks();
    std::vector<int> cls(b, -1);
    std::vector<std::vector<int>> classes;
    for (int j = 0; j < b; ++j) {
        if (cls[j] >= 0) continue;
        int c = static_cast<int>(classes.size());
        classes.push_back({j});
        cls[j] = c;
        for (int k = j + 1; k < b; ++k)
            if (cls[k] < 0 && !A.block_bits(j).intersects(A.block_bits(k))) {
                cls[k] = c;
                classes[c].push_back(k);
            }
    }
    if (static_cast<int>(classes.size()) != n + 1) throw NotAffine("class count != n+1");
    for (const auto& c : classes) {
        if (static_cast<int>(c.size()) != n) throw NotAffine("class size != n");
        Bitset cover(A.num_points());
        for (int j : c) {
            if (cover.intersects(A.block_bits(j)))
                throw NotAffine("lines within a class intersect");
            cover |= A.block_bits(j);
        }
        if (!cover.all()) throw NotAffine("class does not cover the points");
    }
    for (size_t a = 0; a < classes.size(); ++a)
        for (size_t b2 = a + 1; b2 < classes.size(); ++b2)
            for (int j : classes[a])
                for (int k : classes[b2]) {
                    Bitset m = A.block_bits(j);
                    m &= A.block_bits(k);
                    if (m.count() != 1)
                        throw NotAffine("cross-class lines do not meet in one point");
                }
    return classes;
}

ProjectiveClosure projective_closure(const IncidenceStructure& A) {
    std::vector<std::vector<int>> classes = parallel_classes(A);
    // deterministic class order: by least line index
    std::sort(classes.begin(), classes.end());

    const int n2 = A.num_points();
    const int nclasses = static_cast<int>(classes.size());
    ProjectiveClosure pc{A, A, nclasses - 1, classes, {}, 0, {}};

    std::vector<Block> blocks;
    std::vector<int> class_of_line(A.num_blocks(), -1);
    for (int c = 0; c < nclasses; ++c) {
        pc.infinity_points.push_back(n2 + c);
        for (int j : classes[c]) class_of_line[j] = c;
    }
    pc.extended_line.resize(A.num_blocks());
    for (int j = 0; j < A.num_blocks(); ++j) {
        Block blk = A.block(j);
        blk.push_back(n2 + class_of_line[j]);
        blocks.push_back(std::move(blk));
    }
    blocks.push_back(pc.infinity_points);

    // IncidenceStructure re-sorts blocks; recover the block ids afterwards
    IncidenceStructure P(n2 + nclasses, blocks);
    for (int j = 0; j < A.num_blocks(); ++j) {
        Block blk = A.block(j);
        blk.push_back(n2 + class_of_line[j]);
        std::sort(blk.begin(), blk.end());
        auto it = std::lower_bound(P.blocks().begin(), P.blocks().end(), blk);
        pc.extended_line[j] = static_cast<int>(it - P.blocks().begin());
    }
    {
        Block inf = pc.infinity_points;
        auto it = std::lower_bound(P.blocks().begin(), P.blocks().end(), inf);
        pc.line_at_infinity = static_cast<int>(it - P.blocks().begin());
    }
    pc.plane = std::move(P);
    return pc;
}

namespace {

void check_oval(const IncidenceStructure& P, const Block& oval, int order) {
    if (static_cast<int>(oval.size()) != order + 1)
        throw NotAnOval("oval must have n+1 points", oval);
    for (int j = 0; j < P.num_blocks(); ++j) {
        Block hit;
        for (int x : oval)
            if (P.incident(x, j)) hit.push_back(x);
        if (hit.size() >= 3) throw NotAnOval("three oval points on one line", hit);
    }
}

int plane_order(const IncidenceStructure& P) {
    DesignParams pp = verify_t_design(P, 2);
    int n = pp.k - 1;
    if (pp.v != n * n + n + 1 || pp.lambda != 1)
        throw NotAffine("not a projective plane");
    return n;
}

}  // namespace

LineClass classify_vs_oval(const IncidenceStructure& P, const Block& oval, int line) {
    check_oval(P, oval, plane_order(P));
    int m = 0;
    for (int x : oval)
        if (P.incident(x, line)) ++m;
    switch (m) {
        case 0: return LineClass::passant;
        case 1: return LineClass::tangent;
        case 2: return LineClass::secant;
        default: throw NotAnOval("line meets oval in >2 points", oval);
    }
}

int nucleus(const IncidenceStructure& P, const Block& oval) {
    int n = plane_order(P);
    if (n % 2 != 0) throw NoNucleus("nucleus requires even order");
    check_oval(P, oval, n);
    Bitset common(P.num_points());
    common.set();
    int tangents = 0;
    for (int j = 0; j < P.num_blocks(); ++j) {
        int m = 0;
        for (int x : oval)
            if (P.incident(x, j)) ++m;
        if (m == 1) {
            ++tangents;
            common &= P.block_bits(j);
        }
    }
    if (tangents != n + 1 || common.count() != 1)
        throw NoNucleus("tangent lines are not concurrent");
    int nuc = static_cast<int>(common.find_first());
    assert(std::find(oval.begin(), oval.end(), nuc) == oval.end());
    return nuc;
}

std::vector<Pencil> pencils(const InversivePlane& I) {
    const IncidenceStructure& S = I.structure();
    std::vector<Pencil> out;
    for (int x = 0; x < S.num_points(); ++x) {
        // circles through x, in index order; contraction preserves this order
        std::vector<int> through = S.blocks_through(x);
        IncidenceStructure A = contract(S, x);
        assert(A.num_blocks() == static_cast<int>(through.size()));
        // contract() re-sorts blocks; map contracted block back to circle id
        std::vector<int> back(A.num_blocks());
        {
            std::vector<std::pair<Block, int>> keyed;
            for (int j : through) {
                Block blk;
                for (int y : S.block(j))
                    if (y != x) blk.push_back(y < x ? y : y - 1);
                keyed.emplace_back(std::move(blk), j);
            }
            std::sort(keyed.begin(), keyed.end());
            for (int i = 0; i < A.num_blocks(); ++i) {
                assert(keyed[i].first == A.block(i));
                back[i] = keyed[i].second;
            }
        }
        std::vector<std::vector<int>> classes = parallel_classes(A);
        std::vector<Pencil> here;
        for (const auto& cls : classes) {
            Pencil p;
            p.carrier = x;
            for (int j : cls) p.circles.push_back(back[j]);
            std::sort(p.circles.begin(), p.circles.end());
            here.push_back(std::move(p));
        }
        std::sort(here.begin(), here.end(), [](const Pencil& a, const Pencil& b) {
            return a.circles < b.circles;
        });
        for (auto& p : here) out.push_back(std::move(p));
    }
    return out;
}

int tangent_in_pencil(const InversivePlane& I, const Pencil& p, int circle) {
    const IncidenceStructure& S = I.structure();
    if (I.q() % 2 != 0) throw OddOrder("tangent_in_pencil requires even q");
    if (S.incident(p.carrier, circle))
        throw std::invalid_argument("carrier lies on the circle");
    if (std::find(p.circles.begin(), p.circles.end(), circle) != p.circles.end())
        throw std::invalid_argument("circle belongs to the pencil");
    int found = -1;
    for (int d : p.circles) {
        Bitset m = S.block_bits(d);
        m &= S.block_bits(circle);
        if (m.count() == 1) {
            if (found >= 0)
                throw NotUniqueTangent("two tangent circles in the pencil");
            found = d;
        }
    }
    if (found < 0) throw NotUniqueTangent("no tangent circle in the pencil");
    return found;
}

std::vector<int> common_tangent_circles(const InversivePlane& I, int x, int y) {
    const IncidenceStructure& S = I.structure();
    if (I.q() % 2 != 0) throw OddOrder("common_tangent_circles requires even q");
    std::vector<int> through = I.circles_through(x, y);
    std::vector<int> out;
    for (int c = 0; c < S.num_blocks(); ++c) {
        bool all_tangent = true;
        for (int d : through) {
            Bitset m = S.block_bits(c);
            m &= S.block_bits(d);
            if (m.count() != 1) {
                all_tangent = false;
                break;
            }
        }
        if (all_tangent) out.push_back(c);
    }
    return out;
}

}  // namespace fingeo
