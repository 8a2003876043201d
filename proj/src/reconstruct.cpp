#include "fingeo/reconstruct.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "fingeo/constructions.hpp"
#include "fingeo/projective.hpp"

namespace fingeo {

WFromI build_w_from_inversive(const InversivePlane& I) {
    const int q = I.q();
    if (q % 2 != 0) throw OddOrder("reconstruction requires even order");
    const IncidenceStructure& S = I.structure();
    const int np = S.num_points();   // q^2 + 1
    const int nc = S.num_blocks();   // q (q^2 + 1)

    std::vector<Pencil> ps = pencils(I);
    std::vector<std::pair<Block, Pencil>> lines;
    for (const Pencil& p : ps) {
        Block blk{p.carrier};
        for (int c : p.circles) blk.push_back(np + c);
        lines.emplace_back(std::move(blk), p);
    }
    // canonical block order; carrier < circle nodes, so this sorts by
    // (carrier, least circle)
    std::sort(lines.begin(), lines.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    WFromI W{verify_gq(IncidenceStructure(
                 np + nc,
                 [&] {
                     std::vector<Block> blocks;
                     for (const auto& [blk, p] : lines) blocks.push_back(blk);
                     return blocks;
                 }())),
             q, np, {}};
    for (const auto& [blk, p] : lines) W.line_pencils.push_back(p);

    // collinearity rules of the construction, exhaustively
    const GQView& G = W.gq;
    for (int x = 0; x < np; ++x)
        for (int y = x + 1; y < np; ++y)
            if (G.collinear(x, y))
                throw std::logic_error("two inversive points collinear in W");
    for (int x = 0; x < np; ++x)
        for (int c = 0; c < nc; ++c)
            if (G.collinear(x, np + c) != S.incident(x, c))
                throw std::logic_error("point/circle collinearity disagrees with incidence");
    for (int c = 0; c < nc; ++c)
        for (int d = c + 1; d < nc; ++d) {
            Bitset m = S.block_bits(c);
            m &= S.block_bits(d);
            bool tangent = m.count() == 1;
            if (G.collinear(np + c, np + d) != tangent)
                throw std::logic_error("circle/circle collinearity disagrees with tangency");
        }
    return W;
}

long long k_witness_sets(const InversivePlane& I, const WFromI& W) {
    const IncidenceStructure& S = I.structure();
    const GQView& G = W.gq;
    const int np = S.num_points();
    const int q = I.q();
    long long count = 0;
    for (int x = 0; x < np; ++x)
        for (int y = x + 1; y < np; ++y) {
            std::vector<int> part_a{x, y};
            for (int c : common_tangent_circles(I, x, y)) part_a.push_back(np + c);
            std::vector<int> part_b;
            for (int d : I.circles_through(x, y)) part_b.push_back(np + d);
            if (static_cast<int>(part_a.size()) != q + 1 ||
                static_cast<int>(part_b.size()) != q + 1)
                throw std::logic_error("witness parts have wrong size");
            for (int u : part_a)
                for (int w : part_b)
                    if (!G.collinear(u, w))
                        throw std::logic_error("witness cross pair not collinear");
            for (size_t i = 0; i < part_a.size(); ++i)
                for (size_t j = i + 1; j < part_a.size(); ++j)
                    if (G.collinear(part_a[i], part_a[j]))
                        throw std::logic_error("witness part A not independent");
            for (size_t i = 0; i < part_b.size(); ++i)
                for (size_t j = i + 1; j < part_b.size(); ++j)
                    if (G.collinear(part_b[i], part_b[j]))
                        throw std::logic_error("witness part B not independent");
            ++count;
        }
    assert(count == binomial(np, 2));
    return count;
}

IncidenceStructure stars_design(const GQView& G) {
    std::vector<Block> blocks;
    for (int x = 0; x < G.num_points(); ++x) {
        Bitset st = G.star(x);
        Block blk;
        for (auto i = st.find_first(); i != Bitset::npos; i = st.find_next(i))
            blk.push_back(static_cast<int>(i));
        blocks.push_back(std::move(blk));
    }
    return IncidenceStructure(G.num_points(), std::move(blocks));
}

bool verify_star_polarity(const GQView& G) {
    for (int x = 0; x < G.num_points(); ++x) {
        Bitset sx = G.star(x);
        if (!sx.test(x)) return false;
        for (auto y = sx.find_first(); y != Bitset::npos; y = sx.find_next(y))
            if (!G.star(static_cast<int>(y)).test(x)) return false;
    }
    return true;
}

PipelineReport dembowski_pipeline(const IncidenceStructure& I_raw, bool check_iso,
                                  long long iso_budget) {
    PipelineReport rep;
    std::optional<InversivePlane> I;
    try {
        I = verify_inversive(I_raw);
    } catch (const std::exception& e) {
        rep.failures.push_back(std::string("verify_inversive: ") + e.what());
        return rep;
    }
    rep.valid_inversive = true;
    rep.q = I->q();
    rep.even_order = rep.q % 2 == 0;
    if (!rep.even_order) {
        rep.failures.push_back("odd order: the reconstruction hypotheses need even q");
        return rep;
    }

    std::optional<WFromI> W;
    try {
        W = build_w_from_inversive(*I);
    } catch (const std::exception& e) {
        rep.failures.push_back(std::string("build_w_from_inversive: ") + e.what());
        return rep;
    }
    rep.is_gq = true;

    try {
        rep.k_count = k_witness_sets(*I, *W);
        BipartiteCount bc = count_complete_bipartite(W->gq);
        rep.k_bound = bc.bound;
        rep.k_count_attains_bound = rep.k_count == bc.bound && bc.n == rep.k_count;
        rep.is_regular = bc.attains_bound;
    } catch (const std::exception& e) {
        rep.failures.push_back(std::string("k_witness_sets: ") + e.what());
        return rep;
    }

    try {
        IncidenceStructure D = stars_design(W->gq);
        rep.stars_params = verify_t_design(D, 2);
        long long q = rep.q;
        rep.stars_design_ok = rep.stars_params.is_symmetric &&
                              rep.stars_params.v == (q + 1) * (q * q + 1) &&
                              rep.stars_params.k == q * q + q + 1 &&
                              rep.stars_params.lambda == q + 1;
        DembowskiWagnerReport dw = check_dembowski_wagner(D);
        rep.dw_hypothesis = dw.hypothesis_holds;
    } catch (const std::exception& e) {
        rep.failures.push_back(std::string("stars_design: ") + e.what());
        return rep;
    }

    rep.polarity_ok = verify_star_polarity(W->gq);

    // round trip: the inversive points form a GQ ovoid of W, and the stars
    // of the circle nodes cut out the original circles
    try {
        std::vector<int> ovoid(W->num_inversive_points);
        for (int i = 0; i < W->num_inversive_points; ++i) ovoid[i] = i;
        bool is_ovoid = verify_gq_ovoid(W->gq, ovoid);
        std::vector<Block> circles;
        for (int u = W->num_inversive_points; u < W->gq.num_points(); ++u) {
            Bitset sec = W->gq.star(u);
            Block blk;
            for (auto i = sec.find_first(); i != Bitset::npos; i = sec.find_next(i))
                if (static_cast<int>(i) < W->num_inversive_points)
                    blk.push_back(static_cast<int>(i));
            circles.push_back(std::move(blk));
        }
        IncidenceStructure back(W->num_inversive_points, std::move(circles));
        rep.roundtrip_ok = is_ovoid && back == I->structure();
    } catch (const std::exception& e) {
        rep.failures.push_back(std::string("roundtrip: ") + e.what());
        return rep;
    }

    if (check_iso && (rep.q == 2 || rep.q == 4 || rep.q == 8)) {
        rep.iso_checked = true;
        try {
            Field F(rep.q);
            PG3 pg(F);
            GQView wq = build_wq(pg);
            IsomorphismResult iso =
                isomorphic(W->gq.structure(), wq.structure(), iso_budget);
            rep.iso_to_canonical_wq = iso.isomorphic;
            if (!iso.isomorphic)
                rep.failures.push_back("W from I is not isomorphic to the coordinate model");
        } catch (const Budget& e) {
            rep.iso_budget_exhausted = true;
            rep.iso_checked = false;
            rep.failures.push_back(std::string("iso: ") + e.what());
        }
    }
    return rep;
}

std::string format_report(const PipelineReport& rep) {
    std::ostringstream os;
    auto flag = [](bool x) { return x ? "true" : "false"; };
    os << "q: " << rep.q << "\n";
    os << "valid_inversive: " << flag(rep.valid_inversive) << "\n";
    os << "even_order: " << flag(rep.even_order) << "\n";
    os << "is_gq: " << flag(rep.is_gq) << "\n";
    os << "is_regular: " << flag(rep.is_regular) << "\n";
    os << "k_count: " << rep.k_count << "\n";
    os << "k_bound: " << rep.k_bound << "\n";
    os << "k_count_attains_bound: " << flag(rep.k_count_attains_bound) << "\n";
    os << "stars_design_ok: " << flag(rep.stars_design_ok) << "\n";
    os << "dw_hypothesis: " << flag(rep.dw_hypothesis) << "\n";
    os << "polarity_ok: " << flag(rep.polarity_ok) << "\n";
    os << "roundtrip_ok: " << flag(rep.roundtrip_ok) << "\n";
    os << "iso_checked: " << flag(rep.iso_checked) << "\n";
    os << "iso_to_canonical_wq: " << flag(rep.iso_to_canonical_wq) << "\n";
    os << "all_ok: " << flag(rep.all_ok()) << "\n";
    for (const auto& f : rep.failures) os << "failure: " << f << "\n";
    return os.str();
}

}  // namespace fingeo
