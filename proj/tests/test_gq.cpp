#include <doctest.h>

#include <algorithm>
#include <functional>

#include "fingeo/constructions.hpp"
#include "fingeo/gq.hpp"
#include "fingeo/projective.hpp"

using namespace fingeo;

namespace {

GQView wq(int q) {
    Field F(q);
    PG3 pg(F);
    return build_wq(pg);
}

// points of a 3x3 array, lines = rows and columns: a GQ of order (2,1)
IncidenceStructure grid3x3() {
    std::vector<Block> lines;
    for (int r = 0; r < 3; ++r) lines.push_back({3 * r, 3 * r + 1, 3 * r + 2});
    for (int c = 0; c < 3; ++c) lines.push_back({c, c + 3, c + 6});
    return IncidenceStructure(9, std::move(lines));
}

IncidenceStructure fano() {
    return IncidenceStructure(7, {{0, 1, 2},
                                  {0, 3, 4},
                                  {0, 5, 6},
                                  {1, 3, 5},
                                  {1, 4, 6},
                                  {2, 3, 6},
                                  {2, 4, 5}});
}

// Generic induced-K_{t+1,t+1} counter over all 2(t+1)-subsets; usable as an
// independent oracle for s,t <= 2.
long long count_k_subgraphs_brute(const GQView& G) {
    const int n = G.num_points();
    const int half = G.t() + 1;
    std::vector<int> sub;
    long long count = 0;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(sub.size()) == 2 * half) {
            // try to 2-colour the induced subgraph into two independent
            // parts with complete adjacency across
            for (unsigned mask = 1; mask < (1u << (2 * half - 1)); ++mask) {
                if (__builtin_popcount(mask) != half) continue;
                bool ok = true;
                for (size_t i = 0; i < sub.size() && ok; ++i)
                    for (size_t j = i + 1; j < sub.size() && ok; ++j) {
                        bool same = ((mask >> i) & 1) == ((mask >> j) & 1);
                        bool adj = G.collinear(sub[i], sub[j]);
                        if (same == adj) ok = false;
                    }
                if (ok) {
                    ++count;
                    break;
                }
            }
            return;
        }
        for (int x = start; x < n; ++x) {
            sub.push_back(x);
            rec(x + 1);
            sub.pop_back();
        }
    };
    rec(0);
    return count;
}

}  // namespace

TEST_CASE("W(2) is a GQ of order (2,2)") {
    GQView G = wq(2);
    CHECK(G.s() == 2);
    CHECK(G.t() == 2);
    CHECK(G.num_points() == 15);
    CHECK(G.num_lines() == 15);
}

TEST_CASE("the 3x3 grid is a GQ of order (2,1)") {
    GQView G = verify_gq(grid3x3());
    CHECK(G.s() == 2);
    CHECK(G.t() == 1);
    CHECK(G.num_points() == 9);
}

TEST_CASE("the Fano plane violates the GQ axiom") {
    CHECK_THROWS_AS(verify_gq(fano()), AxiomFailure);
}

TEST_CASE("two lines through a pair is caught") {
    IncidenceStructure S(6, {{0, 1, 2}, {0, 1, 3}, {2, 4, 5}, {3, 4, 5}});
    CHECK_THROWS_AS(verify_gq(S), NotPartialLinear);
}

TEST_CASE("star sizes are s(t+1)+1") {
    for (int q : {2, 3}) {
        GQView G = wq(q);
        for (int x = 0; x < G.num_points(); ++x)
            CHECK(static_cast<int>(G.star(x).count()) == q * (q + 1) + 1);
    }
}

TEST_CASE("trace and span in W(2)") {
    GQView G = wq(2);
    for (int x = 0; x < G.num_points(); ++x)
        for (int y = x + 1; y < G.num_points(); ++y) {
            if (G.collinear(x, y)) {
                CHECK_THROWS_AS(trace_span(G, x, y), CollinearPair);
                continue;
            }
            TraceSpan ts = trace_span(G, x, y);
            CHECK(ts.trace.size() == 3);
            CHECK(ts.span.size() == 3);
            // trace points mutually non-collinear
            for (size_t i = 0; i < ts.trace.size(); ++i)
                for (size_t j = i + 1; j < ts.trace.size(); ++j)
                    CHECK_FALSE(G.collinear(ts.trace[i], ts.trace[j]));
        }
}

TEST_CASE("trace and span in the grid") {
    GQView G = verify_gq(grid3x3());
    // points 0 and 4 are in distinct rows and columns
    TraceSpan ts = trace_span(G, 0, 4);
    CHECK(ts.trace.size() == 2);
    CHECK(ts.span.size() == 2);
}

TEST_CASE("regularity of W(q) with the paper's pair count") {
    struct Row {
        int q;
        long long pairs;
    };
    for (Row row : {Row{2, 60}, Row{3, 540}, Row{4, 2720}}) {
        CAPTURE(row.q);
        GQView G = wq(row.q);
        RegularityReport R = verify_regularity(G);
        CHECK(R.regular);
        CHECK(R.total_pairs == row.pairs);
        CHECK(R.regular_pairs == row.pairs);
    }
}

TEST_CASE("the grid is regular") {
    RegularityReport R = verify_regularity(verify_gq(grid3x3()));
    CHECK(R.regular);
    CHECK(R.total_pairs == 18);
}

TEST_CASE("K_{t+1,t+1} counts attain the regularity bound for W(q)") {
    struct Row {
        int q;
        long long n;
    };
    for (Row row : {Row{2, 10}, Row{3, 45}, Row{4, 136}}) {
        CAPTURE(row.q);
        BipartiteCount C = count_complete_bipartite(wq(row.q));
        CHECK(C.n == row.n);
        CHECK(C.bound == row.n);
        CHECK(C.attains_bound);
    }
}

TEST_CASE("bipartite count agrees with the generic subgraph oracle (small)") {
    GQView grid = verify_gq(grid3x3());
    BipartiteCount Cg = count_complete_bipartite(grid);
    CHECK(Cg.n == count_k_subgraphs_brute(grid));

    GQView G = wq(2);
    BipartiteCount C = count_complete_bipartite(G);
    CHECK(C.n == count_k_subgraphs_brute(G));
}

TEST_CASE("spans in a regular GQ are the span of any two of their points") {
    GQView G = wq(3);
    for (int x = 0; x < G.num_points(); x += 5)
        for (int y = x + 1; y < G.num_points(); ++y) {
            if (G.collinear(x, y)) continue;
            TraceSpan ts = trace_span(G, x, y);
            for (size_t i = 0; i < ts.span.size(); ++i)
                for (size_t j = i + 1; j < ts.span.size(); ++j) {
                    TraceSpan again = trace_span(G, ts.span[i], ts.span[j]);
                    CHECK(again.span == ts.span);
                }
        }
}

TEST_CASE("line/span/star intersection claims for W(2) and W(3)") {
    for (int q : {2, 3}) {
        CAPTURE(q);
        LineSpanStarReport rep = verify_line_span_star_meets(wq(q));
        CHECK(rep.lines_meet_stars);
        CHECK(rep.spans_meet_stars);
        CHECK(rep.star_partition_ok);
        CHECK(rep.violations.empty());
    }
}

TEST_CASE("GQ ovoid verification in W(2)") {
    Field F(2);
    PG3 pg(F);
    GQView G = build_wq(pg);
    OvoidPG O = elliptic_quadric(pg);
    CHECK(verify_gq_ovoid(G, O.point_ids));
    CHECK(O.point_ids.size() == 5);
    // a line of the GQ is not an ovoid
    CHECK_FALSE(verify_gq_ovoid(G, G.structure().block(0)));
}

TEST_CASE("ovoid search: W(2) has 6 ovoids, matching brute force") {
    GQView G = wq(2);
    OvoidSearchResult R = search_gq_ovoids(G, OvoidSearchMode::count_all);
    // brute-force oracle over all C(15,5) = 3003 candidate 5-subsets
    long long brute = 0;
    std::vector<int> sub;
    std::function<void(int)> rec = [&](int start) {
        if (sub.size() == 5) {
            Bitset ob(15);
            for (int x : sub) ob.set(x);
            for (int j = 0; j < G.num_lines(); ++j) {
                Bitset m = G.structure().block_bits(j);
                m &= ob;
                if (m.count() != 1) return;
            }
            ++brute;
            return;
        }
        for (int x = start; x < 15; ++x) {
            sub.push_back(x);
            rec(x + 1);
            sub.pop_back();
        }
    };
    rec(0);
    CHECK(brute == 6);
    CHECK(R.count == brute);
}

TEST_CASE("ovoid search modes and job independence") {
    GQView G = wq(2);
    OvoidSearchResult all1 = search_gq_ovoids(G, OvoidSearchMode::enumerate, 1);
    OvoidSearchResult all8 = search_gq_ovoids(G, OvoidSearchMode::enumerate, 8);
    CHECK(all1.all == all8.all);
    CHECK(all1.count == 6);
    CHECK(std::is_sorted(all1.all.begin(), all1.all.end()));

    OvoidSearchResult one = search_gq_ovoids(G, OvoidSearchMode::find_one);
    REQUIRE(one.first.has_value());
    CHECK(*one.first == all1.all.front());
    CHECK(verify_gq_ovoid(G, *one.first));
}

TEST_CASE("W(3) has no ovoids") {
    OvoidSearchResult R = search_gq_ovoids(wq(3), OvoidSearchMode::count_all);
    CHECK(R.count == 0);
}

TEST_CASE("grid ovoids are the 6 transversals") {
    OvoidSearchResult R =
        search_gq_ovoids(verify_gq(grid3x3()), OvoidSearchMode::count_all);
    CHECK(R.count == 6);  // permanent of the 3x3 all-ones matrix
}

TEST_CASE("search node budget reports exhaustion") {
    OvoidSearchResult R = search_gq_ovoids(wq(3), OvoidSearchMode::count_all, 1, 2);
    CHECK(R.budget_exhausted);
}
