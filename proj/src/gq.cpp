#include "fingeo/gq.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <map>
#include <thread>

namespace fingeo {

namespace {

std::vector<int> to_indices(const Bitset& bs) {
    std::vector<int> out;
    for (auto i = bs.find_first(); i != Bitset::npos; i = bs.find_next(i))
        out.push_back(static_cast<int>(i));
    return out;
}

}  // namespace

Bitset GQView::star(int x) const {
    Bitset s = adj_[x];
    s.set(x);
    return s;
}

GQView verify_gq(IncidenceStructure S) {
    GQView G(std::move(S));
    const IncidenceStructure& st = G.S_;
    const int v = st.num_points();
    const int b = st.num_blocks();
    if (b == 0) throw AxiomFailure("no lines", -1, -1, 0);

    const int line_size = static_cast<int>(st.block(0).size());
    for (int j = 1; j < b; ++j)
        if (static_cast<int>(st.block(j).size()) != line_size)
            throw NotUniform("lines 0 and " + std::to_string(j) + " differ in size", 0, j);
    if (line_size < 2) throw AxiomFailure("lines must have >= 2 points", -1, 0, 0);
    G.s_ = line_size - 1;

    G.point_to_lines_.assign(v, {});
    for (int j = 0; j < b; ++j)
        for (int x : st.block(j)) G.point_to_lines_[x].push_back(j);
    const int degree = static_cast<int>(G.point_to_lines_[0].size());
    for (int x = 1; x < v; ++x)
        if (static_cast<int>(G.point_to_lines_[x].size()) != degree)
            throw AxiomFailure("point degrees differ", x, -1, 0);
    if (degree < 1) throw AxiomFailure("isolated point", 0, -1, 0);
    G.t_ = degree - 1;

    // partial linearity, building the collinearity graph along the way
    G.adj_.assign(v, Bitset(v));
    std::vector<std::vector<int>> joining_line(v);
    for (int x = 0; x < v; ++x) joining_line[x].assign(v, -1);
    for (int j = 0; j < b; ++j) {
        const Block& blk = st.block(j);
        for (size_t a = 0; a < blk.size(); ++a)
            for (size_t c = a + 1; c < blk.size(); ++c) {
                int x = blk[a], y = blk[c];
                if (joining_line[x][y] >= 0)
                    throw NotPartialLinear("points " + std::to_string(x) + "," +
                                               std::to_string(y) + " on two lines",
                                           x, y, joining_line[x][y], j);
                joining_line[x][y] = joining_line[y][x] = j;
                G.adj_[x].set(y);
                G.adj_[y].set(x);
            }
    }

    long long s = G.s_, t = G.t_;
    if (v != (s + 1) * (s * t + 1) || b != (t + 1) * (s * t + 1))
        throw AxiomFailure("point/line counts do not match a GQ of this order", -1, -1, 0);

    // the quadrangle axiom
    for (int x = 0; x < v; ++x) {
        for (int j = 0; j < b; ++j) {
            if (st.incident(x, j)) continue;
            int c = 0;
            for (int y : st.block(j))
                if (G.adj_[x].test(y)) ++c;
            if (c != 1)
                throw AxiomFailure("point " + std::to_string(x) + " sees " +
                                       std::to_string(c) + " points of line " +
                                       std::to_string(j),
                                   x, j, c);
        }
    }
    return G;
}

TraceSpan trace_span(const GQView& G, int x, int y) {
    if (x == y || G.collinear(x, y))
        throw CollinearPair("trace/span needs a non-collinear pair");
    TraceSpan ts;
    ts.pair = {x, y};
    Bitset tr = G.neighbours(x);
    tr &= G.neighbours(y);
    ts.trace = to_indices(tr);
    Bitset sp(G.num_points());
    sp.set();
    for (int z : ts.trace) sp &= G.neighbours(z);
    ts.span = to_indices(sp);
    return ts;
}

RegularityReport verify_regularity(const GQView& G) {
    RegularityReport R;
    const int v = G.num_points();
    long long s = G.s(), t = G.t();
    R.total_pairs = s * s * t * (s + 1) * (s * t + 1) / 2;
    long long seen = 0;
    for (int x = 0; x < v; ++x)
        for (int y = x + 1; y < v; ++y) {
            if (G.collinear(x, y)) continue;
            ++seen;
            if (trace_span(G, x, y).regular()) ++R.regular_pairs;
        }
    assert(seen == R.total_pairs);
    R.regular = R.regular_pairs == R.total_pairs;
    return R;
}

BipartiteCount count_complete_bipartite(const GQView& G) {
    BipartiteCount C;
    long long s = G.s(), t = G.t();
    RegularityReport R = verify_regularity(G);
    long long per_k = 2 * (t + 1) * t / 2;  // 2 * C(t+1,2) pairs per K_{t+1,t+1}
    if (R.regular_pairs % per_k != 0)
        throw NonIntegralCount("regular-pair count not divisible by 2*C(t+1,2)");
    C.n = R.regular_pairs / per_k;
    long long num = s * s * (s + 1) * (s * t + 1);
    C.attains_bound = C.n * 2 * (t + 1) == num;
    C.bound = num / (2 * (t + 1));
    return C;
}

LineSpanStarReport verify_line_span_star_meets(const GQView& G) {
    LineSpanStarReport rep;
    const int v = G.num_points();
    const IncidenceStructure& st = G.structure();

    rep.lines_meet_stars = true;
    for (int x = 0; x < v; ++x) {
        Bitset starx = G.star(x);
        for (int j = 0; j < st.num_blocks(); ++j)
            if (!starx.intersects(st.block_bits(j))) {
                rep.lines_meet_stars = false;
                rep.violations.push_back("line " + std::to_string(j) +
                                         " misses star of " + std::to_string(x));
            }
    }

    // collect distinct spans, keyed by point set, with their common trace
    std::map<std::vector<int>, std::vector<int>> spans;
    for (int x = 0; x < v; ++x)
        for (int y = x + 1; y < v; ++y) {
            if (G.collinear(x, y)) continue;
            TraceSpan ts = trace_span(G, x, y);
            if (ts.regular()) spans.emplace(ts.span, ts.trace);
        }
    rep.num_spans = static_cast<long long>(spans.size());

    rep.spans_meet_stars = true;
    rep.star_partition_ok = true;
    for (const auto& [span, trace] : spans) {
        Bitset span_bits(v), trace_bits(v);
        for (int z : span) span_bits.set(z);
        for (int z : trace) trace_bits.set(z);
        for (int x = 0; x < v; ++x)
            if (!G.star(x).intersects(span_bits)) {
                rep.spans_meet_stars = false;
                rep.violations.push_back("span misses star of " + std::to_string(x));
            }
        if (G.s() == G.t()) {
            // stars of span points, minus the trace, partition the trace's
            // complement into pieces of size s^2
            long long s2 = static_cast<long long>(G.s()) * G.s();
            Bitset covered(v);
            bool ok = true;
            for (int y : span) {
                Bitset piece = G.star(y);
                piece -= trace_bits;
                if (static_cast<long long>(piece.count()) != s2) ok = false;
                if (covered.intersects(piece)) ok = false;
                covered |= piece;
            }
            Bitset complement(v);
            complement.set();
            complement -= trace_bits;
            if (covered != complement) ok = false;
            if (!ok) {
                rep.star_partition_ok = false;
                rep.violations.push_back("star partition fails for a span");
            }
        }
    }
    if (G.s() != G.t()) rep.star_partition_ok = true;
    return rep;
}

bool verify_gq_ovoid(const GQView& G, const std::vector<int>& ovoid) {
    Bitset ob(G.num_points());
    for (int x : ovoid) ob.set(x);
    const IncidenceStructure& st = G.structure();
    for (int j = 0; j < st.num_blocks(); ++j) {
        Bitset meet = ob;
        meet &= st.block_bits(j);
        if (meet.count() != 1) return false;
    }
    // consequences
    long long s = G.s(), t = G.t();
    assert(static_cast<long long>(ob.count()) == s * t + 1);
    for (int x : ovoid)
        for (int y : ovoid)
            assert(x == y || !G.collinear(x, y));
    for (int x = 0; x < G.num_points(); ++x) {
        Bitset meet = G.star(x);
        meet &= ob;
        long long c = static_cast<long long>(meet.count());
        assert(c == (ob.test(x) ? 1 : t + 1));
    }
    return true;
}

namespace {

struct OvoidSearcher {
    const GQView& G;
    OvoidSearchMode mode;
    long long node_budget;

    long long count = 0;
    long long nodes = 0;
    bool budget_exhausted = false;
    bool done = false;
    std::optional<std::vector<int>> first;
    std::vector<std::vector<int>> all;

    // chosen: current partial ovoid; available: points neither chosen nor
    // collinear with a chosen point; met: lines already hit
    void rec(std::vector<int>& chosen, const Bitset& available, const Bitset& met) {
        if (done) return;
        if (node_budget >= 0 && nodes >= node_budget) {
            budget_exhausted = true;
            done = true;
            return;
        }
        ++nodes;
        const IncidenceStructure& st = G.structure();
        const int b = st.num_blocks();
        int branch_line = -1;
        for (int j = 0; j < b; ++j) {
            if (met.test(j)) continue;
            if (!st.block_bits(j).intersects(available)) return;  // dead line
            if (branch_line < 0) branch_line = j;
        }
        if (branch_line < 0) {
            ++count;
            std::vector<int> ovoid = chosen;
            std::sort(ovoid.begin(), ovoid.end());
            if (mode == OvoidSearchMode::find_one) {
                first = std::move(ovoid);
                done = true;
            } else if (mode == OvoidSearchMode::enumerate) {
                all.push_back(std::move(ovoid));
            }
            return;
        }
        Bitset cands = st.block_bits(branch_line);
        cands &= available;
        for (auto x = cands.find_first(); x != Bitset::npos; x = cands.find_next(x)) {
            int xi = static_cast<int>(x);
            chosen.push_back(xi);
            Bitset na = available;
            na -= G.neighbours(xi);
            na.reset(xi);
            Bitset nm = met;
            for (int l : G.lines_through(xi)) nm.set(l);
            rec(chosen, na, nm);
            chosen.pop_back();
            if (done) return;
        }
    }
};

}  // namespace

OvoidSearchResult search_gq_ovoids(const GQView& G, OvoidSearchMode mode, int jobs,
                                   long long node_budget) {
    OvoidSearchResult R;
    R.mode = mode;
    const IncidenceStructure& st = G.structure();
    const int v = G.num_points();

    Bitset available(v);
    available.set();
    Bitset met(st.num_blocks());

    if (jobs <= 1 || mode == OvoidSearchMode::find_one) {
        OvoidSearcher searcher{G, mode, node_budget};
        std::vector<int> chosen;
        searcher.rec(chosen, available, met);
        R.count = searcher.count;
        R.first = searcher.first;
        R.all = std::move(searcher.all);
        R.nodes = searcher.nodes;
        R.budget_exhausted = searcher.budget_exhausted;
        if (mode == OvoidSearchMode::enumerate && !R.all.empty()) {
            std::sort(R.all.begin(), R.all.end());
            R.first = R.all.front();
        }
        return R;
    }

    // Split the first branching level (line 0) across workers; merge in
    // branch order so the result is independent of the job count.
    const Block& line0 = st.block(0);
    std::vector<OvoidSearcher> searchers;
    searchers.reserve(line0.size());
    long long per_branch_budget =
        node_budget < 0 ? -1 : node_budget / static_cast<long long>(line0.size()) + 1;
    for (size_t i = 0; i < line0.size(); ++i)
        searchers.push_back(OvoidSearcher{G, mode, per_branch_budget});

    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= line0.size()) return;
            int x = line0[i];
            std::vector<int> chosen{x};
            Bitset na = available;
            na -= G.neighbours(x);
            na.reset(x);
            Bitset nm = met;
            for (int l : G.lines_through(x)) nm.set(l);
            searchers[i].rec(chosen, na, nm);
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    for (auto& s : searchers) {
        R.count += s.count;
        R.nodes += s.nodes;
        R.budget_exhausted = R.budget_exhausted || s.budget_exhausted;
        for (auto& o : s.all) R.all.push_back(std::move(o));
    }
    if (mode == OvoidSearchMode::enumerate && !R.all.empty()) {
        std::sort(R.all.begin(), R.all.end());
        R.first = R.all.front();
    }
    return R;
}

}  // namespace fingeo
