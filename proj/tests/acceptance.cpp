// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "fingeo/canon.hpp"
#include "fingeo/constructions.hpp"
#include "fingeo/incfile.hpp"
#include "fingeo/inversive.hpp"
#include "fingeo/reconstruct.hpp"

using namespace fingeo;

namespace {

struct Check {
    bool ok = true;
    std::vector<std::string> messages;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            messages.push_back(what);
        }
    }
};

// shared fixtures, built once
struct Corpus {
    std::map<int, Field> fields;  // PG3 keeps a pointer to its field
    std::map<int, PG3> pg;
    std::map<int, IncidenceStructure> egg;  // I(elliptic, q)
    IncidenceStructure suz8{1, {}};
    std::map<int, IncidenceStructure> hyper;  // hyperplane designs
    IncidenceStructure steiner{5, {}};        // 3-(5,3,1)

    Corpus() {
        for (int q : {2, 3, 4, 8}) fields.emplace(q, Field(q));
        for (int q : {2, 3, 4, 8}) pg.emplace(q, PG3(fields.at(q)));
        for (int q : {2, 3, 4, 8})
            egg.emplace(q, build_inversive_from_ovoid(pg.at(q), elliptic_quadric(pg.at(q))));
        suz8 = build_inversive_from_ovoid(pg.at(8), suzuki_tits(pg.at(8)));
        for (int q : {2, 3, 4}) hyper.emplace(q, pg_hyperplane_design(3, pg.at(q)));
        std::vector<Block> blocks;
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b)
                for (int c = b + 1; c < 5; ++c) blocks.push_back({a, b, c});
        steiner = IncidenceStructure(5, std::move(blocks));
    }
};

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

void check_design(Check& c, const IncidenceStructure& S, int t, long long v,
                  long long k, long long lambda, const std::string& name) {
    DesignParams P = verify_t_design(S, t);
    std::ostringstream tag;
    tag << name << ": ";
    c.require(P.v == v && P.k == k && P.lambda == lambda, tag.str() + "parameters");
    for (int s = 0; s <= t; ++s) {
        long long num = lambda * binom(static_cast<int>(v) - s, t - s);
        long long den = binom(static_cast<int>(k) - s, t - s);
        c.require(den != 0 && num % den == 0 && P.lambda_s[s] == num / den,
                  tag.str() + "lambda_" + std::to_string(s));
    }
    c.require(P.b == P.lambda_s[0], tag.str() + "b");
    c.require(P.r == P.lambda_s[1], tag.str() + "r");
    c.require(P.is_symmetric == (t >= 2 && k * (k - 1) == lambda * (v - 1)),
              tag.str() + "symmetry flag");
    if (v > k) c.require(P.fisher_ok && P.b >= P.v, tag.str() + "Fisher");
}

bool criterion1(const Corpus& C) {
    auto t0 = std::chrono::steady_clock::now();
    Check c;
    check_design(c, C.steiner, 3, 5, 3, 1, "3-(5,3,1)");
    for (int q : {2, 3, 4, 8})
        check_design(c, C.egg.at(q), 3, 1ll * q * q + 1, q + 1, 1,
                     "I(elliptic," + std::to_string(q) + ")");
    check_design(c, C.suz8, 3, 65, 9, 1, "I(suzuki_tits,8)");
    for (int q : {2, 3, 4})
        check_design(c, C.hyper.at(q), 2, 1ll * (q * q + 1) * (q + 1), 1ll * q * q + q + 1,
                     q + 1, "hyperplanes q=" + std::to_string(q));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.require(secs < 10.0, "runtime " + std::to_string(secs) + "s >= 10s");
    for (const auto& m : c.messages) std::cout << "    " << m << "\n";
    return c.ok;
}

bool criterion2(const Corpus& C) {
    auto t0 = std::chrono::steady_clock::now();
    Check c;
    for (int q : {2, 3, 4, 8}) {
        std::string tag = "W(" + std::to_string(q) + "): ";
        GQView G = build_wq(C.pg.at(q));
        c.require(G.s() == q && G.t() == q, tag + "order");
        RegularityReport R = verify_regularity(G);
        long long pairs = 1ll * q * q * q * (q + 1) * (q * q + 1) / 2;
        c.require(R.regular && R.regular_pairs == pairs && R.total_pairs == pairs,
                  tag + "regular pairs");
        BipartiteCount B = count_complete_bipartite(G);
        long long n = 1ll * q * q * (q * q + 1) / 2;
        c.require(B.n == n && B.bound == n && B.attains_bound, tag + "K count");
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.require(secs < 60.0, "runtime " + std::to_string(secs) + "s >= 60s");
    for (const auto& m : c.messages) std::cout << "    " << m << "\n";
    return c.ok;
}

bool criterion3(const Corpus& C) {
    auto t0 = std::chrono::steady_clock::now();
    Check c;
    for (int q : {2, 3, 4}) {
        std::string tag = "q=" + std::to_string(q) + ": ";
        GQView G = build_wq(C.pg.at(q));
        LineSpanStarReport rep = verify_line_span_star_meets(G);
        c.require(rep.all_ok() && rep.violations.empty(), tag + "line/span/star claims");
        IncidenceStructure S = stars_design(G);
        DesignParams P = verify_t_design(S, 2);
        c.require(P.v == (q + 1) * (q * q + 1) && P.k == q * q + q + 1 &&
                      P.lambda == q + 1 && P.is_symmetric,
                  tag + "stars design parameters");
        c.require(check_dembowski_wagner(S).hypothesis_holds, tag + "lines meet blocks");
        c.require(verify_star_polarity(G), tag + "star polarity");
        c.require(canonical_form(S) == canonical_form(C.hyper.at(q)),
                  tag + "canonical form vs hyperplane design");
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.require(secs < 60.0, "runtime " + std::to_string(secs) + "s >= 60s");
    for (const auto& m : c.messages) std::cout << "    " << m << "\n";
    return c.ok;
}

bool criterion4(const Corpus& C) {
    auto t0 = std::chrono::steady_clock::now();
    Check c;
    auto check_ovoid = [&](int q, const OvoidPG& O, const std::string& name) {
        OvoidReport rep = verify_pg_ovoid(C.pg.at(q), O.point_ids);
        c.require(rep.ok, name + ": verify");
        c.require(rep.tangent_planes == 1ll * q * q + 1, name + ": tangent planes");
        c.require(rep.secant_planes == 1ll * q * q * q + q, name + ": secant planes");
        c.require(rep.line_sections_ok, name + ": line sections");
        c.require(rep.unique_tangent_per_point, name + ": tangent plane per point");
    };
    for (int q : {2, 3, 4, 8})
        check_ovoid(q, elliptic_quadric(C.pg.at(q)), "elliptic q=" + std::to_string(q));
    check_ovoid(8, suzuki_tits(C.pg.at(8)), "suzuki_tits");
    for (int q : {2, 4, 8}) {
        std::string tag = "even q=" + std::to_string(q) + ": ";
        GQView W = build_wq(C.pg.at(q));
        c.require(verify_gq_ovoid(W, elliptic_quadric(C.pg.at(q)).point_ids),
                  tag + "ovoid of W(q)");
    }
    for (int q : {2, 4}) {
        GQView T = build_tangent_line_gq(C.pg.at(q), elliptic_quadric(C.pg.at(q)));
        c.require(isomorphic(T.structure(), build_wq(C.pg.at(q)).structure()).isomorphic,
                  "tangent-line GQ iso W(q), q=" + std::to_string(q));
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.require(secs < 120.0, "runtime " + std::to_string(secs) + "s >= 120s");
    for (const auto& m : c.messages) std::cout << "    " << m << "\n";
    return c.ok;
}

bool criterion5(const Corpus& C) {
    auto t0 = std::chrono::steady_clock::now();
    Check c;
    std::mt19937 rng(20260825);

    // the pencil-level lemmas on one plane; exhaustive or sampled
    auto run = [&](const IncidenceStructure& S, int q, bool exhaustive,
                   const std::string& name) {
        InversivePlane I = verify_inversive(S);
        std::vector<Pencil> ps = pencils(I);
        c.require(static_cast<long long>(ps.size()) == 1ll * (q + 1) * (q * q + 1),
                  name + ": pencil count");
        std::vector<std::vector<const Pencil*>> by_carrier(I.num_points());
        for (const Pencil& p : ps) by_carrier[p.carrier].push_back(&p);

        // (a) unique pencil through a tangent pair at its common point
        auto tangent_pair_once = [&](int x, int c1, int c2) {
            int hits = 0;
            for (const Pencil* p : by_carrier[x])
                if (std::binary_search(p->circles.begin(), p->circles.end(), c1) &&
                    std::binary_search(p->circles.begin(), p->circles.end(), c2))
                    ++hits;
            return hits == 1;
        };
        // (b) unique tangent circle in a pencil
        auto tangent_unique = [&](const Pencil& p, int circle) {
            int t = tangent_in_pencil(I, p, circle);
            Bitset m = I.structure().block_bits(t);
            m &= I.structure().block_bits(circle);
            if (m.count() != 1) return false;
            for (int other : p.circles) {
                if (other == t) continue;
                Bitset mo = I.structure().block_bits(other);
                mo &= I.structure().block_bits(circle);
                if (mo.count() == 1) return false;
            }
            return true;
        };
        // C_e size and partition
        auto ce_ok = [&](int x, int y) {
            std::vector<int> ce = common_tangent_circles(I, x, y);
            if (static_cast<int>(ce.size()) != q - 1) return false;
            Bitset covered(I.num_points());
            covered.set(x);
            covered.set(y);
            for (int ci : ce) {
                Bitset overlap = covered;
                overlap &= I.structure().block_bits(ci);
                if (overlap.any()) return false;
                covered |= I.structure().block_bits(ci);
            }
            return covered.all();
        };

        if (exhaustive) {
            bool a_ok = true, b_ok = true, ce_all = true;
            for (int x = 0; x < I.num_points(); ++x)
                for (int c1 = 0; c1 < I.num_circles(); ++c1) {
                    if (!I.structure().incident(x, c1)) continue;
                    for (int c2 = c1 + 1; c2 < I.num_circles(); ++c2) {
                        if (!I.structure().incident(x, c2)) continue;
                        Bitset m = I.structure().block_bits(c1);
                        m &= I.structure().block_bits(c2);
                        if (m.count() != 1) continue;
                        if (!tangent_pair_once(x, c1, c2)) a_ok = false;
                    }
                }
            for (const Pencil& p : ps)
                for (int circle = 0; circle < I.num_circles(); ++circle) {
                    if (I.structure().incident(p.carrier, circle)) continue;
                    if (!tangent_unique(p, circle)) b_ok = false;
                }
            long long total = 0;
            for (int x = 0; x < I.num_points(); ++x)
                for (int y = x + 1; y < I.num_points(); ++y) {
                    if (!ce_ok(x, y)) ce_all = false;
                    total += q - 1;
                }
            c.require(a_ok, name + ": unique pencil (exhaustive)");
            c.require(b_ok, name + ": unique tangent circle (exhaustive)");
            c.require(ce_all, name + ": C_e size/partition (exhaustive)");
            long long expect = 1ll * q * (q * q + 1) * (q * q - q) / 2;
            c.require(total == expect, name + ": double count sum |C_e|");
        } else {
            const int samples = 1000;
            bool a_ok = true, b_ok = true, ce_all = true;
            std::uniform_int_distribution<int> pt(0, I.num_points() - 1);
            std::uniform_int_distribution<int> circ(0, I.num_circles() - 1);
            for (int s = 0; s < samples; ++s) {
                // (a): random point, two random tangent circles through it
                int x = pt(rng);
                std::vector<int> through;
                for (int ci = 0; ci < I.num_circles(); ++ci)
                    if (I.structure().incident(x, ci)) through.push_back(ci);
                std::uniform_int_distribution<size_t> pick(0, through.size() - 1);
                for (;;) {
                    int c1 = through[pick(rng)], c2 = through[pick(rng)];
                    if (c1 == c2) continue;
                    Bitset m = I.structure().block_bits(c1);
                    m &= I.structure().block_bits(c2);
                    if (m.count() != 1) continue;
                    if (!tangent_pair_once(x, c1, c2)) a_ok = false;
                    break;
                }
                // (b): random pencil, random circle off its carrier
                const Pencil& p = ps[std::uniform_int_distribution<size_t>(
                    0, ps.size() - 1)(rng)];
                for (;;) {
                    int circle = circ(rng);
                    if (I.structure().incident(p.carrier, circle)) continue;
                    if (!tangent_unique(p, circle)) b_ok = false;
                    break;
                }
                // C_e on a random pair
                int y = pt(rng);
                if (y == x) y = (y + 1) % I.num_points();
                if (!ce_ok(x, y)) ce_all = false;
            }
            c.require(a_ok, name + ": unique pencil (sampled)");
            c.require(b_ok, name + ": unique tangent circle (sampled)");
            c.require(ce_all, name + ": C_e size/partition (sampled)");
        }
    };

    run(C.egg.at(2), 2, true, "I(elliptic,2)");
    run(C.egg.at(4), 4, true, "I(elliptic,4)");
    run(C.suz8, 8, false, "I(suzuki_tits,8)");
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.require(secs < 120.0, "runtime " + std::to_string(secs) + "s >= 120s");
    for (const auto& m : c.messages) std::cout << "    " << m << "\n";
    return c.ok;
}

bool criterion6(const Corpus& C) {
    auto t0 = std::chrono::steady_clock::now();
    Check c;
    for (int q : {2, 4}) {
        PipelineReport rep = dembowski_pipeline(C.egg.at(q));
        std::string tag = "q=" + std::to_string(q) + ": ";
        c.require(rep.all_ok() && rep.iso_checked && rep.iso_to_canonical_wq,
                  tag + "all flags true");
    }
    PipelineReport odd = dembowski_pipeline(C.egg.at(3));
    c.require(odd.valid_inversive && !odd.even_order && !odd.all_ok(),
              "q=3 gates on odd order");

    // round trip at q=2, checked via canonical forms
    InversivePlane I2 = verify_inversive(C.egg.at(2));
    WFromI W = build_w_from_inversive(I2);
    std::vector<Block> blocks;
    for (int u = W.num_inversive_points; u < W.gq.num_points(); ++u) {
        Block b;
        for (int x = 0; x < W.num_inversive_points; ++x)
            if (W.gq.collinear(u, x)) b.push_back(x);
        blocks.push_back(std::move(b));
    }
    IncidenceStructure back(W.num_inversive_points, std::move(blocks));
    c.require(canonical_form(back) == canonical_form(C.egg.at(2)),
              "q=2 round trip canonical form");

    // q=8 under budget: substance must hold, the iso check may give up
    PipelineReport r8 = dembowski_pipeline(C.egg.at(8), true, 2000);
    c.require(r8.all_ok(), "q=8 pipeline (budgeted) substance");

    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.require(secs < 600.0, "runtime " + std::to_string(secs) + "s >= 600s");
    for (const auto& m : c.messages) std::cout << "    " << m << "\n";
    return c.ok;
}

bool criterion7(const Corpus& C) {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    GQView W3 = build_wq(C.pg.at(3));
    OvoidSearchResult r3 = search_gq_ovoids(W3, OvoidSearchMode::count_all);
    double s3 = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.require(r3.count == 0 && !r3.budget_exhausted, "W(3) has no ovoid");
    c.require(s3 < 60.0, "W(3) search took " + std::to_string(s3) + "s >= 60s");

    t0 = std::chrono::steady_clock::now();
    GQView W2 = build_wq(C.pg.at(2));
    OvoidSearchResult r2 = search_gq_ovoids(W2, OvoidSearchMode::enumerate);
    double s2 = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    // brute-force oracle over all 5-subsets; its count is authoritative
    long long brute = 0;
    std::vector<int> sub;
    std::function<void(int)> rec = [&](int start) {
        if (sub.size() == 5) {
            Bitset ob(15);
            for (int x : sub) ob.set(x);
            for (int j = 0; j < W2.num_lines(); ++j) {
                Bitset m = W2.structure().block_bits(j);
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
    c.require(r2.count == brute, "W(2) search vs brute-force oracle");
    c.require(s2 < 5.0, "W(2) search took " + std::to_string(s2) + "s >= 5s");

    OvoidSearchResult j1 = search_gq_ovoids(W2, OvoidSearchMode::enumerate, 1);
    OvoidSearchResult j8 = search_gq_ovoids(W2, OvoidSearchMode::enumerate, 8);
    c.require(j1.all == j8.all && j1.count == j8.count, "jobs 1 vs 8 identical");
    for (const auto& m : c.messages) std::cout << "    " << m << "\n";
    return c.ok;
}

bool criterion8(const Corpus& C) {
    Check c;
    std::vector<const IncidenceStructure*> corpus{&C.steiner, &C.suz8};
    for (const auto& [q, S] : C.egg) corpus.push_back(&S);
    for (const auto& [q, S] : C.hyper) corpus.push_back(&S);
    for (const IncidenceStructure* S : corpus) {
        IncFile f = parse_inc(write_inc(*S));
        c.require(f.structure == *S, "parse/write round trip");
        c.require(write_inc(*S) == write_inc(*S), "write determinism");
    }
    // golden reports byte-identical across two consecutive runs
    for (int q : {2, 3}) {
        std::string a = format_report(dembowski_pipeline(C.egg.at(q)));
        std::string b = format_report(dembowski_pipeline(C.egg.at(q)));
        c.require(a == b, "report determinism q=" + std::to_string(q));
    }
    for (const auto& m : c.messages) std::cout << "    " << m << "\n";
    return c.ok;
}

}  // namespace

int main() {
    Corpus C;
    struct Row {
        const char* name;
        std::function<bool(const Corpus&)> fn;
    };
    const Row rows[] = {
        {"1 parameter identities", criterion1},
        {"2 W(q) structure", criterion2},
        {"3 Benson machinery", criterion3},
        {"4 ovoid facts", criterion4},
        {"5 inversive lemmas", criterion5},
        {"6 reconstruction pipeline", criterion6},
        {"7 ovoid search", criterion7},
        {"8 format determinism", criterion8},
    };
    int failures = 0;
    for (const Row& row : rows) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = row.fn(C);
        } catch (const std::exception& e) {
            std::cout << "    exception: " << e.what() << "\n";
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(1);
        line << (ok ? "PASS" : "FAIL") << " criterion " << row.name << " (" << secs
             << "s)";
        std::cout << line.str() << std::endl;
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
