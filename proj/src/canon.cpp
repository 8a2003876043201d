#include "fingeo/canon.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <sstream>

namespace fingeo {

namespace {

// Individualize-and-refine over the Levi graph of the structure. Vertices
// 0..v-1 are points, v..v+b-1 blocks, with the two sides coloured apart.
class Canonizer {
public:
    Canonizer(const IncidenceStructure& S, long long node_budget)
        : v_(S.num_points()), b_(S.num_blocks()), n_(v_ + b_), budget_(node_budget) {
        adj_.resize(n_);
        for (int j = 0; j < b_; ++j)
            for (int x : S.block(j)) {
                adj_[x].push_back(v_ + j);
                adj_[v_ + j].push_back(x);
            }
    }

    CanonicalForm run() {
        std::vector<int> colors(n_);
        for (int i = 0; i < n_; ++i) colors[i] = i < v_ ? 0 : 1;
        refine(colors);
        std::vector<int> base;
        search(colors, base);
        assert(!best_labels_.empty());
        CanonicalForm cf;
        cf.certificate = std::move(best_cert_);
        cf.point_labels.assign(best_labels_.begin(), best_labels_.begin() + v_);
        cf.block_labels.resize(b_);
        for (int j = 0; j < b_; ++j) cf.block_labels[j] = best_labels_[v_ + j] - v_;
        return cf;
    }

private:
    // 1-WL refinement: split classes by the multiset of neighbour colours
    // until stable. Colour ids are normalized ranks of the signatures, so
    // the result is relabeling-invariant.
    void refine(std::vector<int>& colors) const {
        while (true) {
            std::vector<std::pair<std::vector<int>, int>> sigs(n_);
            for (int u = 0; u < n_; ++u) {
                std::vector<int> sig;
                sig.reserve(adj_[u].size() + 1);
                sig.push_back(colors[u]);
                for (int w : adj_[u]) sig.push_back(colors[w]);
                std::sort(sig.begin() + 1, sig.end());
                sigs[u] = {std::move(sig), u};
            }
            std::vector<std::pair<std::vector<int>, int>> sorted = sigs;
            std::sort(sorted.begin(), sorted.end());
            std::map<std::vector<int>, int> rank;
            int next = 0;
            for (const auto& [sig, u] : sorted)
                if (rank.emplace(sig, next).second) ++next;
            bool changed = false;
            for (int u = 0; u < n_; ++u) {
                int c = rank[sigs[u].first];
                if (c != colors[u]) changed = true;
                colors[u] = c;
            }
            if (!changed) return;
        }
    }

    // cells of a coloring, keyed by color
    static std::map<int, std::vector<int>> cells(const std::vector<int>& colors) {
        std::map<int, std::vector<int>> out;
        for (int u = 0; u < static_cast<int>(colors.size()); ++u)
            out[colors[u]].push_back(u);
        return out;
    }

    std::vector<uint8_t> encode(const std::vector<int>& labels) const {
        // labels: vertex -> canonical rank. Points and blocks keep their
        // sides; re-rank each side separately.
        std::vector<int> prank(v_), brank(b_);
        {
            std::vector<std::pair<int, int>> ps, bs;
            for (int i = 0; i < v_; ++i) ps.push_back({labels[i], i});
            for (int j = 0; j < b_; ++j) bs.push_back({labels[v_ + j], j});
            std::sort(ps.begin(), ps.end());
            std::sort(bs.begin(), bs.end());
            for (int r = 0; r < v_; ++r) prank[ps[r].second] = r;
            for (int r = 0; r < b_; ++r) brank[bs[r].second] = r;
        }
        std::vector<std::vector<int>> blocks(b_);
        for (int j = 0; j < b_; ++j) {
            for (int w : adj_[v_ + j]) blocks[brank[j]].push_back(prank[w]);
            std::sort(blocks[brank[j]].begin(), blocks[brank[j]].end());
        }
        std::vector<uint8_t> out;
        auto put32 = [&out](int x) {
            for (int s = 24; s >= 0; s -= 8) out.push_back((x >> s) & 0xff);
        };
        put32(v_);
        put32(b_);
        for (const auto& blk : blocks)
            for (int x : blk) put32(x);
        return out;
    }

    void search(const std::vector<int>& colors, std::vector<int>& base) {
        if (budget_ >= 0 && ++nodes_ > budget_)
            throw Budget("canonical form node budget exhausted");
        auto cl = cells(colors);
        // target: smallest non-singleton cell, lowest colour
        const std::vector<int>* target = nullptr;
        for (const auto& [c, members] : cl)
            if (members.size() > 1 && (!target || members.size() < target->size()))
                target = &members;
        if (!target) {
            // discrete: colors are a permutation
            std::vector<int> labels = colors;
            std::vector<uint8_t> cert = encode(labels);
            if (best_cert_.empty() || cert < best_cert_) {
                best_cert_ = std::move(cert);
                best_labels_ = labels;
            } else if (cert == best_cert_) {
                // labels and best_labels_ induce an automorphism
                std::vector<int> by_rank(n_), aut(n_);
                for (int u = 0; u < n_; ++u) by_rank[best_labels_[u]] = u;
                for (int u = 0; u < n_; ++u) aut[u] = by_rank[labels[u]];
                bool identity = true;
                for (int u = 0; u < n_; ++u)
                    if (aut[u] != u) identity = false;
                if (!identity) automorphisms_.push_back(std::move(aut));
            }
            return;
        }

        std::vector<int> candidates = *target;  // ascending vertex order
        std::vector<char> done(n_, 0);
        for (int u : candidates) {
            if (in_explored_orbit(u, candidates, done, base)) continue;
            done[u] = 1;
            std::vector<int> next = colors;
            // split {u} off its class, ordered first
            for (int w = 0; w < n_; ++w) next[w] = 2 * next[w] + 1;
            next[u] -= 1;
            refine(next);
            base.push_back(u);
            search(next, base);
            base.pop_back();
        }
    }

    // True if some already-explored candidate reaches u under the group
    // generated by the discovered automorphisms that fix the current base
    // pointwise.
    bool in_explored_orbit(int u, const std::vector<int>& candidates,
                           const std::vector<char>& done,
                           const std::vector<int>& base) {
        if (automorphisms_.empty()) return false;
        std::vector<const std::vector<int>*> gens;
        for (const auto& aut : automorphisms_) {
            bool fixes = true;
            for (int x : base)
                if (aut[x] != x) {
                    fixes = false;
                    break;
                }
            if (fixes) gens.push_back(&aut);
        }
        if (gens.empty()) return false;
        // orbit of u
        std::vector<int> orbit{u};
        std::vector<char> seen(n_, 0);
        seen[u] = 1;
        for (size_t i = 0; i < orbit.size(); ++i) {
            for (const auto* g : gens) {
                int w = (*g)[orbit[i]];
                if (!seen[w]) {
                    seen[w] = 1;
                    orbit.push_back(w);
                }
            }
        }
        for (int c : candidates)
            if (done[c] && seen[c]) return true;
        return false;
    }

    int v_, b_, n_;
    long long budget_;
    long long nodes_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<uint8_t> best_cert_;
    std::vector<int> best_labels_;
    std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

std::string CanonicalForm::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(certificate.size() * 2);
    for (uint8_t byte : certificate) {
        out.push_back(digits[byte >> 4]);
        out.push_back(digits[byte & 0xf]);
    }
    return out;
}

CanonicalForm canonical_form(const IncidenceStructure& S, long long node_budget) {
    return Canonizer(S, node_budget).run();
}

namespace {

// invariants cheap enough to always compute
bool prechecks_match(const IncidenceStructure& A, const IncidenceStructure& B) {
    if (A.num_points() != B.num_points() || A.num_blocks() != B.num_blocks())
        return false;
    auto ksizes = [](const IncidenceStructure& S) {
        std::vector<int> ks;
        for (const auto& blk : S.blocks()) ks.push_back(static_cast<int>(blk.size()));
        std::sort(ks.begin(), ks.end());
        return ks;
    };
    if (ksizes(A) != ksizes(B)) return false;
    auto degrees = [](const IncidenceStructure& S) {
        std::vector<int> deg(S.num_points(), 0);
        for (const auto& blk : S.blocks())
            for (int x : blk) ++deg[x];
        std::sort(deg.begin(), deg.end());
        return deg;
    };
    if (degrees(A) != degrees(B)) return false;
    auto pair_intersections = [](const IncidenceStructure& S) {
        std::vector<int> meets;
        for (int i = 0; i < S.num_blocks(); ++i)
            for (int j = i + 1; j < S.num_blocks(); ++j) {
                Bitset m = S.block_bits(i);
                m &= S.block_bits(j);
                meets.push_back(static_cast<int>(m.count()));
            }
        std::sort(meets.begin(), meets.end());
        return meets;
    };
    return pair_intersections(A) == pair_intersections(B);
}

// Refinement trace: 1-WL on the Levi graph with up to two blocks
// individualized, hashing each round's sorted signature multiset. Rank ids
// are positions in the sorted signature order, so two structures produce
// equal traces whenever some isomorphism maps the individualized set of one
// onto that of the other; unequal traces certify non-isomorphism. This sees
// strictly more than one-round counting invariants (which fail to separate,
// for example, the two order-8 inversive planes).
class TraceRefiner {
public:
    explicit TraceRefiner(const IncidenceStructure& S)
        : v_(S.num_points()), n_(v_ + S.num_blocks()) {
        adj_.resize(n_);
        for (int j = 0; j < S.num_blocks(); ++j)
            for (int x : S.block(j)) {
                adj_[x].push_back(v_ + j);
                adj_[v_ + j].push_back(x);
            }
    }

    /// i, j: block indices to individualize (the same colour for both, so
    /// the trace depends only on the set {i, j}); -1 to skip.
    uint64_t trace(int i, int j) const {
        std::vector<int> colors(n_);
        for (int u = 0; u < n_; ++u) colors[u] = u < v_ ? 0 : 1;
        if (i >= 0) colors[v_ + i] = 2;
        if (j >= 0) colors[v_ + j] = 2;
        uint64_t h = 1469598103934665603ull;
        auto mix = [&h](uint64_t x) {
            h ^= x;
            h *= 1099511628211ull;
        };
        while (true) {
            std::vector<std::pair<std::vector<int>, int>> sigs(n_);
            for (int u = 0; u < n_; ++u) {
                std::vector<int> sig;
                sig.reserve(adj_[u].size() + 1);
                sig.push_back(colors[u]);
                for (int w : adj_[u]) sig.push_back(colors[w]);
                std::sort(sig.begin() + 1, sig.end());
                sigs[u] = {std::move(sig), u};
            }
            std::vector<std::pair<std::vector<int>, int>> sorted = sigs;
            std::sort(sorted.begin(), sorted.end());
            for (const auto& [sig, u] : sorted) {
                mix(sig.size());
                for (int x : sig) mix(static_cast<uint64_t>(x));
            }
            std::map<std::vector<int>, int> rank;
            int next = 0;
            for (const auto& [sig, u] : sorted)
                if (rank.emplace(sig, next).second) ++next;
            bool changed = false;
            for (int u = 0; u < n_; ++u) {
                int c = rank[sigs[u].first];
                if (c != colors[u]) changed = true;
                colors[u] = c;
            }
            if (!changed) return h;
        }
    }

private:
    int v_, n_;
    std::vector<std::vector<int>> adj_;
};

// Trace-based precheck: compare the plain trace, the multiset of
// single-block traces, and the pair traces anchored at block 0 of A (an
// isomorphism would have to send block 0 somewhere, so some block i of B
// must reproduce A's whole anchored multiset).
bool refinement_precheck(const IncidenceStructure& A, const IncidenceStructure& B) {
    TraceRefiner ra(A), rb(B);
    if (ra.trace(-1, -1) != rb.trace(-1, -1)) return false;
    const int b = A.num_blocks();
    if (b == 0) return true;
    std::vector<uint64_t> single_b(b);
    uint64_t anchor_trace;
    {
        std::vector<uint64_t> single_a(b);
        for (int i = 0; i < b; ++i) {
            single_a[i] = ra.trace(i, -1);
            single_b[i] = rb.trace(i, -1);
        }
        std::vector<uint64_t> sa = single_a, sb = single_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
        if (b == 1) return true;
        anchor_trace = single_a[0];
    }
    std::map<uint64_t, int> ma;
    for (int j = 1; j < b; ++j) ++ma[ra.trace(0, j)];
    for (int i = 0; i < b; ++i) {
        if (single_b[i] != anchor_trace) continue;
        std::map<uint64_t, int> mb;
        bool ok = true;
        for (int j = 0; j < b && ok; ++j) {
            if (j == i) continue;
            uint64_t t = rb.trace(i, j);
            auto it = ma.find(t);
            if (it == ma.end() || ++mb[t] > it->second) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace

IsomorphismResult isomorphic(const IncidenceStructure& A, const IncidenceStructure& B,
                             long long node_budget) {
    IsomorphismResult R;
    if (!prechecks_match(A, B)) return R;
    if (!refinement_precheck(A, B)) return R;
    CanonicalForm ca = canonical_form(A, node_budget);
    CanonicalForm cb = canonical_form(B, node_budget);
    if (!(ca == cb)) return R;

    std::vector<int> b_point_by_rank(B.num_points()), b_block_by_rank(B.num_blocks());
    for (int i = 0; i < B.num_points(); ++i) b_point_by_rank[cb.point_labels[i]] = i;
    for (int j = 0; j < B.num_blocks(); ++j) b_block_by_rank[cb.block_labels[j]] = j;
    R.point_map.resize(A.num_points());
    R.block_map.resize(A.num_blocks());
    for (int i = 0; i < A.num_points(); ++i)
        R.point_map[i] = b_point_by_rank[ca.point_labels[i]];
    for (int j = 0; j < A.num_blocks(); ++j)
        R.block_map[j] = b_block_by_rank[ca.block_labels[j]];

    // self-certifying: re-verify the mapping by direct incidence check
    for (int j = 0; j < A.num_blocks(); ++j) {
        Block mapped;
        for (int x : A.block(j)) mapped.push_back(R.point_map[x]);
        std::sort(mapped.begin(), mapped.end());
        if (mapped != B.block(R.block_map[j]))
            throw std::logic_error("canonical labeling produced an invalid mapping");
    }
    R.isomorphic = true;
    return R;
}

}  // namespace fingeo
