#include "fingeo/incidence.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace fingeo {

IncidenceStructure::IncidenceStructure(int num_points, std::vector<Block> blocks,
                                       std::vector<std::string> point_labels,
                                       std::vector<std::string> block_labels)
    : v_(num_points),
      blocks_(std::move(blocks)),
      point_labels_(std::move(point_labels)),
      block_labels_(std::move(block_labels)) {
    if (v_ < 1) throw std::invalid_argument("incidence structure needs >= 1 point");
    for (auto& blk : blocks_) {
        std::sort(blk.begin(), blk.end());
        if (std::adjacent_find(blk.begin(), blk.end()) != blk.end())
            throw std::invalid_argument("duplicate point in block");
        for (int x : blk)
            if (x < 0 || x >= v_)
                throw std::out_of_range("block point index out of range");
    }
    std::sort(blocks_.begin(), blocks_.end());
    if (std::adjacent_find(blocks_.begin(), blocks_.end()) != blocks_.end())
        throw std::invalid_argument("repeated block");
    bits_.reserve(blocks_.size());
    for (const auto& blk : blocks_) {
        Bitset bs(v_);
        for (int x : blk) bs.set(x);
        bits_.push_back(std::move(bs));
    }
}

std::vector<int> IncidenceStructure::blocks_through(int point) const {
    std::vector<int> out;
    for (int j = 0; j < num_blocks(); ++j)
        if (bits_[j].test(point)) out.push_back(j);
    return out;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        long long num = n - k + i;
        if (r > std::numeric_limits<long long>::max() / num)
            throw std::overflow_error("binomial overflow");
        r = r * num / i;
    }
    return r;
}

namespace {

// Visit all t-subsets of 0..v-1 in lexicographic order until f returns false.
template <typename F>
void for_each_subset(int v, int t, F&& f) {
    Block sub(t);
    for (int i = 0; i < t; ++i) sub[i] = i;
    if (t == 0) {
        f(sub);
        return;
    }
    if (t > v) return;
    while (true) {
        if (!f(sub)) return;
        int i = t - 1;
        while (i >= 0 && sub[i] == v - t + i) --i;
        if (i < 0) return;
        ++sub[i];
        for (int j = i + 1; j < t; ++j) sub[j] = sub[j - 1] + 1;
    }
}

long long count_blocks_containing(const IncidenceStructure& S, const Block& sub) {
    long long n = 0;
    for (int j = 0; j < S.num_blocks(); ++j) {
        bool all = true;
        for (int x : sub)
            if (!S.block_bits(j).test(x)) {
                all = false;
                break;
            }
        if (all) ++n;
    }
    return n;
}

}  // namespace

DesignParams verify_t_design(const IncidenceStructure& S, int t) {
    if (t < 0) throw std::invalid_argument("t must be >= 0");
    const int v = S.num_points();
    const int b = S.num_blocks();
    if (b == 0)
        throw NotBalanced("no blocks", {}, 0);
    const int k = static_cast<int>(S.block(0).size());
    for (int j = 1; j < b; ++j)
        if (static_cast<int>(S.block(j).size()) != k)
            throw NotUniform("blocks 0 and " + std::to_string(j) + " have sizes " +
                                 std::to_string(k) + " and " +
                                 std::to_string(S.block(j).size()),
                             0, j);
    if (k == v)
        throw NotBalanced("degenerate design: blocks cover all points", {}, b);
    if (t > k)
        throw NotBalanced("t exceeds block size", {}, 0);

    long long lambda = -1;
    if (t == 0) {
        lambda = b;
    } else {
        // Count t-subsets per block; completeness against C(v,t) catches
        // subsets in no block.
        std::map<Block, long long> counts;
        Block sub(t);
        for (int j = 0; j < b; ++j) {
            const Block& blk = S.block(j);
            for_each_subset(static_cast<int>(blk.size()), t, [&](const Block& idx) {
                for (int i = 0; i < t; ++i) sub[i] = blk[idx[i]];
                ++counts[sub];
                return true;
            });
        }
        for (const auto& [s, c] : counts) {
            if (lambda < 0) lambda = c;
            if (c != lambda)
                throw NotBalanced("t-subset lies in " + std::to_string(c) +
                                      " blocks, expected " + std::to_string(lambda),
                                  s, c);
        }
        if (static_cast<long long>(counts.size()) != binomial(v, t)) {
            // find an uncovered witness
            Block witness;
            for_each_subset(v, t, [&](const Block& s) {
                if (!counts.count(s)) {
                    witness = s;
                    return false;
                }
                return true;
            });
            throw NotBalanced("t-subset lies in 0 blocks", witness, 0);
        }
    }

    DesignParams P;
    P.t = t;
    P.v = v;
    P.k = k;
    P.lambda = lambda;
    P.lambda_s.resize(t + 1);
    for (int s = 0; s <= t; ++s) {
        long long num = lambda * binomial(v - s, t - s);
        long long den = binomial(k - s, t - s);
        if (num % den != 0)
            throw NotBalanced("lambda_s not integral", {}, num);
        P.lambda_s[s] = num / den;
    }
    P.b = P.lambda_s[0];
    P.r = t > 0 ? P.lambda_s[1] : P.b;
    P.is_symmetric =
        t >= 2 && static_cast<long long>(k) * (k - 1) == P.lambda_s[2] * (v - 1);
    P.fisher_ok = P.b >= v;
    return P;
}

IncidenceStructure contract(const IncidenceStructure& S, int x) {
    if (x < 0 || x >= S.num_points())
        throw std::out_of_range("contraction point out of range");
    std::vector<Block> blocks;
    for (int j = 0; j < S.num_blocks(); ++j) {
        if (!S.incident(x, j)) continue;
        Block nb;
        for (int y : S.block(j))
            if (y != x) nb.push_back(y < x ? y : y - 1);
        blocks.push_back(std::move(nb));
    }
    return IncidenceStructure(S.num_points() - 1, std::move(blocks));
}

IncidenceStructure dual(const IncidenceStructure& S) {
    std::vector<Block> blocks(S.num_points());
    for (int j = 0; j < S.num_blocks(); ++j)
        for (int x : S.block(j)) blocks[x].push_back(j);
    return IncidenceStructure(S.num_blocks(), std::move(blocks));
}

Block design_line(const IncidenceStructure& S, int x, int y) {
    if (x == y) throw std::invalid_argument("design line needs two distinct points");
    Bitset line;
    bool first = true;
    for (int j = 0; j < S.num_blocks(); ++j) {
        if (!S.incident(x, j) || !S.incident(y, j)) continue;
        if (first) {
            line = S.block_bits(j);
            first = false;
        } else {
            line &= S.block_bits(j);
        }
    }
    if (first) throw NoCommonBlock("no block contains both points");
    Block out;
    for (auto i = line.find_first(); i != Bitset::npos; i = line.find_next(i))
        out.push_back(static_cast<int>(i));
    return out;
}

DembowskiWagnerReport check_dembowski_wagner(const IncidenceStructure& S) {
    DembowskiWagnerReport rep;
    rep.params = verify_t_design(S, 2);
    rep.is_symmetric = rep.params.is_symmetric;
    rep.balance_gt_one = rep.params.lambda > 1;

    std::set<Block> lines;
    for (int x = 0; x < S.num_points(); ++x)
        for (int y = x + 1; y < S.num_points(); ++y)
            lines.insert(design_line(S, x, y));
    rep.num_lines = static_cast<long long>(lines.size());

    rep.all_lines_meet_all_blocks = true;
    for (const Block& line : lines) {
        Bitset lb(S.num_points());
        for (int x : line) lb.set(x);
        for (int j = 0; j < S.num_blocks(); ++j) {
            if (!lb.intersects(S.block_bits(j))) {
                rep.all_lines_meet_all_blocks = false;
                if (!rep.witness) rep.witness = {line, j};
            }
        }
    }
    rep.hypothesis_holds =
        rep.is_symmetric && rep.balance_gt_one && rep.all_lines_meet_all_blocks;
    return rep;
}

}  // namespace fingeo
