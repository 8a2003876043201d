#ifndef FINGEO_INCIDENCE_HPP
#define FINGEO_INCIDENCE_HPP

#include <boost/dynamic_bitset.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fingeo {

using Bitset = boost::dynamic_bitset<uint64_t>;
using Block = std::vector<int>;

struct NotUniform : std::runtime_error {
    int block_a, block_b;  // witness blocks of unequal size
    NotUniform(const std::string& msg, int a, int b)
        : std::runtime_error(msg), block_a(a), block_b(b) {}
};

struct NotBalanced : std::runtime_error {
    Block witness;       // a t-subset with deviant block count
    long long count;     // its block count
    NotBalanced(const std::string& msg, Block w, long long c)
        : std::runtime_error(msg), witness(std::move(w)), count(c) {}
};

struct NoCommonBlock : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OddOrder : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Finite point/block incidence system. Points are 0..v-1; blocks are
/// stored as strictly increasing index lists, the block list sorted
/// lexicographically, duplicates forbidden.
class IncidenceStructure {
public:
    IncidenceStructure(int num_points, std::vector<Block> blocks,
                       std::vector<std::string> point_labels = {},
                       std::vector<std::string> block_labels = {});

    int num_points() const { return v_; }
    int num_blocks() const { return static_cast<int>(blocks_.size()); }
    const std::vector<Block>& blocks() const { return blocks_; }
    const Block& block(int j) const { return blocks_[j]; }
    const Bitset& block_bits(int j) const { return bits_[j]; }

    const std::vector<std::string>& point_labels() const { return point_labels_; }
    const std::vector<std::string>& block_labels() const { return block_labels_; }

    bool incident(int point, int block) const { return bits_[block].test(point); }
    /// Indices of the blocks through a point.
    std::vector<int> blocks_through(int point) const;

    bool operator==(const IncidenceStructure& other) const {
        return v_ == other.v_ && blocks_ == other.blocks_;
    }

private:
    int v_;
    std::vector<Block> blocks_;
    std::vector<Bitset> bits_;
    std::vector<std::string> point_labels_, block_labels_;
};

/// (t, v, k, lambda) plus everything derived from them.
struct DesignParams {
    int t = 0, v = 0, k = 0;
    long long lambda = 0;
    std::vector<long long> lambda_s;  // lambda_s[s] for 0 <= s <= t
    long long b = 0, r = 0;
    bool is_symmetric = false;
    bool fisher_ok = false;
};

/// Exact binomial coefficient; throws on overflow of long long.
long long binomial(int n, int k);

/// Checks that S is a t-(v,k,lambda) design and derives all parameters.
/// Throws NotUniform / NotBalanced with witnesses.
DesignParams verify_t_design(const IncidenceStructure& S, int t);

/// Derived design at x: drop x, keep the blocks through it (x removed,
/// remaining points reindexed downward).
IncidenceStructure contract(const IncidenceStructure& S, int x);

/// Interchange points and blocks.
IncidenceStructure dual(const IncidenceStructure& S);

/// Intersection of all blocks containing {x, y}.
Block design_line(const IncidenceStructure& S, int x, int y);

struct DembowskiWagnerReport {
    DesignParams params;
    bool is_symmetric = false;
    bool balance_gt_one = false;
    bool all_lines_meet_all_blocks = false;
    bool hypothesis_holds = false;
    std::optional<std::pair<Block, int>> witness;  // (line, block index) missing each other
    long long num_lines = 0;
};

/// Hypothesis check for the projective-space characterization: S is a
/// symmetric 2-design, lambda > 1, and every design line meets every block.
DembowskiWagnerReport check_dembowski_wagner(const IncidenceStructure& S);

}  // namespace fingeo

#endif
