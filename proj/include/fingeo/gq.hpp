#ifndef FINGEO_GQ_HPP
#define FINGEO_GQ_HPP

#include <functional>
#include <optional>

#include "fingeo/incidence.hpp"

namespace fingeo {

struct NotPartialLinear : std::runtime_error {
    int point_a, point_b, line_a, line_b;  // two lines through the same pair
    NotPartialLinear(const std::string& msg, int x, int y, int l1, int l2)
        : std::runtime_error(msg), point_a(x), point_b(y), line_a(l1), line_b(l2) {}
};

struct AxiomFailure : std::runtime_error {
    int point, line;      // the non-incident pair
    int collinear_count;  // 0 or >= 2
    AxiomFailure(const std::string& msg, int x, int l, int c)
        : std::runtime_error(msg), point(x), line(l), collinear_count(c) {}
};

struct CollinearPair : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonIntegralCount : std::logic_error {
    using std::logic_error::logic_error;
};

struct TraceSpan {
    std::pair<int, int> pair;
    std::vector<int> trace;  // common neighbours, size t+1
    std::vector<int> span;   // points collinear with the whole trace, size <= t+1
    bool regular() const { return span.size() == trace.size(); }
};

/// An incidence structure validated as a generalized quadrangle of order
/// (s,t), with the collinearity graph cached as bitset rows.
class GQView {
public:
    const IncidenceStructure& structure() const { return S_; }
    int s() const { return s_; }
    int t() const { return t_; }
    int num_points() const { return S_.num_points(); }
    int num_lines() const { return S_.num_blocks(); }

    bool collinear(int x, int y) const { return adj_[x].test(y); }
    /// Neighbours of x, excluding x itself.
    const Bitset& neighbours(int x) const { return adj_[x]; }
    /// star(x) = neighbours plus x itself.
    Bitset star(int x) const;
    const std::vector<int>& lines_through(int x) const { return point_to_lines_[x]; }

    friend GQView verify_gq(IncidenceStructure S);

private:
    explicit GQView(IncidenceStructure S) : S_(std::move(S)) {}
    IncidenceStructure S_;
    int s_ = 0, t_ = 0;
    std::vector<Bitset> adj_;
    std::vector<std::vector<int>> point_to_lines_;
};

/// Checks the GQ axioms (constant line size, constant point degree, partial
/// linearity, unique collinear point on every non-incident point/line pair).
GQView verify_gq(IncidenceStructure S);

/// Trace and span of a non-collinear pair.
TraceSpan trace_span(const GQView& G, int x, int y);

struct RegularityReport {
    bool regular = false;
    long long regular_pairs = 0;
    long long total_pairs = 0;
};

RegularityReport verify_regularity(const GQView& G);

struct BipartiteCount {
    long long n = 0;      // induced K_{t+1,t+1} in the collinearity graph
    long long bound = 0;  // s^2 (s+1)(st+1) / (2(t+1))
    bool attains_bound = false;
};

/// Counts induced K_{t+1,t+1} via the regular-pair double count.
BipartiteCount count_complete_bipartite(const GQView& G);

struct LineSpanStarReport {
    bool lines_meet_stars = false;       // claim (i)
    bool spans_meet_stars = false;       // claim (ii)
    bool star_partition_ok = false;      // only meaningful when s == t
    long long num_spans = 0;
    std::vector<std::string> violations;
    bool all_ok() const {
        return lines_meet_stars && spans_meet_stars && star_partition_ok;
    }
};

/// For a regular GQ: every line and every span meets every star; and for
/// s = t, the stars of a span's points minus the common trace partition the
/// trace's complement into s^2-sized pieces.
LineSpanStarReport verify_line_span_star_meets(const GQView& G);

/// True iff every line meets O in exactly one point; asserts the size,
/// pairwise-non-collinearity and star-intersection consequences when true.
bool verify_gq_ovoid(const GQView& G, const std::vector<int>& ovoid);

enum class OvoidSearchMode { find_one, count_all, enumerate };

struct OvoidSearchResult {
    OvoidSearchMode mode;
    long long count = 0;
    std::optional<std::vector<int>> first;
    std::vector<std::vector<int>> all;  // lexicographic, enumerate mode only
    long long nodes = 0;
    bool budget_exhausted = false;
};

/// Backtracking search for GQ ovoids. Branches on the lowest-index line not
/// yet met, trying its points in index order; prunes when some unmet line
/// has no remaining candidate. Deterministic for any job count (jobs > 1
/// splits the first branching level, merged in branch order).
OvoidSearchResult search_gq_ovoids(const GQView& G, OvoidSearchMode mode,
                                   int jobs = 1, long long node_budget = -1);

}  // namespace fingeo

#endif
