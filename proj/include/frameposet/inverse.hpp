#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frameposet/poset.hpp"

namespace frameposet {

/// Rational row-reduced basis of span{ [J] : J in P } together with a basis
/// of its orthogonal complement in R^k.
struct IndexSpanBasis {
    int k = 0;
    std::vector<std::vector<Rational>> basis;       // RREF rows
    std::vector<std::vector<Rational>> complement;  // kernel of the basis matrix

    int dim() const { return static_cast<int>(basis.size()); }
};

IndexSpanBasis index_span(const Poset& p);

struct SpanClosedResult {
    bool closed = true;
    std::optional<IndexSet> violating;  // J not in P with [J] in the index span
};

/// True iff [J] lies outside the index span for every non-member J.
/// Requires a singleton-free poset (singletons encode zero vectors).
SpanClosedResult is_span_closed(const Poset& p);

struct SpanClosureResult {
    Poset poset;
    std::vector<int> singleton_indices;  // appended singletons, 1-based
};

/// P together with every J whose index vector lies in the index span; the
/// smallest span-closed poset containing P. Singletons that appear are
/// reported, not suppressed.
SpanClosureResult span_closure(const Poset& p);

struct InverseOptions {
    int rows = 2;                       // 1: scaled-basis construction, 2: general
    std::optional<long long> max_norm;  // override of the search bound
};

struct InverseResult {
    Frame frame;                  // float mode, R^2
    std::vector<long long> v, w;  // integer witnesses; w empty in single-row mode
};

/// Constructive inverse in R^2 for a span-closed singleton-free poset.
/// Searches integer witnesses in the complement of the index span, ordered
/// by increasing sup-norm and then lexicographically with larger entries
/// first; the subset-sum structure of the result is re-verified against P
/// in integer arithmetic before returning.
InverseResult inverse_frame_r2(const Poset& p, const InverseOptions& opts = {});

/// Writes (x,y) = rho (cos phi, sin phi) and returns sqrt(rho) *
/// (cos phi/2, sin phi/2), the R^2 vector whose diagram vector is (x,y).
std::vector<double> invert_diagram_vector_r2(double x, double y);

struct FullSparkObstruction {
    bool ok = true;
    int i = 0, j = 0;  // violating pair, 1-based
    Rational alpha;    // e_i - alpha e_j lies in the index span, alpha > 0
};

/// Checks that no e_i - alpha e_j with alpha > 0 lies in the index span
/// (residuals of e_i, e_j on the complement must not be positively
/// parallel). Requires a span-closed poset.
FullSparkObstruction full_spark_obstruction(const Poset& p);

/// Two-row inverse whose diagram vectors additionally avoid, pairwise, the
/// positively-parallel rays; the result is verified full spark.
InverseResult inverse_full_spark_r2(const Poset& p, const InverseOptions& opts = {});

// ---- general-n feasibility system ----------------------------------------

struct QuadMonomial {
    Rational coef;
    std::vector<int> vars;  // 0..2 variable indices (empty = constant term)
};

struct FsConstraint {
    enum class Sense { Eq, Ge };
    Sense sense = Sense::Eq;
    std::vector<QuadMonomial> terms;
    Rational rhs;
    std::string tag;
};

/// The quadratic feasibility system whose solutions are exactly the frames
/// in R^n with factor poset P: zero diagram sums on members, slack-encoded
/// nonzero sums on non-members (|x| = r+ + r- with r+ r- = 0).
struct FeasibilitySystem {
    int k = 0, n = 0;
    std::vector<std::string> variables;
    std::vector<FsConstraint> constraints;
};

FeasibilitySystem build_feasibility_system(const Poset& p, int n);

struct HeuristicOptions {
    std::uint64_t seed = 1;
    int restarts = 12;
    int iterations = 6000;
    Tolerance tol;
};

/// Best-effort penalty minimization for the general-n inverse problem. A
/// returned frame is always re-verified via factor_poset; absence of a
/// result is inconclusive, never a proof of infeasibility.
std::optional<Frame> solve_inverse_heuristic(const Poset& p, int n,
                                             const HeuristicOptions& opts = {});

/// Search bound for integer witnesses: ceil(2^-(k-1) * k^(k/2)).
long long witness_norm_bound(int k);

} // namespace frameposet
