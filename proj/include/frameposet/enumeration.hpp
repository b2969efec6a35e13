#pragma once

#include <map>
#include <optional>
#include <vector>

#include "frameposet/inverse.hpp"
#include "frameposet/poset.hpp"

namespace frameposet {

/// Subset-sum poset of an integer vector: all index subsets whose entries
/// sum to zero, plus the empty set. This is the factor poset of the R^2
/// frame whose diagram vectors are (a_i, 0).
Poset subset_zero_poset(const std::vector<long long>& a);

/// Independent meet-in-the-middle implementation of subset_zero_poset, used
/// to cross-check census counts.
Poset subset_zero_poset_mitm(const std::vector<long long>& a);

struct CanonicalForm {
    Poset poset;
    std::vector<int> position_of;  // 0-based: old index i -> new position
};

/// Canonical representative under index permutation: the lexicographically
/// minimal sorted element list over all permutations respecting the
/// refinement classes of the element-membership incidence (an equivariant
/// restriction, so equality of canonical forms is exactly strong
/// isomorphism).
CanonicalForm canonicalize_poset(const Poset& p);

struct CensusEntry {
    Poset poset;                    // canonical representative
    std::vector<long long> witness; // integer vector realizing it exactly
};

struct CensusResult {
    int k = 0;
    long long max_norm = 0;                  // the sup-norm bound used
    std::vector<CensusEntry> entries;        // sorted by (poset size, elements)
    std::map<int, int> count_by_size;        // |P| -> number of classes
};

struct CensusOptions {
    std::optional<long long> max_norm;  // override of the theoretical bound
    bool reverse_value_order = false;   // iterate candidate entries high-to-low
};

/// Brute-force census of factor posets of R^2 frames with k vectors:
/// enumerate integer vectors with no zero entries, gcd 1 and sup-norm within
/// ceil(2^-(k-1) k^(k/2)), compute subset-sum posets, canonicalize, dedupe.
/// Completeness beyond the cap is a resource cap, not a correctness cap.
CensusResult enumerate_factor_posets_r2(int k, const CensusOptions& opts = {});

unsigned long long binomial(int n, int k);

/// Largest possible factor poset of a tight frame: C(k, k/2) for even k,
/// 2 C(k-1, floor(k/2)-1) for odd k.
unsigned long long furedi_bound(int k);

/// |P| <= furedi_bound(k); requires the full index set as an element.
bool check_furedi_bound(const Poset& p);

/// sum_{i=0}^{m} C(m,i)^n with m = k/n; requires n | k. For n = 2 the value
/// is checked against the closed form C(2m, m).
unsigned long long conjectured_bound_hn(int k, int n);

/// The k-vector family {e_1 x(k-2), -sqrt(k/2-1) e_2 x2} (exact mode) whose
/// empty cover attains size 2 C(k-2, floor(k/2-1)). Requires even k >= 4.
Frame extremal_ec_frame(int k);

unsigned long long extremal_ec_size(int k);  // 2 C(k-2, floor(k/2-1))

struct ScaledOnbReduction {
    Frame frame;   // float mode, supported on the two coordinate axes
    long long t;   // chosen functional T(x, y) = x + t y
};

/// Factor-poset-preserving reduction of an R^2 frame onto two orthogonal
/// lines: picks an integer functional nonzero on every nonzero diagram
/// subset sum and maps each vector to sqrt(|T(diag)|) times e_1 or e_2.
ScaledOnbReduction scaled_onb_reduction(const Frame& f, const Tolerance& tol = {});

} // namespace frameposet
