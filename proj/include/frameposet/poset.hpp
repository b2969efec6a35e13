#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frameposet/frame.hpp"

namespace frameposet {

using IndexSet = std::uint64_t;  // bitmask over {1..k}, bit i-1 <-> index i

int set_size(IndexSet s);
std::vector<int> set_indices(IndexSet s);          // 1-based, ascending
IndexSet set_from_indices(const std::vector<int>& idx, int k);
std::string set_label(IndexSet s);                 // "{1,2}" / "{}"
IndexSet full_set(int k);

/// Canonical ordering of index sets: by size, then lexicographically as
/// sorted index lists. Fixes serialization order.
bool set_less(IndexSet a, IndexSet b);

/// A collection of index subsets of {1..k} ordered by inclusion, always
/// containing the empty set. Storage is the (canonically sorted,
/// duplicate-free) element list; the order relation is derived.
struct Poset {
    int k = 0;
    std::vector<IndexSet> sets;  // canonical order, contains 0

    bool contains(IndexSet s) const;
    bool operator==(const Poset&) const = default;
};

/// Normalizes (sorts, dedupes, adjoins the empty set) and validates bits.
Poset make_poset(int k, std::vector<IndexSet> sets);

struct FactorPosetOptions {
    int direct_limit = 24;      // 2^k subset scan cap
    bool meet_in_middle = false;
    int mitm_limit = 40;        // cap when meet-in-the-middle is enabled
    Tolerance tol;
};

/// All index subsets whose vectors form a tight frame (zero diagram-vector
/// sum), plus the empty set. Rejects zero vectors and over-cap k.
Poset factor_poset(const Frame& f, const FactorPosetOptions& opts = {});

/// Minimal nonempty elements under inclusion.
std::vector<IndexSet> empty_cover(const Poset& p);

/// The pair (A \ B, B \ A); A and B must be elements of P.
std::pair<IndexSet, IndexSet> copies_of(const Poset& p, IndexSet a, IndexSet b);

struct ClosureCheckResult {
    bool ok = true;
    std::optional<IndexSet> witness;  // the set that must be in P but is not
};

/// Closure condition: for all A,B,C in P with J = A\B, K = B\A, J subset of
/// C and K disjoint from C, the set (C\J) u K lies in P. Also cross-checks
/// the equivalent triple A u B in P <=> A n B in P <=> A \ B in P.
ClosureCheckResult satisfies_closure_condition(const Poset& p);

struct Signing {
    int k = 0;
    std::uint64_t plus_mask = 0;  // bit set <-> '+'

    int sign(int index_1based) const {
        return (plus_mask >> (index_1based - 1)) & 1 ? +1 : -1;
    }
    std::string str() const;  // e.g. "+-+-"
    bool operator==(const Signing&) const = default;
};

/// Every +/- assignment such that each nonempty poset element carries both
/// signs, by backtracking over the empty-cover constraints. Empty result
/// means the sign condition fails.
std::vector<Signing> all_signings(const Poset& p);

/// Signing induced by a direction tau in reduced diagram coordinates
/// (diffs then prods, length 2*C(n,2)): i -> sign<diagram(f_i), tau>.
/// Real field only; throws (reporting the index) if tau is orthogonal to
/// some diagram vector.
Signing signing_from_direction(const Frame& f, const std::vector<Scalar>& tau,
                               const Tolerance& tol = {});

struct ForcedSignRelations {
    std::vector<std::pair<int, int>> equal_pairs;    // sigma(i) == sigma(j) always
    std::vector<std::pair<int, int>> unequal_pairs;  // sigma(i) != sigma(j) always
    bool unique_signing = false;                     // exactly one up to global flip
};

ForcedSignRelations forced_sign_relations(const Poset& p);

/// GraphViz DOT rendering of the Hasse diagram (cover relation), nodes in
/// canonical order.
std::string hasse_dot(const Poset& p);

} // namespace frameposet
