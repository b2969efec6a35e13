#pragma once

#include <optional>
#include <vector>

#include "frameposet/poset.hpp"

namespace frameposet {

/// Equality system and vertex set of the scaling polytope
/// { w >= 0 : sum_i w(i) f_i f_i^T = I_n } of a unit-norm real frame.
/// The vertices are exactly the minimal scalings; their supports are
/// pairwise distinct and form the empty cover of the scalability poset.
struct ScalingPolytope {
    Matrix equality;                           // n(n+1)/2 x k, row per (a,b), a <= b
    std::vector<Scalar> rhs;                   // 1 on diagonal rows, 0 elsewhere
    std::vector<std::vector<Scalar>> minimal;  // vertex scalings, each of length k

    int m() const { return static_cast<int>(minimal.size()); }
    std::vector<IndexSet> supports() const;
};

struct ScalabilityOptions {
    int k_limit = 14;
    Tolerance tol;
};

/// ||f_i||^2 = 1 for every i. Real field only (the scalability analysis
/// assumes real unit-norm frames).
bool is_unit_norm(const Frame& f, const Tolerance& tol = {});

/// Vertex enumeration by candidate supports: solve the equality system
/// restricted to each support with linearly independent outer-product
/// columns, keep strictly positive solutions, discard supports containing a
/// kept support.
ScalingPolytope minimal_scalings(const Frame& f, const ScalabilityOptions& opts = {});

/// All index subsets whose subframe is scalable: the upward closure of the
/// minimal-scaling supports, plus the empty set.
Poset scalability_poset(const Frame& f, const ScalabilityOptions& opts = {});

struct ClassifyResult {
    bool prime = true;
    std::optional<IndexSet> tight_witness;  // proper tight subset of the scaled frame
};

/// Prime iff no proper nonempty subset of the support has scaled diagram
/// vectors summing to zero. In exact mode the convex-combination
/// characterization (exists_orthogonal_partition) is evaluated as well and
/// must agree.
ClassifyResult classify_scaling(const Frame& f, const std::vector<Scalar>& w,
                                const ScalabilityOptions& opts = {});

/// True iff w can be written as a convex combination of minimal scalings
/// split into two mutually orthogonal nonempty groups. Exact mode only.
bool exists_orthogonal_partition(const Frame& f, const std::vector<Scalar>& w,
                                 const ScalabilityOptions& opts = {});

struct PrimeStrictResult {
    bool exists = false;
    std::vector<Scalar> witness;  // a verified prime strict scaling, when it exists
};

/// A prime strict scaling exists iff the support-intersection graph of the
/// minimal scalings is connected. Throws NoStrictScalingError when no strict
/// scaling exists at all.
PrimeStrictResult has_prime_strict_scaling(const Frame& f, const ScalabilityOptions& opts = {});

/// Sufficient condition for every scaling with support exactly A to be
/// prime: the minimal scalings inside A have a connected
/// support-intersection graph and none of their supports is covered by the
/// union of the others.
bool prime_support_sufficient(const Frame& f, IndexSet a, const ScalabilityOptions& opts = {});

/// Validates w as a scaling of f (nonnegative, equality system satisfied).
/// Throws ValidationError otherwise.
void require_feasible_scaling(const Frame& f, const std::vector<Scalar>& w,
                              const Tolerance& tol = {});

/// Factor poset of the scaled frame {sqrt(w_i) f_i} restricted to the
/// support of w (scaled diagram vectors are w_i * diag(f_i)).
Poset scaled_factor_poset(const Frame& f, const std::vector<Scalar>& w,
                          const Tolerance& tol = {});

/// Search harness for the open realizability question: exhaustively scans
/// rational convex combinations of the minimal scalings with common
/// denominator up to the cap, looking for a strict scaling whose scaled
/// frame has factor poset exactly p. A hit is a certificate; exhaustion is
/// not a refutation.
std::optional<std::vector<Scalar>> find_strict_scaling_with_factor_poset(
    const Frame& f, const Poset& p, int denominator_cap = 6,
    const ScalabilityOptions& opts = {});

} // namespace frameposet
