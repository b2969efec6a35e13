#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "frameposet/poset.hpp"

namespace frameposet {

/// Rank n-1 projection analysis of a frame (float mode; the projection
/// results are analytic, so exact mode is refused for eigen-decompositions).
struct ProjectionReport {
    enum class Case {
        AllTight,           // input frame is tight
        TwoTightSubspaces,  // lambda_1 > lambda > lambda_n
        OneTightSubspace,   // exactly one of the gaps vanishes
        None,               // middle eigenvalues split (n >= 4)
        ComplexFamily,      // complex field: circle of normals in a 2-dim subspace
    };

    std::vector<double> eigenvalues;  // of the frame operator, descending
    Case tag = Case::None;
    // Unit normals of the tight-making hyperplanes (complex parts zero for
    // real frames).
    std::vector<std::vector<std::complex<double>>> normals;
    // ComplexFamily: basis {eta_1, eta_n} of the subspace containing every
    // tight-making normal.
    std::vector<std::vector<std::complex<double>>> family_basis;
    std::optional<double> tight_bound;  // frame bound of the tight projections
    std::string warning;
};

/// <S x, x> for a unit vector x (the frame-bound functional).
double lambda_f(const Frame& f, const std::vector<std::complex<double>>& x,
                const Tolerance& tol = {});
double lambda_f(const Frame& f, const std::vector<double>& x, const Tolerance& tol = {});

/// Eigenvalues of the frame operator, descending.
std::vector<double> frame_operator_eigenvalues(const Frame& f);

/// Projects every vector onto normal^perp and expresses it in a
/// deterministic orthonormal basis of normal^perp (Gram-Schmidt over the
/// coordinate vectors, excluding the pivot with the largest |normal| entry).
/// Result is a float-mode frame of dimension n-1.
Frame project_frame(const Frame& f, const std::vector<std::complex<double>>& normal,
                    const Tolerance& tol = {});
Frame project_frame(const Frame& f, const std::vector<double>& normal,
                    const Tolerance& tol = {});

ProjectionReport find_tight_projections(const Frame& f, const Tolerance& tol = {});

struct ReduceOptions {
    int attempts_per_step = 32;
    Tolerance tol;
};

/// Repeatedly projects along seeded random unit normals, keeping only
/// projections that preserve the factor poset, down to dimension target.
Frame reduce_dimension_preserving_poset(const Frame& f, int target, std::uint64_t seed,
                                        const ReduceOptions& opts = {});

/// True iff the projected frame operator's eigenvalues interlace the
/// original's within tolerance.
bool interlacing_check(const Frame& f, const std::vector<double>& normal,
                       const Tolerance& tol = {});

/// min{|A| : A in P, A nonempty} — the trivial upper bound on the largest
/// dimension realizing P.
int dimension_upper_bound(const Poset& p);

} // namespace frameposet
