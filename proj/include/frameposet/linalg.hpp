#pragma once

#include <vector>

#include "frameposet/scalar.hpp"

namespace frameposet {

// Dense row-major matrix of scalars. Exact routines below require all
// entries to be exact (and mutually compatible) and throw MixedModeError
// otherwise.
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<Scalar> data;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}

    Scalar& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    const Scalar& at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

    static Matrix identity(int n);
};

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

struct LinearSolution {
    SolveStatus status = SolveStatus::Inconsistent;
    std::vector<Scalar> particular;              // valid unless Inconsistent
    std::vector<std::vector<Scalar>> kernel;     // nonempty iff Underdetermined
};

/// Exact Gauss-Jordan solve of A x = b over the scalar field. Returns the
/// unique solution, an inconsistency flag, or a particular solution plus a
/// kernel basis.
LinearSolution solve_linear_system_exact(const Matrix& A, const std::vector<Scalar>& b);

struct Rref {
    Matrix mat;                   // reduced row echelon form, zero rows dropped
    std::vector<int> pivot_cols;  // one per surviving row
    int rank = 0;
};

Rref rref_exact(const Matrix& A);
int rank_exact(const Matrix& A);
std::vector<std::vector<Scalar>> kernel_basis_exact(const Matrix& A);

/// Reduce v against the RREF rows; true iff the residual is zero, i.e. v lies
/// in the row span.
bool in_row_span(const Rref& r, const std::vector<Scalar>& v);

/// u minus its orthogonal projection onto span(rows). Real exact scalars only
/// (uses the standard inner product); rows must be linearly independent.
std::vector<Scalar> residual_orthogonal(const std::vector<std::vector<Scalar>>& rows,
                                        const std::vector<Scalar>& u);

/// Exact feasibility of { x >= 0 : A x = b } via phase-one simplex with
/// Bland's rule. Real exact scalars only.
bool nonneg_solution_exists(const Matrix& A, const std::vector<Scalar>& b);

} // namespace frameposet
