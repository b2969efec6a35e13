#include "frameposet/linalg.hpp"

#include <algorithm>

namespace frameposet {

namespace {

void require_exact(const Matrix& A) {
    for (const auto& s : A.data)
        if (!s.is_exact()) throw MixedModeError("exact linear algebra refuses float entries");
}

void require_exact(const std::vector<Scalar>& v) {
    for (const auto& s : v)
        if (!s.is_exact()) throw MixedModeError("exact linear algebra refuses float entries");
}

} // namespace

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Rref rref_exact(const Matrix& A) {
    require_exact(A);
    Matrix m = A;
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int piv = -1;
        for (int r = row; r < m.rows; ++r) {
            if (!m.at(r, col).is_zero()) { piv = r; break; }
        }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(row, c));
        const Scalar inv = Scalar(1) / m.at(row, col);
        for (int c = col; c < m.cols; ++c) m.at(row, c) = m.at(row, c) * inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            const Scalar f = m.at(r, col);
            for (int c = col; c < m.cols; ++c)
                m.at(r, c) = m.at(r, c) - f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    Rref out;
    out.rank = row;
    out.pivot_cols = std::move(pivots);
    out.mat = Matrix(row, m.cols);
    for (int r = 0; r < row; ++r)
        for (int c = 0; c < m.cols; ++c) out.mat.at(r, c) = m.at(r, c);
    return out;
}

int rank_exact(const Matrix& A) { return rref_exact(A).rank; }

std::vector<std::vector<Scalar>> kernel_basis_exact(const Matrix& A) {
    const Rref r = rref_exact(A);
    std::vector<bool> is_pivot(A.cols, false);
    for (int c : r.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int free = 0; free < A.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(A.cols, Scalar(0));
        v[free] = Scalar(1);
        for (int i = 0; i < r.rank; ++i)
            v[r.pivot_cols[i]] = -r.mat.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

LinearSolution solve_linear_system_exact(const Matrix& A, const std::vector<Scalar>& b) {
    require_exact(A);
    require_exact(b);
    if (static_cast<int>(b.size()) != A.rows)
        throw ValidationError("solve: right-hand side length mismatch");
    Matrix aug(A.rows, A.cols + 1);
    for (int r = 0; r < A.rows; ++r) {
        for (int c = 0; c < A.cols; ++c) aug.at(r, c) = A.at(r, c);
        aug.at(r, A.cols) = b[r];
    }
    const Rref ra = rref_exact(aug);
    LinearSolution sol;
    for (int i = 0; i < ra.rank; ++i) {
        if (ra.pivot_cols[i] == A.cols) {
            sol.status = SolveStatus::Inconsistent;
            return sol;
        }
    }
    sol.particular.assign(A.cols, Scalar(0));
    for (int i = 0; i < ra.rank; ++i)
        sol.particular[ra.pivot_cols[i]] = ra.mat.at(i, A.cols);
    sol.kernel = kernel_basis_exact(A);
    sol.status = sol.kernel.empty() ? SolveStatus::Unique : SolveStatus::Underdetermined;
    return sol;
}

bool in_row_span(const Rref& r, const std::vector<Scalar>& v) {
    require_exact(v);
    if (static_cast<int>(v.size()) != r.mat.cols && r.rank > 0)
        throw ValidationError("in_row_span: dimension mismatch");
    std::vector<Scalar> w = v;
    for (int i = 0; i < r.rank; ++i) {
        const int p = r.pivot_cols[i];
        if (w[p].is_zero()) continue;
        const Scalar f = w[p];
        for (int c = 0; c < r.mat.cols; ++c) w[c] = w[c] - f * r.mat.at(i, c);
    }
    for (const auto& x : w)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<Scalar> residual_orthogonal(const std::vector<std::vector<Scalar>>& rows,
                                        const std::vector<Scalar>& u) {
    require_exact(u);
    if (rows.empty()) return u;
    const int l = static_cast<int>(rows.size());
    const int k = static_cast<int>(u.size());
    Matrix gram(l, l);
    std::vector<Scalar> rhs(l, Scalar(0));
    for (int i = 0; i < l; ++i) {
        for (int j = 0; j < l; ++j) {
            Scalar s(0);
            for (int c = 0; c < k; ++c) s += rows[i][c] * rows[j][c];
            gram.at(i, j) = s;
        }
        Scalar s(0);
        for (int c = 0; c < k; ++c) s += rows[i][c] * u[c];
        rhs[i] = s;
    }
    const LinearSolution sol = solve_linear_system_exact(gram, rhs);
    if (sol.status != SolveStatus::Unique)
        throw ValidationError("residual_orthogonal: rows are linearly dependent");
    std::vector<Scalar> res = u;
    for (int i = 0; i < l; ++i)
        for (int c = 0; c < k; ++c) res[c] = res[c] - sol.particular[i] * rows[i][c];
    return res;
}

// Phase-one simplex: minimize the sum of artificial variables over
// { (x, a) >= 0 : A x + sign * a = b }. Bland's rule guarantees termination.
bool nonneg_solution_exists(const Matrix& A, const std::vector<Scalar>& b) {
    require_exact(A);
    require_exact(b);
    const int m = A.rows, n = A.cols;
    if (static_cast<int>(b.size()) != m) throw ValidationError("simplex: rhs length mismatch");

    // Tableau: columns [x (n) | artificials (m) | rhs], rows normalized so
    // rhs >= 0; artificial i has +1 in row i.
    const int cols = n + m + 1;
    std::vector<std::vector<Scalar>> t(m, std::vector<Scalar>(cols, Scalar(0)));
    for (int r = 0; r < m; ++r) {
        const bool flip = b[r].sign() < 0;
        for (int c = 0; c < n; ++c) t[r][c] = flip ? -A.at(r, c) : A.at(r, c);
        t[r][n + r] = Scalar(1);
        t[r][cols - 1] = flip ? -b[r] : b[r];
    }
    std::vector<int> basis(m);
    for (int r = 0; r < m; ++r) basis[r] = n + r;

    // Objective row for minimizing the sum of artificials, expressed in the
    // nonbasic columns: only rows whose basic variable is still artificial
    // contribute.
    auto reduced_cost = [&](int j) {
        Scalar s(0);
        for (int r = 0; r < m; ++r)
            if (basis[r] >= n) s += t[r][j];
        return s;
    };

    while (true) {
        int enter = -1;
        for (int j = 0; j < n; ++j) {  // artificials never re-enter
            if (reduced_cost(j).sign() > 0) { enter = j; break; }
        }
        if (enter < 0) break;
        int leave = -1;
        Scalar best_ratio(0);
        for (int r = 0; r < m; ++r) {
            if (t[r][enter].sign() <= 0) continue;
            const Scalar ratio = t[r][cols - 1] / t[r][enter];
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[r] < basis[leave])) {
                leave = r;
                best_ratio = ratio;
            }
        }
        if (leave < 0) break;  // unbounded in phase one cannot happen; guard anyway
        const Scalar piv = t[leave][enter];
        for (int c = 0; c < cols; ++c) t[leave][c] = t[leave][c] / piv;
        for (int r = 0; r < m; ++r) {
            if (r == leave || t[r][enter].is_zero()) continue;
            const Scalar f = t[r][enter];
            for (int c = 0; c < cols; ++c) t[r][c] = t[r][c] - f * t[leave][c];
        }
        basis[leave] = enter;
    }

    Scalar objective(0);
    for (int r = 0; r < m; ++r)
        if (basis[r] >= n) objective += t[r][cols - 1];
    return objective.is_zero();
}

} // namespace frameposet
