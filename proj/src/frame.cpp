#include "frameposet/frame.hpp"

#include <algorithm>
#include <cmath>

namespace frameposet {

int pair_count(int n) { return n * (n - 1) / 2; }

void validate_frame(const Frame& f) {
    if (f.n < 1) throw ValidationError("frame dimension must be >= 1");
    if (f.vectors.empty()) throw ValidationError("frame must contain at least one vector");
    if (f.mode.exact && f.mode.d < 1) throw ValidationError("exact mode requires d >= 1");
    for (const auto& v : f.vectors) {
        if (static_cast<int>(v.size()) != f.n)
            throw ValidationError("frame vector length differs from dimension");
        for (const auto& s : v) {
            if (f.mode.exact && !s.is_exact())
                throw MixedModeError("float entry in an exact-mode frame");
            if (!f.mode.exact && s.is_exact())
                throw MixedModeError("exact entry in a float-mode frame");
            switch (s.kind()) {
                case Scalar::Kind::Quad:
                    if (f.field == Field::Complex)
                        throw MixedModeError("quadratic entries are real-field only");
                    {
                        long long sf = 1;
                        if (s.quad_value().d != squarefree_part(f.mode.d, sf))
                            throw MixedModeError("entry uses a different quadratic extension than the frame");
                    }
                    break;
                case Scalar::Kind::Gaussian:
                case Scalar::Kind::ComplexFloat:
                    if (f.field == Field::Real)
                        throw MixedModeError("complex entry in a real-field frame");
                    break;
                default: break;
            }
        }
    }
}

bool is_zero_vector(const Frame& f, int index, const Tolerance& tol) {
    for (const auto& s : f.vectors[index])
        if (!scalar_is_zero(s, tol)) return false;
    return true;
}

std::vector<int> zero_vector_indices(const Frame& f, const Tolerance& tol) {
    std::vector<int> out;
    for (int i = 0; i < f.k(); ++i)
        if (is_zero_vector(f, i, tol)) out.push_back(i + 1);
    return out;
}

Frame strip_zero_vectors(const Frame& f, const Tolerance& tol) {
    Frame out = f;
    out.vectors.clear();
    for (int i = 0; i < f.k(); ++i)
        if (!is_zero_vector(f, i, tol)) out.vectors.push_back(f.vectors[i]);
    return out;
}

ReducedDiagramVector diagram_vector(const std::vector<Scalar>& f, Field field, int n) {
    if (n < 2) throw ValidationError("diagram vectors require dimension >= 2");
    if (static_cast<int>(f.size()) != n)
        throw ValidationError("diagram_vector: vector length differs from dimension");
    ReducedDiagramVector d;
    d.diffs.reserve(pair_count(n));
    d.prods.reserve(pair_count(n));
    for (int i = 0; i < n - 1; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (field == Field::Real) {
                d.diffs.push_back(f[i] * f[i] - f[j] * f[j]);
                d.prods.push_back(f[i] * f[j]);
            } else {
                d.diffs.push_back(norm_sq(f[i]) - norm_sq(f[j]));
                d.prods.push_back(f[i] * f[j].conjugate());
            }
        }
    }
    return d;
}

ReducedDiagramVector diagram_vector(const Frame& f, int index) {
    return diagram_vector(f.vectors[index], f.field, f.n);
}

std::vector<ReducedDiagramVector> diagram_vectors(const Frame& f) {
    std::vector<ReducedDiagramVector> out;
    out.reserve(f.vectors.size());
    for (int i = 0; i < f.k(); ++i) out.push_back(diagram_vector(f, i));
    return out;
}

std::vector<std::complex<double>> full_diagram_float(const std::vector<Scalar>& f,
                                                     Field field, int n) {
    if (n < 2) throw ValidationError("diagram vectors require dimension >= 2");
    std::vector<std::complex<double>> out;
    const double c = 1.0 / std::sqrt(static_cast<double>(n - 1));
    std::vector<std::complex<double>> z(f.size());
    for (size_t i = 0; i < f.size(); ++i) z[i] = f[i].to_complex();
    for (int i = 0; i < n - 1; ++i)
        for (int j = i + 1; j < n; ++j)
            out.push_back(c * (std::norm(z[i]) - std::norm(z[j])));
    if (field == Field::Real) {
        const double p = std::sqrt(2.0 * n) * c;
        for (int i = 0; i < n - 1; ++i)
            for (int j = i + 1; j < n; ++j) out.push_back(p * z[i] * z[j]);
    } else {
        const double p = std::sqrt(static_cast<double>(n)) * c;
        for (int i = 0; i < n - 1; ++i) {
            for (int j = i + 1; j < n; ++j) {
                out.push_back(p * z[i] * std::conj(z[j]));
                out.push_back(p * std::conj(z[i]) * z[j]);
            }
        }
    }
    return out;
}

namespace {

double matrix_scale(const Matrix& m) {
    double scale = 0.0;
    for (const auto& s : m.data) scale = std::max(scale, std::abs(s.to_complex()));
    return scale == 0.0 ? 1.0 : scale;
}

} // namespace

FrameOperatorReport frame_operator(const Frame& f, const Tolerance& tol) {
    validate_frame(f);
    FrameOperatorReport rep;
    rep.S = Matrix(f.n, f.n);
    const Scalar zero = f.mode.exact ? Scalar(0) : Scalar::real_float(0.0);
    for (auto& s : rep.S.data) s = zero;
    for (const auto& v : f.vectors) {
        for (int a = 0; a < f.n; ++a) {
            for (int b = 0; b < f.n; ++b) {
                const Scalar term = (f.field == Field::Real) ? v[a] * v[b]
                                                             : v[a] * v[b].conjugate();
                rep.S.at(a, b) += term;
            }
        }
    }
    const double scale = f.mode.exact ? 1.0 : matrix_scale(rep.S);
    bool tight = true;
    const Scalar lambda = rep.S.at(0, 0);
    for (int a = 0; a < f.n && tight; ++a) {
        for (int b = 0; b < f.n && tight; ++b) {
            if (a == b) {
                if (!scalar_is_zero(rep.S.at(a, a) - lambda, tol, scale)) tight = false;
            } else if (!scalar_is_zero(rep.S.at(a, b), tol, scale)) {
                tight = false;
            }
        }
    }
    rep.is_tight = tight;
    if (tight) rep.tight_bound = lambda;
    return rep;
}

bool subset_is_tight(const Frame& f, std::uint64_t subset_mask, const Tolerance& tol) {
    validate_frame(f);
    if (subset_mask == 0) throw ValidationError("subset_is_tight: empty subset");
    if (subset_mask >> f.k()) throw ValidationError("subset_is_tight: index beyond k");
    bool all_zero = true;
    for (int i = 0; i < f.k(); ++i)
        if ((subset_mask >> i & 1) && !is_zero_vector(f, i, tol)) { all_zero = false; break; }
    if (all_zero)
        throw ZeroVectorError("subset_is_tight: all selected vectors are zero; "
                              "tightness criterion requires a nonzero vector");

    const int m = pair_count(f.n);
    std::vector<Scalar> sum(2 * m, f.mode.exact ? Scalar(0) : Scalar::real_float(0.0));
    double scale = 0.0;
    for (int i = 0; i < f.k(); ++i) {
        if (!(subset_mask >> i & 1)) continue;
        const ReducedDiagramVector d = diagram_vector(f, i);
        for (int c = 0; c < 2 * m; ++c) {
            sum[c] += d.coord(c);
            if (!f.mode.exact) scale = std::max(scale, std::abs(d.coord(c).to_complex()));
        }
    }
    if (scale == 0.0) scale = 1.0;
    for (const auto& s : sum)
        if (!scalar_is_zero(s, tol, scale)) return false;
    return true;
}

namespace {

Matrix synthesis_matrix(const Frame& f) {
    Matrix m(f.n, f.k());
    for (int c = 0; c < f.k(); ++c)
        for (int r = 0; r < f.n; ++r) m.at(r, c) = f.vectors[c][r];
    return m;
}

// Rank of a float matrix by Gaussian elimination with partial pivoting and a
// tolerance threshold relative to the largest entry.
int rank_float(const Frame& f, const std::vector<int>& cols, const Tolerance& tol) {
    const int n = f.n, m = static_cast<int>(cols.size());
    std::vector<std::vector<std::complex<double>>> a(n, std::vector<std::complex<double>>(m));
    double scale = 0.0;
    for (int c = 0; c < m; ++c) {
        for (int r = 0; r < n; ++r) {
            a[r][c] = f.vectors[cols[c]][r].to_complex();
            scale = std::max(scale, std::abs(a[r][c]));
        }
    }
    const double thresh = std::max(tol.absolute, tol.relative * (scale == 0.0 ? 1.0 : scale));
    int rank = 0;
    for (int c = 0; c < m && rank < n; ++c) {
        int piv = -1;
        double best = thresh;
        for (int r = rank; r < n; ++r) {
            if (std::abs(a[r][c]) > best) { best = std::abs(a[r][c]); piv = r; }
        }
        if (piv < 0) continue;
        std::swap(a[piv], a[rank]);
        for (int r = rank + 1; r < n; ++r) {
            const std::complex<double> fct = a[r][c] / a[rank][c];
            for (int cc = c; cc < m; ++cc) a[r][cc] -= fct * a[rank][cc];
        }
        ++rank;
    }
    return rank;
}

int subset_rank(const Frame& f, const std::vector<int>& cols, const Tolerance& tol) {
    if (!f.mode.exact) return rank_float(f, cols, tol);
    Matrix m(f.n, static_cast<int>(cols.size()));
    for (int c = 0; c < m.cols; ++c)
        for (int r = 0; r < f.n; ++r) m.at(r, c) = f.vectors[cols[c]][r];
    return rank_exact(m);
}

} // namespace

bool spans_space(const Frame& f, const Tolerance& tol) {
    validate_frame(f);
    std::vector<int> all(f.k());
    for (int i = 0; i < f.k(); ++i) all[i] = i;
    if (f.mode.exact) return rank_exact(synthesis_matrix(f)) == f.n;
    return subset_rank(f, all, tol) == f.n;
}

int spark(const Frame& f, const Tolerance& tol) {
    if (!spans_space(f, tol)) throw ValidationError("spark requires a spanning input");
    const int k = f.k();
    const int max_size = std::min(k, f.n);
    std::vector<int> idx;
    for (int m = 1; m <= max_size; ++m) {
        // All m-subsets, lexicographic.
        idx.assign(m, 0);
        for (int i = 0; i < m; ++i) idx[i] = i;
        while (true) {
            if (subset_rank(f, idx, tol) < m) return m;
            int pos = m - 1;
            while (pos >= 0 && idx[pos] == k - m + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < m; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return f.n + 1;
}

bool is_full_spark(const Frame& f, const Tolerance& tol) {
    return spark(f, tol) == f.n + 1;
}

Frame to_float_frame(const Frame& f) {
    if (!f.mode.exact) return f;
    Frame out = f;
    out.mode = ScalarMode::float_mode();
    for (auto& v : out.vectors) {
        for (auto& s : v) {
            s = (f.field == Field::Real) ? Scalar::real_float(s.to_double())
                                         : Scalar::complex_float(s.to_complex());
        }
    }
    return out;
}

} // namespace frameposet
