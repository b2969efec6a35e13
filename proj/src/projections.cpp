#include "frameposet/projections.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "frameposet/rng.hpp"

namespace frameposet {

namespace {

Eigen::MatrixXcd synthesis_complex(const Frame& f) {
    Eigen::MatrixXcd m(f.n, f.k());
    for (int c = 0; c < f.k(); ++c)
        for (int r = 0; r < f.n; ++r) m(r, c) = f.vectors[c][r].to_complex();
    return m;
}

Eigen::MatrixXcd frame_operator_complex(const Frame& f) {
    const Eigen::MatrixXcd t = synthesis_complex(f);
    return t * t.adjoint();
}

struct EigenSystem {
    std::vector<double> values;               // descending
    std::vector<Eigen::VectorXcd> vectors;    // matching order
};

EigenSystem eigensystem(const Frame& f) {
    const Eigen::MatrixXcd s = frame_operator_complex(f);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(s);
    if (es.info() != Eigen::Success) throw Error("eigendecomposition failed");
    EigenSystem out;
    const int n = f.n;
    for (int i = n - 1; i >= 0; --i) {  // Eigen returns ascending order
        out.values.push_back(es.eigenvalues()(i));
        out.vectors.push_back(es.eigenvectors().col(i));
    }
    return out;
}

double vector_norm(const std::vector<std::complex<double>>& x) {
    double s = 0.0;
    for (const auto& z : x) s += std::norm(z);
    return std::sqrt(s);
}

std::vector<std::complex<double>> to_std(const Eigen::VectorXcd& v) {
    std::vector<std::complex<double>> out(v.size());
    for (int i = 0; i < v.size(); ++i) out[i] = v(i);
    return out;
}

std::vector<std::complex<double>> widen(const std::vector<double>& x) {
    return std::vector<std::complex<double>>(x.begin(), x.end());
}

} // namespace

double lambda_f(const Frame& f, const std::vector<std::complex<double>>& x,
                const Tolerance& tol) {
    validate_frame(f);
    if (static_cast<int>(x.size()) != f.n)
        throw ValidationError("lambda_f: vector length differs from dimension");
    const double nrm = vector_norm(x);
    if (std::abs(nrm - 1.0) > std::max(tol.absolute, tol.relative))
        throw ValidationError("lambda_f: x must be a unit vector");
    const Eigen::MatrixXcd s = frame_operator_complex(f);
    Eigen::VectorXcd xv(f.n);
    for (int i = 0; i < f.n; ++i) xv(i) = x[i];
    return (xv.adjoint() * s * xv)(0, 0).real();
}

double lambda_f(const Frame& f, const std::vector<double>& x, const Tolerance& tol) {
    return lambda_f(f, widen(x), tol);
}

std::vector<double> frame_operator_eigenvalues(const Frame& f) {
    validate_frame(f);
    return eigensystem(f).values;
}

Frame project_frame(const Frame& f, const std::vector<std::complex<double>>& normal,
                    const Tolerance& tol) {
    validate_frame(f);
    if (f.n < 2) throw ValidationError("project_frame: dimension must be >= 2");
    if (static_cast<int>(normal.size()) != f.n)
        throw ValidationError("project_frame: normal length differs from dimension");
    const double nrm = vector_norm(normal);
    if (nrm <= tol.absolute) throw ValidationError("project_frame: zero normal");

    std::vector<std::complex<double>> q(normal);
    for (auto& z : q) z /= nrm;

    // Pivot = first coordinate of largest modulus; basis from the remaining
    // coordinate vectors by Gram-Schmidt.
    int pivot = 0;
    for (int i = 1; i < f.n; ++i)
        if (std::abs(q[i]) > std::abs(q[pivot])) pivot = i;

    std::vector<std::vector<std::complex<double>>> basis;
    for (int j = 0; j < f.n; ++j) {
        if (j == pivot) continue;
        std::vector<std::complex<double>> u(f.n, 0.0);
        u[j] = 1.0;
        // <u, q> q with <a,b> = sum a conj(b)
        std::complex<double> dq = 0.0;
        for (int i = 0; i < f.n; ++i) dq += u[i] * std::conj(q[i]);
        for (int i = 0; i < f.n; ++i) u[i] -= dq * q[i];
        for (const auto& b : basis) {
            std::complex<double> d = 0.0;
            for (int i = 0; i < f.n; ++i) d += u[i] * std::conj(b[i]);
            for (int i = 0; i < f.n; ++i) u[i] -= d * b[i];
        }
        const double un = vector_norm(u);
        if (un <= 1e-12) throw Error("project_frame: basis construction degenerated");
        for (auto& z : u) z /= un;
        basis.push_back(std::move(u));
    }

    Frame out;
    out.field = f.field;
    out.n = f.n - 1;
    out.mode = ScalarMode::float_mode();
    for (int c = 0; c < f.k(); ++c) {
        std::vector<Scalar> g(out.n);
        for (int t = 0; t < out.n; ++t) {
            std::complex<double> coef = 0.0;
            for (int i = 0; i < f.n; ++i)
                coef += f.vectors[c][i].to_complex() * std::conj(basis[t][i]);
            g[t] = (f.field == Field::Real) ? Scalar::real_float(coef.real())
                                            : Scalar::complex_float(coef);
        }
        out.vectors.push_back(std::move(g));
    }
    return out;
}

Frame project_frame(const Frame& f, const std::vector<double>& normal, const Tolerance& tol) {
    return project_frame(f, widen(normal), tol);
}

namespace {

bool projection_is_tight(const Frame& f, const std::vector<std::complex<double>>& normal,
                         double expected_bound, const Tolerance& tol) {
    const Frame proj = project_frame(f, normal, tol);
    const FrameOperatorReport rep = frame_operator(proj, tol);
    if (!rep.is_tight) return false;
    const double bound = rep.tight_bound->to_double();
    const double scale = std::max(1.0, std::abs(expected_bound));
    return std::abs(bound - expected_bound) <= std::max(tol.absolute, tol.relative * scale);
}

} // namespace

ProjectionReport find_tight_projections(const Frame& f, const Tolerance& tol) {
    validate_frame(f);
    if (f.n < 3) throw ValidationError("find_tight_projections: requires dimension >= 3");
    const EigenSystem es = eigensystem(f);
    ProjectionReport rep;
    rep.eigenvalues = es.values;
    const int n = f.n;
    const double scale = std::max(std::abs(es.values.front()), 1.0);
    const double eq_tol = 1e-7 * scale;

    if (es.values.front() - es.values.back() <= eq_tol) {
        rep.tag = ProjectionReport::Case::AllTight;
        rep.tight_bound = es.values.front();
        return rep;
    }
    if (n >= 4 && es.values[1] - es.values[n - 2] > eq_tol) {
        rep.tag = ProjectionReport::Case::None;
        if (es.values[1] - es.values[n - 2] <= 1e-5 * scale)
            rep.warning = "middle eigenvalues split just above the 1e-7 equality tolerance";
        return rep;
    }
    double lambda = 0.0;
    for (int i = 1; i <= n - 2; ++i) lambda += es.values[i];
    lambda /= (n - 2);
    const double a = es.values[0] - lambda;
    const double b = lambda - es.values[n - 1];
    rep.tight_bound = lambda;

    const Eigen::VectorXcd& eta1 = es.vectors.front();
    const Eigen::VectorXcd& etan = es.vectors.back();

    auto push_verified_normal = [&](const Eigen::VectorXcd& nu) {
        auto v = to_std(nu);
        if (!projection_is_tight(f, v, lambda, tol))
            throw Error("find_tight_projections: derived normal failed re-verification");
        rep.normals.push_back(std::move(v));
    };

    if (a <= eq_tol && b <= eq_tol) {  // numerically tight after all
        rep.tag = ProjectionReport::Case::AllTight;
        return rep;
    }
    if (a > eq_tol && b > eq_tol) {
        if (f.field == Field::Complex) {
            rep.tag = ProjectionReport::Case::ComplexFamily;
            rep.family_basis.push_back(to_std(eta1));
            rep.family_basis.push_back(to_std(etan));
            // Sampled members of the circle re-verified for sanity.
            for (double delta : {0.0, M_PI / 2, M_PI}) {
                const std::complex<double> phase(std::cos(-delta), std::sin(-delta));
                Eigen::VectorXcd nu =
                    (std::sqrt(a) * eta1 - phase * std::sqrt(b) * etan) / std::sqrt(a + b);
                if (!projection_is_tight(f, to_std(nu), lambda, tol))
                    throw Error("find_tight_projections: family member failed re-verification");
            }
            return rep;
        }
        rep.tag = ProjectionReport::Case::TwoTightSubspaces;
        push_verified_normal((std::sqrt(a) * eta1 - std::sqrt(b) * etan) / std::sqrt(a + b));
        push_verified_normal((std::sqrt(a) * eta1 + std::sqrt(b) * etan) / std::sqrt(a + b));
        return rep;
    }
    rep.tag = ProjectionReport::Case::OneTightSubspace;
    push_verified_normal(a > eq_tol ? eta1 : etan);
    return rep;
}

Frame reduce_dimension_preserving_poset(const Frame& f, int target, std::uint64_t seed,
                                        const ReduceOptions& opts) {
    validate_frame(f);
    if (target < 2 || target > f.n)
        throw ValidationError("reduce_dimension_preserving_poset: need 2 <= target <= n");
    FactorPosetOptions fp;
    fp.tol = opts.tol;
    const Poset base = factor_poset(f, fp);
    Frame cur = to_float_frame(f);
    DeterministicRng rng(seed);
    while (cur.n > target) {
        bool stepped = false;
        for (int attempt = 0; attempt < opts.attempts_per_step; ++attempt) {
            std::vector<std::complex<double>> normal;
            if (f.field == Field::Real) {
                normal = widen(rng.unit_vector(cur.n));
            } else {
                normal.resize(cur.n);
                double nrm = 0.0;
                for (auto& z : normal) {
                    z = {rng.gauss(), rng.gauss()};
                    nrm += std::norm(z);
                }
                nrm = std::sqrt(nrm);
                for (auto& z : normal) z /= nrm;
            }
            Frame proj;
            try {
                proj = project_frame(cur, normal, opts.tol);
                if (factor_poset(proj, fp) == base) {
                    cur = std::move(proj);
                    stepped = true;
                    break;
                }
            } catch (const ZeroVectorError&) {
                // a vector collapsed onto the normal; resample
            }
        }
        if (!stepped) {
            std::ostringstream os;
            os << "reduce_dimension_preserving_poset: " << opts.attempts_per_step
               << " attempts exhausted at dimension " << cur.n
               << " (a tolerance misconfiguration is the likely cause)";
            throw ResourceCapError(os.str());
        }
    }
    return cur;
}

bool interlacing_check(const Frame& f, const std::vector<double>& normal,
                       const Tolerance& tol) {
    const std::vector<double> lam = frame_operator_eigenvalues(f);
    const Frame proj = project_frame(f, normal, tol);
    const std::vector<double> mu = frame_operator_eigenvalues(proj);
    const double scale = std::max(std::abs(lam.front()), 1.0);
    const double slack = std::max(tol.absolute, tol.relative * scale);
    for (size_t i = 0; i < mu.size(); ++i) {
        if (lam[i] < mu[i] - slack) return false;
        if (mu[i] < lam[i + 1] - slack) return false;
    }
    return true;
}

int dimension_upper_bound(const Poset& p) {
    int best = -1;
    for (IndexSet s : p.sets) {
        if (s == 0) continue;
        const int sz = set_size(s);
        if (best < 0 || sz < best) best = sz;
    }
    if (best < 0)
        throw ValidationError("dimension_upper_bound: poset has no nonempty element");
    return best;
}

} // namespace frameposet
