#include "frameposet/scalability.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "frameposet/rng.hpp"

namespace frameposet {

namespace {

void require_real(const Frame& f, const char* who) {
    if (f.field != Field::Real) {
        std::ostringstream os;
        os << who << ": scalability analysis covers real unit-norm frames only";
        throw ValidationError(os.str());
    }
}

std::vector<std::pair<int, int>> upper_pairs(int n) {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) out.push_back({a, b});
    return out;
}

Matrix equality_matrix(const Frame& f, std::vector<Scalar>& rhs) {
    const auto pairs = upper_pairs(f.n);
    Matrix m(static_cast<int>(pairs.size()), f.k());
    rhs.clear();
    const Scalar one = f.mode.exact ? Scalar(1) : Scalar::real_float(1.0);
    const Scalar zero = f.mode.exact ? Scalar(0) : Scalar::real_float(0.0);
    for (size_t r = 0; r < pairs.size(); ++r) {
        const auto [a, b] = pairs[r];
        for (int i = 0; i < f.k(); ++i)
            m.at(static_cast<int>(r), i) = f.vectors[i][a] * f.vectors[i][b];
        rhs.push_back(a == b ? one : zero);
    }
    return m;
}

IndexSet support_of(const std::vector<Scalar>& w, const Tolerance& tol) {
    IndexSet s = 0;
    for (size_t i = 0; i < w.size(); ++i)
        if (!scalar_is_zero(w[i], tol)) s |= IndexSet(1) << i;
    return s;
}

// Float-mode least-squares-free exact-shape solve: Gauss elimination with
// partial pivoting on the (rows x cols) system; reports success only for a
// consistent full-column-rank system.
bool solve_float(const Matrix& a, const std::vector<Scalar>& rhs,
                 const std::vector<int>& cols, std::vector<double>& out,
                 const Tolerance& tol) {
    const int rows = a.rows, m = static_cast<int>(cols.size());
    std::vector<std::vector<double>> t(rows, std::vector<double>(m + 1, 0.0));
    double scale = 0.0;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < m; ++c) {
            t[r][c] = a.at(r, cols[c]).to_double();
            scale = std::max(scale, std::abs(t[r][c]));
        }
        t[r][m] = rhs[r].to_double();
    }
    const double thresh = std::max(tol.absolute, tol.relative * (scale == 0.0 ? 1.0 : scale));
    std::vector<int> pivot_of_col(m, -1);
    int rank = 0;
    for (int c = 0; c < m && rank < rows; ++c) {
        int piv = -1;
        double best = thresh;
        for (int r = rank; r < rows; ++r)
            if (std::abs(t[r][c]) > best) { best = std::abs(t[r][c]); piv = r; }
        if (piv < 0) continue;
        std::swap(t[piv], t[rank]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || t[r][c] == 0.0) continue;
            const double f = t[r][c] / t[rank][c];
            for (int cc = c; cc <= m; ++cc) t[r][cc] -= f * t[rank][cc];
        }
        pivot_of_col[c] = rank;
        ++rank;
    }
    if (rank < m) return false;  // dependent columns: not a basic solution
    for (int r = rank; r < rows; ++r)
        if (std::abs(t[r][m]) > thresh) return false;  // inconsistent
    out.assign(m, 0.0);
    for (int c = 0; c < m; ++c) out[c] = t[pivot_of_col[c]][m] / t[pivot_of_col[c]][c];
    return true;
}

} // namespace

std::vector<IndexSet> ScalingPolytope::supports() const {
    std::vector<IndexSet> out;
    for (const auto& v : minimal) out.push_back(support_of(v, Tolerance{}));
    return out;
}

bool is_unit_norm(const Frame& f, const Tolerance& tol) {
    validate_frame(f);
    require_real(f, "is_unit_norm");
    const Scalar one = f.mode.exact ? Scalar(1) : Scalar::real_float(1.0);
    for (const auto& v : f.vectors) {
        Scalar s = f.mode.exact ? Scalar(0) : Scalar::real_float(0.0);
        for (const auto& x : v) s += x * x;
        if (!scalar_is_zero(s - one, tol)) return false;
    }
    return true;
}

ScalingPolytope minimal_scalings(const Frame& f, const ScalabilityOptions& opts) {
    validate_frame(f);
    require_real(f, "minimal_scalings");
    if (!is_unit_norm(f, opts.tol))
        throw ValidationError("minimal_scalings: frame is not unit-norm");
    const int k = f.k();
    if (k > opts.k_limit) {
        std::ostringstream os;
        os << "minimal_scalings: k=" << k << " exceeds the configured limit " << opts.k_limit;
        throw ResourceCapError(os.str());
    }

    ScalingPolytope out;
    out.equality = equality_matrix(f, out.rhs);
    const int max_support = std::min(k, out.equality.rows);

    std::vector<IndexSet> masks;
    for (IndexSet m = 1; m <= full_set(k); ++m) {
        const int sz = set_size(m);
        if (sz >= f.n && sz <= max_support) masks.push_back(m);
    }
    std::sort(masks.begin(), masks.end(), set_less);  // smaller supports first

    std::vector<IndexSet> kept;
    for (IndexSet mask : masks) {
        bool dominated = false;
        for (IndexSet s : kept)
            if ((s & mask) == s) { dominated = true; break; }
        if (dominated) continue;

        const auto idx = set_indices(mask);
        std::vector<int> cols;
        for (int i : idx) cols.push_back(i - 1);

        std::vector<Scalar> w(k, f.mode.exact ? Scalar(0) : Scalar::real_float(0.0));
        bool ok = false;
        if (f.mode.exact) {
            Matrix sub(out.equality.rows, static_cast<int>(cols.size()));
            for (int r = 0; r < sub.rows; ++r)
                for (size_t c = 0; c < cols.size(); ++c)
                    sub.at(r, static_cast<int>(c)) = out.equality.at(r, cols[c]);
            const LinearSolution sol = solve_linear_system_exact(sub, out.rhs);
            if (sol.status == SolveStatus::Unique) {
                ok = true;
                for (size_t c = 0; c < cols.size(); ++c) {
                    if (sol.particular[c].sign() <= 0) { ok = false; break; }
                    w[cols[c]] = sol.particular[c];
                }
            }
        } else {
            std::vector<double> sol;
            if (solve_float(out.equality, out.rhs, cols, sol, opts.tol)) {
                ok = true;
                const double thresh = std::max(opts.tol.absolute, opts.tol.relative);
                for (size_t c = 0; c < cols.size(); ++c) {
                    if (sol[c] <= thresh) { ok = false; break; }
                    w[cols[c]] = Scalar::real_float(sol[c]);
                }
            }
        }
        if (!ok) continue;
        kept.push_back(mask);
        out.minimal.push_back(std::move(w));
    }
    return out;
}

Poset scalability_poset(const Frame& f, const ScalabilityOptions& opts) {
    const ScalingPolytope poly = minimal_scalings(f, opts);
    const auto supports = poly.supports();
    std::vector<IndexSet> sets;
    for (IndexSet j = 1; j <= full_set(f.k()); ++j) {
        for (IndexSet s : supports) {
            if ((s & j) == s) {
                sets.push_back(j);
                break;
            }
        }
    }
    return make_poset(f.k(), std::move(sets));
}

void require_feasible_scaling(const Frame& f, const std::vector<Scalar>& w,
                              const Tolerance& tol) {
    if (static_cast<int>(w.size()) != f.k())
        throw ValidationError("scaling length differs from the vector count");
    for (const auto& x : w)
        if (!scalar_is_zero(x, tol) && x.sign() < 0)
            throw ValidationError("scaling has a negative entry");
    std::vector<Scalar> rhs;
    const Matrix eq = equality_matrix(f, rhs);
    double scale = 0.0;
    if (!f.mode.exact)
        for (const auto& s : eq.data) scale = std::max(scale, std::abs(s.to_double()));
    for (int r = 0; r < eq.rows; ++r) {
        Scalar s = f.mode.exact ? Scalar(0) : Scalar::real_float(0.0);
        for (int c = 0; c < eq.cols; ++c) s += eq.at(r, c) * w[c];
        if (!scalar_is_zero(s - rhs[r], tol, scale == 0.0 ? 1.0 : scale))
            throw ValidationError("infeasible scaling: equality system violated");
    }
}

ClassifyResult classify_scaling(const Frame& f, const std::vector<Scalar>& w,
                                const ScalabilityOptions& opts) {
    validate_frame(f);
    require_real(f, "classify_scaling");
    require_feasible_scaling(f, w, opts.tol);

    const IndexSet supp = support_of(w, opts.tol);
    if (supp == 0) throw ValidationError("classify_scaling: zero scaling");
    const auto diags = diagram_vectors(f);
    const int coords = 2 * pair_count(f.n);

    // Scaled diagram vectors w_i * diag(f_i): the diagram map is quadratic,
    // so scaling a vector by sqrt(w) scales its diagram vector by w.
    std::vector<std::vector<Scalar>> sd(f.k());
    double scale = 0.0;
    for (int i = 0; i < f.k(); ++i) {
        if (!(supp >> i & 1)) continue;
        sd[i].resize(coords);
        for (int c = 0; c < coords; ++c) {
            sd[i][c] = w[i] * diags[i].coord(c);
            if (!f.mode.exact) scale = std::max(scale, std::abs(sd[i][c].to_double()));
        }
    }
    if (scale == 0.0) scale = 1.0;

    ClassifyResult res;
    std::vector<Scalar> acc(coords);
    for (IndexSet j = (supp - 1) & supp; j != 0; j = (j - 1) & supp) {
        for (int c = 0; c < coords; ++c)
            acc[c] = f.mode.exact ? Scalar(0) : Scalar::real_float(0.0);
        IndexSet m = j;
        while (m) {
            const int i = std::countr_zero(m);
            for (int c = 0; c < coords; ++c) acc[c] += sd[i][c];
            m &= m - 1;
        }
        bool zero = true;
        for (int c = 0; c < coords; ++c)
            if (!scalar_is_zero(acc[c], opts.tol, scale)) { zero = false; break; }
        if (zero) {
            res.prime = false;
            res.tight_witness = j;
            break;
        }
    }

    if (f.mode.exact) {
        const bool partitioned = exists_orthogonal_partition(f, w, opts);
        if (partitioned == res.prime)
            throw Error("classify_scaling: direct search and orthogonal-partition "
                        "characterization disagree");
    }
    return res;
}

bool exists_orthogonal_partition(const Frame& f, const std::vector<Scalar>& w,
                                 const ScalabilityOptions& opts) {
    validate_frame(f);
    require_real(f, "exists_orthogonal_partition");
    if (!f.mode.exact)
        throw ValidationError("exists_orthogonal_partition: exact mode only");
    require_feasible_scaling(f, w, opts.tol);

    const ScalingPolytope poly = minimal_scalings(f, opts);
    const auto supports = poly.supports();
    const IndexSet supp = support_of(w, opts.tol);

    // Only minimal scalings supported inside supp(w) can appear in a
    // representation of w.
    std::vector<int> usable;
    for (int i = 0; i < poly.m(); ++i)
        if ((supports[i] & supp) == supports[i]) usable.push_back(i);
    const int mu = static_cast<int>(usable.size());
    if (mu < 2) return false;

    const Scalar n_scalar(f.n);
    auto side_feasible = [&](const std::vector<int>& side, IndexSet side_supp) {
        // w restricted to side_supp, rescaled to a Parseval scaling, must be
        // a nonnegative combination of the side's minimal scalings.
        Scalar total(0);
        for (int i = 0; i < f.k(); ++i)
            if (side_supp >> i & 1) total += w[i];
        if (total.is_zero()) return false;
        Matrix a(f.k(), static_cast<int>(side.size()));
        std::vector<Scalar> b(f.k(), Scalar(0));
        for (size_t c = 0; c < side.size(); ++c)
            for (int r = 0; r < f.k(); ++r) a.at(r, static_cast<int>(c)) = poly.minimal[side[c]][r];
        for (int r = 0; r < f.k(); ++r)
            if (side_supp >> r & 1) b[r] = w[r] * n_scalar / total;
        return nonneg_solution_exists(a, b);
    };

    for (std::uint32_t pick = 1; pick + 1 < (1u << mu); ++pick) {
        IndexSet u = 0;
        std::vector<int> cside;
        for (int t = 0; t < mu; ++t)
            if (pick >> t & 1) {
                cside.push_back(usable[t]);
                u |= supports[usable[t]];
            }
        // Canonical representative: the side must already contain every
        // usable scaling supported inside its union.
        bool canonical = true;
        std::vector<int> dside;
        for (int t = 0; t < mu; ++t) {
            const IndexSet s = supports[usable[t]];
            const bool in_pick = (pick >> t) & 1;
            if (!in_pick && (s & u) == s) { canonical = false; break; }
            if (!in_pick && (s & u) == 0) dside.push_back(usable[t]);
        }
        if (!canonical || dside.empty()) continue;
        const IndexSet u2 = supp & ~u;
        if ((supp & u) == 0 || u2 == 0) continue;
        if (side_feasible(cside, supp & u) && side_feasible(dside, u2)) return true;
    }
    return false;
}

namespace {

bool supports_graph_connected(const std::vector<IndexSet>& supports) {
    const int m = static_cast<int>(supports.size());
    if (m == 0) return true;
    std::vector<int> comp(m, -1);
    std::vector<int> stack{0};
    comp[0] = 0;
    while (!stack.empty()) {
        const int cur = stack.back();
        stack.pop_back();
        for (int j = 0; j < m; ++j) {
            if (comp[j] < 0 && (supports[cur] & supports[j]) != 0) {
                comp[j] = 0;
                stack.push_back(j);
            }
        }
    }
    return std::none_of(comp.begin(), comp.end(), [](int c) { return c < 0; });
}

} // namespace

PrimeStrictResult has_prime_strict_scaling(const Frame& f, const ScalabilityOptions& opts) {
    const ScalingPolytope poly = minimal_scalings(f, opts);
    const auto supports = poly.supports();
    IndexSet covered = 0;
    for (IndexSet s : supports) covered |= s;
    if (covered != full_set(f.k()))
        throw NoStrictScalingError("has_prime_strict_scaling: no strict scaling exists "
                                   "(some index lies outside every minimal-scaling support)");
    if (!supports_graph_connected(supports)) return {false, {}};

    // Connected support graph: a generic convex combination is prime. Try
    // deterministic coefficient patterns, then seeded draws, verifying
    // primality by the direct subset search each time.
    const int m = poly.m();
    auto try_coeffs = [&](const std::vector<long long>& c) -> std::optional<std::vector<Scalar>> {
        long long total = 0;
        for (long long x : c) total += x;
        std::vector<Scalar> w(f.k(), Scalar(0));
        for (int i = 0; i < m; ++i) {
            const Scalar alpha{Rational(c[i]) / Rational(total)};
            for (int r = 0; r < f.k(); ++r) w[r] += alpha * poly.minimal[i][r];
        }
        ScalabilityOptions o2 = opts;
        if (classify_scaling(f, w, o2).prime) return w;
        return std::nullopt;
    };

    std::vector<std::vector<long long>> patterns;
    {
        std::vector<long long> ramp(m), pow2(m), sq(m);
        for (int i = 0; i < m; ++i) {
            ramp[i] = i + 1;
            pow2[i] = 1LL << std::min(i, 40);
            sq[i] = static_cast<long long>(i + 1) * (i + 1);
        }
        patterns = {ramp, pow2, sq};
    }
    for (const auto& c : patterns)
        if (auto w = try_coeffs(c)) return {true, *w};
    DeterministicRng rng(0x5ca1ab1e);
    for (int t = 0; t < 64; ++t) {
        std::vector<long long> c(m);
        for (auto& x : c) x = rng.uniform_int(1, 64);
        if (auto w = try_coeffs(c)) return {true, *w};
    }
    throw Error("has_prime_strict_scaling: connected support graph but no prime "
                "witness found in 67 attempts");
}

Poset scaled_factor_poset(const Frame& f, const std::vector<Scalar>& w,
                          const Tolerance& tol) {
    validate_frame(f);
    require_real(f, "scaled_factor_poset");
    if (static_cast<int>(w.size()) != f.k())
        throw ValidationError("scaling length differs from the vector count");
    const IndexSet supp = support_of(w, tol);
    if (supp == 0) throw ValidationError("scaled_factor_poset: zero scaling");
    const auto diags = diagram_vectors(f);
    const int coords = 2 * pair_count(f.n);
    std::vector<IndexSet> zeros;
    std::vector<Scalar> acc(coords);
    for (IndexSet j = supp; j != 0; j = (j - 1) & supp) {
        for (int c = 0; c < coords; ++c)
            acc[c] = f.mode.exact ? Scalar(0) : Scalar::real_float(0.0);
        IndexSet m = j;
        while (m) {
            const int i = std::countr_zero(m);
            for (int c = 0; c < coords; ++c) acc[c] += w[i] * diags[i].coord(c);
            m &= m - 1;
        }
        bool zero = true;
        for (int c = 0; c < coords; ++c)
            if (!scalar_is_zero(acc[c], tol)) { zero = false; break; }
        if (zero) zeros.push_back(j);
    }
    return make_poset(f.k(), std::move(zeros));
}

std::optional<std::vector<Scalar>> find_strict_scaling_with_factor_poset(
    const Frame& f, const Poset& p, int denominator_cap,
    const ScalabilityOptions& opts) {
    if (p.k != f.k())
        throw ValidationError("find_strict_scaling_with_factor_poset: poset index "
                              "count differs from the frame");
    const ScalingPolytope poly = minimal_scalings(f, opts);
    const int m = poly.m();
    if (m == 0) return std::nullopt;
    std::vector<long long> c(m, 0);
    for (int denom = 1; denom <= denominator_cap; ++denom) {
        // Compositions of denom into m nonnegative parts.
        auto scan = [&](auto&& self, int pos, long long remaining) -> std::optional<std::vector<Scalar>> {
            if (pos == m - 1) {
                c[pos] = remaining;
                std::vector<Scalar> w(f.k(), Scalar(0));
                for (int i = 0; i < m; ++i) {
                    if (c[i] == 0) continue;
                    const Scalar alpha{Rational(c[i]) / Rational(denom)};
                    for (int r = 0; r < f.k(); ++r) w[r] += alpha * poly.minimal[i][r];
                }
                bool strict = true;
                for (const auto& x : w)
                    if (x.is_zero()) { strict = false; break; }
                if (strict && scaled_factor_poset(f, w, opts.tol) == p) return w;
                return std::nullopt;
            }
            for (long long v = 0; v <= remaining; ++v) {
                c[pos] = v;
                if (auto hit = self(self, pos + 1, remaining - v)) return hit;
            }
            return std::nullopt;
        };
        if (auto hit = scan(scan, 0, denom)) return hit;
    }
    return std::nullopt;
}

bool prime_support_sufficient(const Frame& f, IndexSet a, const ScalabilityOptions& opts) {
    const ScalingPolytope poly = minimal_scalings(f, opts);
    const auto supports = poly.supports();
    std::vector<IndexSet> inside;
    for (IndexSet s : supports)
        if ((s & a) == s) inside.push_back(s);
    if (inside.empty())
        throw ValidationError("prime_support_sufficient: A is not in the scalability poset");
    if (!supports_graph_connected(inside)) return false;
    for (size_t j = 0; j < inside.size(); ++j) {
        IndexSet others = 0;
        for (size_t l = 0; l < inside.size(); ++l)
            if (l != j) others |= inside[l];
        if ((inside[j] & others) == inside[j]) return false;  // covered by the rest
    }
    return true;
}

} // namespace frameposet
