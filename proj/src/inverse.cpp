#include "frameposet/inverse.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

#include "frameposet/rng.hpp"

namespace frameposet {

namespace {

Matrix index_vector_matrix(const Poset& p) {
    Matrix m(static_cast<int>(p.sets.size()), p.k);
    for (size_t r = 0; r < p.sets.size(); ++r)
        for (int c = 0; c < p.k; ++c)
            m.at(static_cast<int>(r), c) = Scalar((p.sets[r] >> c) & 1 ? 1 : 0);
    return m;
}

std::vector<Rational> scalar_row_to_rational(const Matrix& m, int row) {
    std::vector<Rational> out(m.cols);
    for (int c = 0; c < m.cols; ++c) out[c] = m.at(row, c).rational_value();
    return out;
}

void require_no_singletons(const Poset& p, const char* who) {
    for (IndexSet s : p.sets) {
        if (set_size(s) == 1) {
            std::ostringstream os;
            os << who << ": poset contains singleton " << set_label(s)
               << " (singletons correspond to zero vectors)";
            throw ValidationError(os.str());
        }
    }
}

// Complement basis with denominators cleared; [J] lies in the index span iff
// every cleared complement vector sums to zero over J.
std::vector<std::vector<long long>> cleared_complement(const IndexSpanBasis& span) {
    std::vector<std::vector<long long>> out;
    for (const auto& row : span.complement) {
        Int lcm = 1;
        for (const auto& q : row) lcm = boost::multiprecision::lcm(lcm, Int(denominator(q)));
        std::vector<long long> r(row.size());
        for (size_t i = 0; i < row.size(); ++i)
            r[i] = static_cast<long long>(Int(numerator(row[i]) * (lcm / denominator(row[i]))));
        out.push_back(std::move(r));
    }
    return out;
}

bool index_vector_in_span(const std::vector<std::vector<long long>>& comp, IndexSet j) {
    for (const auto& c : comp) {
        long long s = 0;
        IndexSet m = j;
        while (m) {
            const int i = std::countr_zero(m);
            s += c[i];
            m &= m - 1;
        }
        if (s != 0) return false;
    }
    return true;
}

} // namespace

IndexSpanBasis index_span(const Poset& p) {
    const Rref r = rref_exact(index_vector_matrix(p));
    IndexSpanBasis out;
    out.k = p.k;
    for (int i = 0; i < r.rank; ++i) out.basis.push_back(scalar_row_to_rational(r.mat, i));
    Matrix basis_m(r.rank, p.k);
    for (int i = 0; i < r.rank; ++i)
        for (int c = 0; c < p.k; ++c) basis_m.at(i, c) = r.mat.at(i, c);
    for (const auto& kv : kernel_basis_exact(basis_m)) {
        std::vector<Rational> row(p.k);
        for (int c = 0; c < p.k; ++c) row[c] = kv[c].rational_value();
        out.complement.push_back(std::move(row));
    }
    return out;
}

SpanClosedResult is_span_closed(const Poset& p) {
    require_no_singletons(p, "is_span_closed");
    if (p.k > 24) throw ResourceCapError("is_span_closed: k exceeds the 2^k scan limit 24");
    const auto comp = cleared_complement(index_span(p));
    const IndexSet all = full_set(p.k);
    for (IndexSet j = 1; j <= all; ++j) {
        if (p.contains(j)) continue;
        if (index_vector_in_span(comp, j)) return {false, j};
    }
    return {true, std::nullopt};
}

SpanClosureResult span_closure(const Poset& p) {
    if (p.k > 24) throw ResourceCapError("span_closure: k exceeds the 2^k scan limit 24");
    const auto comp = cleared_complement(index_span(p));
    std::vector<IndexSet> sets = p.sets;
    const IndexSet all = full_set(p.k);
    for (IndexSet j = 1; j <= all; ++j) {
        if (p.contains(j)) continue;
        if (index_vector_in_span(comp, j)) sets.push_back(j);
    }
    SpanClosureResult out{make_poset(p.k, std::move(sets)), {}};
    for (IndexSet s : out.poset.sets)
        if (set_size(s) == 1) out.singleton_indices.push_back(set_indices(s)[0]);
    return out;
}

long long witness_norm_bound(int k) {
    const double b = std::exp(0.5 * k * std::log(static_cast<double>(k)) -
                              (k - 1) * std::log(2.0));
    return static_cast<long long>(std::ceil(b - 1e-12));
}

namespace {

// Basis rows of the index span with denominators cleared, grouped by their
// last nonzero column so the witness DFS can prune as soon as an
// orthogonality constraint is fully determined.
struct SpanConstraints {
    int k = 0;
    std::vector<std::vector<long long>> rows;
    std::vector<std::vector<int>> rows_ending_at;  // per depth

    explicit SpanConstraints(const IndexSpanBasis& span) : k(span.k) {
        rows_ending_at.resize(k);
        for (const auto& row : span.basis) {
            Int lcm = 1;
            for (const auto& q : row) lcm = boost::multiprecision::lcm(lcm, Int(denominator(q)));
            std::vector<long long> r(row.size());
            int last = -1;
            for (size_t i = 0; i < row.size(); ++i) {
                r[i] = static_cast<long long>(Int(numerator(row[i]) * (lcm / denominator(row[i]))));
                if (r[i] != 0) last = static_cast<int>(i);
            }
            if (last < 0) continue;
            rows.push_back(std::move(r));
            rows_ending_at[last].push_back(static_cast<int>(rows.size()) - 1);
        }
    }
};

long long vec_gcd(const std::vector<long long>& v) {
    long long g = 0;
    for (long long x : v) g = std::gcd(g, std::llabs(x));
    return g;
}

// All integer vectors in the index-span complement with sup-norm <= r, no
// zero entries, gcd 1, in the deterministic order: entries scanned from +r
// down to -r (skipping 0), positions left to right.
std::vector<std::vector<long long>> complement_candidates(const SpanConstraints& sc,
                                                          long long r) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> v(sc.k, 0);
    auto dfs = [&](auto&& self, int depth) -> void {
        if (depth == sc.k) {
            if (vec_gcd(v) == 1) out.push_back(v);
            return;
        }
        for (long long val = r; val >= -r; --val) {
            if (val == 0) continue;
            v[depth] = val;
            bool ok = true;
            for (int ri : sc.rows_ending_at[depth]) {
                long long s = 0;
                for (int c = 0; c <= depth; ++c) s += sc.rows[ri][c] * v[c];
                if (s != 0) { ok = false; break; }
            }
            if (ok) self(self, depth + 1);
        }
        v[depth] = 0;
    };
    dfs(dfs, 0);
    return out;
}

std::vector<IndexSet> nonmembers(const Poset& p) {
    std::vector<IndexSet> out;
    const IndexSet all = full_set(p.k);
    for (IndexSet j = 1; j <= all; ++j)
        if (!p.contains(j)) out.push_back(j);
    return out;
}

// Non-member subsets on which the candidate's entries sum to zero.
std::vector<IndexSet> zero_nonmembers(const std::vector<long long>& v,
                                      const std::vector<IndexSet>& nonmem) {
    std::vector<IndexSet> out;
    for (IndexSet j : nonmem) {
        long long s = 0;
        IndexSet m = j;
        while (m) {
            s += v[std::countr_zero(m)];
            m &= m - 1;
        }
        if (s == 0) out.push_back(j);
    }
    return out;
}

long long sup_norm(const std::vector<long long>& v) {
    long long r = 0;
    for (long long x : v) r = std::max(r, std::llabs(x));
    return r;
}

bool disjoint_sorted(const std::vector<IndexSet>& a, const std::vector<IndexSet>& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j]) ++i;
        else ++j;
    }
    return true;
}

// Rays through (v_i, w_i) and (v_j, w_j) coincide iff the cross product
// vanishes and the dot product is positive.
bool has_positively_parallel_pair(const std::vector<long long>& v,
                                  const std::vector<long long>& w) {
    const int k = static_cast<int>(v.size());
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            const long long cross = v[i] * w[j] - v[j] * w[i];
            const long long dot = v[i] * v[j] + w[i] * w[j];
            if (cross == 0 && dot > 0) return true;
        }
    }
    return false;
}

Frame frame_from_single_row(const std::vector<long long>& v) {
    Frame f;
    f.field = Field::Real;
    f.n = 2;
    f.mode = ScalarMode::float_mode();
    for (long long x : v) {
        const double s = std::sqrt(static_cast<double>(std::llabs(x)));
        if (x > 0) f.vectors.push_back({Scalar::real_float(s), Scalar::real_float(0.0)});
        else f.vectors.push_back({Scalar::real_float(0.0), Scalar::real_float(s)});
    }
    return f;
}

Frame frame_from_diagram_rows(const std::vector<long long>& v,
                              const std::vector<long long>& w) {
    Frame f;
    f.field = Field::Real;
    f.n = 2;
    f.mode = ScalarMode::float_mode();
    for (size_t i = 0; i < v.size(); ++i) {
        const auto g = invert_diagram_vector_r2(static_cast<double>(v[i]),
                                                static_cast<double>(w[i]));
        f.vectors.push_back({Scalar::real_float(g[0]), Scalar::real_float(g[1])});
    }
    return f;
}

// Exact check that the subset-sum structure of the witness rows equals P.
void verify_witness_poset(const Poset& p, const std::vector<long long>& v,
                          const std::vector<long long>& w) {
    const IndexSet all = full_set(p.k);
    for (IndexSet j = 1; j <= all; ++j) {
        long long sv = 0, sw = 0;
        IndexSet m = j;
        while (m) {
            const int i = std::countr_zero(m);
            sv += v[i];
            if (!w.empty()) sw += w[i];
            m &= m - 1;
        }
        const bool zero = sv == 0 && sw == 0;
        if (zero != p.contains(j))
            throw Error("inverse witness failed the exact poset round-trip");
    }
}

long long effective_bound(const Poset& p, const InverseOptions& opts) {
    return opts.max_norm.value_or(witness_norm_bound(p.k));
}

} // namespace

std::vector<double> invert_diagram_vector_r2(double x, double y) {
    const double rho = std::hypot(x, y);
    if (rho == 0.0)
        throw ValidationError("invert_diagram_vector_r2: zero diagram vector has no "
                              "nonzero preimage");
    const double phi = std::atan2(y, x);
    const double s = std::sqrt(rho);
    return {s * std::cos(phi / 2.0), s * std::sin(phi / 2.0)};
}

InverseResult inverse_frame_r2(const Poset& p, const InverseOptions& opts) {
    const SpanClosedResult closed = is_span_closed(p);
    if (!closed.closed) {
        std::ostringstream os;
        os << "inverse_frame_r2: poset is not span-closed; [" << set_label(*closed.violating)
           << "] lies in the index span";
        throw ValidationError(os.str());
    }
    if (opts.rows != 1 && opts.rows != 2)
        throw ValidationError("inverse_frame_r2: rows must be 1 or 2");

    const SpanConstraints sc(index_span(p));
    const auto nonmem = nonmembers(p);
    const long long bound = effective_bound(p, opts);

    if (opts.rows == 1) {
        for (long long r = 1; r <= bound; ++r) {
            for (const auto& v : complement_candidates(sc, r)) {
                if (sup_norm(v) != r) continue;  // covered by a smaller shell
                if (!zero_nonmembers(v, nonmem).empty()) continue;
                verify_witness_poset(p, v, {});
                return InverseResult{frame_from_single_row(v), v, {}};
            }
        }
        throw ResourceCapError("inverse_frame_r2: witness search bound exceeded");
    }

    for (long long r = 1; r <= bound; ++r) {
        const auto cands = complement_candidates(sc, r);
        std::vector<std::vector<IndexSet>> zeros(cands.size());
        std::vector<long long> norms(cands.size());
        for (size_t i = 0; i < cands.size(); ++i) {
            zeros[i] = zero_nonmembers(cands[i], nonmem);
            norms[i] = sup_norm(cands[i]);
        }
        for (size_t vi = 0; vi < cands.size(); ++vi) {
            for (size_t wi = 0; wi < cands.size(); ++wi) {
                if (std::max(norms[vi], norms[wi]) != r) continue;
                if (!disjoint_sorted(zeros[vi], zeros[wi])) continue;
                verify_witness_poset(p, cands[vi], cands[wi]);
                return InverseResult{frame_from_diagram_rows(cands[vi], cands[wi]),
                                     cands[vi], cands[wi]};
            }
        }
    }
    throw ResourceCapError("inverse_frame_r2: witness search bound exceeded");
}

FullSparkObstruction full_spark_obstruction(const Poset& p) {
    const SpanClosedResult closed = is_span_closed(p);
    if (!closed.closed)
        throw ValidationError("full_spark_obstruction: poset is not span-closed");
    const IndexSpanBasis span = index_span(p);
    std::vector<std::vector<Scalar>> rows;
    for (const auto& row : span.basis) {
        std::vector<Scalar> r;
        for (const auto& q : row) r.push_back(Scalar(q));
        rows.push_back(std::move(r));
    }
    std::vector<std::vector<Scalar>> residuals;
    for (int i = 0; i < p.k; ++i) {
        std::vector<Scalar> e(p.k, Scalar(0));
        e[i] = Scalar(1);
        residuals.push_back(residual_orthogonal(rows, e));
    }
    for (int i = 0; i < p.k; ++i) {
        for (int j = i + 1; j < p.k; ++j) {
            // res_i = alpha * res_j with alpha > 0?
            int t = -1;
            for (int c = 0; c < p.k; ++c)
                if (!residuals[j][c].is_zero()) { t = c; break; }
            if (t < 0) continue;  // res_j = 0 cannot happen for span-closed singleton-free P
            const Scalar alpha = residuals[i][t] / residuals[j][t];
            if (alpha.sign() <= 0) continue;
            bool parallel = true;
            for (int c = 0; c < p.k; ++c) {
                if (!(residuals[i][c] - alpha * residuals[j][c]).is_zero()) {
                    parallel = false;
                    break;
                }
            }
            if (parallel)
                return FullSparkObstruction{false, i + 1, j + 1, alpha.rational_value()};
        }
    }
    return FullSparkObstruction{true, 0, 0, Rational(0)};
}

InverseResult inverse_full_spark_r2(const Poset& p, const InverseOptions& opts) {
    const FullSparkObstruction ob = full_spark_obstruction(p);
    if (!ob.ok) {
        std::ostringstream os;
        os << "inverse_full_spark_r2: e_" << ob.i << " - " << ob.alpha << " e_" << ob.j
           << " lies in the index span; no full spark frame exists";
        throw ValidationError(os.str());
    }
    const SpanConstraints sc(index_span(p));
    const auto nonmem = nonmembers(p);
    const long long bound = effective_bound(p, opts);

    for (long long r = 1; r <= bound; ++r) {
        const auto cands = complement_candidates(sc, r);
        std::vector<std::vector<IndexSet>> zeros(cands.size());
        std::vector<long long> norms(cands.size());
        for (size_t i = 0; i < cands.size(); ++i) {
            zeros[i] = zero_nonmembers(cands[i], nonmem);
            norms[i] = sup_norm(cands[i]);
        }
        for (size_t vi = 0; vi < cands.size(); ++vi) {
            for (size_t wi = 0; wi < cands.size(); ++wi) {
                if (std::max(norms[vi], norms[wi]) != r) continue;
                if (!disjoint_sorted(zeros[vi], zeros[wi])) continue;
                if (has_positively_parallel_pair(cands[vi], cands[wi])) continue;
                verify_witness_poset(p, cands[vi], cands[wi]);
                InverseResult out{frame_from_diagram_rows(cands[vi], cands[wi]),
                                  cands[vi], cands[wi]};
                if (!is_full_spark(out.frame))
                    throw Error("inverse_full_spark_r2: constructed frame is not full spark");
                return out;
            }
        }
    }
    throw ResourceCapError("inverse_full_spark_r2: witness search bound exceeded");
}

// ---- feasibility system ----------------------------------------------------

namespace {

int frame_var(int vec, int coord, int n) { return vec * n + coord; }

} // namespace

FeasibilitySystem build_feasibility_system(const Poset& p, int n) {
    require_no_singletons(p, "build_feasibility_system");
    if (n < 2) throw ValidationError("build_feasibility_system: dimension must be >= 2");
    FeasibilitySystem fs;
    fs.k = p.k;
    fs.n = n;
    for (int i = 1; i <= p.k; ++i)
        for (int j = 1; j <= n; ++j) {
            std::ostringstream os;
            os << "f[" << i << "][" << j << "]";
            fs.variables.push_back(os.str());
        }
    const auto nonmem = nonmembers(p);
    const int coords = 2 * pair_count(n);
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n - 1; ++a)
        for (int b = a + 1; b < n; ++b) pairs.push_back({a, b});

    // Diagram coordinate c of vector j as quadratic monomials.
    auto coord_terms = [&](int vec, int c, const Rational& scale) {
        std::vector<QuadMonomial> t;
        if (c < pair_count(n)) {
            const auto [a, b] = pairs[c];
            t.push_back({scale, {frame_var(vec, a, n), frame_var(vec, a, n)}});
            t.push_back({-scale, {frame_var(vec, b, n), frame_var(vec, b, n)}});
        } else {
            const auto [a, b] = pairs[c - pair_count(n)];
            t.push_back({scale, {frame_var(vec, a, n), frame_var(vec, b, n)}});
        }
        return t;
    };

    for (IndexSet j : p.sets) {
        if (j == 0) continue;
        for (int c = 0; c < coords; ++c) {
            FsConstraint con;
            con.sense = FsConstraint::Sense::Eq;
            con.rhs = 0;
            for (int i : set_indices(j))
                for (auto& m : coord_terms(i - 1, c, Rational(1))) con.terms.push_back(m);
            std::ostringstream os;
            os << "member " << set_label(j) << " coord " << c;
            con.tag = os.str();
            fs.constraints.push_back(std::move(con));
        }
    }

    auto slack_name = [&](const char* pref, IndexSet j, int c) {
        std::ostringstream os;
        os << pref << set_label(j) << "[" << c << "]";
        return os.str();
    };
    for (IndexSet j : nonmem) {
        std::vector<int> rp(coords), rm(coords);
        for (int c = 0; c < coords; ++c) {
            rp[c] = static_cast<int>(fs.variables.size());
            fs.variables.push_back(slack_name("rplus", j, c));
            rm[c] = static_cast<int>(fs.variables.size());
            fs.variables.push_back(slack_name("rminus", j, c));
        }
        for (int c = 0; c < coords; ++c) {
            FsConstraint link;
            link.sense = FsConstraint::Sense::Eq;
            link.rhs = 0;
            for (int i : set_indices(j))
                for (auto& m : coord_terms(i - 1, c, Rational(1))) link.terms.push_back(m);
            link.terms.push_back({Rational(-1), {rp[c]}});
            link.terms.push_back({Rational(1), {rm[c]}});
            link.tag = "link " + set_label(j);
            fs.constraints.push_back(std::move(link));

            FsConstraint nonneg_p{FsConstraint::Sense::Ge, {{Rational(1), {rp[c]}}}, 0,
                                  "slack nonneg"};
            FsConstraint nonneg_m{FsConstraint::Sense::Ge, {{Rational(1), {rm[c]}}}, 0,
                                  "slack nonneg"};
            FsConstraint compl_c{FsConstraint::Sense::Eq, {{Rational(1), {rp[c], rm[c]}}}, 0,
                                 "complementarity " + set_label(j)};
            fs.constraints.push_back(std::move(nonneg_p));
            fs.constraints.push_back(std::move(nonneg_m));
            fs.constraints.push_back(std::move(compl_c));
        }
        FsConstraint sep;
        sep.sense = FsConstraint::Sense::Ge;
        sep.rhs = 1;
        for (int c = 0; c < coords; ++c) {
            sep.terms.push_back({Rational(1), {rp[c]}});
            sep.terms.push_back({Rational(1), {rm[c]}});
        }
        sep.tag = "nonzero sum " + set_label(j);
        fs.constraints.push_back(std::move(sep));
    }
    return fs;
}

// ---- heuristic solver ------------------------------------------------------

std::optional<Frame> solve_inverse_heuristic(const Poset& p, int n,
                                             const HeuristicOptions& opts) {
    require_no_singletons(p, "solve_inverse_heuristic");
    if (p.k > 16) throw ResourceCapError("solve_inverse_heuristic: k capped at 16");
    const int k = p.k;
    const int np = pair_count(n);
    const int coords = 2 * np;
    const IndexSet all = full_set(k);
    const double margin = 0.25;

    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n - 1; ++a)
        for (int b = a + 1; b < n; ++b) pairs.push_back({a, b});

    DeterministicRng rng(opts.seed);
    for (int restart = 0; restart < opts.restarts; ++restart) {
        std::vector<double> theta(static_cast<size_t>(k) * n);
        for (auto& x : theta) x = rng.gauss();
        std::vector<double> m1(theta.size(), 0.0), m2(theta.size(), 0.0);
        const double lr = 0.02, b1 = 0.9, b2 = 0.999, eps = 1e-8;

        std::vector<double> diag(static_cast<size_t>(k) * coords);
        std::vector<double> dsum(static_cast<size_t>(all + 1) * coords);
        std::vector<double> gcoord(static_cast<size_t>(k) * coords);
        std::vector<double> grad(theta.size());

        for (int it = 1; it <= opts.iterations; ++it) {
            for (int i = 0; i < k; ++i) {
                const double* f = &theta[static_cast<size_t>(i) * n];
                for (int c = 0; c < np; ++c) {
                    const auto [a, b] = pairs[c];
                    diag[static_cast<size_t>(i) * coords + c] = f[a] * f[a] - f[b] * f[b];
                    diag[static_cast<size_t>(i) * coords + np + c] = f[a] * f[b];
                }
            }
            // Subset sums over masks via lowest-bit recursion.
            std::fill(dsum.begin(), dsum.begin() + coords, 0.0);
            for (IndexSet mask = 1; mask <= all; ++mask) {
                const int low = std::countr_zero(mask);
                const IndexSet rest = mask & (mask - 1);
                for (int c = 0; c < coords; ++c)
                    dsum[static_cast<size_t>(mask) * coords + c] =
                        dsum[static_cast<size_t>(rest) * coords + c] +
                        diag[static_cast<size_t>(low) * coords + c];
            }
            double energy = 0.0;
            std::fill(gcoord.begin(), gcoord.end(), 0.0);
            for (IndexSet mask = 1; mask <= all; ++mask) {
                const double* d = &dsum[static_cast<size_t>(mask) * coords];
                double s = 0.0;
                for (int c = 0; c < coords; ++c) s += d[c] * d[c];
                double gfac = 0.0;
                if (p.contains(mask)) {
                    energy += s;
                    gfac = 2.0;
                } else if (s < margin) {
                    const double gap = margin - s;
                    energy += gap * gap;
                    gfac = -4.0 * gap;
                }
                if (gfac == 0.0) continue;
                IndexSet m = mask;
                while (m) {
                    const int i = std::countr_zero(m);
                    for (int c = 0; c < coords; ++c)
                        gcoord[static_cast<size_t>(i) * coords + c] += gfac * d[c];
                    m &= m - 1;
                }
            }
            std::fill(grad.begin(), grad.end(), 0.0);
            for (int i = 0; i < k; ++i) {
                const double* f = &theta[static_cast<size_t>(i) * n];
                double* g = &grad[static_cast<size_t>(i) * n];
                const double* gc = &gcoord[static_cast<size_t>(i) * coords];
                for (int c = 0; c < np; ++c) {
                    const auto [a, b] = pairs[c];
                    g[a] += gc[c] * 2.0 * f[a];
                    g[b] += gc[c] * -2.0 * f[b];
                    g[a] += gc[np + c] * f[b];
                    g[b] += gc[np + c] * f[a];
                }
            }
            const double c1 = 1.0 - std::pow(b1, it), c2 = 1.0 - std::pow(b2, it);
            for (size_t t = 0; t < theta.size(); ++t) {
                m1[t] = b1 * m1[t] + (1 - b1) * grad[t];
                m2[t] = b2 * m2[t] + (1 - b2) * grad[t] * grad[t];
                theta[t] -= lr * (m1[t] / c1) / (std::sqrt(m2[t] / c2) + eps);
            }
            if (energy < 1e-18) break;
        }

        Frame f;
        f.field = Field::Real;
        f.n = n;
        f.mode = ScalarMode::float_mode();
        for (int i = 0; i < k; ++i) {
            std::vector<Scalar> v;
            for (int c = 0; c < n; ++c)
                v.push_back(Scalar::real_float(theta[static_cast<size_t>(i) * n + c]));
            f.vectors.push_back(std::move(v));
        }
        try {
            FactorPosetOptions fp;
            fp.tol = Tolerance{1e-6, 1e-6};
            if (factor_poset(f, fp) == p) return f;
        } catch (const ZeroVectorError&) {
            // collapsed vector; try the next restart
        }
    }
    return std::nullopt;
}

} // namespace frameposet
