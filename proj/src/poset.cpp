#include "frameposet/poset.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <map>
#include <sstream>
#include <string>

namespace frameposet {

int set_size(IndexSet s) { return std::popcount(s); }

std::vector<int> set_indices(IndexSet s) {
    std::vector<int> out;
    for (int i = 0; s; ++i, s >>= 1)
        if (s & 1) out.push_back(i + 1);
    return out;
}

IndexSet set_from_indices(const std::vector<int>& idx, int k) {
    IndexSet s = 0;
    for (int i : idx) {
        if (i < 1 || i > k) throw ValidationError("index out of range 1..k");
        s |= IndexSet(1) << (i - 1);
    }
    return s;
}

std::string set_label(IndexSet s) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int i : set_indices(s)) {
        if (!first) os << ",";
        os << i;
        first = false;
    }
    os << "}";
    return os.str();
}

IndexSet full_set(int k) {
    return k == 64 ? ~IndexSet(0) : (IndexSet(1) << k) - 1;
}

bool set_less(IndexSet a, IndexSet b) {
    const int sa = set_size(a), sb = set_size(b);
    if (sa != sb) return sa < sb;
    // Same size: compare as ascending index sequences.
    while (a && b) {
        const int ia = std::countr_zero(a), ib = std::countr_zero(b);
        if (ia != ib) return ia < ib;
        a &= a - 1;
        b &= b - 1;
    }
    return false;
}

bool Poset::contains(IndexSet s) const {
    return std::binary_search(sets.begin(), sets.end(), s, set_less);
}

Poset make_poset(int k, std::vector<IndexSet> sets) {
    if (k < 1 || k > 64) throw ValidationError("poset index count must be in 1..64");
    for (IndexSet s : sets)
        if (k < 64 && (s >> k)) throw ValidationError("poset element uses an index beyond k");
    sets.push_back(0);
    std::sort(sets.begin(), sets.end(), set_less);
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    return Poset{k, std::move(sets)};
}

namespace {

// Depth-first scan over subsets with running diagram-vector sums. Exact mode
// tracks the count of nonzero coordinates so the leaf test is O(1); float
// mode applies the tolerance with the largest diagram-vector sup-norm in the
// current subset as scale.
struct ExactScan {
    const std::vector<ReducedDiagramVector>* diags;
    int k = 0, coords = 0;
    std::vector<Scalar> sum;
    int nonzero = 0;
    std::vector<IndexSet> hits;

    void run() {
        sum.assign(coords, Scalar(0));
        nonzero = 0;
        descend(0, 0);
    }
    void descend(int i, IndexSet mask) {
        if (i == k) {
            if (mask != 0 && nonzero == 0) hits.push_back(mask);
            return;
        }
        descend(i + 1, mask);
        toggle(i, +1);
        descend(i + 1, mask | (IndexSet(1) << i));
        toggle(i, -1);
    }
    void toggle(int i, int dir) {
        const auto& d = (*diags)[i];
        for (int c = 0; c < coords; ++c) {
            const bool was = sum[c].is_zero();
            sum[c] = dir > 0 ? sum[c] + d.coord(c) : sum[c] - d.coord(c);
            const bool now = sum[c].is_zero();
            if (was && !now) ++nonzero;
            else if (!was && now) --nonzero;
        }
    }
};

struct FloatScan {
    int k = 0, coords = 0;
    std::vector<std::vector<std::complex<double>>> diag;  // k x coords
    std::vector<double> vec_norm;                         // sup-norm per vector
    Tolerance tol;
    std::vector<std::complex<double>> sum;
    std::vector<IndexSet> hits;

    void run() {
        sum.assign(coords, {0.0, 0.0});
        descend(0, 0, 0.0);
    }
    void descend(int i, IndexSet mask, double scale) {
        if (i == k) {
            if (mask == 0) return;
            const double s = scale == 0.0 ? 1.0 : scale;
            const double bound = std::max(tol.absolute, tol.relative * s);
            for (int c = 0; c < coords; ++c)
                if (std::abs(sum[c]) > bound) return;
            hits.push_back(mask);
            return;
        }
        descend(i + 1, mask, scale);
        for (int c = 0; c < coords; ++c) sum[c] += diag[i][c];
        descend(i + 1, mask | (IndexSet(1) << i), std::max(scale, vec_norm[i]));
        for (int c = 0; c < coords; ++c) sum[c] -= diag[i][c];
    }
};

std::string exact_sum_key(const std::vector<Scalar>& sum) {
    std::string key;
    for (const auto& s : sum) {
        key += s.str();
        key += '|';
    }
    return key;
}

// Meet-in-the-middle zero-sum enumeration for exact frames: all subset sums
// of each half, matched through a canonical key of the scalar vector.
std::vector<IndexSet> mitm_zero_subsets(const std::vector<ReducedDiagramVector>& diags,
                                        int coords) {
    const int k = static_cast<int>(diags.size());
    const int half = k / 2;
    auto enumerate_half = [&](int lo, int hi) {
        std::vector<std::pair<IndexSet, std::vector<Scalar>>> acc;
        acc.push_back({0, std::vector<Scalar>(coords, Scalar(0))});
        for (int i = lo; i < hi; ++i) {
            const size_t sz = acc.size();
            for (size_t t = 0; t < sz; ++t) {
                auto entry = acc[t];
                entry.first |= IndexSet(1) << i;
                for (int c = 0; c < coords; ++c)
                    entry.second[c] += diags[i].coord(c);
                acc.push_back(std::move(entry));
            }
        }
        return acc;
    };
    const auto left = enumerate_half(0, half);
    const auto right = enumerate_half(half, k);
    std::map<std::string, std::vector<IndexSet>> right_by_key;
    for (const auto& [mask, sum] : right)
        right_by_key[exact_sum_key(sum)].push_back(mask);
    std::vector<IndexSet> hits;
    for (const auto& [mask, sum] : left) {
        std::vector<Scalar> neg(coords);
        for (int c = 0; c < coords; ++c) neg[c] = -sum[c];
        const auto it = right_by_key.find(exact_sum_key(neg));
        if (it == right_by_key.end()) continue;
        for (IndexSet rm : it->second)
            if ((mask | rm) != 0) hits.push_back(mask | rm);
    }
    return hits;
}

} // namespace

Poset factor_poset(const Frame& f, const FactorPosetOptions& opts) {
    validate_frame(f);
    const auto zeros = zero_vector_indices(f, opts.tol);
    if (!zeros.empty()) {
        std::ostringstream os;
        os << "factor_poset: frame contains zero vectors at";
        for (int i : zeros) os << " " << i;
        os << " (strip them explicitly if intended)";
        throw ZeroVectorError(os.str());
    }
    const int k = f.k();
    if (k > 64) throw ResourceCapError("factor_poset: k exceeds the 64-index bitmask");
    const int cap = opts.meet_in_middle ? opts.mitm_limit : opts.direct_limit;
    if (k > cap) {
        std::ostringstream os;
        os << "factor_poset: k=" << k << " exceeds the configured limit " << cap;
        throw ResourceCapError(os.str());
    }

    const auto diags = diagram_vectors(f);
    const int coords = 2 * pair_count(f.n);
    std::vector<IndexSet> hits;
    if (f.mode.exact) {
        if (opts.meet_in_middle && k > opts.direct_limit) {
            hits = mitm_zero_subsets(diags, coords);
        } else {
            ExactScan scan;
            scan.diags = &diags;
            scan.k = k;
            scan.coords = coords;
            scan.run();
            hits = std::move(scan.hits);
        }
    } else {
        FloatScan scan;
        scan.k = k;
        scan.coords = coords;
        scan.tol = opts.tol;
        scan.diag.resize(k);
        scan.vec_norm.assign(k, 0.0);
        for (int i = 0; i < k; ++i) {
            scan.diag[i].resize(coords);
            for (int c = 0; c < coords; ++c) {
                scan.diag[i][c] = diags[i].coord(c).to_complex();
                scan.vec_norm[i] = std::max(scan.vec_norm[i], std::abs(scan.diag[i][c]));
            }
        }
        scan.run();
        hits = std::move(scan.hits);
    }
    return make_poset(k, std::move(hits));
}

std::vector<IndexSet> empty_cover(const Poset& p) {
    std::vector<IndexSet> out;
    for (IndexSet j : p.sets) {
        if (j == 0) continue;
        bool minimal = true;
        for (IndexSet other : p.sets) {
            if (other == 0 || other == j) continue;
            if ((other & j) == other) { minimal = false; break; }  // other strictly inside j
        }
        if (minimal) out.push_back(j);
    }
    return out;
}

std::pair<IndexSet, IndexSet> copies_of(const Poset& p, IndexSet a, IndexSet b) {
    if (!p.contains(a) || !p.contains(b))
        throw ValidationError("copies_of: both sets must be poset elements");
    return {a & ~b, b & ~a};
}

ClosureCheckResult satisfies_closure_condition(const Poset& p) {
    // Direct closure condition over element triples.
    for (IndexSet a : p.sets) {
        for (IndexSet b : p.sets) {
            const IndexSet j = a & ~b, kk = b & ~a;
            for (IndexSet c : p.sets) {
                if ((j & c) != j) continue;   // J subset of C
                if ((kk & c) != 0) continue;  // K disjoint from C
                const IndexSet need = (c & ~j) | kk;
                if (!p.contains(need)) return {false, need};
            }
        }
    }
    // Equivalent-triple cross-check (should be implied).
    for (IndexSet a : p.sets) {
        for (IndexSet b : p.sets) {
            const bool u = p.contains(a | b), n = p.contains(a & b), d = p.contains(a & ~b);
            if (u != n) return {false, u ? (a & b) : (a | b)};
            if (n != d) return {false, n ? (a & ~b) : (a & b)};
        }
    }
    return {true, std::nullopt};
}

std::string Signing::str() const {
    std::string out(static_cast<size_t>(k), '-');
    for (int i = 0; i < k; ++i)
        if (plus_mask >> i & 1) out[i] = '+';
    return out;
}

namespace {

struct SigningSearch {
    int k = 0;
    std::vector<IndexSet> constraints;  // empty-cover elements
    std::vector<Signing> out;

    void run() {
        if (k > 24) throw ResourceCapError("all_signings: index count exceeds 24");
        descend(0, 0);
    }
    // Plus branch first: output is lexicographic with '+' < '-'.
    void descend(int i, std::uint64_t plus) {
        if (i == k) {
            out.push_back(Signing{k, plus});
            return;
        }
        const IndexSet assigned = (IndexSet(1) << (i + 1)) - 1;
        for (int choice = 0; choice < 2; ++choice) {
            const std::uint64_t np = choice == 0 ? (plus | (IndexSet(1) << i)) : plus;
            bool viable = true;
            for (IndexSet c : constraints) {
                if ((c & assigned) != c) continue;  // not fully assigned yet
                const IndexSet pos = c & np;
                if (pos == 0 || pos == c) { viable = false; break; }
            }
            if (viable) descend(i + 1, np);
        }
    }
};

} // namespace

std::vector<Signing> all_signings(const Poset& p) {
    SigningSearch s;
    s.k = p.k;
    s.constraints = empty_cover(p);
    s.run();
    // Safety: every nonempty element must carry both signs (implied by the
    // empty-cover constraints since each element contains a minimal one).
    for (const Signing& sg : s.out) {
        for (IndexSet e : p.sets) {
            if (e == 0) continue;
            const IndexSet pos = e & sg.plus_mask;
            if (pos == 0 || pos == e)
                throw Error("all_signings: empty-cover pruning missed a constraint");
        }
    }
    return s.out;
}

Signing signing_from_direction(const Frame& f, const std::vector<Scalar>& tau,
                               const Tolerance& tol) {
    validate_frame(f);
    if (f.field != Field::Real)
        throw ValidationError("signing_from_direction: real frames only");
    const int coords = 2 * pair_count(f.n);
    if (static_cast<int>(tau.size()) != coords)
        throw ValidationError("signing_from_direction: tau must have 2*C(n,2) coordinates");
    std::uint64_t plus = 0;
    for (int i = 0; i < f.k(); ++i) {
        const ReducedDiagramVector d = diagram_vector(f, i);
        Scalar dot = f.mode.exact ? Scalar(0) : Scalar::real_float(0.0);
        double scale = 0.0;
        for (int c = 0; c < coords; ++c) {
            dot += d.coord(c) * tau[c];
            if (!f.mode.exact)
                scale = std::max(scale, std::abs(d.coord(c).to_double() * tau[c].to_double()));
        }
        if (scalar_is_zero(dot, tol, scale == 0.0 ? 1.0 : scale)) {
            std::ostringstream os;
            os << "signing_from_direction: tau is orthogonal to diagram vector " << (i + 1);
            throw ValidationError(os.str());
        }
        if (dot.sign() > 0) plus |= IndexSet(1) << i;
    }
    return Signing{f.k(), plus};
}

ForcedSignRelations forced_sign_relations(const Poset& p) {
    const auto signings = all_signings(p);
    if (signings.empty())
        throw ValidationError("forced_sign_relations: the poset has no signings");
    ForcedSignRelations rel;
    for (int i = 1; i <= p.k; ++i) {
        for (int j = i + 1; j <= p.k; ++j) {
            bool always_eq = true, always_ne = true;
            for (const Signing& s : signings) {
                if (s.sign(i) == s.sign(j)) always_ne = false;
                else always_eq = false;
            }
            if (always_eq) rel.equal_pairs.push_back({i, j});
            if (always_ne) rel.unequal_pairs.push_back({i, j});
        }
    }
    rel.unique_signing = signings.size() == 2;  // signings come in flip pairs
    return rel;
}

std::string hasse_dot(const Poset& p) {
    // Cover relation: a < b with nothing strictly between.
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
    for (size_t i = 0; i < p.sets.size(); ++i)
        os << "  n" << i << " [label=\"" << set_label(p.sets[i]) << "\"];\n";
    for (size_t i = 0; i < p.sets.size(); ++i) {
        for (size_t j = 0; j < p.sets.size(); ++j) {
            const IndexSet a = p.sets[i], b = p.sets[j];
            if (a == b || (a & b) != a) continue;  // need a strictly inside b
            bool covered = true;
            for (IndexSet c : p.sets) {
                if (c == a || c == b) continue;
                if ((a & c) == a && (c & b) == c) { covered = false; break; }
            }
            if (covered) os << "  n" << i << " -> n" << j << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

} // namespace frameposet
