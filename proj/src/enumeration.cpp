#include "frameposet/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace frameposet {

Poset subset_zero_poset(const std::vector<long long>& a) {
    const int k = static_cast<int>(a.size());
    if (k < 1 || k > 24) throw ValidationError("subset_zero_poset: k must be in 1..24");
    const IndexSet all = full_set(k);
    std::vector<long long> sums(static_cast<size_t>(all) + 1, 0);
    std::vector<IndexSet> zeros;
    for (IndexSet m = 1; m <= all; ++m) {
        sums[m] = sums[m & (m - 1)] + a[std::countr_zero(m)];
        if (sums[m] == 0) zeros.push_back(m);
    }
    return make_poset(k, std::move(zeros));
}

Poset subset_zero_poset_mitm(const std::vector<long long>& a) {
    const int k = static_cast<int>(a.size());
    if (k < 1 || k > 40) throw ValidationError("subset_zero_poset_mitm: k must be in 1..40");
    const int half = k / 2;
    auto half_sums = [&](int lo, int hi) {
        std::vector<std::pair<long long, IndexSet>> acc{{0, 0}};
        for (int i = lo; i < hi; ++i) {
            const size_t sz = acc.size();
            for (size_t t = 0; t < sz; ++t)
                acc.push_back({acc[t].first + a[i], acc[t].second | (IndexSet(1) << i)});
        }
        return acc;
    };
    const auto left = half_sums(0, half);
    const auto right = half_sums(half, k);
    std::unordered_map<long long, std::vector<IndexSet>> by_sum;
    for (const auto& [s, m] : right) by_sum[s].push_back(m);
    std::vector<IndexSet> zeros;
    for (const auto& [s, m] : left) {
        const auto it = by_sum.find(-s);
        if (it == by_sum.end()) continue;
        for (IndexSet rm : it->second)
            if ((m | rm) != 0) zeros.push_back(m | rm);
    }
    return make_poset(k, std::move(zeros));
}

namespace {

// Equivariant index keys from the element-membership incidence, refined one
// round: the multiset of containing-set sizes, then per containing set the
// member key multiset.
std::vector<std::string> index_keys(const Poset& p) {
    std::vector<std::string> key0(p.k);
    for (int i = 0; i < p.k; ++i) {
        std::vector<int> sizes;
        for (IndexSet s : p.sets)
            if (s >> i & 1) sizes.push_back(set_size(s));
        std::sort(sizes.begin(), sizes.end());
        std::ostringstream os;
        for (int s : sizes) os << s << ",";
        key0[i] = os.str();
    }
    std::vector<std::string> key1(p.k);
    for (int i = 0; i < p.k; ++i) {
        std::vector<std::string> parts;
        for (IndexSet s : p.sets) {
            if (!(s >> i & 1)) continue;
            std::vector<std::string> members;
            for (int j : set_indices(s)) members.push_back(key0[j - 1]);
            std::sort(members.begin(), members.end());
            std::string part = "[";
            for (const auto& m : members) part += m + ";";
            part += "]";
            parts.push_back(std::move(part));
        }
        std::sort(parts.begin(), parts.end());
        key1[i] = key0[i] + "|";
        for (const auto& pt : parts) key1[i] += pt;
    }
    return key1;
}

std::vector<IndexSet> remap_sorted(const std::vector<IndexSet>& sets,
                                   const std::vector<int>& position_of) {
    std::vector<IndexSet> out;
    out.reserve(sets.size());
    for (IndexSet s : sets) {
        IndexSet t = 0;
        IndexSet m = s;
        while (m) {
            t |= IndexSet(1) << position_of[std::countr_zero(m)];
            m &= m - 1;
        }
        out.push_back(t);
    }
    std::sort(out.begin(), out.end(), set_less);
    return out;
}

bool list_less(const std::vector<IndexSet>& a, const std::vector<IndexSet>& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (set_less(a[i], b[i])) return true;
        if (set_less(b[i], a[i])) return false;
    }
    return false;
}

} // namespace

CanonicalForm canonicalize_poset(const Poset& p) {
    const auto keys = index_keys(p);
    // Group indices by key; groups ordered by key fix the position blocks.
    std::map<std::string, std::vector<int>> groups;
    for (int i = 0; i < p.k; ++i) groups[keys[i]].push_back(i);

    std::vector<std::vector<int>> group_indices;
    for (auto& [key, idx] : groups) group_indices.push_back(idx);

    std::vector<int> position_of(p.k, -1);
    std::vector<IndexSet> best;
    std::vector<int> best_position(p.k, -1);

    // Odometer over within-group permutations.
    auto assign = [&](auto&& self, size_t g, int base) -> void {
        if (g == group_indices.size()) {
            auto candidate = remap_sorted(p.sets, position_of);
            if (best.empty() || list_less(candidate, best)) {
                best = std::move(candidate);
                best_position = position_of;
            }
            return;
        }
        std::vector<int> perm = group_indices[g];
        std::sort(perm.begin(), perm.end());
        do {
            for (size_t t = 0; t < perm.size(); ++t)
                position_of[perm[t]] = base + static_cast<int>(t);
            self(self, g + 1, base + static_cast<int>(perm.size()));
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    assign(assign, 0, 0);

    CanonicalForm out;
    out.position_of = best_position;
    out.poset = Poset{p.k, std::move(best)};
    return out;
}

namespace {

std::string poset_key(const std::vector<IndexSet>& sets) {
    std::string key;
    key.reserve(sets.size() * 4);
    for (IndexSet s : sets) {
        for (int b = 0; b < 4; ++b) key.push_back(static_cast<char>((s >> (8 * b)) & 0xff));
    }
    return key;
}

long long vec_gcd_ll(const std::vector<long long>& v) {
    long long g = 0;
    for (long long x : v) g = std::gcd(g, std::llabs(x));
    return g;
}

} // namespace

unsigned long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned long long>(n - k + i) / i;
    }
    return r;
}

CensusResult enumerate_factor_posets_r2(int k, const CensusOptions& opts) {
    if (k < 2 || k > 7)
        throw ValidationError("enumerate_factor_posets_r2: k must be in 2..7 "
                              "(the sup-norm bound grows superexponentially)");
    CensusResult out;
    out.k = k;
    out.max_norm = opts.max_norm.value_or(witness_norm_bound(k));
    const long long bound = out.max_norm;

    std::vector<long long> values;
    for (long long v = -bound; v <= bound; ++v)
        if (v != 0) values.push_back(v);
    if (opts.reverse_value_order) std::reverse(values.begin(), values.end());

    std::unordered_set<std::string> seen_raw;
    std::unordered_set<std::string> seen_canonical;
    std::vector<CensusEntry> entries;

    std::vector<long long> a(k);
    auto visit = [&](const std::vector<long long>& vec) {
        if (vec_gcd_ll(vec) != 1) return;
        const Poset raw = subset_zero_poset(vec);
        if (!seen_raw.insert(poset_key(raw.sets)).second) return;
        CanonicalForm canon = canonicalize_poset(raw);
        if (!seen_canonical.insert(poset_key(canon.poset.sets)).second) return;
        std::vector<long long> witness(k);
        for (int i = 0; i < k; ++i) witness[canon.position_of[i]] = vec[i];
        entries.push_back({std::move(canon.poset), std::move(witness)});
    };

    // Non-decreasing value tuples only; sorting is a strong isomorphism and
    // the census quotients by index permutation anyway.
    auto dfs = [&](auto&& self, int depth, size_t start) -> void {
        if (depth == k) {
            std::vector<long long> sorted = a;
            std::sort(sorted.begin(), sorted.end());
            // Skip the negation twin: -a sorted must not be lexicographically
            // smaller (both realize the same poset).
            std::vector<long long> neg(k);
            for (int i = 0; i < k; ++i) neg[i] = -sorted[k - 1 - i];
            if (std::lexicographical_compare(neg.begin(), neg.end(), sorted.begin(),
                                             sorted.end()))
                return;
            visit(sorted);
            return;
        }
        for (size_t t = start; t < values.size(); ++t) {
            a[depth] = values[t];
            self(self, depth + 1, t);
        }
    };
    dfs(dfs, 0, 0);

    std::sort(entries.begin(), entries.end(), [](const CensusEntry& x, const CensusEntry& y) {
        if (x.poset.sets.size() != y.poset.sets.size())
            return x.poset.sets.size() < y.poset.sets.size();
        return list_less(x.poset.sets, y.poset.sets);
    });
    for (const auto& e : entries)
        out.count_by_size[static_cast<int>(e.poset.sets.size())]++;
    out.entries = std::move(entries);
    return out;
}

unsigned long long furedi_bound(int k) {
    if (k < 2) throw ValidationError("furedi_bound: k must be >= 2");
    if (k % 2 == 0) return binomial(k, k / 2);
    return 2 * binomial(k - 1, k / 2 - 1);
}

bool check_furedi_bound(const Poset& p) {
    if (!p.contains(full_set(p.k)))
        throw ValidationError("check_furedi_bound: the full index set must be an element "
                              "(the bound addresses tight frames)");
    return p.sets.size() <= furedi_bound(p.k);
}

unsigned long long conjectured_bound_hn(int k, int n) {
    if (n < 1 || k < 1 || k % n != 0)
        throw ValidationError("conjectured_bound_hn: n must divide k");
    const int m = k / n;
    unsigned long long total = 0;
    for (int i = 0; i <= m; ++i) {
        unsigned long long term = 1;
        const unsigned long long c = binomial(m, i);
        for (int t = 0; t < n; ++t) term *= c;
        total += term;
    }
    if (n == 2 && total != binomial(2 * m, m))
        throw Error("conjectured_bound_hn: n=2 consistency identity failed");
    return total;
}

unsigned long long extremal_ec_size(int k) {
    return 2 * binomial(k - 2, k / 2 - 1);
}

Frame extremal_ec_frame(int k) {
    if (k < 4 || k % 2 != 0)
        throw ValidationError("extremal_ec_frame: k must be an even integer >= 4");
    const long long under_root = k / 2 - 1;
    long long s = 1;
    const long long d = squarefree_part(under_root, s);
    Frame f;
    f.field = Field::Real;
    f.n = 2;
    f.mode = ScalarMode::exact_mode(d);
    for (int i = 0; i < k - 2; ++i) f.vectors.push_back({Scalar(1), Scalar(0)});
    const Scalar tail = Scalar::quad(Rational(0), Rational(-1), under_root);
    for (int i = 0; i < 2; ++i) f.vectors.push_back({Scalar(0), tail});
    return f;
}

ScaledOnbReduction scaled_onb_reduction(const Frame& f, const Tolerance& tol) {
    validate_frame(f);
    if (f.field != Field::Real || f.n != 2)
        throw ValidationError("scaled_onb_reduction: real R^2 frames only");
    const auto zeros = zero_vector_indices(f, tol);
    if (!zeros.empty())
        throw ZeroVectorError("scaled_onb_reduction: frame contains zero vectors");
    const int k = f.k();
    if (k > 20) throw ResourceCapError("scaled_onb_reduction: k capped at 20");

    const auto diags = diagram_vectors(f);
    const IndexSet all = full_set(k);

    // All subset sums of the 2-coordinate diagram vectors.
    std::vector<Scalar> sx(static_cast<size_t>(all) + 1), sy(static_cast<size_t>(all) + 1);
    const Scalar zero = f.mode.exact ? Scalar(0) : Scalar::real_float(0.0);
    sx[0] = sy[0] = zero;
    double scale = 1.0;
    for (IndexSet m = 1; m <= all; ++m) {
        const int low = std::countr_zero(m);
        sx[m] = sx[m & (m - 1)] + diags[low].diffs[0];
        sy[m] = sy[m & (m - 1)] + diags[low].prods[0];
        if (!f.mode.exact)
            scale = std::max({scale, std::abs(sx[m].to_double()), std::abs(sy[m].to_double())});
    }
    auto sum_is_zero = [&](const Scalar& x) { return scalar_is_zero(x, tol, scale); };

    // T(x, y) = x + t y must be nonzero on every nonzero subset sum; only
    // finitely many integer t fail, so scan outward from zero.
    long long chosen_t = 0;
    bool found = false;
    for (long long step = 0; step <= (1LL << k) + 1 && !found; ++step) {
        for (long long t : {step, -step}) {
            const Scalar ts = f.mode.exact ? Scalar(t) : Scalar::real_float(static_cast<double>(t));
            bool ok = true;
            for (IndexSet m = 1; m <= all; ++m) {
                const bool was_zero = sum_is_zero(sx[m]) && sum_is_zero(sy[m]);
                const Scalar val = sx[m] + ts * sy[m];
                if (!was_zero && sum_is_zero(val)) { ok = false; break; }
            }
            if (ok) {
                chosen_t = t;
                found = true;
                break;
            }
            if (t == 0) break;  // 0 and -0 coincide
        }
    }
    if (!found) throw Error("scaled_onb_reduction: no admissible integer functional found");

    const Scalar ts = f.mode.exact ? Scalar(chosen_t)
                                   : Scalar::real_float(static_cast<double>(chosen_t));
    Frame out;
    out.field = Field::Real;
    out.n = 2;
    out.mode = ScalarMode::float_mode();
    for (int i = 0; i < k; ++i) {
        const Scalar ti = diags[i].diffs[0] + ts * diags[i].prods[0];
        const double tv = ti.to_double();
        const double r = std::sqrt(std::abs(tv));
        if (tv > 0)
            out.vectors.push_back({Scalar::real_float(r), Scalar::real_float(0.0)});
        else
            out.vectors.push_back({Scalar::real_float(0.0), Scalar::real_float(r)});
    }
    // Poset preservation is structural: T maps exactly the zero sums to zero.
    for (IndexSet m = 1; m <= all; ++m) {
        const bool orig = sum_is_zero(sx[m]) && sum_is_zero(sy[m]);
        const bool now = sum_is_zero(sx[m] + ts * sy[m]);
        if (orig != now) throw Error("scaled_onb_reduction: functional failed verification");
    }
    return {std::move(out), chosen_t};
}

} // namespace frameposet
