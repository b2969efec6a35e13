// Acceptance suite: runs every gate criterion at its stated tolerance and
// time budget, printing one pass/fail line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "frameposet/enumeration.hpp"
#include "frameposet/json_io.hpp"
#include "frameposet/projections.hpp"
#include "frameposet/scalability.hpp"
#include "test_helpers.hpp"

using namespace frameposet;
using namespace frameposet::test;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
    if (!cond) throw Failure(what);
}

int g_failures = 0;

void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
        body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (error.empty() && elapsed > budget_seconds) {
        std::ostringstream os;
        os << "time budget exceeded: " << elapsed << " s > " << budget_seconds << " s";
        error = os.str();
    }
    if (error.empty()) {
        std::printf("criterion %2d: PASS  (%6.2f s)  %s\n", number, elapsed, label.c_str());
    } else {
        std::printf("criterion %2d: FAIL  (%6.2f s)  %s\n              %s\n", number,
                    elapsed, label.c_str(), error.c_str());
        ++g_failures;
    }
    std::fflush(stdout);
}

std::vector<Scalar> rational_scaling(std::vector<Rational> v) {
    std::vector<Scalar> out;
    for (auto& q : v) out.push_back(Scalar(q));
    return out;
}

} // namespace

int main() {
    criterion(1, "four-vector paper example: poset and empty cover, exact", 1.0, [] {
        const Poset p = factor_poset(plus_minus_onb_r2());
        require(p == poset_of(4, {{}, {1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 2, 3, 4}}),
                "factor poset differs from the 6-element poset");
        auto ec = empty_cover(p);
        std::sort(ec.begin(), ec.end(), set_less);
        std::vector<IndexSet> expected{
            set_from_indices({1, 2}, 4), set_from_indices({1, 4}, 4),
            set_from_indices({2, 3}, 4), set_from_indices({3, 4}, 4)};
        require(ec == expected, "empty cover differs from the 4 listed pairs");
    });

    criterion(2, "R^3 five-vector example (d=2 exact): {{},{1,2,3},{1,4,5}}", 1.0, [] {
        require(factor_poset(five_vector_r3()) == poset_of(5, {{1, 2, 3}, {1, 4, 5}}),
                "factor poset differs");
    });

    criterion(3, "inverse round trip over the census, k <= 6, exact", 300.0, [] {
        int round_trips = 0;
        for (int k = 2; k <= 6; ++k) {
            const CensusResult census = enumerate_factor_posets_r2(k);
            for (const auto& e : census.entries) {
                const InverseResult res = inverse_frame_r2(e.poset);
                require(factor_poset(res.frame) == e.poset,
                        "round trip failed at k=" + std::to_string(k));
                ++round_trips;
            }
        }
        require(round_trips > 0, "census produced no posets");
    });

    criterion(4, "paper inverse witness: rows=1 on {{},{1,2}} k=3 gives v=(2,-2,1)", 1.0, [] {
        InverseOptions opts;
        opts.rows = 1;
        const Poset p = poset_of(3, {{1, 2}});
        const InverseResult res = inverse_frame_r2(p, opts);
        require(res.v == std::vector<long long>{2, -2, 1},
                "expected the deterministic-first witness (2,-2,1)");
        require(factor_poset(res.frame) == p, "witness frame poset differs from P");
    });

    criterion(5, "minimal scalings: the paper's v1..v4 and v1..v5 exactly", 10.0, [] {
        const ScalingPolytope p4 = minimal_scalings(plus_minus_onb_r2());
        std::vector<std::vector<Scalar>> want4 = {
            rational_scaling({1, 1, 0, 0}), rational_scaling({0, 0, 1, 1}),
            rational_scaling({1, 0, 0, 1}), rational_scaling({0, 1, 1, 0})};
        require(p4.m() == 4, "four-vector example: expected 4 minimal scalings");
        for (const auto& w : want4)
            require(std::find(p4.minimal.begin(), p4.minimal.end(), w) != p4.minimal.end(),
                    "four-vector example: a paper scaling is missing");

        const ScalingPolytope p6 = minimal_scalings(six_vector_example());
        const Rational tt(2, 3);
        std::vector<std::vector<Scalar>> want6 = {
            rational_scaling({tt, tt, tt, 0, 0, 0}),
            rational_scaling({0, 0, 0, tt, tt, tt}),
            rational_scaling({1, 0, 0, 1, 0, 0}),
            rational_scaling({0, 1, 0, 0, 1, 0}),
            rational_scaling({0, 0, 1, 0, 0, 1})};
        require(p6.m() == 5, "six-vector example: expected 5 minimal scalings");
        for (const auto& w : want6)
            require(std::find(p6.minimal.begin(), p6.minimal.end(), w) != p6.minimal.end(),
                    "six-vector example: a paper scaling (2/3 entries) is missing");
    });

    criterion(6, "scaling classification and method agreement on 1000 points each", 120.0, [] {
        const Frame f6 = six_vector_example();
        const ScalingPolytope p6 = minimal_scalings(f6);
        std::vector<Scalar> w2(6, Scalar(0));
        for (const auto& v : p6.minimal)
            for (int r = 0; r < 6; ++r) w2[r] += Scalar(Rational(1, 5)) * v[r];
        const ClassifyResult c2 = classify_scaling(f6, w2);
        require(!c2.prime, "w2 = (1/5) sum v_i must be non-prime");
        require(c2.tight_witness.has_value(), "non-prime verdict must carry a witness");
        {
            // Verify the witness: scaled diagram vectors over it sum to zero.
            const auto diags = diagram_vectors(f6);
            Scalar sx(0), sy(0);
            for (int i : set_indices(*c2.tight_witness)) {
                sx += w2[i - 1] * diags[i - 1].diffs[0];
                sy += w2[i - 1] * diags[i - 1].prods[0];
            }
            require(sx.is_zero() && sy.is_zero(), "tight-subset witness is not tight");
        }
        std::vector<Scalar> w1(6, Scalar(0));
        for (int i = 0; i < p6.m(); ++i)
            for (int r = 0; r < 6; ++r)
                w1[r] += Scalar(Rational(i + 1) / Rational(15)) * p6.minimal[i][r];
        require(classify_scaling(f6, w1).prime,
                "distinct-coefficient combination must be prime");

        // Method agreement on 1000 random rational points of each polytope;
        // classify_scaling throws if the two methods ever disagree.
        DeterministicRng rng(20260809);
        for (const Frame& f : {plus_minus_onb_r2(), f6}) {
            const ScalingPolytope poly = minimal_scalings(f);
            for (int t = 0; t < 1000; ++t) {
                std::vector<long long> c(poly.m());
                long long total = 0;
                for (auto& x : c) {
                    x = rng.uniform_int(0, 8);
                    total += x;
                }
                if (total == 0) { c[0] = 1; total = 1; }
                std::vector<Scalar> w(f.k(), Scalar(0));
                for (int i = 0; i < poly.m(); ++i) {
                    if (c[i] == 0) continue;
                    const Scalar alpha{Rational(c[i]) / Rational(total)};
                    for (int r = 0; r < f.k(); ++r) w[r] += alpha * poly.minimal[i][r];
                }
                classify_scaling(f, w);
            }
        }
    });

    criterion(7, "strict-prime theorem check on the two paper frames", 5.0, [] {
        const auto none = has_prime_strict_scaling(orthogonal_pairs_frame());
        require(!none.exists,
                "{e1,e2,(e1+e2)/sqrt2,(e1-e2)/sqrt2} must have no prime strict scaling");
        const auto some = has_prime_strict_scaling(plus_minus_onb_r2());
        require(some.exists, "{e1,e2,-e1,-e2} must have a prime strict scaling");
        for (const auto& x : some.witness)
            require(x.sign() > 0, "witness must be strict");
        require(classify_scaling(plus_minus_onb_r2(), some.witness).prime,
                "witness must verify prime");
    });

    criterion(8, "projection suite: interlacing, diag(4,2,1), poset-preserving reduction",
              120.0, [] {
        DeterministicRng rng(8);
        const Tolerance tol{1e-7, 1e-7};
        for (int t = 0; t < 1000; ++t) {
            const int n = 3 + static_cast<int>(rng.uniform_int(0, 1));
            const int k = n + static_cast<int>(rng.uniform_int(0, 7 - n));
            const Frame f = random_float_frame(rng, n, k);
            require(interlacing_check(f, rng.unit_vector(n), tol),
                    "interlacing violated within 1e-7");
        }
        Frame diag;
        diag.field = Field::Real;
        diag.n = 3;
        diag.mode = ScalarMode::float_mode();
        diag.vectors = {{Scalar::real_float(2.0), Scalar::real_float(0.0), Scalar::real_float(0.0)},
                        {Scalar::real_float(0.0), Scalar::real_float(std::sqrt(2.0)),
                         Scalar::real_float(0.0)},
                        {Scalar::real_float(0.0), Scalar::real_float(0.0),
                         Scalar::real_float(1.0)}};
        const auto rep = find_tight_projections(diag, tol);
        require(rep.tag == ProjectionReport::Case::TwoTightSubspaces,
                "diag(4,2,1) must yield exactly two tight subspaces");
        require(rep.normals.size() == 2, "expected two normals");
        for (const auto& nu : rep.normals) {
            const Frame proj = project_frame(diag, nu, tol);
            const auto fo = frame_operator(proj, tol);
            require(fo.is_tight, "re-verified projection must be tight");
            require(std::abs(fo.tight_bound->to_double() - 2.0) <= 1e-7 * 2.0 + 1e-7,
                    "tight bound must equal 2 within 1e-7");
        }
        DeterministicRng frames(88);
        for (int t = 0; t < 100; ++t) {
            const int n = 3 + static_cast<int>(frames.uniform_int(0, 1));
            const int k = n + static_cast<int>(frames.uniform_int(0, 7 - n));
            const Frame f = random_exact_frame(frames, n, k);
            const Poset base = factor_poset(f);
            const Frame reduced = reduce_dimension_preserving_poset(f, 2, 4000 + t);
            require(factor_poset(reduced) == base,
                    "dimension reduction failed to preserve the poset");
        }
    });

    criterion(9, "Furedi bound over the census (equality at k=4) and extremal EC sizes",
              60.0, [] {
        for (int k = 2; k <= 6; ++k) {
            const CensusResult census = enumerate_factor_posets_r2(k);
            bool attained = false;
            for (const auto& e : census.entries) {
                if (!e.poset.contains(full_set(k))) continue;
                require(check_furedi_bound(e.poset), "Furedi bound violated in the census");
                if (k == 4 && e.poset.sets.size() == furedi_bound(4)) attained = true;
            }
            if (k == 4) {
                require(attained, "k=4 bound must be attained");
                const Poset p = factor_poset(plus_minus_onb_r2());
                require(p.sets.size() == furedi_bound(4),
                        "the four-vector example must attain C(4,2) = 6");
            }
        }
        for (int k : {4, 6, 8, 10}) {
            const Frame f = extremal_ec_frame(k);
            const auto ec = empty_cover(factor_poset(f));
            require(ec.size() == extremal_ec_size(k),
                    "extremal family EC size mismatch at k=" + std::to_string(k));
        }
    });

    criterion(10, "necessity: 1000 random exact frames give span-closed, "
                  "closure-satisfying posets", 120.0, [] {
        DeterministicRng rng(10);
        for (int t = 0; t < 1000; ++t) {
            const int n = 2 + static_cast<int>(rng.uniform_int(0, 1));
            const int k = n + static_cast<int>(rng.uniform_int(0, 7 - n));
            const Frame f = random_exact_frame(rng, n, k);
            const Poset p = factor_poset(f);
            require(is_span_closed(p).closed, "a factor poset failed span-closure");
            require(satisfies_closure_condition(p).ok,
                    "a factor poset failed the closure condition");
        }
    });

    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    return 1;
}
