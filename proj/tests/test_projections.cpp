#include <doctest.h>

#include <cmath>

#include "frameposet/projections.hpp"
#include "test_helpers.hpp"

using namespace frameposet;
using namespace frameposet::test;

namespace {

Frame diag_frame(std::vector<double> diag_entries) {
    // Vectors sqrt(d_i) e_i: frame operator = diag(d).
    const int n = static_cast<int>(diag_entries.size());
    Frame f;
    f.field = Field::Real;
    f.n = n;
    f.mode = ScalarMode::float_mode();
    for (int i = 0; i < n; ++i) {
        std::vector<Scalar> v(n, Scalar::real_float(0.0));
        v[i] = Scalar::real_float(std::sqrt(diag_entries[i]));
        f.vectors.push_back(std::move(v));
    }
    return f;
}

} // namespace

TEST_CASE("lambda_f") {
    const Frame tight = to_float_frame(plus_minus_onb_r2());
    CHECK(lambda_f(tight, std::vector<double>{1.0, 0.0}) == doctest::Approx(2.0));
    CHECK(lambda_f(tight, std::vector<double>{std::sqrt(0.5), std::sqrt(0.5)}) ==
          doctest::Approx(2.0));

    const Frame stretched = diag_frame({1, 1, 9});
    CHECK(lambda_f(stretched, std::vector<double>{0.0, 0.0, 1.0}) == doctest::Approx(9.0));
    CHECK_THROWS_AS(lambda_f(stretched, std::vector<double>{1.0, 1.0, 0.0}),
                    ValidationError);

    DeterministicRng rng(13);
    for (int t = 0; t < 100; ++t) {
        const Frame f = random_float_frame(rng, 3, 5);
        const auto lam = frame_operator_eigenvalues(f);
        const double val = lambda_f(f, rng.unit_vector(3));
        CHECK(val <= lam.front() + 1e-9);
        CHECK(val >= lam.back() - 1e-9);
    }
}

TEST_CASE("project_frame on the paper's diag(1,1,9) example") {
    const Frame f = diag_frame({1, 1, 9});
    SUBCASE("onto e3-perp: tight (after the zero-vector caveat)") {
        const Frame proj = project_frame(f, std::vector<double>{0, 0, 1});
        CHECK(proj.n == 2);
        const Frame stripped = strip_zero_vectors(proj);
        CHECK(stripped.k() == 2);
        CHECK(frame_operator(stripped).is_tight);
    }
    SUBCASE("onto e2-perp: not tight") {
        const Frame proj = project_frame(f, std::vector<double>{0, 1, 0});
        const Frame stripped = strip_zero_vectors(proj);
        CHECK_FALSE(frame_operator(stripped).is_tight);
    }
    SUBCASE("zero normal is rejected") {
        CHECK_THROWS_AS(project_frame(f, std::vector<double>{0, 0, 0}), ValidationError);
    }
}

TEST_CASE("tight frames stay tight under every sampled projection") {
    DeterministicRng rng(19);
    // Tight frame in R^3: ONB doubled.
    Frame f = onb_frame(3);
    for (int i = 0; i < 3; ++i) f.vectors.push_back(f.vectors[i]);
    const Frame g = to_float_frame(f);
    for (int t = 0; t < 50; ++t) {
        const Frame proj = project_frame(g, rng.unit_vector(3));
        CHECK(frame_operator(proj, Tolerance{1e-7, 1e-7}).is_tight);
    }
}

TEST_CASE("projection frame bounds stay inside the original bounds") {
    DeterministicRng rng(29);
    for (int t = 0; t < 100; ++t) {
        const Frame f = random_float_frame(rng, 4, 7);
        const auto lam = frame_operator_eigenvalues(f);
        const Frame proj = project_frame(f, rng.unit_vector(4));
        const auto mu = frame_operator_eigenvalues(proj);
        CHECK(mu.front() <= lam.front() + 1e-7);
        CHECK(mu.back() >= lam.back() - 1e-7);
    }
}

TEST_CASE("find_tight_projections") {
    SUBCASE("tight frame: all projections tight") {
        Frame f = onb_frame(3);
        for (int i = 0; i < 3; ++i) f.vectors.push_back(f.vectors[i]);
        const auto rep = find_tight_projections(to_float_frame(f));
        CHECK(rep.tag == ProjectionReport::Case::AllTight);
    }
    SUBCASE("S = diag(4,2,1): two tight subspaces with equal bound 2") {
        const auto rep = find_tight_projections(diag_frame({4, 2, 1}));
        REQUIRE(rep.tag == ProjectionReport::Case::TwoTightSubspaces);
        REQUIRE(rep.normals.size() == 2);
        CHECK(*rep.tight_bound == doctest::Approx(2.0));
        const Frame f = diag_frame({4, 2, 1});
        for (const auto& nu : rep.normals) {
            const Frame proj = project_frame(f, nu);
            const auto fo = frame_operator(proj, Tolerance{1e-7, 1e-7});
            CHECK(fo.is_tight);
            CHECK(fo.tight_bound->to_double() == doctest::Approx(2.0).epsilon(1e-7));
        }
        // Independent oracle for the normal directions: a(x.eta1)^2 = b(x.etan)^2
        // with a = 2, b = 1 gives normals prop to (sqrt(2), 0, -+1).
        const double expect0 = std::sqrt(2.0 / 3.0);
        CHECK(std::abs(rep.normals[0][0].real()) == doctest::Approx(expect0));
        CHECK(std::abs(rep.normals[1][0].real()) == doctest::Approx(expect0));
    }
    SUBCASE("S = diag(4,2,2): exactly one (normal = eta_1)") {
        const auto rep = find_tight_projections(diag_frame({4, 2, 2}));
        REQUIRE(rep.tag == ProjectionReport::Case::OneTightSubspace);
        REQUIRE(rep.normals.size() == 1);
        CHECK(std::abs(rep.normals[0][0].real()) == doctest::Approx(1.0));
        CHECK(*rep.tight_bound == doctest::Approx(2.0));
    }
    SUBCASE("S = diag(4,3,2,1): middle eigenvalues split, none") {
        const auto rep = find_tight_projections(diag_frame({4, 3, 2, 1}));
        CHECK(rep.tag == ProjectionReport::Case::None);
    }
    SUBCASE("n = 2 is rejected") {
        CHECK_THROWS_AS(find_tight_projections(to_float_frame(onb_frame(2))),
                        ValidationError);
    }
    SUBCASE("complex family lies in span{eta_1, eta_n}") {
        // Frame operator diag(4,2,1) over C^3, one entry genuinely complex.
        Frame f;
        f.field = Field::Complex;
        f.n = 3;
        f.mode = ScalarMode::float_mode();
        const Scalar z0 = Scalar::real_float(0.0);
        f.vectors = {{Scalar::real_float(2.0), z0, z0},
                     {z0, Scalar::complex_float({0.0, std::sqrt(2.0)}), z0},
                     {z0, z0, Scalar::real_float(1.0)}};
        const auto rep = find_tight_projections(f);
        CHECK(rep.tag == ProjectionReport::Case::ComplexFamily);
        REQUIRE(rep.family_basis.size() == 2);
    }
}

TEST_CASE("interlacing") {
    SUBCASE("{e1,e2,3e3} projected along e3: mu = (1,1) interlaces (9,1,1)") {
        const Frame f = diag_frame({1, 1, 9});
        CHECK(interlacing_check(f, std::vector<double>{0, 0, 1}, Tolerance{1e-7, 1e-7}));
        const Frame proj = project_frame(f, std::vector<double>{0, 0, 1});
        const auto mu = frame_operator_eigenvalues(proj);
        CHECK(mu[0] == doctest::Approx(1.0));
        CHECK(mu[1] == doctest::Approx(1.0));
    }
    SUBCASE("tight frame: projected eigenvalues all equal the bound") {
        Frame f = onb_frame(3);
        for (int i = 0; i < 3; ++i) f.vectors.push_back(f.vectors[i]);
        const Frame g = to_float_frame(f);
        DeterministicRng rng(37);
        const Frame proj = project_frame(g, rng.unit_vector(3));
        for (double mu : frame_operator_eigenvalues(proj))
            CHECK(mu == doctest::Approx(2.0).epsilon(1e-9));
    }
    SUBCASE("1000 random frames and normals") {
        DeterministicRng rng(43);
        for (int t = 0; t < 1000; ++t) {
            const int n = 3 + static_cast<int>(rng.uniform_int(0, 1));
            const int k = n + static_cast<int>(rng.uniform_int(0, 7 - n));
            const Frame f = random_float_frame(rng, n, k);
            CHECK(interlacing_check(f, rng.unit_vector(n), Tolerance{1e-7, 1e-7}));
        }
    }
}

TEST_CASE("reduce_dimension_preserving_poset") {
    SUBCASE("target = n is the identity") {
        const Frame f = to_float_frame(plus_minus_onb_r2());
        const Frame g = reduce_dimension_preserving_poset(f, 2, 1);
        CHECK(g.n == 2);
        CHECK(factor_poset(g) == factor_poset(f));
    }
    SUBCASE("tight 4-vector R^3 frame reduces to R^2 with identical poset") {
        // Cube-corner frame: S = 4I, prime tight.
        const Frame f = real_exact_frame(3, {{Scalar(1), Scalar(1), Scalar(1)},
                                             {Scalar(1), Scalar(-1), Scalar(-1)},
                                             {Scalar(-1), Scalar(1), Scalar(-1)},
                                             {Scalar(-1), Scalar(-1), Scalar(1)}});
        REQUIRE(frame_operator(f).is_tight);
        const Poset base = factor_poset(f);
        CHECK(base == poset_of(4, {{1, 2, 3, 4}}));
        const Frame reduced = reduce_dimension_preserving_poset(f, 2, 2024);
        CHECK(reduced.n == 2);
        CHECK(factor_poset(reduced) == base);
    }
    SUBCASE("poset preserved on 100 seeded random frames") {
        DeterministicRng rng(53);
        int runs = 0;
        for (int t = 0; t < 100; ++t) {
            const int n = 3 + static_cast<int>(rng.uniform_int(0, 1));
            const int k = n + static_cast<int>(rng.uniform_int(0, 7 - n));
            const Frame f = random_exact_frame(rng, n, k);
            const Poset base = factor_poset(f);
            const int target = 2 + static_cast<int>(rng.uniform_int(0, n - 2));
            const Frame reduced =
                reduce_dimension_preserving_poset(f, target, 1000 + t);
            FactorPosetOptions fpo;
            CHECK(factor_poset(reduced, fpo) == base);
            ++runs;
        }
        CHECK(runs == 100);
    }
    SUBCASE("bad target dimension") {
        const Frame f = to_float_frame(onb_frame(3));
        CHECK_THROWS_AS(reduce_dimension_preserving_poset(f, 1, 1), ValidationError);
        CHECK_THROWS_AS(reduce_dimension_preserving_poset(f, 4, 1), ValidationError);
    }
}

TEST_CASE("dimension_upper_bound") {
    CHECK(dimension_upper_bound(factor_poset(plus_minus_onb_r2())) == 2);
    CHECK(dimension_upper_bound(poset_of(5, {{1, 2, 3}, {1, 4, 5}})) == 3);
    CHECK_THROWS_AS(dimension_upper_bound(make_poset(3, {})), ValidationError);
}

TEST_CASE("dimension_upper_bound is only a bound: the two-axis family") {
    // {e1 x4, -sqrt(2) e2 x2}: every nonempty element has size >= 3, so the
    // bound reports 3, yet the poset forces k/2-1 copies of one diagram
    // vector per minimal element, so only R^2 realizes it.
    const Frame f = extremal_ec_frame(6);
    const Poset p = factor_poset(f);
    CHECK(dimension_upper_bound(p) == 3);
    // Its minimal elements pair two of the first four indices with one tail.
    for (IndexSet s : empty_cover(p)) CHECK(set_size(s) == 3);
}
