#include "casson/charvar.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

using namespace casson;

namespace {

constexpr double pi = std::numbers::pi;

// independent route for the weight counts: pick the interior support S and
// multiply the per-generator conjugacy-class counts, with the extra factor 2
// for the first generator sitting at the boundary
long subset_product_count(const SeifertTuple& t, int m) {
    std::vector<long> a = doubled_first_order(t);
    size_t n = a.size();
    std::vector<long> interior(n);
    interior[0] = a[0] - 1;
    for (size_t i = 1; i < n; ++i) interior[i] = (a[i] - 1) / 2;
    long total = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != m) continue;
        long prod = 1;
        for (size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) prod *= interior[i];
        if (!(mask & 1u)) prod *= 2; // alpha_1 may sit at 0 or 1/2
        total += prod;
    }
    return total;
}

Mat2c diag_angle(double th) { return mat_diag(th); }

} // namespace

TEST_CASE("solve_abc produces Bezout triples", "[charvar]") {
    auto check_identity = [](long p, long q, long r) {
        auto [a, b, c] = solve_abc(p, q, r);
        CHECK(a * q * r + b * p * r + c * p * q == 1);
    };
    check_identity(2, 3, 5);
    check_identity(1, 1, 1);
    check_identity(2, 3, 7);
    check_identity(3, 4, 5);
    check_identity(7, 9, 10);
    CHECK_THROWS_AS(solve_abc(2, 4, 5), std::domain_error);
    CHECK_THROWS_AS(solve_abc(0, 3, 5), std::domain_error);

    SECTION("parity normalization keeps the identity and makes b, c even") {
        for (auto [p, q, r] : {std::array<long, 3>{2, 3, 5}, {2, 3, 7}, {2, 5, 7}, {4, 3, 5}}) {
            auto abc = normalize_abc_parity(p, q, r, solve_abc(p, q, r));
            auto [a, b, c] = abc;
            CHECK(a * q * r + b * p * r + c * p * q == 1);
            CHECK(b % 2 == 0);
            CHECK(c % 2 == 0);
            CHECK(a % 2 != 0);
        }
    }
}

TEST_CASE("weight-vector lattice counts", "[charvar]") {
    CHECK(count_isolated_weights(SeifertTuple({2, 3, 5})) == 2);
    CHECK(count_isolated_weights(SeifertTuple({2, 3, 5, 7})) == 23);
    CHECK(count_isolated_weights(SeifertTuple({1, 2, 3})) == 0);

    SECTION("by-dimension map") {
        auto c1 = components_by_dimension(SeifertTuple({2, 3, 5}));
        REQUIRE(c1.size() == 1);
        CHECK(c1.at(0) == 2);

        auto c2 = components_by_dimension(SeifertTuple({2, 3, 5, 7}));
        REQUIRE(c2.size() == 2);
        CHECK(c2.at(0) == 23);
        CHECK(c2.at(2) == subset_product_count(SeifertTuple({2, 3, 5, 7}), 4));
    }
    SECTION("counts agree with the subset-product route") {
        for (auto t : {std::vector<long>{2, 3, 5}, {2, 3, 7}, {2, 3, 5, 7}, {3, 4, 5},
                       {1, 2, 3, 5, 7}}) {
            SeifertTuple st(t);
            auto bym = enumerate_weights(st).by_m;
            for (int m = 0; m <= static_cast<int>(st.size()); ++m) {
                long got = bym.count(m) ? bym.at(m) : 0;
                CHECK(got == subset_product_count(st, m));
            }
        }
    }
    SECTION("for n = 3 the top count is (p-1)(q-1)(r-1)/4") {
        for (auto t : {std::vector<long>{2, 3, 5}, {2, 3, 7}, {2, 5, 7}, {3, 4, 5}}) {
            SeifertTuple st(t);
            CHECK(BigRat(components_by_dimension(st).at(0)) == lambda_seifert(st));
        }
    }
    SECTION("enumeration is self-consistent") {
        SeifertTuple st({2, 3, 5, 7});
        auto e = enumerate_weights(st);
        long sum = 0;
        for (const auto& [m, c] : e.by_m) sum += c;
        CHECK(sum == e.total);
    }
}

TEST_CASE("trace conjugator of the two-generator lemma", "[charvar]") {
    SECTION("symmetric case") {
        auto cj = lemma_abc_conjugator(pi / 2, pi / 2, pi / 2);
        CHECK(cj.u == Catch::Approx(0.5));
        CHECK(cj.v == Catch::Approx(0.5));
    }
    SECTION("solves the trace equation") {
        auto check_traces = [](double al, double be, double ga) {
            auto cj = lemma_abc_conjugator(al, be, ga);
            Mat2c A = diag_angle(al), B = diag_angle(be);
            Mat2c P = cj.P();
            CHECK(std::abs(P.det() - cd(1.0)) < 1e-12);
            Mat2c M = A * P * B * mat_inverse(P);
            CHECK(std::abs(M.trace() - cd(2 * std::cos(ga))) < 1e-10);
        };
        check_traces(pi / 4, pi / 3, pi / 2);
        check_traces(pi / 6, pi / 6, pi / 3); // tr = 2cos(pi/3) = 1
        check_traces(1.1, 0.4, 2.7);
    }
    SECTION("rejects angles outside (0, pi)") {
        CHECK_THROWS_AS(lemma_abc_conjugator(0.0, 1.0, 1.0), std::domain_error);
        CHECK_THROWS_AS(lemma_abc_conjugator(1.0, pi, 1.0), std::domain_error);
    }
}

TEST_CASE("triangle-group representations", "[charvar]") {
    TrianglePresentation pres = TrianglePresentation::for_tuple(SeifertTuple({2, 3, 5}));
    REQUIRE(pres.orders == std::vector<long>{4, 3, 5});

    SECTION("the two characters of Sigma(2,3,5)") {
        for (double th3 : {2 * pi / 5, 4 * pi / 5}) {
            NumericRep rep = build_triangle_rep(pres, {0.0, -1.0, 2 * std::cos(th3)});
            CHECK(rep.residual < 1e-9);
            CHECK(rep.irred_gap > 1e-6);
            for (const auto& img : rep.images)
                CHECK(std::abs(img.det() - cd(1.0)) < 1e-12);
            auto rr = verify_relations(rep, pres, 1e-9);
            CHECK(rr.pass);
        }
    }
    SECTION("central trace is rejected where irreducibility needs three noncentral images") {
        CHECK_THROWS_AS(build_triangle_rep(pres, {2.0, -1.0, 2 * std::cos(2 * pi / 5)}),
                        std::domain_error);
        CHECK_THROWS_AS(build_triangle_rep(pres, {-2.0, -1.0, 2 * std::cos(2 * pi / 5)}),
                        std::domain_error);
    }
    SECTION("free presentation with identity images has zero defect") {
        TrianglePresentation free_pres;
        free_pres.orders = {0, 0};
        free_pres.product_relation = false;
        NumericRep rep;
        rep.images = {mat_identity(), mat_identity()};
        CHECK(verify_relations(rep, free_pres, 1e-12).max_defect == 0.0);
    }
    SECTION("perturbation is detected") {
        NumericRep rep = build_triangle_rep(pres, {0.0, -1.0, 2 * std::cos(2 * pi / 5)});
        rep.images[1].b += cd(1e-3);
        auto rr = verify_relations(rep, pres, 1e-9);
        CHECK(rr.max_defect > 1e-4);
        CHECK(!rr.pass);
    }
}

TEST_CASE("Fox cocycle dimensions for Brieskorn spheres", "[charvar]") {
    auto run_tuple = [](long p, long q, long r) {
        auto abc = normalize_abc_parity(p, q, r, solve_abc(p, q, r));
        TrianglePresentation pres;
        pres.orders = {2 * p, q, r};
        for (const auto& [t1, t2, t3] : character_angles(p, q, r)) {
            NumericRep rep = build_triangle_rep(
                pres, {2 * std::cos(t1), 2 * std::cos(t2), 2 * std::cos(t3)});
            REQUIRE(rep.residual < 1e-9);
            auto rpt = fox_cocycle_dims(rep, {p, q, r}, abc);
            CHECK(rpt.dim_z1 == 3);
            CHECK(rpt.dim_b1 == 3);
            CHECK(rpt.dim_h1 == 0);
            CHECK(rpt.irreducible);
        }
    };
    run_tuple(2, 3, 5);
    run_tuple(2, 3, 7);

    SECTION("a central representation is flagged, not counted") {
        NumericRep triv;
        triv.images = {mat_identity(), mat_identity(), mat_identity()};
        auto rpt = fox_cocycle_dims(triv, {2, 3, 5},
                                    normalize_abc_parity(2, 3, 5, solve_abc(2, 3, 5)));
        CHECK(rpt.dim_b1 < 3);
        CHECK(!rpt.irreducible);
    }
}

TEST_CASE("generalized Fox system for four exceptional fibers", "[charvar]") {
    SeifertTuple st({2, 3, 5, 7});
    std::vector<long> a = doubled_first_order(st); // (2,3,5,7)
    REQUIRE(a == std::vector<long>{2, 3, 5, 7});
    auto bs_big = seifert_coefficients(st);
    std::vector<long long> bs;
    for (const auto& b : bs_big) bs.push_back(static_cast<long long>(b));
    // force b_i even for the odd multiplicities, compensating on the first
    for (size_t i = 1; i < bs.size(); ++i)
        while (bs[i] % 2 != 0) { bs[i] += a[i]; bs[0] -= a[0]; }
    {
        long long check = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            long long prod = 1;
            for (size_t j = 0; j < a.size(); ++j)
                if (j != i) prod *= a[j];
            check += bs[i] * prod;
        }
        REQUIRE(check == 1);
    }

    TrianglePresentation pres;
    pres.orders = {4, 3, 5, 7};

    SECTION("an isolated character (three noncentral images) has H^1 = 0") {
        NumericRep rep = build_triangle_rep(
            pres, {2.0, -1.0, 2 * std::cos(2 * pi / 5), 2 * std::cos(2 * pi / 7)});
        REQUIRE(rep.residual < 1e-9);
        auto rpt = fox_cocycle_dims_general(rep.images, a, bs);
        CHECK(rpt.dim_z1 == 3);
        CHECK(rpt.dim_h1 == 0);
    }
    SECTION("a top-dimensional character has H^1 = 2m - 6 = 2") {
        NumericRep rep = build_triangle_rep(
            pres, {0.0, -1.0, 2 * std::cos(2 * pi / 5), 2 * std::cos(2 * pi / 7)});
        REQUIRE(rep.residual < 1e-9);
        auto rpt = fox_cocycle_dims_general(rep.images, a, bs);
        CHECK(rpt.dim_z1 == 5);
        CHECK(rpt.dim_b1 == 3);
        CHECK(rpt.dim_h1 == 2);
    }
}

TEST_CASE("character enumeration sizes", "[charvar]") {
    CHECK(character_angles(2, 3, 5).size() == 2);
    CHECK(character_angles(2, 3, 7).size() == 3);
    CHECK(character_angles(2, 5, 7).size() == 6);
    CHECK(character_angles(4, 3, 5).size() == 6); // Sigma(3,4,5) reordered
}
