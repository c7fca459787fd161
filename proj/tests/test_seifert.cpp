#include "casson/charvar.hpp"
#include "casson/seifert.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

using namespace casson;

namespace {

// sorted pairwise-coprime tuples of length n with product <= cap
void coprime_tuples(size_t n, long cap, std::vector<std::vector<long>>& out) {
    std::vector<long> cur;
    std::function<void(long, long)> rec = [&](long start, long prod) {
        if (cur.size() == n) {
            out.push_back(cur);
            return;
        }
        for (long v = start; prod * v <= cap; ++v) {
            bool ok = true;
            for (long u : cur)
                if (std::gcd(u, v) != 1) { ok = false; break; }
            if (!ok) continue;
            cur.push_back(v);
            rec(v, prod * v);
            cur.pop_back();
        }
    };
    rec(1, 1);
}

} // namespace

TEST_CASE("lambda for Seifert fibered homology spheres", "[seifert]") {
    CHECK(lambda_seifert(SeifertTuple({2, 3, 5})) == 2);
    CHECK(lambda_seifert(SeifertTuple({2, 3, 7})) == 3);
    CHECK(lambda_seifert(SeifertTuple({2, 3, 11})) == 5);
    CHECK(lambda_seifert(SeifertTuple({3, 4, 5})) == 6);
    CHECK(lambda_seifert(SeifertTuple({2, 3, 5, 7})) == 23);
    CHECK(lambda_seifert(SeifertTuple({1, 2, 3})) == 0);
    CHECK_THROWS_AS(SeifertTuple({2, 4, 5}), std::domain_error);
    CHECK_THROWS_AS(SeifertTuple({0, 3, 5}), std::domain_error);
}

TEST_CASE("lambda is permutation- and padding-invariant", "[seifert]") {
    std::mt19937 rng(7);
    std::vector<std::vector<long>> tuples;
    coprime_tuples(4, 400, tuples);
    for (auto t : tuples) {
        BigRat base = lambda_seifert(SeifertTuple(t));
        std::shuffle(t.begin(), t.end(), rng);
        CHECK(lambda_seifert(SeifertTuple(t)) == base);
        t.push_back(1);
        CHECK(lambda_seifert(SeifertTuple(t)) == base);
        CHECK(base >= 0);
    }
}

TEST_CASE("Milnor number and the 4-lambda relation", "[seifert]") {
    CHECK(milnor_number(SeifertTuple({2, 3, 5})) == 8);
    CHECK(milnor_number(SeifertTuple({2, 3, 7})) == 12);
    CHECK(lambda_seifert(SeifertTuple({2, 3, 7})) * 4 ==
          BigRat(milnor_number(SeifertTuple({2, 3, 7}))));
    CHECK(milnor_number(SeifertTuple({1, 4, 9})) == 0);

    SECTION("4 lambda = mu for every n=3 tuple in a small grid") {
        std::vector<std::vector<long>> tuples;
        coprime_tuples(3, 400, tuples);
        REQUIRE(tuples.size() > 100);
        for (const auto& t : tuples) {
            SeifertTuple st(t);
            CHECK(lambda_seifert(st) * 4 == BigRat(milnor_number(st)));
        }
    }
    SECTION("the relation fails for n = 4 on (2,3,5,7)") {
        SeifertTuple st({2, 3, 5, 7});
        CHECK(lambda_seifert(st) * 4 == 92);
        CHECK(milnor_number(st) == 48);
        CHECK(lambda_seifert(st) * 4 != BigRat(milnor_number(st)));
    }
}

TEST_CASE("Euler characteristic sum over top components", "[seifert]") {
    CHECK(euler_top_sum(SeifertTuple({2, 3, 5, 7})) == 72);
    CHECK(euler_top_sum(SeifertTuple({2, 3, 5})) == 2);
    CHECK(euler_top_sum(SeifertTuple({1, 4, 9})) == 0);
    // for n = 3 the sum reduces to mu/4 = lambda
    for (auto t : {std::vector<long>{2, 3, 5}, {2, 3, 7}, {3, 4, 5}, {2, 5, 7}})
        CHECK(BigRat(euler_top_sum(SeifertTuple(t))) == lambda_seifert(SeifertTuple(t)));
}

TEST_CASE("H_1(.;Z_2) order of a surgery", "[seifert]") {
    CHECK(h1z2_of_surgery(5) == 1);
    CHECK(h1z2_of_surgery(6) == 2);
    CHECK(h1z2_of_surgery(-3) == 1);
    CHECK_THROWS_AS(h1z2_of_surgery(0), std::domain_error);
}

TEST_CASE("connected sums", "[seifert]") {
    CHECK(lambda_connected_sum({{BigRat(2), 1}, {BigRat(3), 1}}) == 5);
    CHECK(lambda_connected_sum({{BigRat(7) / 2, 3}}) == BigRat(7) / 2);
    CHECK(lambda_connected_sum({{BigRat(2), 1}, {BigRat(0), 2}}) == 4);
    CHECK_THROWS_AS(lambda_connected_sum({}), std::domain_error);

    SECTION("fold order does not matter") {
        std::mt19937 rng(99);
        std::uniform_int_distribution<long> lam(0, 20), h(1, 4);
        auto less = [](const SumPiece& a, const SumPiece& b) {
            return a.lambda < b.lambda || (a.lambda == b.lambda && a.h1z2 < b.h1z2);
        };
        for (int i = 0; i < 100; ++i) {
            std::vector<SumPiece> pieces;
            for (int j = 0; j < 3; ++j) pieces.push_back({BigRat(lam(rng)), BigInt(h(rng))});
            BigRat base = lambda_connected_sum(pieces);
            std::sort(pieces.begin(), pieces.end(), less);
            do {
                CHECK(lambda_connected_sum(pieces) == base);
            } while (std::next_permutation(pieces.begin(), pieces.end(), less));
        }
    }
}

TEST_CASE("Seifert presentation coefficients", "[seifert]") {
    std::vector<std::vector<long>> tuples;
    coprime_tuples(3, 200, tuples);
    coprime_tuples(4, 200, tuples);
    for (const auto& t : tuples) {
        SeifertTuple st(t);
        auto b = seifert_coefficients(st);
        BigInt sum(0);
        for (size_t i = 0; i < st.size(); ++i) {
            BigInt prod(1);
            for (size_t j = 0; j < st.size(); ++j)
                if (j != i) prod *= st.a[j];
            sum += b[i] * prod;
        }
        CHECK(sum == 1);
    }
}

TEST_CASE("lattice oracle equals the closed formula on a small grid", "[seifert]") {
    std::vector<std::vector<long>> tuples;
    coprime_tuples(3, 500, tuples);
    coprime_tuples(4, 500, tuples);
    coprime_tuples(5, 300, tuples);
    REQUIRE(tuples.size() > 200);
    for (const auto& t : tuples) {
        SeifertTuple st(t);
        CHECK(BigRat(count_isolated_weights(st)) == lambda_seifert(st));
    }
}
