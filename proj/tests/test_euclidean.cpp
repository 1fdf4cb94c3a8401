#include <catch_amalgamated.hpp>

#include "lensball/euclidean.hpp"

using namespace lensball;

namespace {

std::vector<Int> ints(std::initializer_list<long> xs) {
    return std::vector<Int>(xs.begin(), xs.end());
}

} // namespace

TEST_CASE("coprime pair role invariants") {
    CHECK_NOTHROW(pq_pair(5, 2));
    CHECK_NOTHROW(pq_pair(3, 1));
    CHECK_NOTHROW(mn_pair(1, 2));
    CHECK_NOTHROW(mn_pair(3, 5));
    CHECK_THROWS_AS(pq_pair(4, 2), std::invalid_argument);  // not coprime
    CHECK_THROWS_AS(pq_pair(5, 3), std::invalid_argument);  // p - q > q fails
    CHECK_THROWS_AS(pq_pair(2, 1), std::invalid_argument);  // p - q > q fails
    CHECK_THROWS_AS(mn_pair(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(mn_pair(5, 3), std::invalid_argument);  // needs n > m
    CHECK_THROWS_AS(pq_pair(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(pq_pair(5, -2), std::invalid_argument);
}

TEST_CASE("remainder and quotient towers") {
    EuclideanData e = euclidean_sequences(pq_pair(5, 2));
    CHECK(e.remainders == ints({5, 2, 1, 0}));
    CHECK(e.quotients == ints({2, 2}));
    CHECK(e.ell == 0);

    e = euclidean_sequences(pq_pair(8, 3));
    CHECK(e.remainders == ints({8, 3, 2, 1, 0}));
    CHECK(e.quotients == ints({2, 1, 2}));
    CHECK(e.ell == 1);

    // q = 1 degenerates to ell = -1.
    e = euclidean_sequences(pq_pair(3, 1));
    CHECK(e.remainders == ints({3, 1, 0}));
    CHECK(e.quotients == ints({3}));
    CHECK(e.ell == -1);

    e = euclidean_sequences(pq_pair(11, 4));
    CHECK(e.remainders == ints({11, 4, 3, 1, 0}));
    CHECK(e.quotients == ints({2, 1, 3}));
    CHECK(e.ell == 1);
}

TEST_CASE("MN pairs run the tower on (n, m)") {
    EuclideanData e = euclidean_sequences(mn_pair(2, 3));
    CHECK(e.r(-1) == 3);
    CHECK(e.r(0) == 2);
    CHECK(e.ell == 0);
    CHECK(e.s(0) == 1);

    e = euclidean_sequences(mn_pair(1, 7));
    CHECK(e.ell == -1);
    CHECK(e.s(0) == 7);
}

TEST_CASE("indexed accessors bound-check") {
    EuclideanData e = euclidean_sequences(pq_pair(5, 2));
    CHECK(e.r(-1) == 5);
    CHECK(e.r(e.ell + 1) == 1);
    CHECK(e.r(e.ell + 2) == 0);
    CHECK_THROWS_AS(e.r(-2), std::out_of_range);
    CHECK_THROWS_AS(e.r(e.ell + 3), std::out_of_range);
    CHECK_THROWS_AS(e.s(-1), std::out_of_range);
    CHECK_THROWS_AS(e.s(e.ell + 2), std::out_of_range);
}

TEST_CASE("tower invariants across a range") {
    for (long p = 3; p <= 80; ++p) {
        for (long q = 1; 2 * q < p; ++q) {
            if (gcd(Int(p), Int(q)) != 1) continue;
            EuclideanData e = euclidean_sequences(pq_pair(p, q));
            REQUIRE(e.r(e.ell + 1) == 1);
            REQUIRE(e.r(e.ell + 2) == 0);
            for (long i = -1; i <= e.ell; ++i) REQUIRE(e.r(i) > e.r(i + 1));
            for (long i = 0; i <= e.ell + 1; ++i) REQUIRE(e.r(i - 1) == e.r(i) * e.s(i) + e.r(i + 1));

            // The quotients and trailing 1 rebuild (p, q).
            Int above = 0, cur = 1;
            for (long i = e.ell + 1; i >= 0; --i) {
                Int prev = cur * e.s(i) + above;
                above = cur;
                cur = prev;
            }
            REQUIRE(cur == p);
            REQUIRE(above == q);
        }
    }
}
