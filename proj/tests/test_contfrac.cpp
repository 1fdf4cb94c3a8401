#include <catch_amalgamated.hpp>

#include "lensball/contfrac.hpp"

using namespace lensball;

namespace {

ContinuedFraction cf(std::initializer_list<long> xs) {
    ContinuedFraction out;
    out.coefficients.assign(xs.begin(), xs.end());
    return out;
}

std::vector<Int> ints(std::initializer_list<long> xs) {
    return std::vector<Int>(xs.begin(), xs.end());
}

} // namespace

TEST_CASE("evaluation") {
    CfValue v = evaluate(cf({-3, -5, -2}));
    CHECK(v.value == Rat(-25, 9));
    CHECK(v.det_head == -25);
    CHECK(v.det_tail == 9);

    CHECK(evaluate(cf({-2, 2, 1, -2, 2})).value == Rat(-25, 9));
    CHECK(evaluate(cf({7})).value == Rat(7));
    CHECK(evaluate(cf({-2})).value == Rat(-2));

    // [1, 1] evaluates below a reciprocal of zero.
    CHECK_THROWS_AS(evaluate(cf({3, 1, 1})), DegenerateTail);
    CHECK_THROWS_AS(evaluate(ContinuedFraction{}), std::invalid_argument);
}

TEST_CASE("prefix continuants") {
    CHECK(det_sequence(cf({-2, 2, 1, -2, 2})) == ints({-2, -5, -3, 11, 25}));
    CHECK(det_sequence(cf({6})) == ints({6}));
    CHECK(det_sequence(cf({-2, -2, -2})) == ints({-2, 3, -4}));
}

TEST_CASE("value equals the continuant quotient") {
    // Deterministic pseudo-random chains, avoiding degenerate tails.
    unsigned state = 12345;
    auto next = [&state] {
        state = state * 1664525u + 1013904223u;
        return state >> 16;
    };
    for (int trial = 0; trial < 200; ++trial) {
        ContinuedFraction chain;
        std::size_t len = 1 + next() % 7;
        for (std::size_t i = 0; i < len; ++i) chain.coefficients.push_back(-2 - static_cast<long>(next() % 5));
        CfValue v = evaluate(chain);
        CHECK(v.value == Rat(v.det_head) / Rat(v.det_tail));
        CHECK(det_sequence(chain).back() == v.det_head);
    }
}

TEST_CASE("negative expansion") {
    CHECK(negative_expansion(Rat(-25, 9)).coefficients == ints({-3, -5, -2}));
    CHECK(negative_expansion(Rat(-2)).coefficients == ints({-2}));
    CHECK(negative_expansion(Rat(-49, 13)).coefficients == ints({-4, -5, -2, -2}));
    CHECK(evaluate(negative_expansion(Rat(-49, 13))).value == Rat(-49, 13));
    // Values in (-2, -1) have all-<=-2 expansions too.
    CHECK(negative_expansion(Rat(-3, 2)).coefficients == ints({-2, -2}));
    CHECK_THROWS_AS(negative_expansion(Rat(-1)), std::invalid_argument);
    CHECK_THROWS_AS(negative_expansion(Rat(-1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(negative_expansion(Rat(5)), std::invalid_argument);
}

TEST_CASE("expansion round-trips on all-below-minus-two chains") {
    unsigned state = 987;
    auto next = [&state] {
        state = state * 1664525u + 1013904223u;
        return state >> 16;
    };
    for (int trial = 0; trial < 200; ++trial) {
        ContinuedFraction chain;
        std::size_t len = 1 + next() % 6;
        for (std::size_t i = 0; i < len; ++i) chain.coefficients.push_back(-2 - static_cast<long>(next() % 4));
        ContinuedFraction back = negative_expansion(evaluate(chain).value);
        REQUIRE(back.coefficients == chain.coefficients);
    }
}

TEST_CASE("symmetric chain of the PQ pair") {
    CHECK(symmetric_chain(pq_pair(5, 2)).coefficients == ints({-2, 2, 1, -2, 2}));
    CHECK(symmetric_chain(pq_pair(7, 2)).coefficients == ints({-3, 2, 1, -2, 3}));
    CHECK(symmetric_chain(pq_pair(8, 3)).coefficients == ints({-2, 1, -2, 1, 2, -1, 2}));
    CHECK(symmetric_chain(pq_pair(3, 1)).coefficients == ints({-3, 1, 3}));

    CHECK(evaluate(symmetric_chain(pq_pair(5, 2))).value == Rat(-25, 9));
    CHECK(evaluate(symmetric_chain(pq_pair(7, 2))).value == Rat(-49, 13));
    CHECK(evaluate(symmetric_chain(pq_pair(8, 3))).value == Rat(-64, 23));
    CHECK_THROWS_AS(symmetric_chain(mn_pair(2, 3)), std::invalid_argument);
}

TEST_CASE("MN-side chain") {
    CHECK(a_side_chain(mn_pair(2, 3)).coefficients == ints({2, -2, 1, 2, -2}));
    CHECK(a_side_chain(mn_pair(1, 2)).coefficients == ints({-3, 1, 3}));
    CHECK(a_side_chain(mn_pair(3, 4)).coefficients == ints({3, -2, 1, 2, -3}));

    CHECK(abs(evaluate(a_side_chain(mn_pair(2, 3))).value) == Rat(25, 11));
    CHECK(abs(evaluate(a_side_chain(mn_pair(1, 2))).value) == Rat(9, 2));
    CHECK(abs(evaluate(a_side_chain(mn_pair(3, 4))).det_head) == 49);
    CHECK_THROWS_AS(a_side_chain(pq_pair(5, 2)), std::invalid_argument);
}

TEST_CASE("chain identities across a range") {
    for (long p = 3; p <= 70; ++p) {
        for (long q = 1; 2 * q < p; ++q) {
            if (gcd(Int(p), Int(q)) != 1) continue;
            Rat target = Rat(-Int(p) * p) / Rat(Int(p) * q - 1);
            REQUIRE(evaluate(symmetric_chain(pq_pair(p, q))).value == target);

            ContinuedFraction expansion = negative_expansion(target);
            for (const Int& c : expansion.coefficients) REQUIRE(c <= -2);
            REQUIRE(evaluate(expansion).value == target);
        }
    }
    for (long n = 2; n <= 40; ++n)
        for (long m = 1; m < n; ++m) {
            if (gcd(Int(m), Int(n)) != 1) continue;
            Int head = evaluate(a_side_chain(mn_pair(m, n))).det_head;
            REQUIRE(abs(head) == Int(m + n) * (m + n));
        }
}
