#include <catch_amalgamated.hpp>

#include "lensball/sweep.hpp"

using namespace lensball;

TEST_CASE("pair enumeration") {
    std::vector<CoprimePair> pairs = enumerate_pq(3, ParityFilter::All);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].p() == 3);
    CHECK(pairs[0].q() == 1);

    pairs = enumerate_pq(8, ParityFilter::All);
    // (3,1) (4,1) (5,1) (5,2) (6,1) (7,1) (7,2) (7,3) (8,1) (8,3)
    CHECK(pairs.size() == 10);

    pairs = enumerate_pq(8, ParityFilter::EvenP);
    for (const CoprimePair& pq : pairs) REQUIRE(is_even(pq.p()));
    CHECK(pairs.size() == 4);

    pairs = enumerate_pq(9, ParityFilter::OddP);
    for (const CoprimePair& pq : pairs) REQUIRE(is_odd(pq.p()));

    std::vector<CoprimePair> mns = enumerate_mn(4);
    // (1,2) (1,3) (2,3) (1,4) (3,4)
    CHECK(mns.size() == 5);
}

TEST_CASE("verify_pair finds nothing wrong on known-good pairs") {
    CHECK(verify_pair(pq_pair(5, 2)).empty());
    CHECK(verify_pair(pq_pair(8, 3)).empty());
    CHECK(verify_pair(pq_pair(7, 1)).empty());
    CHECK(verify_pair(pq_pair(11, 4)).empty());
    CHECK(verify_tb(mn_pair(4, 9)).empty());
}

TEST_CASE("sweep bookkeeping and determinism") {
    SweepConfig config;
    config.max_p = 40;
    config.parallelism = 1;
    SweepReport serial = run_sweep(config);
    CHECK(serial.checked == serial.passed + serial.failures.size());
    CHECK(serial.failures.empty());
    CHECK(serial.checked == enumerate_pq(40, ParityFilter::All).size());

    config.parallelism = 4;
    SweepReport parallel = run_sweep(config);
    CHECK(parallel.checked == serial.checked);
    CHECK(parallel.passed == serial.passed);
    REQUIRE(parallel.rows.size() == serial.rows.size());
    for (std::size_t k = 0; k < serial.rows.size(); ++k) {
        CHECK(parallel.rows[k].p == serial.rows[k].p);
        CHECK(parallel.rows[k].q == serial.rows[k].q);
        CHECK(parallel.rows[k].m == serial.rows[k].m);
        CHECK(parallel.rows[k].n == serial.rows[k].n);
        CHECK(parallel.rows[k].c == serial.rows[k].c);
        CHECK(parallel.rows[k].d == serial.rows[k].d);
        CHECK(parallel.rows[k].ell == serial.rows[k].ell);
        CHECK(parallel.rows[k].pass == serial.rows[k].pass);
    }

    CHECK_THROWS_AS(run_sweep(SweepConfig{.max_p = 2}), std::invalid_argument);
}

TEST_CASE("parity filters restrict the sweep") {
    SweepConfig config;
    config.max_p = 30;
    config.parity = ParityFilter::EvenP;
    SweepReport rep = run_sweep(config);
    CHECK(rep.failures.empty());
    for (const SweepRow& row : rep.rows) REQUIRE(is_even(row.p));
}
