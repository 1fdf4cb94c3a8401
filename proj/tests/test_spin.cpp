#include <catch_amalgamated.hpp>

#include "lensball/spin.hpp"

using namespace lensball;

namespace {

// Exhaustive check of the mod-2 characteristic condition, the slow oracle.
std::vector<CharSublink> brute_force_sublinks(const IntMatrix& linking) {
    const std::size_t n = linking.size();
    std::vector<CharSublink> out;
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            Int lk = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (mask & (std::size_t(1) << j)) lk += linking[i][j];
            ok = mod_reduce(lk - linking[i][i], 2) == 0;
        }
        if (!ok) continue;
        CharSublink member(n);
        for (std::size_t i = 0; i < n; ++i) member[i] = (mask & (std::size_t(1) << i)) ? -1 : 1;
        out.push_back(member);
    }
    std::sort(out.begin(), out.end());
    return out;
}

IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
    IntMatrix out;
    for (auto& r : rows) out.emplace_back(r.begin(), r.end());
    return out;
}

} // namespace

TEST_CASE("characteristic sublinks, small cases") {
    // 0-framed unknot: both the empty sublink and the whole link qualify.
    auto subs = characteristic_sublinks(mat({{0}}));
    REQUIRE(subs.size() == 2);
    CHECK(subs[0] == CharSublink{-1});
    CHECK(subs[1] == CharSublink{1});

    // Odd framing forces membership.
    subs = characteristic_sublinks(mat({{1}}));
    REQUIRE(subs.size() == 1);
    CHECK(subs[0] == CharSublink{-1});

    // Odd-order boundary: unique spin structure.
    subs = characteristic_sublinks(linking_matrix(WeightedChain{symmetric_chain(pq_pair(5, 2)).coefficients}));
    CHECK(subs.size() == 1);

    CHECK_THROWS_AS(characteristic_sublinks(mat({{0, 1}, {2, 0}})), std::invalid_argument);
}

TEST_CASE("characteristic sublinks vs exhaustive enumeration") {
    unsigned state = 31337;
    auto next = [&state] {
        state = state * 1664525u + 1013904223u;
        return state >> 16;
    };
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t n = 1 + next() % 5;
        IntMatrix m(n, std::vector<Int>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                Int v = static_cast<long>(next() % 7) - 3;
                m[i][j] = v;
                m[j][i] = v;
            }
        REQUIRE(characteristic_sublinks(m) == brute_force_sublinks(m));
    }
}

TEST_CASE("admissible labels by parity") {
    auto labels = admissible_labels(pq_pair(5, 2)); // q even: t0 = -1 forced
    REQUIRE(labels.size() == 1);
    CHECK(labels[0] == SpinLabel{-1, 1});

    labels = admissible_labels(pq_pair(7, 3)); // p, q odd: empty sublink
    REQUIRE(labels.size() == 1);
    CHECK(labels[0] == SpinLabel{1, 1});

    labels = admissible_labels(pq_pair(8, 3)); // even p: two structures, t1 = -1
    REQUIRE(labels.size() == 2);
    CHECK(labels[0] == SpinLabel{-1, -1});
    CHECK(labels[1] == SpinLabel{1, -1});
}

TEST_CASE("transport recursion") {
    CHECK(t_transport(pq_pair(5, 2), SpinLabel{1, -1}) == std::vector<int>{1, 1});
    CHECK(t_transport(pq_pair(8, 3), SpinLabel{-1, -1}) == std::vector<int>{-1, 1, 1});
    CHECK(t_transport(pq_pair(8, 3), SpinLabel{1, -1}) == std::vector<int>{1, 1, -1});
    // ell = -1: the list is just [t0].
    CHECK(t_transport(pq_pair(7, 1), SpinLabel{1, 1}) == std::vector<int>{1});

    // Trivial label with every quotient even stays fixed.
    CHECK(t_transport(pq_pair(5, 2), SpinLabel{1, 1}) == std::vector<int>{1, 1});

    CHECK_THROWS_AS(t_transport(pq_pair(8, 3), SpinLabel{1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(t_transport(pq_pair(5, 2), SpinLabel{0, 1}), std::invalid_argument);
}

TEST_CASE("closed form matches the recursion everywhere") {
    for (long p = 3; p <= 80; ++p)
        for (long q = 1; 2 * q < p; ++q) {
            if (gcd(Int(p), Int(q)) != 1) continue;
            CoprimePair pq = pq_pair(p, q);
            long ell = euclidean_sequences(pq).ell;
            for (int t0 : {1, -1})
                for (int t1 : {1, -1}) {
                    if (p % 2 == 0 && t1 == 1) continue;
                    SpinLabel label{t0, t1};
                    std::vector<int> t = t_transport(pq, label);
                    REQUIRE(static_cast<long>(t.size()) == ell + 2);
                    for (long j = 1; j <= ell + 1; ++j)
                        REQUIRE(t[static_cast<std::size_t>(j)] == t_closed_form(pq, label, j));
                }
        }
}

TEST_CASE("final transported value for even p") {
    CHECK(t_final_even_p(pq_pair(8, 3), SpinLabel{1, -1}) == -1);
    CHECK(t_final_even_p(pq_pair(8, 3), SpinLabel{-1, -1}) == 1);
    CHECK(t_final_even_p(pq_pair(4, 1), SpinLabel{1, -1}) == 1); // c = 1, ell = -1
    CHECK_THROWS_AS(t_final_even_p(pq_pair(5, 2), SpinLabel{1, -1}), std::invalid_argument);

    for (long p = 4; p <= 80; p += 2)
        for (long q = 1; 2 * q < p; ++q) {
            if (gcd(Int(p), Int(q)) != 1) continue;
            CoprimePair pq = pq_pair(p, q);
            for (int t0 : {1, -1}) REQUIRE_NOTHROW(t_final_even_p(pq, SpinLabel{t0, -1}));
        }
}

TEST_CASE("induced spin label") {
    CHECK(induced_spin(pq_pair(5, 2), SpinLabel{1, 1}) == SpinLabel{1, 1});
    CHECK(induced_spin(pq_pair(8, 3), SpinLabel{1, -1}) == SpinLabel{-1, -1});
    CHECK(induced_spin(pq_pair(5, 2), SpinLabel{1, -1}) == SpinLabel{-1, -1});

    for (long p = 3; p <= 70; ++p)
        for (long q = 1; 2 * q < p; ++q) {
            if (gcd(Int(p), Int(q)) != 1) continue;
            CoprimePair pq = pq_pair(p, q);
            CoprimePair mn = a_map_closed(pq).mn;
            // t1 = -1 labels relabel bijectively and involutively.
            for (int t0 : {1, -1}) {
                SpinLabel v = induced_spin(pq, SpinLabel{t0, -1});
                CHECK(v.t1 == -1);
                CHECK(induced_spin(pq, v) == SpinLabel{t0, -1});
            }
            // Admissible labels land on the MN-side admissible set.
            std::vector<SpinLabel> image;
            for (const SpinLabel& s : admissible_labels(pq)) image.push_back(induced_spin(pq, s));
            std::vector<SpinLabel> target = admissible_labels_mn(mn);
            auto key = [](const SpinLabel& s) { return s.t0 * 2 + s.t1; };
            std::sort(image.begin(), image.end(), [&](auto a, auto b) { return key(a) < key(b); });
            std::sort(target.begin(), target.end(), [&](auto a, auto b) { return key(a) < key(b); });
            REQUIRE(image == target);
        }
}
