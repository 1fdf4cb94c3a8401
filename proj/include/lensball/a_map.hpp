#pragma once

#include <utility>
#include <vector>

#include "lensball/euclidean.hpp"
#include "lensball/integers.hpp"

namespace lensball {

// Bezout coefficients attached to a matched pair: c*m + d*n = 1 with the
// sign window 0 < (-1)^(ell+1) c < p and 0 < (-1)^ell d < p (d = 0 occurs
// only in the degenerate ell = -1 case).
struct BezoutData {
    Int c;
    Int d;
};

struct AMapResult {
    CoprimePair mn;   // normalized with n > m
    long ell;         // shared by the two remainder towers

    // The unnormalized image: (m, n) when ell is even, (n, m) when odd.
    std::pair<Int, Int> image() const {
        if (ell % 2 == 0) return {mn.m(), mn.n()};
        return {mn.n(), mn.m()};
    }
};

namespace detail {

// sigma(0) = r(ell) - 1, sigma(i) = s(ell - i + 1) for 1 <= i <= ell + 1.
// Note sigma(ell + 1) = s(0); both clauses extend the definition of the
// dual quotient tower consistently, including ell = -1 where sigma(0) =
// r(-1) - 1.
inline std::vector<Int> dual_quotients(const EuclideanData& e) {
    std::vector<Int> sigma(static_cast<std::size_t>(e.ell + 2));
    sigma[0] = e.r(e.ell) - 1;
    for (long i = 1; i <= e.ell + 1; ++i)
        sigma[static_cast<std::size_t>(i)] = e.s(e.ell - i + 1);
    return sigma;
}

// rho(ell + 2) = 0, rho(ell + 1) = 1, rho(i) = rho(i+1) sigma(i+1) + rho(i+2)
// down to rho(-1).  Returned indexed as rho[k] = rho(k - 1).
inline std::vector<Int> dual_remainders(const EuclideanData& e, const std::vector<Int>& sigma) {
    std::vector<Int> rho(static_cast<std::size_t>(e.ell + 4));
    auto at = [&](long i) -> Int& { return rho[static_cast<std::size_t>(i + 1)]; };
    at(e.ell + 2) = 0;
    at(e.ell + 1) = 1;
    for (long i = e.ell; i >= -1; --i)
        at(i) = at(i + 1) * sigma[static_cast<std::size_t>(i + 1)] + at(i + 2);
    return rho;
}

// |det A_i| continuants over s(1)..s(i): |A_-1| = 0, |A_0| = 1,
// |A_i| = s(i)|A_{i-1}| + |A_{i-2}|.  (|A_-2| = 1 backs the ell = -1 case.)
inline Int abs_det_a(const EuclideanData& e, long i) {
    if (i == -2) return 1;
    if (i == -1) return 0;
    Int prev2 = 1, prev = 0, cur = 1; // |A_-2|, |A_-1|, |A_0|
    for (long k = 1; k <= i; ++k) {
        Int next = e.s(k) * cur + prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

} // namespace detail

/// Closed-form coprime-pair correspondence: builds the dual towers from the
/// PQ-side division data and reads off (m, n) = (rho(0), rho(-1)).
inline AMapResult a_map_closed(const CoprimePair& pq) {
    if (pq.role() != PairRole::PQ) throw std::invalid_argument("a_map_closed: PQ pair required");
    EuclideanData e = euclidean_sequences(pq);
    std::vector<Int> sigma = detail::dual_quotients(e);
    std::vector<Int> rho = detail::dual_remainders(e, sigma);
    Int m = rho[1];  // rho(0)
    Int n = rho[0];  // rho(-1)
    return AMapResult{mn_pair(std::move(m), std::move(n)), e.ell};
}

/// One step-at-a-time subtractive trace.  Serves as the independent oracle
/// for a_map_closed and bezout_cd.  Starting from ((a,b),(1,1),(0,1)),
/// subtract the smaller entry of (a,b) from the larger and accumulate
/// (m,n) and (c,d) on the matching side until a = b = 1; then
/// -c*m + d*n = 1 holds for the final values.
struct SubtractiveResult {
    Int m, n;      // final pair, in production order (no normalization)
    Int c, d;      // -c*m + d*n = 1
    long steps;
};

inline SubtractiveResult a_map_subtractive(const Int& a_in, const Int& b_in) {
    if (a_in <= 0 || b_in <= 0) throw std::invalid_argument("a_map_subtractive: positive inputs required");
    if (gcd(a_in, b_in) != 1) throw std::invalid_argument("a_map_subtractive: gcd != 1");
    Int a = a_in, b = b_in;
    Int m = 1, n = 1, c = 0, d = 1;
    long steps = 0;
    while (a != b) {
        if (a > b) {
            a -= b;
            m += n;
            d += c;
        } else {
            b -= a;
            n += m;
            c += d;
        }
        ++steps;
    }
    return SubtractiveResult{m, n, c, d, steps};
}

/// Bezout data for a PQ pair via the |det A_i| continuants:
/// (-1)^ell (-c, d) = (|A_{ell-1}| + (r(ell) - 1)|A_ell|, |A_ell|).
inline BezoutData bezout_cd(const CoprimePair& pq) {
    if (pq.role() != PairRole::PQ) throw std::invalid_argument("bezout_cd: PQ pair required");
    EuclideanData e = euclidean_sequences(pq);
    Int a_prev = detail::abs_det_a(e, e.ell - 1);
    Int a_last = detail::abs_det_a(e, e.ell);
    Int lhs = a_prev + (e.r(e.ell) - 1) * a_last;
    if (e.ell % 2 == 0) return BezoutData{-lhs, a_last};
    return BezoutData{lhs, -a_last};
}

} // namespace lensball
