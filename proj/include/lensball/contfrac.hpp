#pragma once

#include <vector>

#include "lensball/a_map.hpp"
#include "lensball/euclidean.hpp"
#include "lensball/integers.hpp"

namespace lensball {

// Minus continued fraction [c1,...,cn] = c1 - 1/(c2 - 1/(... - 1/cn)).
struct ContinuedFraction {
    std::vector<Int> coefficients;
};

struct CfValue {
    Rat value;
    Int det_head; // continuant of the full coefficient list
    Int det_tail; // continuant of the list with the first coefficient dropped
};

namespace detail {

// Continuant det C_k = c_k det C_{k-1} - det C_{k-2}, det C_0 = 1, det C_-1 = 0,
// over the given coefficient span.
inline Int continuant(const std::vector<Int>& c, std::size_t from, std::size_t to) {
    Int prev = 0, cur = 1;
    for (std::size_t k = from; k < to; ++k) {
        Int next = c[k] * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

} // namespace detail

/// Exact evaluation of a minus continued fraction.  Signals DegenerateTail
/// when an intermediate tail value vanishes where a reciprocal is required.
/// The value always equals det_head / det_tail (continuant quotient).
inline CfValue evaluate(const ContinuedFraction& cf) {
    const auto& c = cf.coefficients;
    if (c.empty()) throw std::invalid_argument("evaluate: empty continued fraction");
    Rat v = Rat(c.back());
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        if (v == 0) throw DegenerateTail("evaluate: zero tail below coefficient " + std::to_string(k + 1));
        v = Rat(c[k]) - 1 / v;
    }
    CfValue out{v, detail::continuant(c, 0, c.size()), detail::continuant(c, 1, c.size())};
    if (out.value * out.det_tail != Rat(out.det_head))
        throw std::logic_error("evaluate: continuant identity violated");
    return out;
}

/// Prefix continuants [det C_1, ..., det C_n].
inline std::vector<Int> det_sequence(const ContinuedFraction& cf) {
    std::vector<Int> out;
    out.reserve(cf.coefficients.size());
    Int prev = 0, cur = 1;
    for (const Int& ck : cf.coefficients) {
        Int next = ck * cur - prev;
        out.push_back(next);
        prev = cur;
        cur = next;
    }
    return out;
}

/// Unique expansion of a rational with every coefficient <= -2.  Such an
/// expansion exists exactly for r < -1 (these are the values all-<=-2
/// chains can take).
inline ContinuedFraction negative_expansion(const Rat& r) {
    if (r >= -1) throw std::invalid_argument("negative_expansion: input must be < -1");
    Rat x = -r;
    Int num = boost::multiprecision::numerator(x);
    Int den = boost::multiprecision::denominator(x);
    ContinuedFraction out;
    while (true) {
        Int a = (num + den - 1) / den; // ceil(num/den), both positive
        out.coefficients.push_back(-a);
        Int rem = a * den - num; // a - x, scaled by den
        if (rem == 0) break;
        num = den;
        den = rem;
    }
    return out;
}

/// Palindromic-with-alternating-signs weight list
/// [-s0, s1, ..., +/-r_ell, 1, -/+r_ell, ..., -s1, s0] whose value is
/// -p^2/(pq - 1).  The weight left of the center is (-1)^ell r(ell), and
/// s(ell+1) = r(ell) closes the pattern (for ell = -1 the list degenerates
/// to [-p, 1, p]).
inline ContinuedFraction symmetric_chain(const CoprimePair& pq) {
    if (pq.role() != PairRole::PQ) throw std::invalid_argument("symmetric_chain: PQ pair required");
    EuclideanData e = euclidean_sequences(pq);
    ContinuedFraction out;
    for (long k = 0; k <= e.ell + 1; ++k) {
        const Int& w = (k == e.ell + 1) ? e.r(e.ell) : e.s(k);
        out.coefficients.push_back(parity_sign(k + 1) * w);
    }
    out.coefficients.push_back(1);
    for (long k = e.ell + 1; k >= 0; --k) {
        const Int& w = (k == e.ell + 1) ? e.r(e.ell) : e.s(k);
        out.coefficients.push_back(parity_sign(k) * w);
    }
    return out;
}

/// MN-side weight list
/// [(-1)^ell rho_ell, (-1)^(ell-1) sigma_ell, ..., -sigma0-1, 1, sigma0+1,
///  ..., (-1)^ell sigma_ell, (-1)^(ell+1) rho_ell]
/// with |head continuant| = (m+n)^2.  For ell = -1 it collapses to the
/// 3-node [-sigma0-1, 1, sigma0+1].
inline ContinuedFraction a_side_chain(const CoprimePair& mn) {
    if (mn.role() != PairRole::MN) throw std::invalid_argument("a_side_chain: MN pair required");
    EuclideanData e = euclidean_sequences(mn); // rho/sigma towers of (n, m)
    ContinuedFraction out;
    if (e.ell >= 0) out.coefficients.push_back(parity_sign(e.ell) * e.r(e.ell));
    for (long j = e.ell; j >= 1; --j)
        out.coefficients.push_back(parity_sign(j + 1) * e.s(j));
    out.coefficients.push_back(-(e.s(0) + 1));
    out.coefficients.push_back(1);
    out.coefficients.push_back(e.s(0) + 1);
    for (long j = 1; j <= e.ell; ++j)
        out.coefficients.push_back(parity_sign(j) * e.s(j));
    if (e.ell >= 0) out.coefficients.push_back(parity_sign(e.ell + 1) * e.r(e.ell));
    return out;
}

} // namespace lensball
