#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "lensball/contfrac.hpp"
#include "lensball/euclidean.hpp"
#include "lensball/integers.hpp"

namespace lensball {

// Linear plumbing of disk bundles over spheres, encoded by its Euler weights.
struct WeightedChain {
    std::vector<Int> weights;
};

using IntMatrix = std::vector<std::vector<Int>>;

// An element a*g of Z/NZ with a named generator g; coefficient kept in [0, N).
struct CyclicElement {
    Int coefficient;
    Int modulus;
    std::string generator;

    CyclicElement(Int coeff, Int mod, std::string gen)
        : coefficient(mod_reduce(coeff, mod)), modulus(std::move(mod)), generator(std::move(gen)) {}

    bool operator==(const CyclicElement& o) const {
        return coefficient == o.coefficient && modulus == o.modulus && generator == o.generator;
    }
};

inline IntMatrix linking_matrix(const WeightedChain& chain) {
    const std::size_t n = chain.weights.size();
    if (n == 0) throw std::invalid_argument("linking_matrix: empty chain");
    IntMatrix m(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = chain.weights[i];
        if (i + 1 < n) {
            m[i][i + 1] = 1;
            m[i + 1][i] = 1;
        }
    }
    return m;
}

/// Exact determinant by fraction-free (Bareiss) elimination.  Entries that
/// stay zero are skipped, so banded matrices cost O(n^2) big-int operations.
inline Int determinant(IntMatrix a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("determinant: matrix must be square");
    int sgn = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(a[k], a[piv]);
            sgn = -sgn;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const bool zero_mult = (a[i][k] == 0);
            for (std::size_t j = k + 1; j < n; ++j) {
                if (a[i][j] == 0 && (zero_mult || a[k][j] == 0)) continue;
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sgn * a[n - 1][n - 1];
}

/// Smith normal form diagonal of an integer matrix: nonnegative invariant
/// factors d1 | d2 | ..., zeros last.  Exact row/column reduction; used as
/// the trusted homology oracle.
inline std::vector<Int> smith_normal_form(IntMatrix a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    for (const auto& row : a)
        if (row.size() != cols) throw std::invalid_argument("smith_normal_form: ragged matrix");
    const std::size_t rank_bound = std::min(rows, cols);
    std::vector<Int> divisors;

    for (std::size_t t = 0; t < rank_bound; ++t) {
        // Locate the smallest nonzero entry of the trailing submatrix.
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (!found || abs(a[i][j]) < abs(a[pi][pj]))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        std::swap(a[t], a[pi]);
        for (std::size_t i = t; i < rows; ++i) std::swap(a[i][t], a[i][pj]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                Int qv = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= qv * a[t][j];
                if (a[i][t] != 0) {
                    // Remainder strictly smaller: promote it to the pivot.
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                Int qv = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= qv * a[i][t];
                if (a[t][j] != 0) {
                    for (std::size_t i = t; i < rows; ++i) std::swap(a[i][t], a[i][j]);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Pivot must divide the trailing submatrix for the divisibility chain.
            for (std::size_t i = t + 1; i < rows && clean; ++i)
                for (std::size_t j = t + 1; j < cols && clean; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
                        clean = false;
                    }
        }
        divisors.push_back(abs(a[t][t]));
    }
    divisors.resize(rank_bound, Int(0));
    return divisors;
}

/// Elementary divisor list of a square integer matrix (the snf_order
/// operation); the product of the nonzero divisors is |H1| when the matrix
/// is a nondegenerate surgery presentation.
inline std::vector<Int> snf_order(const IntMatrix& m) {
    if (!m.empty() && m.size() != m[0].size())
        throw std::invalid_argument("snf_order: square matrix required");
    return smith_normal_form(m);
}

/// First homology of the boundary of a linear plumbing, presented on the
/// meridian of the first unknot: cyclic of order |det C_n| with
/// mu_{i} = (-1)^(i-1) det C_{i-1} mu_1.
struct HomologyPresentation {
    Int order;
    std::vector<Int> meridian_coeffs; // coefficient of mu_i on mu_1, in [0, order)
};

inline HomologyPresentation h1_presentation(const WeightedChain& chain) {
    ContinuedFraction cf{chain.weights};
    std::vector<Int> dets = det_sequence(cf);
    Int full = dets.back();
    if (full == 0) throw NonRationalSphere("h1_presentation: vanishing linking determinant");
    HomologyPresentation out;
    out.order = abs(full);
    out.meridian_coeffs.reserve(chain.weights.size());
    out.meridian_coeffs.push_back(mod_reduce(1, out.order));
    for (std::size_t i = 1; i < chain.weights.size(); ++i)
        out.meridian_coeffs.push_back(mod_reduce(parity_sign(static_cast<long>(i)) * dets[i - 1], out.order));
    return out;
}

namespace detail {

// Shared weight table for the middle-out chains: entry k in [0, ell+1] is
// s(k) with s(ell+1) = r(ell); on the left side weight k carries (-1)^(k+1),
// mirrored with (-1)^k on the right of the central 1.
inline const Int& side_weight(const EuclideanData& e, long k) {
    return (k == e.ell + 1) ? e.r(e.ell) : e.s(k);
}

inline WeightedChain middle_out_chain(const EuclideanData& e, long left_lo, long right_lo) {
    WeightedChain chain;
    for (long k = left_lo; k <= e.ell + 1; ++k)
        chain.weights.push_back(parity_sign(k + 1) * side_weight(e, k));
    chain.weights.push_back(1);
    for (long k = e.ell + 1; k >= right_lo; --k)
        chain.weights.push_back(parity_sign(k) * side_weight(e, k));
    return chain;
}

} // namespace detail

// The three middle-out plumbings used by the determinant identities:
// s_i_chain grows i weights out on both sides of [.., r, 1, -r, ..]; the
// plus/minus variants extend one further on the left/right respectively.
inline WeightedChain s_i_chain(const CoprimePair& pq, long i) {
    EuclideanData e = euclidean_sequences(pq);
    if (i < 0 || i > e.ell + 1) throw std::out_of_range("s_i_chain: index out of range");
    return detail::middle_out_chain(e, e.ell + 1 - i, e.ell + 1 - i);
}

inline WeightedChain s_i_plus_chain(const CoprimePair& pq, long i) {
    EuclideanData e = euclidean_sequences(pq);
    if (i < 0 || i > e.ell) throw std::out_of_range("s_i_plus_chain: index out of range");
    return detail::middle_out_chain(e, e.ell - i, e.ell + 1 - i);
}

inline WeightedChain s_i_minus_chain(const CoprimePair& pq, long i) {
    EuclideanData e = euclidean_sequences(pq);
    if (i < 0 || i > e.ell) throw std::out_of_range("s_i_minus_chain: index out of range");
    return detail::middle_out_chain(e, e.ell + 1 - i, e.ell - i);
}

struct SiDeterminants {
    Int det_s;
    std::optional<Int> det_s_plus;  // absent at i = ell + 1
    std::optional<Int> det_s_minus; // absent at i = ell + 1
};

/// Determinants of the middle-out plumbings, computed by brute-force
/// elimination and checked against the closed forms
///   det S_i     = (-1)^(i+1) r(ell-i)^2,
///   det S_i^+   = (-1)^ell (r(ell-i-1) r(ell-i) + (-1)^(ell+i)),
///   det S_i^-   = (-1)^ell ((-1)^(ell+i) - r(ell-i-1) r(ell-i)).
inline SiDeterminants s_i_determinants(const CoprimePair& pq, long i) {
    if (pq.role() != PairRole::PQ) throw std::invalid_argument("s_i_determinants: PQ pair required");
    EuclideanData e = euclidean_sequences(pq);
    if (i < 0 || i > e.ell + 1) throw std::out_of_range("s_i_determinants: index out of range");

    SiDeterminants out{determinant(linking_matrix(s_i_chain(pq, i))), std::nullopt, std::nullopt};
    Int expected_s = parity_sign(i + 1) * e.r(e.ell - i) * e.r(e.ell - i);
    if (out.det_s != expected_s)
        throw std::logic_error("s_i_determinants: det S_" + std::to_string(i) + " closed form violated");

    if (i <= e.ell) {
        Int prod = e.r(e.ell - i - 1) * e.r(e.ell - i);
        Int plus = parity_sign(e.ell) * (prod + parity_sign(e.ell + i));
        Int minus = parity_sign(e.ell) * (parity_sign(e.ell + i) - prod);
        out.det_s_plus = determinant(linking_matrix(s_i_plus_chain(pq, i)));
        out.det_s_minus = determinant(linking_matrix(s_i_minus_chain(pq, i)));
        if (*out.det_s_plus != plus || *out.det_s_minus != minus)
            throw std::logic_error("s_i_determinants: det S_" + std::to_string(i) + "^+/- closed form violated");
    }
    return out;
}

// eps(i) = sin(pi i / 2) + cos(pi i / 2) as a period-4 integer lookup.
inline int eps4(long i) {
    static constexpr int table[4] = {1, 1, -1, -1};
    long k = i % 4;
    if (k < 0) k += 4;
    return table[k];
}

/// Bordered determinant det diag(-rho_ell, +sigma_ell, -sigma_{ell-1}, ...)
/// (tridiagonal, i+1 entries), asserted equal to -eps(i) rho(ell-i).
inline Int gamma0_trace_det(const CoprimePair& mn, long i) {
    if (mn.role() != PairRole::MN) throw std::invalid_argument("gamma0_trace_det: MN pair required");
    EuclideanData e = euclidean_sequences(mn);
    if (i < 0 || i > e.ell + 1) throw std::out_of_range("gamma0_trace_det: index out of range");
    WeightedChain chain;
    chain.weights.push_back(-e.r(e.ell));
    for (long k = 1; k <= i; ++k)
        chain.weights.push_back(parity_sign(k + 1) * e.s(e.ell + 1 - k));
    Int det = determinant(linking_matrix(chain));
    if (det != -eps4(i) * e.r(e.ell - i))
        throw std::logic_error("gamma0_trace_det: bordered determinant identity violated at i = " +
                               std::to_string(i));
    return det;
}

/// gamma0 expressed in the two end-node generators of the MN-side plumbing:
/// gamma0 = -eps(ell) m eta_{(-1)^ell} = -eps(ell) n eta_{(-1)^(ell+1)},
/// both mod (m+n)^2.
inline std::pair<CyclicElement, CyclicElement> gamma0_in_eta(const CoprimePair& mn) {
    if (mn.role() != PairRole::MN) throw std::invalid_argument("gamma0_in_eta: MN pair required");
    EuclideanData e = euclidean_sequences(mn);
    Int p = mn.m() + mn.n();
    Int mod = p * p;
    auto eta_name = [](int sign) { return sign > 0 ? std::string("eta_plus") : std::string("eta_minus"); };
    CyclicElement via_m(-eps4(e.ell) * mn.m(), mod, eta_name(parity_sign(e.ell)));
    CyclicElement via_n(-eps4(e.ell) * mn.n(), mod, eta_name(parity_sign(e.ell + 1)));
    return {via_m, via_n};
}

enum class LensEquivalence { SamePreserving, SameReversing, Different };

/// Classical lens space comparison: L(p,q1) and L(p,q2) agree preserving
/// orientation iff q1 = q2 or q1 q2 = 1 (mod p), reversing iff
/// q1 = -q2 or q1 q2 = -1 (mod p).
inline LensEquivalence lens_equiv(const Int& p, const Int& q1, const Int& q2) {
    if (p <= 0) throw std::invalid_argument("lens_equiv: p must be positive");
    if (gcd(p, mod_reduce(q1, p)) != 1 || gcd(p, mod_reduce(q2, p)) != 1)
        throw std::invalid_argument("lens_equiv: gcd(p, q) != 1");
    Int a = mod_reduce(q1, p), b = mod_reduce(q2, p);
    if (a == b || mod_reduce(a * b, p) == mod_reduce(1, p)) return LensEquivalence::SamePreserving;
    if (a == mod_reduce(-b, p) || mod_reduce(a * b, p) == mod_reduce(-1, p))
        return LensEquivalence::SameReversing;
    return LensEquivalence::Different;
}

} // namespace lensball
