#pragma once

#include <algorithm>
#include <vector>

#include "lensball/a_map.hpp"
#include "lensball/euclidean.hpp"
#include "lensball/integers.hpp"
#include "lensball/plumbing.hpp"

namespace lensball {

// Spin structure label on the two-component surgery description: t_i = -1
// exactly when component i lies in the characteristic sublink.  When p is
// even, t1 = -1 is forced.
struct SpinLabel {
    int t0 = 1;
    int t1 = 1;

    bool operator==(const SpinLabel& o) const { return t0 == o.t0 && t1 == o.t1; }
};

// Membership vector aligned with a framed chain: -1 means "in the sublink".
using CharSublink = std::vector<int>;

/// All characteristic sublinks of a framed link with the given symmetric
/// linking matrix: solutions x in {0,1}^n of  L x = diag(L)  (mod 2),
/// where a component's self-linking is its framing.  Solved over GF(2);
/// the solution set is enumerated and returned in lexicographic order.
inline std::vector<CharSublink> characteristic_sublinks(const IntMatrix& linking) {
    const std::size_t n = linking.size();
    for (const auto& row : linking)
        if (row.size() != n) throw std::invalid_argument("characteristic_sublinks: square matrix required");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (linking[i][j] != linking[j][i])
                throw std::invalid_argument("characteristic_sublinks: symmetric matrix required");

    // Augmented system [A | b] over GF(2).
    std::vector<std::vector<int>> a(n, std::vector<int>(n + 1, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<int>(mod_reduce(linking[i][j], 2));
        a[i][n] = static_cast<int>(mod_reduce(linking[i][i], 2));
    }

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t sel = row;
        while (sel < n && a[sel][col] == 0) ++sel;
        if (sel == n) continue;
        std::swap(a[row], a[sel]);
        for (std::size_t i = 0; i < n; ++i)
            if (i != row && a[i][col] == 1)
                for (std::size_t j = col; j <= n; ++j) a[i][j] ^= a[row][j];
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < n; ++i)
        if (a[i][n] == 1) return {}; // inconsistent (cannot happen for symmetric linking data)

    std::vector<std::size_t> free_cols;
    {
        std::vector<char> is_pivot(n, 0);
        for (std::size_t c : pivot_col) is_pivot[c] = 1;
        for (std::size_t c = 0; c < n; ++c)
            if (!is_pivot[c]) free_cols.push_back(c);
    }
    if (free_cols.size() > 20)
        throw std::length_error("characteristic_sublinks: solution space too large to enumerate");

    std::vector<CharSublink> out;
    const std::size_t count = static_cast<std::size_t>(1) << free_cols.size();
    for (std::size_t mask = 0; mask < count; ++mask) {
        std::vector<int> x(n, 0);
        for (std::size_t k = 0; k < free_cols.size(); ++k) x[free_cols[k]] = static_cast<int>((mask >> k) & 1);
        for (std::size_t r = pivot_col.size(); r-- > 0;) {
            int v = a[r][n];
            for (std::size_t c = pivot_col[r] + 1; c < n; ++c) v ^= a[r][c] & x[c];
            x[pivot_col[r]] = v;
        }
        CharSublink member(n);
        for (std::size_t i = 0; i < n; ++i) member[i] = x[i] ? -1 : 1;
        out.push_back(std::move(member));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Linking matrix of the two-component surgery description of the boundary:
// a 0-framed unknot meeting the (pq-1)-framed attaching circle p times.
inline IntMatrix b_side_two_component_matrix(const CoprimePair& pq) {
    if (pq.role() != PairRole::PQ) throw std::invalid_argument("b_side_two_component_matrix: PQ pair required");
    return IntMatrix{{Int(0), pq.p()}, {pq.p(), pq.p() * pq.q() - 1}};
}

// Same surgery description for the MN side: 0-framed unknot meeting the
// mn-framed attaching circle m + n times.
inline IntMatrix a_side_two_component_matrix(const CoprimePair& mn) {
    if (mn.role() != PairRole::MN) throw std::invalid_argument("a_side_two_component_matrix: MN pair required");
    return IntMatrix{{Int(0), mn.m() + mn.n()}, {mn.m() + mn.n(), mn.m() * mn.n()}};
}

/// Spin labels the boundary actually admits: one for odd p, the two
/// (t0, -1) labels for even p.  Read off characteristic_sublinks.
inline std::vector<SpinLabel> admissible_labels(const CoprimePair& pq) {
    std::vector<SpinLabel> out;
    for (const CharSublink& mem : characteristic_sublinks(b_side_two_component_matrix(pq)))
        out.push_back(SpinLabel{mem[0], mem[1]});
    return out;
}

inline std::vector<SpinLabel> admissible_labels_mn(const CoprimePair& mn) {
    std::vector<SpinLabel> out;
    for (const CharSublink& mem : characteristic_sublinks(a_side_two_component_matrix(mn)))
        out.push_back(SpinLabel{mem[0], mem[1]});
    return out;
}

inline void require_valid_label(const CoprimePair& pq, const SpinLabel& label) {
    if ((label.t0 != 1 && label.t0 != -1) || (label.t1 != 1 && label.t1 != -1))
        throw std::invalid_argument("SpinLabel entries must be +1 or -1");
    if (is_even(pq.p()) && label.t1 != -1)
        throw std::invalid_argument("even p forces t1 = -1");
}

/// Multiplicative transport of a spin label down the boundary tower:
/// T_0 = t0 and T_j = (-T_{j-1} t1^{r(j-1)})^{s(j-1)} T_{j-2}, with the
/// base value T_{-1} taken to be 1 (the multiplicative identity).
inline std::vector<int> t_transport(const CoprimePair& pq, const SpinLabel& label) {
    if (pq.role() != PairRole::PQ) throw std::invalid_argument("t_transport: PQ pair required");
    require_valid_label(pq, label);
    EuclideanData e = euclidean_sequences(pq);
    std::vector<int> t;
    t.reserve(static_cast<std::size_t>(e.ell + 2));
    int prev2 = 1; // T_{-1}
    int prev = label.t0;
    t.push_back(prev);
    for (long j = 1; j <= e.ell + 1; ++j) {
        int base = -prev * pm_pow(label.t1, e.r(j - 1));
        int cur = pm_pow(base, e.s(j - 1)) * prev2;
        t.push_back(cur);
        prev2 = prev;
        prev = cur;
    }
    return t;
}

/// Closed form for the transported label,
/// T_j = (-1)^(1+|det A_{j-1}|) (-t0)^(rho(ell+1-j)) t1^(p |det A_{j-1}| + j r(j)),
/// where rho(ell+1-j) is the dual remainder tower u_0 = 1, u_1 = s(0),
/// u_j = s(j-1) u_{j-1} + u_{j-2}.
inline int t_closed_form(const CoprimePair& pq, const SpinLabel& label, long j) {
    if (pq.role() != PairRole::PQ) throw std::invalid_argument("t_closed_form: PQ pair required");
    require_valid_label(pq, label);
    EuclideanData e = euclidean_sequences(pq);
    if (j < 1 || j > e.ell + 1) throw std::out_of_range("t_closed_form: index out of range");
    Int det_a = detail::abs_det_a(e, j - 1);
    Int u_prev = 0, u = 1; // u_{-1}, u_0
    for (long k = 1; k <= j; ++k) {
        Int next = e.s(k - 1) * u + u_prev;
        u_prev = u;
        u = next;
    }
    int sign = parity_sign(1 + det_a);
    int from_t0 = pm_pow(-label.t0, u);
    int from_t1 = pm_pow(label.t1, pq.p() * det_a + j * e.r(j));
    return sign * from_t0 * from_t1;
}

/// For even p (t1 = -1 forced) the last transported value collapses to
/// (-1)^(c+ell) t0.
inline int t_final_even_p(const CoprimePair& pq, const SpinLabel& label) {
    if (pq.role() != PairRole::PQ) throw std::invalid_argument("t_final_even_p: PQ pair required");
    if (is_odd(pq.p())) throw std::invalid_argument("t_final_even_p: p must be even");
    require_valid_label(pq, label);
    BezoutData bz = bezout_cd(pq);
    long ell = euclidean_sequences(pq).ell;
    int value = pm_pow(-1, bz.c + ell) * label.t0;
    std::vector<int> t = t_transport(pq, label);
    if (t.back() != value)
        throw std::logic_error("t_final_even_p: closed form disagrees with transport");
    return value;
}

/// Label of the pushed-forward spin structure on the MN side:
/// (v0, v1) = (((-1)^(c+ell) t0 + t1 + (-1)^(c+ell+1) t0 t1 + 1) / 2, t1).
inline SpinLabel induced_spin(const CoprimePair& pq, const SpinLabel& label) {
    if (pq.role() != PairRole::PQ) throw std::invalid_argument("induced_spin: PQ pair required");
    BezoutData bz = bezout_cd(pq);
    long ell = euclidean_sequences(pq).ell;
    int k = pm_pow(-1, bz.c + ell);
    int numerator = k * label.t0 + label.t1 - k * label.t0 * label.t1 + 1;
    return SpinLabel{numerator / 2, label.t1};
}

} // namespace lensball
