#pragma once

#include <string>
#include <vector>

#include "lensball/a_map.hpp"
#include "lensball/contfrac.hpp"
#include "lensball/euclidean.hpp"
#include "lensball/integers.hpp"
#include "lensball/plumbing.hpp"
#include "lensball/spin.hpp"

namespace lensball {

// Crossing/cusp bookkeeping of the Legendrian attaching circle.
struct TbBreakdown {
    Int positives;
    Int negatives;
    Int left_cusps;
    Int tb; // positives - negatives - left_cusps
};

/// tb of the MN-side attaching circle: with n = m sigma0 + rho1,
/// positives = (m-1)((rho1 - 1) + sigma0 (m-1)) + sigma0 (m-1),
/// negatives = m + n - 1, one left cusp, and the total collapses to
/// mn - 2(m+n) + 1 (asserted both ways).
inline TbBreakdown tb_breakdown(const CoprimePair& mn) {
    if (mn.role() != PairRole::MN) throw std::invalid_argument("tb_breakdown: MN pair required");
    EuclideanData e = euclidean_sequences(mn);
    const Int& m = mn.m();
    const Int& n = mn.n();
    Int sigma0 = e.s(0);
    Int rho1 = e.r(1);
    if (n != m * sigma0 + rho1) throw std::logic_error("tb_breakdown: division identity violated");
    TbBreakdown out;
    out.positives = (m - 1) * ((rho1 - 1) + sigma0 * (m - 1)) + sigma0 * (m - 1);
    out.negatives = m + n - 1;
    out.left_cusps = 1;
    out.tb = out.positives - out.negatives - out.left_cusps;
    if (out.tb != m * n - 2 * (m + n) + 1)
        throw std::logic_error("tb_breakdown: closed form mn - 2(m+n) + 1 violated");
    return out;
}

/// rho([K]) = (rot(K) + lk(K, L' + L0)) / 2; the sum must be even, anything
/// else indicates an invalid characteristic sublink upstream.
inline Int rho_evaluation(const Int& rot, const Int& lk_char) {
    Int sum = rot + lk_char;
    if (is_odd(sum))
        throw NonIntegralRho("rho_evaluation: rot + lk = " + sum.str() + " is odd");
    return sum / 2;
}

// A homotopy-invariant value Gamma in H1, carried on a named generator of
// Z/p^2 together with the spin label it was computed at.
struct GammaValue {
    CyclicElement element;
    SpinLabel spin;
};

/// Gamma on the PQ side: the full expression
/// (pq/2 + ((3 - t0 t1^q)/2) p^2/2) mu0 in Z/p^2, by exact modular halving.
/// Reduces to (pq/2) mu0 for every label when p is odd and for t0 = +1 when
/// p is even; the reduction is asserted in those cases.
inline GammaValue gamma_b(const CoprimePair& pq, const SpinLabel& label) {
    if (pq.role() != PairRole::PQ) throw std::invalid_argument("gamma_b: PQ pair required");
    require_valid_label(pq, label);
    Int modulus = pq.p() * pq.p();
    Int lead = half_mod(pq.p() * pq.q(), modulus);
    Int correction_factor = Int(3 - label.t0 * pm_pow(label.t1, pq.q())) / 2; // (3 -+ 1)/2, always exact
    Int correction = mod_reduce(correction_factor * half_mod(modulus, modulus), modulus);
    Int total = mod_reduce(lead + correction, modulus);
    if (is_odd(pq.p()) || label.t0 == 1) {
        if (total != lead) throw std::logic_error("gamma_b: expression failed to reduce to (pq/2) mu0");
    }
    return GammaValue{CyclicElement(total, modulus, "mu0"), label};
}

namespace detail {

// Bezout elimination identity behind the gamma1 -> gamma0 exchange:
// -(d-c)^2 mn + (cd(m+n) - c(d-c)m + d(d-c)n)(m+n) = 1, exactly in Z.
inline void check_gamma1_elimination(const CoprimePair& mn, const BezoutData& bz) {
    const Int& m = mn.m();
    const Int& n = mn.n();
    Int dc = bz.d - bz.c;
    Int lhs = -(dc * dc) * m * n +
              (bz.c * bz.d * (m + n) - bz.c * dc * m + bz.d * dc * n) * (m + n);
    if (lhs != 1) throw std::logic_error("gamma_a: Bezout elimination identity violated");
}

} // namespace detail

/// Gamma on the MN side, at the spin structure induced from the given PQ
/// label, reduced onto the gamma0 generator:
/// ((m+n)/2) [(d-c)^2 + ((1-t1)/2)(1 + (d-c)^2 (mn + ((1+(-1)^(c+ell) t0)/2)(m+n)))]
/// in Z/(m+n)^2.  Also re-verifies the gamma1 elimination identity.
inline GammaValue gamma_a(const CoprimePair& mn, const CoprimePair& pq, const SpinLabel& label) {
    if (mn.role() != PairRole::MN || pq.role() != PairRole::PQ)
        throw std::invalid_argument("gamma_a: (MN, PQ) pair required");
    require_valid_label(pq, label);
    AMapResult am = a_map_closed(pq);
    if (!(am.mn == mn)) throw std::invalid_argument("gamma_a: pairs are not matched under the A-map");
    BezoutData bz = bezout_cd(pq);
    detail::check_gamma1_elimination(mn, bz);

    const Int& m = mn.m();
    const Int& n = mn.n();
    Int p = m + n;
    Int modulus = p * p;
    Int dc2 = (bz.d - bz.c) * (bz.d - bz.c);
    Int spin_half = Int(1 - label.t1) / 2;                                      // in {0, 1}
    Int t0_half = Int(1 + pm_pow(-1, bz.c + am.ell) * label.t0) / 2;            // in {0, 1}
    Int bracket = dc2 + spin_half * (1 + dc2 * (m * n + t0_half * p));
    // Halve the exact integer before reducing: for even p the two steps do
    // not commute.
    Int coeff = half_mod(p * bracket, modulus);
    return GammaValue{CyclicElement(coeff, modulus, "gamma0"), induced_spin(pq, label)};
}

/// Pulls the MN-side Gamma back through the boundary identification,
/// substituting gamma0 -> n mu0 (ell even) or m mu0 (ell odd), and asserts
/// agreement with the PQ-side Gamma.  CertificateFailure here would mean a
/// convention mismatch; it must never fire.
inline GammaValue gamma_pullback(const CoprimePair& mn, const CoprimePair& pq, const SpinLabel& label) {
    GammaValue a = gamma_a(mn, pq, label);
    long ell = euclidean_sequences(pq).ell;
    const Int& substitute = (ell % 2 == 0) ? mn.n() : mn.m();
    Int coeff = mod_reduce(a.element.coefficient * substitute, a.element.modulus);
    GammaValue pulled{CyclicElement(coeff, a.element.modulus, "mu0"), label};
    GammaValue b = gamma_b(pq, label);
    if (!(pulled.element == b.element))
        throw CertificateFailure("gamma_pullback: " + pulled.element.coefficient.str() + " != " +
                                 b.element.coefficient.str() + " mod " + a.element.modulus.str() +
                                 " for (p,q)=(" + pq.p().str() + "," + pq.q().str() + "), label (" +
                                 std::to_string(label.t0) + "," + std::to_string(label.t1) + ")");
    return pulled;
}

/// d3 = (c1^2 - 3 sigma - 2 chi) / 4, exact.
inline Rat d3_from_characteristic(const Rat& c1sq, const Int& sigma, const Int& chi) {
    return (c1sq - 3 * Rat(sigma) - 2 * Rat(chi)) / 4;
}

// Per-label certificate entry: both Gamma coefficients mod p^2, the
// transported sign list, and whether they agree.
struct LabelCertificate {
    SpinLabel label;
    std::vector<int> t_list;
    Int gamma_b_coeff;
    Int gamma_a_coeff;
    Int gamma_pulled_coeff;
    bool matches = false;
    bool is_canonical = false; // the label the (pq/2) normalization is asserted at
    bool reduces_to_half_pq = false;
};

struct CertificateReport {
    Int p, q, m, n;
    long ell = 0;
    Int c, d;
    Int modulus;
    Int half_pq; // (pq/2) mod p^2
    std::vector<LabelCertificate> labels;
    Rat d3;
    bool d3_matches = false;
    bool pass = false;
};

/// Bundles the d3 equality and the Gamma agreement for every admissible
/// spin label into one pass/fail report.  Failures are recorded, not thrown.
inline CertificateReport contactomorphism_certificate(const CoprimePair& pq) {
    if (pq.role() != PairRole::PQ) throw std::invalid_argument("contactomorphism_certificate: PQ pair required");
    AMapResult am = a_map_closed(pq);
    BezoutData bz = bezout_cd(pq);
    CertificateReport rep;
    rep.p = pq.p();
    rep.q = pq.q();
    rep.m = am.mn.m();
    rep.n = am.mn.n();
    rep.ell = am.ell;
    rep.c = bz.c;
    rep.d = bz.d;
    rep.modulus = pq.p() * pq.p();
    rep.half_pq = half_mod(pq.p() * pq.q(), rep.modulus);
    rep.d3 = d3_from_characteristic(Rat(0), Int(0), Int(1));
    rep.d3_matches = rep.d3 == Rat(-1, 2);

    bool all_ok = rep.d3_matches;
    for (const SpinLabel& label : admissible_labels(pq)) {
        LabelCertificate lc;
        lc.label = label;
        lc.t_list = t_transport(pq, label);
        lc.gamma_b_coeff = gamma_b(pq, label).element.coefficient;
        GammaValue ga = gamma_a(am.mn, pq, label);
        lc.gamma_a_coeff = ga.element.coefficient;
        const Int& substitute = (am.ell % 2 == 0) ? am.mn.n() : am.mn.m();
        lc.gamma_pulled_coeff = mod_reduce(ga.element.coefficient * substitute, rep.modulus);
        lc.matches = lc.gamma_pulled_coeff == lc.gamma_b_coeff;
        lc.is_canonical = is_odd(pq.p()) || label.t0 == 1;
        lc.reduces_to_half_pq = lc.gamma_b_coeff == rep.half_pq;
        if (!lc.matches) all_ok = false;
        if (lc.is_canonical && !lc.reduces_to_half_pq) all_ok = false;
        rep.labels.push_back(std::move(lc));
    }
    if (rep.labels.empty()) all_ok = false;
    rep.pass = all_ok;
    return rep;
}

} // namespace lensball
