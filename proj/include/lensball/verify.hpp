#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lensball/a_map.hpp"
#include "lensball/contfrac.hpp"
#include "lensball/euclidean.hpp"
#include "lensball/integers.hpp"
#include "lensball/plumbing.hpp"
#include "lensball/spin.hpp"
#include "lensball/stein.hpp"

namespace lensball {

// Machine verification of every identity the library claims, for one
// PQ pair.  Each failed check appends one human-readable line; an empty
// result means the pair passes all property suites.
class PairVerifier {
public:
    explicit PairVerifier(const CoprimePair& pq)
        : pq_(pq), e_(euclidean_sequences(pq)), am_(a_map_closed(pq)), bz_(bezout_cd(pq)) {}

    std::vector<std::string> run() {
        check_euclidean();
        check_a_map();
        check_bezout();
        check_chains();
        check_homology();
        check_determinant_identities();
        check_gamma0_tracing();
        check_spin();
        check_gamma();
        return std::move(failures_);
    }

private:
    void expect(bool ok, const std::string& what) {
        if (!ok) failures_.push_back(what);
    }

    void guarded(const std::string& what, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& ex) {
            failures_.push_back(what + ": " + ex.what());
        }
    }

    void check_euclidean() {
        // Tower invariants.
        expect(e_.r(-1) == pq_.p() && e_.r(0) == pq_.q(), "euclid: seeds");
        expect(e_.r(e_.ell + 1) == 1 && e_.r(e_.ell + 2) == 0, "euclid: tail is 1, 0");
        for (long i = -1; i <= e_.ell; ++i)
            expect(e_.r(i) > e_.r(i + 1), "euclid: remainders not strictly decreasing");
        for (long i = 0; i <= e_.ell + 1; ++i)
            expect(e_.r(i - 1) == e_.r(i) * e_.s(i) + e_.r(i + 1), "euclid: division identity at " + std::to_string(i));
        expect(e_.ell == -1 || e_.r(e_.ell) > 1, "euclid: ell not maximal");

        // Round-trip: the quotients and the trailing 1 rebuild (p, q).
        Int above = 0, cur = 1;
        for (long i = e_.ell + 1; i >= 0; --i) {
            Int prev = cur * e_.s(i) + above;
            above = cur;
            cur = prev;
        }
        expect(cur == pq_.p() && above == pq_.q(), "euclid: round-trip failed");
    }

    void check_a_map() {
        // Closed form vs the subtractive trace (with the parity swap).
        SubtractiveResult sub = a_map_subtractive(pq_.p() - pq_.q(), pq_.q());
        auto img = am_.image();
        expect(img.first == sub.m && img.second == sub.n, "a-map: closed form != subtractive trace");
        expect(-sub.c * sub.m + sub.d * sub.n == 1, "a-map: subtractive Bezout relation");
        expect(am_.mn.m() + am_.mn.n() == pq_.p(), "a-map: m + n != p");

        // The dual towers coincide with the MN-side division data.
        EuclideanData emn = euclidean_sequences(am_.mn);
        expect(emn.ell == am_.ell, "a-map: ell disagrees between towers");
        std::vector<Int> sigma = detail::dual_quotients(e_);
        std::vector<Int> rho = detail::dual_remainders(e_, sigma);
        bool towers = emn.quotients.size() == sigma.size() && emn.remainders.size() == rho.size();
        if (towers) {
            for (std::size_t k = 0; k < sigma.size(); ++k) towers = towers && emn.quotients[k] == sigma[k];
            for (std::size_t k = 0; k < rho.size(); ++k) towers = towers && emn.remainders[k] == rho[k];
        }
        expect(towers, "a-map: dual towers != MN-side division data");
    }

    void check_bezout() {
        const Int& m = am_.mn.m();
        const Int& n = am_.mn.n();
        expect(bz_.c * m + bz_.d * n == 1, "bezout: c m + d n != 1");
        Int cw = parity_sign(am_.ell + 1) * bz_.c;
        Int dw = parity_sign(am_.ell) * bz_.d;
        expect(cw > 0 && cw < pq_.p(), "bezout: c window");
        expect((dw > 0 || (dw == 0 && am_.ell == -1)) && dw < pq_.p(), "bezout: d window");
        // |d - c| = q, with the side fixed by the parity of ell.
        if (am_.ell % 2 == 0)
            expect(bz_.d - bz_.c == pq_.q(), "bezout: d - c != q (even ell)");
        else
            expect(bz_.c - bz_.d == pq_.q(), "bezout: c - d != q (odd ell)");
        // Against the subtractive oracle's coefficients.
        SubtractiveResult sub = a_map_subtractive(pq_.p() - pq_.q(), pq_.q());
        if (am_.ell % 2 == 0)
            expect(bz_.c == -sub.c && bz_.d == sub.d, "bezout: closed form != subtractive (even ell)");
        else
            expect(bz_.c == sub.d && bz_.d == -sub.c, "bezout: closed form != subtractive (odd ell)");
    }

    void check_chains() {
        guarded("chains", [&] {
            Int psq = pq_.p() * pq_.p();
            Rat target = -Rat(psq, pq_.p() * pq_.q() - 1);

            ContinuedFraction b = symmetric_chain(pq_);
            CfValue bv = evaluate(b);
            expect(bv.value == target, "chains: symmetric chain value != -p^2/(pq-1)");
            std::vector<Int> dets = det_sequence(b);
            expect(dets.back() == bv.det_head, "chains: det_sequence tail mismatch");

            ContinuedFraction expansion = negative_expansion(target);
            for (const Int& ck : expansion.coefficients)
                expect(ck <= -2, "chains: negative expansion coefficient > -2");
            expect(evaluate(expansion).value == target, "chains: negative expansion round-trip");

            ContinuedFraction a = a_side_chain(am_.mn);
            CfValue av = evaluate(a);
            expect(abs(av.det_head) == psq, "chains: |det| of MN-side chain != (m+n)^2");

            // Orientation bookkeeping: a negative value -p^2/x presents
            // L(p^2, x), a positive one L(p^2, p^2 - x).
            Int den = abs(boost::multiprecision::denominator(av.value));
            Int qa = av.value < 0 ? den : psq - den;
            expect(lens_equiv(psq, pq_.p() * pq_.q() - 1, qa) == LensEquivalence::SamePreserving,
                   "chains: boundary lens spaces not orientation-preserving equivalent");

            // The MN-side chain is the PQ-side chain outright (odd ell) or
            // reversed (even ell).
            std::vector<Int> mirrored = b.coefficients;
            if (am_.ell % 2 == 0) std::reverse(mirrored.begin(), mirrored.end());
            expect(mirrored == a.coefficients, "chains: MN-side chain is not the mirrored PQ-side chain");
        });
    }

    void check_one_homology(const WeightedChain& chain, const std::string& tag) {
        Int psq = pq_.p() * pq_.p();
        HomologyPresentation h = h1_presentation(chain);
        expect(h.order == psq, tag + ": order != p^2");

        std::vector<Int> divisors = snf_order(linking_matrix(chain));
        Int product = 1;
        for (const Int& d : divisors) product *= d;
        expect(product == h.order, tag + ": SNF product != presentation order");
        bool cyclic = true;
        for (std::size_t k = 0; k + 1 < divisors.size(); ++k) cyclic = cyclic && divisors[k] == 1;
        expect(cyclic && divisors.back() == psq, tag + ": group is not cyclic of order p^2");

        // Meridian relations mu_{i+1} = -c_i mu_i - mu_{i-1} in Z/order.
        const auto& w = chain.weights;
        const auto& mu = h.meridian_coeffs;
        expect(mu[0] == mod_reduce(1, h.order), tag + ": mu_1 != 1");
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            Int prev = i == 0 ? Int(0) : mu[i - 1];
            expect(mu[i + 1] == mod_reduce(-w[i] * mu[i] - prev, h.order),
                   tag + ": meridian relation at " + std::to_string(i));
        }
        expect(mod_reduce(w.back() * mu.back() + mu[mu.size() - 2], h.order) == 0,
               tag + ": last meridian relation");
    }

    void check_homology() {
        guarded("homology", [&] {
            check_one_homology(WeightedChain{symmetric_chain(pq_).coefficients}, "homology(B)");
            check_one_homology(WeightedChain{a_side_chain(am_.mn).coefficients}, "homology(A)");
        });
    }

    void check_determinant_identities() {
        guarded("determinant identities", [&] {
            // s_i_determinants raises on any closed-form mismatch.
            for (long i = 0; i <= am_.ell + 1; ++i) s_i_determinants(pq_, i);
            if (am_.ell >= 0) {
                Int det_full = s_i_determinants(pq_, am_.ell + 1).det_s;
                Int det_minus = *s_i_determinants(pq_, am_.ell).det_s_minus;
                Rat ratio = Rat(det_full) / Rat(det_minus);
                expect(ratio == -Rat(pq_.p() * pq_.p(), pq_.p() * pq_.q() - 1),
                       "determinant identities: det S_{ell+1} / det S_ell^- != -p^2/(pq-1)");
            }
        });
    }

    void check_gamma0_tracing() {
        guarded("gamma0 tracing", [&] {
            // The bordered determinants raise on any identity mismatch.
            for (long i = 0; i <= am_.ell + 1; ++i) gamma0_trace_det(am_.mn, i);

            // The end-node expressions against the meridian presentation of
            // the MN-side chain: reading from the (-1)^ell rho_ell end,
            // gamma0 is the meridian of the -(sigma0 + 1) node.
            ContinuedFraction a = a_side_chain(am_.mn);
            HomologyPresentation h = h1_presentation(WeightedChain{a.coefficients});
            auto [via_m, via_n] = gamma0_in_eta(am_.mn);
            std::size_t gamma0_index = static_cast<std::size_t>(am_.ell + 1); // 0-based node ell+2
            expect(h.meridian_coeffs[gamma0_index] == via_m.coefficient,
                   "gamma0: m-form disagrees with the meridian presentation");

            // From the opposite end the n-form holds up to the documented
            // orientation flip (-1)^(ell+1).
            std::vector<Int> reversed(a.coefficients.rbegin(), a.coefficients.rend());
            HomologyPresentation hr = h1_presentation(WeightedChain{reversed});
            std::size_t rev_index = a.coefficients.size() - 1 - gamma0_index;
            Int expected = mod_reduce(parity_sign(am_.ell + 1) * Int(via_n.coefficient), via_n.modulus);
            expect(hr.meridian_coeffs[rev_index] == expected,
                   "gamma0: n-form disagrees with the reversed meridian presentation");
        });
    }

    void check_spin() {
        guarded("spin", [&] {
            // Sublink counts on both presentations of the boundary.
            std::size_t expected_count = is_even(pq_.p()) ? 2 : 1;
            auto two_comp = characteristic_sublinks(b_side_two_component_matrix(pq_));
            expect(two_comp.size() == expected_count, "spin: two-component sublink count");
            auto chain_subs = characteristic_sublinks(linking_matrix(WeightedChain{symmetric_chain(pq_).coefficients}));
            expect(chain_subs.size() == expected_count, "spin: chain sublink count");
            for (const CharSublink& mem : two_comp) {
                if (is_even(pq_.p())) expect(mem[1] == -1, "spin: even p must force t1 = -1");
                else expect(mem[1] == 1, "spin: odd p must force t1 = +1");
            }

            // Transport vs closed form at every index, for all four formal
            // labels admissible for p's parity constraint.
            std::vector<SpinLabel> formal;
            for (int t0 : {1, -1})
                for (int t1 : {1, -1})
                    if (!(is_even(pq_.p()) && t1 == 1)) formal.push_back(SpinLabel{t0, t1});
            for (const SpinLabel& label : formal) {
                std::vector<int> t = t_transport(pq_, label);
                expect(static_cast<long>(t.size()) == am_.ell + 2, "spin: transport length");
                for (int v : t) expect(v == 1 || v == -1, "spin: transport value outside {1,-1}");
                for (long j = 1; j <= am_.ell + 1; ++j)
                    expect(t[static_cast<std::size_t>(j)] == t_closed_form(pq_, label, j),
                           "spin: transport != closed form at j = " + std::to_string(j) + " label (" +
                               std::to_string(label.t0) + "," + std::to_string(label.t1) + ")");
                if (is_even(pq_.p()))
                    expect(t.back() == t_final_even_p(pq_, label), "spin: even-p final value");
                // The relabeling fixes t1, and on t1 = -1 labels (where it
                // is a bijection) applying it twice is the identity.
                SpinLabel v = induced_spin(pq_, label);
                expect(v.t1 == label.t1, "spin: induced label changes t1");
                if (label.t1 == -1)
                    expect(induced_spin(pq_, v) == label, "spin: induced relabeling not involutive");
            }

            // The push-forward carries the admissible labels of one surgery
            // description bijectively onto those of the other.
            std::vector<SpinLabel> image;
            for (const SpinLabel& label : admissible_labels(pq_)) image.push_back(induced_spin(pq_, label));
            std::vector<SpinLabel> target = admissible_labels_mn(am_.mn);
            auto key = [](const SpinLabel& s) { return s.t0 * 2 + s.t1; };
            std::sort(image.begin(), image.end(), [&](auto a, auto b) { return key(a) < key(b); });
            std::sort(target.begin(), target.end(), [&](auto a, auto b) { return key(a) < key(b); });
            bool onto = image.size() == target.size();
            for (std::size_t k = 0; onto && k < image.size(); ++k) onto = image[k] == target[k];
            expect(onto, "spin: induced labels do not match the MN-side admissible set");
        });
    }

    void check_gamma() {
        guarded("gamma", [&] {
            tb_breakdown(am_.mn); // asserts the crossing-count identity internally
            CertificateReport rep = contactomorphism_certificate(pq_);
            expect(rep.d3_matches, "gamma: d3 != -1/2");
            for (const LabelCertificate& lc : rep.labels) {
                expect(lc.matches, "gamma: pullback != B-side value at label (" +
                                       std::to_string(lc.label.t0) + "," + std::to_string(lc.label.t1) + ")");
                if (lc.is_canonical)
                    expect(lc.reduces_to_half_pq, "gamma: canonical label value != pq/2");
                // gamma_pullback must agree without raising.
                gamma_pullback(am_.mn, pq_, lc.label);
            }
            expect(rep.pass, "gamma: certificate reports failure");
        });
    }

    CoprimePair pq_;
    EuclideanData e_;
    AMapResult am_;
    BezoutData bz_;
    std::vector<std::string> failures_;
};

inline std::vector<std::string> verify_pair(const CoprimePair& pq) { return PairVerifier(pq).run(); }

/// The crossing-count identity for one MN pair (it throws on mismatch).
inline std::vector<std::string> verify_tb(const CoprimePair& mn) {
    std::vector<std::string> failures;
    try {
        tb_breakdown(mn);
    } catch (const std::exception& ex) {
        failures.push_back(std::string("tb: ") + ex.what());
    }
    return failures;
}

} // namespace lensball
