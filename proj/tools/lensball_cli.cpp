// Command-line surface: euclid / amap / chains / certify / sweep over the
// exact-arithmetic library, with text, JSON (schema 1), and CSV emission.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lensball/lensball.hpp"

namespace {

using namespace lensball;
using json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

long long to_ll(const Int& v) { return v.convert_to<long long>(); }

json json_int_list(const std::vector<Int>& xs) {
    json out = json::array();
    for (const Int& x : xs) out.push_back(to_ll(x));
    return out;
}

std::string join_ints(const std::vector<Int>& xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) os << ' ';
        os << xs[i];
    }
    return os.str();
}

std::string join_signs(const std::vector<int>& xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) os << ' ';
        os << xs[i];
    }
    return os.str();
}

// Shared (p, q) validation with the normalization hint for q >= p - q.
CoprimePair parse_pq(long long p, long long q) {
    if (p <= 0 || q <= 0) throw CLI::ValidationError("p and q must be positive");
    Int P(p), Q(q);
    if (gcd(P, Q) != 1) throw CLI::ValidationError("not coprime: gcd(" + std::to_string(p) + ", " +
                                                   std::to_string(q) + ") != 1");
    if (P <= 2 * Q) {
        std::string hint;
        Int flipped = P - Q;
        if (Q < P && flipped != Q)
            hint = " (the boundary is unchanged by q -> p - q; try: " + P.str() + " " + flipped.str() + ")";
        throw CLI::ValidationError("requires p - q > q >= 1" + hint);
    }
    return pq_pair(P, Q);
}

int cmd_euclid(long long p, long long q, bool as_json) {
    CoprimePair pq = parse_pq(p, q);
    EuclideanData e = euclidean_sequences(pq);
    if (as_json) {
        json out{{"schema", 1},
                 {"p", p},
                 {"q", q},
                 {"r", json_int_list(e.remainders)},
                 {"s", json_int_list(e.quotients)},
                 {"ell", e.ell}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "(p, q) = (" << p << ", " << q << ")\n";
        std::cout << "r = " << join_ints(e.remainders) << "   (indices -1 .. ell+2)\n";
        std::cout << "s = " << join_ints(e.quotients) << "   (indices 0 .. ell+1)\n";
        std::cout << "ell = " << e.ell << "\n";
    }
    return kExitPass;
}

int cmd_amap(long long a, long long b, bool as_json) {
    // Input is the pair (p - q, q); the associated surgery pair is (a+b, b).
    if (a <= b) throw CLI::ValidationError("amap expects a > b >= 1 (the pair (p-q, q))");
    CoprimePair pq = parse_pq(a + b, b);
    AMapResult am = a_map_closed(pq);
    BezoutData bz = bezout_cd(pq);
    auto img = am.image();
    if (as_json) {
        json out{{"schema", 1},
                 {"a", a},
                 {"b", b},
                 {"p", to_ll(pq.p())},
                 {"q", to_ll(pq.q())},
                 {"A", {to_ll(img.first), to_ll(img.second)}},
                 {"m", to_ll(am.mn.m())},
                 {"n", to_ll(am.mn.n())},
                 {"ell", am.ell},
                 {"c", to_ll(bz.c)},
                 {"d", to_ll(bz.d)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "A(" << a << ", " << b << ") = (" << img.first << ", " << img.second << ")\n";
        std::cout << "(m, n) = (" << am.mn.m() << ", " << am.mn.n() << ")   ell = " << am.ell << "\n";
        std::cout << "(c, d) = (" << bz.c << ", " << bz.d << ")   c*m + d*n = 1\n";
    }
    return kExitPass;
}

struct ChainSummary {
    std::vector<Int> weights;
    Rat value;
    Int order;
    std::vector<Int> snf;
    Int lens_q; // the boundary is L(order, lens_q)
};

ChainSummary summarize_chain(const ContinuedFraction& cf) {
    ChainSummary out;
    out.weights = cf.coefficients;
    CfValue v = evaluate(cf);
    out.value = v.value;
    HomologyPresentation h = h1_presentation(WeightedChain{cf.coefficients});
    out.order = h.order;
    out.snf = snf_order(linking_matrix(WeightedChain{cf.coefficients}));
    Int den = abs(boost::multiprecision::denominator(v.value));
    out.lens_q = v.value < 0 ? den : out.order - den;
    return out;
}

int cmd_chains(long long p, long long q, bool as_json) {
    CoprimePair pq = parse_pq(p, q);
    AMapResult am = a_map_closed(pq);
    ChainSummary b = summarize_chain(symmetric_chain(pq));
    ChainSummary a = summarize_chain(a_side_chain(am.mn));
    LensEquivalence eq = lens_equiv(b.order, b.lens_q, a.lens_q);
    const char* eq_name = eq == LensEquivalence::SamePreserving  ? "SamePreserving"
                          : eq == LensEquivalence::SameReversing ? "SameReversing"
                                                                 : "Different";
    if (as_json) {
        auto chain_json = [](const ChainSummary& c) {
            return json{{"weights", json_int_list(c.weights)},
                        {"value", to_string(c.value)},
                        {"h1_order", to_ll(c.order)},
                        {"snf", json_int_list(c.snf)},
                        {"lens_q", to_ll(c.lens_q)}};
        };
        json out{{"schema", 1},
                 {"p", p},
                 {"q", q},
                 {"m", to_ll(am.mn.m())},
                 {"n", to_ll(am.mn.n())},
                 {"ell", am.ell},
                 {"b_chain", chain_json(b)},
                 {"a_chain", chain_json(a)},
                 {"lens_comparison", eq_name}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "(p, q) = (" << p << ", " << q << ")   (m, n) = (" << am.mn.m() << ", "
                  << am.mn.n() << ")   ell = " << am.ell << "\n";
        std::cout << "B chain: " << join_ints(b.weights) << "\n";
        std::cout << "  value " << to_string(b.value) << ", |H1| = " << b.order
                  << ", SNF " << join_ints(b.snf) << ", boundary L(" << b.order << "," << b.lens_q << ")\n";
        std::cout << "A chain: " << join_ints(a.weights) << "\n";
        std::cout << "  value " << to_string(a.value) << ", |H1| = " << a.order
                  << ", SNF " << join_ints(a.snf) << ", boundary L(" << a.order << "," << a.lens_q << ")\n";
        std::cout << "lens comparison: " << eq_name << "\n";
    }
    return kExitPass;
}

json certificate_json(const CertificateReport& rep) {
    json labels = json::array();
    for (const LabelCertificate& lc : rep.labels)
        labels.push_back(json{{"t0", lc.label.t0},
                              {"t1", lc.label.t1},
                              {"gammaB", to_ll(lc.gamma_b_coeff)},
                              {"gammaA_pulled", to_ll(lc.gamma_pulled_coeff)},
                              {"pass", lc.matches}});
    return json{{"schema", 1},
                {"p", to_ll(rep.p)},
                {"q", to_ll(rep.q)},
                {"m", to_ll(rep.m)},
                {"n", to_ll(rep.n)},
                {"ell", rep.ell},
                {"c", to_ll(rep.c)},
                {"d", to_ll(rep.d)},
                {"labels", labels},
                {"d3", to_string(rep.d3)},
                {"pass", rep.pass}};
}

int cmd_certify(long long p, long long q, bool as_json) {
    CoprimePair pq = parse_pq(p, q);
    CertificateReport rep = contactomorphism_certificate(pq);
    if (as_json) {
        std::cout << certificate_json(rep).dump(2) << "\n";
    } else {
        std::cout << "certificate (p, q) = (" << rep.p << ", " << rep.q << "): "
                  << (rep.pass ? "PASS" : "FAIL") << "\n";
        std::cout << "  (m, n) = (" << rep.m << ", " << rep.n << ")   ell = " << rep.ell
                  << "   (c, d) = (" << rep.c << ", " << rep.d << ")   modulus " << rep.modulus
                  << "   pq/2 = " << rep.half_pq << "\n";
        for (const LabelCertificate& lc : rep.labels) {
            std::cout << "  label (" << lc.label.t0 << ", " << lc.label.t1 << "): gammaB = "
                      << lc.gamma_b_coeff << ", gammaA = " << lc.gamma_a_coeff << ", pulled = "
                      << lc.gamma_pulled_coeff << ", T = " << join_signs(lc.t_list) << "  ["
                      << (lc.matches ? "match" : "MISMATCH")
                      << (lc.is_canonical ? (lc.reduces_to_half_pq ? ", = pq/2" : ", != pq/2") : "")
                      << "]\n";
        }
        std::cout << "  d3 = " << to_string(rep.d3) << (rep.d3_matches ? " (agrees on both sides)" : " MISMATCH")
                  << "\n";
    }
    return rep.pass ? kExitPass : kExitVerificationFailure;
}

int cmd_sweep(const SweepConfig& config) {
    SweepReport rep = run_sweep(config);
    // Elapsed time goes to stderr so stdout is byte-identical across runs
    // and worker counts.
    std::cerr << "elapsed: " << rep.elapsed.count() << " ms\n";
    switch (config.emit) {
        case EmitFormat::Json: {
            json failures = json::array();
            for (const SweepFailure& f : rep.failures)
                failures.push_back(json{{"p", to_ll(f.p)}, {"q", to_ll(f.q)}, {"detail", f.detail}});
            json out{{"schema", 1},
                     {"max_p", to_ll(config.max_p)},
                     {"parity", config.parity == ParityFilter::All    ? "all"
                                : config.parity == ParityFilter::OddP ? "odd"
                                                                      : "even"},
                     {"checked", rep.checked},
                     {"passed", rep.passed},
                     {"failures", failures}};
            std::cout << out.dump(2) << "\n";
            break;
        }
        case EmitFormat::Csv: {
            std::cout << "p,q,m,n,ell,c,d,pass\n";
            for (const SweepRow& row : rep.rows)
                std::cout << row.p << ',' << row.q << ',' << row.m << ',' << row.n << ','
                          << row.ell << ',' << row.c << ',' << row.d << ','
                          << (row.pass ? "true" : "false") << "\n";
            break;
        }
        case EmitFormat::Text: {
            std::cout << "sweep max_p = " << config.max_p << ", parity = "
                      << (config.parity == ParityFilter::All    ? "all"
                          : config.parity == ParityFilter::OddP ? "odd"
                                                                : "even")
                      << "\n";
            std::cout << "checked: " << rep.checked << "\n";
            std::cout << "passed: " << rep.passed << "\n";
            std::cout << "failures: " << rep.failures.size() << "\n";
            for (const SweepFailure& f : rep.failures)
                std::cout << "  (" << f.p << ", " << f.q << "): " << f.detail << "\n";
            break;
        }
    }
    return rep.failures.empty() ? kExitPass : kExitVerificationFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact integer invariants of the rational-ball families bounding L(p^2, pq-1)"};
    app.require_subcommand(1);

    long long default_max_p = 300;
    if (const char* env = std::getenv("LENSBALL_SWEEP_BOUND")) {
        try {
            default_max_p = std::stoll(env);
        } catch (const std::exception&) {
            std::cerr << "error: LENSBALL_SWEEP_BOUND is not an integer\n";
            return kExitUsage;
        }
    }

    long long p = 0, q = 0, a = 0, b = 0;
    bool as_json = false;

    auto* euclid = app.add_subcommand("euclid", "Remainder and quotient towers of (p, q)");
    euclid->add_option("p", p)->required();
    euclid->add_option("q", q)->required();
    euclid->add_flag("--json", as_json, "emit JSON");

    auto* amap = app.add_subcommand("amap", "Pair map A(a, b) with Bezout data, for (a, b) = (p-q, q)");
    amap->add_option("a", a)->required();
    amap->add_option("b", b)->required();
    amap->add_flag("--json", as_json, "emit JSON");

    auto* chains = app.add_subcommand("chains", "Both boundary plumbings, CF values, H1, lens comparison");
    chains->add_option("p", p)->required();
    chains->add_option("q", q)->required();
    chains->add_flag("--json", as_json, "emit JSON");

    auto* certify = app.add_subcommand("certify", "Gamma / d3 contact-homotopy certificate for (p, q)");
    certify->add_option("p", p)->required();
    certify->add_option("q", q)->required();
    certify->add_flag("--json", as_json, "emit JSON");

    auto* sweep = app.add_subcommand("sweep", "Machine-verify every identity over all pairs up to a bound");
    long long max_p = default_max_p;
    std::string parity = "all";
    unsigned jobs = 1;
    bool csv = false;
    sweep->add_option("--max-p", max_p, "largest p to check (default from LENSBALL_SWEEP_BOUND or 300)");
    sweep->add_option("--parity", parity, "all | odd | even")
        ->check(CLI::IsMember({"all", "odd", "even"}));
    sweep->add_option("--jobs", jobs, "worker threads");
    sweep->add_flag("--json", as_json, "emit JSON");
    sweep->add_flag("--csv", csv, "emit CSV rows per pair");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (euclid->parsed()) return cmd_euclid(p, q, as_json);
        if (amap->parsed()) return cmd_amap(a, b, as_json);
        if (chains->parsed()) return cmd_chains(p, q, as_json);
        if (certify->parsed()) return cmd_certify(p, q, as_json);
        if (sweep->parsed()) {
            if (as_json && csv) throw CLI::ValidationError("--json and --csv are mutually exclusive");
            if (max_p < 3) throw CLI::ValidationError("--max-p must be at least 3");
            SweepConfig config;
            config.max_p = Int(max_p);
            config.parity = parity == "odd"    ? ParityFilter::OddP
                            : parity == "even" ? ParityFilter::EvenP
                                               : ParityFilter::All;
            config.emit = as_json ? EmitFormat::Json : csv ? EmitFormat::Csv : EmitFormat::Text;
            config.parallelism = jobs == 0 ? 1 : jobs;
            return cmd_sweep(config);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    return kExitUsage;
}
