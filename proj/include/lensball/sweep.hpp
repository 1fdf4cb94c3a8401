#pragma once

#include <atomic>
#include <chrono>
#include <string>
#include <thread>
#include <vector>

#include "lensball/integers.hpp"
#include "lensball/verify.hpp"

namespace lensball {

enum class ParityFilter { All, OddP, EvenP };
enum class EmitFormat { Text, Json, Csv };

struct SweepConfig {
    Int max_p{300};
    ParityFilter parity = ParityFilter::All;
    EmitFormat emit = EmitFormat::Text;
    unsigned parallelism = 1;
};

struct SweepFailure {
    Int p;
    Int q;
    std::string detail;
};

// One row per checked PQ pair, in enumeration order.
struct SweepRow {
    Int p, q, m, n, c, d;
    long ell = 0;
    bool pass = true;
};

struct SweepReport {
    unsigned long checked = 0;
    unsigned long passed = 0;
    std::vector<SweepFailure> failures;
    std::chrono::milliseconds elapsed{0};
    std::vector<SweepRow> rows;
};

/// All admissible PQ pairs with p <= max_p, in (p, q) order.
inline std::vector<CoprimePair> enumerate_pq(const Int& max_p, ParityFilter parity) {
    std::vector<CoprimePair> out;
    for (Int p = 3; p <= max_p; ++p) {
        if (parity == ParityFilter::OddP && is_even(p)) continue;
        if (parity == ParityFilter::EvenP && is_odd(p)) continue;
        for (Int q = 1; 2 * q < p; ++q)
            if (gcd(p, q) == 1) out.push_back(pq_pair(p, q));
    }
    return out;
}

/// All MN pairs with n <= bound, in (n, m) order.  The parity filter acts
/// through the matched p = m + n.
inline std::vector<CoprimePair> enumerate_mn(const Int& bound, ParityFilter parity = ParityFilter::All) {
    std::vector<CoprimePair> out;
    for (Int n = 2; n <= bound; ++n)
        for (Int m = 1; m < n; ++m) {
            if (gcd(m, n) != 1) continue;
            if (parity == ParityFilter::OddP && is_even(m + n)) continue;
            if (parity == ParityFilter::EvenP && is_odd(m + n)) continue;
            out.push_back(mn_pair(m, n));
        }
    return out;
}

/// Runs every property suite over the coprime sweep.  Work is dealt to
/// `parallelism` workers from a shared counter; results land in slots keyed
/// by enumeration index, so the report is identical for any worker count.
inline SweepReport run_sweep(const SweepConfig& config) {
    if (config.max_p < 3) throw std::invalid_argument("run_sweep: max_p must be at least 3");
    auto start = std::chrono::steady_clock::now();

    std::vector<CoprimePair> pairs = enumerate_pq(config.max_p, config.parity);
    std::vector<std::vector<std::string>> pair_failures(pairs.size());
    std::vector<SweepRow> rows(pairs.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next.fetch_add(1); k < pairs.size(); k = next.fetch_add(1)) {
            const CoprimePair& pq = pairs[k];
            pair_failures[k] = verify_pair(pq);
            SweepRow& row = rows[k];
            row.p = pq.p();
            row.q = pq.q();
            AMapResult am = a_map_closed(pq);
            BezoutData bz = bezout_cd(pq);
            row.m = am.mn.m();
            row.n = am.mn.n();
            row.ell = am.ell;
            row.c = bz.c;
            row.d = bz.d;
            row.pass = pair_failures[k].empty();
        }
    };

    unsigned jobs = config.parallelism == 0 ? 1 : config.parallelism;
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(jobs);
        for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }

    SweepReport report;
    report.rows = std::move(rows);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        ++report.checked;
        if (pair_failures[k].empty()) {
            ++report.passed;
        } else {
            std::string detail;
            for (const std::string& f : pair_failures[k]) {
                if (!detail.empty()) detail += "; ";
                detail += f;
            }
            report.failures.push_back(SweepFailure{pairs[k].p(), pairs[k].q(), detail});
        }
    }
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

} // namespace lensball
