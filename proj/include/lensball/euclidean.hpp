#pragma once

#include <vector>

#include "lensball/integers.hpp"

namespace lensball {

// A coprime pair carries its role: PQ-side pairs (p, q) satisfy
// p - q > q >= 1, MN-side pairs (m, n) satisfy n > m >= 1.
enum class PairRole { PQ, MN };

class CoprimePair {
public:
    CoprimePair(Int first, Int second, PairRole role)
        : first_(std::move(first)), second_(std::move(second)), role_(role) {
        if (first_ <= 0 || second_ <= 0)
            throw std::invalid_argument("CoprimePair: entries must be positive");
        if (gcd(first_, second_) != 1)
            throw std::invalid_argument("CoprimePair: gcd(" + first_.str() + "," +
                                        second_.str() + ") != 1");
        if (role_ == PairRole::PQ) {
            if (first_ <= 2 * second_)
                throw std::invalid_argument("CoprimePair: PQ role requires p - q > q >= 1, got (" +
                                            first_.str() + "," + second_.str() + ")");
        } else {
            if (second_ <= first_)
                throw std::invalid_argument("CoprimePair: MN role requires n > m >= 1, got (" +
                                            first_.str() + "," + second_.str() + ")");
        }
    }

    const Int& first() const { return first_; }
    const Int& second() const { return second_; }
    PairRole role() const { return role_; }

    // PQ accessors.
    const Int& p() const { return first_; }
    const Int& q() const { return second_; }
    // MN accessors.
    const Int& m() const { return first_; }
    const Int& n() const { return second_; }

    bool operator==(const CoprimePair& o) const {
        return first_ == o.first_ && second_ == o.second_ && role_ == o.role_;
    }

private:
    Int first_;
    Int second_;
    PairRole role_;
};

inline CoprimePair pq_pair(Int p, Int q) { return CoprimePair(std::move(p), std::move(q), PairRole::PQ); }
inline CoprimePair mn_pair(Int m, Int n) { return CoprimePair(std::move(m), std::move(n), PairRole::MN); }

/// Remainder/quotient towers of the division algorithm.
///
/// remainders r(i) for i in [-1, ell+2] with r(-1) > r(0) > ... > r(ell+1) = 1,
/// r(ell+2) = 0, and r(i-1) = r(i) * s(i) + r(i+1) for the quotients s(i),
/// i in [0, ell+1].  ell is the last index with r(ell) > 1 (-1 when the
/// smaller entry is already 1).
struct EuclideanData {
    std::vector<Int> remainders; // remainders[k] = r(k - 1)
    std::vector<Int> quotients;  // quotients[k] = s(k)
    long ell = 0;

    const Int& r(long i) const {
        if (i < -1 || i > ell + 2) throw std::out_of_range("EuclideanData::r index " + std::to_string(i));
        return remainders[static_cast<std::size_t>(i + 1)];
    }
    const Int& s(long i) const {
        if (i < 0 || i > ell + 1) throw std::out_of_range("EuclideanData::s index " + std::to_string(i));
        return quotients[static_cast<std::size_t>(i)];
    }
};

// Runs the division algorithm on (p, q) for a PQ pair and on (n, m) for an
// MN pair, so the MN case produces the rho/sigma towers.
inline EuclideanData euclidean_sequences(const CoprimePair& pair) {
    Int hi = pair.role() == PairRole::PQ ? pair.first() : pair.second();
    Int lo = pair.role() == PairRole::PQ ? pair.second() : pair.first();

    EuclideanData out;
    out.remainders.push_back(hi);
    out.remainders.push_back(lo);
    Int a = hi, b = lo;
    while (b != 0) {
        out.quotients.push_back(a / b);
        Int rem = a % b;
        out.remainders.push_back(rem);
        a = b;
        b = rem;
    }
    // gcd(hi, lo) = 1, so the tower ends ... > 1 > 0; ell indexes the last
    // remainder above 1.
    out.ell = static_cast<long>(out.remainders.size()) - 4;
    return out;
}

} // namespace lensball
