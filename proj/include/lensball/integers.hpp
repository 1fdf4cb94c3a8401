#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace lensball {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Error taxonomy.  Precondition violations throw std::invalid_argument;
// the named conditions below are part of the library contract.
struct DegenerateTail : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonRationalSphere : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonIntegralRho : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ModularHalfUndefined : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CertificateFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline bool is_even(const Int& a) { return a % 2 == 0; }
inline bool is_odd(const Int& a) { return !is_even(a); }

// (-1)^e for any integer e, including negative exponents.
inline int parity_sign(const Int& e) { return is_even(e) ? 1 : -1; }
inline int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

// b^e for b in {+1,-1}; only the parity of e matters.
inline int pm_pow(int b, const Int& e) { return is_even(e) ? 1 : b; }
inline int pm_pow(int b, long e) { return (e % 2 == 0) ? 1 : b; }

// Canonical representative of a mod n in [0, n), n > 0.
inline Int mod_reduce(const Int& a, const Int& n) {
    if (n <= 0) throw std::invalid_argument("mod_reduce: modulus must be positive");
    Int r = a % n;
    if (r < 0) r += n;
    return r;
}

// Inverse of 2 mod an odd modulus: (n+1)/2.
inline Int inv2_mod(const Int& n) {
    if (is_even(n)) throw ModularHalfUndefined("inv2_mod: 2 is not invertible mod " + n.str());
    return (n + 1) / 2;
}

// Exact division by 2 in Z/nZ: halve even integers outright, otherwise
// multiply by the inverse of 2 (odd n only).
inline Int half_mod(const Int& a, const Int& n) {
    if (is_even(a)) return mod_reduce(a / 2, n);
    if (is_odd(n)) return mod_reduce(a * inv2_mod(n), n);
    throw ModularHalfUndefined("half_mod: odd value " + a.str() + " mod even " + n.str());
}

inline std::string to_string(const Int& a) { return a.str(); }

inline std::string to_string(const Rat& r) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

} // namespace lensball
