#ifndef FWCODES_COMMON_HPP
#define FWCODES_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fwcodes {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Invalid parameters: wrong family hypotheses, bad moduli, mixed fields.
/// The CLI maps this to exit code 2.
class ParamError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A configured resource limit was exceeded (field size cap, enumeration
/// bound, subset-search bound). The CLI maps this to exit code 4.
class BoundError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A computation contradicted an identity it must satisfy (non-integer or
/// negative solution of the moment system, singular system). Signals wrong
/// inputs rather than a resource problem; the CLI maps it to exit code 3.
class ConsistencyError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// exact division; throws ConsistencyError on nonzero remainder
inline BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
    if (den == 0) throw ConsistencyError(std::string(what) + ": division by zero");
    BigInt q = num / den;
    if (q * den != num) throw ConsistencyError(std::string(what) + ": non-integer value");
    return q;
}

inline BigInt binomial(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        r *= BigInt(n - k + i);
        r /= BigInt(i);
    }
    return r;
}

} // namespace fwcodes

#endif
