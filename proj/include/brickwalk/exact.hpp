#ifndef BRICKWALK_EXACT_HPP
#define BRICKWALK_EXACT_HPP

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace brickwalk {

// Thrown when an exhaustive computation would exceed its guarded budget.
class LimitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Exact arbitrary-precision integer; all counting results are Count-valued.
using Count = boost::multiprecision::cpp_int;

// Exact rational, always kept in lowest terms with a positive denominator.
using Ratio = boost::multiprecision::cpp_rational;

// n! for n >= 0; throws std::invalid_argument for negative n.
Count factorial(long n);

// C(n,k); returns 0 when k < 0, k > n, or n < 0.
Count binomial(long n, long k);

// Catalan number C_n = C(2n,n)/(n+1) for n >= 0.
Count catalan(long n);

// Narayana number Nar(n,k) = C(n,k)*C(n,k-1)/n for n >= 1;
// returns 0 for k < 1 or k > n. The division is checked to be exact.
Count narayana(long n, long k);

// Motzkin number M_n = sum_k C(n,2k)*catalan(k) for n >= 0.
Count motzkin(long n);

// Decimal string of an exact integer.
std::string to_decimal(const Count& value);

// "p" when the denominator is 1, otherwise "p/q" in lowest terms.
std::string to_fraction(const Ratio& value);

// Parses "p" or "p/q" (optional leading sign); throws std::invalid_argument
// on malformed input or zero denominator.
Ratio parse_ratio(const std::string& text);

// True iff the rational is an integer (denominator 1).
bool is_integer(const Ratio& value);

}  // namespace brickwalk

#endif
