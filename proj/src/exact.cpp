#include "brickwalk/exact.hpp"

#include <cctype>
#include <stdexcept>

namespace brickwalk {

namespace {

Count exact_div(const Count& numerator, const Count& denominator) {
    Count quotient;
    Count remainder;
    boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
    if (remainder != 0) {
        throw std::logic_error("exact_div: division left a remainder");
    }
    return quotient;
}

}  // namespace

Count factorial(long n) {
    if (n < 0) {
        throw std::invalid_argument("factorial: n must be nonnegative");
    }
    Count result = 1;
    for (long t = 2; t <= n; ++t) {
        result *= t;
    }
    return result;
}

Count binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    Count result = 1;
    for (long t = 1; t <= k; ++t) {
        result = exact_div(result * (n - k + t), Count(t));
    }
    return result;
}

Count catalan(long n) {
    if (n < 0) {
        throw std::invalid_argument("catalan: n must be nonnegative");
    }
    return exact_div(binomial(2 * n, n), Count(n + 1));
}

Count narayana(long n, long k) {
    if (n < 1) {
        throw std::invalid_argument("narayana: n must be positive");
    }
    if (k < 1 || k > n) {
        return 0;
    }
    return exact_div(binomial(n, k) * binomial(n, k - 1), Count(n));
}

Count motzkin(long n) {
    if (n < 0) {
        throw std::invalid_argument("motzkin: n must be nonnegative");
    }
    Count result = 0;
    for (long k = 0; 2 * k <= n; ++k) {
        result += binomial(n, 2 * k) * catalan(k);
    }
    return result;
}

std::string to_decimal(const Count& value) {
    return value.str();
}

std::string to_fraction(const Ratio& value) {
    return value.str();
}

Ratio parse_ratio(const std::string& text) {
    std::size_t pos = 0;
    auto read_integer = [&text, &pos](bool sign_allowed) {
        std::size_t start = pos;
        if (sign_allowed && pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            ++pos;
        }
        std::size_t digits = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            ++digits;
        }
        if (digits == 0) {
            throw std::invalid_argument("parse_ratio: malformed rational '" + text + "'");
        }
        return text.substr(start, pos - start);
    };

    const std::string numerator = read_integer(true);
    std::string denominator = "1";
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        denominator = read_integer(false);
    }
    if (pos != text.size()) {
        throw std::invalid_argument("parse_ratio: malformed rational '" + text + "'");
    }
    Count den(denominator);
    if (den == 0) {
        throw std::invalid_argument("parse_ratio: zero denominator in '" + text + "'");
    }
    return Ratio(Count(numerator), den);
}

bool is_integer(const Ratio& value) {
    return boost::multiprecision::denominator(value) == 1;
}

}  // namespace brickwalk
