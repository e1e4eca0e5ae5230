#include "brickwalk/moment_matrix.hpp"

#include <stdexcept>

namespace brickwalk {

namespace {

const Ratio kZero = 0;

Ratio pow2(int e) {
    return Ratio(Count(1) << e);
}

}  // namespace

TriMatrix::TriMatrix(int size) : size_(size) {
    if (size < 1) {
        throw std::invalid_argument("TriMatrix: size must be positive");
    }
    rows_.resize(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) {
        rows_[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, Ratio(0));
    }
}

TriMatrix TriMatrix::identity(int size) {
    TriMatrix m(size);
    for (int i = 0; i < size; ++i) {
        m.at(i, i) = 1;
    }
    return m;
}

const Ratio& TriMatrix::entry(int i, int j) const {
    if (i < 0 || i >= size_ || j < 0 || j >= size_) {
        throw std::out_of_range("TriMatrix::entry: index out of range");
    }
    if (j > i) {
        return kZero;
    }
    return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

Ratio& TriMatrix::at(int i, int j) {
    if (i < 0 || i >= size_ || j < 0 || j > i) {
        throw std::out_of_range("TriMatrix::at: index out of range");
    }
    return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

TriMatrix TriMatrix::multiply(const TriMatrix& other) const {
    if (size_ != other.size_) {
        throw std::invalid_argument("TriMatrix::multiply: size mismatch");
    }
    TriMatrix result(size_);
    for (int i = 0; i < size_; ++i) {
        for (int j = 0; j <= i; ++j) {
            Ratio acc = 0;
            for (int k = j; k <= i; ++k) {
                acc += entry(i, k) * other.entry(k, j);
            }
            result.at(i, j) = acc;
        }
    }
    return result;
}

TriMatrix TriMatrix::power(int exponent) const {
    if (exponent < 0) {
        throw std::invalid_argument("TriMatrix::power: exponent must be nonnegative");
    }
    TriMatrix result = identity(size_);
    TriMatrix base = *this;
    int e = exponent;
    while (e > 0) {
        if (e & 1) {
            result = result.multiply(base);
        }
        e >>= 1;
        if (e > 0) {
            base = base.multiply(base);
        }
    }
    return result;
}

Ratio TriMatrix::row_sum(int i) const {
    if (i < 0 || i >= size_) {
        throw std::out_of_range("TriMatrix::row_sum: index out of range");
    }
    Ratio acc = 0;
    for (int j = 0; j <= i; ++j) {
        acc += entry(i, j);
    }
    return acc;
}

Ratio a_entry(const Ratio& nu, int i, int j) {
    if (nu < 0) {
        throw std::invalid_argument("a_entry: nu must be nonnegative");
    }
    if (i < 0 || j < 0) {
        throw std::invalid_argument("a_entry: indices must be nonnegative");
    }
    if (j > i) {
        return 0;
    }
    Ratio acc(binomial(i, j));
    for (int t = 1; t <= j; ++t) {
        acc *= (nu + (i - t + 1)) / (nu + t);
    }
    return acc;
}

TriMatrix a_matrix(const Ratio& nu, int size) {
    TriMatrix m(size);
    for (int i = 0; i < size; ++i) {
        for (int j = 0; j <= i; ++j) {
            m.at(i, j) = a_entry(nu, i, j);
        }
    }
    return m;
}

Ratio moment_even(const Ratio& nu, int m, int n) {
    if (m < 1) {
        throw std::invalid_argument("moment_even: m must be positive");
    }
    if (n < 0) {
        throw std::invalid_argument("moment_even: n must be nonnegative");
    }
    if (m == 1) {
        return 1;
    }
    const TriMatrix a = a_matrix(nu, n + 1);
    return a.power(m - 1).row_sum(n);
}

Ratio super_ballot(int n) {
    if (n < 0) {
        throw std::invalid_argument("super_ballot: n must be nonnegative");
    }
    return Ratio(6 * factorial(2 * n), factorial(n) * factorial(n + 2));
}

Ratio odd_dim_w4(const Ratio& nu, int s, W4Convention convention) {
    if (s < 0) {
        throw std::invalid_argument("odd_dim_w4: s must be nonnegative");
    }
    if (nu == Ratio(1, 2)) {
        const Ratio sign_factor = convention == W4Convention::verbatim
                                      ? Ratio(1) - pow2(s + 2)
                                      : pow2(s + 2) - Ratio(1);
        Ratio denom = Ratio(s + 2) * (s + 3) * (s + 4);
        return pow2(s + 3) * sign_factor / denom;
    }
    if (nu == Ratio(3, 2)) {
        const Count ss = s;
        const Count poly_a = ss * ss * ss + 27 * ss * ss + 230 * ss + 616;
        const Count poly_b = ss * ss * ss + 15 * ss * ss + 62 * ss + 56;
        const Ratio numerator =
            Ratio(1728) * pow2(s + 1) * (Ratio(poly_a) + Ratio(64) * pow2(s) * Ratio(poly_b));
        Ratio denom = 1;
        for (int f : {s + 2, s + 4, s + 5, s + 6, s + 7, s + 8, s + 9, s + 10, s + 12}) {
            denom *= f;
        }
        return numerator / denom;
    }
    throw std::invalid_argument("odd_dim_w4: nu must be 1/2 or 3/2");
}

std::vector<IntegralityCell> integrality_report(int nu, int m_max, int n_max) {
    if (nu < 2) {
        throw std::invalid_argument("integrality_report: nu must be at least 2");
    }
    const Ratio multiplier(binomial(2 * nu - 1, 2));
    std::vector<IntegralityCell> cells;
    for (int m = 1; m <= m_max; ++m) {
        for (int n = 0; n <= n_max; ++n) {
            IntegralityCell cell;
            cell.m = m;
            cell.n = n;
            cell.moment = moment_even(Ratio(nu), m, n);
            cell.scaled = multiplier * cell.moment;
            cell.integral = is_integer(cell.scaled);
            cells.push_back(cell);
        }
    }
    return cells;
}

}  // namespace brickwalk
