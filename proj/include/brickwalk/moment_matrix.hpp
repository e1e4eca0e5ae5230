#ifndef BRICKWALK_MOMENT_MATRIX_HPP
#define BRICKWALK_MOMENT_MATRIX_HPP

#include <vector>

#include "brickwalk/exact.hpp"

namespace brickwalk {

// Square lower-triangular matrix of exact rationals. Only the entries with
// j <= i are stored; entry(i, j) reads 0 above the diagonal.
class TriMatrix {
public:
    explicit TriMatrix(int size);

    static TriMatrix identity(int size);

    int size() const { return size_; }

    const Ratio& entry(int i, int j) const;

    // Mutable access to a stored entry; requires j <= i.
    Ratio& at(int i, int j);

    TriMatrix multiply(const TriMatrix& other) const;

    // Exact matrix power by binary exponentiation; exponent >= 0.
    TriMatrix power(int exponent) const;

    Ratio row_sum(int i) const;

private:
    int size_;
    std::vector<std::vector<Ratio>> rows_;
};

// Entry A_ij(nu) = C(i,j) * prod_{t=1..j} (i + nu - t + 1)/(nu + t),
// evaluated as an exact telescoping rational product; 0 for j > i.
// Requires nu >= 0.
Ratio a_entry(const Ratio& nu, int i, int j);

// The size x size truncation of A(nu).
TriMatrix a_matrix(const Ratio& nu, int size);

// Even moment W_m(nu; 2n) of an m-step random flight in dimension
// d = 2(nu+1): the row-n sum of A(nu)^(m-1) truncated to size n+1.
// W_1(nu; 2n) = 1 for all n. Requires nu >= 0, m >= 1, n >= 0.
Ratio moment_even(const Ratio& nu, int m, int n);

// Super ballot number 6*(2n)!/(n!*(n+2)!) for n >= 0.
Ratio super_ballot(int n);

enum class W4Convention {
    // The closed form with its factor 1 - 2^(s+2) kept as written,
    // which makes every nu = 1/2 value negative.
    verbatim,
    // The same form with 1 - 2^(s+2) replaced by 2^(s+2) - 1 in the
    // nu = 1/2 case, making the moments positive.
    corrected,
};

// Closed forms for the fourth-step moments W_4(nu; s) in the odd
// dimensions d = 3 (nu = 1/2) and d = 5 (nu = 3/2); other nu are rejected.
Ratio odd_dim_w4(const Ratio& nu, int s, W4Convention convention);

struct IntegralityCell {
    int m;
    int n;
    Ratio moment;
    Ratio scaled;
    bool integral;
};

// For integer nu >= 2, tabulates C(2*nu - 1, 2) * moment_even(nu, m, n)
// over 1 <= m <= m_max, 0 <= n <= n_max and reports which products are
// integers. Purely a report; nothing is asserted here.
std::vector<IntegralityCell> integrality_report(int nu, int m_max, int n_max);

}  // namespace brickwalk

#endif
