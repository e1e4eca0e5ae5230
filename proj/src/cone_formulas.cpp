#include "brickwalk/cone_formulas.hpp"

#include <stdexcept>

namespace brickwalk {

namespace {

bool odd(int value) {
    return value % 2 != 0;
}

void require_lengths(int n_steps, const char* who) {
    if (n_steps < 0) {
        throw std::invalid_argument(std::string(who) + ": length must be nonnegative");
    }
}

void require_upper(int j, const char* who) {
    if (j < 0) {
        throw std::domain_error(std::string(who) + ": j must be nonnegative");
    }
}

Count checked_count(const Ratio& value, const char* who) {
    if (!is_integer(value) || value < 0) {
        throw std::logic_error(std::string(who) + ": sum is not a nonnegative integer");
    }
    return numerator(value);
}

}  // namespace

Count h_pl(int i, int j, int n_steps) {
    require_lengths(n_steps, "h_pl");
    if (odd(i + j + n_steps)) {
        return 0;
    }
    Count total = 0;
    if (!odd(n_steps)) {
        const int n = n_steps / 2;
        if (!odd(i)) {
            const int a = i / 2;
            const int b = j / 2;
            for (int k = 0; k <= n; ++k) {
                total += binomial(2 * k, k + b) * binomial(n, k + a) * binomial(n, k - a);
            }
        } else {
            const int a = (i - 1) / 2;
            const int b = (j - 1) / 2;
            for (int k = 0; k <= n; ++k) {
                total +=
                    binomial(2 * k + 1, k + b + 1) * binomial(n, k + a + 1) * binomial(n, k - a);
            }
        }
    } else {
        const int n = (n_steps - 1) / 2;
        if (odd(i)) {
            const int a = (i - 1) / 2;
            const int b = j / 2;
            for (int k = 0; k <= n; ++k) {
                total += binomial(2 * k, k + b) * binomial(n, k + a) * binomial(n + 1, k - a);
            }
        } else {
            const int a = i / 2;
            const int b = (j - 1) / 2;
            for (int k = 0; k <= n; ++k) {
                total += binomial(2 * k + 1, k + b + 1) * binomial(n, k + a) *
                         binomial(n + 1, k - a + 1);
            }
        }
    }
    return total;
}

Count h_hhp(int i, int j, int n_steps) {
    require_lengths(n_steps, "h_hhp");
    require_upper(j, "h_hhp");
    return h_pl(i, j, n_steps) - h_pl(i, j + 2, n_steps);
}

Count h_vhp(int j, int n_steps) {
    require_lengths(n_steps, "h_vhp");
    require_upper(j, "h_vhp");
    if (odd(j + n_steps)) {
        return 0;
    }
    Count total = 0;
    if (!odd(n_steps)) {
        const int n = n_steps / 2;
        const int b = j / 2;
        for (int k = 0; k <= n; ++k) {
            total += binomial(2 * k, k + b) * narayana(n + 1, k + 1);
        }
    } else {
        const int n = (n_steps - 1) / 2;
        const int b = (j - 1) / 2;
        for (int k = 0; k <= n; ++k) {
            total += binomial(2 * k + 1, k + b + 1) * narayana(n + 1, k + 1);
        }
    }
    return total;
}

Count h_rvhp(int j, int n_steps) {
    require_lengths(n_steps, "h_rvhp");
    require_upper(j, "h_rvhp");
    if (odd(j + n_steps)) {
        return 0;
    }
    if (n_steps == 0) {
        return j == 0 ? 1 : 0;
    }
    if (!odd(n_steps)) {
        const int n = (n_steps - 2) / 2;
        const int b = j / 2;
        Count total = 0;
        for (int k = 0; k <= n; ++k) {
            total += binomial(2 * k + 2, k + b + 1) * narayana(n + 1, k + 1);
        }
        return total;
    }
    return h_vhp(j, n_steps);
}

Count h_qp(int j, int n_steps) {
    require_lengths(n_steps, "h_qp");
    require_upper(j, "h_qp");
    if (odd(j + n_steps)) {
        return 0;
    }
    Ratio total = 0;
    if (!odd(n_steps)) {
        const int n = n_steps / 2;
        const int b = j / 2;
        for (int k = 0; k <= n; ++k) {
            total += Ratio(2 * b + 1, k + b + 1) * Ratio(binomial(2 * k, k + b)) *
                     Ratio(narayana(n + 1, k + 1));
        }
    } else {
        const int n = (n_steps - 1) / 2;
        const int b = (j - 1) / 2;
        for (int k = 0; k <= n; ++k) {
            total += Ratio(2 * b + 2, k + b + 2) * Ratio(binomial(2 * k + 1, k + b + 1)) *
                     Ratio(narayana(n + 1, k + 1));
        }
    }
    return checked_count(total, "h_qp");
}

Count h_rqp(int j, int n_steps) {
    require_lengths(n_steps, "h_rqp");
    require_upper(j, "h_rqp");
    if (odd(j + n_steps)) {
        return 0;
    }
    if (n_steps == 0) {
        return j == 0 ? 1 : 0;
    }
    if (!odd(n_steps)) {
        const int n = (n_steps - 2) / 2;
        const int b = j / 2;
        Ratio total = 0;
        for (int k = 0; k <= n; ++k) {
            total += Ratio(2 * b + 1, k + b + 2) * Ratio(binomial(2 * k + 2, k + b + 1)) *
                     Ratio(narayana(n + 1, k + 1));
        }
        return checked_count(total, "h_rqp");
    }
    return h_qp(j, n_steps);
}

ConeCount cone_count(const LatticeFamily& family, int i, int j, int n_steps) {
    require_lengths(n_steps, "cone_count");
    if (family.dimension() != 2) {
        throw std::invalid_argument("cone_count: family must be a planar cone");
    }
    const Vertex endpoint{j, i};
    if (!family.contains(endpoint)) {
        throw std::domain_error("cone_count: endpoint outside the family's domain");
    }

    using Kind = LatticeFamily::Kind;
    ConeCount out;
    out.closed_form = true;
    switch (family.kind()) {
        case Kind::g0:
        case Kind::brick_plane:
            out.value = h_pl(i, j, n_steps);
            return out;
        case Kind::h_half_plane:
            out.value = h_hhp(i, j, n_steps);
            return out;
        case Kind::v_half_plane:
            if (i == 0 && j >= 0) {
                out.value = h_vhp(j, n_steps);
                return out;
            }
            break;
        case Kind::refl_v_half_plane:
            if (i == 0 && j >= 0) {
                out.value = h_rvhp(j, n_steps);
                return out;
            }
            break;
        case Kind::quarter_plane:
            if (i == 0) {
                out.value = h_qp(j, n_steps);
                return out;
            }
            break;
        case Kind::g1:
        case Kind::refl_quarter_plane:
            if (i == 0) {
                out.value = h_rqp(j, n_steps);
                return out;
            }
            break;
        default:
            throw std::invalid_argument("cone_count: family must be a planar cone");
    }
    out.closed_form = false;
    out.note = "no closed form for this endpoint; counted by exhaustive walk enumeration";
    out.value = count_paths(family, family.origin(), endpoint, n_steps);
    return out;
}

}  // namespace brickwalk
