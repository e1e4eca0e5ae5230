#include "brickwalk/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "brickwalk/bijection.hpp"
#include "brickwalk/cone_formulas.hpp"
#include "brickwalk/exact.hpp"
#include "brickwalk/lattice_graphs.hpp"
#include "brickwalk/moment_matrix.hpp"
#include "brickwalk/random_flights.hpp"
#include "brickwalk/word_models.hpp"

namespace brickwalk {

namespace {

std::string fmt_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

Check moment_check(std::string name, const Count& walks, const Ratio& moment) {
    return {std::move(name), to_decimal(walks), to_fraction(moment), Ratio(walks) == moment};
}

Check count_check(std::string name, const Count& lhs, const Count& rhs) {
    return {std::move(name), to_decimal(lhs), to_decimal(rhs), lhs == rhs};
}

std::string vertex_text(const Vertex& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += std::to_string(v[i]);
    }
    return out + ")";
}

// All family vertices inside the centered box of the given radius.
std::vector<Vertex> box_vertices(const LatticeFamily& family, int radius) {
    std::vector<Vertex> out;
    Vertex v(static_cast<std::size_t>(family.dimension()), -radius);
    for (;;) {
        if (family.contains(v)) {
            out.push_back(v);
        }
        std::size_t axis = 0;
        while (axis < v.size() && v[axis] == radius) {
            v[axis] = -radius;
            ++axis;
        }
        if (axis == v.size()) {
            return out;
        }
        ++v[axis];
    }
}

using Frontier = std::unordered_map<Vertex, Count, VertexHash>;

Frontier expand(const LatticeFamily& family, const Frontier& frontier) {
    Frontier next;
    next.reserve(frontier.size() * 2);
    for (const auto& [v, paths] : frontier) {
        for (auto& w : family.neighbors(v)) {
            next[std::move(w)] += paths;
        }
    }
    return next;
}

Count frontier_value(const Frontier& frontier, const Vertex& v) {
    const auto it = frontier.find(v);
    return it == frontier.end() ? Count(0) : it->second;
}

struct GridScan {
    std::string key_a = "i";
    std::string key_b = "j";
    std::string rhs_label = "walks";
    long long cells = 0;
    bool mismatch = false;
    std::string detail_lhs;
    std::string detail_rhs;

    void record(int a, int b, const Count& formula, const Count& reference) {
        ++cells;
        if (!mismatch && formula != reference) {
            mismatch = true;
            detail_lhs = "mismatch at " + key_a + "=" + std::to_string(a) + " " + key_b + "=" +
                         std::to_string(b) + ": formula=" + to_decimal(formula);
            detail_rhs = rhs_label + "=" + to_decimal(reference);
        }
    }

    Check to_check(std::string name) const {
        if (mismatch) {
            return {std::move(name), detail_lhs, detail_rhs, false};
        }
        return {std::move(name), "all " + std::to_string(cells) + " cells agree",
                rhs_label + " match the formula", true};
    }
};

struct SeedTrial {
    int hits = 0;
    int total = 0;
    std::string first_miss;

    void record(std::uint64_t seed, double estimate, double stderr_value, double exact) {
        ++total;
        if (std::fabs(estimate - exact) <= 4.0 * stderr_value) {
            ++hits;
        } else if (first_miss.empty()) {
            first_miss = "seed " + std::to_string(seed) + ": estimate=" + fmt_double(estimate) +
                         " stderr=" + fmt_double(stderr_value) + " exact=" + fmt_double(exact);
        }
    }

    Check to_check(std::string name) const {
        const bool pass = total - hits <= 1;
        std::string lhs = std::to_string(hits) + "/" + std::to_string(total) +
                          " seeds within 4 standard errors";
        if (!pass) {
            lhs += " (" + first_miss + ")";
        }
        return {std::move(name), std::move(lhs), "at least " + std::to_string(total - 1), pass};
    }
};

int resolved(int value, int fallback) {
    return value < 0 ? fallback : value;
}

long long resolved_ll(long long value, long long fallback) {
    return value < 0 ? fallback : value;
}

}  // namespace

std::vector<Check> checks_walks_g0(int m_max, int n_max) {
    std::vector<Check> out;
    for (int m = 1; m <= m_max; ++m) {
        const LatticeFamily family = LatticeFamily::g0(m);
        Frontier frontier{{family.origin(), Count(1)}};
        for (int n = 0; n <= n_max; ++n) {
            out.push_back(moment_check(
                "closed " + family.name() + " walks len=" + std::to_string(2 * n) +
                    " vs moment(0," + std::to_string(m + 1) + "," + std::to_string(n) + ")",
                frontier_value(frontier, family.origin()), moment_even(0, m + 1, n)));
            if (n < n_max) {
                frontier = expand(family, expand(family, frontier));
            }
        }
    }
    return out;
}

std::vector<Check> checks_walks_g1(int m_max, int n_max) {
    std::vector<Check> out;
    for (int m = 1; m <= m_max; ++m) {
        const LatticeFamily family = LatticeFamily::g1(m);
        Frontier frontier{{family.origin(), Count(1)}};
        frontier = expand(family, expand(family, frontier));
        for (int n = 0; n <= n_max; ++n) {
            out.push_back(moment_check(
                "closed " + family.name() + " walks len=" + std::to_string(2 * n + 2) +
                    " vs moment(1," + std::to_string(m + 1) + "," + std::to_string(n) + ")",
                frontier_value(frontier, family.origin()), moment_even(1, m + 1, n)));
            if (n < n_max) {
                frontier = expand(family, expand(family, frontier));
            }
        }
    }
    return out;
}

std::vector<Check> checks_sequence_prefixes() {
    struct Sequence {
        const char* label;
        std::vector<long long> prefix;
        int nu;
        int moment_m;
        LatticeFamily family;
        int length_offset;
    };
    const std::vector<Sequence> sequences{
        {"central binomial", {1, 2, 6, 20, 70}, 0, 2, LatticeFamily::g0(1), 0},
        {"honeycomb walks", {1, 3, 15, 93, 639}, 0, 3, LatticeFamily::g0(2), 0},
        {"Domb", {1, 4, 28, 256, 2716}, 0, 4, LatticeFamily::g0(3), 0},
        {"Catalan", {1, 2, 5, 14, 42}, 1, 2, LatticeFamily::g1(1), 2},
    };

    std::vector<Check> out;
    for (const Sequence& seq : sequences) {
        for (std::size_t n = 0; n < seq.prefix.size(); ++n) {
            const Count expected(seq.prefix[n]);
            const Ratio matrix = moment_even(seq.nu, seq.moment_m, static_cast<int>(n));
            const Count walks =
                count_paths(seq.family, seq.family.origin(), seq.family.origin(),
                            2 * static_cast<int>(n) + seq.length_offset);
            Check check = moment_check(std::string(seq.label) + " n=" + std::to_string(n) +
                                           " (expect " + to_decimal(expected) + ")",
                                       walks, matrix);
            check.pass = check.pass && walks == expected;
            out.push_back(std::move(check));
        }
    }
    return out;
}

std::vector<Check> checks_isomorphism(int m_max, int radius, int n_max) {
    std::vector<Check> out;
    for (int m = 1; m <= m_max; ++m) {
        const LatticeFamily ve = LatticeFamily::ve(m + 1);
        const LatticeFamily g0 = LatticeFamily::g0(m);

        long long vertices = 0;
        std::string failure;
        for (const Vertex& v : box_vertices(ve, radius)) {
            ++vertices;
            if (psi_inverse(psi(v)) != v) {
                failure = "psi round trip broken at " + vertex_text(v);
                break;
            }
            std::vector<Vertex> mapped;
            for (const Vertex& w : ve.neighbors(v)) {
                mapped.push_back(psi(w));
            }
            std::vector<Vertex> direct = g0.neighbors(psi(v));
            std::sort(mapped.begin(), mapped.end());
            std::sort(direct.begin(), direct.end());
            if (mapped != direct) {
                failure = "neighborhood image differs at " + vertex_text(v);
                break;
            }
        }
        out.push_back({"psi isomorphism VE_" + std::to_string(m + 1) + " -> " + g0.name() +
                           " radius=" + std::to_string(radius),
                       failure.empty() ? "all " + std::to_string(vertices) + " vertices agree"
                                       : failure,
                       "neighborhoods map bijectively", failure.empty()});

        for (int n = 0; n <= n_max; ++n) {
            out.push_back(count_check(
                "closed VE_" + std::to_string(m + 1) + " walks len=" + std::to_string(2 * n) +
                    " vs " + g0.name(),
                count_paths(ve, ve.origin(), ve.origin(), 2 * n),
                count_paths(g0, g0.origin(), g0.origin(), 2 * n)));
        }
    }
    return out;
}

std::vector<Check> checks_abelian(int m_max, int n_max) {
    std::vector<Check> out;
    for (int m = 1; m <= m_max; ++m) {
        for (int n = 0; n <= n_max; ++n) {
            out.push_back(moment_check("abelian squares alphabet=" + std::to_string(m) +
                                           " halves=" + std::to_string(n) + " vs moment(0," +
                                           std::to_string(m) + "," + std::to_string(n) + ")",
                                       count_abelian_squares(m, n), moment_even(0, m, n)));
        }
    }
    return out;
}

std::vector<Check> checks_word_census(int n_max) {
    std::vector<Check> out;
    for (int n = 0; n <= n_max; ++n) {
        for (int k = 0; k <= n; ++k) {
            const auto words = enumerate_p_hat(2 * n, k, k);
            out.push_back(count_check("prefix-positive words 2n=" + std::to_string(2 * n) +
                                          " k=" + std::to_string(k) + " vs narayana(" +
                                          std::to_string(n + 1) + "," + std::to_string(k + 1) +
                                          ")",
                                      Count(words.size()), narayana(n + 1, k + 1)));
        }
    }
    return out;
}

std::vector<Check> checks_bijection(int n_max) {
    std::vector<Check> out;

    const std::vector<std::pair<std::string, std::string>> traces{
        {"", "UD"}, {"UDHH", "UDUUDD"}, {"UHHD", "UUDDUD"}, {"HHUD", "UUDUDD"}};
    for (const auto& [input, expected] : traces) {
        const std::string image = format_word(motzkin_to_dyck(parse_word(input)));
        out.push_back({"rewrite trace " + (input.empty() ? std::string("(empty)") : input), image,
                       expected, image == expected});
    }

    for (int n = 0; n <= n_max; ++n) {
        for (int k = 0; k <= n; ++k) {
            const BijectivityReport report = verify_bijectivity(n, k);
            const Count expected = narayana(n + 1, k + 1);
            out.push_back(
                {"bijectivity n=" + std::to_string(n) + " k=" + std::to_string(k),
                 "domain=" + std::to_string(report.domain_size) +
                     " image=" + std::to_string(report.image_size) +
                     " valid=" + (report.all_valid ? "yes" : "no"),
                 "narayana(" + std::to_string(n + 1) + "," + std::to_string(k + 1) +
                     ")=" + to_decimal(expected) + " (and the peak census)",
                 report.all_valid && report.narayana_match &&
                     report.domain_size == report.image_size});
        }
    }
    return out;
}

std::vector<Check> checks_cones(int len_max) {
    std::vector<Check> out;

    struct ConeGrid {
        LatticeFamily family;
        int i_min;
        int i_max;
        Count (*formula)(int i, int j, int n);
    };
    const std::vector<ConeGrid> grids{
        {LatticeFamily::brick_plane(), -3, 3, [](int i, int j, int n) { return h_pl(i, j, n); }},
        {LatticeFamily::h_half_plane(), -3, 3,
         [](int i, int j, int n) { return h_hhp(i, j, n); }},
        {LatticeFamily::v_half_plane(), 0, 0, [](int, int j, int n) { return h_vhp(j, n); }},
        {LatticeFamily::refl_v_half_plane(), 0, 0,
         [](int, int j, int n) { return h_rvhp(j, n); }},
        {LatticeFamily::quarter_plane(), 0, 0, [](int, int j, int n) { return h_qp(j, n); }},
        {LatticeFamily::refl_quarter_plane(), 0, 0,
         [](int, int j, int n) { return h_rqp(j, n); }},
    };

    for (const ConeGrid& grid : grids) {
        Frontier frontier{{grid.family.origin(), Count(1)}};
        for (int len = 0; len <= len_max; ++len) {
            GridScan scan;
            for (int i = grid.i_min; i <= grid.i_max; ++i) {
                for (int j = 0; j <= 5; ++j) {
                    const Vertex endpoint{j, i};
                    if (!grid.family.contains(endpoint)) {
                        continue;
                    }
                    scan.record(i, j, grid.formula(i, j, len),
                                frontier_value(frontier, endpoint));
                }
            }
            out.push_back(scan.to_check(grid.family.name() + " closed form len=" +
                                        std::to_string(len)));
            if (len < len_max) {
                frontier = expand(grid.family, frontier);
            }
        }
    }

    {
        GridScan scan;
        scan.key_a = "j";
        scan.key_b = "len";
        scan.rhs_label = "plain half-plane counts";
        for (int j = 0; j <= 3; ++j) {
            for (int n = 0; n <= 4; ++n) {
                scan.record(2 * j + 1, 2 * n + 1, h_rvhp(2 * j + 1, 2 * n + 1),
                            h_vhp(2 * j + 1, 2 * n + 1));
            }
        }
        out.push_back(scan.to_check(
            "odd-length inversion: reflected vs plain vertical half-plane"));
    }

    {
        GridScan qp_scan;
        qp_scan.key_a = "j";
        qp_scan.key_b = "len";
        qp_scan.rhs_label = "half-plane differences";
        GridScan rqp_scan = qp_scan;
        for (int j = 0; j <= 5; ++j) {
            for (int len = 0; len <= len_max; ++len) {
                qp_scan.record(j, len, h_qp(j, len), h_vhp(j, len) - h_vhp(j + 2, len));
                rqp_scan.record(j, len, h_rqp(j, len), h_rvhp(j, len) - h_rvhp(j + 2, len));
            }
        }
        out.push_back(qp_scan.to_check("quarter-plane reflection difference"));
        out.push_back(rqp_scan.to_check("reflected quarter-plane reflection difference"));
    }

    return out;
}

std::vector<Check> checks_montecarlo(long long samples, int seeds) {
    std::vector<Check> out;
    const std::string suffix =
        " (samples=" + std::to_string(samples) + " seeds=" + std::to_string(seeds) + ")";

    for (const int d : {2, 4}) {
        const int nu = d / 2 - 1;
        for (int m = 2; m <= 4; ++m) {
            for (int n = 1; n <= 3; ++n) {
                const double exact = moment_even(nu, m, n).convert_to<double>();
                SeedTrial trial;
                for (int seed = 1; seed <= seeds; ++seed) {
                    const EstimateReport report = estimate_even_moment(
                        {d, m, samples, static_cast<std::uint64_t>(seed)}, n);
                    trial.record(static_cast<std::uint64_t>(seed), report.point_estimate,
                                 report.standard_error, exact);
                }
                out.push_back(trial.to_check("mc moment d=" + std::to_string(d) +
                                             " m=" + std::to_string(m) +
                                             " n=" + std::to_string(n) + suffix));
            }
        }
    }

    for (const int m : {2, 3, 5}) {
        const double exact = 1.0 / (m + 1);
        SeedTrial trial;
        for (int seed = 1; seed <= seeds; ++seed) {
            const EstimateReport report =
                estimate_prob_within_unit(2, m, samples, static_cast<std::uint64_t>(seed));
            trial.record(static_cast<std::uint64_t>(seed), report.point_estimate,
                         report.standard_error, exact);
        }
        out.push_back(trial.to_check("mc return probability d=2 m=" + std::to_string(m) +
                                     " vs 1/" + std::to_string(m + 1) + suffix));
    }

    for (const int s : {0, 2, 4}) {
        const double exact =
            odd_dim_w4(Ratio(1, 2), s, W4Convention::corrected).convert_to<double>();
        SeedTrial trial;
        for (int seed = 1; seed <= seeds; ++seed) {
            const EstimateReport report = estimate_even_moment(
                {3, 4, samples, static_cast<std::uint64_t>(seed)}, s / 2);
            trial.record(static_cast<std::uint64_t>(seed), report.point_estimate,
                         report.standard_error, exact);
        }
        out.push_back(trial.to_check("mc moment d=3 m=4 s=" + std::to_string(s) +
                                     " vs half-integer formula" + suffix));
    }

    return out;
}

std::vector<Check> checks_w4_spot_values() {
    std::vector<Check> out;
    const Ratio half(1, 2);
    const Ratio three_halves(3, 2);

    const auto spot = [&out](std::string name, const Ratio& value, const Ratio& expected) {
        out.push_back({std::move(name), to_fraction(value), to_fraction(expected),
                       value == expected});
    };

    spot("w4 nu=3/2 s=0 (verbatim)", odd_dim_w4(three_halves, 0, W4Convention::verbatim), 1);
    spot("w4 nu=3/2 s=2 (verbatim)", odd_dim_w4(three_halves, 2, W4Convention::verbatim), 4);
    spot("w4 nu=3/2 s=4 (verbatim)", odd_dim_w4(three_halves, 4, W4Convention::verbatim),
         Ratio(104, 5));
    spot("w4 nu=1/2 s=0 (corrected)", odd_dim_w4(half, 0, W4Convention::corrected), 1);
    spot("w4 nu=1/2 s=2 (corrected)", odd_dim_w4(half, 2, W4Convention::corrected), 4);
    spot("w4 nu=1/2 s=4 (corrected)", odd_dim_w4(half, 4, W4Convention::corrected), 24);

    for (const int s : {0, 2, 4, 6}) {
        spot("w4 nu=1/2 s=" + std::to_string(s) + ": verbatim is the negated corrected value",
             odd_dim_w4(half, s, W4Convention::verbatim),
             -odd_dim_w4(half, s, W4Convention::corrected));
    }
    for (const int s : {2, 4, 6}) {
        spot("w4 nu=3/2 s=" + std::to_string(s) + " vs matrix moment",
             odd_dim_w4(three_halves, s, W4Convention::verbatim),
             moment_even(three_halves, 4, s / 2));
        spot("w4 nu=1/2 s=" + std::to_string(s) + " (corrected) vs matrix moment",
             odd_dim_w4(half, s, W4Convention::corrected), moment_even(half, 4, s / 2));
    }
    return out;
}

std::vector<Check> checks_integrality() {
    std::vector<Check> out;
    for (const IntegralityCell& cell : integrality_report(2, 4, 6)) {
        out.push_back({"3*moment(2," + std::to_string(cell.m) + "," + std::to_string(cell.n) +
                           ") integral",
                       to_fraction(cell.scaled), "an integer", cell.integral});
    }
    return out;
}

std::vector<Check> checks_super_ballot_relation(int n_max) {
    std::vector<Check> out;
    for (int n = 0; n <= n_max; ++n) {
        const Ratio scaled = Ratio(3) * moment_even(2, 2, n);
        const Ratio ballot = super_ballot(n + 2);
        out.push_back({"3*moment(2,2," + std::to_string(n) + ") vs super_ballot(" +
                           std::to_string(n + 2) + ")",
                       to_fraction(scaled), to_fraction(ballot), scaled == ballot});
    }
    return out;
}

std::vector<Check> checks_super_ballot_equality(int n_max) {
    std::vector<Check> out;
    for (int n = 0; n <= n_max; ++n) {
        const Ratio ballot = super_ballot(n);
        const Ratio moment = moment_even(2, 2, n);
        out.push_back({"super_ballot(" + std::to_string(n) + ") vs moment(2,2," +
                           std::to_string(n) + ")",
                       to_fraction(ballot), to_fraction(moment), ballot == moment});
    }
    return out;
}

std::vector<Check> run_suite(const std::string& suite, const VerifyBounds& bounds) {
    const auto append = [](std::vector<Check>& into, std::vector<Check> from) {
        into.insert(into.end(), std::make_move_iterator(from.begin()),
                    std::make_move_iterator(from.end()));
    };

    const auto theorems = [&](std::vector<Check>& into) {
        const int m_max = resolved(bounds.m_max, 3);
        const int n_max = resolved(bounds.n_max, 4);
        append(into, checks_walks_g0(m_max, n_max));
        append(into, checks_walks_g1(std::min(m_max, 3), std::min(n_max, 5)));
        append(into, checks_sequence_prefixes());
        append(into, checks_isomorphism(std::min(m_max, 3), 4, std::min(n_max, 5)));
        append(into, checks_abelian(std::min(m_max, 3), std::min(n_max, 4)));
    };

    std::vector<Check> out;
    if (suite == "theorems") {
        theorems(out);
    } else if (suite == "lemma") {
        out = checks_word_census(std::min(resolved(bounds.n_max, 8), 9));
    } else if (suite == "bijection") {
        out = checks_bijection(std::min(resolved(bounds.n_max, 8), 9));
    } else if (suite == "cones") {
        out = checks_cones(resolved(bounds.len_max, 10));
    } else if (suite == "montecarlo") {
        out = checks_montecarlo(resolved_ll(bounds.mc_samples, 100000),
                                resolved(bounds.mc_seeds, 5));
    } else if (suite == "all") {
        theorems(out);
        append(out, checks_word_census(std::min(resolved(bounds.n_max, 8), 9)));
        append(out, checks_bijection(std::min(resolved(bounds.n_max, 8), 9)));
        append(out, checks_cones(resolved(bounds.len_max, 10)));
        append(out, checks_montecarlo(resolved_ll(bounds.mc_samples, 100000),
                                      resolved(bounds.mc_seeds, 5)));
        append(out, checks_w4_spot_values());
        append(out, checks_integrality());
        append(out, checks_super_ballot_relation(8));
    } else {
        throw std::invalid_argument("run_suite: unknown suite '" + suite + "'");
    }
    return out;
}

}  // namespace brickwalk
