// Acceptance gate: runs every advertised guarantee of the library at its
// stated bounds and prints one verdict line per criterion. Exits nonzero if
// any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "brickwalk/verify.hpp"

namespace {

using brickwalk::Check;

int g_failed_criteria = 0;

void run_criterion(int number, const char* label, double budget_seconds,
                   const std::function<std::vector<Check>()>& produce) {
    const auto begin = std::chrono::steady_clock::now();
    const std::vector<Check> checks = produce();
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();

    std::size_t failed = 0;
    for (const Check& check : checks) {
        if (!check.pass) {
            ++failed;
        }
    }
    const bool over_budget = budget_seconds > 0.0 && elapsed > budget_seconds;
    const bool pass = failed == 0 && !over_budget;

    if (pass) {
        std::printf("criterion %2d: PASS  %-58s (%zu checks, %.1fs)\n", number, label,
                    checks.size(), elapsed);
    } else {
        std::printf("criterion %2d: FAIL  %-58s (%zu of %zu checks failed, %.1fs)\n", number,
                    label, failed, checks.size(), elapsed);
        for (const Check& check : checks) {
            if (!check.pass) {
                std::printf("    FAIL %s\n         lhs: %s\n         rhs: %s\n",
                            check.name.c_str(), check.lhs.c_str(), check.rhs.c_str());
            }
        }
        if (over_budget) {
            std::printf("    FAIL runtime %.1fs exceeds the %.0fs budget\n", elapsed,
                        budget_seconds);
        }
        ++g_failed_criteria;
    }
    std::fflush(stdout);
}

}  // namespace

int main() {
    using namespace brickwalk;

    run_criterion(1, "closed brick-lattice walks match the flat moments", 60.0,
                  [] { return checks_walks_g0(4, 6); });
    run_criterion(2, "closed orthant walks match the nu=1 moments", 30.0,
                  [] { return checks_walks_g1(3, 5); });
    run_criterion(3, "named sequence prefixes computed two independent ways", 0.0,
                  [] { return checks_sequence_prefixes(); });
    run_criterion(4, "positional word census matches the Narayana numbers", 60.0,
                  [] { return checks_word_census(8); });
    run_criterion(5, "flat-step rewrite is a verified bijection", 0.0,
                  [] { return checks_bijection(8); });
    run_criterion(6, "planar cone closed forms match exhaustive counts", 60.0,
                  [] { return checks_cones(10); });
    run_criterion(7, "abelian squares match the flat moments", 0.0,
                  [] { return checks_abelian(3, 4); });
    run_criterion(8, "coordinate-difference map is a lattice isomorphism", 0.0,
                  [] { return checks_isomorphism(3, 4, 5); });
    run_criterion(9, "Monte Carlo estimates land within four standard errors", 300.0,
                  [] { return checks_montecarlo(1000000, 20); });
    run_criterion(10, "fourth-moment spot values, ballot equality, integrality", 0.0, [] {
        std::vector<Check> checks = checks_w4_spot_values();
        const std::vector<Check> equality = checks_super_ballot_equality(8);
        checks.insert(checks.end(), equality.begin(), equality.end());
        const std::vector<Check> cells = checks_integrality();
        checks.insert(checks.end(), cells.begin(), cells.end());
        return checks;
    });

    if (g_failed_criteria == 0) {
        std::printf("all 10 criteria passed\n");
        return 0;
    }
    std::printf("%d of 10 criteria failed\n", g_failed_criteria);
    return 1;
}
