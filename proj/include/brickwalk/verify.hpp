#ifndef BRICKWALK_VERIFY_HPP
#define BRICKWALK_VERIFY_HPP

#include <string>
#include <vector>

namespace brickwalk {

// One verified equality (or aggregated grid of equalities). lhs and rhs
// render both sides; on an aggregated failure they name the first
// counterexample.
struct Check {
    std::string name;
    std::string lhs;
    std::string rhs;
    bool pass = false;
};

// Bounds for the check suites; -1 means "use that suite's default".
struct VerifyBounds {
    int m_max = -1;
    int n_max = -1;
    int len_max = -1;
    long long mc_samples = -1;
    int mc_seeds = -1;
};

// Closed brick-lattice walks vs the flat-case moment recurrence.
std::vector<Check> checks_walks_g0(int m_max, int n_max);

// Closed orthant walks vs the first-excursion moment recurrence.
std::vector<Check> checks_walks_g1(int m_max, int n_max);

// Named integer-sequence prefixes computed two independent ways.
std::vector<Check> checks_sequence_prefixes();

// psi as a neighborhood bijection plus matching closed-walk counts.
std::vector<Check> checks_isomorphism(int m_max, int radius, int n_max);

// Abelian-square counts vs the flat-case moments.
std::vector<Check> checks_abelian(int m_max, int n_max);

// Positional word-set sizes vs Narayana numbers.
std::vector<Check> checks_word_census(int n_max);

// Exhaustive bijectivity of the Motzkin-to-Dyck rewriting.
std::vector<Check> checks_bijection(int n_max);

// Closed cone formulas vs exhaustive counts, parity vanishing, reflection
// differences, and the odd-length inversion identity.
std::vector<Check> checks_cones(int len_max);

// Monte Carlo estimates vs exact values within 4 standard errors, allowing
// one excursion across the seed set.
std::vector<Check> checks_montecarlo(long long samples, int seeds);

// Spot values of the half-integer fourth-power moment formulas.
std::vector<Check> checks_w4_spot_values();

// Integrality of 3 * moment(nu=2) over a small grid.
std::vector<Check> checks_integrality();

// The shifted identity 3 * moment_even(2, 2, n) = super_ballot(n + 2).
std::vector<Check> checks_super_ballot_relation(int n_max);

// The unshifted claim super_ballot(n) = moment_even(2, 2, n); reported
// verbatim so a mismatch is visible rather than hidden.
std::vector<Check> checks_super_ballot_equality(int n_max);

// Suites: "theorems", "lemma", "bijection", "cones", "montecarlo", "all".
// Throws std::invalid_argument on an unknown suite name.
std::vector<Check> run_suite(const std::string& suite, const VerifyBounds& bounds);

}  // namespace brickwalk

#endif
