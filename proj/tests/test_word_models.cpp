#include "doctest.h"

#include <stdexcept>
#include <string>
#include <vector>

#include "brickwalk/exact.hpp"
#include "brickwalk/lattice_graphs.hpp"
#include "brickwalk/moment_matrix.hpp"
#include "brickwalk/word_models.hpp"

using brickwalk::Count;
using brickwalk::StepWord;

namespace {

std::vector<std::string> formatted(const std::vector<StepWord>& words) {
    std::vector<std::string> out;
    for (const StepWord& word : words) {
        out.push_back(brickwalk::format_word(word));
    }
    return out;
}

}  // namespace

TEST_CASE("step word parsing and formatting") {
    CHECK(brickwalk::format_word(brickwalk::parse_word("UDHH")) == "UDHH");
    CHECK(brickwalk::format_word(brickwalk::parse_word("")) == "");
    CHECK(brickwalk::format_word(brickwalk::parse_word("UR2L3D")) == "UR2L3D");
    CHECK(brickwalk::parse_word("R12").size() == 1);
    CHECK_THROWS_AS(brickwalk::parse_word("X"), std::invalid_argument);
    CHECK_THROWS_AS(brickwalk::parse_word("R"), std::invalid_argument);
    CHECK_THROWS_AS(brickwalk::parse_word("R1"), std::invalid_argument);
    CHECK_THROWS_AS(brickwalk::parse_word("u"), std::invalid_argument);
    CHECK_THROWS_AS(brickwalk::Step::r(1), std::invalid_argument);
    CHECK_THROWS_AS(brickwalk::Step::l(0), std::invalid_argument);
}

TEST_CASE("position-constrained word enumeration sizes") {
    // Even length 2n: C(n,r)*C(n,l); odd length 2n+1: C(n+1,r)*C(n,l).
    for (int n = 0; n <= 5; ++n) {
        for (int r = 0; r <= n + 1; ++r) {
            for (int l = 0; l <= n + 1; ++l) {
                const Count even_expected =
                    brickwalk::binomial(n, r) * brickwalk::binomial(n, l);
                CHECK(Count(brickwalk::enumerate_p(2 * n, r, l).size()) == even_expected);
                const Count odd_expected =
                    brickwalk::binomial(n + 1, r) * brickwalk::binomial(n, l);
                CHECK(Count(brickwalk::enumerate_p(2 * n + 1, r, l).size()) == odd_expected);
            }
        }
    }
    CHECK_THROWS_AS(brickwalk::enumerate_p(-1, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(brickwalk::enumerate_p(4, -1, 0), std::invalid_argument);
}

TEST_CASE("length-four words in lexicographic order") {
    CHECK(formatted(brickwalk::enumerate_p(4, 1, 1)) ==
          std::vector<std::string>{"UDHH", "UHHD", "HDUH", "HHUD"});
    CHECK(formatted(brickwalk::enumerate_p_hat(4, 1, 1)) ==
          std::vector<std::string>{"UDHH", "UHHD", "HHUD"});
    CHECK(formatted(brickwalk::enumerate_p(0, 0, 0)) == std::vector<std::string>{""});
}

TEST_CASE("letters sit on the right parities") {
    for (const StepWord& word : brickwalk::enumerate_p(7, 2, 2)) {
        for (std::size_t pos = 1; pos <= word.size(); ++pos) {
            if (word[pos - 1] == brickwalk::Step::u()) {
                CHECK(pos % 2 == 1);
            }
            if (word[pos - 1] == brickwalk::Step::d()) {
                CHECK(pos % 2 == 0);
            }
        }
    }
}

TEST_CASE("prefix-positive subset matches narayana counts") {
    for (int n = 0; n <= 6; ++n) {
        for (int k = 0; k <= n; ++k) {
            CHECK(Count(brickwalk::enumerate_p_hat(2 * n, k, k).size()) ==
                  brickwalk::narayana(n + 1, k + 1));
        }
    }
    for (const StepWord& word : brickwalk::enumerate_p_hat(8, 2, 2)) {
        int height = 0;
        for (const brickwalk::Step& step : word) {
            if (step == brickwalk::Step::u()) {
                ++height;
            } else if (step == brickwalk::Step::d()) {
                --height;
            }
            CHECK(height >= 0);
        }
    }
}

TEST_CASE("excursion predicates and peak counting") {
    CHECK(brickwalk::is_dyck(brickwalk::parse_word("UUDD")));
    CHECK(brickwalk::is_dyck(brickwalk::parse_word("")));
    CHECK_FALSE(brickwalk::is_dyck(brickwalk::parse_word("UDU")));
    CHECK_FALSE(brickwalk::is_dyck(brickwalk::parse_word("DU")));
    CHECK_THROWS_AS(brickwalk::is_dyck(brickwalk::parse_word("UHD")), std::invalid_argument);

    CHECK(brickwalk::is_motzkin(brickwalk::parse_word("UHD")));
    CHECK(brickwalk::is_motzkin(brickwalk::parse_word("HH")));
    CHECK_FALSE(brickwalk::is_motzkin(brickwalk::parse_word("UDD")));

    CHECK(brickwalk::peak_count(brickwalk::parse_word("UDUD")) == 2);
    CHECK(brickwalk::peak_count(brickwalk::parse_word("UUDD")) == 1);
    CHECK(brickwalk::peak_count(brickwalk::parse_word("")) == 0);

    // Dyck words of length 2i with j peaks follow the narayana triangle and
    // unconstrained balanced words follow squared binomials.
    for (int i = 1; i <= 5; ++i) {
        for (int j = 1; j <= i; ++j) {
            Count dyck_count = 0;
            Count bridge_count = 0;
            for (long mask = 0; mask < (1L << (2 * i)); ++mask) {
                StepWord word;
                int ones = 0;
                for (int bit = 0; bit < 2 * i; ++bit) {
                    const bool up = ((mask >> bit) & 1) != 0;
                    ones += up ? 1 : 0;
                    word.push_back(up ? brickwalk::Step::u() : brickwalk::Step::d());
                }
                if (ones != i || brickwalk::peak_count(word) != j) {
                    continue;
                }
                ++bridge_count;
                if (brickwalk::is_dyck(word)) {
                    ++dyck_count;
                }
            }
            CHECK(dyck_count == brickwalk::narayana(i, j));
            const Count expected_bridges =
                brickwalk::binomial(i, j) * brickwalk::binomial(i, j);
            CHECK(bridge_count == expected_bridges);
        }
    }
}

TEST_CASE("abelian squares agree with the plane moments") {
    for (int m = 1; m <= 3; ++m) {
        for (int n = 0; n <= 4; ++n) {
            CHECK(brickwalk::Ratio(brickwalk::count_abelian_squares(m, n)) ==
                  brickwalk::moment_even(brickwalk::Ratio(0), m, n));
        }
    }
    CHECK(brickwalk::count_abelian_squares(2, 3) == 20);
    CHECK(brickwalk::count_abelian_squares(4, 0) == 1);
    CHECK_THROWS_AS(brickwalk::count_abelian_squares(10, 5), brickwalk::LimitError);
    CHECK_THROWS_AS(brickwalk::count_abelian_squares(0, 1), std::invalid_argument);
}

TEST_CASE("words trace walks in lattice families") {
    const brickwalk::LatticeFamily dyck_line = brickwalk::LatticeFamily::g1(1);
    const auto path = brickwalk::word_to_path(brickwalk::parse_word("UUDD"), dyck_line);
    CHECK(path.size() == 5);
    CHECK(path.front() == brickwalk::Vertex{0});
    CHECK(path[2] == brickwalk::Vertex{2});
    CHECK(path.back() == brickwalk::Vertex{0});

    CHECK_THROWS_AS(brickwalk::word_to_path(brickwalk::parse_word("DU"), dyck_line),
                    brickwalk::IllegalStepError);
    try {
        brickwalk::word_to_path(brickwalk::parse_word("UDD"), dyck_line);
        CHECK(false);
    } catch (const brickwalk::IllegalStepError& error) {
        CHECK(error.position() == 3);
    }

    const brickwalk::LatticeFamily wall = brickwalk::LatticeFamily::g0(2);
    const auto plane_path = brickwalk::word_to_path(brickwalk::parse_word("UL2D"), wall);
    CHECK(plane_path.size() == 4);
    CHECK(plane_path.back() == brickwalk::Vertex{0, -1});
    CHECK_THROWS_AS(brickwalk::word_to_path(brickwalk::parse_word("L2"), wall),
                    brickwalk::IllegalStepError);
    CHECK_THROWS_AS(brickwalk::word_to_path(brickwalk::parse_word("H"), wall),
                    brickwalk::IllegalStepError);
    CHECK_THROWS_AS(brickwalk::word_to_path(brickwalk::parse_word("R3"), wall),
                    brickwalk::IllegalStepError);
}
