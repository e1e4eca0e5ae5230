#include "doctest.h"

#include <stdexcept>

#include "brickwalk/cone_formulas.hpp"
#include "brickwalk/exact.hpp"
#include "brickwalk/lattice_graphs.hpp"
#include "brickwalk/moment_matrix.hpp"

using brickwalk::Count;
using brickwalk::LatticeFamily;
using brickwalk::Ratio;
using brickwalk::Vertex;

TEST_CASE("full-plane closed form pins and symmetry") {
    CHECK(brickwalk::h_pl(0, 0, 0) == 1);
    CHECK(brickwalk::h_pl(0, 0, 2) == 3);
    CHECK(brickwalk::h_pl(0, 0, 4) == 15);
    CHECK(brickwalk::h_pl(1, 0, 1) == 1);
    CHECK(brickwalk::h_pl(-1, 0, 1) == 0);
    CHECK(brickwalk::h_pl(0, 1, 1) == 1);
    CHECK(brickwalk::h_pl(0, -1, 1) == 1);

    // Parity vanishing: i + j + n odd forces zero.
    for (int i = -2; i <= 2; ++i) {
        for (int j = -2; j <= 2; ++j) {
            for (int n = 0; n <= 5; ++n) {
                if ((i + j + n) % 2 != 0) {
                    CHECK(brickwalk::h_pl(i, j, n) == 0);
                }
            }
        }
    }

    // The vertical reflection is an automorphism, so the count is symmetric
    // in j; the horizontal direction is parity-gated and genuinely is not.
    for (int i = -3; i <= 3; ++i) {
        for (int j = -3; j <= 3; ++j) {
            for (int n = 0; n <= 6; ++n) {
                CHECK(brickwalk::h_pl(i, j, n) == brickwalk::h_pl(i, -j, n));
            }
        }
    }
    CHECK(brickwalk::h_pl(1, 0, 1) != brickwalk::h_pl(-1, 0, 1));

    CHECK_THROWS_AS(brickwalk::h_pl(0, 0, -1), std::invalid_argument);
}

TEST_CASE("full-plane closed form equals enumeration, negative endpoints included") {
    const LatticeFamily plane = LatticeFamily::brick_plane();
    for (int i = -2; i <= 2; ++i) {
        for (int j = -3; j <= 3; ++j) {
            for (int n = 0; n <= 6; ++n) {
                CHECK(brickwalk::h_pl(i, j, n) ==
                      brickwalk::count_paths(plane, {0, 0}, {j, i}, n));
            }
        }
    }
}

TEST_CASE("upper half-plane closed form") {
    CHECK(brickwalk::h_hhp(0, 0, 0) == 1);
    CHECK(brickwalk::h_hhp(0, 0, 2) == 2);
    const LatticeFamily half = LatticeFamily::h_half_plane();
    for (int i = -2; i <= 2; ++i) {
        for (int j = 0; j <= 3; ++j) {
            for (int n = 0; n <= 6; ++n) {
                CHECK(brickwalk::h_hhp(i, j, n) ==
                      brickwalk::count_paths(half, {0, 0}, {j, i}, n));
            }
        }
    }
    CHECK_THROWS_AS(brickwalk::h_hhp(0, -1, 2), std::domain_error);
    CHECK_THROWS_AS(brickwalk::h_hhp(0, 0, -2), std::invalid_argument);
}

TEST_CASE("vertical half-plane closed forms, plain and reflected") {
    CHECK(brickwalk::h_vhp(0, 2) == 3);
    CHECK(brickwalk::h_vhp(0, 4) == 13);
    CHECK(brickwalk::h_vhp(1, 1) == 1);
    CHECK(brickwalk::h_vhp(2, 2) == 1);
    CHECK(brickwalk::h_vhp(2, 4) == 7);
    CHECK(brickwalk::h_vhp(1, 2) == 0);

    CHECK(brickwalk::h_rvhp(0, 0) == 1);
    CHECK(brickwalk::h_rvhp(2, 0) == 0);
    CHECK(brickwalk::h_rvhp(0, 2) == 2);
    CHECK(brickwalk::h_rvhp(0, 4) == 8);

    const LatticeFamily plain = LatticeFamily::v_half_plane();
    const LatticeFamily reflected = LatticeFamily::refl_v_half_plane();
    for (int j = 0; j <= 5; ++j) {
        for (int n = 0; n <= 8; ++n) {
            CHECK(brickwalk::h_vhp(j, n) ==
                  brickwalk::count_paths(plain, {0, 0}, {j, 0}, n));
            CHECK(brickwalk::h_rvhp(j, n) ==
                  brickwalk::count_paths(reflected, {0, 0}, {j, 0}, n));
        }
    }

    // Odd lengths coincide across the two graphs by path inversion.
    for (int j = 0; j <= 3; ++j) {
        for (int n = 0; n <= 4; ++n) {
            CHECK(brickwalk::h_rvhp(2 * j + 1, 2 * n + 1) ==
                  brickwalk::h_vhp(2 * j + 1, 2 * n + 1));
        }
    }

    CHECK_THROWS_AS(brickwalk::h_vhp(-1, 1), std::domain_error);
    CHECK_THROWS_AS(brickwalk::h_rvhp(-2, 2), std::domain_error);
}

TEST_CASE("quarter-plane closed forms, plain and reflected") {
    CHECK(brickwalk::h_qp(0, 0) == 1);
    CHECK(brickwalk::h_qp(0, 2) == 2);
    CHECK(brickwalk::h_qp(0, 4) == 6);
    CHECK(brickwalk::h_rqp(0, 2) == 1);
    CHECK(brickwalk::h_rqp(0, 4) == 3);
    CHECK(brickwalk::h_rqp(0, 6) == 12);

    const LatticeFamily plain = LatticeFamily::quarter_plane();
    const LatticeFamily reflected = LatticeFamily::refl_quarter_plane();
    for (int j = 0; j <= 5; ++j) {
        for (int n = 0; n <= 8; ++n) {
            CHECK(brickwalk::h_qp(j, n) == brickwalk::count_paths(plain, {0, 0}, {j, 0}, n));
            CHECK(brickwalk::h_rqp(j, n) ==
                  brickwalk::count_paths(reflected, {0, 0}, {j, 0}, n));
            CHECK(brickwalk::h_qp(j, n) ==
                  brickwalk::h_vhp(j, n) - brickwalk::h_vhp(j + 2, n));
            CHECK(brickwalk::h_rqp(j, n) ==
                  brickwalk::h_rvhp(j, n) - brickwalk::h_rvhp(j + 2, n));
        }
    }

    // Closed reflected-quarter-plane walks are the dimension-four moments.
    for (int n = 0; n <= 4; ++n) {
        CHECK(Ratio(brickwalk::h_rqp(0, 2 * n + 2)) ==
              brickwalk::moment_even(Ratio(1), 3, n));
    }

    CHECK_THROWS_AS(brickwalk::h_qp(-1, 1), std::domain_error);
    CHECK_THROWS_AS(brickwalk::h_rqp(-1, 1), std::domain_error);
}

TEST_CASE("cone dispatch prefers closed forms and falls back to enumeration") {
    const brickwalk::ConeCount closed =
        brickwalk::cone_count(LatticeFamily::brick_plane(), 1, 2, 3);
    CHECK(closed.closed_form);
    CHECK(closed.note.empty());
    CHECK(closed.value == 2);

    const brickwalk::ConeCount g0_alias = brickwalk::cone_count(LatticeFamily::g0(2), 0, 0, 4);
    CHECK(g0_alias.closed_form);
    CHECK(g0_alias.value == 15);

    const brickwalk::ConeCount fallback =
        brickwalk::cone_count(LatticeFamily::v_half_plane(), 1, 1, 2);
    CHECK_FALSE(fallback.closed_form);
    CHECK_FALSE(fallback.note.empty());
    CHECK(fallback.value == 1);
    CHECK(fallback.value ==
          brickwalk::count_paths(LatticeFamily::v_half_plane(), {0, 0}, {1, 1}, 2));

    const brickwalk::ConeCount qp_off_axis =
        brickwalk::cone_count(LatticeFamily::quarter_plane(), 1, 1, 2);
    CHECK_FALSE(qp_off_axis.closed_form);
    CHECK(qp_off_axis.value == 1);
    CHECK(qp_off_axis.value ==
          brickwalk::count_paths(LatticeFamily::quarter_plane(), {0, 0}, {1, 1}, 2));

    CHECK_THROWS_AS(brickwalk::cone_count(LatticeFamily::g0(3), 0, 0, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(brickwalk::cone_count(LatticeFamily::ghat1(2), 0, 0, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(brickwalk::cone_count(LatticeFamily::quarter_plane(), 0, -1, 2),
                    std::domain_error);
}
