#ifndef BRICKWALK_CONE_FORMULAS_HPP
#define BRICKWALK_CONE_FORMULAS_HPP

#include <string>

#include "brickwalk/exact.hpp"
#include "brickwalk/lattice_graphs.hpp"

namespace brickwalk {

// Closed counts of n-step walks from the origin on the planar cone families.
// Endpoints are addressed as (i, j) with i the horizontal (parity-gated)
// displacement and j the vertical one; every count is 0 when i + j + n is
// odd. The five constrained forms reject j < 0 (std::domain_error) because
// their reflection bookkeeping is defined for the upper-index range only.

// Full plane (brick_plane); any i and j.
Count h_pl(int i, int j, int n_steps);

// Horizontal half-plane j >= 0 (h_half_plane), by reflection:
// h_pl(i, j, n) - h_pl(i, j+2, n).
Count h_hhp(int i, int j, int n_steps);

// Vertical half-plane (v_half_plane), endpoint column i = 0 only.
Count h_vhp(int j, int n_steps);

// Reflected vertical half-plane (refl_v_half_plane), i = 0 only.
Count h_rvhp(int j, int n_steps);

// Quarter plane (quarter_plane), i = 0 only.
Count h_qp(int j, int n_steps);

// Reflected quarter plane (refl_quarter_plane), i = 0 only.
Count h_rqp(int j, int n_steps);

struct ConeCount {
    Count value;
    bool closed_form = false;
    std::string note;
};

// Count of n-step walks from the origin to the endpoint with horizontal
// displacement i and vertical displacement j on a cone family. Uses the
// matching closed form when one exists for that endpoint and otherwise falls
// back to exhaustive path counting (note says so). Throws
// std::invalid_argument for non-cone families and std::domain_error when the
// endpoint lies outside the family's domain.
ConeCount cone_count(const LatticeFamily& family, int i, int j, int n_steps);

}  // namespace brickwalk

#endif
