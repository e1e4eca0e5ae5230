#ifndef BRICKWALK_LATTICE_GRAPHS_HPP
#define BRICKWALK_LATTICE_GRAPHS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "brickwalk/exact.hpp"

namespace brickwalk {

// A lattice point; its length must match the owning family's dimension.
using Vertex = std::vector<int>;

struct VertexHash {
    std::size_t operator()(const Vertex& v) const noexcept;
};

// An infinite lattice graph given by a neighbor rule, optionally restricted
// to a half-plane or quadrant (restriction drops the violating neighbors).
class LatticeFamily {
  public:
    enum class Kind {
        g0,
        g1,
        ghat1,
        ve,
        brick_plane,
        h_half_plane,
        v_half_plane,
        refl_v_half_plane,
        quarter_plane,
        refl_quarter_plane,
    };

    // Brick lattice on Z^m: +-e_1 always; +e_k when the coordinate sum is
    // even and -e_k when it is odd (k >= 2).
    static LatticeFamily g0(int m);

    // Nonnegative-orthant walk graph on Z^m_{>=0}: +e_1 always; -e_1 when
    // x_1 > 0; +e_k when x_1+...+x_k is odd; -e_k when that prefix sum is
    // even and x_k > 0 (k >= 2).
    static LatticeFamily g1(int m);

    // The g1 rule with every positivity restriction removed (all of Z^m).
    static LatticeFamily ghat1(int m);

    // Vertices of Z^dim with coordinate sum 0 or 1; neighbors are the
    // L1-distance-1 points whose coordinate sum also stays in {0, 1}.
    static LatticeFamily ve(int dim);

    // Planar cones (m = 2). x_1 is the vertical axis (always steppable) and
    // x_2 the horizontal, parity-gated axis.
    static LatticeFamily brick_plane();         // g0(2)
    static LatticeFamily h_half_plane();        // g0(2) with x_1 >= 0
    static LatticeFamily v_half_plane();        // g0(2) with x_2 >= 0
    static LatticeFamily refl_v_half_plane();   // ghat1(2) with x_2 >= 0
    static LatticeFamily quarter_plane();       // g0(2) with x_1, x_2 >= 0
    static LatticeFamily refl_quarter_plane();  // g1(2)

    // Accepts tags as produced by name(): "G0_2", "G1_1", "GHat1_3", "VE_3",
    // "BrickPlane", "HHalfPlane", "VHalfPlane", "ReflVHalfPlane",
    // "QuarterPlane", "ReflQuarterPlane". Throws std::invalid_argument.
    static LatticeFamily parse(const std::string& tag);

    Kind kind() const { return kind_; }
    int dimension() const { return dimension_; }
    std::string name() const;
    Vertex origin() const { return Vertex(static_cast<std::size_t>(dimension_), 0); }

    // True iff v has the right dimension and satisfies the family's domain
    // constraint.
    bool contains(const Vertex& v) const;

    // Adjacent vertices of v. Throws std::invalid_argument on dimension
    // mismatch and std::domain_error when v is outside the domain.
    std::vector<Vertex> neighbors(const Vertex& v) const;

  private:
    LatticeFamily(Kind kind, int dimension);

    Kind kind_;
    int dimension_;
};

// Exact number of walks of exactly `length` edge steps from start to end,
// by frontier dynamic programming. Returns 0 when end is unreachable.
Count count_paths(const LatticeFamily& family, const Vertex& start, const Vertex& end,
                  int length);

// (x_0, x_1, ..., x_m) -> (x_1 - x_0, x_2, ..., x_m); the induced vertex map
// is a graph isomorphism from ve(m+1) onto g0(m). Requires coordinate sum
// 0 or 1 (std::domain_error otherwise).
Vertex psi(const Vertex& v);

// Right inverse of psi: with s the coordinate sum of w, the first coordinate
// is -s/2 when s is even and (1-s)/2 when s is odd; the image has coordinate
// sum 0 (even s) or 1 (odd s).
Vertex psi_inverse(const Vertex& w);

}  // namespace brickwalk

#endif
