#ifndef BRICKWALK_WORD_MODELS_HPP
#define BRICKWALK_WORD_MODELS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "brickwalk/exact.hpp"
#include "brickwalk/lattice_graphs.hpp"

namespace brickwalk {

// One letter of a step word. The axis index is meaningful only for right
// and left steps, where it must be at least 2.
struct Step {
    enum class Kind { up, down, flat, right, left };

    Kind kind = Kind::flat;
    int axis = 0;

    static Step u() { return {Kind::up, 0}; }
    static Step d() { return {Kind::down, 0}; }
    static Step h() { return {Kind::flat, 0}; }
    static Step r(int axis);
    static Step l(int axis);

    friend bool operator==(const Step&, const Step&) = default;
};

// A finite word of steps; positions are 1-indexed throughout.
using StepWord = std::vector<Step>;

// ASCII form: U, D, H, and R2/L2/R3/L3/... for indexed steps.
std::string format_word(const StepWord& word);

// Inverse of format_word; throws std::invalid_argument on malformed text.
StepWord parse_word(const std::string& text);

// Thrown by word_to_path when a letter does not realize an edge; carries the
// 1-indexed position of the offending letter.
class IllegalStepError : public std::domain_error {
  public:
    IllegalStepError(int position, const std::string& reason);
    int position() const { return position_; }

  private:
    int position_;
};

// All {U,D,H} words of length n with exactly r U's, all at odd positions,
// and exactly l D's, all at even positions; lexicographic under U < D < H.
std::vector<StepWord> enumerate_p(int n, int r, int l);

// The subset of enumerate_p(n, r, l) whose every prefix has #U >= #D, in the
// same order.
std::vector<StepWord> enumerate_p_hat(int n, int r, int l);

// True iff the word is a {U,D} excursion: every prefix has #U >= #D and the
// totals are equal. Throws std::invalid_argument on other letters.
bool is_dyck(const StepWord& word);

// True iff the word is a {U,D,H} excursion under the same prefix rule.
// Throws std::invalid_argument on other letters.
bool is_motzkin(const StepWord& word);

// Number of adjacent UD pairs.
int peak_count(const StepWord& word);

// Number of strings xy of length 2n over an m-letter alphabet where y is an
// anagram of x, by exhaustive enumeration. Guarded by m^(2n) <= 10^8
// (LimitError beyond that).
Count count_abelian_squares(int m, int n);

// Vertex sequence from the origin with U -> +e_1, D -> -e_1, R_k -> +e_k,
// L_k -> -e_k. Every step must realize an edge of the family; otherwise an
// IllegalStepError reports the offending 1-indexed position.
std::vector<Vertex> word_to_path(const StepWord& word, const LatticeFamily& family);

}  // namespace brickwalk

#endif
