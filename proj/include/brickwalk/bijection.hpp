#ifndef BRICKWALK_BIJECTION_HPP
#define BRICKWALK_BIJECTION_HPP

#include <cstdint>
#include <vector>

#include "brickwalk/word_models.hpp"

namespace brickwalk {

// A Motzkin word with the two positions (1-indexed) of the U and D letters
// added by preliminary_stage.
struct MarkedWord {
    StepWord steps;
    int inserted_u = 0;
    int inserted_d = 0;
};

// A maximal baseline-to-baseline piece U-alpha-D of a Motzkin word.
// special_parity marks the unique segment holding both inserted letters; its
// boundary horizontal runs have even length, all other segments odd.
struct PrimeSegment {
    StepWord word;
    bool special_parity = false;
};

// Inserts U immediately before the first baseline H (and D at the end), or
// appends UD when no baseline H exists. The input must be a Motzkin word
// with every U at an odd and every D at an even position and equal U/D
// totals (std::invalid_argument otherwise). The result has no baseline H.
MarkedWord preliminary_stage(const StepWord& word);

// Splits a marked word (no baseline H) at its returns to the baseline. The
// segment carrying the inserted pair gets special_parity = true; it is
// always the last one.
std::vector<PrimeSegment> prime_decompose(const MarkedWord& word);

// Rewrites one prime segment into a Dyck factor of the same length:
// U H^(2l) D becomes U^(l+1) D^(l+1); otherwise the horizontal runs are
// replaced by balanced U/D blocks and the inner primes are rewritten
// recursively, left to right. Throws std::invalid_argument when the
// boundary-run parities contradict special_parity.
StepWord transform_prime(const PrimeSegment& segment);

// Full map: preliminary stage, prime decomposition, and per-segment
// rewriting. For an admissible input of length 2n with k U's the output is
// a Dyck word of length 2n+2 with k+1 peaks.
StepWord motzkin_to_dyck(const StepWord& word);

// As above, also reporting how many prime rewrites (recursive calls
// included) were performed; that count equals k+1.
StepWord motzkin_to_dyck(const StepWord& word, int& prime_rewrites);

struct BijectivityReport {
    std::int64_t domain_size = 0;
    std::int64_t image_size = 0;
    bool all_valid = false;
    bool narayana_match = false;
};

// Maps every admissible word of length 2n with k U's and k D's, checking
// that each image is a Dyck word of length 2n+2 with k+1 peaks, that the map
// is injective, and that the image size equals both narayana(n+1, k+1) and
// the number of Dyck words of length 2n+2 with k+1 peaks. Requires n <= 9.
BijectivityReport verify_bijectivity(int n, int k);

}  // namespace brickwalk

#endif
