#ifndef BRICKWALK_RANDOM_FLIGHTS_HPP
#define BRICKWALK_RANDOM_FLIGHTS_HPP

#include <array>
#include <cstdint>
#include <vector>

namespace brickwalk {

// xoshiro256++ seeded through SplitMix64. The algorithm is fixed: identical
// seeds give identical streams on every platform, and golden Monte Carlo
// values depend on it staying unchanged.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    // Uniform in [0, 1) with 53 random bits.
    double next_double();

  private:
    std::array<std::uint64_t, 4> state_;
};

struct FlightConfig {
    int dimension = 2;
    int steps = 1;
    long long sample_count = 1;
    std::uint64_t seed = 0;
};

struct EstimateReport {
    double point_estimate = 0.0;
    double standard_error = 0.0;
    long long sample_count = 0;
};

// Uniform point on the unit sphere of the given dimension (>= 2): a uniform
// angle in dimension 2, a normalized Gaussian vector (polar method, the
// unused half of an odd draw discarded) in higher dimensions.
std::vector<double> sample_step(int dimension, Rng& rng);

// Monte Carlo estimate of the (2n)-th moment of the end-to-end distance of a
// flight of unit steps. Deterministic for a fixed (seed, sample_count):
// samples are processed in fixed-size chunks with per-chunk derived seeds
// and merged in chunk order, so the worker count never changes the result.
// n = 0 returns exactly 1 with zero error.
EstimateReport estimate_even_moment(const FlightConfig& config, int n);

// Monte Carlo estimate of the probability that the end-to-end distance is
// strictly below 1, with the same determinism guarantees.
EstimateReport estimate_prob_within_unit(int dimension, int steps, long long sample_count,
                                         std::uint64_t seed);

}  // namespace brickwalk

#endif
