#include "brickwalk/random_flights.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

namespace brickwalk {

namespace {

constexpr long long kChunkSize = 65536;
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t x) {
    std::uint64_t z = x + kGolden;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

int worker_count() {
    if (const char* env = std::getenv("BRICKWALK_WORKERS")) {
        char* end = nullptr;
        const long parsed = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && parsed >= 1) {
            return static_cast<int>(parsed > 64 ? 64 : parsed);
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    if (hw < 1) {
        return 1;
    }
    return static_cast<int>(hw > 64 ? 64 : hw);
}

struct KahanSum {
    double sum = 0.0;
    double compensation = 0.0;

    void add(double x) {
        const double y = x - compensation;
        const double t = sum + y;
        compensation = (t - sum) - y;
        sum = t;
    }
};

// Adds one uniformly random unit vector into accumulator[0..dimension).
void add_random_unit(int dimension, Rng& rng, double* accumulator) {
    if (dimension == 2) {
        const double angle = 2.0 * std::numbers::pi * rng.next_double();
        accumulator[0] += std::cos(angle);
        accumulator[1] += std::sin(angle);
        return;
    }
    constexpr int kStackDim = 32;
    double stack_buf[kStackDim];
    std::vector<double> heap_buf;
    double* direction = stack_buf;
    if (dimension > kStackDim) {
        heap_buf.resize(static_cast<std::size_t>(dimension));
        direction = heap_buf.data();
    }

    double gauss[2];
    double norm_sq = 0.0;
    do {
        norm_sq = 0.0;
        int filled = 0;
        while (filled < dimension) {
            double u = 0.0;
            double v = 0.0;
            double s = 0.0;
            do {
                u = 2.0 * rng.next_double() - 1.0;
                v = 2.0 * rng.next_double() - 1.0;
                s = u * u + v * v;
            } while (s >= 1.0 || s == 0.0);
            const double factor = std::sqrt(-2.0 * std::log(s) / s);
            gauss[0] = u * factor;
            gauss[1] = v * factor;
            for (int g = 0; g < 2 && filled < dimension; ++g) {
                direction[filled++] = gauss[g];
            }
        }
        for (int c = 0; c < dimension; ++c) {
            norm_sq += direction[c] * direction[c];
        }
    } while (norm_sq < 1e-300);
    const double inv_norm = 1.0 / std::sqrt(norm_sq);
    for (int c = 0; c < dimension; ++c) {
        accumulator[c] += direction[c] * inv_norm;
    }
}

// Runs the chunked, deterministically merged Monte Carlo loop. value_of maps
// the squared end-to-end distance of one flight to the sampled value.
template <typename F>
EstimateReport run_flights(int dimension, int steps, long long sample_count, std::uint64_t seed,
                           F&& value_of) {
    if (dimension < 2) {
        throw std::invalid_argument("random flights: dimension must be at least 2");
    }
    if (steps < 1) {
        throw std::invalid_argument("random flights: steps must be at least 1");
    }
    if (sample_count < 1) {
        throw std::invalid_argument("random flights: sample count must be at least 1");
    }

    const long long chunks = (sample_count + kChunkSize - 1) / kChunkSize;
    std::vector<std::array<double, 2>> partial(static_cast<std::size_t>(chunks));

    std::atomic<long long> next_chunk{0};
    const auto work = [&] {
        std::vector<double> position(static_cast<std::size_t>(dimension));
        for (;;) {
            const long long chunk = next_chunk.fetch_add(1);
            if (chunk >= chunks) {
                return;
            }
            const long long begin = chunk * kChunkSize;
            const long long count = std::min(kChunkSize, sample_count - begin);
            Rng rng(mix64(seed ^ mix64(static_cast<std::uint64_t>(chunk) + 1)));
            KahanSum values;
            KahanSum squares;
            for (long long s = 0; s < count; ++s) {
                std::fill(position.begin(), position.end(), 0.0);
                for (int step = 0; step < steps; ++step) {
                    add_random_unit(dimension, rng, position.data());
                }
                double distance_sq = 0.0;
                for (double c : position) {
                    distance_sq += c * c;
                }
                const double value = value_of(distance_sq);
                values.add(value);
                squares.add(value * value);
            }
            partial[static_cast<std::size_t>(chunk)] = {values.sum, squares.sum};
        }
    };

    const int workers = static_cast<int>(
        std::min<long long>(worker_count(), chunks));
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
        for (auto& thread : pool) {
            thread.join();
        }
    }

    KahanSum values;
    KahanSum squares;
    for (const auto& p : partial) {
        values.add(p[0]);
        squares.add(p[1]);
    }

    EstimateReport report;
    report.sample_count = sample_count;
    const double n = static_cast<double>(sample_count);
    report.point_estimate = values.sum / n;
    if (sample_count > 1) {
        double variance = (squares.sum - values.sum * values.sum / n) / (n - 1.0);
        if (variance < 0.0) {
            variance = 0.0;
        }
        report.standard_error = std::sqrt(variance / n);
    }
    return report;
}

}  // namespace

Rng::Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) {
        sm += kGolden;
        std::uint64_t z = sm;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        word = z ^ (z >> 31);
    }
    if (state_[0] == 0 && state_[1] == 0 && state_[2] == 0 && state_[3] == 0) {
        state_[0] = kGolden;
    }
}

std::uint64_t Rng::next_u64() {
    const std::uint64_t result = std::rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = std::rotl(state_[3], 45);
    return result;
}

double Rng::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::vector<double> sample_step(int dimension, Rng& rng) {
    if (dimension < 2) {
        throw std::invalid_argument("sample_step: dimension must be at least 2");
    }
    std::vector<double> out(static_cast<std::size_t>(dimension), 0.0);
    add_random_unit(dimension, rng, out.data());
    return out;
}

EstimateReport estimate_even_moment(const FlightConfig& config, int n) {
    if (n < 0) {
        throw std::invalid_argument("estimate_even_moment: n must be nonnegative");
    }
    if (n == 0) {
        if (config.dimension < 2) {
            throw std::invalid_argument("random flights: dimension must be at least 2");
        }
        if (config.steps < 1) {
            throw std::invalid_argument("random flights: steps must be at least 1");
        }
        if (config.sample_count < 1) {
            throw std::invalid_argument("random flights: sample count must be at least 1");
        }
        return {1.0, 0.0, config.sample_count};
    }
    return run_flights(config.dimension, config.steps, config.sample_count, config.seed,
                       [n](double distance_sq) {
                           double value = 1.0;
                           for (int p = 0; p < n; ++p) {
                               value *= distance_sq;
                           }
                           return value;
                       });
}

EstimateReport estimate_prob_within_unit(int dimension, int steps, long long sample_count,
                                         std::uint64_t seed) {
    return run_flights(dimension, steps, sample_count, seed, [](double distance_sq) {
        return distance_sq < 1.0 - 1e-9 ? 1.0 : 0.0;
    });
}

}  // namespace brickwalk
