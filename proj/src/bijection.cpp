#include "brickwalk/bijection.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace brickwalk {

namespace {

bool admissible_word(const StepWord& word, int* ups_out) {
    if (word.size() % 2 != 0) {
        return false;
    }
    long long height = 0;
    int ups = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
        const int position = static_cast<int>(i) + 1;
        switch (word[i].kind) {
            case Step::Kind::up:
                if (position % 2 == 0) {
                    return false;
                }
                ++ups;
                ++height;
                break;
            case Step::Kind::down:
                if (position % 2 != 0) {
                    return false;
                }
                --height;
                if (height < 0) {
                    return false;
                }
                break;
            case Step::Kind::flat:
                break;
            default:
                return false;
        }
    }
    if (height != 0) {
        return false;
    }
    if (ups_out != nullptr) {
        *ups_out = ups;
    }
    return true;
}

void append_run(StepWord& out, const Step& letter, int count) {
    for (int i = 0; i < count; ++i) {
        out.push_back(letter);
    }
}

StepWord transform_prime_impl(const PrimeSegment& segment, int& rewrites);

// alpha is the interior of a prime segment; height is relative to alpha's
// own baseline.
StepWord transform_interior(const StepWord& alpha, bool special, int& rewrites) {
    // Baseline horizontal runs around the inner primes: x, g_1..g_{s-1}, y.
    std::vector<int> runs{0};
    std::vector<StepWord> inner;
    std::size_t i = 0;
    while (i < alpha.size()) {
        if (alpha[i].kind == Step::Kind::flat) {
            ++runs.back();
            ++i;
            continue;
        }
        // An inner prime starts here; scan to its matching return.
        if (alpha[i].kind != Step::Kind::up) {
            throw std::invalid_argument(
                "transform_prime: interior dips below its own baseline");
        }
        std::size_t start = i;
        long long height = 0;
        do {
            if (alpha[i].kind == Step::Kind::up) {
                ++height;
            } else if (alpha[i].kind == Step::Kind::down) {
                --height;
            }
            ++i;
        } while (height > 0 && i < alpha.size());
        if (height != 0) {
            throw std::invalid_argument(
                "transform_prime: interior does not return to its own baseline");
        }
        inner.emplace_back(alpha.begin() + static_cast<std::ptrdiff_t>(start) + 1,
                           alpha.begin() + static_cast<std::ptrdiff_t>(i) - 1);
        runs.push_back(0);
    }

    const int s = static_cast<int>(inner.size());
    if (s == 0) {
        // All-horizontal interior of length 2l.
        const int len = runs[0];
        if (len % 2 != 0) {
            throw std::invalid_argument(
                "transform_prime: all-horizontal interior must have even length");
        }
        const int l = len / 2;
        StepWord out;
        out.reserve(static_cast<std::size_t>(2 * l + 2));
        append_run(out, Step::u(), l + 1);
        append_run(out, Step::d(), l + 1);
        return out;
    }

    const int x = runs.front();
    const int y = runs.back();
    if (special) {
        if (x % 2 != 0 || y % 2 != 0 || x < 2) {
            throw std::invalid_argument(
                "transform_prime: a special segment needs even boundary runs starting with H");
        }
    } else if (x % 2 == 0 || y % 2 == 0) {
        throw std::invalid_argument(
            "transform_prime: an ordinary segment needs odd boundary runs");
    }

    int sum_half_gaps = 0;
    std::vector<int> half_gaps;
    for (int g = 1; g < s; ++g) {
        const int gap = runs[static_cast<std::size_t>(g)];
        if (gap % 2 != 0) {
            throw std::invalid_argument(
                "transform_prime: interior horizontal runs must have even length");
        }
        half_gaps.push_back(gap / 2);
        sum_half_gaps += gap / 2;
    }

    int u = 0;
    int v = 0;
    if (x <= y) {
        u = x - 1;
        v = (y - x) / 2 + 1;
    } else {
        u = y;
        v = (x - y) / 2;
    }

    StepWord out;
    out.reserve(alpha.size() + 2);
    append_run(out, Step::u(), u + 1);
    append_run(out, Step::u(), sum_half_gaps);
    append_run(out, Step::u(), v);
    append_run(out, Step::d(), v);
    for (int p = 0; p < s; ++p) {
        StepWord prime{Step::u()};
        prime.insert(prime.end(), inner[static_cast<std::size_t>(p)].begin(),
                     inner[static_cast<std::size_t>(p)].end());
        prime.push_back(Step::d());
        const StepWord image = transform_prime_impl({prime, false}, rewrites);
        out.insert(out.end(), image.begin(), image.end());
        if (p + 1 < s) {
            append_run(out, Step::d(), half_gaps[static_cast<std::size_t>(p)]);
        }
    }
    append_run(out, Step::d(), u + 1);
    return out;
}

StepWord transform_prime_impl(const PrimeSegment& segment, int& rewrites) {
    ++rewrites;
    const StepWord& w = segment.word;
    if (w.size() < 2 || w.front().kind != Step::Kind::up || w.back().kind != Step::Kind::down) {
        throw std::invalid_argument("transform_prime: segment must start with U and end with D");
    }
    const StepWord alpha(w.begin() + 1, w.end() - 1);
    return transform_interior(alpha, segment.special_parity, rewrites);
}

// Dyck words of length 2*half with exactly `peaks` peaks, by direct
// enumeration.
Count dyck_peak_census(int half, int peaks) {
    Count total = 0;
    // State: position index, height, whether the previous letter was U, and
    // peaks so far.
    const int length = 2 * half;
    struct Frame {
        int pos;
        int height;
        bool after_u;
        int peaks;
    };
    std::vector<Frame> stack{{0, 0, false, 0}};
    while (!stack.empty()) {
        const Frame f = stack.back();
        stack.pop_back();
        if (f.pos == length) {
            if (f.height == 0 && f.peaks == peaks) {
                ++total;
            }
            continue;
        }
        const int rest = length - f.pos;
        if (f.height + 1 <= rest - 1) {
            stack.push_back({f.pos + 1, f.height + 1, true, f.peaks});
        }
        if (f.height > 0 && f.height - 1 <= rest - 1) {
            stack.push_back({f.pos + 1, f.height - 1, false, f.peaks + (f.after_u ? 1 : 0)});
        }
    }
    return total;
}

}  // namespace

MarkedWord preliminary_stage(const StepWord& word) {
    if (!admissible_word(word, nullptr)) {
        throw std::invalid_argument(
            "preliminary_stage: input is not an admissible positional Motzkin word");
    }
    long long height = 0;
    int first_baseline_h = -1;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i].kind == Step::Kind::flat) {
            if (height == 0) {
                first_baseline_h = static_cast<int>(i);
                break;
            }
        } else {
            height += word[i].kind == Step::Kind::up ? 1 : -1;
        }
    }

    MarkedWord out;
    out.steps.reserve(word.size() + 2);
    if (first_baseline_h >= 0) {
        out.steps.assign(word.begin(), word.begin() + first_baseline_h);
        out.steps.push_back(Step::u());
        out.steps.insert(out.steps.end(), word.begin() + first_baseline_h, word.end());
        out.inserted_u = first_baseline_h + 1;
    } else {
        out.steps = word;
        out.steps.push_back(Step::u());
        out.inserted_u = static_cast<int>(word.size()) + 1;
    }
    out.steps.push_back(Step::d());
    out.inserted_d = static_cast<int>(out.steps.size());
    return out;
}

std::vector<PrimeSegment> prime_decompose(const MarkedWord& word) {
    std::vector<PrimeSegment> segments;
    long long height = 0;
    std::size_t start = 0;
    bool saw_special = false;
    for (std::size_t i = 0; i < word.steps.size(); ++i) {
        switch (word.steps[i].kind) {
            case Step::Kind::up:
                ++height;
                break;
            case Step::Kind::down:
                --height;
                break;
            case Step::Kind::flat:
                if (height == 0) {
                    throw std::invalid_argument(
                        "prime_decompose: marked word still has a baseline H");
                }
                break;
            default:
                throw std::invalid_argument("prime_decompose: unexpected letter");
        }
        if (height < 0) {
            throw std::invalid_argument("prime_decompose: word dips below its baseline");
        }
        if (height == 0) {
            const int lo = static_cast<int>(start) + 1;
            const int hi = static_cast<int>(i) + 1;
            const bool has_u = lo <= word.inserted_u && word.inserted_u <= hi;
            const bool has_d = lo <= word.inserted_d && word.inserted_d <= hi;
            if (has_u != has_d) {
                throw std::logic_error(
                    "prime_decompose: inserted letters split across segments");
            }
            segments.push_back({StepWord(word.steps.begin() + static_cast<std::ptrdiff_t>(start),
                                         word.steps.begin() + static_cast<std::ptrdiff_t>(i) + 1),
                                has_u});
            saw_special = saw_special || has_u;
            start = i + 1;
        }
    }
    if (height != 0) {
        throw std::invalid_argument("prime_decompose: word does not return to its baseline");
    }
    if (!saw_special && !word.steps.empty()) {
        throw std::logic_error("prime_decompose: no segment holds the inserted letters");
    }
    if (saw_special && !segments.back().special_parity) {
        throw std::logic_error("prime_decompose: the inserted letters must end the word");
    }
    return segments;
}

StepWord transform_prime(const PrimeSegment& segment) {
    int rewrites = 0;
    return transform_prime_impl(segment, rewrites);
}

StepWord motzkin_to_dyck(const StepWord& word) {
    int rewrites = 0;
    return motzkin_to_dyck(word, rewrites);
}

StepWord motzkin_to_dyck(const StepWord& word, int& prime_rewrites) {
    int ups = 0;
    if (!admissible_word(word, &ups)) {
        throw std::domain_error(
            "motzkin_to_dyck: input is not an admissible positional Motzkin word");
    }
    const MarkedWord marked = preliminary_stage(word);
    StepWord out;
    out.reserve(word.size() + 2);
    prime_rewrites = 0;
    for (const PrimeSegment& segment : prime_decompose(marked)) {
        const StepWord image = transform_prime_impl(segment, prime_rewrites);
        out.insert(out.end(), image.begin(), image.end());
    }
    return out;
}

BijectivityReport verify_bijectivity(int n, int k) {
    if (n < 0 || k < 0) {
        throw std::invalid_argument("verify_bijectivity: arguments must be nonnegative");
    }
    if (n > 9) {
        throw std::invalid_argument("verify_bijectivity: n must be at most 9 for exhaustion");
    }
    const auto domain = enumerate_p_hat(2 * n, k, k);

    BijectivityReport report;
    report.domain_size = static_cast<std::int64_t>(domain.size());
    report.all_valid = true;
    std::set<std::string> image;
    for (const StepWord& word : domain) {
        const StepWord dyck = motzkin_to_dyck(word);
        const bool valid = dyck.size() == static_cast<std::size_t>(2 * n + 2) &&
                           is_dyck(dyck) && peak_count(dyck) == k + 1;
        report.all_valid = report.all_valid && valid;
        image.insert(format_word(dyck));
    }
    report.image_size = static_cast<std::int64_t>(image.size());

    const Count expected = narayana(n + 1, k + 1);
    report.narayana_match =
        Count(report.image_size) == expected && dyck_peak_census(n + 1, k + 1) == expected;
    return report;
}

}  // namespace brickwalk
