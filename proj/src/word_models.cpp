#include "brickwalk/word_models.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace brickwalk {

namespace {

// Odd positions in [from, to], 1-indexed, from <= to + 1.
int odd_positions_in(int from, int to) {
    if (from > to) {
        return 0;
    }
    return (to + 1) / 2 - from / 2;
}

int even_positions_in(int from, int to) {
    if (from > to) {
        return 0;
    }
    return to / 2 - (from - 1) / 2;
}

void enumerate_words(int n, int r, int l, bool prefix_rule, StepWord& current, int used_u,
                     int used_d, int height, std::vector<StepWord>& out) {
    const int position = static_cast<int>(current.size()) + 1;
    if (position > n) {
        out.push_back(current);
        return;
    }
    const auto feasible = [&](int next_used_u, int next_used_d) {
        return odd_positions_in(position + 1, n) >= r - next_used_u &&
               even_positions_in(position + 1, n) >= l - next_used_d;
    };
    if (position % 2 != 0 && used_u < r && feasible(used_u + 1, used_d)) {
        current.push_back(Step::u());
        enumerate_words(n, r, l, prefix_rule, current, used_u + 1, used_d, height + 1, out);
        current.pop_back();
    }
    if (position % 2 == 0 && used_d < l && (!prefix_rule || height > 0) &&
        feasible(used_u, used_d + 1)) {
        current.push_back(Step::d());
        enumerate_words(n, r, l, prefix_rule, current, used_u, used_d + 1, height - 1, out);
        current.pop_back();
    }
    if (feasible(used_u, used_d)) {
        current.push_back(Step::h());
        enumerate_words(n, r, l, prefix_rule, current, used_u, used_d, height, out);
        current.pop_back();
    }
}

std::vector<StepWord> enumerate_impl(int n, int r, int l, bool prefix_rule) {
    if (n < 0 || r < 0 || l < 0) {
        throw std::invalid_argument("enumerate_p: arguments must be nonnegative");
    }
    std::vector<StepWord> out;
    if (odd_positions_in(1, n) < r || even_positions_in(1, n) < l) {
        return out;
    }
    StepWord current;
    current.reserve(static_cast<std::size_t>(n));
    enumerate_words(n, r, l, prefix_rule, current, 0, 0, 0, out);
    return out;
}

bool is_excursion(const StepWord& word, bool allow_flat, const char* who) {
    long long height = 0;
    for (const Step& s : word) {
        switch (s.kind) {
            case Step::Kind::up:
                ++height;
                break;
            case Step::Kind::down:
                --height;
                if (height < 0) {
                    return false;
                }
                break;
            case Step::Kind::flat:
                if (allow_flat) {
                    break;
                }
                [[fallthrough]];
            default:
                throw std::invalid_argument(std::string(who) + ": unexpected letter " +
                                            format_word({s}));
        }
    }
    return height == 0;
}

}  // namespace

Step Step::r(int axis) {
    if (axis < 2) {
        throw std::invalid_argument("Step::r: axis must be at least 2");
    }
    return {Kind::right, axis};
}

Step Step::l(int axis) {
    if (axis < 2) {
        throw std::invalid_argument("Step::l: axis must be at least 2");
    }
    return {Kind::left, axis};
}

std::string format_word(const StepWord& word) {
    std::string out;
    out.reserve(word.size());
    for (const Step& s : word) {
        switch (s.kind) {
            case Step::Kind::up:
                out += 'U';
                break;
            case Step::Kind::down:
                out += 'D';
                break;
            case Step::Kind::flat:
                out += 'H';
                break;
            case Step::Kind::right:
                out += 'R';
                out += std::to_string(s.axis);
                break;
            case Step::Kind::left:
                out += 'L';
                out += std::to_string(s.axis);
                break;
        }
    }
    return out;
}

StepWord parse_word(const std::string& text) {
    StepWord out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i++];
        if (c == 'U') {
            out.push_back(Step::u());
            continue;
        }
        if (c == 'D') {
            out.push_back(Step::d());
            continue;
        }
        if (c == 'H') {
            out.push_back(Step::h());
            continue;
        }
        if (c == 'R' || c == 'L') {
            std::size_t start = i;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
                ++i;
            }
            if (i == start || i - start > 2) {
                throw std::invalid_argument("parse_word: letter " + std::string(1, c) +
                                            " needs an axis index");
            }
            const int axis = std::stoi(text.substr(start, i - start));
            out.push_back(c == 'R' ? Step::r(axis) : Step::l(axis));
            continue;
        }
        throw std::invalid_argument("parse_word: unexpected character '" + std::string(1, c) +
                                    "'");
    }
    return out;
}

IllegalStepError::IllegalStepError(int position, const std::string& reason)
    : std::domain_error("illegal step at position " + std::to_string(position) + ": " + reason),
      position_(position) {}

std::vector<StepWord> enumerate_p(int n, int r, int l) {
    return enumerate_impl(n, r, l, false);
}

std::vector<StepWord> enumerate_p_hat(int n, int r, int l) {
    return enumerate_impl(n, r, l, true);
}

bool is_dyck(const StepWord& word) {
    return is_excursion(word, false, "is_dyck");
}

bool is_motzkin(const StepWord& word) {
    return is_excursion(word, true, "is_motzkin");
}

int peak_count(const StepWord& word) {
    int peaks = 0;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        if (word[i].kind == Step::Kind::up && word[i + 1].kind == Step::Kind::down) {
            ++peaks;
        }
    }
    return peaks;
}

Count count_abelian_squares(int m, int n) {
    if (m < 1) {
        throw std::invalid_argument("count_abelian_squares: alphabet size must be positive");
    }
    if (n < 0) {
        throw std::invalid_argument("count_abelian_squares: n must be nonnegative");
    }
    Count budget = 1;
    for (int i = 0; i < 2 * n; ++i) {
        budget *= m;
        if (budget > 100000000) {
            throw LimitError("count_abelian_squares: m^(2n) exceeds the 10^8 budget");
        }
    }
    if (n == 0) {
        return 1;
    }

    // Enumerate every length-n string, group by letter-count signature, and
    // sum the squared class sizes (each class pairs freely with itself).
    std::map<std::vector<int>, long long> classes;
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    for (;;) {
        std::vector<int> signature(static_cast<std::size_t>(m), 0);
        for (int d : digits) {
            ++signature[static_cast<std::size_t>(d)];
        }
        ++classes[signature];
        int pos = n - 1;
        while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == m - 1) {
            digits[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) {
            break;
        }
        ++digits[static_cast<std::size_t>(pos)];
    }
    Count total = 0;
    for (const auto& [signature, size] : classes) {
        total += Count(size) * size;
    }
    return total;
}

std::vector<Vertex> word_to_path(const StepWord& word, const LatticeFamily& family) {
    std::vector<Vertex> path;
    path.reserve(word.size() + 1);
    Vertex current = family.origin();
    path.push_back(current);
    for (std::size_t i = 0; i < word.size(); ++i) {
        const int position = static_cast<int>(i) + 1;
        const Step& s = word[i];
        std::size_t axis = 0;
        int delta = 0;
        switch (s.kind) {
            case Step::Kind::up:
                axis = 0;
                delta = 1;
                break;
            case Step::Kind::down:
                axis = 0;
                delta = -1;
                break;
            case Step::Kind::right:
                axis = static_cast<std::size_t>(s.axis) - 1;
                delta = 1;
                break;
            case Step::Kind::left:
                axis = static_cast<std::size_t>(s.axis) - 1;
                delta = -1;
                break;
            case Step::Kind::flat:
                throw IllegalStepError(position, "flat steps do not realize lattice edges");
        }
        if (axis >= current.size()) {
            throw IllegalStepError(position, "axis index exceeds the family dimension");
        }
        Vertex next = current;
        next[axis] += delta;
        const auto adjacent = family.neighbors(current);
        if (std::find(adjacent.begin(), adjacent.end(), next) == adjacent.end()) {
            throw IllegalStepError(position, "target is not adjacent in " + family.name());
        }
        current = std::move(next);
        path.push_back(current);
    }
    return path;
}

}  // namespace brickwalk
