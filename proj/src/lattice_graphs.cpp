#include "brickwalk/lattice_graphs.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace brickwalk {

namespace {

long long coordinate_sum(const Vertex& v) {
    return std::accumulate(v.begin(), v.end(), 0LL);
}

void push_shifted(std::vector<Vertex>& out, const Vertex& v, std::size_t axis, int delta) {
    Vertex w = v;
    w[axis] += delta;
    out.push_back(std::move(w));
}

std::vector<Vertex> neighbors_g0(const Vertex& v) {
    std::vector<Vertex> out;
    out.reserve(v.size() + 1);
    push_shifted(out, v, 0, 1);
    push_shifted(out, v, 0, -1);
    const int delta = coordinate_sum(v) % 2 == 0 ? 1 : -1;
    for (std::size_t k = 1; k < v.size(); ++k) {
        push_shifted(out, v, k, delta);
    }
    return out;
}

std::vector<Vertex> neighbors_g1(const Vertex& v) {
    std::vector<Vertex> out;
    out.reserve(v.size() + 1);
    push_shifted(out, v, 0, 1);
    if (v[0] > 0) {
        push_shifted(out, v, 0, -1);
    }
    long long prefix = v[0];
    for (std::size_t k = 1; k < v.size(); ++k) {
        prefix += v[k];
        if (prefix % 2 != 0) {
            push_shifted(out, v, k, 1);
        } else if (v[k] > 0) {
            push_shifted(out, v, k, -1);
        }
    }
    return out;
}

std::vector<Vertex> neighbors_ghat1(const Vertex& v) {
    std::vector<Vertex> out;
    out.reserve(v.size() + 1);
    push_shifted(out, v, 0, 1);
    push_shifted(out, v, 0, -1);
    long long prefix = v[0];
    for (std::size_t k = 1; k < v.size(); ++k) {
        prefix += v[k];
        push_shifted(out, v, k, prefix % 2 != 0 ? 1 : -1);
    }
    return out;
}

std::vector<Vertex> neighbors_ve(const Vertex& v) {
    std::vector<Vertex> out;
    out.reserve(v.size());
    const int delta = coordinate_sum(v) == 0 ? 1 : -1;
    for (std::size_t k = 0; k < v.size(); ++k) {
        push_shifted(out, v, k, delta);
    }
    return out;
}

}  // namespace

std::size_t VertexHash::operator()(const Vertex& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int c : v) {
        h ^= static_cast<std::size_t>(static_cast<unsigned int>(c));
        h *= 1099511628211ULL;
    }
    return h;
}

LatticeFamily::LatticeFamily(Kind kind, int dimension) : kind_(kind), dimension_(dimension) {}

LatticeFamily LatticeFamily::g0(int m) {
    if (m < 1) {
        throw std::invalid_argument("LatticeFamily::g0: m must be at least 1");
    }
    return {Kind::g0, m};
}

LatticeFamily LatticeFamily::g1(int m) {
    if (m < 1) {
        throw std::invalid_argument("LatticeFamily::g1: m must be at least 1");
    }
    return {Kind::g1, m};
}

LatticeFamily LatticeFamily::ghat1(int m) {
    if (m < 1) {
        throw std::invalid_argument("LatticeFamily::ghat1: m must be at least 1");
    }
    return {Kind::ghat1, m};
}

LatticeFamily LatticeFamily::ve(int dim) {
    if (dim < 2) {
        throw std::invalid_argument("LatticeFamily::ve: dimension must be at least 2");
    }
    return {Kind::ve, dim};
}

LatticeFamily LatticeFamily::brick_plane() {
    return {Kind::brick_plane, 2};
}

LatticeFamily LatticeFamily::h_half_plane() {
    return {Kind::h_half_plane, 2};
}

LatticeFamily LatticeFamily::v_half_plane() {
    return {Kind::v_half_plane, 2};
}

LatticeFamily LatticeFamily::refl_v_half_plane() {
    return {Kind::refl_v_half_plane, 2};
}

LatticeFamily LatticeFamily::quarter_plane() {
    return {Kind::quarter_plane, 2};
}

LatticeFamily LatticeFamily::refl_quarter_plane() {
    return {Kind::refl_quarter_plane, 2};
}

LatticeFamily LatticeFamily::parse(const std::string& tag) {
    if (tag == "BrickPlane") return brick_plane();
    if (tag == "HHalfPlane") return h_half_plane();
    if (tag == "VHalfPlane") return v_half_plane();
    if (tag == "ReflVHalfPlane") return refl_v_half_plane();
    if (tag == "QuarterPlane") return quarter_plane();
    if (tag == "ReflQuarterPlane") return refl_quarter_plane();

    const auto underscore = tag.find('_');
    if (underscore != std::string::npos && underscore + 1 < tag.size()) {
        const std::string head = tag.substr(0, underscore);
        const std::string digits = tag.substr(underscore + 1);
        if (!digits.empty() &&
            std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
            digits.size() <= 2) {
            const int m = std::stoi(digits);
            if (head == "G0" && m >= 1) return g0(m);
            if (head == "G1" && m >= 1) return g1(m);
            if (head == "GHat1" && m >= 1) return ghat1(m);
            if (head == "VE" && m >= 2) return ve(m);
        }
    }
    throw std::invalid_argument("LatticeFamily::parse: unknown family tag '" + tag + "'");
}

std::string LatticeFamily::name() const {
    switch (kind_) {
        case Kind::g0:
            return "G0_" + std::to_string(dimension_);
        case Kind::g1:
            return "G1_" + std::to_string(dimension_);
        case Kind::ghat1:
            return "GHat1_" + std::to_string(dimension_);
        case Kind::ve:
            return "VE_" + std::to_string(dimension_);
        case Kind::brick_plane:
            return "BrickPlane";
        case Kind::h_half_plane:
            return "HHalfPlane";
        case Kind::v_half_plane:
            return "VHalfPlane";
        case Kind::refl_v_half_plane:
            return "ReflVHalfPlane";
        case Kind::quarter_plane:
            return "QuarterPlane";
        case Kind::refl_quarter_plane:
            return "ReflQuarterPlane";
    }
    throw std::logic_error("LatticeFamily::name: unreachable");
}

bool LatticeFamily::contains(const Vertex& v) const {
    if (static_cast<int>(v.size()) != dimension_) {
        return false;
    }
    switch (kind_) {
        case Kind::g0:
        case Kind::ghat1:
        case Kind::brick_plane:
            return true;
        case Kind::g1:
        case Kind::refl_quarter_plane:
            return std::all_of(v.begin(), v.end(), [](int c) { return c >= 0; });
        case Kind::ve: {
            const long long s = coordinate_sum(v);
            return s == 0 || s == 1;
        }
        case Kind::h_half_plane:
            return v[0] >= 0;
        case Kind::v_half_plane:
        case Kind::refl_v_half_plane:
            return v[1] >= 0;
        case Kind::quarter_plane:
            return v[0] >= 0 && v[1] >= 0;
    }
    throw std::logic_error("LatticeFamily::contains: unreachable");
}

std::vector<Vertex> LatticeFamily::neighbors(const Vertex& v) const {
    if (static_cast<int>(v.size()) != dimension_) {
        throw std::invalid_argument("LatticeFamily::neighbors: vertex dimension mismatch");
    }
    if (!contains(v)) {
        throw std::domain_error("LatticeFamily::neighbors: vertex outside the family's domain");
    }

    std::vector<Vertex> base;
    bool filter = false;
    switch (kind_) {
        case Kind::g0:
        case Kind::brick_plane:
            base = neighbors_g0(v);
            break;
        case Kind::h_half_plane:
        case Kind::v_half_plane:
        case Kind::quarter_plane:
            base = neighbors_g0(v);
            filter = true;
            break;
        case Kind::g1:
        case Kind::refl_quarter_plane:
            base = neighbors_g1(v);
            break;
        case Kind::ghat1:
            base = neighbors_ghat1(v);
            break;
        case Kind::refl_v_half_plane:
            base = neighbors_ghat1(v);
            filter = true;
            break;
        case Kind::ve:
            base = neighbors_ve(v);
            break;
    }
    if (filter) {
        std::erase_if(base, [this](const Vertex& w) { return !contains(w); });
    }
    return base;
}

Count count_paths(const LatticeFamily& family, const Vertex& start, const Vertex& end,
                  int length) {
    if (length < 0) {
        throw std::invalid_argument("count_paths: length must be nonnegative");
    }
    if (!family.contains(start) || !family.contains(end)) {
        throw std::domain_error("count_paths: endpoint outside the family's domain");
    }

    std::unordered_map<Vertex, Count, VertexHash> frontier;
    frontier.emplace(start, 1);
    for (int t = 0; t < length; ++t) {
        std::unordered_map<Vertex, Count, VertexHash> next;
        next.reserve(frontier.size() * 2);
        for (const auto& [v, paths] : frontier) {
            for (auto& w : family.neighbors(v)) {
                next[std::move(w)] += paths;
            }
        }
        frontier = std::move(next);
    }
    const auto it = frontier.find(end);
    return it == frontier.end() ? Count(0) : it->second;
}

Vertex psi(const Vertex& v) {
    if (v.size() < 2) {
        throw std::invalid_argument("psi: vertex must have at least 2 coordinates");
    }
    const long long s = coordinate_sum(v);
    if (s != 0 && s != 1) {
        throw std::domain_error("psi: coordinate sum must be 0 or 1");
    }
    Vertex out(v.size() - 1);
    out[0] = v[1] - v[0];
    std::copy(v.begin() + 2, v.end(), out.begin() + 1);
    return out;
}

Vertex psi_inverse(const Vertex& w) {
    if (w.empty()) {
        throw std::invalid_argument("psi_inverse: vertex must have at least 1 coordinate");
    }
    const long long s = coordinate_sum(w);
    const long long x0 = s % 2 == 0 ? -s / 2 : (1 - s) / 2;
    Vertex out(w.size() + 1);
    out[0] = static_cast<int>(x0);
    out[1] = w[0] + static_cast<int>(x0);
    std::copy(w.begin() + 1, w.end(), out.begin() + 2);
    return out;
}

}  // namespace brickwalk
