#include "brickwalk.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "brickwalk/bijection.hpp"
#include "brickwalk/cone_formulas.hpp"
#include "brickwalk/exact.hpp"
#include "brickwalk/lattice_graphs.hpp"
#include "brickwalk/moment_matrix.hpp"
#include "brickwalk/random_flights.hpp"
#include "brickwalk/verify.hpp"
#include "brickwalk/word_models.hpp"

struct bw_matrix {
    brickwalk::TriMatrix value;
};

struct bw_report {
    std::vector<brickwalk::Check> checks;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& text) {
    char* copy = static_cast<char*>(std::malloc(text.size() + 1));
    if (copy == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(copy, text.c_str(), text.size() + 1);
    return copy;
}

void require(const void* pointer, const char* what) {
    if (pointer == nullptr) {
        throw std::invalid_argument(std::string(what) + " must not be null");
    }
}

template <typename Body>
bw_status guarded(Body&& body) {
    try {
        body();
        return BW_OK;
    } catch (const brickwalk::LimitError& error) {
        g_last_error = error.what();
        return BW_ERROR_LIMIT;
    } catch (const std::domain_error& error) {
        g_last_error = error.what();
        return BW_ERROR_DOMAIN;
    } catch (const std::invalid_argument& error) {
        g_last_error = error.what();
        return BW_ERROR_INVALID_ARGUMENT;
    } catch (const std::out_of_range& error) {
        g_last_error = error.what();
        return BW_ERROR_INVALID_ARGUMENT;
    } catch (const std::exception& error) {
        g_last_error = error.what();
        return BW_ERROR_INTERNAL;
    } catch (...) {
        g_last_error = "unrecognized failure";
        return BW_ERROR_INTERNAL;
    }
}

const brickwalk::Check& report_row(const bw_report* report, size_t index) {
    require(report, "report");
    if (index >= report->checks.size()) {
        throw std::out_of_range("report index out of range");
    }
    return report->checks[index];
}

brickwalk::W4Convention parse_convention(const char* text) {
    require(text, "convention");
    const std::string name(text);
    if (name == "verbatim") {
        return brickwalk::W4Convention::verbatim;
    }
    if (name == "corrected") {
        return brickwalk::W4Convention::corrected;
    }
    throw std::invalid_argument("convention must be 'verbatim' or 'corrected'");
}

}  // namespace

extern "C" {

const char* bw_version(void) {
    return "1.0.0";
}

const char* bw_last_error(void) {
    return g_last_error.c_str();
}

void bw_string_free(char* text) {
    std::free(text);
}

bw_status bw_factorial(long n, char** out) {
    return guarded([&] {
        require(out, "out");
        *out = dup_string(brickwalk::to_decimal(brickwalk::factorial(n)));
    });
}

bw_status bw_binomial(long n, long k, char** out) {
    return guarded([&] {
        require(out, "out");
        *out = dup_string(brickwalk::to_decimal(brickwalk::binomial(n, k)));
    });
}

bw_status bw_catalan(long n, char** out) {
    return guarded([&] {
        require(out, "out");
        *out = dup_string(brickwalk::to_decimal(brickwalk::catalan(n)));
    });
}

bw_status bw_narayana(long n, long k, char** out) {
    return guarded([&] {
        require(out, "out");
        *out = dup_string(brickwalk::to_decimal(brickwalk::narayana(n, k)));
    });
}

bw_status bw_motzkin(long n, char** out) {
    return guarded([&] {
        require(out, "out");
        *out = dup_string(brickwalk::to_decimal(brickwalk::motzkin(n)));
    });
}

bw_status bw_a_entry(const char* nu, long i, long j, char** out) {
    return guarded([&] {
        require(nu, "nu");
        require(out, "out");
        const brickwalk::Ratio value = brickwalk::a_entry(
            brickwalk::parse_ratio(nu), static_cast<int>(i), static_cast<int>(j));
        *out = dup_string(brickwalk::to_fraction(value));
    });
}

bw_status bw_moment_even(const char* nu, int m, int n, char** out) {
    return guarded([&] {
        require(nu, "nu");
        require(out, "out");
        *out = dup_string(
            brickwalk::to_fraction(brickwalk::moment_even(brickwalk::parse_ratio(nu), m, n)));
    });
}

bw_status bw_super_ballot(int n, char** out) {
    return guarded([&] {
        require(out, "out");
        *out = dup_string(brickwalk::to_fraction(brickwalk::super_ballot(n)));
    });
}

bw_status bw_odd_dim_w4(const char* nu, int s, const char* convention, char** out) {
    return guarded([&] {
        require(nu, "nu");
        require(out, "out");
        const brickwalk::Ratio value = brickwalk::odd_dim_w4(
            brickwalk::parse_ratio(nu), s, parse_convention(convention));
        *out = dup_string(brickwalk::to_fraction(value));
    });
}

bw_status bw_a_matrix(const char* nu, int size, bw_matrix** out) {
    return guarded([&] {
        require(nu, "nu");
        require(out, "out");
        *out = new bw_matrix{brickwalk::a_matrix(brickwalk::parse_ratio(nu), size)};
    });
}

bw_status bw_matrix_power(const bw_matrix* base, int exponent, bw_matrix** out) {
    return guarded([&] {
        require(base, "base");
        require(out, "out");
        *out = new bw_matrix{base->value.power(exponent)};
    });
}

bw_status bw_matrix_multiply(const bw_matrix* lhs, const bw_matrix* rhs, bw_matrix** out) {
    return guarded([&] {
        require(lhs, "lhs");
        require(rhs, "rhs");
        require(out, "out");
        *out = new bw_matrix{lhs->value.multiply(rhs->value)};
    });
}

bw_status bw_matrix_size(const bw_matrix* matrix, int* out) {
    return guarded([&] {
        require(matrix, "matrix");
        require(out, "out");
        *out = matrix->value.size();
    });
}

bw_status bw_matrix_entry(const bw_matrix* matrix, int i, int j, char** out) {
    return guarded([&] {
        require(matrix, "matrix");
        require(out, "out");
        *out = dup_string(brickwalk::to_fraction(matrix->value.entry(i, j)));
    });
}

bw_status bw_matrix_row_sum(const bw_matrix* matrix, int i, char** out) {
    return guarded([&] {
        require(matrix, "matrix");
        require(out, "out");
        *out = dup_string(brickwalk::to_fraction(matrix->value.row_sum(i)));
    });
}

void bw_matrix_free(bw_matrix* matrix) {
    delete matrix;
}

bw_status bw_count_paths(const char* family, const int* start, const int* end, int dimension,
                         int length, char** out) {
    return guarded([&] {
        require(family, "family");
        require(start, "start");
        require(end, "end");
        require(out, "out");
        const brickwalk::LatticeFamily graph = brickwalk::LatticeFamily::parse(family);
        if (dimension != graph.dimension()) {
            throw std::invalid_argument("dimension does not match family " + graph.name());
        }
        const brickwalk::Vertex from(start, start + dimension);
        const brickwalk::Vertex to(end, end + dimension);
        *out = dup_string(brickwalk::to_decimal(brickwalk::count_paths(graph, from, to, length)));
    });
}

bw_status bw_count_abelian_squares(int m, int n, char** out) {
    return guarded([&] {
        require(out, "out");
        *out = dup_string(brickwalk::to_decimal(brickwalk::count_abelian_squares(m, n)));
    });
}

bw_status bw_motzkin_to_dyck(const char* word, char** out_word, int* out_peaks) {
    return guarded([&] {
        require(word, "word");
        require(out_word, "out_word");
        int rewrites = 0;
        const brickwalk::StepWord image =
            brickwalk::motzkin_to_dyck(brickwalk::parse_word(word), rewrites);
        *out_word = dup_string(brickwalk::format_word(image));
        if (out_peaks != nullptr) {
            *out_peaks = rewrites;
        }
    });
}

bw_status bw_verify_bijectivity(int n, int k, int64_t* out_domain, int64_t* out_image,
                                int* out_all_valid, int* out_narayana_match) {
    return guarded([&] {
        require(out_domain, "out_domain");
        require(out_image, "out_image");
        require(out_all_valid, "out_all_valid");
        require(out_narayana_match, "out_narayana_match");
        const brickwalk::BijectivityReport report = brickwalk::verify_bijectivity(n, k);
        *out_domain = report.domain_size;
        *out_image = report.image_size;
        *out_all_valid = report.all_valid ? 1 : 0;
        *out_narayana_match = report.narayana_match ? 1 : 0;
    });
}

bw_status bw_cone_count(const char* family, int i, int j, int length, char** out_value,
                        int* out_closed_form, char** out_note) {
    return guarded([&] {
        require(family, "family");
        require(out_value, "out_value");
        require(out_closed_form, "out_closed_form");
        const brickwalk::LatticeFamily graph = brickwalk::LatticeFamily::parse(family);
        const brickwalk::ConeCount result = brickwalk::cone_count(graph, i, j, length);
        char* value_text = dup_string(brickwalk::to_decimal(result.value));
        char* note_text = nullptr;
        if (out_note != nullptr) {
            try {
                note_text = dup_string(result.note);
            } catch (...) {
                std::free(value_text);
                throw;
            }
        }
        *out_value = value_text;
        *out_closed_form = result.closed_form ? 1 : 0;
        if (out_note != nullptr) {
            *out_note = note_text;
        }
    });
}

void bw_verify_bounds_init(bw_verify_bounds* bounds) {
    if (bounds == nullptr) {
        return;
    }
    bounds->m_max = -1;
    bounds->n_max = -1;
    bounds->len_max = -1;
    bounds->mc_samples = -1;
    bounds->mc_seeds = -1;
}

bw_status bw_verify(const char* suite, const bw_verify_bounds* bounds, bw_report** out) {
    return guarded([&] {
        require(suite, "suite");
        require(out, "out");
        brickwalk::VerifyBounds resolved;
        if (bounds != nullptr) {
            resolved.m_max = bounds->m_max;
            resolved.n_max = bounds->n_max;
            resolved.len_max = bounds->len_max;
            resolved.mc_samples = bounds->mc_samples;
            resolved.mc_seeds = bounds->mc_seeds;
        }
        *out = new bw_report{brickwalk::run_suite(suite, resolved)};
    });
}

bw_status bw_integrality_report(int nu, int m_max, int n_max, bw_report** out) {
    return guarded([&] {
        require(out, "out");
        std::vector<brickwalk::Check> checks;
        for (const brickwalk::IntegralityCell& cell :
             brickwalk::integrality_report(nu, m_max, n_max)) {
            checks.push_back({"C(" + std::to_string(2 * nu - 1) + ",2)*moment(" +
                                  std::to_string(nu) + "," + std::to_string(cell.m) + "," +
                                  std::to_string(cell.n) + ") integral",
                              brickwalk::to_fraction(cell.scaled), "an integer", cell.integral});
        }
        *out = new bw_report{std::move(checks)};
    });
}

bw_status bw_report_size(const bw_report* report, size_t* out) {
    return guarded([&] {
        require(report, "report");
        require(out, "out");
        *out = report->checks.size();
    });
}

bw_status bw_report_name(const bw_report* report, size_t index, char** out) {
    return guarded([&] {
        require(out, "out");
        *out = dup_string(report_row(report, index).name);
    });
}

bw_status bw_report_lhs(const bw_report* report, size_t index, char** out) {
    return guarded([&] {
        require(out, "out");
        *out = dup_string(report_row(report, index).lhs);
    });
}

bw_status bw_report_rhs(const bw_report* report, size_t index, char** out) {
    return guarded([&] {
        require(out, "out");
        *out = dup_string(report_row(report, index).rhs);
    });
}

bw_status bw_report_pass(const bw_report* report, size_t index, int* out) {
    return guarded([&] {
        require(out, "out");
        *out = report_row(report, index).pass ? 1 : 0;
    });
}

bw_status bw_report_failures(const bw_report* report, size_t* out) {
    return guarded([&] {
        require(report, "report");
        require(out, "out");
        size_t failures = 0;
        for (const brickwalk::Check& check : report->checks) {
            if (!check.pass) {
                ++failures;
            }
        }
        *out = failures;
    });
}

void bw_report_free(bw_report* report) {
    delete report;
}

bw_status bw_mc_moment(int dimension, int m, int n, long long samples, uint64_t seed,
                       double* out_estimate, double* out_stderr) {
    return guarded([&] {
        require(out_estimate, "out_estimate");
        require(out_stderr, "out_stderr");
        brickwalk::FlightConfig config;
        config.dimension = dimension;
        config.steps = m;
        config.sample_count = samples;
        config.seed = seed;
        const brickwalk::EstimateReport report = brickwalk::estimate_even_moment(config, n);
        *out_estimate = report.point_estimate;
        *out_stderr = report.standard_error;
    });
}

bw_status bw_mc_prob_within_unit(int dimension, int m, long long samples, uint64_t seed,
                                 double* out_estimate, double* out_stderr) {
    return guarded([&] {
        require(out_estimate, "out_estimate");
        require(out_stderr, "out_stderr");
        const brickwalk::EstimateReport report =
            brickwalk::estimate_prob_within_unit(dimension, m, samples, seed);
        *out_estimate = report.point_estimate;
        *out_stderr = report.standard_error;
    });
}

}  // extern "C"
