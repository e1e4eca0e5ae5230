#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <string>

#include "brickwalk.h"

namespace {

std::string take(char* text) {
    REQUIRE(text != nullptr);
    std::string out(text);
    bw_string_free(text);
    return out;
}

}  // namespace

TEST_CASE("version and error plumbing") {
    CHECK(bw_version() != nullptr);
    char* out = nullptr;
    CHECK(bw_factorial(-1, &out) == BW_ERROR_INVALID_ARGUMENT);
    CHECK(out == nullptr);
    CHECK(std::string(bw_last_error()).size() > 0);
    CHECK(bw_factorial(5, nullptr) == BW_ERROR_INVALID_ARGUMENT);
    bw_string_free(nullptr);
}

TEST_CASE("exact sequence endpoints") {
    char* out = nullptr;
    REQUIRE(bw_factorial(20, &out) == BW_OK);
    CHECK(take(out) == "2432902008176640000");
    REQUIRE(bw_binomial(52, 5, &out) == BW_OK);
    CHECK(take(out) == "2598960");
    REQUIRE(bw_catalan(10, &out) == BW_OK);
    CHECK(take(out) == "16796");
    REQUIRE(bw_narayana(6, 3, &out) == BW_OK);
    CHECK(take(out) == "50");
    REQUIRE(bw_motzkin(7, &out) == BW_OK);
    CHECK(take(out) == "127");
}

TEST_CASE("moment endpoints") {
    char* out = nullptr;
    REQUIRE(bw_moment_even("1", 2, 2, &out) == BW_OK);
    CHECK(take(out) == "5");
    REQUIRE(bw_moment_even("1/2", 2, 2, &out) == BW_OK);
    CHECK(take(out) == "16/3");
    REQUIRE(bw_a_entry("0", 4, 2, &out) == BW_OK);
    CHECK(take(out) == "36");
    REQUIRE(bw_super_ballot(4, &out) == BW_OK);
    CHECK(take(out) == "14");
    REQUIRE(bw_odd_dim_w4("1/2", 4, "corrected", &out) == BW_OK);
    CHECK(take(out) == "24");
    REQUIRE(bw_odd_dim_w4("1/2", 4, "verbatim", &out) == BW_OK);
    CHECK(take(out) == "-24");
    CHECK(bw_odd_dim_w4("1/2", 4, "sideways", &out) == BW_ERROR_INVALID_ARGUMENT);
    CHECK(bw_moment_even("zebra", 2, 2, &out) == BW_ERROR_INVALID_ARGUMENT);
    CHECK(bw_moment_even("1", 0, 2, &out) == BW_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("matrix handles") {
    bw_matrix* a = nullptr;
    REQUIRE(bw_a_matrix("1", 5, &a) == BW_OK);
    int size = 0;
    REQUIRE(bw_matrix_size(a, &size) == BW_OK);
    CHECK(size == 5);

    char* out = nullptr;
    REQUIRE(bw_matrix_entry(a, 3, 1, &out) == BW_OK);
    CHECK(take(out) == "6");
    CHECK(bw_matrix_entry(a, 5, 0, &out) == BW_ERROR_INVALID_ARGUMENT);

    bw_matrix* squared = nullptr;
    REQUIRE(bw_matrix_power(a, 2, &squared) == BW_OK);
    bw_matrix* product = nullptr;
    REQUIRE(bw_matrix_multiply(a, a, &product) == BW_OK);
    char* lhs = nullptr;
    char* rhs = nullptr;
    REQUIRE(bw_matrix_entry(squared, 4, 1, &lhs) == BW_OK);
    REQUIRE(bw_matrix_entry(product, 4, 1, &rhs) == BW_OK);
    CHECK(take(lhs) == take(rhs));

    REQUIRE(bw_matrix_row_sum(squared, 2, &out) == BW_OK);
    CHECK(take(out) == "12");

    bw_matrix_free(a);
    bw_matrix_free(squared);
    bw_matrix_free(product);
    CHECK(bw_a_matrix("1", 0, &a) == BW_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("walk counting endpoints") {
    char* out = nullptr;
    const int origin2[2] = {0, 0};
    REQUIRE(bw_count_paths("G0_2", origin2, origin2, 2, 4, &out) == BW_OK);
    CHECK(take(out) == "15");
    const int origin1[1] = {0};
    REQUIRE(bw_count_paths("G1_1", origin1, origin1, 1, 6, &out) == BW_OK);
    CHECK(take(out) == "5");

    CHECK(bw_count_paths("G0_2", origin2, origin2, 3, 4, &out) ==
          BW_ERROR_INVALID_ARGUMENT);
    CHECK(bw_count_paths("Nope", origin2, origin2, 2, 4, &out) ==
          BW_ERROR_INVALID_ARGUMENT);
    const int outside[2] = {-1, 0};
    CHECK(bw_count_paths("G1_2", outside, origin2, 2, 2, &out) == BW_ERROR_DOMAIN);

    REQUIRE(bw_count_abelian_squares(2, 2, &out) == BW_OK);
    CHECK(take(out) == "6");
    CHECK(bw_count_abelian_squares(10, 5, &out) == BW_ERROR_LIMIT);
}

TEST_CASE("rewrite endpoints") {
    char* image = nullptr;
    int peaks = 0;
    REQUIRE(bw_motzkin_to_dyck("UDHH", &image, &peaks) == BW_OK);
    CHECK(take(image) == "UDUUDD");
    CHECK(peaks == 2);
    REQUIRE(bw_motzkin_to_dyck("", &image, nullptr) == BW_OK);
    CHECK(take(image) == "UD");
    CHECK(bw_motzkin_to_dyck("HDUH", &image, &peaks) == BW_ERROR_DOMAIN);
    CHECK(bw_motzkin_to_dyck("xyz", &image, &peaks) == BW_ERROR_INVALID_ARGUMENT);

    int64_t domain = 0;
    int64_t image_size = 0;
    int valid = 0;
    int match = 0;
    REQUIRE(bw_verify_bijectivity(4, 2, &domain, &image_size, &valid, &match) == BW_OK);
    CHECK(domain == 20);
    CHECK(image_size == 20);
    CHECK(valid == 1);
    CHECK(match == 1);
    CHECK(bw_verify_bijectivity(10, 2, &domain, &image_size, &valid, &match) ==
          BW_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("cone endpoints") {
    char* value = nullptr;
    char* note = nullptr;
    int closed_form = 0;
    REQUIRE(bw_cone_count("QuarterPlane", 0, 0, 4, &value, &closed_form, &note) == BW_OK);
    CHECK(take(value) == "6");
    CHECK(closed_form == 1);
    CHECK(take(note).empty());

    REQUIRE(bw_cone_count("VHalfPlane", 1, 1, 2, &value, &closed_form, nullptr) == BW_OK);
    CHECK(take(value) == "1");
    CHECK(closed_form == 0);

    CHECK(bw_cone_count("G0_3", 0, 0, 2, &value, &closed_form, &note) ==
          BW_ERROR_INVALID_ARGUMENT);
    CHECK(bw_cone_count("QuarterPlane", 0, -1, 2, &value, &closed_form, &note) ==
          BW_ERROR_DOMAIN);
}

TEST_CASE("verification report endpoints") {
    bw_verify_bounds bounds;
    bw_verify_bounds_init(&bounds);
    CHECK(bounds.m_max == -1);
    CHECK(bounds.mc_samples == -1);
    bounds.n_max = 3;

    bw_report* report = nullptr;
    REQUIRE(bw_verify("lemma", &bounds, &report) == BW_OK);
    size_t size = 0;
    REQUIRE(bw_report_size(report, &size) == BW_OK);
    CHECK(size == 10);
    size_t failures = 0;
    REQUIRE(bw_report_failures(report, &failures) == BW_OK);
    CHECK(failures == 0);

    char* name = nullptr;
    char* lhs = nullptr;
    char* rhs = nullptr;
    int pass = 0;
    REQUIRE(bw_report_name(report, 0, &name) == BW_OK);
    CHECK(!take(name).empty());
    REQUIRE(bw_report_lhs(report, 0, &lhs) == BW_OK);
    CHECK(!take(lhs).empty());
    REQUIRE(bw_report_rhs(report, 0, &rhs) == BW_OK);
    CHECK(!take(rhs).empty());
    REQUIRE(bw_report_pass(report, 0, &pass) == BW_OK);
    CHECK(pass == 1);
    CHECK(bw_report_name(report, size, &name) == BW_ERROR_INVALID_ARGUMENT);
    bw_report_free(report);

    CHECK(bw_verify("nonsense", nullptr, &report) == BW_ERROR_INVALID_ARGUMENT);

    bw_report* cells = nullptr;
    REQUIRE(bw_integrality_report(2, 3, 3, &cells) == BW_OK);
    REQUIRE(bw_report_size(cells, &size) == BW_OK);
    CHECK(size == 12);
    REQUIRE(bw_report_failures(cells, &failures) == BW_OK);
    CHECK(failures == 0);
    bw_report_free(cells);
    CHECK(bw_integrality_report(1, 3, 3, &cells) == BW_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("monte carlo endpoints") {
    double estimate = 0.0;
    double stderr_value = 0.0;
    REQUIRE(bw_mc_moment(2, 2, 1, 50000, 5, &estimate, &stderr_value) == BW_OK);
    CHECK(stderr_value > 0.0);
    CHECK(std::fabs(estimate - 2.0) <= 5.0 * stderr_value);

    double estimate2 = 0.0;
    double stderr2 = 0.0;
    REQUIRE(bw_mc_moment(2, 2, 1, 50000, 5, &estimate2, &stderr2) == BW_OK);
    CHECK(estimate == estimate2);
    CHECK(stderr_value == stderr2);

    REQUIRE(bw_mc_prob_within_unit(2, 2, 50000, 5, &estimate, &stderr_value) == BW_OK);
    CHECK(std::fabs(estimate - 1.0 / 3.0) <= 5.0 * stderr_value);

    CHECK(bw_mc_moment(1, 2, 1, 100, 5, &estimate, &stderr_value) ==
          BW_ERROR_INVALID_ARGUMENT);
    CHECK(bw_mc_moment(2, 2, 1, 0, 5, &estimate, &stderr_value) ==
          BW_ERROR_INVALID_ARGUMENT);
    CHECK(bw_mc_prob_within_unit(2, 0, 100, 5, &estimate, &stderr_value) ==
          BW_ERROR_INVALID_ARGUMENT);
}
