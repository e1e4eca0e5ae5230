// Command-line front end. Talks to the library exclusively through the C
// interface and prints one machine-readable record per result line.
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "brickwalk.h"

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

struct Record {
    std::string command;
    Params parameters;
    bool has_value = false;
    std::string value;
    bool has_estimate = false;
    std::string estimate;
    std::string stderr_text;
    bool has_sides = false;
    std::string lhs;
    std::string rhs;
    std::string note;
    std::string provenance;
};

std::string fmt_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

std::string take_string(char* text) {
    std::string out = text == nullptr ? std::string() : std::string(text);
    bw_string_free(text);
    return out;
}

[[noreturn]] void fail_with_last_error() {
    std::cerr << "error: " << bw_last_error() << "\n";
    std::exit(2);
}

void require_ok(bw_status status) {
    if (status != BW_OK) {
        fail_with_last_error();
    }
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (const char c : field) {
        if (c == '"') {
            out += "\"\"";
        } else {
            out += c;
        }
    }
    out += "\"";
    return out;
}

class Emitter {
public:
    explicit Emitter(std::string format) : format_(std::move(format)) {}

    void emit(const Record& record) {
        if (format_ == "csv") {
            emit_csv(record);
        } else {
            emit_json(record);
        }
    }

private:
    void emit_json(const Record& record) {
        nlohmann::ordered_json row;
        row["command"] = record.command;
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (const auto& [key, value] : record.parameters) {
            params[key] = value;
        }
        row["parameters"] = params;
        if (record.has_value) {
            row["value"] = record.value;
        }
        if (record.has_estimate) {
            row["estimate"] = record.estimate;
            row["stderr"] = record.stderr_text;
        }
        if (record.has_sides) {
            row["lhs"] = record.lhs;
            row["rhs"] = record.rhs;
        }
        if (!record.note.empty()) {
            row["note"] = record.note;
        }
        row["provenance"] = record.provenance;
        std::cout << row.dump() << "\n";
    }

    void emit_csv(const Record& record) {
        if (!header_written_) {
            std::cout << "command,parameters,value,estimate,stderr,provenance\n";
            header_written_ = true;
        }
        std::string params;
        for (const auto& [key, value] : record.parameters) {
            if (!params.empty()) {
                params += ";";
            }
            params += key + "=" + value;
        }
        if (record.has_sides) {
            params += ";lhs=" + record.lhs + ";rhs=" + record.rhs;
        }
        if (!record.note.empty()) {
            params += ";note=" + record.note;
        }
        std::cout << csv_escape(record.command) << "," << csv_escape(params) << ","
                  << csv_escape(record.has_value ? record.value : std::string()) << ","
                  << csv_escape(record.has_estimate ? record.estimate : std::string()) << ","
                  << csv_escape(record.has_estimate ? record.stderr_text : std::string()) << ","
                  << csv_escape(record.provenance) << "\n";
    }

    std::string format_;
    bool header_written_ = false;
};

bool starts_with(const std::string& text, const char* prefix) {
    return text.rfind(prefix, 0) == 0;
}

bool contains(const std::string& text, const char* needle) {
    return text.find(needle) != std::string::npos;
}

// Presentation-only tag describing which oracle a check row leaned on.
std::string check_provenance(const std::string& name) {
    if (starts_with(name, "mc ")) {
        return "monte_carlo";
    }
    if (starts_with(name, "rewrite trace") || starts_with(name, "bijectivity")) {
        return "bijection";
    }
    if (contains(name, "closed form") || contains(name, "inversion") ||
        contains(name, "reflection difference")) {
        return "closed_form";
    }
    if (starts_with(name, "w4 ") || contains(name, "integral") ||
        contains(name, "super_ballot")) {
        return "matrix";
    }
    return "brute_force";
}

bw_verify_bounds parse_bounds(const std::string& text) {
    bw_verify_bounds bounds;
    bw_verify_bounds_init(&bounds);
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t stop = text.find(',', start);
        if (stop == std::string::npos) {
            stop = text.size();
        }
        const std::string item = text.substr(start, stop - start);
        start = stop + 1;
        if (item.empty()) {
            continue;
        }
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos) {
            std::cerr << "error: bounds entry '" << item << "' is not key=value\n";
            std::exit(2);
        }
        const std::string key = item.substr(0, eq);
        const std::string value_text = item.substr(eq + 1);
        long long value = 0;
        try {
            std::size_t used = 0;
            value = std::stoll(value_text, &used);
            if (used != value_text.size()) {
                throw std::invalid_argument(value_text);
            }
        } catch (const std::exception&) {
            std::cerr << "error: bounds value '" << value_text << "' is not an integer\n";
            std::exit(2);
        }
        if (key == "m") {
            bounds.m_max = static_cast<int>(value);
        } else if (key == "n") {
            bounds.n_max = static_cast<int>(value);
        } else if (key == "len") {
            bounds.len_max = static_cast<int>(value);
        } else if (key == "samples") {
            bounds.mc_samples = value;
        } else if (key == "seeds") {
            bounds.mc_seeds = static_cast<int>(value);
        } else {
            std::cerr << "error: unknown bounds key '" << key
                      << "' (expected m, n, len, samples, seeds)\n";
            std::exit(2);
        }
    }
    return bounds;
}

std::string join_ints(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += " ";
        }
        out += std::to_string(values[i]);
    }
    return out;
}

int run_moments(const std::string& nu, int m, int n_max, Emitter& emitter) {
    for (int n = 0; n <= n_max; ++n) {
        char* text = nullptr;
        require_ok(bw_moment_even(nu.c_str(), m, n, &text));
        Record record;
        record.command = "moments";
        record.parameters = {{"nu", nu}, {"m", std::to_string(m)}, {"n", std::to_string(n)}};
        record.has_value = true;
        record.value = take_string(text);
        record.provenance = "matrix";
        emitter.emit(record);
    }
    return 0;
}

int run_count(const std::string& family, const std::vector<int>& end, int length,
              Emitter& emitter) {
    const std::vector<int> start(end.size(), 0);
    char* text = nullptr;
    require_ok(bw_count_paths(family.c_str(), start.data(), end.data(),
                              static_cast<int>(end.size()), length, &text));
    Record record;
    record.command = "count";
    record.parameters = {{"family", family},
                         {"end", join_ints(end)},
                         {"length", std::to_string(length)}};
    record.has_value = true;
    record.value = take_string(text);
    record.provenance = "brute_force";
    emitter.emit(record);
    return 0;
}

int run_biject(const std::string& word, Emitter& emitter) {
    char* image = nullptr;
    int peaks = 0;
    require_ok(bw_motzkin_to_dyck(word.c_str(), &image, &peaks));

    Record record;
    record.command = "biject";
    record.parameters = {{"word", word}, {"output", "image"}};
    record.has_value = true;
    record.value = take_string(image);
    record.provenance = "bijection";
    emitter.emit(record);

    record.parameters = {{"word", word}, {"output", "peaks"}};
    record.value = std::to_string(peaks);
    emitter.emit(record);
    return 0;
}

int run_cone(const std::string& family, int i, int j, int length, Emitter& emitter) {
    char* value = nullptr;
    char* note = nullptr;
    int closed_form = 0;
    require_ok(bw_cone_count(family.c_str(), i, j, length, &value, &closed_form, &note));
    Record record;
    record.command = "cone";
    record.parameters = {{"family", family},
                         {"i", std::to_string(i)},
                         {"j", std::to_string(j)},
                         {"length", std::to_string(length)}};
    record.has_value = true;
    record.value = take_string(value);
    record.note = take_string(note);
    record.provenance = closed_form != 0 ? "closed_form" : "brute_force";
    emitter.emit(record);
    return 0;
}

int run_verify(const std::string& suite, const std::string& bounds_text, Emitter& emitter) {
    const bw_verify_bounds bounds = parse_bounds(bounds_text);
    bw_report* report = nullptr;
    require_ok(bw_verify(suite.c_str(), &bounds, &report));

    size_t size = 0;
    require_ok(bw_report_size(report, &size));
    size_t failures = 0;
    require_ok(bw_report_failures(report, &failures));

    for (size_t index = 0; index < size; ++index) {
        char* name = nullptr;
        char* lhs = nullptr;
        char* rhs = nullptr;
        int pass = 0;
        require_ok(bw_report_name(report, index, &name));
        require_ok(bw_report_lhs(report, index, &lhs));
        require_ok(bw_report_rhs(report, index, &rhs));
        require_ok(bw_report_pass(report, index, &pass));

        Record record;
        record.command = "verify";
        record.parameters = {{"suite", suite}, {"check", take_string(name)}};
        record.has_value = true;
        record.value = pass != 0 ? "PASS" : "FAIL";
        record.has_sides = true;
        record.lhs = take_string(lhs);
        record.rhs = take_string(rhs);
        record.provenance = check_provenance(record.parameters[1].second);
        emitter.emit(record);
    }
    bw_report_free(report);

    std::cerr << size << " checks, " << failures << " failures\n";
    return failures == 0 ? 0 : 1;
}

int run_mc_moment(int dimension, int steps, int n, long long samples, std::uint64_t seed,
                  Emitter& emitter) {
    double estimate = 0.0;
    double stderr_value = 0.0;
    require_ok(bw_mc_moment(dimension, steps, n, samples, seed, &estimate, &stderr_value));
    Record record;
    record.command = "mc";
    record.parameters = {{"quantity", "moment"},
                         {"dim", std::to_string(dimension)},
                         {"steps", std::to_string(steps)},
                         {"n", std::to_string(n)},
                         {"samples", std::to_string(samples)},
                         {"seed", std::to_string(seed)}};
    record.has_estimate = true;
    record.estimate = fmt_double(estimate);
    record.stderr_text = fmt_double(stderr_value);
    record.provenance = "monte_carlo";
    emitter.emit(record);
    return 0;
}

int run_mc_prob(int dimension, int steps, long long samples, std::uint64_t seed,
                Emitter& emitter) {
    double estimate = 0.0;
    double stderr_value = 0.0;
    require_ok(bw_mc_prob_within_unit(dimension, steps, samples, seed, &estimate,
                                      &stderr_value));
    Record record;
    record.command = "mc";
    record.parameters = {{"quantity", "prob_within_unit"},
                         {"dim", std::to_string(dimension)},
                         {"steps", std::to_string(steps)},
                         {"samples", std::to_string(samples)},
                         {"seed", std::to_string(seed)}};
    record.has_estimate = true;
    record.estimate = fmt_double(estimate);
    record.stderr_text = fmt_double(stderr_value);
    record.provenance = "monte_carlo";
    emitter.emit(record);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string("brickwalk ") + bw_version() +
                 " - exact and sampled statistics of short uniform random flights"};
    app.require_subcommand(1);

    std::string format = "json";
    const auto add_format = [&format](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
    };

    // moments
    std::string moments_nu;
    int moments_m = 0;
    int moments_nmax = 0;
    CLI::App* moments = app.add_subcommand(
        "moments", "exact even moments of an m-step flight from the transfer matrix");
    moments->add_option("--nu", moments_nu, "half-dimension parameter, e.g. 0, 1, 1/2")
        ->required();
    moments->add_option("--m", moments_m, "number of steps")->required();
    moments->add_option("--nmax", moments_nmax, "largest half moment order n")->required();
    add_format(moments);

    // count
    std::string count_family;
    std::vector<int> count_end;
    int count_length = 0;
    CLI::App* count = app.add_subcommand(
        "count", "exact walk count in a lattice family by exhaustive enumeration");
    count->add_option("--family", count_family,
                      "family tag such as G0_2, G1_1, GHat1_3, VE_3 or a plane cone name "
                      "like QuarterPlane")
        ->required();
    count->add_option("--end", count_end, "endpoint coordinates")->required()->expected(1, 64);
    count->add_option("--len", count_length, "walk length")->required();
    add_format(count);

    // biject
    std::string biject_word;
    CLI::App* biject = app.add_subcommand(
        "biject", "rewrite a balanced U/D/H word into its peak-counted U/D image");
    biject->add_option("--word", biject_word, "input word over U, D, H (may be empty)")
        ->required();
    add_format(biject);

    // verify
    std::string verify_suite;
    std::string verify_bounds;
    CLI::App* verify = app.add_subcommand("verify", "run a named consistency suite");
    verify->add_option("suite", verify_suite,
                       "one of: theorems, lemma, bijection, cones, montecarlo, all")
        ->required();
    verify->add_option("--bounds", verify_bounds,
                       "comma list of key=value with keys m, n, len, samples, seeds");
    add_format(verify);

    // mc
    CLI::App* mc = app.add_subcommand("mc", "Monte Carlo estimates from unit-step flights");
    mc->require_subcommand(1);
    int mc_dim = 2;
    int mc_steps = 1;
    int mc_n = 1;
    long long mc_samples = 100000;
    std::uint64_t mc_seed = 0;

    CLI::App* mc_moment = mc->add_subcommand("moment", "even moment of the endpoint distance");
    mc_moment->add_option("--dim", mc_dim, "ambient dimension")->capture_default_str();
    mc_moment->add_option("--steps", mc_steps, "number of unit steps")->required();
    mc_moment->add_option("--n", mc_n, "half moment order (estimates distance^(2n))")
        ->required();
    mc_moment->add_option("--samples", mc_samples, "sample count")->capture_default_str();
    mc_moment->add_option("--seed", mc_seed, "random seed")->capture_default_str();
    add_format(mc_moment);

    CLI::App* mc_prob = mc->add_subcommand(
        "prob", "probability that the flight ends strictly inside the unit ball");
    mc_prob->add_option("--dim", mc_dim, "ambient dimension")->capture_default_str();
    mc_prob->add_option("--steps", mc_steps, "number of unit steps")->required();
    mc_prob->add_option("--samples", mc_samples, "sample count")->capture_default_str();
    mc_prob->add_option("--seed", mc_seed, "random seed")->capture_default_str();
    add_format(mc_prob);

    // cone
    std::string cone_family;
    int cone_i = 0;
    int cone_j = 0;
    int cone_length = 0;
    CLI::App* cone = app.add_subcommand(
        "cone", "walk count to an endpoint of a plane cone, by closed form when one applies");
    cone->add_option("--family", cone_family,
                     "BrickPlane, HHalfPlane, VHalfPlane, ReflVHalfPlane, QuarterPlane "
                     "or ReflQuarterPlane")
        ->required();
    cone->add_option("--i", cone_i, "horizontal endpoint coordinate")->capture_default_str();
    cone->add_option("--j", cone_j, "vertical endpoint coordinate")->capture_default_str();
    cone->add_option("--len", cone_length, "walk length")->required();
    add_format(cone);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error);
        return code == 0 ? 0 : 2;
    }

    Emitter emitter(format);
    if (moments->parsed()) {
        return run_moments(moments_nu, moments_m, moments_nmax, emitter);
    }
    if (count->parsed()) {
        return run_count(count_family, count_end, count_length, emitter);
    }
    if (biject->parsed()) {
        return run_biject(biject_word, emitter);
    }
    if (verify->parsed()) {
        return run_verify(verify_suite, verify_bounds, emitter);
    }
    if (mc->parsed()) {
        if (mc_moment->parsed()) {
            return run_mc_moment(mc_dim, mc_steps, mc_n, mc_samples, mc_seed, emitter);
        }
        return run_mc_prob(mc_dim, mc_steps, mc_samples, mc_seed, emitter);
    }
    if (cone->parsed()) {
        return run_cone(cone_family, cone_i, cone_j, cone_length, emitter);
    }
    std::cerr << "error: no subcommand selected\n";
    return 2;
}
