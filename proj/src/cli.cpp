#include "selfinv/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "selfinv/disc.hpp"
#include "selfinv/json_io.hpp"
#include "selfinv/roots.hpp"
#include "selfinv/sweep.hpp"
#include "selfinv/symfunc.hpp"
#include "selfinv/transform.hpp"

namespace selfinv::cli {

namespace {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string slurp(std::istream& in) {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_input(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") return slurp(in);
    std::ifstream file(path);
    if (!file) throw IoError("cannot open " + path);
    return slurp(file);
}

SelfInversiveForm expect_self_inversive(const json::Json& j) {
    auto form = json::decode_form(j);
    if (!std::holds_alternative<SelfInversiveForm>(form)) {
        throw json::ParseError("expected a self-inversive form with \"space\" and \"zeta\"");
    }
    return std::get<SelfInversiveForm>(std::move(form));
}

RealBinaryForm expect_real(const json::Json& j) {
    auto form = json::decode_form(j);
    if (!std::holds_alternative<RealBinaryForm>(form)) {
        throw json::ParseError("expected a real binary form with \"coeffs\"");
    }
    return std::get<RealBinaryForm>(std::move(form));
}

SelfInversiveForm validated(SelfInversiveForm form) {
    if (!validate(form)) {
        const bool anti = form.space == SpaceTag::B && form.n % 2 == 1;
        throw ValidationError(std::string("zeta violates ") +
                              (anti ? "zeta_k = -conj(zeta_{n+1-k})" : "zeta_k = conj(zeta_{n+1-k})"));
    }
    return form;
}

std::vector<double> parse_angles(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw json::ParseError("malformed angle: " + item);
        }
        if (used != item.size()) throw json::ParseError("malformed angle: " + item);
        out.push_back(v);
    }
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Self-inversive binary forms: conversions, discriminants and root counts", "selfinv"};
    app.require_subcommand(1);

    std::string input_path;
    double tol = 1e-8;

    auto* convert = app.add_subcommand("convert", "Map a form between A/B and real binary forms");
    std::string direction;
    convert->add_option("direction", direction, "a-to-real | real-to-a | b-to-real | real-to-b")
        ->required()
        ->check(CLI::IsMember({"a-to-real", "real-to-a", "b-to-real", "real-to-b"}));

    auto* disc = app.add_subcommand("disc", "Discriminant of a monic form via det H_n");
    bool oracle = false;
    bool deflate = false;
    disc->add_flag("--oracle", oracle, "Also compute the resultant discriminant and compare");
    disc->add_flag("--deflate", deflate, "Strip (T-U)^k before computing");

    auto* hankel = app.add_subcommand("hankel", "Dump the power-sum matrix H_n (or K_n)");
    auto* powersums = app.add_subcommand("powersums", "Dump h_m for m in [-n, n]");
    auto* roots = app.add_subcommand("roots", "Numerical roots of f(T,1) or g(X,1)");
    auto* classify = app.add_subcommand("classify", "Count unit-circle roots and check the sign law");

    auto* sweep = app.add_subcommand("sweep", "Grid of sgn det H_n over a slice of coefficient space");
    std::string output_path;
    unsigned threads = 0;
    sweep->add_option("-o,--output", output_path, "CSV output path")->required();
    sweep->add_option("--threads", threads, "Worker threads (0 = hardware)");

    auto* sample = app.add_subcommand("sample-w", "Monic A-form with all roots e^{i theta_j}");
    std::string angles_text;
    sample->add_option("--angles", angles_text, "Comma-separated angles summing to 0");

    for (auto* sub : {convert, disc, hankel, powersums, roots, classify, sweep, sample}) {
        sub->add_option("-i,--input", input_path, "Read JSON from a file instead of stdin");
    }
    for (auto* sub : {roots, classify, disc}) {
        sub->add_option("--tol", tol, "Tolerance for unit-circle classification");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return parse_failure;
    }

    try {
        auto emit = [&](const json::Json& j) { out << j.dump() << '\n'; };
        auto input = [&] { return json::parse(read_input(input_path, in)); };

        if (convert->parsed()) {
            const auto doc = input();
            if (direction == "a-to-real") {
                emit(json::encode(phi(validated(expect_self_inversive(doc)))));
            } else if (direction == "b-to-real") {
                emit(json::encode(psi(validated(expect_self_inversive(doc)))));
            } else if (direction == "real-to-a") {
                emit(json::encode(phi_inverse(expect_real(doc))));
            } else {
                const auto g = expect_real(doc);
                emit(json::encode(psi_inverse(g, parity_of(g.n))));
            }
        } else if (disc->parsed()) {
            DiscOptions options;
            options.oracle = oracle;
            options.deflate = deflate;
            options.tol = tol;
            emit(json::encode(discriminant_report(validated(expect_self_inversive(input())), options)));
        } else if (hankel->parsed()) {
            emit(json::encode(build_hankel(power_sums(validated(expect_self_inversive(input()))))));
        } else if (powersums->parsed()) {
            emit(json::encode(power_sums(validated(expect_self_inversive(input())))));
        } else if (roots->parsed()) {
            const auto form = json::decode_form(input());
            RootOptions options;
            options.classify_tol = tol;
            const auto coeffs = std::visit([](const auto& f) { return univariate(f); }, form);
            if (coeffs.front() == ComplexDouble(0.0)) {
                throw PreconditionError("roots: leading coefficient is zero");
            }
            emit(json::encode(find_roots(coeffs, options)));
        } else if (classify->parsed()) {
            emit(json::encode(classify_circle_roots(validated(expect_self_inversive(input())), tol)));
        } else if (sweep->parsed()) {
            const SweepSpec spec = parse_sweep_spec(input());
            const auto rows = run_sweep(spec, threads);
            std::ostringstream csv;
            write_sweep_csv(spec, rows, csv);
            std::ofstream file(output_path, std::ios::binary);
            if (!file) throw IoError("cannot write " + output_path);
            file << csv.str();
            if (!file.flush()) throw IoError("write failed: " + output_path);
        } else if (sample->parsed()) {
            std::vector<double> angles;
            if (!angles_text.empty()) {
                angles = parse_angles(angles_text);
            } else {
                const auto doc = input();
                if (!doc.is_object() || !doc.contains("angles") || !doc["angles"].is_array()) {
                    throw json::ParseError("sample-w: expected {\"angles\": [...]}");
                }
                for (const auto& a : doc["angles"]) {
                    if (!a.is_number()) throw json::ParseError("sample-w: angles must be numbers");
                    angles.push_back(a.get<double>());
                }
            }
            emit(json::encode(rationalize(sample_w(angles))));
        }
        return ok;
    } catch (const json::ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return parse_failure;
    } catch (const nlohmann::json::exception& e) {
        err << "parse error: " << e.what() << '\n';
        return parse_failure;
    } catch (const std::invalid_argument& e) {
        err << "parse error: " << e.what() << '\n';
        return parse_failure;
    } catch (const std::domain_error& e) {
        err << "validation error: " << e.what() << '\n';
        return validation_failure;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << '\n';
        return validation_failure;
    } catch (const PreconditionError& e) {
        err << "precondition failed: " << e.what() << '\n';
        return precondition_failure;
    } catch (const ConvergenceError& e) {
        err << "precondition failed: " << e.what() << '\n';
        return precondition_failure;
    } catch (const IoError& e) {
        err << "io error: " << e.what() << '\n';
        return io_failure;
    }
}

}  // namespace selfinv::cli
