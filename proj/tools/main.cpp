#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hopfbundle/errors.hpp"
#include "hopfbundle/pointparse.hpp"
#include "hopfbundle/report.hpp"
#include "hopfbundle/suites.hpp"

namespace {

using hopfbundle::Report;

struct JsonSink {
    CLI::Option* option = nullptr;
    std::string path;

    // Returns false on an unwritable path.
    bool emit(const Report& report) const {
        if (option == nullptr || option->count() == 0) return true;
        std::string text = to_json(report).dump(2) + "\n";
        if (path.empty() || path == "-") {
            std::cout << text;
            return true;
        }
        std::ofstream out(path);
        out << text;
        return static_cast<bool>(out);
    }
};

void add_json_option(CLI::App* cmd, JsonSink& sink) {
    sink.option = cmd->add_option("--json", sink.path,
                                  "emit the JSON report (to stdout, or to the given file)")
                      ->expected(0, 1);
}

hopfbundle::Rational parse_lambda(const std::string& text) {
    hopfbundle::Rational lambda = hopfbundle::parse_rational(text);
    if (lambda <= 0 || lambda >= 1)
        throw hopfbundle::InvalidArgument("lambda must satisfy 0 < lambda < 1, got " + text);
    return lambda;
}

int finish(const Report& report, const JsonSink& sink) {
    std::cout << render_text(report);
    if (!sink.emit(report)) {
        std::cerr << "error: cannot write JSON report to '" << sink.path << "'\n";
        return 2;
    }
    return report.all_ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of a family of glued Hopf-surface bundles"};
    app.require_subcommand(1);

    long a = 0, b = 0, k = 0, degree = 0, zero_and_roots = 0;
    std::string lambda_text = "1/2";
    std::vector<std::string> point_args;
    JsonSink verify_sink, stabilizer_sink, components_sink, solve_sink;

    CLI::App* verify = app.add_subcommand("verify", "run the full verification battery");
    verify->add_option("a", a, "rotation order (a > 3)")->required();
    verify->add_option("b", b, "z-line twisting degree (b >= 3a)")->required();
    verify->add_option("--lambda", lambda_text, "contraction modulus p/q in (0,1)");
    add_json_option(verify, verify_sink);

    CLI::App* stab = app.add_subcommand("stabilizer", "stabilizer of a point configuration");
    stab->add_option("points", point_args,
                     "at least three distinct points: rationals, zeta(n,k) expressions, inf");
    stab->add_option("--zero-and-roots", zero_and_roots,
                     "use the configuration {0} plus the n-th roots of unity")
        ->excludes(stab->get_option("points"));
    add_json_option(stab, stabilizer_sink);

    CLI::App* components = app.add_subcommand("components", "component group of one member");
    components->add_option("a", a, "rotation order (a > 3)")->required();
    components->add_option("b", b, "z-line twisting degree (b >= 3a)")->required();
    components->add_option("--lambda", lambda_text, "contraction modulus p/q in (0,1)");
    add_json_option(components, components_sink);

    CLI::App* solve = app.add_subcommand("solve", "ansatz nullspace for one rotation index");
    solve->add_option("a", a, "rotation order (a > 3)")->required();
    solve->add_option("b", b, "z-line twisting degree (b >= 3a)")->required();
    solve->add_option("--k", k, "rotation index")->required();
    solve->add_option("--degree", degree, "degree bound for both ansatz polynomials (>= b - a)")
        ->required();
    solve->add_option("--lambda", lambda_text, "contraction modulus p/q in (0,1)");
    add_json_option(solve, solve_sink);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::CallForAllHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 2;
    }

    try {
        if (verify->parsed())
            return finish(hopfbundle::verify_suite(
                              hopfbundle::ManifoldSpec(a, b, parse_lambda(lambda_text))),
                          verify_sink);
        if (components->parsed())
            return finish(hopfbundle::components_suite(
                              hopfbundle::ManifoldSpec(a, b, parse_lambda(lambda_text))),
                          components_sink);
        if (solve->parsed())
            return finish(hopfbundle::solve_suite(
                              hopfbundle::ManifoldSpec(a, b, parse_lambda(lambda_text)), k,
                              degree),
                          solve_sink);

        // stabilizer
        std::vector<hopfbundle::ProjPoint> points;
        if (zero_and_roots > 0) {
            points.push_back(hopfbundle::ProjPoint::finite(
                hopfbundle::CycloNum(hopfbundle::Rational(0))));
            for (long i = 0; i < zero_and_roots; ++i)
                points.push_back(hopfbundle::ProjPoint::finite(
                    hopfbundle::CycloNum::root_of_unity(zero_and_roots, i)));
        } else {
            for (const std::string& text : point_args)
                points.push_back(hopfbundle::parse_point(text));
        }
        return finish(hopfbundle::stabilizer_suite(points), stabilizer_sink);
    } catch (const hopfbundle::ParseError& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 2;
    } catch (const hopfbundle::InvalidArgument& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 2;
    } catch (const std::exception& error) {
        std::cerr << "internal failure: " << error.what() << "\n";
        return 1;
    }
}
