/// @file toric_cli.cpp
/// @brief Command-line driver: enumerate extensions, evaluate the rational
/// functions, search for flip sequences, and run the verification suites.
///
/// Exit status: 0 success, 1 verification failure (or "not equivalent"),
/// 2 input error, 3 resource cap exceeded.

#include <algorithm>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "toric/errors.hpp"
#include "toric/extensions.hpp"
#include "toric/greene.hpp"
#include "toric/io.hpp"
#include "toric/toric_poset.hpp"
#include "toric/verify.hpp"

namespace {

using namespace toric;

std::string word_to_string(const std::vector<int>& w) {
    std::ostringstream out;
    out << "(";
    for (size_t k = 0; k < w.size(); ++k) {
        if (k) out << ",";
        out << w[k];
    }
    out << ")";
    return out.str();
}

nlohmann::ordered_json rf_to_json(const RationalFunction& f) {
    nlohmann::ordered_json j;
    j["nvars"] = f.nvars();
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [monomial, coefficient] : f.numerator().terms()) {
        nlohmann::ordered_json term;
        term["coefficient"] = coefficient.str();
        term["exponents"] = monomial;
        terms.push_back(std::move(term));
    }
    j["numerator"] = std::move(terms);
    auto factors = nlohmann::ordered_json::array();
    for (const LinearFactor& factor : f.denominator()) {
        factors.push_back({factor.i, factor.j});
    }
    j["denominator"] = std::move(factors);
    return j;
}

struct ExtensionsArgs {
    std::string file;
    bool toric = false;
    ExtensionMethod method = ExtensionMethod::Recursive;
    bool method_given = false;
    int source = 0;
    bool source_given = false;
    bool count = false;
    size_t cap = kDefaultClassCap;
};

int run_extensions(const ExtensionsArgs& args) {
    const Quiver q = load_document(args.file).quiver;
    if (args.toric) {
        std::set<ToricTotalOrder> result;
        if (args.source_given) {
            if (args.method_given && args.method != ExtensionMethod::Partition) {
                throw input_error("--source applies only to --method partition");
            }
            result = ltor_partition(q, args.source, args.cap);
        } else {
            result = ltor(q, args.method, args.cap);
        }
        if (args.count) {
            std::cout << result.size() << "\n";
        } else {
            for (const ToricTotalOrder& w : result) std::cout << w.to_string() << "\n";
        }
    } else {
        if (args.source_given || args.method_given) {
            throw input_error("--source/--method apply only to --toric listings");
        }
        const std::vector<LinearExtension> result = linear_extensions(q);
        if (args.count) {
            std::cout << result.size() << "\n";
        } else {
            for (const LinearExtension& w : result) std::cout << word_to_string(w) << "\n";
        }
    }
    return 0;
}

struct PsiArgs {
    std::string file;
    bool toric = false;
    ExtensionMethod method = ExtensionMethod::Recursive;
    bool json = false;
};

int run_psi(const PsiArgs& args) {
    const Quiver q = load_document(args.file).quiver;
    const RationalFunction f = args.toric ? psi_tor(q, args.method) : psi_poset(q);
    if (args.json) {
        std::cout << rf_to_json(f).dump(2) << "\n";
    } else {
        std::cout << rf_to_string(f) << "\n";
    }
    return 0;
}

struct FlipArgs {
    std::string file_from;
    std::string file_to;
    int fix_source = 0;
    bool fix_source_given = false;
    size_t cap = kDefaultClassCap;
};

int run_flip(const FlipArgs& args) {
    const Quiver from = load_document(args.file_from).quiver;
    const Quiver to = load_document(args.file_to).quiver;
    if (from.underlying_graph() != to.underlying_graph()) {
        throw input_error("the two quivers orient different underlying graphs");
    }

    std::vector<int> forbidden;
    if (args.fix_source_given) {
        const int v = args.fix_source;
        for (const Quiver* q : {&from, &to}) {
            const auto src = sources(*q);
            if (std::find(src.begin(), src.end(), v) == src.end()) {
                throw input_error("--fix-source vertex must be a source of both quivers");
            }
        }
        // The fixed-source connectivity theorem: members of the class keeping
        // v a source are joined without flipping v or any of its neighbors.
        forbidden.push_back(v);
        for (int w : from.underlying_graph().neighbors(v)) forbidden.push_back(w);
    }

    const auto seq = flip_sequence(from, to, forbidden, args.cap);
    if (!seq) {
        std::cout << "not equivalent\n";
        return 1;
    }
    std::ostringstream out;
    for (size_t k = 0; k < seq->size(); ++k) {
        if (k) out << " ";
        out << (*seq)[k];
    }
    std::cout << out.str() << "\n";
    return 0;
}

struct VerifyArgs {
    std::string suite;
    SuiteOptions options;
    bool json = false;
};

int run_verify(const VerifyArgs& args) {
    std::vector<std::string> names;
    if (args.suite == "all") {
        names = suite_names();
    } else {
        names.push_back(args.suite);
    }

    bool all_pass = true;
    auto json_reports = nlohmann::ordered_json::array();
    for (const std::string& name : names) {
        const SuiteReport report = run_suite(name, args.options);
        all_pass = all_pass && report.pass;
        if (args.json) {
            json_reports.push_back(nlohmann::ordered_json::parse(report_to_json(report)));
        } else {
            std::cout << report_to_text(report);
        }
    }
    if (args.json) {
        if (args.suite == "all") {
            std::cout << json_reports.dump(2) << "\n";
        } else {
            std::cout << json_reports.front().dump(2) << "\n";
        }
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations on toric posets: flip classes, toric total "
                 "extensions, and their rational functions"};
    app.require_subcommand(1);

    const std::map<std::string, ExtensionMethod> method_names{
        {"brute", ExtensionMethod::BruteForce},
        {"partition", ExtensionMethod::Partition},
        {"recursive", ExtensionMethod::Recursive}};

    ExtensionsArgs ext_args;
    CLI::App* ext = app.add_subcommand(
        "extensions", "List linear extensions, or toric total extensions with --toric");
    ext->add_option("file", ext_args.file, "Quiver document (JSON)")->required();
    ext->add_flag("--toric", ext_args.toric, "Enumerate toric total extensions of the flip class");
    CLI::Option* ext_method =
        ext->add_option("--method", ext_args.method, "Enumeration route for --toric")
            ->transform(CLI::CheckedTransformer(method_names, CLI::ignore_case));
    CLI::Option* ext_source =
        ext->add_option("--source", ext_args.source,
                        "Partition route pivot vertex (implies --method partition)");
    ext->add_flag("--count", ext_args.count, "Print only the cardinality");
    ext->add_option("--cap", ext_args.cap, "Flip-class size cap");

    PsiArgs psi_args;
    CLI::App* psi = app.add_subcommand(
        "psi", "Evaluate the rational function of the poset, or of the toric poset with --toric");
    psi->add_option("file", psi_args.file, "Quiver document (JSON)")->required();
    psi->add_flag("--toric", psi_args.toric, "Evaluate the toric analogue over the flip class");
    psi->add_option("--method", psi_args.method, "Enumeration route for --toric")
        ->transform(CLI::CheckedTransformer(method_names, CLI::ignore_case));
    psi->add_flag("--json", psi_args.json, "Structured numerator/denominator output");

    FlipArgs flip_args;
    CLI::App* flp = app.add_subcommand(
        "flip", "Print a sink-source flip sequence turning one quiver into the other");
    flp->add_option("from", flip_args.file_from, "Quiver document (JSON)")->required();
    flp->add_option("to", flip_args.file_to, "Quiver document (JSON)")->required();
    CLI::Option* flip_fix = flp->add_option(
        "--fix-source", flip_args.fix_source,
        "Avoid flipping this vertex and its neighbors (it must be a source of both quivers)");
    flp->add_option("--cap", flip_args.cap, "Search cap on visited quivers");

    VerifyArgs verify_args;
    CLI::App* ver = app.add_subcommand("verify", "Run a verification suite");
    std::vector<std::string> allowed = suite_names();
    allowed.push_back("all");
    ver->add_option("suite", verify_args.suite, "Suite name")
        ->required()
        ->check(CLI::IsMember(allowed));
    ver->add_option("--seed", verify_args.options.seed, "Seed for generated instances");
    ver->add_option("--max-n", verify_args.options.max_n, "Vertex-count bound (0 = suite default)");
    ver->add_option("--samples", verify_args.options.samples,
                    "Random sample count (0 = suite default)");
    ver->add_option("--max-k", verify_args.options.max_k, "Double-chain bound k");
    ver->add_option("--max-j", verify_args.options.max_j, "Double-chain bound j");
    ver->add_option("--cap", verify_args.options.cap, "Flip-class size cap");
    ver->add_option("--method", verify_args.options.method, "Enumeration route under test")
        ->transform(CLI::CheckedTransformer(method_names, CLI::ignore_case));
    ver->add_flag("--json", verify_args.json, "Machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    ext_args.method_given = ext_method->count() > 0;
    ext_args.source_given = ext_source->count() > 0;
    flip_args.fix_source_given = flip_fix->count() > 0;

    try {
        if (ext->parsed()) return run_extensions(ext_args);
        if (psi->parsed()) return run_psi(psi_args);
        if (flp->parsed()) return run_flip(flip_args);
        if (ver->parsed()) return run_verify(verify_args);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const resource_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
