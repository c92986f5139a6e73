// Command-line surface for the graph-manifold ring pipeline.
//
// Exit codes: 0 success, 1 validation error, 2 parse error, 3 internal
// consistency failure (cross-pipeline mismatches; these indicate bugs).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "graphring/consum.hpp"
#include "graphring/homology.hpp"
#include "graphring/intersection.hpp"
#include "graphring/plumbing.hpp"
#include "graphring/randgen.hpp"
#include "graphring/report.hpp"
#include "graphring/trivector.hpp"

namespace {

using namespace graphring;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::uint64_t effective_seed(std::uint64_t cli_seed) {
    if (const char* env = std::getenv("GRAPHRING_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw validation_error("GRAPHRING_SEED must be an unsigned integer");
        }
    }
    return cli_seed;
}

struct Options {
    std::string input;
    std::string format = "table";
    std::uint64_t seed = 0;
    TreeBounds bounds;
};

void print_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

int run_homology(const Options& opt) {
    PlumbingGraph g = parse(read_input(opt.input));
    auto warnings = lint(g);
    print_warnings(warnings);
    H1Basis basis = h1_basis(g);
    auto surfaces = kernel_surfaces(g, basis);
    std::cout << (opt.format == "json"
                      ? homology_report_json(g, basis, surfaces, warnings)
                      : homology_report_text(g, basis, surfaces, warnings));
    if (opt.format == "json") std::cout << "\n";
    return 0;
}

int run_ring(const Options& opt) {
    PlumbingGraph g = parse(read_input(opt.input));
    print_warnings(lint(g));
    H1Basis basis = h1_basis(g);
    auto surfaces = kernel_surfaces(g, basis);
    ProductTable table = product_table(g, basis, surfaces);
    std::cout << (opt.format == "json" ? ring_report_json(table) : ring_report_text(table));
    if (opt.format == "json") std::cout << "\n";
    return 0;
}

int run_consum(const Options& opt) {
    PlumbingGraph g = parse(read_input(opt.input));
    print_warnings(lint(g));
    H1Basis basis = h1_basis(g);
    auto surfaces = kernel_surfaces(g, basis);
    RingPresentation pres = build_connected_sum(g, basis, surfaces);
    Theorem53Result check = check_theorem_5_3(g);
    if (!check.match) {
        // The two pipelines are independent; disagreement is a bug, not input error.
        std::cerr << "internal consistency failure: "
                  << check.first_mismatch.value_or("trivector mismatch") << "\n";
        return 3;
    }
    std::cout << (opt.format == "json" ? consum_report_json(pres, check)
                                       : consum_report_text(pres, check));
    if (opt.format == "json") std::cout << "\n";
    return 0;
}

int run_analyze(const Options& opt) {
    Form3 omega = Trivector::from_json(read_input(opt.input));
    SplitReport report;
    report.radical_basis = radical(omega);
    report.radical_dim = report.radical_basis.size();
    if (report.radical_dim == 0 && omega.dim() == 6) {
        report = rank3_split_dim6(omega);
    } else {
        report.verdict = SplitVerdict::not_applicable;
        report.certificate = report.radical_dim > 0
                                 ? "rank-3 stage skipped: nonzero radical"
                                 : "rank-3 stage applies only in dimension 6";
    }
    std::cout << (opt.format == "json" ? split_report_json(omega, report)
                                       : split_report_text(omega, report));
    if (opt.format == "json") std::cout << "\n";
    return 0;
}

int run_obstruct(const Options& opt) {
    Form3 omega = Trivector::from_json(read_input(opt.input));
    ObstructionVerdict v = obstruct(omega);
    std::cout << (opt.format == "json" ? obstruction_report_json(omega, v)
                                       : obstruction_report_text(omega, v));
    if (opt.format == "json") std::cout << "\n";
    return 0;
}

int run_normalize(const Options& opt) {
    RawGraph raw = parse_raw(read_input(opt.input));
    NormalizeResult result = normalize(raw);
    auto warnings = lint(result.graph);
    print_warnings(warnings);
    if (opt.format == "json") {
        std::cout << normalize_report_json(result, warnings) << "\n";
    } else {
        for (const auto& r : result.reductions) {
            std::cout << "# edge " << r.a << " " << r.b << " reduced to "
                      << (r.sign > 0 ? "+" : "-") << "J in " << r.steps.size()
                      << " step(s)\n";
        }
        if (result.resolved_self_loops > 0)
            std::cout << "# resolved " << result.resolved_self_loops << " self-loop(s)\n";
        std::cout << serialize_text(result.graph);
    }
    return 0;
}

int run_random_tree(const Options& opt) {
    PlumbingGraph g = random_tree(effective_seed(opt.seed), opt.bounds);
    std::cout << (opt.format == "json" ? serialize_json(g) + "\n" : serialize_text(g));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graphring: rational homology, intersection rings and cobordism "
                 "obstructions of graph manifolds given by decorated plumbing graphs"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub, bool with_input) {
        sub->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"json", "table"}))
            ->capture_default_str();
        if (with_input)
            sub->add_option("input", opt.input, "Graph/form document path, or - for stdin")
                ->required();
    };

    auto* homology = app.add_subcommand(
        "homology", "H_1(M;Q) basis, fiber expressions and kernel surfaces");
    add_common(homology, true);
    auto* ring = app.add_subcommand(
        "ring", "Intersection product table and its 3-form");
    add_common(ring, true);
    auto* consum = app.add_subcommand(
        "consum", "Connected-sum-of-rings presentation (orientable trees)");
    add_common(consum, true);
    auto* analyze = app.add_subcommand(
        "analyze-form", "Radical and rank-3 split decision for a 3-form");
    add_common(analyze, true);
    auto* obstructc = app.add_subcommand(
        "obstruct", "Tree-graph-manifold homology cobordism obstruction verdict");
    add_common(obstructc, true);
    auto* normalizec = app.add_subcommand(
        "normalize", "Resolve self-loops and reduce raw gluing matrices to +/-J");
    add_common(normalizec, true);
    auto* random_treec = app.add_subcommand(
        "random-tree", "Seed-reproducible random plumbing tree document");
    add_common(random_treec, false);
    random_treec->add_option("--seed", opt.seed, "PRNG seed (GRAPHRING_SEED overrides)")
        ->capture_default_str();
    random_treec->add_option("--max-nodes", opt.bounds.max_nodes)->capture_default_str();
    random_treec->add_option("--max-genus", opt.bounds.max_genus)->capture_default_str();
    random_treec->add_option("--max-fibers", opt.bounds.max_fibers)->capture_default_str();
    random_treec->add_option("--entry-bound", opt.bounds.entry_bound)->capture_default_str();
    random_treec->add_flag("--orientable-only", opt.bounds.orientable_only,
                           "Restrict bases to orientable surfaces");

    CLI11_PARSE(app, argc, argv);

    try {
        if (homology->parsed()) return run_homology(opt);
        if (ring->parsed()) return run_ring(opt);
        if (consum->parsed()) return run_consum(opt);
        if (analyze->parsed()) return run_analyze(opt);
        if (obstructc->parsed()) return run_obstruct(opt);
        if (normalizec->parsed()) return run_normalize(opt);
        if (random_treec->parsed()) return run_random_tree(opt);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const validation_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
