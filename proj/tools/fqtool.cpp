// Command-line driver: exact computations for the one-dimensional family of
// genus-q Riemann surfaces with 4q automorphisms (q >= 5 prime) and for the
// group-algebra decomposition of their Jacobians.

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "fq/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for the genus-q surfaces with 4q automorphisms"};
    app.require_subcommand(1);

    fq::RunConfig cfg;
    cfg.digits = fq::default_digits_from_env();

    auto add_common = [&](CLI::App* sub, bool wants_q) {
        if (wants_q) sub->add_option("--q", cfg.q, "genus parameter, a prime >= 5");
        sub->add_option("--output", cfg.output_path, "write the JSON report to this file");
        sub->add_option("--digits", cfg.digits, "floating witness precision (>= 9)");
        sub->add_option("--seed", cfg.seed, "seed for all randomized checks");
    };

    auto* dec = app.add_subcommand("decompose", "group-algebra decomposition for one vector");
    dec->add_option("--vector", cfg.vector_text, "comma-separated entries, e.g. \"s, s r^8, r^5, r^7\"");
    add_common(dec, true);

    auto* vec = app.add_subcommand("vectors", "enumerate, classify or orbit the generating vectors");
    vec->add_option("--mode", cfg.mode, "enumerate | classify | orbits")
        ->check(CLI::IsMember({"enumerate", "classify", "orbits"}));
    add_common(vec, true);

    auto* cur = app.add_subcommand("curve", "the hyperelliptic model for one lambda (or symbolic)");
    cur->add_option("--lambda", cfg.lambda_text, "exact (\"1/3\", \"i\") or decimal (\"0.3+0.1i\")");
    add_common(cur, true);

    auto* cls = app.add_subcommand("classify-lambda", "admissible/real/orbit/j classification");
    cls->add_option("--lambda", cfg.lambda_text, "parameter to classify")->required();
    add_common(cls, false);

    auto* wim = app.add_subcommand("wiman", "exact check of the lambda = -1 limit identity");
    add_common(wim, true);

    auto* sie = app.add_subcommand("siegel-family", "invariant period-matrix family");
    sie->add_option("--gens", cfg.gens_path, "JSON file with symplectic generators");
    sie->add_option("--budget", cfg.budget, "witness search budget");
    add_common(sie, true);

    auto* shi = app.add_subcommand("shimura-dim", "dimension of the Shimura family");
    shi->add_option("--vector", cfg.vector_text, "generating vector (default sigma0)");
    add_common(shi, true);

    auto* rp = app.add_subcommand("reproduce-paper", "run every bundled check for one q");
    rp->add_option("--budget", cfg.budget, "witness search budget");
    add_common(rp, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    cfg.subcommand = app.get_subcommands().front()->get_name();
    return fq::run(cfg, std::cout, std::cerr);
}
