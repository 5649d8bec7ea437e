#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "supermin/commands.hpp"

using supermin::cli::RunConfig;

int main(int argc, char** argv) {
    CLI::App app{"Superminimal almost complex curves in S6: catalog, verification, degrees, sampling"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", cfg.input, "curve JSON file")->required();
    };
    auto add_out = [&](CLI::App* sub) { sub->add_option("--out,-o", cfg.output, "output file (default: stdout)"); };

    auto* gen = app.add_subcommand("gen", "write the catalog curve of type (k1, k2)");
    gen->add_option("--k1", cfg.k1, "first singularity parameter (>= 1)")->required();
    gen->add_option("--k2", cfg.k2, "second singularity parameter (>= 1)")->required();
    add_out(gen);

    auto* verify = app.add_subcommand("verify", "run every identity check; exit 1 on the first failure");
    add_input(verify);
    add_out(verify);

    auto* report = app.add_subcommand("report", "singularity types, degrees three ways, area");
    add_input(report);
    add_out(report);
    report->add_option("--tol", cfg.tol, "relative quadrature tolerance");
    report->add_option("--grid", cfg.grid, "quadrature resolution (>= 8)");

    auto* integrate = app.add_subcommand("integrate", "degree of one osculating curve by quadrature");
    add_input(integrate);
    add_out(integrate);
    integrate->add_option("--p", cfg.p, "osculating index 0..5");
    integrate->add_option("--tol", cfg.tol, "relative tolerance");
    integrate->add_option("--grid", cfg.grid, "quadrature resolution (>= 8)");

    auto* sample = app.add_subcommand("sample", "sample the surface in S6 on two charts");
    add_input(sample);
    add_out(sample);
    sample->add_option("--n", cfg.samples, "grid size per chart (>= 8)");
    sample->add_option("--format", cfg.format, "json, csv or obj");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return supermin::cli::kUsageError;
    }

    if (*gen) return supermin::cli::cmd_gen(cfg);
    if (*verify) return supermin::cli::cmd_verify(cfg);
    if (*report) return supermin::cli::cmd_report(cfg);
    if (*integrate) return supermin::cli::cmd_integrate(cfg);
    if (*sample) return supermin::cli::cmd_sample(cfg);
    return supermin::cli::kUsageError;
}
