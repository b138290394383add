// hexcut — topological indices of benzenoid systems from the boundary cycle.
#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Topological indices of benzenoid systems in boundary time"};
    app.require_subcommand(1);

    hexcut::cli::ComputeOptions compute;
    CLI::App* c = app.add_subcommand("compute", "Compute all indices of one input");
    c->add_option("--input", compute.input_path, "Input file")->required();
    c->add_option("--format", compute.format, "auto | hexlist | hexbound");
    c->add_option("--method", compute.method, "fast | oracle");
    c->add_option("--out", compute.out_path, "Write the JSON report here (default stdout)");
    c->add_flag("--parallel", compute.parallel, "Sweep the three directions concurrently");

    hexcut::cli::CheckOptions check;
    CLI::App* k = app.add_subcommand("check", "Cross-check fast pipeline against the oracle");
    k->add_option("--input", check.input_path, "Input file");
    k->add_option("--format", check.format, "auto | hexlist | hexbound");
    k->add_option("--corpus", check.corpus,
                  "Family specs, e.g. circumcoronene:2 or random:30:7 (repeatable)");
    k->add_flag("--corrupt-fast", check.corrupt_fast, "Test hook: perturb the fast result")
        ->group(""); // hidden

    hexcut::cli::GenOptions gen;
    CLI::App* g = app.add_subcommand("gen", "Generate a benzenoid family member");
    g->add_option("--family", gen.family,
                  "single | linear_chain | parallelogram | triangulene | circumcoronene | random")
        ->required();
    g->add_option("--params", gen.params, "Comma-separated integer parameters");
    g->add_option("--seed", gen.seed, "Seed for the random family");
    g->add_option("--out", gen.out_path, "HEXLIST output path")->required();
    g->add_option("--boundary", gen.boundary_path, "Also write a HEXBOUND file here");

    hexcut::cli::BenchOptions bench;
    CLI::App* b = app.add_subcommand("bench", "Time the fast pipeline across sizes");
    b->add_option("--family", bench.family, "Parametric family (default circumcoronene)");
    b->add_option("--k-list", bench.k_list, "Comma-separated parameter list");
    b->add_option("--reps", bench.reps, "Measured repetitions per size");
    b->add_option("--csv", bench.csv_path, "CSV output path (default stdout)");

    hexcut::cli::RenderOptions render;
    CLI::App* r = app.add_subcommand("render", "Render the benzenoid and its cuts as SVG");
    r->add_option("--input", render.input_path, "Input file")->required();
    r->add_option("--format", render.format, "auto | hexlist | hexbound");
    r->add_option("--direction", render.direction, "1 | 2 | 3 | all");
    r->add_option("--out", render.out_path, "SVG output path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (c->parsed()) return hexcut::cli::cmd_compute(compute);
        if (k->parsed()) return hexcut::cli::cmd_check(check);
        if (g->parsed()) return hexcut::cli::cmd_gen(gen);
        if (b->parsed()) return hexcut::cli::cmd_bench(bench);
        if (r->parsed()) return hexcut::cli::cmd_render(render);
    } catch (const hexcut::Error& e) {
        std::cerr << "hexcut: " << e.what() << "\n";
        return hexcut::cli::exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "hexcut: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
