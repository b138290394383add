// commands.hpp — implementations behind the hexcut subcommands, separated
// from argument parsing so tests can drive them in-process.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hexcut/errors.hpp"

namespace hexcut::cli {

// 2 = parse/validation, 3 = oracle bound exceeded, 4 = overflow.
int exit_code_for(const Error& error);

struct ComputeOptions {
    std::string input_path;
    std::string format = "auto"; // auto | hexlist | hexbound
    std::string method = "fast"; // fast | oracle
    std::string out_path;        // empty = stdout
    bool parallel = false;
};
int cmd_compute(const ComputeOptions& opts);

struct CheckOptions {
    std::string input_path;           // one input file ...
    std::string format = "auto";
    std::vector<std::string> corpus;  // ... or family specs
    bool corrupt_fast = false;        // test hook: perturb the fast result
};
int cmd_check(const CheckOptions& opts);

struct GenOptions {
    std::string family;
    std::string params; // comma-separated integers
    std::uint64_t seed = 0;
    std::string out_path;
    std::string boundary_path; // optional HEXBOUND output
};
int cmd_gen(const GenOptions& opts);

struct BenchOptions {
    std::string family = "circumcoronene";
    std::string k_list = "16,32,64,128,256";
    int reps = 5;
    std::string csv_path;
};
int cmd_bench(const BenchOptions& opts);

struct RenderOptions {
    std::string input_path;
    std::string format = "auto";
    std::string direction = "all"; // 1 | 2 | 3 | all
    std::string out_path;
};
int cmd_render(const RenderOptions& opts);

} // namespace hexcut::cli
