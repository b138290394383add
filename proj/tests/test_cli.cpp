#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "commands.hpp"
#include "helpers.hpp"
#include "hexcut/formats.hpp"
#include "report.hpp"

using namespace hexcut;
using namespace hexcut::testing;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

fs::path scratch_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("hexcut-test-" + std::to_string(static_cast<unsigned>(::getpid())));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

CliResult run_cli(const std::string& args) {
    fs::path out = scratch_dir() / "stdout.txt";
    fs::path err = scratch_dir() / "stderr.txt";
    std::string cmd = std::string(HEXCUT_CLI_PATH) + " " + args + " >" + out.string() + " 2>" +
                      err.string();
    int status = std::system(cmd.c_str());
    CliResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

fs::path write_scratch(const std::string& name, const std::string& content) {
    fs::path p = scratch_dir() / name;
    write_file(p.string(), content);
    return p;
}

} // namespace

TEST_CASE("compute: benzene hexlist report") {
    fs::path in = write_scratch("benzene.hexlist", "HEXLIST 1\n0 0\n");
    CliResult r = run_cli("compute --input " + in.string() + " --format hexlist");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["indices"]["szeged"] == "54");
    CHECK(j["indices"]["wiener"] == "27");
    CHECK(j["counts"]["vertices"] == 6);
    CHECK(j["method"] == "fast");
    CHECK(j["input"]["format"] == "hexlist");
    CHECK(j["input"]["hexagons"] == 1);
}

TEST_CASE("compute: oracle and fast agree, parallel too") {
    fs::path in = write_scratch("naph.hexlist", "HEXLIST 1\n0 0\n1 0\n");
    auto fast = nlohmann::json::parse(run_cli("compute --input " + in.string()).out);
    auto oracle = nlohmann::json::parse(
        run_cli("compute --input " + in.string() + " --method oracle").out);
    auto parallel = nlohmann::json::parse(
        run_cli("compute --input " + in.string() + " --parallel").out);
    CHECK(fast["indices"] == oracle["indices"]);
    CHECK(fast["indices"] == parallel["indices"]);
    CHECK(oracle["method"] == "oracle");
}

TEST_CASE("compute: hexbound input works with both methods") {
    BoundaryCycle z = from_hexagons(generate(parse_family_spec("random:9:4")));
    fs::path in = write_scratch("rand.hexbound", write_hexbound(emit_word(z)));
    auto fast = nlohmann::json::parse(run_cli("compute --input " + in.string()).out);
    auto oracle = nlohmann::json::parse(
        run_cli("compute --input " + in.string() + " --method oracle").out);
    CHECK(fast["indices"] == oracle["indices"]);
    CHECK(fast["input"]["format"] == "hexbound");
}

TEST_CASE("compute: holed input exits 2 mentioning HasHoles, no report") {
    fs::path in = write_scratch("ring.hexlist",
                                "HEXLIST 1\n1 0\n0 1\n-1 1\n-1 0\n0 -1\n1 -1\n");
    CliResult r = run_cli("compute --input " + in.string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("HasHoles") != std::string::npos);
    CHECK(r.out.empty());
}

TEST_CASE("compute: corrupted boundary word exits 2") {
    fs::path open_walk = write_scratch("bad.hexbound", "HEXBOUND 1\n-2 0\n501230\n");
    CliResult r = run_cli("compute --input " + open_walk.string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("NotClosed") != std::string::npos);

    fs::path bad_step = write_scratch("bad2.hexbound", "HEXBOUND 1\n-2 0\n501233\n");
    CliResult r2 = run_cli("compute --input " + bad_step.string());
    CHECK(r2.exit_code == 2);
    CHECK(r2.err.find("IllegalStep") != std::string::npos);
}

TEST_CASE("compute: oracle beyond the bound exits 3") {
    auto hexes = generate(parse_family_spec("circumcoronene:30")); // 5400 vertices
    fs::path in = write_scratch("h30.hexlist", write_hexlist(hexes));
    CliResult r = run_cli("compute --input " + in.string() + " --method oracle");
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("BoundExceeded") != std::string::npos);
    // the fast method has no such limit
    CHECK(run_cli("compute --input " + in.string()).exit_code == 0);
}

TEST_CASE("check: agreement, corpus, and the corruption hook") {
    fs::path in = write_scratch("benzene2.hexlist", "HEXLIST 1\n0 0\n");
    CliResult ok = run_cli("check --input " + in.string());
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("OK 6/6 indices agree") != std::string::npos);

    CliResult corpus = run_cli("check --corpus triangulene:3 --corpus random:14:3");
    CHECK(corpus.exit_code == 0);

    CliResult bad = run_cli("check --input " + in.string() + " --corrupt-fast");
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("szeged") != std::string::npos);
    CHECK(bad.out.find("MISMATCH") != std::string::npos);
}

TEST_CASE("gen: hexlist bytes, boundary output, errors") {
    fs::path out = scratch_dir() / "h2.hexlist";
    fs::path bnd = scratch_dir() / "h2.hexbound";
    CliResult r = run_cli("gen --family circumcoronene --params 2 --out " + out.string() +
                          " --boundary " + bnd.string());
    REQUIRE(r.exit_code == 0);
    std::string hexlist = slurp(out);
    CHECK(parse_hexlist(hexlist).size() == 7);
    CHECK(parse_word(parse_hexbound(slurp(bnd))).length() == 18);

    // reproducible bytes for the random family
    fs::path r1 = scratch_dir() / "r1.hexlist";
    fs::path r2 = scratch_dir() / "r2.hexlist";
    CHECK(run_cli("gen --family random --params 30 --seed 1 --out " + r1.string()).exit_code ==
          0);
    CHECK(run_cli("gen --family random --params 30 --seed 1 --out " + r2.string()).exit_code ==
          0);
    CHECK(slurp(r1) == slurp(r2));

    CliResult bad = run_cli("gen --family circumcoronene --params 0 --out " +
                            (scratch_dir() / "x.hexlist").string());
    CHECK(bad.exit_code == 2);
}

TEST_CASE("bench: exact row count and header") {
    fs::path csv = scratch_dir() / "bench.csv";
    CliResult r = run_cli("bench --k-list 2,3 --reps 3 --csv " + csv.string());
    REQUIRE(r.exit_code == 0);
    std::istringstream in(slurp(csv));
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "k,vertices,boundary,rep,phase,us");
    int rows = 0;
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 2 * 3 * 4); // k values x reps x phases
}

TEST_CASE("render: chord counts and invalid direction") {
    fs::path in = write_scratch("naph2.hexlist", "HEXLIST 1\n0 0\n1 0\n");
    fs::path svg = scratch_dir() / "naph.svg";
    CliResult r = run_cli("render --input " + in.string() + " --direction all --out " +
                          svg.string());
    REQUIRE(r.exit_code == 0);
    std::string body = slurp(svg);
    CHECK(body.find("<svg") != std::string::npos);

    CliResult bad = run_cli("render --input " + in.string() + " --direction 4 --out " +
                            svg.string());
    CHECK(bad.exit_code == 2);
}

TEST_CASE("report documents round trip through JSON") {
    for (const CorpusEntry& entry : small_corpus()) {
        CAPTURE(entry.name);
        IndexReport r = compute_all(from_hexagons(entry.hexes));
        r.timings.parse_us = 17; // arbitrary nonzero
        cli::ReportDocument doc = cli::make_document(r, "hexlist");
        cli::ReportDocument back =
            cli::document_from_json(nlohmann::json::parse(cli::to_json(doc).dump()));
        CHECK(back == doc);
    }
}

TEST_CASE("exit code mapping") {
    CHECK(cli::exit_code_for(Error(ErrorCode::HasHoles, "")) == 2);
    CHECK(cli::exit_code_for(Error(ErrorCode::IllegalStep, "")) == 2);
    CHECK(cli::exit_code_for(Error(ErrorCode::BoundExceeded, "")) == 3);
    CHECK(cli::exit_code_for(Error(ErrorCode::Overflow, "")) == 4);
}
