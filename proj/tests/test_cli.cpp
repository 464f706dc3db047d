#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "lplab/io.hpp"
#include "lplab/presets.hpp"
#include "lplab/run_config.hpp"

using namespace lplab;

namespace {

int run(RunConfig cfg, std::string* out_text = nullptr, std::string* err_text = nullptr) {
    std::ostringstream out, err;
    const int code = run_config(cfg, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

} // namespace

TEST_CASE("grid function roundtrip through files") {
    const GridFunction f = tent_fn(0.0, 2.0, 0.5, 1.5, 17);
    write_grid_function(f, "tmp_fn", 1.0);
    const LoadedFunction back = read_grid_function("tmp_fn");
    CHECK(back.s == 1.0);
    CHECK(back.fn.grid().shape == f.grid().shape);
    for (std::size_t i = 0; i < f.grid().size(); ++i)
        CHECK(back.fn.value(i) == f.value(i));  // exact, shortest-roundtrip format
}

TEST_CASE("point set roundtrip in both formats") {
    const DiscreteSet A(std::vector<Point>{{0.0, 1.0}, {2.5, -1.0}, {1.0 / 3.0, 0.1}});
    write_set_csv(A, "tmp_set.csv");
    write_set_json(A, "tmp_set.json");
    const DiscreteSet fromCsv = read_set("tmp_set.csv");
    const DiscreteSet fromJson = read_set("tmp_set.json");
    REQUIRE(fromCsv.size() == A.size());
    REQUIRE(fromJson.size() == A.size());
    for (std::size_t i = 0; i < A.size(); ++i)
        for (int j = 0; j < A.n; ++j) {
            CHECK(fromCsv.points[i][j] == A.points[i][j]);
            CHECK(fromJson.points[i][j] == A.points[i][j]);
        }
}

TEST_CASE("malformed input names the file and line") {
    {
        std::ofstream bad("tmp_bad.csv");
        bad << "1,2\nx,3\n";
    }
    try {
        read_set("tmp_bad.csv");
        FAIL("expected a parse error");
    } catch (const std::exception& e) {
        const std::string msg = e.what();
        CHECK(msg.find("tmp_bad.csv") != std::string::npos);
        CHECK(msg.find(":2") != std::string::npos);
    }
}

TEST_CASE("demo list prints the catalog") {
    RunConfig cfg;
    cfg.set("command", "demo");
    cfg.set("list", "true");
    std::string out;
    CHECK(run(cfg, &out) == 0);
    for (const auto& p : preset_catalog()) CHECK(out.find(p.name) != std::string::npos);
}

TEST_CASE("unknown names exit with a configuration error") {
    RunConfig cfg;
    cfg.set("command", "verify");
    cfg.set("target", "nope");
    std::string err;
    CHECK(run(cfg, nullptr, &err) == 1);
    CHECK(err.find("unknown verifier") != std::string::npos);

    RunConfig cfg2;
    cfg2.set("command", "demo");
    cfg2.set("preset", "nope");
    CHECK(run(cfg2, nullptr, &err) == 1);
    CHECK(err.find("unknown preset") != std::string::npos);
}

TEST_CASE("precondition violations exit 1 with the reason") {
    write_set_csv(DiscreteSet(std::vector<Point>{{0.0}, {1.0}}), "tmp_K.csv");
    write_set_csv(DiscreteSet(std::vector<Point>{{0.0}, {2.0}}), "tmp_L.csv");
    RunConfig cfg;
    cfg.set("command", "verify");
    cfg.set("target", "lp_bm");
    cfg.set("K", "tmp_K.csv");
    cfg.set("L", "tmp_L.csv");
    cfg.set("p", "0.5");
    std::string err;
    CHECK(run(cfg, nullptr, &err) == 1);
    CHECK(err.find("p must be >= 1") != std::string::npos);
}

TEST_CASE("verify on files produces a passing report and exit 0") {
    RunConfig cfg;
    cfg.set("command", "verify");
    cfg.set("target", "lp_bm");
    cfg.set("K", "tmp_K.csv");
    cfg.set("L", "tmp_L.csv");
    cfg.set("p", "2");
    cfg.set("lambda_resolution", "257");
    std::string out;
    CHECK(run(cfg, &out) == 0);
    CHECK(out.find("\"verdict\": \"holds") != std::string::npos);  // may be with tolerance
}

TEST_CASE("config file plus flag overrides") {
    {
        std::ofstream f("tmp_run.cfg");
        f << "# demo run\n";
        f << "command = demo\n";
        f << "preset = power-mean-monotone\n";
        f << "seed = 5\n";
    }
    RunConfig cfg = RunConfig::from_file("tmp_run.cfg");
    CHECK(cfg.get("preset") == "power-mean-monotone");
    cfg.set("format", "csv");  // flag override
    std::string out;
    CHECK(run(cfg, &out) == 0);
    CHECK(out.find("power_mean_monotone") != std::string::npos);
    CHECK(out.rfind("name,", 0) == 0);
}

TEST_CASE("environment seed beats the config file but not a flag") {
    RunConfig cfg;
    cfg.set("command", "demo");
    cfg.set("preset", "power-mean-monotone");
    cfg.set("seed", "5");

    setenv("LPLAB_SEED", "6", 1);
    std::string with_env;
    CHECK(run(cfg, &with_env) == 0);
    unsetenv("LPLAB_SEED");
    std::string with_file;
    CHECK(run(cfg, &with_file) == 0);
    CHECK(with_env.find("\"seed\": \"6\"") != std::string::npos);
    CHECK(with_file.find("\"seed\": \"5\"") != std::string::npos);

    setenv("LPLAB_SEED", "6", 1);
    RunConfig flagged = cfg;
    flagged.set("seed", "7");
    flagged.set("seed_source", "flag");
    std::string with_flag;
    CHECK(run(flagged, &with_flag) == 0);
    unsetenv("LPLAB_SEED");
    CHECK(with_flag.find("\"seed\": \"7\"") != std::string::npos);
}

TEST_CASE("sweep over p emits ordered csv rows") {
    RunConfig cfg;
    cfg.set("command", "sweep");
    cfg.set("target", "lp_bm");
    cfg.set("K", "tmp_K.csv");
    cfg.set("L", "tmp_L.csv");
    cfg.set("lambda_resolution", "257");
    cfg.set("format", "csv");
    cfg.set("range.p", "1,1.5,2,3");
    std::string out;
    CHECK(run(cfg, &out) == 0);
    // header + 4 rows, in range order
    int lines = 0;
    for (char c : out)
        if (c == '\n') ++lines;
    CHECK(lines == 5);
    CHECK(out.find("sweep_p") != std::string::npos);
    // the swept parameter is the last (alphabetically greatest) column
    const auto p1 = out.find(",1\n");
    const auto p3 = out.find(",3\n");
    CHECK(p1 != std::string::npos);
    CHECK(p3 != std::string::npos);
    CHECK(p1 < p3);

    RunConfig empty = cfg;
    empty.set("range.p", "");
    std::string err;
    CHECK(run(empty, nullptr, &err) == 1);
    CHECK(err.find("range") != std::string::npos);
}

TEST_CASE("identical runs are byte-identical") {
    RunConfig cfg;
    cfg.set("command", "demo");
    cfg.set("preset", "lift-volume-s2");
    cfg.set("seed", "11");
    std::string a, b;
    CHECK(run(cfg, &a) == 0);
    CHECK(run(cfg, &b) == 0);
    CHECK(a == b);
}

TEST_CASE("emit-profile writes the constructed function") {
    RunConfig cfg;
    cfg.set("command", "demo");
    cfg.set("preset", "gaussian-pl");
    cfg.set("emit_profile", "tmp_profile.csv");
    CHECK(run(cfg) == 0);
    std::ifstream in("tmp_profile.csv");
    REQUIRE(in.good());
    int rows = 0;
    std::string line;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 129);
}

TEST_CASE("report written to a file leaves a summary on stdout") {
    RunConfig cfg;
    cfg.set("command", "demo");
    cfg.set("preset", "power-mean-monotone");
    cfg.set("output", "tmp_report.json");
    std::string out;
    CHECK(run(cfg, &out) == 0);
    CHECK(out.find("power_mean_monotone: holds") != std::string::npos);
    std::ifstream in("tmp_report.json");
    REQUIRE(in.good());
    std::stringstream body;
    body << in.rdbuf();
    CHECK(body.str().find("\"verdict\": \"holds\"") != std::string::npos);
}
