#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "slab/cli.hpp"
#include "slab/errors.hpp"

using namespace slab;
using namespace slab::cli;
namespace fs = std::filesystem;

namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string c;
        while (std::getline(ls, c, ',')) cells.push_back(c);
        rows.push_back(cells);
    }
    return rows;
}

struct Tmp {
    fs::path dir;
    Tmp() {
        dir = fs::temp_directory_path() / ("slabdirac_test_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~Tmp() { fs::remove_all(dir); }
    fs::path write(const std::string& name, const std::string& text) const {
        std::ofstream(dir / name) << text;
        return dir / name;
    }
};

int exe(const std::string& args) {
    const std::string cmd = std::string(SLABDIRAC_EXE) + " " + args + " >/dev/null 2>&1";
    const int st = std::system(cmd.c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("spectrum csv merges both OnePhase(1) branches") {
    RunConfig cfg;
    cfg.command = Command::Spectrum;
    apply_json(cfg, R"js({"variant": "OnePhase(1)", "phases": [0.25], "field": 1.0, "half_width": 1.0, "k_max": 10.0})js");
    const auto r = run(cfg);
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_csv(r.output);
    REQUIRE(rows.size() == 7);
    CHECK(rows[0] == std::vector<std::string>{"branch", "root_index", "k", "epsilon", "re_root", "im_root", "residual"});
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double k = std::stod(rows[i][2]);
        CHECK(k == doctest::Approx(kPi * 0.5 * i).epsilon(1e-12));
        CHECK(std::stod(rows[i][6]) < 1e-9);
    }
}

TEST_CASE("number formatting round-trips") {
    for (double v : {kPi, 1.0 / 3.0, -2.5e-300, 0.0, 123456789.123456789}) CHECK(std::stod(format_double(v)) == v);
}

TEST_CASE("config parsing") {
    RunConfig cfg;
    CHECK_THROWS_AS(apply_json(cfg, "{not json"), ConfigError);
    CHECK_THROWS_AS(apply_json(cfg, R"js({"mass": 1, "bogus": 2})js"), ConfigError);
    CHECK_THROWS_AS(apply_json(cfg, R"js({"angles": {"rho": 0, "tau": 1}})js"), ConfigError);
    CHECK_THROWS_AS(apply_json(cfg, R"js({"mass": "heavy"})js"), ConfigError);
    CHECK_THROWS_AS(apply_json(cfg, R"js([1, 2])js"), ConfigError);
    cfg.command = Command::Spectrum;
    CHECK_THROWS_AS(apply_json(cfg, R"js({"command": "roots"})js"), ConfigError);
    CHECK_NOTHROW(apply_json(cfg, R"js({"command": "spectrum", "angles": {"rho": 0.5, "mu": 0.5, "sigma": 1, "nu": 1}})js"));
    REQUIRE(cfg.angles_pi.has_value());
    CHECK((*cfg.angles_pi)[2] == 1.0);
    CHECK(parse_command("oracle-check") == Command::OracleCheck);
    CHECK_THROWS_AS(parse_command("launch"), ConfigError);
    CHECK(parse_format("json") == Format::Json);

    RunConfig ph;
    ph.variant = "TwoPhase(2)";
    ph.phases_pi = {0.5, 1.0};
    const auto p = make_phases(ph);
    CHECK(p.rho() == doctest::Approx(kPi / 2));
    CHECK(p.sigma() == doctest::Approx(kPi));
}

TEST_CASE("exit codes and named fields") {
    RunConfig cfg;
    cfg.command = Command::Spectrum;
    cfg.mass = -1.0;
    cfg.k_max = 3.0;
    auto r = run(cfg);
    CHECK(r.exit_code == 3);
    CHECK(r.message.find("mass") != std::string::npos);
    CHECK(r.output.empty());

    cfg = RunConfig{};
    cfg.command = Command::Spectrum;
    r = run(cfg);
    CHECK(r.exit_code == 3);
    CHECK(r.message.find("k_max") != std::string::npos);

    cfg = RunConfig{};
    cfg.command = Command::Roots;
    cfg.variant = "OnePhase(3)";
    cfg.phases_pi = {0.3};
    cfg.energy = 2.0;
    cfg.k = 0.5;
    r = run(cfg);
    CHECK(r.exit_code == 0);
    cfg.variant = "SixPhase";
    r = run(cfg);
    CHECK(r.exit_code == 3);
    CHECK(r.message.find("variant") != std::string::npos);
}

TEST_CASE("roots side by side with the oracle") {
    RunConfig cfg;
    cfg.command = Command::Roots;
    cfg.variant = "FourPhase";
    cfg.phases_pi = {0.1, 0.7, 1.3, 1.9};
    cfg.energy = 2.2;
    cfg.k = 0.9;
    cfg.format = Format::Json;
    const auto r = run(cfg);
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["kind"] == "Lambda");
    CHECK(j["entries"].size() == 2);
    CHECK(j["k_roots"].size() == 4);
    CHECK(j["max_distance"].get<double>() < 1e-8);
}

TEST_CASE("oracle-check and mode commands") {
    RunConfig cfg;
    cfg.command = Command::OracleCheck;
    cfg.draws = 20;
    cfg.seed = 5;
    const auto a = run(cfg);
    CHECK(a.exit_code == 0);
    CHECK(a.message.find("max root deviation") != std::string::npos);
    CHECK(parse_csv(a.output).size() == 20);
    CHECK(run(cfg).output == a.output);

    RunConfig m;
    m.command = Command::Mode;
    m.variant = "OnePhase(2)";
    m.phases_pi = {0.4};
    m.field = 0.8;
    m.landau_level = 1;
    m.half_width = 2.0;
    m.k_max = 3.0;
    m.y_points = 5;
    m.z_points = 3;
    const auto r = run(m);
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_csv(r.output);
    CHECK(rows.size() == 16);
    CHECK(rows[0].back() == "jz");
}

TEST_CASE("sweep and selftest") {
    RunConfig cfg;
    cfg.command = Command::Sweep;
    apply_json(cfg, R"js({"variant": "OnePhase(1)", "field": 1.0, "k_max": 4.0, "root_selector": 0,
                        "sweep": {"axis": "half_width", "values": [1, 2]}})js");
    const auto r = run(cfg);
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_csv(r.output);
    CHECK(rows[0][0] == "sweep_value");
    CHECK(rows.size() == 1 + 1 + 2);

    RunConfig st;
    st.command = Command::Selftest;
    const auto s = run(st);
    CHECK(s.exit_code == 0);
    for (const auto& row : parse_csv(s.output))
        if (row[0] != "check") CHECK(row[1] == "PASS");
}

TEST_CASE("executable exit codes and output files") {
    const Tmp tmp;
    const auto out = tmp.dir / "out.csv";

    const auto bad = tmp.write("bad.json", "{\"variant\": ");
    CHECK(exe("spectrum --config " + bad.string() + " --output " + out.string()) == 2);
    CHECK(!fs::exists(out));

    const auto unknown = tmp.write("unknown.json", R"js({"k_max": 3, "colour": "red"})js");
    CHECK(exe("spectrum --config " + unknown.string() + " --output " + out.string()) == 2);
    CHECK(!fs::exists(out));

    const auto dom = tmp.write("dom.json", R"js({"k_max": 3, "half_width": -2})js");
    CHECK(exe("spectrum --config " + dom.string() + " --output " + out.string()) == 3);
    CHECK(!fs::exists(out));

    CHECK(exe("frobnicate") == 2);

    const auto good = tmp.write("good.json", R"js({"variant": "ThreePhase(4)", "phases": [0.2, 0.9, 1.4],
        "field": 0.5, "landau_level": 1, "half_width": 2.5, "k_max": 4})js");
    REQUIRE(exe("spectrum --config " + good.string() + " --output " + out.string()) == 0);
    const auto first = slurp(out);
    CHECK(first.rfind("branch,root_index,k,epsilon,re_root,im_root,residual", 0) == 0);
    const auto out2 = tmp.dir / "out2.csv";
    REQUIRE(exe("spectrum --config " + good.string() + " --output " + out2.string()) == 0);
    CHECK(slurp(out2) == first);

    const auto oc = tmp.dir / "oc.csv";
    CHECK(exe("oracle-check --seed 3 --draws 10 --output " + oc.string()) == 0);
    CHECK(fs::exists(oc));
}
