#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <utility>

#include "slab/cli.hpp"

int main(int argc, char** argv) {
    using namespace slab::cli;

    CLI::App app{"Dirac slab boundary roots, spectra and modes"};
    app.require_subcommand(1);

    std::string config_path, output_path, format;
    std::uint64_t seed = 0;
    int draws = 0;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON configuration file");
        sub->add_option("--output", output_path, "Output file (stdout if omitted)");
        sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--seed", seed, "Seed for randomized checks");
        sub->add_option("--draws", draws, "Random draws per variant")->check(CLI::PositiveNumber);
    };
    const std::pair<const char*, const char*> commands[] = {
        {"roots", "closed-form roots next to the numeric oracle"},
        {"oracle-check", "randomized catalog/oracle comparison over all variants"},
        {"spectrum", "allowed longitudinal momenta in a k window"},
        {"mode", "spinor components and J^z on a (y, z) grid"},
        {"sweep", "spectra over half-width or field values"},
        {"selftest", "built-in property checks"},
    };
    for (const auto& [name, help] : commands) add_common(app.add_subcommand(name, help));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    RunConfig cfg;
    try {
        cfg.command = parse_command(app.get_subcommands().front()->get_name());
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw ConfigError("cannot read config '" + config_path + "'");
            std::stringstream ss;
            ss << in.rdbuf();
            apply_json(cfg, ss.str());
        }
        auto* sub = app.get_subcommands().front();
        if (sub->count("--output")) cfg.output_path = output_path;
        if (sub->count("--format")) cfg.format = parse_format(format);
        if (sub->count("--seed")) cfg.seed = seed;
        if (sub->count("--draws")) cfg.draws = draws;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    const RunResult res = run(cfg);
    if (!res.message.empty()) std::cerr << (res.exit_code == 0 ? "" : "error: ") << res.message << '\n';
    if (res.exit_code == 2 || res.exit_code == 3) return res.exit_code;

    if (cfg.output_path.empty()) {
        std::cout << res.output;
    } else {
        std::ofstream out(cfg.output_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write '" << cfg.output_path << "'\n";
            return 2;
        }
        out << res.output;
    }
    return res.exit_code;
}
