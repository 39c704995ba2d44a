#include <json.hpp>

#include "slab/cli.hpp"
#include "slab/errors.hpp"

namespace slab::cli {

namespace {

using json = nlohmann::json;

struct CommandName {
    Command cmd;
    const char* name;
};
constexpr CommandName kCommands[] = {{Command::Roots, "roots"},       {Command::OracleCheck, "oracle-check"},
                                     {Command::Spectrum, "spectrum"}, {Command::Mode, "mode"},
                                     {Command::Sweep, "sweep"},       {Command::Selftest, "selftest"}};

template <class T>
T get(const json& j, const char* key) {
    try {
        return j.get<T>();
    } catch (const json::exception&) {
        throw ConfigError(std::string("config key '") + key + "' has the wrong type");
    }
}

}  // namespace

Command parse_command(const std::string& name) {
    for (const auto& c : kCommands)
        if (name == c.name) return c.cmd;
    throw ConfigError("unknown command '" + name + "'");
}

const char* command_name(Command c) {
    for (const auto& e : kCommands)
        if (e.cmd == c) return e.name;
    return "?";
}

Format parse_format(const std::string& name) {
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    throw ConfigError("unknown format '" + name + "' (csv|json)");
}

void apply_json(RunConfig& cfg, const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("malformed JSON config: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config must be a JSON object");

    for (const auto& [key, val] : j.items()) {
        const char* k = key.c_str();
        if (key == "command") {
            const Command c = parse_command(get<std::string>(val, k));
            if (c != cfg.command)
                throw ConfigError(std::string("config command '") + command_name(c) + "' does not match '" +
                                  command_name(cfg.command) + "'");
        } else if (key == "variant") {
            cfg.variant = get<std::string>(val, k);
        } else if (key == "phases") {
            cfg.phases_pi = get<std::vector<double>>(val, k);
        } else if (key == "angles") {
            if (!val.is_object()) throw ConfigError("config key 'angles' must be an object");
            std::array<double, 4> a{};
            const char* names[4] = {"rho", "mu", "sigma", "nu"};
            for (const auto& [ak, av] : val.items()) {
                int idx = -1;
                for (int i = 0; i < 4; ++i)
                    if (ak == names[i]) idx = i;
                if (idx < 0) throw ConfigError("unknown key 'angles." + ak + "'");
            }
            for (int i = 0; i < 4; ++i) {
                if (!val.contains(names[i])) throw ConfigError(std::string("missing key 'angles.") + names[i] + "'");
                a[i] = get<double>(val.at(names[i]), names[i]);
            }
            cfg.angles_pi = a;
        } else if (key == "mass") {
            cfg.mass = get<double>(val, k);
        } else if (key == "field") {
            cfg.field = get<double>(val, k);
        } else if (key == "px") {
            cfg.px = get<double>(val, k);
        } else if (key == "energy") {
            cfg.energy = get<double>(val, k);
        } else if (key == "landau_level") {
            cfg.landau_level = get<int>(val, k);
        } else if (key == "half_width") {
            cfg.half_width = get<double>(val, k);
        } else if (key == "k") {
            cfg.k = get<double>(val, k);
        } else if (key == "k_min") {
            cfg.k_min = get<double>(val, k);
        } else if (key == "k_max") {
            cfg.k_max = get<double>(val, k);
        } else if (key == "root_selector") {
            cfg.root_selector = get<int>(val, k);
        } else if (key == "grid_points") {
            cfg.grid_points = get<int>(val, k);
        } else if (key == "sweep") {
            if (!val.is_object()) throw ConfigError("config key 'sweep' must be an object");
            for (const auto& [sk, sv] : val.items()) {
                if (sk == "axis") {
                    const auto axis = get<std::string>(sv, "sweep.axis");
                    if (axis == "half_width")
                        cfg.sweep_axis = SweepAxis::HalfWidth;
                    else if (axis == "field")
                        cfg.sweep_axis = SweepAxis::Field;
                    else
                        throw ConfigError("sweep.axis must be 'half_width' or 'field'");
                } else if (sk == "values") {
                    cfg.sweep_values = get<std::vector<double>>(sv, "sweep.values");
                } else {
                    throw ConfigError("unknown key 'sweep." + sk + "'");
                }
            }
        } else if (key == "y_points") {
            cfg.y_points = get<int>(val, k);
        } else if (key == "z_points") {
            cfg.z_points = get<int>(val, k);
        } else if (key == "output") {
            cfg.output_path = get<std::string>(val, k);
        } else if (key == "format") {
            cfg.format = parse_format(get<std::string>(val, k));
        } else if (key == "seed") {
            cfg.seed = get<std::uint64_t>(val, k);
        } else if (key == "draws") {
            cfg.draws = get<int>(val, k);
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
}

PhaseConfig make_phases(const RunConfig& cfg) {
    const VariantId v = VariantId::parse(cfg.variant);
    if (cfg.angles_pi) {
        if (!cfg.phases_pi.empty()) throw ConfigError("give either 'phases' or 'angles', not both");
        const auto& a = *cfg.angles_pi;
        return PhaseConfig(v, a[0] * kPi, a[1] * kPi, a[2] * kPi, a[3] * kPi);
    }
    std::vector<double> gens;
    for (double g : cfg.phases_pi) gens.push_back(g * kPi);
    if (gens.empty()) gens.assign(generator_count(v.family), 0.0);
    return PhaseConfig::from_generators(v, gens);
}

QuantizationProblem make_problem(const RunConfig& cfg) {
    const PhaseConfig ph = make_phases(cfg);
    QuantizationProblem pr{ph.variant(), ph};
    pr.mass = cfg.mass;
    pr.field = cfg.field;
    pr.px = cfg.px;
    if (cfg.energy)
        pr.parameterization = FixedEpsilon{*cfg.energy};
    else
        pr.parameterization = LandauLevel{cfg.landau_level};
    pr.half_width = cfg.half_width;
    if (!cfg.k_max) throw DomainError("k_max", "required for spectrum computations");
    pr.k_max = *cfg.k_max;
    pr.k_min = cfg.k_min.value_or(1e-6 * pr.k_max);
    pr.root_selector = cfg.root_selector;
    validate(pr);
    return pr;
}

}  // namespace slab::cli
