#include <json.hpp>

#include <cmath>
#include <sstream>

#include "slab/boundary.hpp"
#include "slab/catalog.hpp"
#include "slab/checks.hpp"
#include "slab/cli.hpp"
#include "slab/errors.hpp"
#include "slab/kernels.hpp"
#include "slab/modes.hpp"
#include "slab/transverse.hpp"

namespace slab::cli {

namespace {

using json = nlohmann::json;

json cjson(cplx z) { return json::array({z.real(), z.imag()}); }

std::string fmt_sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

json table_json(const SpectrumTable& t) {
    json rows = json::array();
    for (const auto& r : t.rows)
        rows.push_back({{"branch", r.branch},
                        {"root_index", r.root_index},
                        {"k", r.k},
                        {"epsilon", r.energy},
                        {"root", cjson(r.root)},
                        {"residual", r.residual}});
    return {{"rows", rows}, {"excluded", t.excluded}};
}

PhysicalParams point_params(const RunConfig& cfg) {
    if (!cfg.k) throw DomainError("k", "required for the roots command");
    const double eps = cfg.energy ? *cfg.energy : energy_from_landau(cfg.mass, *cfg.k, cfg.landau_level, cfg.field);
    return PhysicalParams({cfg.mass, eps, cfg.px, cfg.field, cfg.half_width, *cfg.k});
}

RunResult cmd_roots(const RunConfig& cfg) {
    const PhaseConfig ph = make_phases(cfg);
    const PhysicalParams params = point_params(cfg);
    const VariantId v = ph.variant();
    const RootSet rs = closed_form_roots(v, params, ph);
    const auto cat = rs.k_roots();
    const auto num = numeric_roots(quartic_from_samples(params, ph));
    if (num.size() != cat.size()) throw ConsistencyError("oracle found a different number of roots");
    const auto perm = best_pairing(cat, num);
    double worst = 0.0;
    for (std::size_t i = 0; i < cat.size(); ++i) worst = std::max(worst, std::abs(cat[i] - num[perm[i]]));
    const double tol = oracle_tolerance(v);

    // Parent entry of each K-root.
    std::vector<cplx> parent;
    for (const auto& e : rs.entries)
        for (int m = 0; m < e.multiplicity * (e.kind == RootKind::Lambda ? 2 : 1); ++m) parent.push_back(e.value);

    RunResult res;
    if (cfg.format == Format::Csv) {
        std::ostringstream os;
        os << "root_index,kind,re_entry,im_entry,re_k,im_k,re_oracle,im_oracle,distance\n";
        for (std::size_t i = 0; i < cat.size(); ++i) {
            const cplx o = num[perm[i]];
            os << i << ',' << (rs.kind == RootKind::K ? "K" : "Lambda") << ',' << format_double(parent[i].real()) << ','
               << format_double(parent[i].imag()) << ',' << format_double(cat[i].real()) << ','
               << format_double(cat[i].imag()) << ',' << format_double(o.real()) << ',' << format_double(o.imag())
               << ',' << format_double(std::abs(cat[i] - o)) << '\n';
        }
        res.output = os.str();
    } else {
        json entries = json::array();
        for (const auto& e : rs.entries) entries.push_back({{"value", cjson(e.value)}, {"multiplicity", e.multiplicity}});
        json kr = json::array(), orc = json::array();
        for (std::size_t i = 0; i < cat.size(); ++i) {
            kr.push_back(cjson(cat[i]));
            orc.push_back(cjson(num[perm[i]]));
        }
        res.output = json{{"variant", v.name()},
                          {"kind", rs.kind == RootKind::K ? "K" : "Lambda"},
                          {"entries", entries},
                          {"k_roots", kr},
                          {"oracle_roots", orc},
                          {"max_distance", worst},
                          {"unit_modulus_deviation", verify_unit_modulus(rs, 1.0).max_deviation}}
                         .dump(2) +
                     "\n";
    }
    if (!(worst < tol)) {
        res.exit_code = 4;
        res.message = "catalog and oracle disagree: max distance " + fmt_sci(worst);
    }
    return res;
}

RunResult cmd_oracle(const RunConfig& cfg) {
    if (cfg.draws < 1) throw DomainError("draws", "must be >= 1");
    const auto stats = oracle_check(cfg.seed, cfg.draws);
    double worst = 0.0;
    int failures = 0;
    RunResult res;
    std::ostringstream os;
    json arr = json::array();
    os << "variant,draws,failures,max_deviation,max_modulus_deviation,max_det_ratio\n";
    for (const auto& s : stats) {
        worst = std::max(worst, s.max_deviation);
        failures += s.failures;
        os << s.variant.name() << ',' << s.draws << ',' << s.failures << ',' << format_double(s.max_deviation) << ','
           << format_double(s.max_modulus_deviation) << ',' << format_double(s.max_det_ratio) << '\n';
        arr.push_back({{"variant", s.variant.name()},
                       {"draws", s.draws},
                       {"failures", s.failures},
                       {"max_deviation", s.max_deviation},
                       {"max_modulus_deviation", s.max_modulus_deviation},
                       {"max_det_ratio", s.max_det_ratio},
                       {"first_error", s.first_error}});
    }
    res.output = cfg.format == Format::Csv ? os.str() : json{{"seed", cfg.seed}, {"variants", arr}}.dump(2) + "\n";
    if (failures == 0) {
        res.message = "max root deviation " + fmt_sci(worst) + " < 1e-8";
    } else {
        res.exit_code = 4;
        res.message = std::to_string(failures) + " draws exceeded the oracle tolerance (max deviation " + fmt_sci(worst) + ")";
    }
    return res;
}

RunResult cmd_spectrum(const RunConfig& cfg) {
    const auto pr = make_problem(cfg);
    const auto t = allowed_k(pr, cfg.grid_points);
    RunResult res;
    res.output = cfg.format == Format::Csv ? spectrum_csv(t) : table_json(t).dump(2) + "\n";
    res.message = std::to_string(t.rows.size()) + " allowed k values";
    return res;
}

RunResult cmd_sweep(const RunConfig& cfg) {
    const auto pr = make_problem(cfg);
    for (double v : cfg.sweep_values)
        if (!std::isfinite(v)) throw DomainError("sweep.values", "must be finite");
    const auto pts = spectrum_sweep(pr, cfg.sweep_axis, cfg.sweep_values, cfg.grid_points);
    RunResult res;
    int errors = 0;
    if (cfg.format == Format::Csv) {
        std::ostringstream os;
        os << "sweep_value,branch,root_index,k,epsilon,re_root,im_root,residual\n";
        for (const auto& p : pts) {
            errors += !p.error.empty();
            for (const auto& r : p.table.rows)
                os << format_double(p.value) << ',' << r.branch << ',' << r.root_index << ',' << format_double(r.k) << ','
                   << format_double(r.energy) << ',' << format_double(r.root.real()) << ','
                   << format_double(r.root.imag()) << ',' << format_double(r.residual) << '\n';
        }
        res.output = os.str();
    } else {
        json arr = json::array();
        for (const auto& p : pts) {
            errors += !p.error.empty();
            json e = table_json(p.table);
            e["value"] = p.value;
            e["error"] = p.error;
            arr.push_back(e);
        }
        res.output = json{{"axis", cfg.sweep_axis == SweepAxis::HalfWidth ? "half_width" : "field"}, {"points", arr}}
                         .dump(2) +
                     "\n";
    }
    res.message = std::to_string(pts.size()) + " sweep points, " + std::to_string(errors) + " with errors";
    return res;
}

RunResult cmd_mode(const RunConfig& cfg) {
    const auto pr = make_problem(cfg);
    if (cfg.y_points < 2 || cfg.z_points < 2) throw DomainError("y_points", "grids need at least 2 points");
    const auto t = allowed_k(pr, cfg.grid_points);
    if (t.rows.empty()) throw DomainError("k_max", "no allowed k in the window");
    const auto& row = t.rows.front();
    const PhysicalParams params = params_at(pr, row.k);
    const cplx K = std::polar(1.0, 2.0 * row.k * pr.half_width);
    const auto modes = certified_modes(params, pr.phases, K, cfg.landau_level);
    const SlabMode& mode = modes.front();
    const auto ys = default_y_grid(mode.transverse, cfg.y_points);
    const auto rep = boundary_residual(mode, ys);
    const double a = pr.half_width;

    RunResult res;
    std::ostringstream os;
    json grid = json::array();
    os << "y,z,re_phi1,im_phi1,re_phi2,im_phi2,re_phi3,im_phi3,re_phi4,im_phi4,jz\n";
    for (int iz = 0; iz < cfg.z_points; ++iz) {
        const double z = iz + 1 == cfg.z_points ? a : -a + 2.0 * a * iz / (cfg.z_points - 1);
        for (double y : ys) {
            const Spinor phi = assemble_phi(mode, y, z);
            const double jz = current_Jz(mode, y, z);
            os << format_double(y) << ',' << format_double(z);
            for (const auto& c : phi) os << ',' << format_double(c.real()) << ',' << format_double(c.imag());
            os << ',' << format_double(jz) << '\n';
            grid.push_back({{"y", y}, {"z", z}, {"phi", {cjson(phi[0]), cjson(phi[1]), cjson(phi[2]), cjson(phi[3])}}, {"jz", jz}});
        }
    }
    if (cfg.format == Format::Csv) {
        res.output = os.str();
    } else {
        json A = json::array();
        for (const auto& c : mode.A.A) A.push_back(cjson(c));
        res.output = json{{"variant", pr.variant.name()},
                          {"k", row.k},
                          {"K", cjson(K)},
                          {"A", A},
                          {"null_space_dimension", modes.size()},
                          {"boundary_residual", rep.residual},
                          {"interior_current_vanishes", rep.interior_current_vanishes},
                          {"lower_pair_vanishes", rep.lower_pair_vanishes},
                          {"grid", grid}}
                         .dump(2) +
                     "\n";
    }
    res.message = "mode at k = " + format_double(row.k) + ", boundary residual " + fmt_sci(rep.residual);
    if (!(rep.residual < 1e-8)) {
        res.exit_code = 4;
        res.message += " exceeds 1e-8";
    }
    return res;
}

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

RunResult cmd_selftest(const RunConfig& cfg) {
    std::vector<Check> checks;
    const int draws = std::max(1, std::min(cfg.draws, 200));

    const auto stats = oracle_check(cfg.seed, draws);
    double dev = 0.0, mod = 0.0, det = 0.0;
    int fails = 0;
    for (const auto& s : stats) {
        dev = std::max(dev, s.max_deviation);
        mod = std::max(mod, s.max_modulus_deviation);
        det = std::max(det, s.max_det_ratio);
        fails += s.failures;
    }
    checks.push_back({"catalog_oracle", fails == 0, "max deviation " + fmt_sci(dev)});
    checks.push_back({"unit_modulus", mod < 1e-10, "max deviation " + fmt_sci(mod)});
    checks.push_back({"det_vanishing", det < 1e-8, "max |det|/scale " + fmt_sci(det)});

    std::mt19937_64 rng(cfg.seed);
    double vieta = 0.0;
    for (const auto& v : all_variants()) {
        if (root_kind(v) != RootKind::Lambda) continue;
        for (int i = 0; i < 20; ++i) {
            const Draw d = random_draw(v, rng);
            vieta = std::max(vieta, vieta_check(v, d.params, d.phases).deviation);
        }
    }
    checks.push_back({"vieta", vieta < 1e-10, "max deviation " + fmt_sci(vieta)});

    bool rank_ok = true;
    for (int i = 0; i < 20; ++i) {
        const Draw d1 = random_draw({Family::OnePhase, 1}, rng);
        const Draw d2 = random_draw({Family::OnePhase, 2}, rng);
        rank_ok &= rank_S(d1.params, d1.phases, 1.0) == 2;
        rank_ok &= rank_S(d2.params, PhaseConfig::one_phase(2, kPi / 3), 1.0) == 3;
    }
    checks.push_back({"rank_claims", rank_ok, "OnePhase(1) rank 2, OnePhase(2) rank 3"});

    QuantizationProblem qp{{Family::OnePhase, 1}, PhaseConfig::one_phase(1, 0.3)};
    qp.field = 1.0;
    qp.k_min = 0.1;
    qp.k_max = 10.0 * kPi + 0.5;
    qp.root_selector = 0;
    const auto tab = allowed_k(qp, 256);
    double qerr = tab.rows.size() == 10 ? 0.0 : 1.0;
    for (std::size_t i = 0; i < tab.rows.size() && i < 10; ++i) qerr = std::max(qerr, std::abs(tab.rows[i].k - kPi * (i + 1)));
    checks.push_back({"quantization", qerr < 1e-10, "max |k - pi n| " + fmt_sci(qerr)});

    double ode = 0.0;
    for (int n = 0; n <= 6; ++n) {
        const TransverseMode m(n, 1.3, 0.4);
        const double h = 1e-2 / std::sqrt(m.field());
        double fmax = 0.0, rmax = 0.0;
        for (int i = 0; i < 200; ++i) {
            const double y = m.y_of(-5.0 + 10.0 * i / 199);
            const double f = eval_f(m, y);
            const double d2 = (-eval_f(m, y + 2 * h) + 16.0 * eval_f(m, y + h) - 30.0 * f + 16.0 * eval_f(m, y - h) -
                               eval_f(m, y - 2 * h)) /
                              (12.0 * h * h);
            const double u = m.px() + m.field() * y;
            rmax = std::max(rmax, std::abs(d2 + (m.field() - u * u + m.lambda_sq()) * f));
            fmax = std::max(fmax, std::abs(f));
        }
        ode = std::max(ode, rmax / fmax);
    }
    checks.push_back({"transverse_ode", ode < 1e-6, "max relative residual " + fmt_sci(ode)});

    if (kernels::detected_isa() == kernels::Isa::Avx2) {
        std::vector<double> ts(1001), fs(ts.size()), gs(ts.size()), fv(ts.size()), gv(ts.size());
        for (std::size_t i = 0; i < ts.size(); ++i) ts[i] = -40.0 + 80.0 * i / (ts.size() - 1);
        double worst = 0.0;
        for (int n = 0; n <= 12; ++n) {
            kernels::scalar::hermite_pair(n, 2.0 * n, ts, fs, gs);
            kernels::avx2::hermite_pair(n, 2.0 * n, ts, fv, gv);
            double scale = 0.0, diff = 0.0;
            for (std::size_t i = 0; i < ts.size(); ++i) {
                scale = std::max({scale, std::abs(fs[i]), std::abs(gs[i])});
                diff = std::max({diff, std::abs(fs[i] - fv[i]), std::abs(gs[i] - gv[i])});
            }
            worst = std::max(worst, diff / scale);
        }
        checks.push_back({"simd_equivalence", worst < 1e-12, "max relative difference " + fmt_sci(worst)});
    } else {
        checks.push_back({"simd_equivalence", true, "avx2 unavailable, scalar only"});
    }

    RunResult res;
    int failed = 0;
    std::ostringstream os;
    json arr = json::array();
    os << "check,status,detail\n";
    for (const auto& c : checks) {
        failed += !c.pass;
        os << c.name << ',' << (c.pass ? "PASS" : "FAIL") << ',' << c.detail << '\n';
        arr.push_back({{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    res.output = cfg.format == Format::Csv ? os.str() : json{{"checks", arr}}.dump(2) + "\n";
    res.exit_code = failed ? 4 : 0;
    res.message = std::to_string(checks.size() - failed) + "/" + std::to_string(checks.size()) + " checks passed";
    return res;
}

}  // namespace

RunResult run(const RunConfig& cfg) {
    try {
        switch (cfg.command) {
            case Command::Roots: return cmd_roots(cfg);
            case Command::OracleCheck: return cmd_oracle(cfg);
            case Command::Spectrum: return cmd_spectrum(cfg);
            case Command::Mode: return cmd_mode(cfg);
            case Command::Sweep: return cmd_sweep(cfg);
            case Command::Selftest: return cmd_selftest(cfg);
        }
        return {2, "", "unknown command"};
    } catch (const ConfigError& e) {
        return {2, "", e.what()};
    } catch (const DomainError& e) {
        return {3, "", "domain error in '" + e.field() + "': " + e.what()};
    } catch (const SingularConfiguration& e) {
        return {3, "", std::string("domain error in 'phases': ") + e.what()};
    } catch (const std::exception& e) {
        return {4, "", std::string("internal consistency failure: ") + e.what()};
    }
}

}  // namespace slab::cli
