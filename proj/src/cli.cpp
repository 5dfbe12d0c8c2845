#include <cstdio>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vacq/errors.hpp"
#include "vacq/parallel.hpp"
#include "vacq/reporting.hpp"

namespace vacq {

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitRegime = 3;
constexpr int kExitNonConvergence = 4;
constexpr int kExitIo = 5;

std::string resolved_config_text(const RunConfig& cfg, const WellParameters& well) {
    const RegulatorConfig reg = cfg.regulator(well);
    const QuadratureConfig quad = cfg.quadrature(well);
    std::string text;
    auto kv = [&text](const std::string& key, const std::string& value) {
        text += key + "=" + value + "\n";
    };
    const char* command = "charge";
    switch (cfg.command) {
        case Command::Charge: command = "charge"; break;
        case Command::DensityProfile: command = "density-profile"; break;
        case Command::Casimir: command = "casimir"; break;
        case Command::ReproduceTables: command = "reproduce-tables"; break;
        case Command::Audit: command = "audit"; break;
    }
    const char* method = "all";
    switch (cfg.method) {
        case MethodSelection::ModeSum: method = "mode-sum"; break;
        case MethodSelection::Contour: method = "contour"; break;
        case MethodSelection::PointSplit: method = "point-split"; break;
        case MethodSelection::All: method = "all"; break;
    }
    kv("command", command);
    kv("m", format_number(cfg.m));
    kv("a", format_number(cfg.a));
    kv("eta", format_number(cfg.eta));
    kv("eta_final", format_number(cfg.eta_final));
    kv("method", method);
    kv("p_max", format_number(reg.p_max));
    kv("n_p", std::to_string(reg.n_p));
    kv("damping", format_number(reg.damping));
    kv("z_nodes", std::to_string(reg.z_nodes));
    kv("y_max", format_number(quad.y_max));
    kv("n_nodes", std::to_string(quad.n_nodes));
    kv("pv_delta", format_number(quad.pv_delta));
    kv("pv_richardson", std::to_string(quad.pv_richardson));
    kv("tol", format_number(quad.tol));
    kv("n_steps", std::to_string(cfg.n_steps.value_or(64)));
    kv("z_points", std::to_string(cfg.z_points));
    kv("out", cfg.out);
    kv("format", cfg.format == OutputFormat::Csv ? "csv" : "json");
    kv("threads", std::to_string(worker_count()));
    return text;
}

std::vector<double> interior_grid(const WellParameters& well, int n_points) {
    if (n_points < 1) throw ValidationError("z_points must be >= 1");
    std::vector<double> grid(n_points);
    for (int i = 0; i < n_points; ++i)
        grid[i] = -0.5 * well.a +
                  well.a * static_cast<double>(i + 1) / static_cast<double>(n_points + 1);
    return grid;
}

ChargeProfile make_profile(const WellParameters& well, const RunConfig& cfg,
                           ChargeMethod method) {
    const std::vector<double> grid = interior_grid(well, cfg.z_points);
    ChargeProfile profile;
    profile.positions = grid;
    profile.method = method;
    profile.well = well;
    profile.densities.reserve(grid.size());
    switch (method) {
        case ChargeMethod::ModeSum: {
            const RegulatorConfig reg = cfg.regulator(well);
            for (const VacuumDensity& d : vacuum_density_profile(well, grid, reg))
                profile.densities.push_back(d.value);
            break;
        }
        case ChargeMethod::PointSplitContour: {
            const QuadratureConfig quad = cfg.quadrature(well);
            for (double z : grid) profile.densities.push_back(capri_density(well, z, quad));
            break;
        }
        case ChargeMethod::PointSplitComposite: {
            const QuadratureConfig quad = cfg.quadrature(well);
            for (double z : grid)
                profile.densities.push_back(capri_density(well, z, quad) +
                                            delta_rho(well, z));
            break;
        }
    }
    return profile;
}

int run_command(const RunConfig& cfg) {
    const WellParameters well = validate_well(cfg.m, cfg.a, cfg.eta);
    if (cfg.print_config)
        std::fputs(resolved_config_text(cfg, well).c_str(), stdout);

    const bool csv = (cfg.format == OutputFormat::Csv);
    switch (cfg.command) {
        case Command::Charge: {
            std::vector<ChargeReport> reports;
            if (cfg.method == MethodSelection::ModeSum || cfg.method == MethodSelection::All)
                reports.push_back(total_charge_mode_sum(well, cfg.regulator(well)));
            if (cfg.method == MethodSelection::Contour || cfg.method == MethodSelection::All)
                reports.push_back(capri_charge_integral(well, cfg.quadrature(well)));
            if (cfg.method == MethodSelection::PointSplit || cfg.method == MethodSelection::All)
                reports.push_back(total_charge_point_split(well, cfg.quadrature(well)));
            write_artifact(cfg.out, csv ? render_charges_csv(well, reports)
                                        : render_charges_json(well, reports));
            return 0;
        }
        case Command::DensityProfile: {
            std::vector<ChargeProfile> profiles;
            if (cfg.method == MethodSelection::ModeSum || cfg.method == MethodSelection::All)
                profiles.push_back(make_profile(well, cfg, ChargeMethod::ModeSum));
            if (cfg.method == MethodSelection::Contour || cfg.method == MethodSelection::All)
                profiles.push_back(make_profile(well, cfg, ChargeMethod::PointSplitContour));
            if (cfg.method == MethodSelection::PointSplit || cfg.method == MethodSelection::All)
                profiles.push_back(
                    make_profile(well, cfg, ChargeMethod::PointSplitComposite));
            write_artifact(cfg.out, csv ? render_profiles_csv(profiles)
                                        : render_profiles_json(profiles));
            return 0;
        }
        case Command::Casimir: {
            RampSpec ramp;
            ramp.eta_final = cfg.eta_final;
            ramp.n_steps = cfg.n_steps.value_or(64);
            switch (cfg.method) {
                case MethodSelection::PointSplit:
                    ramp.charge_method = RampChargeMethod::PointSplitComposite;
                    break;
                case MethodSelection::ModeSum:
                case MethodSelection::All:
                    ramp.charge_method = RampChargeMethod::ModeSum;
                    break;
                case MethodSelection::Contour:
                    throw ValidationError(
                        "casimir ramps use --method mode-sum or point-split");
            }
            const EnergyTrace trace = casimir_energy_adiabatic(
                well, ramp, cfg.regulator(well), cfg.quadrature(well));
            write_artifact(cfg.out, csv ? render_trace_csv(trace)
                                        : render_trace_json(trace, ramp.charge_method));
            return 0;
        }
        case Command::ReproduceTables: {
            const WellParameters unit = validate_well(1.0, 1.0, 0.0);
            const std::vector<TableCheckRow> rows = reproduce_tables(cfg.quadrature(unit));
            write_artifact(cfg.out,
                           csv ? render_table_csv(rows) : render_table_json(rows));
            bool all_pass = true;
            for (const TableCheckRow& row : rows) all_pass = all_pass && row.pass;
            if (!all_pass) {
                std::fputs("reproduce-tables: at least one row outside tolerance\n",
                           stderr);
                return kExitNonConvergence;
            }
            return 0;
        }
        case Command::Audit: {
            std::vector<ChargeReport> reports;
            reports.push_back(total_charge_mode_sum(well, cfg.regulator(well)));
            reports.push_back(capri_charge_integral(well, cfg.quadrature(well)));
            reports.push_back(total_charge_point_split(well, cfg.quadrature(well)));
            const AuditReport audit = sign_consistency_audit(well, reports);
            write_artifact(cfg.out,
                           csv ? render_audit_csv(audit) : render_audit_json(audit));
            return 0;
        }
    }
    return kExitUsage;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"induced vacuum charge of a Dirac field in a square well"};
    app.fallthrough();
    app.set_config("--config", "", "plain key=value configuration file");
    app.require_subcommand(1);

    RunConfig cfg;
    std::string method_name = "all";
    std::string format_name = "csv";
    int n_steps = 64;
    bool n_steps_given = false;

    app.add_option("--m", cfg.m, "fermion mass (natural units)")->capture_default_str();
    app.add_option("--a", cfg.a, "well width")->capture_default_str();
    app.add_option("--eta", cfg.eta, "well depth")->capture_default_str();
    app.add_option("--eta-final", cfg.eta_final, "ramp target depth")
        ->capture_default_str();
    app.add_option("--method", method_name, "mode-sum | contour | point-split | all")
        ->check(CLI::IsMember({"mode-sum", "contour", "point-split", "all"}))
        ->capture_default_str();
    double p_max = 0.0, y_max = 0.0, pv_delta = 0.0;
    int n_p = 0, n_nodes = 0;
    auto* opt_pmax = app.add_option("--p-max", p_max, "momentum cutoff (default 50 m)");
    auto* opt_np = app.add_option("--n-p", n_p, "momentum nodes (default 4096)");
    auto* opt_ymax = app.add_option("--y-max", y_max, "contour half-extent (default 200 m)");
    auto* opt_nnodes =
        app.add_option("--n-nodes", n_nodes, "contour nodes per half (default 8192)");
    auto* opt_pvdelta =
        app.add_option("--pv-delta", pv_delta, "PV exclusion radius (default 1e-4 m)");
    auto* opt_nsteps =
        app.add_option("--n-steps", n_steps, "ramp grid steps (default 64)");
    app.add_option("--z-points", cfg.z_points, "profile grid size")
        ->capture_default_str();
    app.add_option("--out", cfg.out, "output path (default stdout)");
    app.add_option("--format", format_name, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_flag("--print-config", cfg.print_config,
                 "print the fully resolved configuration before running");

    CLI::App* cmd_charge = app.add_subcommand("charge", "total well-region charge");
    CLI::App* cmd_profile =
        app.add_subcommand("density-profile", "density samples across the well");
    CLI::App* cmd_casimir =
        app.add_subcommand("casimir", "adiabatic energy change along a depth ramp");
    CLI::App* cmd_tables = app.add_subcommand(
        "reproduce-tables", "recompute the built-in reference tables with pass/fail");
    CLI::App* cmd_audit =
        app.add_subcommand("audit", "minimum-energy consistency verdicts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (cmd_charge->parsed()) cfg.command = Command::Charge;
    if (cmd_profile->parsed()) cfg.command = Command::DensityProfile;
    if (cmd_casimir->parsed()) cfg.command = Command::Casimir;
    if (cmd_tables->parsed()) cfg.command = Command::ReproduceTables;
    if (cmd_audit->parsed()) cfg.command = Command::Audit;

    if (method_name == "mode-sum") cfg.method = MethodSelection::ModeSum;
    else if (method_name == "contour") cfg.method = MethodSelection::Contour;
    else if (method_name == "point-split") cfg.method = MethodSelection::PointSplit;
    else cfg.method = MethodSelection::All;
    cfg.format = (format_name == "json") ? OutputFormat::Json : OutputFormat::Csv;
    if (opt_pmax->count()) cfg.p_max = p_max;
    if (opt_np->count()) cfg.n_p = n_p;
    if (opt_ymax->count()) cfg.y_max = y_max;
    if (opt_nnodes->count()) cfg.n_nodes = n_nodes;
    if (opt_pvdelta->count()) cfg.pv_delta = pv_delta;
    n_steps_given = opt_nsteps->count() > 0;
    if (n_steps_given) cfg.n_steps = n_steps;

    try {
        return run_command(cfg);
    } catch (const ValidationError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return kExitUsage;
    } catch (const RegimeError& e) {
        std::fprintf(stderr, "regime error: %s\n", e.what());
        return kExitRegime;
    } catch (const OutOfRegionError& e) {
        std::fprintf(stderr, "regime error: %s\n", e.what());
        return kExitRegime;
    } catch (const ConvergenceError& e) {
        std::fprintf(stderr, "non-convergence: %s\n", e.what());
        return kExitNonConvergence;
    } catch (const IoError& e) {
        std::fprintf(stderr, "i/o error: %s\n", e.what());
        return kExitIo;
    }
}

} // namespace vacq
