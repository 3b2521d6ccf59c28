#include "lyapq/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "lyapq/harper.hpp"
#include "lyapq/jensen.hpp"
#include "lyapq/lyapunov.hpp"
#include "lyapq/report.hpp"
#include "lyapq/spectrum.hpp"
#include "lyapq/sweep.hpp"
#include "lyapq/verify.hpp"

namespace lyapq {

namespace {

struct GlobalOpts {
    std::string format = "jsonl";
    std::string output;
    int threads = 0;  // 0 = machine parallelism
};

struct CocycleOpts {
    std::string model = "harper";
    std::vector<double> lambda;
    std::string matrix_file;
    std::string beta = "golden";
    double E = 0.0;
    std::string which = "B";
    double eps = 0.0;
    std::string backend = "auto";
    int n = 10000;
    int phase_samples = 8;
    int quad_points = 0;  // 0 = 32 q
};

void add_cocycle_options(CLI::App* cmd, CocycleOpts& o, bool with_energy = true) {
    cmd->add_option("--model", o.model, "cocycle family (harper)")->capture_default_str();
    cmd->add_option("--lambda", o.lambda, "coupling triple l1,l2,l3")->delimiter(',')->expected(3);
    cmd->add_option("--matrix", o.matrix_file, "JSON file with a user-defined 2x2 trig-polynomial matrix");
    cmd->add_option("--beta", o.beta, "frequency: p/q, decimal, 'golden' or 'sqrt2m1'")->capture_default_str();
    if (with_energy) cmd->add_option("--E", o.E, "energy")->capture_default_str();
    cmd->add_option("--which", o.which, "transfer cocycle A or B (B divides by c)")
        ->check(CLI::IsMember({"A", "B"}))
        ->capture_default_str();
    cmd->add_option("--eps", o.eps, "strip height (complexification parameter)")->capture_default_str();
    cmd->add_option("--backend", o.backend, "LE backend: iterative, rational or auto")
        ->check(CLI::IsMember({"iterative", "rational", "auto"}))
        ->capture_default_str();
    cmd->add_option("--n", o.n, "iterative backend: product length")->capture_default_str();
    cmd->add_option("--phase-samples", o.phase_samples, "iterative backend: phase grid size")
        ->capture_default_str();
    cmd->add_option("--quad-points", o.quad_points, "rational backend: quadrature nodes over the torus");
}

Cocycle make_cocycle(const CocycleOpts& o, const Frequency& beta) {
    if (!o.matrix_file.empty()) {
        std::ifstream in(o.matrix_file);
        if (!in) throw BadInput("cannot open matrix file '" + o.matrix_file + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        return Cocycle::from_json(beta, buf.str());
    }
    if (o.model != "harper") throw BadInput("unknown model '" + o.model + "' (supported: harper)");
    if (o.lambda.size() != 3) throw BadInput("--lambda l1,l2,l3 is required for the harper model");
    const Coupling lam{o.lambda[0], o.lambda[1], o.lambda[2]};
    return build_cocycle(lam, beta, o.E, o.which == "A" ? TransferKind::A : TransferKind::B);
}

LeBackend pick_backend(const CocycleOpts& o, const Frequency& beta) {
    if (o.backend == "iterative") return LeBackend::iterative;
    if (o.backend == "rational") {
        if (!beta.is_rational()) throw NotRational();
        return LeBackend::rational;
    }
    return beta.is_rational() ? LeBackend::rational : LeBackend::iterative;
}

int effective_quad_points(const CocycleOpts& o, const Frequency& beta) {
    if (o.quad_points > 0) return o.quad_points;
    return static_cast<int>(32 * std::max<std::int64_t>(beta.q(), 1));
}

nlohmann::json echo_inputs(const CocycleOpts& o) {
    nlohmann::json j;
    j["model"] = o.matrix_file.empty() ? o.model : "matrix:" + o.matrix_file;
    if (!o.lambda.empty()) j["lambda"] = o.lambda;
    j["beta"] = o.beta;
    j["E"] = o.E;
    j["which"] = o.which;
    j["eps"] = o.eps;
    return j;
}

void emit(const ReportRecord& rec, const GlobalOpts& g, std::ostream& out) {
    const std::string text = g.format == "csv" ? rec.to_csv() : rec.to_json_lines();
    if (!g.output.empty()) {
        std::ofstream f(g.output);
        if (!f) throw Error("cannot write output file '" + g.output + "'");
        f << text;
    } else {
        out << text;
    }
}

int machine_threads(const GlobalOpts& g) {
    if (g.threads > 0) return g.threads;
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lyapunov exponents of quasi-periodic 2x2 cocycles (values in nats)"};
    app.require_subcommand(1);
    GlobalOpts global;
    app.add_option("--format", global.format, "report format: jsonl or csv")
        ->check(CLI::IsMember({"jsonl", "csv"}))
        ->capture_default_str();
    app.add_option("--output", global.output, "write the report to this file instead of stdout");
    app.add_option("--threads", global.threads, "worker threads (0 = machine parallelism)")
        ->capture_default_str();
    app.set_config("--config", "", "read options from a config file (flags win)");

    // le
    auto* le_cmd = app.add_subcommand("le", "single Lyapunov exponent estimate");
    CocycleOpts le_opts;
    add_cocycle_options(le_cmd, le_opts);

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "LE profile over a range of eps");
    CocycleOpts sweep_opts;
    add_cocycle_options(sweep_cmd, sweep_opts);
    double sweep_min = -0.5, sweep_max = 0.5;
    int sweep_steps = 21;
    sweep_cmd->add_option("--eps-min", sweep_min, "")->capture_default_str();
    sweep_cmd->add_option("--eps-max", sweep_max, "")->capture_default_str();
    sweep_cmd->add_option("--steps", sweep_steps, "")->capture_default_str();

    // accel
    auto* accel_cmd = app.add_subcommand("accel", "acceleration (slope/2pi) at a point");
    CocycleOpts accel_opts;
    add_cocycle_options(accel_cmd, accel_opts);
    double accel_window = 0.25;
    int accel_steps = 11;
    accel_cmd->add_option("--eps-window", accel_window, "half-width of the local profile")
        ->capture_default_str();
    accel_cmd->add_option("--steps", accel_steps, "grid points of the local profile")->capture_default_str();

    // spectrum
    auto* spec_cmd = app.add_subcommand("spectrum", "approximate the spectrum");
    std::vector<double> spec_lambda;
    std::string spec_beta = "golden", spec_method = "truncation";
    int spec_N = 500, spec_theta = 0, spec_midband = 0;
    spec_cmd->add_option("--lambda", spec_lambda, "coupling triple")->delimiter(',')->expected(3)->required();
    spec_cmd->add_option("--beta", spec_beta, "frequency")->capture_default_str();
    spec_cmd->add_option("--method", spec_method, "truncation or floquet")
        ->check(CLI::IsMember({"truncation", "floquet"}))
        ->capture_default_str();
    spec_cmd->add_option("--N", spec_N, "truncation half-size")->capture_default_str();
    spec_cmd->add_option("--theta-samples", spec_theta, "phase grid (default 32 truncation / 64 floquet)");
    spec_cmd->add_option("--midband", spec_midband, "also list this many mid-band energies");

    // region
    auto* region_cmd = app.add_subcommand("region", "coupling classification and closed forms");
    std::vector<double> region_lambda;
    region_cmd->add_option("--lambda", region_lambda, "coupling triple")->delimiter(',')->expected(3)->required();

    // duality
    auto* dual_cmd = app.add_subcommand("duality", "dual coupling and optional identity residual");
    std::vector<double> dual_lambda;
    std::string dual_beta;
    double dual_E = 0.0;
    int dual_n = 40000;
    bool dual_check = false;
    dual_cmd->add_option("--lambda", dual_lambda, "coupling triple")->delimiter(',')->expected(3)->required();
    dual_cmd->add_option("--beta", dual_beta, "frequency for the numeric identity check");
    dual_cmd->add_option("--E", dual_E, "energy for the numeric identity check");
    dual_cmd->add_option("--n", dual_n, "iterative product length")->capture_default_str();
    dual_cmd->add_flag("--check", dual_check, "run the numeric duality identity check");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a verification panel");
    std::string panel;
    verify_cmd->add_option("panel", panel, "thouless|duality|jensen|quantization|asymptotics|continuity|all")
        ->required();

    std::vector<const char*> argv;
    argv.push_back("lyapq");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        const int threads = machine_threads(global);

        if (le_cmd->parsed()) {
            const Frequency beta = Frequency::parse(le_opts.beta);
            const Cocycle coc = make_cocycle(le_opts, beta);
            const LeBackend backend = pick_backend(le_opts, beta);
            ReportRecord rec;
            rec.command = "le";
            rec.inputs = echo_inputs(le_opts);
            if (backend == LeBackend::rational) {
                const double le = le_rational(coc, le_opts.eps, effective_quad_points(le_opts, beta));
                rec.outputs["le"] = le;
                rec.outputs["backend"] = "rational";
                rec.diagnostics["quad_points"] = effective_quad_points(le_opts, beta);
            } else {
                const LeEstimate est = le_iterative(coc, le_opts.eps, le_opts.n, le_opts.phase_samples);
                rec.outputs["le"] = est.estimate;
                rec.outputs["backend"] = "iterative";
                nlohmann::json seq = nlohmann::json::array();
                for (const auto& [m, v] : est.upper_sequence) seq.push_back({m, v});
                rec.diagnostics["upper_sequence"] = seq;
                rec.diagnostics["flagged_samples"] = est.flagged_samples;
                rec.diagnostics["phase_stderr"] = est.phase_stderr;
            }
            emit(rec, global, out);
            return 0;
        }

        if (sweep_cmd->parsed()) {
            const Frequency beta = Frequency::parse(sweep_opts.beta);
            const Cocycle coc = make_cocycle(sweep_opts, beta);
            SweepOptions so;
            so.backend = pick_backend(sweep_opts, beta);
            so.n = sweep_opts.n;
            so.phase_samples = sweep_opts.phase_samples;
            so.quad_points = effective_quad_points(sweep_opts, beta);
            so.threads = threads;
            const LEProfile prof = epsilon_sweep(coc, sweep_min, sweep_max, sweep_steps, so);
            ReportRecord rec;
            rec.command = "sweep";
            rec.inputs = echo_inputs(sweep_opts);
            rec.inputs["eps_min"] = sweep_min;
            rec.inputs["eps_max"] = sweep_max;
            rec.inputs["steps"] = sweep_steps;
            rec.outputs["kinks"] = prof.kinks;
            rec.outputs["noise_floor"] = prof.noise_floor;
            rec.diagnostics["flagged_samples"] = prof.flagged_samples;
            rec.table_columns = {"eps", "le", "slope_2pi", "kink"};
            const int w = prof.window;
            for (size_t i = 0; i < prof.eps_grid.size(); ++i) {
                // centered window slope, clamped at the boundary
                size_t wi = i >= static_cast<size_t>(w / 2) ? i - w / 2 : 0;
                if (wi >= prof.slopes.size()) wi = prof.slopes.empty() ? 0 : prof.slopes.size() - 1;
                bool is_kink = false;
                for (double k : prof.kinks)
                    if (std::abs(prof.eps_grid[i] - k) < 1e-12) is_kink = true;
                rec.table_rows.push_back({prof.eps_grid[i], prof.le_values[i],
                                          prof.slopes.empty() ? 0.0 : prof.slopes[wi], is_kink ? 1 : 0});
            }
            emit(rec, global, out);
            return 0;
        }

        if (accel_cmd->parsed()) {
            const Frequency beta = Frequency::parse(accel_opts.beta);
            const Cocycle coc = make_cocycle(accel_opts, beta);
            SweepOptions so;
            so.backend = pick_backend(accel_opts, beta);
            so.n = accel_opts.n;
            so.phase_samples = accel_opts.phase_samples;
            so.quad_points = effective_quad_points(accel_opts, beta);
            so.threads = threads;
            const LEProfile prof = epsilon_sweep(coc, accel_opts.eps - accel_window,
                                                 accel_opts.eps + accel_window, accel_steps, so);
            const Acceleration acc = acceleration_at(prof, accel_opts.eps);
            ReportRecord rec;
            rec.command = "accel";
            rec.inputs = echo_inputs(accel_opts);
            rec.outputs["omega"] = acc.omega;
            rec.outputs["nearest_int"] = acc.nearest_int;
            rec.outputs["residual"] = acc.residual;
            rec.diagnostics["noise_floor"] = prof.noise_floor;
            emit(rec, global, out);
            return 0;
        }

        if (spec_cmd->parsed()) {
            const Coupling lam{spec_lambda[0], spec_lambda[1], spec_lambda[2]};
            const Frequency beta = Frequency::parse(spec_beta);
            SpectrumApprox spec;
            if (spec_method == "floquet") {
                if (!beta.is_rational()) throw NotRational();
                spec = spectrum_floquet(lam, beta.p(), beta.q(), spec_theta > 0 ? spec_theta : 64, threads);
            } else {
                spec = spectrum_truncation(lam, beta, spec_theta > 0 ? spec_theta : 32, spec_N, threads);
            }
            ReportRecord rec;
            rec.command = "spectrum";
            rec.inputs["lambda"] = spec_lambda;
            rec.inputs["beta"] = spec_beta;
            rec.inputs["method"] = spec_method;
            rec.inputs[spec_method == "floquet" ? "q" : "N"] = spec.size_param;
            rec.inputs["theta_samples"] = spec.theta_samples;
            rec.outputs["bands"] = spec.merged_intervals.size();
            rec.outputs["total_measure"] = spec.total_measure();
            rec.outputs["min"] = spec.points.front();
            rec.outputs["max"] = spec.points.back();
            if (spec_midband > 0) rec.outputs["midband"] = sample_midband(spec, spec_midband);
            rec.diagnostics["skipped_thetas"] = spec.skipped_thetas;
            rec.table_columns = {"lo", "hi"};
            for (const auto& iv : spec.merged_intervals) rec.table_rows.push_back({iv.first, iv.second});
            emit(rec, global, out);
            return 0;
        }

        if (region_cmd->parsed()) {
            const Coupling lam{region_lambda[0], region_lambda[1], region_lambda[2]};
            const RegionTag tag = region(lam);
            const HarperVerdict v = criticality(lam);
            ReportRecord rec;
            rec.command = "region";
            rec.inputs["lambda"] = region_lambda;
            rec.outputs["region"] = to_string(tag.tag);
            rec.outputs["criticality"] = to_string(v.criticality);
            rec.outputs["le_on_spectrum"] = v.le_on_spectrum;
            rec.outputs["delta"] = v.delta;
            rec.outputs["L_M"] = v.L_M;
            rec.outputs["I0"] = harper_i_eps_closed(lam, 0.0);
            nlohmann::json b = nlohmann::json::array();
            if (tag.on_sum13_eq_1) b.push_back("l1+l3=1");
            if (tag.on_l2_eq_1) b.push_back("l2=1");
            if (tag.on_sum13_eq_l2) b.push_back("l1+l3=l2");
            if (tag.on_l1_eq_l3) b.push_back("l1=l3");
            rec.outputs["boundaries"] = b;
            emit(rec, global, out);
            return 0;
        }

        if (dual_cmd->parsed()) {
            const Coupling lam{dual_lambda[0], dual_lambda[1], dual_lambda[2]};
            const Coupling sig = duality(lam);
            ReportRecord rec;
            rec.command = "duality";
            rec.inputs["lambda"] = dual_lambda;
            rec.outputs["dual"] = {sig.l1, sig.l2, sig.l3};
            rec.outputs["region"] = to_string(region(lam).tag);
            rec.outputs["dual_region"] = to_string(region(sig).tag);
            if (dual_check) {
                if (dual_beta.empty()) throw BadInput("duality --check needs --beta and --E");
                IterOptions opts;
                opts.n = dual_n;
                const double resid =
                    duality_le_identity_check(lam, Frequency::parse(dual_beta), dual_E, opts);
                rec.outputs["identity_residual"] = resid;
            }
            emit(rec, global, out);
            return 0;
        }

        if (verify_cmd->parsed()) {
            VerifySuite suite(threads);
            const auto results = suite.run_panel(panel);
            ReportRecord rec;
            rec.command = "verify";
            rec.inputs["panel"] = panel;
            rec.table_columns = {"criterion", "check", "target", "computed", "tolerance", "status"};
            bool all_pass = true;
            for (const auto& cr : results) {
                for (const auto& r : cr.rows) {
                    rec.table_rows.push_back(
                        {cr.criterion, r.name, r.target, r.computed, r.tolerance, r.pass ? "PASS" : "FAIL"});
                    all_pass = all_pass && r.pass;
                    out << (r.pass ? "PASS" : "FAIL") << "  [" << cr.criterion << "] " << r.name
                        << "  target=" << std::setprecision(10) << r.target << " computed=" << r.computed
                        << " tol=" << r.tolerance << (r.note.empty() ? "" : "  (" + r.note + ")") << "\n";
                }
            }
            rec.outputs["all_pass"] = all_pass;
            if (!global.output.empty()) emit(rec, global, out);
            return all_pass ? 0 : 1;
        }
    } catch (const BadInput& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InadmissibleCoupling& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotRational& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ZeroLambda2& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const IdenticallyZero& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ZeroCocycle& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

} // namespace lyapq
