// foamfit: sparse hyperelastic model discovery for compressible foams.
// Subcommands: ingest, fit, eval, sweep, grid, report.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "foamfit/datasets.hpp"
#include "foamfit/discovery.hpp"
#include "foamfit/io.hpp"

namespace {

using namespace foamfit;

FoamDataset resolve_dataset(const std::string& name) {
    if (name == "leap" || name == "turbo") return builtin_dataset(name);
    return load_dataset_manifest(name);
}

std::uint64_t resolve_seed(bool seed_given, std::uint64_t seed) {
    if (seed_given) return seed;
    if (const char* env = std::getenv("FOAMFIT_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw DomainError(std::string("FOAMFIT_SEED: not an integer: ") + env);
        }
    }
    return 0;
}

Mode parse_mode(const std::string& name) {
    if (name == "tension") return Mode::Tension;
    if (name == "compression") return Mode::Compression;
    if (name == "shear") return Mode::Shear;
    throw DomainError("unknown mode '" + name + "'");
}

void print_report(const FitReport& r) {
    std::printf("%s  %s  alpha=%g  seed=%llu\n", r.label.c_str(),
                architecture_name(r.architecture), r.alpha,
                static_cast<unsigned long long>(r.seed));
    std::printf("  nonzero terms: %d\n", r.nonzero_terms);
    std::printf("  R2  tension=%.4f  compression=%.4f  shear=%.4f\n", r.r2_ten, r.r2_com,
                r.r2_shr);
    std::printf("  %s\n", render_model(r.model).c_str());
    for (const auto& f : r.polyconvexity) {
        if (f.status == Convexity::Violates)
            std::printf("  note: term %d breaks polyconvexity\n", f.term_id);
        else if (f.status == Convexity::Conditional)
            std::printf("  note: term %d polyconvex only up to w* = %.4g\n", f.term_id,
                        f.threshold);
    }
}

void write_fit_outputs(const FitReport& r, const FoamDataset& data,
                       const std::filesystem::path& out_dir, const std::string& stem) {
    write_text_file(out_dir / (stem + ".json"), export_model_json(r));
    write_text_file(out_dir / (stem + "_row.csv"),
                    report_csv_header() + "\n" + report_csv_row(r) + "\n");
    write_text_file(out_dir / (stem + "_trace.csv"), trace_to_csv(r.loss_trace));
    write_text_file(out_dir / (stem + "_predictions.csv"), predictions_csv(r.model, data));
    write_text_file(out_dir / (stem + "_contributions.csv"), contributions_csv(r.model, data));
}

struct CommonFlags {
    std::string dataset;
    std::string arch = "si-mi";
    double alpha = 0.0;
    std::uint64_t seed = 0;
    bool seed_given = false;
    int epochs = -1;
    int warm_epochs = -1;
    std::string out = "out";

    TrainConfig config() const {
        TrainConfig cfg;
        cfg.architecture = architecture_from_name(arch);
        cfg.alpha = alpha;
        cfg.seed = resolve_seed(seed_given, seed);
        if (epochs >= 0) cfg.epochs = epochs;
        if (warm_epochs >= 0) cfg.warm_epochs = warm_epochs;
        cfg.validate();
        return cfg;
    }
};

void add_common(CLI::App* cmd, CommonFlags& f, bool with_arch, bool with_alpha) {
    cmd->add_option("--dataset", f.dataset, "leap, turbo, or a dataset manifest path")
        ->required();
    if (with_arch)
        cmd->add_option("--arch", f.arch, "si, si-mi, si-ps, or all")
            ->check(CLI::IsMember({"si", "si-mi", "si-ps", "all", "si_mi", "si_ps"}));
    if (with_alpha) cmd->add_option("--alpha", f.alpha, "L0.5 penalty weight");
    cmd->add_option("--seed", f.seed, "RNG seed (FOAMFIT_SEED, then 0, when absent)")
        ->each([&f](const std::string&) { f.seed_given = true; });
    cmd->add_option("--epochs", f.epochs, "total training epochs");
    cmd->add_option("--warm-epochs", f.warm_epochs, "unregularized stage-1 epochs");
    cmd->add_option("--out", f.out, "output directory");
}

int cmd_ingest(const std::string& mode_name, const std::string& raw_path,
               const std::string& geom_path, const std::string& out_path, bool average,
               int grid_points) {
    const Mode mode = parse_mode(mode_name);
    const RawGeometry geom = parse_geometry(read_text_file(geom_path));
    const RawRecording rec = parse_raw_csv(read_text_file(raw_path), mode, geom);
    Curve curve = reduce_recording(rec);
    if (average) {
        const auto policy = mode == Mode::Compression
                                ? CycleAveragePolicy::CompressionDropFirstCycle
                                : CycleAveragePolicy::TensionFirstLoadFinalUnload;
        curve = cycle_average(split_monotone_segments(curve), policy, grid_points);
    }
    write_text_file(out_path, curve_to_csv(curve));
    std::printf("wrote %s (%zu points)\n", out_path.c_str(), curve.size());
    return 0;
}

int cmd_fit(const CommonFlags& flags) {
    const FoamDataset data = resolve_dataset(flags.dataset);
    const FitReport report = fit(flags.config(), data);
    write_fit_outputs(report, data, flags.out, "model");
    print_report(report);
    return 0;
}

int cmd_eval(const std::string& model_path, const std::string& dataset,
             const std::string& out_path) {
    const ModelSpec m = import_model(read_text_file(model_path));
    const FoamDataset data = resolve_dataset(dataset);
    const ModelEval e = evaluate_model(m, data);
    write_text_file(out_path, predictions_csv(m, data));
    std::printf("R2  tension=%.4f  compression=%.4f  shear=%.4f\n", e.r2_ten, e.r2_com,
                e.r2_shr);
    std::printf("wrote %s\n", out_path.c_str());
    return 0;
}

int cmd_sweep(const CommonFlags& flags, const std::string& alphas_text) {
    std::vector<double> alphas;
    for (const auto& piece : CLI::detail::split(alphas_text, ','))
        alphas.push_back(std::stod(piece));
    const FoamDataset data = resolve_dataset(flags.dataset);
    TrainConfig cfg = flags.config();
    const auto reports = sparsity_sweep(cfg, data, alphas);

    std::string csv = report_csv_header() + "\n";
    for (const auto& r : reports) {
        csv += report_csv_row(r) + "\n";
        char name[64];
        std::snprintf(name, sizeof(name), "model_alpha_%g.json", r.alpha);
        write_text_file(std::filesystem::path(flags.out) / name, export_model_json(r));
        print_report(r);
    }
    write_text_file(std::filesystem::path(flags.out) / "sweep.csv", csv);
    return 0;
}

int cmd_grid(const CommonFlags& flags) {
    const FoamDataset data = resolve_dataset(flags.dataset);
    TrainConfig cfg = flags.config();
    const auto reports = run_grid(cfg, data);

    std::string csv = report_csv_header() + "\n";
    for (const auto& r : reports) {
        csv += report_csv_row(r) + "\n";
        char name[64];
        std::snprintf(name, sizeof(name), "model_%s_alpha_%g.json",
                      architecture_name(r.architecture), r.alpha);
        write_text_file(std::filesystem::path(flags.out) / name, export_model_json(r));
        print_report(r);
    }
    write_text_file(std::filesystem::path(flags.out) / "grid.csv", csv);

    const Selection sel = select_model(reports);
    if (sel.fallback_warning)
        std::fprintf(stderr, "warning: no alpha=0 baseline; selection fell back\n");
    write_text_file(std::filesystem::path(flags.out) / "selected.json",
                    export_model_json(sel.report));
    std::printf("selected:\n");
    print_report(sel.report);
    return 0;
}

int cmd_report(const std::vector<std::string>& inputs, const std::string& out_path) {
    std::string merged;
    for (const auto& path : inputs) {
        const std::string text = read_text_file(path);
        std::size_t eol = text.find('\n');
        if (eol == std::string::npos) throw DomainError(path + ": not a report csv");
        const std::string header = text.substr(0, eol);
        if (header != report_csv_header()) throw DomainError(path + ": not a report csv");
        if (merged.empty())
            merged = text;
        else
            merged += text.substr(eol + 1);
    }
    write_text_file(out_path, merged);
    std::printf("wrote %s\n", out_path.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sparse constitutive model discovery for elastomeric foams"};
    app.require_subcommand(1);

    // ingest
    auto* ingest = app.add_subcommand("ingest", "reduce a raw recording to a stress curve");
    std::string in_mode, in_raw, in_geom, in_out = "curve.csv";
    bool in_average = false;
    int in_grid = 200;
    ingest->add_option("--mode", in_mode, "tension, compression, or shear")->required();
    ingest->add_option("--raw", in_raw, "raw recording csv (t,signal,displacement)")->required();
    ingest->add_option("--geometry", in_geom, "key=value geometry manifest")->required();
    ingest->add_option("--out", in_out, "output curve csv");
    ingest->add_flag("--average", in_average, "cycle-average the strokes");
    ingest->add_option("--grid-points", in_grid, "resample grid size for --average");

    // fit
    auto* fit_cmd = app.add_subcommand("fit", "two-stage fit of one architecture");
    CommonFlags fit_flags;
    add_common(fit_cmd, fit_flags, true, true);

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "score a model document against a dataset");
    std::string ev_model, ev_dataset, ev_out = "eval.csv";
    eval_cmd->add_option("--model", ev_model, "model document json")->required();
    eval_cmd->add_option("--dataset", ev_dataset, "leap, turbo, or a manifest path")->required();
    eval_cmd->add_option("--out", ev_out, "residual csv path");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "fit a ladder of penalty weights");
    CommonFlags sweep_flags;
    std::string sweep_alphas = "0,1";
    add_common(sweep_cmd, sweep_flags, true, false);
    sweep_cmd->add_option("--alphas", sweep_alphas, "comma-separated ascending alphas");

    // grid
    auto* grid_cmd = app.add_subcommand("grid", "the six-cell architecture x alpha experiment");
    CommonFlags grid_flags;
    add_common(grid_cmd, grid_flags, false, false);

    // report
    auto* report_cmd = app.add_subcommand("report", "merge report csvs");
    std::vector<std::string> rep_in;
    std::string rep_out = "report.csv";
    report_cmd->add_option("--in", rep_in, "report csvs to merge")->required();
    report_cmd->add_option("--out", rep_out, "merged csv path");

    try {
        app.parse(argc, argv);
        if (app.got_subcommand(ingest))
            return cmd_ingest(in_mode, in_raw, in_geom, in_out, in_average, in_grid);
        if (app.got_subcommand(fit_cmd)) return cmd_fit(fit_flags);
        if (app.got_subcommand(eval_cmd)) return cmd_eval(ev_model, ev_dataset, ev_out);
        if (app.got_subcommand(sweep_cmd)) return cmd_sweep(sweep_flags, sweep_alphas);
        if (app.got_subcommand(grid_cmd)) return cmd_grid(grid_flags);
        if (app.got_subcommand(report_cmd)) return cmd_report(rep_in, rep_out);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const foamfit::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
