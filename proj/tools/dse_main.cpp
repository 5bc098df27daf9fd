// Design-space exploration CLI for FeFET TCAM arrays: functional search
// simulation, worst-case latency benchmarks, word-length sweeps, waveform
// traces, figure-of-merit reports, and design-validity diagnostics.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <thread>

#include <CLI11.hpp>

#include "fetcam/report.hpp"

namespace fs = std::filesystem;
using namespace fetcam;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitInputFormat = 3;

struct CommonOpts {
    std::string config_path;
    std::string out_dir = ".";
    std::uint64_t seed = 0;
    bool seed_set = false;
    int threads = 0;
    bool no_early_termination = false;
    std::vector<std::string> design_names;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "JSON config file");
    cmd->add_option("--out", opts.out_dir, "output directory")->capture_default_str();
    cmd->add_option("--seed", opts.seed, "random seed")->each([&](const std::string&) {
        opts.seed_set = true;
    });
    cmd->add_option("--threads", opts.threads, "worker threads (0 = config value)");
    cmd->add_flag("--no-early-termination", opts.no_early_termination,
                  "evaluate both search steps for every row");
    cmd->add_option("--design", opts.design_names,
                    "design to run (repeatable): 2SG-FeFET, 2DG-FeFET, 1.5T1SG-Fe, 1.5T1DG-Fe");
}

RunConfig resolve_config(const CommonOpts& opts) {
    RunConfig cfg =
        opts.config_path.empty() ? RunConfig{} : load_run_config(opts.config_path);
    if (opts.seed_set) cfg.seed = opts.seed;
    if (opts.threads > 0) cfg.threads = opts.threads;
    if (opts.no_early_termination) cfg.early_termination = false;
    if (!opts.design_names.empty()) {
        cfg.designs.clear();
        for (const std::string& name : opts.design_names) {
            const auto d = design_from_name(name);
            if (!d) throw ParseError("unknown design \"" + name + "\"");
            cfg.designs.push_back(*d);
        }
    }
    return cfg;
}

void write_file(const fs::path& path, const std::string& text) {
    fs::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

TernaryBit random_ternary(std::mt19937_64& rng) {
    switch (rng() % 3) {
        case 0: return TernaryBit::Zero;
        case 1: return TernaryBit::One;
        default: return TernaryBit::DontCare;
    }
}

int run_validate(const CommonOpts& opts) {
    const RunConfig cfg = resolve_config(opts);
    bool all_ok = true;
    auto report = [&](const std::string& what, bool ok, const std::string& detail = "") {
        std::printf("%s %s%s%s\n", ok ? "ok  " : "FAIL", what.c_str(),
                    detail.empty() ? "" : ": ", detail.c_str());
        all_ok &= ok;
    };

    for (CellDesign design : cfg.designs) {
        const ArrayConfig c = cfg.array_config(design);
        const std::string tag = std::string(design_name(design)) + " ";
        try {
            c.validate();
            report(tag + "parameter invariants", true);
        } catch (const ConfigError& e) {
            report(tag + "parameter invariants", false, e.what());
            continue;
        }

        const double mw = c.dev.vth_hvt_v - c.dev.vth_lvt_v;
        report(tag + "memory window " + format_g(mw, 3) + " V",
               std::abs(mw - c.dev.memory_window_v) <= 1e-9);

        if (is_paired_design(design)) {
            const ResistanceCheck rc = check_resistance_order(c.dev, c.div);
            report(tag + "resistance ordering R_ON < R_N < R_M < R_P << R_OFF", rc.ok,
                   rc.ok ? "" : rc.violated + " [" + rc.detail + "]");
            if (rc.ok) {
                bool table_ok = true;
                for (TernaryBit stored :
                     {TernaryBit::Zero, TernaryBit::One, TernaryBit::DontCare}) {
                    for (SearchBit q : {SearchBit::Zero, SearchBit::One}) {
                        const bool mismatch =
                            evaluate_match_1p5(encode_single(stored), q, c.dev, c.div)
                                .tml_conducting;
                        const bool expect = stored != TernaryBit::DontCare &&
                                            (stored == TernaryBit::One) != (q == SearchBit::One);
                        table_ok &= mismatch == expect;
                    }
                }
                report(tag + "cell truth table (6 combos)", table_ok);
            }
        } else {
            bool table_ok = true;
            for (TernaryBit stored : {TernaryBit::Zero, TernaryBit::One, TernaryBit::DontCare}) {
                for (SearchBit q : {SearchBit::Zero, SearchBit::One}) {
                    const bool mismatch =
                        evaluate_match_2fefet(encode_pair(stored), q, c.dev, c.div).pulls_down;
                    const bool expect = stored != TernaryBit::DontCare &&
                                        (stored == TernaryBit::One) != (q == SearchBit::One);
                    table_ok &= mismatch == expect;
                }
            }
            report(tag + "cell truth table (6 combos)", table_ok);
        }
    }
    return all_ok ? kExitOk : kExitValidation;
}

int run_search(const CommonOpts& opts, const std::string& contents_path,
               const std::string& queries_path, std::size_t random_queries) {
    const RunConfig cfg = resolve_config(opts);
    const CellDesign design = cfg.designs.front();

    TernaryGrid grid;
    std::vector<std::vector<SearchBit>> queries;
    if (!contents_path.empty()) {
        grid = load_grid(contents_path);
        if (queries_path.empty()) throw ParseError("--queries is required with --contents");
        queries = load_queries(queries_path);
    } else if (random_queries > 0) {
        std::mt19937_64 rng(cfg.seed);
        grid.rows = cfg.rows;
        grid.cols = cfg.cols;
        grid.cells.resize(cfg.rows * cfg.cols);
        for (auto& cell : grid.cells) cell = random_ternary(rng);
        queries.resize(random_queries);
        for (auto& q : queries) {
            q.resize(cfg.cols);
            for (auto& bit : q) bit = rng() % 2 ? SearchBit::One : SearchBit::Zero;
        }
        save_grid(fs::path(opts.out_dir) / "contents.txt", grid);
        save_queries(fs::path(opts.out_dir) / "queries.txt", queries);
    } else {
        throw ParseError("search needs --contents/--queries or --random-queries N");
    }

    RunConfig sized = cfg;
    sized.rows = grid.rows;
    sized.cols = grid.cols;
    ArrayConfig array_cfg = sized.array_config(design);
    const ArrayState state = program(array_cfg, grid.cells).state;

    for (const auto& q : queries) {
        if (q.size() != grid.cols) {
            throw ParseError("query length " + std::to_string(q.size()) +
                             " does not match the grid width " + std::to_string(grid.cols));
        }
    }

    std::vector<QueryResult> results(queries.size());
    const int workers =
        std::max(1, std::min<int>(sized.threads, static_cast<int>(queries.size())));
    auto work = [&](std::size_t i) {
        results[i].query = queries[i];
        results[i].outcome = search(array_cfg, state, queries[i]);
    };
    if (workers <= 1) {
        for (std::size_t i = 0; i < queries.size(); ++i) work(i);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = static_cast<std::size_t>(w); i < queries.size();
                     i += static_cast<std::size_t>(workers)) {
                    work(i);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    write_file(fs::path(opts.out_dir) / "search.csv", search_csv(results));
    std::printf("search: %zu queries over %zux%zu %s array -> %s/search.csv\n", queries.size(),
                grid.rows, grid.cols, design_name(design), opts.out_dir.c_str());
    return kExitOk;
}

int run_sweep(const CommonOpts& opts) {
    const RunConfig cfg = resolve_config(opts);
    const SweepResult result = build_sweep(cfg, std::max(1, cfg.threads));
    write_file(fs::path(opts.out_dir) / "sweep.csv", sweep_csv(result));
    std::printf("sweep: %zu rows -> %s/sweep.csv (trends %s)\n", result.rows.size(),
                opts.out_dir.c_str(), result.trends_ok ? "PASS" : "FAIL");
    return kExitOk;
}

int run_fom(const CommonOpts& opts) {
    const RunConfig cfg = resolve_config(opts);
    const FomReport report = build_fom(cfg);
    write_file(fs::path(opts.out_dir) / "fom.csv", fom_csv(report));
    write_file(fs::path(opts.out_dir) / "fom.json", fom_json(report).dump(2) + "\n");
    std::printf("fom: %zu rows -> %s/fom.csv, %s/fom.json\n", report.rows.size(),
                opts.out_dir.c_str(), opts.out_dir.c_str());
    return kExitOk;
}

int run_waveform(const CommonOpts& opts, const std::string& scenario, double time_step) {
    const RunConfig cfg = resolve_config(opts);
    const CellDesign design = cfg.designs.front();
    if (!is_paired_design(design)) {
        std::fprintf(stderr, "waveform scenarios are defined for the two-step 1.5T1Fe designs\n");
        return kExitValidation;
    }

    RunConfig one_row = cfg;
    one_row.rows = 1;
    const ArrayConfig c = one_row.array_config(design);

    // One-row array built to exhibit the requested case. Mismatches use the
    // store-1/search-0 path.
    std::vector<TernaryBit> words(c.cols, TernaryBit::DontCare);
    if (scenario == "step1_miss") {
        words[0] = TernaryBit::One;
    } else if (scenario == "step2_miss") {
        words[1] = TernaryBit::One;
    } else if (scenario != "match") {
        throw ParseError("unknown scenario \"" + scenario +
                         "\" (expected match, step1_miss, or step2_miss)");
    }
    const ArrayState state = program(c, words).state;
    const std::vector<SearchBit> query(c.cols, SearchBit::Zero);

    const double dt = time_step > 0
                          ? time_step
                          : search_latency(design, c.cols, c.dev, c.div, c.tml, c.timing)
                                    .one_step_s /
                                50.0;
    const WaveformTrace trace = waveform_trace(c, state, query, dt);
    write_file(fs::path(opts.out_dir) / "waveform.csv", waveform_csv(trace));
    std::printf("waveform: %s scenario, %zu samples -> %s/waveform.csv\n", scenario.c_str(),
                trace.time_s.size(), opts.out_dir.c_str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"FeFET TCAM design-space explorer"};
    app.require_subcommand(1);

    CommonOpts opts;

    CLI::App* validate = app.add_subcommand(
        "validate", "check device, divider, and cell-level design constraints");
    add_common(validate, opts);

    CLI::App* search_cmd =
        app.add_subcommand("search", "run queries against a programmed array");
    add_common(search_cmd, opts);
    std::string contents_path;
    std::string queries_path;
    std::size_t random_queries = 0;
    search_cmd->add_option("--contents", contents_path, "stored-word grid file ({0,1,X} rows)");
    search_cmd->add_option("--queries", queries_path, "query file ({0,1} rows)");
    search_cmd->add_option("--random-queries", random_queries,
                           "generate this many random queries over a random array");

    CLI::App* sweep = app.add_subcommand("sweep", "word-length sweep with trend checks");
    add_common(sweep, opts);

    CLI::App* fom = app.add_subcommand("fom", "figure-of-merit report (CSV + JSON)");
    add_common(fom, opts);

    CLI::App* waveform =
        app.add_subcommand("waveform", "match-line transient trace for one search");
    add_common(waveform, opts);
    std::string scenario = "match";
    double time_step = 0;
    waveform->add_option("--scenario", scenario, "match, step1_miss, or step2_miss")
        ->capture_default_str();
    waveform->add_option("--time-step", time_step, "trace sampling step in seconds");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return run_validate(opts);
        if (search_cmd->parsed()) {
            return run_search(opts, contents_path, queries_path, random_queries);
        }
        if (sweep->parsed()) return run_sweep(opts);
        if (fom->parsed()) return run_fom(opts);
        if (waveform->parsed()) return run_waveform(opts, scenario, time_step);
    } catch (const ParseError& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return kExitInputFormat;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "validation error: %s\n", e.what());
        return kExitValidation;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return kExitOk;
}
