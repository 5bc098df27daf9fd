// Acceptance suite: every release criterion in one binary, one PASS/FAIL
// line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fetcam/report.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace fetcam;

namespace {

constexpr CellDesign kAllDesigns[] = {CellDesign::TwoFefetSg, CellDesign::TwoFefetDg,
                                      CellDesign::OneFiveT1FeSg, CellDesign::OneFiveT1FeDg};

int g_failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail = "") {
    std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, what.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

bool within(double value, double target, double rel) {
    return std::abs(value - target) <= rel * target;
}

std::vector<TernaryBit> nth_row(std::size_t index, std::size_t width) {
    std::vector<TernaryBit> row(width);
    for (std::size_t i = 0; i < width; ++i) {
        row[i] = static_cast<TernaryBit>(index % 3);
        index /= 3;
    }
    return row;
}

std::vector<SearchBit> nth_query(std::size_t index, std::size_t width) {
    std::vector<SearchBit> q(width);
    for (std::size_t i = 0; i < width; ++i) {
        q[i] = index & (1u << i) ? SearchBit::One : SearchBit::Zero;
    }
    return q;
}

// 1. Exact functional equivalence with the ternary wildcard oracle: 6-combo
// cell tables, exhaustive 1x4 arrays, and 10,000 seeded 2x4 samples per
// design, in under 10 seconds.
void criterion_1() {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;

    for (CellDesign design : kAllDesigns) {
        const ArrayConfig cfg = make_default_config(design, 1, 4);

        for (TernaryBit stored : {TernaryBit::Zero, TernaryBit::One, TernaryBit::DontCare}) {
            for (SearchBit q : {SearchBit::Zero, SearchBit::One}) {
                const bool expect = oracle::cell_mismatch(stored, q);
                const bool got =
                    is_paired_design(design)
                        ? evaluate_match_1p5(encode_single(stored), q, cfg.dev, cfg.div)
                              .tml_conducting
                        : evaluate_match_2fefet(encode_pair(stored), q, cfg.dev, cfg.div)
                              .pulls_down;
                if (got != expect) {
                    ok = false;
                    detail = std::string("cell table broke for ") + design_name(design);
                }
            }
        }

        for (std::size_t row_index = 0; row_index < 81 && ok; ++row_index) {
            const auto row = nth_row(row_index, 4);
            const ArrayState state = program(cfg, row).state;
            for (std::size_t qi = 0; qi < 16; ++qi) {
                const auto q = nth_query(qi, 4);
                if (search(cfg, state, q).match_mask[0] != oracle::row_matches(row, q)) {
                    ok = false;
                    detail = std::string("1x4 exhaustion broke for ") + design_name(design);
                    break;
                }
            }
        }

        const ArrayConfig cfg2 = make_default_config(design, 2, 4);
        std::mt19937_64 rng(12345);
        for (int sample = 0; sample < 10000 && ok; ++sample) {
            const auto words = oracle::random_words(rng, 8);
            const auto q = oracle::random_query(rng, 4);
            const ArrayState state = program(cfg2, words).state;
            const SearchOutcome out = search(cfg2, state, q);
            for (std::size_t row = 0; row < 2; ++row) {
                const std::vector<TernaryBit> stored(words.begin() + row * 4,
                                                     words.begin() + (row + 1) * 4);
                if (out.match_mask[row] != oracle::row_matches(stored, q)) {
                    ok = false;
                    detail = std::string("2x4 sample broke for ") + design_name(design);
                }
            }
        }
    }

    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= 10.0) {
        ok = false;
        detail = "runtime " + std::to_string(seconds) + " s";
    }
    report(1, "functional oracle (cell tables, 1x4 exhaustive, 10k 2x4 samples, all designs)",
           ok, detail);
}

// 2. Divider algebra against exact rational arithmetic, 1e-12 relative.
void criterion_2() {
    std::mt19937_64 rng(777);
    auto log_uniform = [&](double lo, double hi) {
        std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
        return std::exp(u(rng));
    };
    bool ok = true;
    for (int i = 0; i < 10000 && ok; ++i) {
        DividerParams div;
        div.vdd_v = std::uniform_real_distribution<double>(0.4, 1.5)(rng);
        div.r_n_ohm = log_uniform(1e4, 1e8);
        div.r_p_ohm = log_uniform(1e6, 1e10);
        const double r_fe = log_uniform(1e3, 1e12);
        for (SearchBit b : {SearchBit::Zero, SearchBit::One}) {
            const double got = divider_voltage(b, r_fe, div);
            const double want = oracle::divider_voltage_rational(b, r_fe, div);
            if (std::abs(got - want) > 1e-12 * std::abs(want)) ok = false;
        }
    }
    report(2, "divider voltages match rational arithmetic to 1e-12 over 10k draws", ok);
}

// 3. Averaging identity on the reference step energies.
void criterion_3() {
    const double a = average_search_energy_j(0.13, 0.21, 0.9);
    const double b = average_search_energy_j(0.11, 0.16, 0.9);
    // Exact identity within 0.0005 fJ; the two-decimal report then rounds to
    // 0.14 / 0.12 (within half a printed unit).
    const bool ok = std::abs(a - 0.138) <= 0.0005 && std::abs(b - 0.115) <= 0.0005 &&
                    std::abs(a - 0.14) <= 0.005 && std::abs(b - 0.12) <= 0.005;
    char detail[96];
    std::snprintf(detail, sizeof(detail), "0.9*0.13+0.1*0.21 = %.4f fJ, 0.9*0.11+0.1*0.16 = %.4f fJ",
                  a, b);
    report(3, "average search energy reproduces the reported 0.14 / 0.12 fJ", ok, detail);
}

// 4. Write-energy constants and their 1x/2x/2x/4x ratios.
void criterion_4() {
    const CellConstants cc;
    const bool constants_ok = cc.write_2sg_fj == 1.63 && cc.write_2dg_fj == 0.81 &&
                              cc.write_1p5sg_fj == 0.82 && cc.write_1p5dg_fj == 0.41;
    const bool ratios_ok = within(cc.write_2sg_fj / cc.write_2dg_fj, 2.0, 0.01) &&
                           within(cc.write_2sg_fj / cc.write_1p5sg_fj, 2.0, 0.01) &&
                           within(cc.write_2sg_fj / cc.write_1p5dg_fj, 4.0, 0.01);
    report(4, "write energies 1.63/0.81/0.82/0.41 fJ with 1x/2x/2x/4x ratios",
           constants_ok && ratios_ok);
}

// 5. Calibrated latency and energy targets at 64x64, +/-25%, with the strict
// family orderings.
void criterion_5() {
    const FomReport fom = build_fom(RunConfig{});
    auto row = [&](const char* name) -> const FomRow& {
        for (const FomRow& r : fom.rows) {
            if (r.name == name) return r;
        }
        throw std::logic_error("missing row");
    };
    const FomRow& sg2 = row("2SG-FeFET");
    const FomRow& dg2 = row("2DG-FeFET");
    const FomRow& sg15 = row("1.5T1SG-Fe");
    const FomRow& dg15 = row("1.5T1DG-Fe");

    struct Target {
        double value, target;
    };
    const Target latency_targets[] = {
        {sg15.latency_1step_ps, 159}, {sg15.latency_full_ps, 351},
        {dg15.latency_1step_ps, 231}, {dg15.latency_full_ps, 481},
        {sg2.latency_full_ps, 582},   {dg2.latency_full_ps, 1147},
    };
    const Target energy_targets[] = {
        {sg15.energy_1step_fj, 0.11}, {sg15.energy_2step_fj, 0.16},
        {dg15.energy_1step_fj, 0.13}, {dg15.energy_2step_fj, 0.21},
        {sg2.energy_avg_fj, 0.17},    {dg2.energy_avg_fj, 0.25},
    };

    bool ok = true;
    std::string detail;
    char buf[128];
    for (const Target& t : latency_targets) {
        if (!within(t.value, t.target, 0.25)) {
            ok = false;
            std::snprintf(buf, sizeof(buf), "latency %.1f ps vs target %.0f ps", t.value,
                          t.target);
            detail = buf;
        }
    }
    for (const Target& t : energy_targets) {
        if (!within(t.value, t.target, 0.25)) {
            ok = false;
            std::snprintf(buf, sizeof(buf), "energy %.3f fJ vs target %.2f fJ", t.value,
                          t.target);
            detail = buf;
        }
    }

    const bool order_ok = sg15.latency_full_ps < dg15.latency_full_ps &&
                          sg2.latency_full_ps < dg2.latency_full_ps &&
                          sg15.latency_full_ps < sg2.latency_full_ps &&
                          dg15.latency_full_ps < dg2.latency_full_ps &&
                          sg15.latency_1step_ps < dg15.latency_1step_ps;
    if (!order_ok) {
        ok = false;
        detail = "latency ordering violated";
    }
    std::snprintf(buf, sizeof(buf), "1-step %.0f/%.0f ps, full %.0f/%.0f/%.0f/%.0f ps",
                  sg15.latency_1step_ps, dg15.latency_1step_ps, sg15.latency_full_ps,
                  dg15.latency_full_ps, sg2.latency_full_ps, dg2.latency_full_ps);
    report(5, "calibrated figures of merit within +/-25% with strict orderings", ok,
           ok ? buf : detail);
}

// 6. Qualitative word-length trends over {16, 32, 64, 128}.
void criterion_6() {
    bool ok = true;
    std::string detail;
    const std::size_t grid[] = {16, 32, 64, 128};

    double growth[4] = {0, 0, 0, 0};
    int design_index = 0;
    for (CellDesign d : kAllDesigns) {
        const ArrayConfig cfg = make_default_config(d, 64, 64);
        double prev_latency = 0;
        double prev_energy = is_paired_design(d) ? 0 : 1;
        double first_latency = 0, last_latency = 0;
        for (std::size_t n : grid) {
            const SearchLatency lat =
                search_latency(d, n, cfg.dev, cfg.div, cfg.tml, cfg.timing);
            const FomEnergy e =
                fom_search_energy(d, n, cfg.dev, cfg.div, cfg.tml, cfg.timing, 0.9);
            if (lat.full_s <= prev_latency) {
                ok = false;
                detail = std::string("latency not increasing for ") + design_name(d);
            }
            const bool energy_ok = is_paired_design(d) ? e.avg_per_cell_j >= prev_energy
                                                       : e.avg_per_cell_j <= prev_energy;
            if (!energy_ok) {
                ok = false;
                detail = std::string("energy trend broke for ") + design_name(d);
            }
            prev_latency = lat.full_s;
            prev_energy = e.avg_per_cell_j;
            if (n == grid[0]) first_latency = lat.full_s;
            last_latency = lat.full_s;
        }
        growth[design_index++] = last_latency / first_latency;
    }
    // Index order: 2SG, 2DG, 1.5SG, 1.5DG.
    if (!(growth[2] < growth[0] && growth[3] < growth[1])) {
        ok = false;
        detail = "1.5T1Fe latency growth not below the 2FeFET counterpart";
    }
    report(6, "word-length trends (latency up, energy by family, slower 1.5T1Fe growth)", ok,
           detail);
}

// 7. Early-termination properties over 1,000 randomized instances.
void criterion_7() {
    std::mt19937_64 rng(4242);
    bool ok = true;
    std::string detail;
    for (int instance = 0; instance < 1000 && ok; ++instance) {
        const CellDesign design =
            instance % 2 ? CellDesign::OneFiveT1FeDg : CellDesign::OneFiveT1FeSg;
        const std::size_t rows = 1 + rng() % 8;
        const std::size_t cols = 2 * (1 + rng() % 8);
        ArrayConfig with_et = make_default_config(design, rows, cols);
        ArrayConfig without_et = with_et;
        without_et.early_termination = false;

        const auto words = oracle::random_words(rng, rows * cols);
        const auto q = oracle::random_query(rng, cols);
        const ArrayState state = program(with_et, words).state;
        const SearchOutcome on = search(with_et, state, q);
        const SearchOutcome off = search(without_et, state, q);

        if (on.match_mask != off.match_mask) {
            ok = false;
            detail = "match mask changed";
        }
        if (on.total_energy_j > off.total_energy_j) {
            ok = false;
            detail = "termination raised the energy";
        }
        bool any_step1 = false;
        for (std::size_t row = 0; row < rows; ++row) {
            any_step1 |= on.per_row[row].terminated_at == StepTermination::Step1;
            if (on.per_row[row].energy.precharge_j != off.per_row[row].energy.precharge_j) {
                ok = false;
                detail = "precharge differed between modes";
            }
        }
        if (any_step1 && !(on.total_energy_j < off.total_energy_j)) {
            ok = false;
            detail = "no strict saving despite a step-1 termination";
        }
        if (!any_step1 && on.total_energy_j != off.total_energy_j) {
            ok = false;
            detail = "energies differ with no step-1 termination";
        }
    }
    report(7, "early termination: bounded energy, equal masks, precharge parity (1k cases)", ok,
           detail);
}

// 8. Structure accounting: wells, driver halving, area ratios.
void criterion_8() {
    bool ok = true;
    std::string detail;

    const ArrayConfig dg15 = make_default_config(CellDesign::OneFiveT1FeDg, 64, 64);
    const ArrayConfig dg2 = make_default_config(CellDesign::TwoFefetDg, 64, 64);
    if (wells_and_drivers(dg15).p_well_count != 128) {
        ok = false;
        detail = "1.5T1DG wells != 2M";
    }
    if (wells_and_drivers(dg2).p_well_count != 128) {
        ok = false;
        detail = "2DG wells != 2N";
    }
    for (CellDesign d : {CellDesign::TwoFefetSg, CellDesign::OneFiveT1FeSg}) {
        if (wells_and_drivers(make_default_config(d, 64, 64)).p_well_count != 0) {
            ok = false;
            detail = "SG design reported isolated wells";
        }
    }
    for (CellDesign d : kAllDesigns) {
        ArrayConfig shared = make_default_config(d, 64, 64);
        ArrayConfig unshared = shared;
        unshared.driver_shared = false;
        if (wells_and_drivers(shared).hv_driver_count * 2 !=
            wells_and_drivers(unshared).hv_driver_count) {
            ok = false;
            detail = "driver sharing is not an exact halving";
        }
    }

    const CellConstants cc;
    const struct {
        CellDesign design;
        double ratio;
    } areas[] = {
        {CellDesign::TwoFefetSg, 3.01},
        {CellDesign::TwoFefetDg, 1.40},
        {CellDesign::OneFiveT1FeSg, 2.65},
        {CellDesign::OneFiveT1FeDg, 1.83},
    };
    for (const auto& a : areas) {
        if (std::abs(cc.cmos_area_um2 / cc.area_um2(a.design) - a.ratio) > 0.01) {
            ok = false;
            detail = std::string("area ratio off for ") + design_name(a.design);
        }
    }
    report(8, "wells (2M / 2N / 0), exact driver halving, area ratios within 0.01", ok, detail);
}

// 9. Byte-identical CLI outputs across thread counts with a fixed seed.
void criterion_9() {
    const fs::path base =
        fs::temp_directory_path() / ("fetcam_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(base);
    fs::create_directories(base);

    auto run = [&](const std::string& args) {
        const std::string cmd = std::string(DSE_CLI_PATH) + " " + args + " > /dev/null 2>&1";
        return std::system(cmd.c_str()) == 0;
    };
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };

    bool ok = true;
    std::string detail;
    const fs::path t1 = base / "t1";
    const fs::path t4 = base / "t4";
    if (!run("sweep --threads 1 --seed 5 --out " + t1.string()) ||
        !run("sweep --threads 4 --seed 5 --out " + t4.string()) ||
        !run("search --design 1.5T1DG-Fe --random-queries 16 --seed 5 --threads 1 --out " +
             t1.string()) ||
        !run("search --design 1.5T1DG-Fe --random-queries 16 --seed 5 --threads 4 --out " +
             t4.string())) {
        ok = false;
        detail = "CLI invocation failed";
    } else {
        if (slurp(t1 / "sweep.csv") != slurp(t4 / "sweep.csv")) {
            ok = false;
            detail = "sweep.csv differs across thread counts";
        }
        if (slurp(t1 / "search.csv") != slurp(t4 / "search.csv")) {
            ok = false;
            detail = "search.csv differs across thread counts";
        }
        if (slurp(t1 / "search.csv").empty()) {
            ok = false;
            detail = "search.csv empty";
        }
    }
    fs::remove_all(base);
    report(9, "byte-identical sweep and search outputs across 1 and 4 threads", ok, detail);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();

    if (g_failures > 0) {
        std::printf("%d criteria FAILED\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
