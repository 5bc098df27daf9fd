#include "fetcam/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <thread>

namespace fetcam {

namespace {

std::string voltage_label(const ArrayConfig& c) {
    char buf[64];
    if (is_paired_design(c.design)) {
        std::snprintf(buf, sizeof(buf), "+/-%gV; %gV", c.dev.write_pos_threshold_v,
                      c.dev.write_mid_level_v);
    } else {
        std::snprintf(buf, sizeof(buf), "+/-%gV", c.dev.write_pos_threshold_v);
    }
    return buf;
}

std::string thickness_label(const ArrayConfig& c) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%gnm", c.dev.fe_thickness_nm);
    return buf;
}

}  // namespace

std::string format_fj(double joules) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3g", joules * 1e15);
    return buf;
}

std::string format_g(double value, int significant) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*g", significant, value);
    return buf;
}

FomReport build_fom(const RunConfig& cfg) {
    FomReport report;
    const CellConstants cells = cfg.array_config(CellDesign::TwoFefetSg).cells;

    FomRow base;
    base.name = "16T CMOS";
    base.write_voltage = format_g(cells.cmos_write_voltage_v, 3) + "V";
    base.fe_thickness = "N.A.";
    base.cell_area_um2 = cells.cmos_area_um2;
    base.latency_1step_ps = cells.cmos_latency_ps;
    base.latency_full_ps = cells.cmos_latency_ps;
    base.energy_1step_fj = cells.cmos_search_energy_fj;
    base.energy_2step_fj = cells.cmos_search_energy_fj;
    base.energy_avg_fj = cells.cmos_search_energy_fj;
    base.area_ratio = 1.0;
    base.latency_ratio = 1.0;
    base.energy_ratio = 1.0;
    report.rows.push_back(base);

    const double write_base_fj = cells.write_energy_fj(CellDesign::TwoFefetSg);

    for (CellDesign d : {CellDesign::TwoFefetSg, CellDesign::TwoFefetDg,
                         CellDesign::OneFiveT1FeSg, CellDesign::OneFiveT1FeDg}) {
        const ArrayConfig c = cfg.array_config(d);
        const SearchLatency lat =
            search_latency(d, c.cols, c.dev, c.div, c.tml, c.timing);
        const FomEnergy e =
            fom_search_energy(d, c.cols, c.dev, c.div, c.tml, c.timing, c.step1_miss_rate);

        FomRow row;
        row.name = design_name(d);
        row.write_voltage = voltage_label(c);
        row.fe_thickness = thickness_label(c);
        row.cell_area_um2 = c.cells.area_um2(d);
        row.write_energy_per_cell_fj = c.cells.write_energy_fj(d);
        row.latency_1step_ps = lat.one_step_s * 1e12;
        row.latency_full_ps = lat.full_s * 1e12;
        row.energy_1step_fj = e.e1_per_cell_j * 1e15;
        row.energy_2step_fj = e.e2_per_cell_j * 1e15;
        row.energy_avg_fj = e.avg_per_cell_j * 1e15;
        row.area_ratio = c.cells.cmos_area_um2 / row.cell_area_um2;
        row.latency_ratio = c.cells.cmos_latency_ps / row.latency_full_ps;
        row.energy_ratio = c.cells.cmos_search_energy_fj / row.energy_avg_fj;
        row.write_energy_ratio = write_base_fj / row.write_energy_per_cell_fj;
        report.rows.push_back(row);
    }
    return report;
}

std::string fom_csv(const FomReport& report) {
    std::ostringstream out;
    out << "design,write_voltage,fe_thickness,cell_area_um2,write_energy_per_cell_fj,"
           "latency_1step_ps,latency_full_ps,energy_1step_fj,energy_2step_fj,energy_avg_fj,"
           "area_ratio,latency_ratio,energy_ratio,write_energy_ratio\n";
    for (const FomRow& r : report.rows) {
        out << r.name << ',' << r.write_voltage << ',' << r.fe_thickness << ','
            << format_g(r.cell_area_um2, 4) << ','
            << (r.write_energy_per_cell_fj > 0 ? format_g(r.write_energy_per_cell_fj, 4)
                                               : std::string("N.A."))
            << ',' << format_g(r.latency_1step_ps, 4) << ',' << format_g(r.latency_full_ps, 4)
            << ',' << format_fj(r.energy_1step_fj * 1e-15) << ','
            << format_fj(r.energy_2step_fj * 1e-15) << ',' << format_fj(r.energy_avg_fj * 1e-15)
            << ',' << format_g(r.area_ratio, 3) << ',' << format_g(r.latency_ratio, 3) << ','
            << format_g(r.energy_ratio, 3) << ','
            << (r.write_energy_ratio > 0 ? format_g(r.write_energy_ratio, 3)
                                         : std::string("N.A."))
            << '\n';
    }
    return out.str();
}

nlohmann::json fom_json(const FomReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const FomRow& r : report.rows) {
        nlohmann::json row{
            {"design", r.name},
            {"write_voltage", r.write_voltage},
            {"fe_thickness", r.fe_thickness},
            {"cell_area_um2", r.cell_area_um2},
            {"latency_1step_ps", r.latency_1step_ps},
            {"latency_full_ps", r.latency_full_ps},
            {"energy_1step_fj", r.energy_1step_fj},
            {"energy_2step_fj", r.energy_2step_fj},
            {"energy_avg_fj", r.energy_avg_fj},
            {"area_ratio", r.area_ratio},
            {"latency_ratio", r.latency_ratio},
            {"energy_ratio", r.energy_ratio},
        };
        if (r.write_energy_per_cell_fj > 0) {
            row["write_energy_per_cell_fj"] = r.write_energy_per_cell_fj;
            row["write_energy_ratio"] = r.write_energy_ratio;
        }
        rows.push_back(row);
    }
    return nlohmann::json{{"fom", rows}};
}

SweepResult build_sweep(const RunConfig& cfg, int threads) {
    const auto& grid = cfg.sweep_word_lengths;
    if (grid.empty()) throw ConfigError("sweep: word-length grid is empty");
    if (!std::is_sorted(grid.begin(), grid.end()) ||
        std::adjacent_find(grid.begin(), grid.end()) != grid.end()) {
        throw ConfigError("sweep: word-length grid must be strictly ascending");
    }

    SweepResult result;
    result.rows.resize(cfg.designs.size() * grid.size());

    auto compute_point = [&](std::size_t flat) {
        const CellDesign design = cfg.designs[flat / grid.size()];
        const std::size_t n = grid[flat % grid.size()];
        RunConfig point_cfg = cfg;
        point_cfg.cols = n;
        const ArrayConfig c = point_cfg.array_config(design);
        const SearchLatency lat = search_latency(design, n, c.dev, c.div, c.tml, c.timing);
        const FomEnergy e =
            fom_search_energy(design, n, c.dev, c.div, c.tml, c.timing, c.step1_miss_rate);
        result.rows[flat] =
            SweepRow{design, n, lat.one_step_s, lat.full_s, e.avg_per_cell_j};
    };

    const std::size_t total = result.rows.size();
    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(total)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < total; ++i) compute_point(i);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = static_cast<std::size_t>(w); i < total;
                     i += static_cast<std::size_t>(workers)) {
                    compute_point(i);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    // Trend checks per design, then the growth-rate comparison per family.
    auto rows_of = [&](CellDesign d) {
        std::vector<SweepRow> rows;
        for (const SweepRow& r : result.rows) {
            if (r.design == d) rows.push_back(r);
        }
        return rows;
    };

    auto note = [&](const std::string& what, bool ok) {
        result.trend_notes.push_back(what + ',' + (ok ? "PASS" : "FAIL"));
        result.trends_ok &= ok;
    };

    for (CellDesign d : cfg.designs) {
        const auto rows = rows_of(d);
        bool latency_up = true;
        bool energy_ok = true;
        for (std::size_t i = 1; i < rows.size(); ++i) {
            latency_up &= rows[i].latency_full_s > rows[i - 1].latency_full_s;
            if (is_paired_design(d)) {
                energy_ok &= rows[i].energy_per_cell_avg_j >= rows[i - 1].energy_per_cell_avg_j;
            } else {
                energy_ok &= rows[i].energy_per_cell_avg_j <= rows[i - 1].energy_per_cell_avg_j;
            }
        }
        note(std::string(design_name(d)) + ",latency_strictly_increasing", latency_up);
        note(std::string(design_name(d)) +
                 (is_paired_design(d) ? ",energy_per_cell_non_decreasing"
                                      : ",energy_per_cell_non_increasing"),
             energy_ok);
    }

    auto growth = [&](CellDesign d) -> double {
        const auto rows = rows_of(d);
        if (rows.size() < 2) return 0;
        return rows.back().latency_full_s / rows.front().latency_full_s;
    };
    auto has = [&](CellDesign d) {
        return std::find(cfg.designs.begin(), cfg.designs.end(), d) != cfg.designs.end();
    };
    if (grid.size() >= 2) {
        if (has(CellDesign::OneFiveT1FeSg) && has(CellDesign::TwoFefetSg)) {
            note("1.5T1SG-Fe,latency_growth_below_2SG-FeFET",
                 growth(CellDesign::OneFiveT1FeSg) < growth(CellDesign::TwoFefetSg));
        }
        if (has(CellDesign::OneFiveT1FeDg) && has(CellDesign::TwoFefetDg)) {
            note("1.5T1DG-Fe,latency_growth_below_2DG-FeFET",
                 growth(CellDesign::OneFiveT1FeDg) < growth(CellDesign::TwoFefetDg));
        }
    }
    return result;
}

std::string sweep_csv(const SweepResult& result) {
    std::ostringstream out;
    out << "design,word_len,latency_1step_ps,latency_full_ps,energy_per_cell_avg_fj\n";
    for (const SweepRow& r : result.rows) {
        out << design_name(r.design) << ',' << r.word_len << ','
            << format_g(r.latency_1step_s * 1e12, 6) << ','
            << format_g(r.latency_full_s * 1e12, 6) << ','
            << format_fj(r.energy_per_cell_avg_j) << '\n';
    }
    for (const std::string& note : result.trend_notes) out << "# trend," << note << '\n';
    return out.str();
}

std::string search_csv(const std::vector<QueryResult>& results) {
    std::ostringstream out;
    out << "query_index,query,matched_rows,terminated_steps,global_early_stop,total_latency_s,"
           "precharge_fj,sense_amp_fj,divider_static_fj,signal_switching_fj,total_energy_fj\n";
    for (std::size_t qi = 0; qi < results.size(); ++qi) {
        const QueryResult& r = results[qi];
        std::string matched;
        std::string steps;
        EnergyBreakdown sum;
        for (std::size_t row = 0; row < r.outcome.per_row.size(); ++row) {
            const RowOutcome& ro = r.outcome.per_row[row];
            if (ro.match) {
                if (!matched.empty()) matched += '|';
                matched += std::to_string(row);
            }
            steps += ro.terminated_at == StepTermination::Step1   ? '1'
                     : ro.terminated_at == StepTermination::Step2 ? '2'
                                                                  : '-';
            sum.precharge_j += ro.energy.precharge_j;
            sum.sense_amp_j += ro.energy.sense_amp_j;
            sum.divider_static_j += ro.energy.divider_static_j;
            sum.signal_switching_j += ro.energy.signal_switching_j;
        }
        out << qi << ',' << to_string(r.query) << ',' << matched << ',' << steps << ','
            << (r.outcome.global_early_stop ? 1 : 0) << ','
            << format_g(r.outcome.total_latency_s, 6) << ',' << format_fj(sum.precharge_j) << ','
            << format_fj(sum.sense_amp_j) << ',' << format_fj(sum.divider_static_j) << ','
            << format_fj(sum.signal_switching_j) << ',' << format_fj(r.outcome.total_energy_j)
            << '\n';
    }
    return out.str();
}

std::string waveform_csv(const WaveformTrace& trace) {
    std::ostringstream out;
    out << "time_s,sel_a_v,sel_b_v";
    for (std::size_t row = 0; row < trace.ml_v.size(); ++row) out << ",ml_row" << row << "_v";
    for (std::size_t row = 0; row < trace.sa_out.size(); ++row) out << ",sa_row" << row;
    out << '\n';
    for (std::size_t i = 0; i < trace.time_s.size(); ++i) {
        out << format_g(trace.time_s[i], 6) << ',' << format_g(trace.sel_a_v[i], 6) << ','
            << format_g(trace.sel_b_v[i], 6);
        for (const auto& ml : trace.ml_v) out << ',' << format_g(ml[i], 6);
        for (const auto& sa : trace.sa_out) out << ',' << sa[i];
        out << '\n';
    }
    return out.str();
}

}  // namespace fetcam
