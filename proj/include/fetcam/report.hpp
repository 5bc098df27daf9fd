#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fetcam/config.hpp"
#include "fetcam/grid_io.hpp"

namespace fetcam {

// One figure-of-merit row. Ratios are recomputed from the value columns
// (baseline / value), never copied from external tables.
struct FomRow {
    std::string name;
    std::string write_voltage;
    std::string fe_thickness;
    double cell_area_um2 = 0;
    double write_energy_per_cell_fj = 0;  // 0 marks not-applicable (CMOS row)
    double latency_1step_ps = 0;
    double latency_full_ps = 0;
    double energy_1step_fj = 0;
    double energy_2step_fj = 0;
    double energy_avg_fj = 0;
    double area_ratio = 0;          // vs 16T CMOS
    double latency_ratio = 0;       // vs 16T CMOS, full search
    double energy_ratio = 0;        // vs 16T CMOS, average energy
    double write_energy_ratio = 0;  // vs 2SG-FeFET
};

struct FomReport {
    std::vector<FomRow> rows;  // 16T CMOS baseline first
};

FomReport build_fom(const RunConfig& cfg);
std::string fom_csv(const FomReport& report);
nlohmann::json fom_json(const FomReport& report);

struct SweepRow {
    CellDesign design;
    std::size_t word_len = 0;
    double latency_1step_s = 0;
    double latency_full_s = 0;
    double energy_per_cell_avg_j = 0;
};

struct SweepResult {
    std::vector<SweepRow> rows;           // ordered by (design, word_len)
    std::vector<std::string> trend_notes;  // summary footer, one note per check
    bool trends_ok = true;
};

// Word-length sweep over the configured grid with trend checks: latency must
// rise strictly with word length; per-cell energy must not rise for 2FeFET
// designs and must not fall for 1.5T1Fe designs; 1.5T1Fe latency growth must
// stay below the 2FeFET growth of the same device family.
SweepResult build_sweep(const RunConfig& cfg, int threads);
std::string sweep_csv(const SweepResult& result);

struct QueryResult {
    std::vector<SearchBit> query;
    SearchOutcome outcome;
};

std::string search_csv(const std::vector<QueryResult>& results);
std::string waveform_csv(const WaveformTrace& trace);

// Fixed-precision numeric formatting shared by all CSV emitters: energies in
// femtojoules with three significant digits, everything else via %.*g.
std::string format_fj(double joules);
std::string format_g(double value, int significant = 6);

}  // namespace fetcam
