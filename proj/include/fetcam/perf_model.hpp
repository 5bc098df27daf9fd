#pragma once

#include <cstddef>

#include "fetcam/tcam_cell.hpp"

namespace fetcam {

// Per-cell layout constants and the 16T CMOS reference row used for
// figure-of-merit reporting.
struct CellConstants {
    double area_2sg_um2 = 0.095;
    double area_2dg_um2 = 0.204;
    double area_1p5sg_um2 = 0.108;
    double area_1p5dg_um2 = 0.156;

    double write_2sg_fj = 1.63;
    double write_2dg_fj = 0.81;
    double write_1p5sg_fj = 0.82;
    double write_1p5dg_fj = 0.41;

    // P-well spacing is already folded into the per-cell areas; a nonzero
    // value here adds an explicit per-well term on top.
    double well_spacing_overhead_um2 = 0.0;

    // 16T CMOS baseline (14nm SOI, 64-bit words).
    double cmos_area_um2 = 0.286;
    double cmos_latency_ps = 235.0;
    double cmos_search_energy_fj = 0.53;
    double cmos_write_voltage_v = 0.9;

    double area_um2(CellDesign design) const;
    double write_energy_fj(CellDesign design) const;
};

// Electrical and timing constants of one design instance. Defaults are the
// shipped calibration; every field can be overridden from the config file.
struct TimingParams {
    // ML load: per FeFET drain for 2FeFET cells, per TML (one per 2 cells)
    // for 1.5T1Fe cells.
    double c_ml_per_cell_f = 3e-17;
    // ML wire capacitance per cell, scaled from the cell pitch.
    double c_wire_per_cell_f = 7.9e-17;
    // Select/search-line load per cell (the read-gate capacitance seen by
    // SeL or SL).
    double c_sl_per_cell_f = 1.8e-17;
    // Remaining column lines (Wr/SL, SL, BL) per cell; 1.5T1Fe only.
    double c_col_per_cell_f = 4e-17;

    double sa_energy_j = 1e-16;    // per sense, per row
    double sa_threshold_v = 0.44;  // SA trip point on the ML
    double write_pulse_s = 1e-8;
    double search_pulse_s = 1e-11;  // per-step signal setup/switching time
    double sense_fraction = 0.5;    // ML decay target V_sense / V_precharge
    double interstep_slack_frac = 0.2;

    static TimingParams defaults_for(CellDesign design);
    static TimingParams defaults_for(CellDesign design, const CellConstants& cells);
};

void validate(const TimingParams& t);

// Isolated-well and high-voltage-driver accounting for one array.
struct WellDriverReport {
    std::size_t p_well_count = 0;
    std::size_t hv_driver_count = 0;
};

struct EnergyBreakdown {
    double precharge_j = 0;
    double sense_amp_j = 0;
    double divider_static_j = 0;
    double signal_switching_j = 0;
    double total_j() const {
        return precharge_j + sense_amp_j + divider_static_j + signal_switching_j;
    }
};

// Total ML capacitance of one word. 2FeFET rows load the ML with two device
// drains per cell; 1.5T1Fe rows with one TML per cell pair.
double ml_capacitance_f(CellDesign design, std::size_t word_len, const TimingParams& t);

// First-order RC discharge to the sense fraction: r * c * ln(1/sense_fraction).
double discharge_latency_s(double c_ml_f, double r_pull_ohm, const TimingParams& t);

// TML resistance corrected for its actual gate drive. r_on is quoted at full
// drive (v_gs = vdd); a partially driven gate scales it by the inverse square
// of the overdrive ratio (saturation-mode discharge).
double tml_effective_resistance(const MosfetParams& tml, double v_gate_v, double vdd_v);

// Worst-case single-cell-mismatch pull-down resistance: the conducting LVT
// FeFET for 2FeFET designs, the most weakly driven mismatching TML for
// 1.5T1Fe designs.
double pull_down_resistance_ohm(CellDesign design, const FeFetParams& dev,
                                const DividerParams& div, const MosfetParams& tml);

struct SearchLatency {
    double one_step_s = 0;
    double full_s = 0;  // 2FeFET: equals one_step; 1.5T1Fe: two steps plus slack
};

SearchLatency search_latency(CellDesign design, std::size_t word_len, const FeFetParams& dev,
                             const DividerParams& div, const MosfetParams& tml,
                             const TimingParams& t);

// Expected energy under a step-1 miss rate p: p * e_one_step + (1-p) * e_two_step.
double average_search_energy_j(double e_one_step_j, double e_two_step_j, double step1_miss_rate);

// Constant per-cell write energy scaled by cell count.
double write_energy_j(CellDesign design, std::size_t cell_count, const CellConstants& cells);

// Cell-array area plus the optional explicit well-spacing term.
double area_estimate_um2(CellDesign design, std::size_t rows, std::size_t cols,
                         const CellConstants& cells, const WellDriverReport& wells);

// Reporting convention for figure-of-merit energies: half the cells store
// Zero and half store One, with query bits split evenly over each stored
// value. e1 is a row that stops after step 1, e2 a row that runs both steps.
struct FomEnergy {
    double e1_per_cell_j = 0;
    double e2_per_cell_j = 0;
    double avg_per_cell_j = 0;
};

FomEnergy fom_search_energy(CellDesign design, std::size_t word_len, const FeFetParams& dev,
                            const DividerParams& div, const MosfetParams& tml,
                            const TimingParams& t, double step1_miss_rate);

}  // namespace fetcam
