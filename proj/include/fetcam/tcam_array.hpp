#pragma once

#include <cstdint>
#include <vector>

#include "fetcam/perf_model.hpp"

namespace fetcam {

// Full description of one array instance: geometry, cell design, device and
// sensing parameters, timing constants, and the search-protocol switches.
struct ArrayConfig {
    std::size_t rows = 64;
    std::size_t cols = 64;
    CellDesign design = CellDesign::OneFiveT1FeDg;

    FeFetParams dev;
    DividerParams div;
    MosfetParams tml = tml_default();
    TimingParams timing;
    CellConstants cells;

    bool driver_shared = true;
    // Skip step 2 for the whole array when every row misses in step 1, and
    // (with step2_row_gating) keep SeL_b low for rows already mismatched.
    bool early_termination = true;
    bool step2_row_gating = true;
    // Assumed fraction of rows that miss in step 1, for expected-energy
    // reporting only.
    double step1_miss_rate = 0.9;

    void validate() const;
};

// Assembles device preset, divider defaults and calibrated timing constants
// for one design.
ArrayConfig make_default_config(CellDesign design, std::size_t rows, std::size_t cols);

// Programmed array: the ternary contents plus the realized per-FeFET
// polarizations (one per cell for 1.5T1Fe, a complementary pair for 2FeFET).
struct ArrayState {
    CellDesign design = CellDesign::OneFiveT1FeDg;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<TernaryBit> stored;       // rows x cols, row-major
    std::vector<PolarizationState> fe;    // cols per row (1.5T1Fe) or 2*cols (2FeFET)
    std::vector<double> ml_voltages_v;    // per row, precharged to VDD

    TernaryBit at(std::size_t row, std::size_t col) const { return stored[row * cols + col]; }
};

struct ProgramResult {
    ArrayState state;
    int write_steps = 0;
    double write_energy_j = 0;
};

// Writes the word grid. 1.5T1Fe arrays take three passes (one per target
// state); 2FeFET arrays take two.
ProgramResult program(const ArrayConfig& config, const std::vector<TernaryBit>& words);

enum class StepTermination : std::uint8_t { None = 0, Step1 = 1, Step2 = 2 };

struct RowOutcome {
    bool match = false;
    StepTermination terminated_at = StepTermination::None;
    double latency_s = 0;
    EnergyBreakdown energy;
};

struct SearchOutcome {
    std::vector<bool> match_mask;
    std::vector<RowOutcome> per_row;
    double total_latency_s = 0;
    double total_energy_j = 0;
    // SeL_b was never raised: every row missed in step 1.
    bool global_early_stop = false;
};

// One search over the whole array. 2FeFET designs evaluate in a single NOR
// step; 1.5T1Fe designs search even columns (cell 1) in step 1 and odd
// columns (cell 2) in step 2, with early termination per ArrayConfig.
SearchOutcome search(const ArrayConfig& config, const ArrayState& state,
                     const std::vector<SearchBit>& query);

struct Scenario {
    ArrayState state;
    std::vector<SearchBit> query;
};

// Benchmark input: row 0 mismatches through exactly one cell (the slowest
// pull-down path); all other cells are wildcards.
Scenario worst_case_latency_scenario(const ArrayConfig& config);

// Isolated P-wells (row-wise SeL wells for 1.5T1DG, column-wise SL wells for
// 2DG, none for SG designs) and HV driver counts, halved under sharing.
WellDriverReport wells_and_drivers(const ArrayConfig& config);

struct WaveformTrace {
    std::vector<double> time_s;
    std::vector<double> sel_a_v;
    std::vector<double> sel_b_v;
    std::vector<std::vector<double>> ml_v;  // [row][sample]
    std::vector<std::vector<int>> sa_out;   // [row][sample]
    double step1_end_s = 0;
    double step2_start_s = 0;
    double search_end_s = 0;
};

// Piecewise-exponential ML transient of one search, sampled at time_step.
WaveformTrace waveform_trace(const ArrayConfig& config, const ArrayState& state,
                             const std::vector<SearchBit>& query, double time_step_s);

}  // namespace fetcam
