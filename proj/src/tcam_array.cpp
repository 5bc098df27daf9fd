#include "fetcam/tcam_array.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace fetcam {

namespace {

int state_index(PolarizationState s) { return static_cast<int>(s); }

// Resistances and divider responses hoisted out of the per-cell loop; one
// device-model evaluation per polarization state per search.
struct CellTables {
    std::array<double, 3> r_fe{};                   // by PolarizationState
    std::array<std::array<Match1p5, 2>, 3> match{};  // [state][search bit]
};

CellTables build_tables(const ArrayConfig& config) {
    CellTables tab;
    for (PolarizationState s :
         {PolarizationState::Hvt, PolarizationState::Mvt, PolarizationState::Lvt}) {
        tab.r_fe[state_index(s)] = search_resistance(config.dev, s, config.div);
        for (SearchBit b : {SearchBit::Zero, SearchBit::One}) {
            tab.match[state_index(s)][static_cast<int>(b)] =
                divider_match(tab.r_fe[state_index(s)], b, config.div);
        }
    }
    return tab;
}

void check_state(const ArrayConfig& config, const ArrayState& state) {
    if (state.design != config.design || state.rows != config.rows ||
        state.cols != config.cols) {
        throw ConfigError("search: state does not match the array configuration");
    }
}

void check_query(const ArrayConfig& config, const std::vector<SearchBit>& query) {
    if (query.size() != config.cols) {
        throw std::invalid_argument("search: query length must equal the column count");
    }
}

// Per-cell switching energy of the driven lines during one step.
double cell_signal_energy(const ArrayConfig& config, SearchBit q) {
    const auto& t = config.timing;
    const auto& d = config.div;
    double e = t.c_sl_per_cell_f * d.v_sel_v * d.v_sel_v + t.c_col_per_cell_f * d.vdd_v * d.vdd_v;
    if (q == SearchBit::Zero) e += t.c_col_per_cell_f * d.v_b_v * d.v_b_v;
    return e;
}

// Everything the search and the waveform need per row and step.
struct RowEval {
    bool miss1 = false;
    bool miss2 = false;  // 1.5T1Fe only
    double div_power1_w = 0;
    double div_power2_w = 0;
    double sig_energy1_j = 0;
    double sig_energy2_j = 0;
    double pull_conductance1 = 0;  // sum of 1/R of conducting pull-downs
    double pull_conductance2 = 0;
};

RowEval eval_row_1p5(const ArrayConfig& config, const ArrayState& state,
                     const std::vector<SearchBit>& query, std::size_t row,
                     const CellTables& tab) {
    RowEval ev;
    for (std::size_t col = 0; col < config.cols; ++col) {
        const bool step1 = col % 2 == 0;  // even columns form cell 1
        const SearchBit q = query[col];
        const PolarizationState s = state.fe[row * config.cols + col];
        const Match1p5& m = tab.match[state_index(s)][static_cast<int>(q)];
        const double sig = cell_signal_energy(config, q);
        double g = 0;
        if (m.tml_conducting) {
            g = 1.0 / tml_effective_resistance(config.tml, m.v_sl_bar_v, config.div.vdd_v);
        }
        if (step1) {
            ev.miss1 |= m.tml_conducting;
            ev.div_power1_w += config.div.vdd_v * m.static_current_a;
            ev.sig_energy1_j += sig;
            ev.pull_conductance1 += g;
        } else {
            ev.miss2 |= m.tml_conducting;
            ev.div_power2_w += config.div.vdd_v * m.static_current_a;
            ev.sig_energy2_j += sig;
            ev.pull_conductance2 += g;
        }
    }
    return ev;
}

RowEval eval_row_2fefet(const ArrayConfig& config, const ArrayState& state,
                        const std::vector<SearchBit>& query, std::size_t row,
                        const CellTables& tab) {
    RowEval ev;
    const auto& t = config.timing;
    for (std::size_t col = 0; col < config.cols; ++col) {
        const SearchBit q = query[col];
        const PolarizationState left = state.fe[(row * config.cols + col) * 2];
        const PolarizationState right = state.fe[(row * config.cols + col) * 2 + 1];
        const PolarizationState activated = q == SearchBit::Zero ? left : right;
        if (activated == PolarizationState::Lvt) {
            ev.miss1 = true;
            ev.pull_conductance1 += 1.0 / tab.r_fe[state_index(activated)];
        } else {
            // OFF-path leakage of the activated high-threshold device.
            ev.div_power1_w +=
                config.div.vdd_v * config.div.vdd_v / tab.r_fe[state_index(activated)];
        }
        ev.sig_energy1_j += t.c_sl_per_cell_f * config.div.v_sel_v * config.div.v_sel_v;
    }
    return ev;
}

}  // namespace

void ArrayConfig::validate() const {
    if (rows < 1 || cols < 1) throw ConfigError("ArrayConfig: rows and cols must be >= 1");
    if (is_paired_design(design) && cols % 2 != 0) {
        throw ConfigError("ArrayConfig: 1.5T1Fe designs pair cells, so cols must be even");
    }
    if (step1_miss_rate < 0 || step1_miss_rate > 1) {
        throw ConfigError("ArrayConfig: step1_miss_rate must lie in [0, 1]");
    }
    fetcam::validate(dev);
    fetcam::validate(tml);
    fetcam::validate(timing);
    if (device_kind_of(design) != dev.device_kind) {
        throw ConfigError("ArrayConfig: device preset family does not match the cell design");
    }
}

ArrayConfig make_default_config(CellDesign design, std::size_t rows, std::size_t cols) {
    ArrayConfig c;
    c.rows = rows;
    c.cols = cols;
    c.design = design;
    c.dev = device_kind_of(design) == DeviceKind::SG ? sg14() : dg14();
    c.div = divider_defaults(device_kind_of(design));
    c.tml = tml_default();
    c.timing = TimingParams::defaults_for(design, c.cells);
    return c;
}

ProgramResult program(const ArrayConfig& config, const std::vector<TernaryBit>& words) {
    config.validate();
    if (words.size() != config.rows * config.cols) {
        throw std::invalid_argument("program: word grid does not match the array dimensions");
    }

    ProgramResult r;
    r.state.design = config.design;
    r.state.rows = config.rows;
    r.state.cols = config.cols;
    r.state.stored = words;
    r.state.ml_voltages_v.assign(config.rows, config.div.vdd_v);

    const double v_pos = config.dev.write_pos_threshold_v;
    const double v_neg = config.dev.write_neg_threshold_v;
    const double v_mid = config.dev.write_mid_level_v;

    if (is_paired_design(config.design)) {
        // One pass per target state: 0 (-Vw), 1 (+Vw), X (Vm). Unselected
        // cells see a grounded BL and keep their state.
        r.write_steps = 3;
        r.state.fe.assign(words.size(), PolarizationState::Hvt);
        const std::array<std::pair<TernaryBit, double>, 3> passes{{
            {TernaryBit::Zero, v_neg},
            {TernaryBit::One, v_pos},
            {TernaryBit::DontCare, v_mid},
        }};
        for (const auto& [target, voltage] : passes) {
            for (std::size_t i = 0; i < words.size(); ++i) {
                const double bl = words[i] == target ? voltage : 0.0;
                r.state.fe[i] = polarize(config.dev, r.state.fe[i], bl);
            }
        }
    } else {
        // Complementary pair written in two passes: left devices, then right.
        r.write_steps = 2;
        r.state.fe.assign(words.size() * 2, PolarizationState::Hvt);
        for (std::size_t i = 0; i < words.size(); ++i) {
            const FefetPair target = encode_pair(words[i]);
            const double bl = target.left == PolarizationState::Lvt ? v_pos : v_neg;
            const double bl_bar = target.right == PolarizationState::Lvt ? v_pos : v_neg;
            r.state.fe[i * 2] = polarize(config.dev, r.state.fe[i * 2], bl);
            r.state.fe[i * 2 + 1] = polarize(config.dev, r.state.fe[i * 2 + 1], bl_bar);
        }
    }

    r.write_energy_j = write_energy_j(config.design, words.size(), config.cells);
    return r;
}

SearchOutcome search(const ArrayConfig& config, const ArrayState& state,
                     const std::vector<SearchBit>& query) {
    config.validate();
    check_state(config, state);
    check_query(config, query);

    const bool paired = is_paired_design(config.design);
    if (paired) {
        const ResistanceCheck check = check_resistance_order(config.dev, config.div);
        if (!check.ok) {
            throw ConfigError("search: resistance ordering violated: " + check.violated);
        }
    }

    const CellTables tab = build_tables(config);
    const SearchLatency lat =
        search_latency(config.design, config.cols, config.dev, config.div, config.tml,
                       config.timing);
    const double c_ml = ml_capacitance_f(config.design, config.cols, config.timing);
    const double precharge = c_ml * config.div.vdd_v * config.div.vdd_v;

    std::vector<RowEval> evals(config.rows);
    for (std::size_t row = 0; row < config.rows; ++row) {
        evals[row] = paired ? eval_row_1p5(config, state, query, row, tab)
                            : eval_row_2fefet(config, state, query, row, tab);
    }

    SearchOutcome out;
    out.match_mask.resize(config.rows);
    out.per_row.resize(config.rows);

    if (!paired) {
        for (std::size_t row = 0; row < config.rows; ++row) {
            const RowEval& ev = evals[row];
            RowOutcome& ro = out.per_row[row];
            ro.match = !ev.miss1;
            ro.terminated_at = ev.miss1 ? StepTermination::Step1 : StepTermination::None;
            ro.latency_s = lat.one_step_s;
            ro.energy.precharge_j = precharge;
            ro.energy.sense_amp_j = config.timing.sa_energy_j;
            ro.energy.divider_static_j = ev.div_power1_w * lat.one_step_s;
            ro.energy.signal_switching_j = ev.sig_energy1_j;
            out.match_mask[row] = ro.match;
        }
        out.total_latency_s = lat.one_step_s;
    } else {
        const bool any_survivor =
            std::any_of(evals.begin(), evals.end(), [](const RowEval& e) { return !e.miss1; });
        out.global_early_stop = config.early_termination && !any_survivor;

        for (std::size_t row = 0; row < config.rows; ++row) {
            const RowEval& ev = evals[row];
            RowOutcome& ro = out.per_row[row];
            ro.match = !ev.miss1 && !ev.miss2;
            ro.terminated_at = ev.miss1 ? StepTermination::Step1
                               : ev.miss2 ? StepTermination::Step2
                                          : StepTermination::None;

            bool executes_step2;
            if (!config.early_termination) {
                executes_step2 = true;
            } else if (!any_survivor) {
                executes_step2 = false;
            } else {
                executes_step2 = config.step2_row_gating ? !ev.miss1 : true;
            }

            ro.latency_s =
                (config.early_termination && ev.miss1) ? lat.one_step_s : lat.full_s;
            ro.energy.precharge_j = precharge;
            ro.energy.sense_amp_j = config.timing.sa_energy_j;
            ro.energy.divider_static_j = ev.div_power1_w * lat.one_step_s;
            ro.energy.signal_switching_j = ev.sig_energy1_j;
            if (executes_step2) {
                ro.energy.divider_static_j += ev.div_power2_w * lat.one_step_s;
                ro.energy.signal_switching_j += ev.sig_energy2_j;
            }
            out.match_mask[row] = ro.match;
        }
        out.total_latency_s = out.global_early_stop ? lat.one_step_s : lat.full_s;
    }

    for (const RowOutcome& ro : out.per_row) out.total_energy_j += ro.energy.total_j();
    return out;
}

Scenario worst_case_latency_scenario(const ArrayConfig& config) {
    config.validate();
    Scenario sc;
    std::vector<TernaryBit> words(config.rows * config.cols, TernaryBit::DontCare);
    // Store-1/search-0 in column 0 of row 0: the single conducting path with
    // the weakest pull-down drive.
    words[0] = TernaryBit::One;
    sc.state = program(config, words).state;
    sc.query.assign(config.cols, SearchBit::Zero);
    return sc;
}

WellDriverReport wells_and_drivers(const ArrayConfig& config) {
    config.validate();
    WellDriverReport rep;
    const std::size_t m = config.rows;
    const std::size_t n = config.cols;
    switch (config.design) {
        case CellDesign::OneFiveT1FeDg: rep.p_well_count = 2 * m; break;
        case CellDesign::TwoFefetDg: rep.p_well_count = 2 * n; break;
        default: rep.p_well_count = 0; break;  // SG designs need no isolated wells
    }
    // 1.5T1Fe: two SeL drivers per row plus one BL driver per column; the
    // perpendicular BL/SeL placement lets adjacent subarrays share drivers.
    // 2FeFET: BL and SL pairs per column.
    const std::size_t unshared = is_paired_design(config.design) ? 2 * m + n : 4 * n;
    rep.hv_driver_count = config.driver_shared ? unshared / 2 : unshared;
    return rep;
}

WaveformTrace waveform_trace(const ArrayConfig& config, const ArrayState& state,
                             const std::vector<SearchBit>& query, double time_step_s) {
    if (!(time_step_s > 0)) throw std::invalid_argument("waveform_trace: time_step must be > 0");
    config.validate();
    check_state(config, state);
    check_query(config, query);

    const bool paired = is_paired_design(config.design);
    const CellTables tab = build_tables(config);
    const SearchLatency lat =
        search_latency(config.design, config.cols, config.dev, config.div, config.tml,
                       config.timing);
    const double c_ml = ml_capacitance_f(config.design, config.cols, config.timing);
    const double t_setup = config.timing.search_pulse_s;
    const double vdd = config.div.vdd_v;

    std::vector<RowEval> evals(config.rows);
    for (std::size_t row = 0; row < config.rows; ++row) {
        evals[row] = paired ? eval_row_1p5(config, state, query, row, tab)
                            : eval_row_2fefet(config, state, query, row, tab);
    }
    const bool any_survivor =
        std::any_of(evals.begin(), evals.end(), [](const RowEval& e) { return !e.miss1; });
    const bool sel_b_active = paired && !(config.early_termination && !any_survivor);

    WaveformTrace tr;
    tr.step1_end_s = lat.one_step_s;
    tr.step2_start_s =
        paired ? lat.one_step_s * (1.0 + config.timing.interstep_slack_frac) : lat.one_step_s;
    tr.search_end_s = paired ? lat.full_s : lat.one_step_s;
    const double t_end = tr.search_end_s * 1.1;

    tr.ml_v.assign(config.rows, {});
    tr.sa_out.assign(config.rows, {});

    const auto samples = static_cast<std::size_t>(t_end / time_step_s) + 1;
    for (std::size_t i = 0; i < samples; ++i) {
        const double t = static_cast<double>(i) * time_step_s;
        tr.time_s.push_back(t);
        tr.sel_a_v.push_back(t < tr.step1_end_s ? config.div.v_sel_v : 0.0);
        tr.sel_b_v.push_back(
            sel_b_active && t >= tr.step2_start_s && t < tr.search_end_s ? config.div.v_sel_v
                                                                         : 0.0);
        for (std::size_t row = 0; row < config.rows; ++row) {
            const RowEval& ev = evals[row];
            double ml = vdd;
            // Discharge accumulated during step 1 (after signal setup).
            if (ev.pull_conductance1 > 0 && t > t_setup) {
                const double active = std::min(t, tr.step1_end_s) - t_setup;
                const double tau = c_ml / ev.pull_conductance1;
                ml *= std::exp(-std::max(active, 0.0) / tau);
            }
            // Discharge during step 2 for rows whose SeL_b rises.
            const bool row_in_step2 =
                sel_b_active && (!config.step2_row_gating || !ev.miss1 ||
                                 !config.early_termination);
            if (paired && row_in_step2 && ev.pull_conductance2 > 0 &&
                t > tr.step2_start_s + t_setup) {
                const double active =
                    std::min(t, tr.search_end_s) - (tr.step2_start_s + t_setup);
                const double tau = c_ml / ev.pull_conductance2;
                ml *= std::exp(-std::max(active, 0.0) / tau);
            }
            tr.ml_v[row].push_back(ml);
            tr.sa_out[row].push_back(ml > config.timing.sa_threshold_v ? 1 : 0);
        }
    }
    return tr;
}

}  // namespace fetcam
