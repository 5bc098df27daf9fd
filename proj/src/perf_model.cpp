#include "fetcam/perf_model.hpp"

#include <cmath>
#include <stdexcept>

namespace fetcam {

namespace {

// ML wire capacitance per unit length; per-cell value scales with the pitch.
constexpr double kWireCapPerUm = 0.2e-15;

}  // namespace

double CellConstants::area_um2(CellDesign design) const {
    switch (design) {
        case CellDesign::TwoFefetSg: return area_2sg_um2;
        case CellDesign::TwoFefetDg: return area_2dg_um2;
        case CellDesign::OneFiveT1FeSg: return area_1p5sg_um2;
        case CellDesign::OneFiveT1FeDg: return area_1p5dg_um2;
    }
    throw std::logic_error("area_um2: bad design");
}

double CellConstants::write_energy_fj(CellDesign design) const {
    switch (design) {
        case CellDesign::TwoFefetSg: return write_2sg_fj;
        case CellDesign::TwoFefetDg: return write_2dg_fj;
        case CellDesign::OneFiveT1FeSg: return write_1p5sg_fj;
        case CellDesign::OneFiveT1FeDg: return write_1p5dg_fj;
    }
    throw std::logic_error("write_energy_fj: bad design");
}

TimingParams TimingParams::defaults_for(CellDesign design) {
    return defaults_for(design, CellConstants{});
}

TimingParams TimingParams::defaults_for(CellDesign design, const CellConstants& cells) {
    TimingParams t;
    t.c_ml_per_cell_f = is_paired_design(design) ? 3e-17 : 9e-17;
    t.c_wire_per_cell_f = kWireCapPerUm * std::sqrt(cells.area_um2(design)) * 1.0;
    t.c_sl_per_cell_f = device_kind_of(design) == DeviceKind::SG ? 5e-17 : 1.8e-17;
    t.c_col_per_cell_f = 4e-17;
    return t;
}

void validate(const TimingParams& t) {
    if (t.c_ml_per_cell_f <= 0 || t.c_wire_per_cell_f <= 0 || t.c_sl_per_cell_f <= 0 ||
        t.c_col_per_cell_f <= 0 || t.sa_energy_j <= 0 || t.sa_threshold_v <= 0 ||
        t.write_pulse_s <= 0 || t.search_pulse_s <= 0 || t.interstep_slack_frac < 0) {
        throw ConfigError("TimingParams: all capacitances, energies and times must be positive");
    }
    if (!(t.sense_fraction > 0 && t.sense_fraction < 1)) {
        throw ConfigError("TimingParams: sense_fraction must lie in (0, 1)");
    }
}

double ml_capacitance_f(CellDesign design, std::size_t word_len, const TimingParams& t) {
    if (word_len < 1) throw std::invalid_argument("ml_capacitance: word_len must be >= 1");
    if (is_paired_design(design)) {
        if (word_len % 2 != 0) {
            throw ConfigError("ml_capacitance: paired designs need an even word length");
        }
        return static_cast<double>(word_len) / 2.0 *
               (t.c_ml_per_cell_f + 2.0 * t.c_wire_per_cell_f);
    }
    return static_cast<double>(word_len) * (2.0 * t.c_ml_per_cell_f + t.c_wire_per_cell_f);
}

double discharge_latency_s(double c_ml_f, double r_pull_ohm, const TimingParams& t) {
    if (c_ml_f <= 0 || r_pull_ohm <= 0) {
        throw std::invalid_argument("discharge_latency: inputs must be positive");
    }
    return r_pull_ohm * c_ml_f * std::log(1.0 / t.sense_fraction);
}

double tml_effective_resistance(const MosfetParams& tml, double v_gate_v, double vdd_v) {
    const double overdrive = v_gate_v - tml.vth_v;
    if (overdrive <= 0) return tml.r_off_ohm;
    const double quoted_overdrive = vdd_v - tml.vth_v;
    const double ratio = quoted_overdrive / overdrive;
    return tml.r_on_ohm * ratio * ratio;
}

double pull_down_resistance_ohm(CellDesign design, const FeFetParams& dev,
                                const DividerParams& div, const MosfetParams& tml) {
    if (!is_paired_design(design)) {
        return search_resistance(dev, PolarizationState::Lvt, div);
    }
    // Slowest mismatch: the divider drive furthest above the TML threshold
    // still has the weakest gate overdrive. Store-1/search-0 competes with
    // store-0/search-1.
    const double v_store1 =
        divider_voltage(SearchBit::Zero, search_resistance(dev, PolarizationState::Lvt, div), div);
    const double v_store0 =
        divider_voltage(SearchBit::One, search_resistance(dev, PolarizationState::Hvt, div), div);
    const double v_worst = std::min(v_store1, v_store0);
    return tml_effective_resistance(tml, v_worst, div.vdd_v);
}

SearchLatency search_latency(CellDesign design, std::size_t word_len, const FeFetParams& dev,
                             const DividerParams& div, const MosfetParams& tml,
                             const TimingParams& t) {
    const double c_ml = ml_capacitance_f(design, word_len, t);
    const double r_pull = pull_down_resistance_ohm(design, dev, div, tml);
    SearchLatency lat;
    lat.one_step_s = t.search_pulse_s + discharge_latency_s(c_ml, r_pull, t);
    lat.full_s = is_paired_design(design) ? (2.0 + t.interstep_slack_frac) * lat.one_step_s
                                          : lat.one_step_s;
    return lat;
}

double average_search_energy_j(double e_one_step_j, double e_two_step_j, double step1_miss_rate) {
    if (step1_miss_rate < 0 || step1_miss_rate > 1) {
        throw std::invalid_argument("average_search_energy: rate must lie in [0, 1]");
    }
    return step1_miss_rate * e_one_step_j + (1.0 - step1_miss_rate) * e_two_step_j;
}

double write_energy_j(CellDesign design, std::size_t cell_count, const CellConstants& cells) {
    return static_cast<double>(cell_count) * cells.write_energy_fj(design) * 1e-15;
}

double area_estimate_um2(CellDesign design, std::size_t rows, std::size_t cols,
                         const CellConstants& cells, const WellDriverReport& wells) {
    return static_cast<double>(rows) * static_cast<double>(cols) * cells.area_um2(design) +
           static_cast<double>(wells.p_well_count) * cells.well_spacing_overhead_um2;
}

FomEnergy fom_search_energy(CellDesign design, std::size_t word_len, const FeFetParams& dev,
                            const DividerParams& div, const MosfetParams& tml,
                            const TimingParams& t, double step1_miss_rate) {
    const double n = static_cast<double>(word_len);
    const double vdd2 = div.vdd_v * div.vdd_v;
    const double c_ml = ml_capacitance_f(design, word_len, t);
    const double precharge = c_ml * vdd2;
    const SearchLatency lat = search_latency(design, word_len, dev, div, tml, t);
    const double t_step = lat.one_step_s;

    const double r_on = search_resistance(dev, PolarizationState::Lvt, div);
    const double r_off = search_resistance(dev, PolarizationState::Hvt, div);

    FomEnergy e;
    if (is_paired_design(design)) {
        // Divider power averaged over the four balanced (stored, query) combos.
        const double p_avg = (vdd2 / (r_on + div.r_n_ohm) + vdd2 / (r_on + div.r_p_ohm) +
                              vdd2 / (r_off + div.r_n_ohm) + vdd2 / (r_off + div.r_p_ohm)) /
                             4.0;
        const double cells_per_step = n / 2.0;
        const double div_step = cells_per_step * p_avg * t_step;
        const double sig_step =
            cells_per_step * (t.c_sl_per_cell_f * div.v_sel_v * div.v_sel_v +
                              t.c_col_per_cell_f * vdd2 +
                              0.5 * t.c_col_per_cell_f * div.v_b_v * div.v_b_v);
        const double row1 = precharge + t.sa_energy_j + div_step + sig_step;
        const double row2 = precharge + t.sa_energy_j + 2.0 * (div_step + sig_step);
        e.e1_per_cell_j = row1 / n;
        e.e2_per_cell_j = row2 / n;
    } else {
        // Single-step NOR search; half the activated devices sit in HVT and
        // leak, the signal term is one swinging search line per cell.
        const double leak = (n / 2.0) * (vdd2 / r_off) * t_step;
        const double sig = n * t.c_sl_per_cell_f * div.v_sel_v * div.v_sel_v;
        const double row = precharge + t.sa_energy_j + leak + sig;
        e.e1_per_cell_j = row / n;
        e.e2_per_cell_j = e.e1_per_cell_j;
    }
    e.avg_per_cell_j = average_search_energy_j(e.e1_per_cell_j, e.e2_per_cell_j, step1_miss_rate);
    return e;
}

}  // namespace fetcam
