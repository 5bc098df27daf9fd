#include "fetcam/fefet_device.hpp"

#include <cmath>

namespace fetcam {

namespace {

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string(what) + ": non-finite value");
    }
}

}  // namespace

FeFetParams sg14() {
    FeFetParams p;
    p.device_kind = DeviceKind::SG;
    p.vth_lvt_v = 0.3;
    p.vth_mvt_v = 0.95;
    p.vth_hvt_v = 2.1;
    p.memory_window_v = 1.8;
    p.ss_front_mv_dec = 100.0;
    p.ss_back_mv_dec = 250.0;
    p.i_on_ref_a = 16e-6;     // R_on = 50 kOhm at the 0.8 V read bias
    p.i_on_overdrive_v = 0.5;  // read bias 0.8 V minus vth_lvt
    p.on_off_ratio = 1e6;
    p.write_pos_threshold_v = 4.0;
    p.write_neg_threshold_v = -4.0;
    p.write_mid_level_v = 3.2;
    p.fe_thickness_nm = 10.0;
    return p;
}

FeFetParams dg14() {
    // Defaults in the struct already describe the DG family; at the 2.0 V
    // back-gate read bias with VDD across the channel they give
    // R_on = 100 kOhm, R_m = 10 MOhm, R_off ~ 1.78 GOhm.
    return FeFetParams{};
}

GateKind read_gate(const FeFetParams& params) {
    return params.device_kind == DeviceKind::SG ? GateKind::FrontGate : GateKind::BackGate;
}

void validate(const FeFetParams& p) {
    if (!(p.vth_lvt_v < p.vth_mvt_v && p.vth_mvt_v < p.vth_hvt_v)) {
        throw ConfigError("FeFetParams: thresholds must satisfy vth_lvt < vth_mvt < vth_hvt");
    }
    if (std::abs(p.memory_window_v - (p.vth_hvt_v - p.vth_lvt_v)) > 1e-9) {
        throw ConfigError("FeFetParams: memory_window must equal vth_hvt - vth_lvt");
    }
    if (p.ss_front_mv_dec <= 0 || p.ss_back_mv_dec <= 0) {
        throw ConfigError("FeFetParams: subthreshold slopes must be positive");
    }
    if (p.ss_back_mv_dec <= p.ss_front_mv_dec) {
        throw ConfigError("FeFetParams: back-gate slope must exceed front-gate slope");
    }
    if (p.i_on_ref_a <= 0 || p.i_on_overdrive_v <= 0 || p.v_dsat_v <= 0) {
        throw ConfigError("FeFetParams: i_on_ref, i_on_overdrive, v_dsat must be positive");
    }
    if (p.i_at_vth_fraction <= 0 || p.i_at_vth_fraction >= 1) {
        throw ConfigError("FeFetParams: i_at_vth_fraction must lie in (0, 1)");
    }
    if (!(p.write_pos_threshold_v > 0 && p.write_neg_threshold_v < 0)) {
        throw ConfigError("FeFetParams: write thresholds must straddle zero");
    }
    if (p.write_mid_tolerance_v <= 0) {
        throw ConfigError("FeFetParams: write_mid_tolerance must be positive");
    }
}

PolarizationState polarize(const FeFetParams& params, PolarizationState state,
                           double fg_voltage_v) {
    require_finite(fg_voltage_v, "polarize");
    const double limit = 1.5 * params.write_pos_threshold_v;
    if (fg_voltage_v > limit || fg_voltage_v < -limit) {
        throw std::invalid_argument("polarize: write voltage outside +/-1.5x Vw range");
    }
    if (fg_voltage_v >= params.write_pos_threshold_v) return PolarizationState::Lvt;
    if (fg_voltage_v <= params.write_neg_threshold_v) return PolarizationState::Hvt;
    if (std::abs(fg_voltage_v - params.write_mid_level_v) <= params.write_mid_tolerance_v) {
        return PolarizationState::Mvt;
    }
    return state;  // insufficient field
}

double threshold_voltage(const FeFetParams& params, PolarizationState state, GateKind gate) {
    if (gate != read_gate(params)) {
        throw ConfigError(params.device_kind == DeviceKind::DG
                              ? "threshold_voltage: DG device is read through the back gate only"
                              : "threshold_voltage: SG device is read through the front gate only");
    }
    switch (state) {
        case PolarizationState::Lvt: return params.vth_lvt_v;
        case PolarizationState::Mvt: return params.vth_mvt_v;
        case PolarizationState::Hvt: return params.vth_hvt_v;
    }
    throw std::logic_error("threshold_voltage: bad state");
}

double drain_current(const FeFetParams& params, PolarizationState state, double v_gs_v,
                     double v_ds_v, GateKind gate) {
    require_finite(v_gs_v, "drain_current");
    require_finite(v_ds_v, "drain_current");
    if (v_ds_v < 0) throw std::invalid_argument("drain_current: v_ds must be >= 0");

    const double vth = threshold_voltage(params, state, gate);
    const double ss_v =
        (gate == GateKind::FrontGate ? params.ss_front_mv_dec : params.ss_back_mv_dec) / 1000.0;
    const double overdrive = v_gs_v - vth;
    const double i_vth = params.i_at_vth_fraction * params.i_on_ref_a;

    double channel;
    if (overdrive >= 0) {
        channel = i_vth + (params.i_on_ref_a - i_vth) * (overdrive / params.i_on_overdrive_v);
    } else {
        channel = i_vth * std::pow(10.0, overdrive / ss_v);
    }
    const double drain_factor = v_ds_v >= params.v_dsat_v ? 1.0 : v_ds_v / params.v_dsat_v;
    return channel * drain_factor;
}

double effective_resistance(const FeFetParams& params, PolarizationState state, BiasPoint bias,
                            GateKind gate) {
    if (!(bias.v_ds_v > 0)) throw std::invalid_argument("effective_resistance: v_ds must be > 0");
    const double current = drain_current(params, state, bias.v_gs_v, bias.v_ds_v, gate);
    if (current < kCurrentFloorA) return kResistanceCeilingOhm;
    return bias.v_ds_v / current;
}

MosfetParams tn_default() {
    return MosfetParams{MosfetKind::TN, 0.3, 1e6, 1e12, 4e-17};
}

MosfetParams tp_default() {
    return MosfetParams{MosfetKind::TP, 0.3, 1e8, 1e12, 4e-17};
}

MosfetParams tml_default() {
    return MosfetParams{MosfetKind::TML, 0.3, 4e4, 1e12, 3e-17};
}

void validate(const MosfetParams& p) {
    if (p.r_on_ohm <= 0 || p.r_off_ohm < 1e3 * p.r_on_ohm) {
        throw ConfigError("MosfetParams: requires r_off >= 1000 x r_on > 0");
    }
    if (p.vth_v <= 0) throw ConfigError("MosfetParams: vth must be positive");
}

double mosfet_resistance(const MosfetParams& params, double v_gs_v) {
    require_finite(v_gs_v, "mosfet_resistance");
    const bool conducting = params.kind == MosfetKind::TP ? v_gs_v <= params.vth_v
                                                          : v_gs_v >= params.vth_v;
    return conducting ? params.r_on_ohm : params.r_off_ohm;
}

}  // namespace fetcam
