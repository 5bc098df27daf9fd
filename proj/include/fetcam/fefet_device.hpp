#pragma once

#include <stdexcept>
#include <string>

namespace fetcam {

// Inconsistent parameter bundle or an operation request that the current
// configuration cannot serve (wrong read gate, violated resistance ordering,
// bad array geometry).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input file (grid, query list, or config). line < 0 means the
// location is unknown.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line_ = -1)
        : std::runtime_error(line_ >= 0 ? msg + " (line " + std::to_string(line_) + ")" : msg),
          line(line_) {}
    int line;
};

enum class DeviceKind { SG, DG };
enum class GateKind { FrontGate, BackGate };

// Nonvolatile polarization state of one FeFET. State changes only through
// polarize(); ordering of the read-gate thresholds is HVT > MVT > LVT.
enum class PolarizationState { Hvt, Mvt, Lvt };

// Behavioral FeFET parameter bundle. Thresholds refer to the device's read
// gate (front gate for SG, back gate for DG). Immutable after construction;
// all device operations are pure functions over it.
struct FeFetParams {
    DeviceKind device_kind = DeviceKind::DG;

    double vth_lvt_v = 0.6;
    double vth_mvt_v = 2.4;
    double vth_hvt_v = 3.3;
    double memory_window_v = 2.7;  // vth_hvt - vth_lvt

    // Subthreshold slope per gate, mV/decade. Back-gate read trades a wider
    // memory window for a degraded slope, so ss_back > ss_front.
    double ss_front_mv_dec = 100.0;
    double ss_back_mv_dec = 400.0;

    double i_on_ref_a = 8e-6;        // drain current at the reference overdrive
    double i_on_overdrive_v = 1.4;   // reference overdrive above vth
    double i_at_vth_fraction = 0.1;  // I(vth) / i_on_ref
    double v_dsat_v = 0.4;           // drain voltage where the channel saturates
    double on_off_ratio = 1.778e4;   // quoted at the read bias

    double write_pos_threshold_v = 2.0;   // >= this on FG -> LVT
    double write_neg_threshold_v = -2.0;  // <= this on FG -> HVT
    double write_mid_level_v = 1.6;       // Vm pulse -> MVT
    double write_mid_tolerance_v = 0.2;

    double fe_thickness_nm = 5.0;  // informational
};

// Built-in presets reproducing the 14nm FDSOI device families:
// sg14: FG write/read, Vw = +/-4V, MW = 1.8V.
// dg14: FG write / BG read, Vw = +/-2V, MW = 2.7V.
FeFetParams sg14();
FeFetParams dg14();

// The gate a device is legally read through (SG -> front, DG -> back).
GateKind read_gate(const FeFetParams& params);

// Throws ConfigError when the bundle violates its invariants.
void validate(const FeFetParams& params);

// Field-driven polarization switch. Returns the new state for a front-gate
// write pulse of the given amplitude (source/drain/BG grounded by the
// caller); insufficient field leaves the state unchanged. Pulse-width
// dynamics are not modeled.
PolarizationState polarize(const FeFetParams& params, PolarizationState state, double fg_voltage_v);

// Read-gate threshold for the given state. Requesting the wrong gate for the
// device kind is a ConfigError.
double threshold_voltage(const FeFetParams& params, PolarizationState state, GateKind gate);

// Piecewise I-V: exponential subthreshold with the gate's slope below vth,
// linear rise to i_on_ref at the reference overdrive above it, linear
// drain-voltage factor saturating at v_dsat. Monotone non-decreasing in both
// v_gs and v_ds.
double drain_current(const FeFetParams& params, PolarizationState state, double v_gs_v,
                     double v_ds_v, GateKind gate);

struct BiasPoint {
    double v_gs_v;
    double v_ds_v;
};

// Currents below this floor clamp the extracted resistance to the ceiling
// instead of producing near-infinite values.
inline constexpr double kCurrentFloorA = 1e-15;
inline constexpr double kResistanceCeilingOhm = 1e12;

// v_ds / drain_current at the bias point, clamped per above.
double effective_resistance(const FeFetParams& params, PolarizationState state, BiasPoint bias,
                            GateKind gate);

enum class MosfetKind { TP, TN, TML };

// Switch-level MOSFET used around the single-FeFET cell: TN/TML conduct on a
// high gate, TP conducts when its gate is pulled low.
struct MosfetParams {
    MosfetKind kind = MosfetKind::TML;
    double vth_v = 0.3;
    double r_on_ohm = 4e4;   // quoted at full gate drive (v_gs = VDD)
    double r_off_ohm = 1e12;
    double gate_capacitance_f = 3e-17;
};

MosfetParams tn_default();
MosfetParams tp_default();
MosfetParams tml_default();

void validate(const MosfetParams& params);

// r_on/r_off switch model; no intermediate region.
double mosfet_resistance(const MosfetParams& params, double v_gs_v);

}  // namespace fetcam
