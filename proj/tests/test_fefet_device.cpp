#include <doctest.h>

#include <cmath>
#include <random>

#include "fetcam/fefet_device.hpp"
#include "fetcam/tcam_cell.hpp"

using namespace fetcam;

namespace {

// All states at the device's read gate.
constexpr PolarizationState kStates[] = {PolarizationState::Lvt, PolarizationState::Mvt,
                                         PolarizationState::Hvt};

FeFetParams random_params(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> lvt(0.1, 0.8);
    std::uniform_real_distribution<double> gap(0.3, 1.5);
    std::uniform_real_distribution<double> ss(60.0, 250.0);
    std::uniform_real_distribution<double> ss_extra(20.0, 300.0);
    std::uniform_real_distribution<double> ion(1e-6, 5e-5);

    FeFetParams p;
    p.device_kind = rng() % 2 ? DeviceKind::SG : DeviceKind::DG;
    p.vth_lvt_v = lvt(rng);
    p.vth_mvt_v = p.vth_lvt_v + gap(rng);
    p.vth_hvt_v = p.vth_mvt_v + gap(rng);
    p.memory_window_v = p.vth_hvt_v - p.vth_lvt_v;
    p.ss_front_mv_dec = ss(rng);
    p.ss_back_mv_dec = p.ss_front_mv_dec + ss_extra(rng);
    p.i_on_ref_a = ion(rng);
    p.i_on_overdrive_v = 0.5 + gap(rng);
    return p;
}

}  // namespace

TEST_CASE("presets satisfy their invariants") {
    for (const FeFetParams& p : {sg14(), dg14()}) {
        CHECK_NOTHROW(validate(p));
        CHECK(p.vth_lvt_v < p.vth_mvt_v);
        CHECK(p.vth_mvt_v < p.vth_hvt_v);
        CHECK(p.memory_window_v == doctest::Approx(p.vth_hvt_v - p.vth_lvt_v).epsilon(1e-12));
        CHECK(p.ss_back_mv_dec > p.ss_front_mv_dec);
    }
    CHECK(sg14().memory_window_v == doctest::Approx(1.8));
    CHECK(dg14().memory_window_v == doctest::Approx(2.7));
    CHECK(dg14().on_off_ratio >= 1e4);
}

TEST_CASE("polarize follows the write thresholds") {
    const FeFetParams dg = dg14();
    const FeFetParams sg = sg14();

    CHECK(polarize(dg, PolarizationState::Hvt, 2.0) == PolarizationState::Lvt);
    CHECK(polarize(dg, PolarizationState::Lvt, 0.0) == PolarizationState::Lvt);
    CHECK(polarize(sg, PolarizationState::Lvt, 3.2) == PolarizationState::Mvt);
    CHECK(polarize(dg, PolarizationState::Lvt, -2.0) == PolarizationState::Hvt);
    CHECK(polarize(dg, PolarizationState::Mvt, 1.6) == PolarizationState::Mvt);

    CHECK_THROWS_AS(polarize(dg, PolarizationState::Hvt,
                             std::numeric_limits<double>::quiet_NaN()),
                    std::invalid_argument);
    CHECK_THROWS_AS(polarize(dg, PolarizationState::Hvt, 3.5), std::invalid_argument);
}

TEST_CASE("polarize is idempotent over random pulses") {
    std::mt19937_64 rng(7);
    const FeFetParams dg = dg14();
    std::uniform_real_distribution<double> volts(-2.9, 2.9);
    for (int i = 0; i < 500; ++i) {
        const double v = volts(rng);
        for (PolarizationState s : kStates) {
            const PolarizationState once = polarize(dg, s, v);
            CHECK(polarize(dg, once, v) == once);
        }
    }
}

TEST_CASE("threshold voltages keep the state ordering and the memory window") {
    const FeFetParams dg = dg14();
    const FeFetParams sg = sg14();

    CHECK(threshold_voltage(dg, PolarizationState::Hvt, GateKind::BackGate) -
              threshold_voltage(dg, PolarizationState::Lvt, GateKind::BackGate) ==
          doctest::Approx(2.7));
    CHECK(threshold_voltage(sg, PolarizationState::Hvt, GateKind::FrontGate) -
              threshold_voltage(sg, PolarizationState::Lvt, GateKind::FrontGate) ==
          doctest::Approx(1.8));

    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const FeFetParams p = random_params(rng);
        const GateKind g = read_gate(p);
        const double lvt = threshold_voltage(p, PolarizationState::Lvt, g);
        const double mvt = threshold_voltage(p, PolarizationState::Mvt, g);
        const double hvt = threshold_voltage(p, PolarizationState::Hvt, g);
        CHECK(lvt < mvt);
        CHECK(mvt < hvt);
        CHECK(std::abs(hvt - lvt - p.memory_window_v) <= 1e-9);
    }
}

TEST_CASE("reads through the wrong gate are configuration errors") {
    CHECK_THROWS_AS(threshold_voltage(dg14(), PolarizationState::Lvt, GateKind::FrontGate),
                    ConfigError);
    CHECK_THROWS_AS(threshold_voltage(sg14(), PolarizationState::Lvt, GateKind::BackGate),
                    ConfigError);
    CHECK_THROWS_AS(drain_current(dg14(), PolarizationState::Lvt, 1.0, 0.5,
                                  GateKind::FrontGate),
                    ConfigError);
}

TEST_CASE("drain current: zero drain bias, decade slope, on/off ratio") {
    const FeFetParams dg = dg14();
    const GateKind g = GateKind::BackGate;

    for (PolarizationState s : kStates) {
        CHECK(drain_current(dg, s, 2.0, 0.0, g) == 0.0);
    }

    // One subthreshold-slope step below threshold costs one decade.
    const double ss_v = dg.ss_back_mv_dec / 1000.0;
    const double vth = threshold_voltage(dg, PolarizationState::Mvt, g);
    const double at_vth = drain_current(dg, PolarizationState::Mvt, vth, 0.8, g);
    const double one_dec = drain_current(dg, PolarizationState::Mvt, vth - ss_v, 0.8, g);
    CHECK(at_vth / one_dec == doctest::Approx(10.0).epsilon(0.05));

    // On/off ratio at the read bias.
    const double i_on = drain_current(dg, PolarizationState::Lvt, 2.0, 0.8, g);
    const double i_off = drain_current(dg, PolarizationState::Hvt, 2.0, 0.8, g);
    CHECK(i_on / i_off >= 1e4);
}

TEST_CASE("drain current is monotone in v_gs and v_ds") {
    const FeFetParams dg = dg14();
    const GateKind g = GateKind::BackGate;
    for (PolarizationState s : kStates) {
        double prev = -1.0;
        for (int i = 0; i <= 100; ++i) {
            const double v_gs = -1.0 + 6.0 * i / 100.0;
            const double cur = drain_current(dg, s, v_gs, 0.8, g);
            CHECK(cur >= prev);
            prev = cur;
        }
        prev = -1.0;
        for (int i = 0; i <= 100; ++i) {
            const double v_ds = 1.2 * i / 100.0;
            const double cur = drain_current(dg, s, 2.0, v_ds, g);
            CHECK(cur >= prev);
            prev = cur;
        }
    }
}

TEST_CASE("effective resistance mirrors the drain current and clamps underflow") {
    const FeFetParams dg = dg14();
    const GateKind g = GateKind::BackGate;
    const BiasPoint bias{2.0, 0.8};

    const double r_on = effective_resistance(dg, PolarizationState::Lvt, bias, g);
    const double r_m = effective_resistance(dg, PolarizationState::Mvt, bias, g);
    const double r_off = effective_resistance(dg, PolarizationState::Hvt, bias, g);
    CHECK(r_off / r_on >= 1e4);
    CHECK(r_m > r_on);
    CHECK(r_m < r_off);

    // Duality against a direct recomputation of v_ds / I.
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> vg(0.0, 3.5);
    std::uniform_real_distribution<double> vd(0.05, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const BiasPoint b{vg(rng), vd(rng)};
        for (PolarizationState s : kStates) {
            const double current = drain_current(dg, s, b.v_gs_v, b.v_ds_v, g);
            if (current < kCurrentFloorA) continue;
            const double r = effective_resistance(dg, s, b, g);
            CHECK(r * current == doctest::Approx(b.v_ds_v).epsilon(1e-6));
        }
    }

    // Deep subthreshold underflows to the ceiling.
    const double r_clamped =
        effective_resistance(sg14(), PolarizationState::Hvt, BiasPoint{0.3, 0.8},
                             GateKind::FrontGate);
    CHECK(r_clamped == kResistanceCeilingOhm);
}

TEST_CASE("defaults reproduce the intended search-bias resistances") {
    const DividerParams dg_div = divider_defaults(DeviceKind::DG);
    CHECK(search_resistance(dg14(), PolarizationState::Lvt, dg_div) ==
          doctest::Approx(1e5).epsilon(1e-9));
    CHECK(search_resistance(dg14(), PolarizationState::Mvt, dg_div) ==
          doctest::Approx(1e7).epsilon(1e-9));
    CHECK(search_resistance(dg14(), PolarizationState::Hvt, dg_div) > 1e9);

    const DividerParams sg_div = divider_defaults(DeviceKind::SG);
    CHECK(search_resistance(sg14(), PolarizationState::Lvt, sg_div) ==
          doctest::Approx(5e4).epsilon(1e-9));
}

TEST_CASE("mosfet switch model") {
    const MosfetParams tml = tml_default();
    const MosfetParams tn = tn_default();
    const MosfetParams tp = tp_default();

    CHECK(mosfet_resistance(tml, 0.0) == tml.r_off_ohm);
    CHECK(mosfet_resistance(tn, 0.8) == tn.r_on_ohm);
    CHECK(mosfet_resistance(tp, 0.0) == tp.r_on_ohm);
    CHECK(mosfet_resistance(tp, 0.8) == tp.r_off_ohm);

    for (const MosfetParams& m : {tml, tn, tp}) CHECK_NOTHROW(validate(m));
}
