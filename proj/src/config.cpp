#include "fetcam/config.hpp"

#include <fstream>
#include <sstream>

namespace fetcam {

namespace {

using nlohmann::json;

[[noreturn]] void unknown_key(const std::string& section, const std::string& key) {
    throw ParseError("config: unknown key \"" + key + "\" in section \"" + section + "\"");
}

double num(const json& v, const std::string& section, const std::string& key) {
    if (!v.is_number()) {
        throw ParseError("config: \"" + section + "." + key + "\" must be a number");
    }
    return v.get<double>();
}

bool boolean(const json& v, const std::string& section, const std::string& key) {
    if (!v.is_boolean()) {
        throw ParseError("config: \"" + section + "." + key + "\" must be a boolean");
    }
    return v.get<bool>();
}

int line_of_offset(const std::string& text, std::size_t byte) {
    int line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') ++line;
    }
    return line;
}

}  // namespace

void apply_overrides(FeFetParams& dev, const json& j) {
    for (const auto& [key, value] : j.items()) {
        auto n = [&] { return num(value, "device", key); };
        if (key == "vth_lvt_v") dev.vth_lvt_v = n();
        else if (key == "vth_mvt_v") dev.vth_mvt_v = n();
        else if (key == "vth_hvt_v") dev.vth_hvt_v = n();
        else if (key == "memory_window_v") dev.memory_window_v = n();
        else if (key == "ss_front_mv_dec") dev.ss_front_mv_dec = n();
        else if (key == "ss_back_mv_dec") dev.ss_back_mv_dec = n();
        else if (key == "i_on_ref_a") dev.i_on_ref_a = n();
        else if (key == "i_on_overdrive_v") dev.i_on_overdrive_v = n();
        else if (key == "i_at_vth_fraction") dev.i_at_vth_fraction = n();
        else if (key == "v_dsat_v") dev.v_dsat_v = n();
        else if (key == "on_off_ratio") dev.on_off_ratio = n();
        else if (key == "write_pos_threshold_v") dev.write_pos_threshold_v = n();
        else if (key == "write_neg_threshold_v") dev.write_neg_threshold_v = n();
        else if (key == "write_mid_level_v") dev.write_mid_level_v = n();
        else if (key == "write_mid_tolerance_v") dev.write_mid_tolerance_v = n();
        else if (key == "fe_thickness_nm") dev.fe_thickness_nm = n();
        else unknown_key("device", key);
    }
}

void apply_overrides(DividerParams& div, const json& j) {
    for (const auto& [key, value] : j.items()) {
        auto n = [&] { return num(value, "divider", key); };
        if (key == "vdd_v") div.vdd_v = n();
        else if (key == "v_sel_v") div.v_sel_v = n();
        else if (key == "v_b_v") div.v_b_v = n();
        else if (key == "r_n_ohm") div.r_n_ohm = n();
        else if (key == "r_p_ohm") div.r_p_ohm = n();
        else if (key == "tml_vth_v") div.tml_vth_v = n();
        else unknown_key("divider", key);
    }
}

void apply_overrides(TimingParams& timing, const json& j) {
    for (const auto& [key, value] : j.items()) {
        auto n = [&] { return num(value, "timing", key); };
        if (key == "c_ml_per_cell_f") timing.c_ml_per_cell_f = n();
        else if (key == "c_wire_per_cell_f") timing.c_wire_per_cell_f = n();
        else if (key == "c_sl_per_cell_f") timing.c_sl_per_cell_f = n();
        else if (key == "c_col_per_cell_f") timing.c_col_per_cell_f = n();
        else if (key == "sa_energy_j") timing.sa_energy_j = n();
        else if (key == "sa_threshold_v") timing.sa_threshold_v = n();
        else if (key == "write_pulse_s") timing.write_pulse_s = n();
        else if (key == "search_pulse_s") timing.search_pulse_s = n();
        else if (key == "sense_fraction") timing.sense_fraction = n();
        else if (key == "interstep_slack_frac") timing.interstep_slack_frac = n();
        else unknown_key("timing", key);
    }
}

void apply_overrides(MosfetParams& tml, const json& j) {
    for (const auto& [key, value] : j.items()) {
        auto n = [&] { return num(value, "tml", key); };
        if (key == "vth_v") tml.vth_v = n();
        else if (key == "r_on_ohm") tml.r_on_ohm = n();
        else if (key == "r_off_ohm") tml.r_off_ohm = n();
        else if (key == "gate_capacitance_f") tml.gate_capacitance_f = n();
        else unknown_key("tml", key);
    }
}

void apply_overrides(CellConstants& cells, const json& j) {
    for (const auto& [key, value] : j.items()) {
        auto n = [&] { return num(value, "cells", key); };
        if (key == "area_2sg_um2") cells.area_2sg_um2 = n();
        else if (key == "area_2dg_um2") cells.area_2dg_um2 = n();
        else if (key == "area_1p5sg_um2") cells.area_1p5sg_um2 = n();
        else if (key == "area_1p5dg_um2") cells.area_1p5dg_um2 = n();
        else if (key == "write_2sg_fj") cells.write_2sg_fj = n();
        else if (key == "write_2dg_fj") cells.write_2dg_fj = n();
        else if (key == "write_1p5sg_fj") cells.write_1p5sg_fj = n();
        else if (key == "write_1p5dg_fj") cells.write_1p5dg_fj = n();
        else if (key == "well_spacing_overhead_um2") cells.well_spacing_overhead_um2 = n();
        else if (key == "cmos_area_um2") cells.cmos_area_um2 = n();
        else if (key == "cmos_latency_ps") cells.cmos_latency_ps = n();
        else if (key == "cmos_search_energy_fj") cells.cmos_search_energy_fj = n();
        else if (key == "cmos_write_voltage_v") cells.cmos_write_voltage_v = n();
        else unknown_key("cells", key);
    }
}

ArrayConfig RunConfig::array_config(CellDesign design) const {
    ArrayConfig c = make_default_config(design, rows, cols);
    c.driver_shared = driver_shared;
    c.early_termination = early_termination;
    c.step2_row_gating = step2_row_gating;
    c.step1_miss_rate = step1_miss_rate;

    if (device_preset) {
        if (*device_preset == "sg14") c.dev = sg14();
        else if (*device_preset == "dg14") c.dev = dg14();
        else throw ParseError("config: unknown device preset \"" + *device_preset + "\"");
    }

    if (!cell_overrides.is_null()) apply_overrides(c.cells, cell_overrides);

    // Calibration applies per design, before the flat sections.
    if (!calibration.is_null()) {
        for (const auto& [key, value] : calibration.items()) {
            if (key == "per_design") {
                for (const auto& [name, entry] : value.items()) {
                    const auto d = design_from_name(name);
                    if (!d) throw ParseError("config: unknown design \"" + name + "\"");
                    if (*d != design) continue;
                    json timing_part = entry;
                    if (timing_part.contains("i_on_ref_a")) {
                        c.dev.i_on_ref_a = num(timing_part["i_on_ref_a"], "calibration",
                                               "i_on_ref_a");
                        timing_part.erase("i_on_ref_a");
                    }
                    apply_overrides(c.timing, timing_part);
                }
            } else if (key == "sa_energy_j") {
                c.timing.sa_energy_j = num(value, "calibration", key);
            } else {
                unknown_key("calibration", key);
            }
        }
    }

    if (!device_overrides.is_null()) apply_overrides(c.dev, device_overrides);
    if (!divider_overrides.is_null()) apply_overrides(c.div, divider_overrides);
    if (!timing_overrides.is_null()) apply_overrides(c.timing, timing_overrides);
    if (!tml_overrides.is_null()) apply_overrides(c.tml, tml_overrides);
    return c;
}

RunConfig parse_run_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("config: " + std::string(e.what()), line_of_offset(text, e.byte));
    }
    if (!j.is_object()) throw ParseError("config: top level must be a JSON object");

    RunConfig cfg;
    for (const auto& [key, value] : j.items()) {
        if (key == "array") {
            for (const auto& [k, v] : value.items()) {
                if (k == "rows") cfg.rows = static_cast<std::size_t>(num(v, "array", k));
                else if (k == "cols") cfg.cols = static_cast<std::size_t>(num(v, "array", k));
                else if (k == "design" || k == "designs") {
                    cfg.designs.clear();
                    const json list = v.is_array() ? v : json::array({v});
                    for (const auto& name : list) {
                        if (!name.is_string()) throw ParseError("config: design must be a string");
                        const auto d = design_from_name(name.get<std::string>());
                        if (!d) {
                            throw ParseError("config: unknown design \"" +
                                             name.get<std::string>() + "\"");
                        }
                        cfg.designs.push_back(*d);
                    }
                    if (cfg.designs.empty()) throw ParseError("config: empty design list");
                } else if (k == "driver_shared") cfg.driver_shared = boolean(v, "array", k);
                else if (k == "early_termination") cfg.early_termination = boolean(v, "array", k);
                else if (k == "step2_row_gating") cfg.step2_row_gating = boolean(v, "array", k);
                else if (k == "step1_miss_rate") cfg.step1_miss_rate = num(v, "array", k);
                else unknown_key("array", k);
            }
        } else if (key == "device") {
            json rest = value;
            if (rest.contains("preset")) {
                if (!rest["preset"].is_string()) {
                    throw ParseError("config: \"device.preset\" must be a string");
                }
                cfg.device_preset = rest["preset"].get<std::string>();
                rest.erase("preset");
            }
            cfg.device_overrides = rest;
        } else if (key == "divider") {
            cfg.divider_overrides = value;
        } else if (key == "timing") {
            cfg.timing_overrides = value;
        } else if (key == "tml") {
            cfg.tml_overrides = value;
        } else if (key == "cells") {
            cfg.cell_overrides = value;
        } else if (key == "calibration") {
            cfg.calibration = value;
        } else if (key == "sweep") {
            for (const auto& [k, v] : value.items()) {
                if (k == "word_lengths") {
                    if (!v.is_array() || v.empty()) {
                        throw ParseError("config: \"sweep.word_lengths\" must be a nonempty array");
                    }
                    cfg.sweep_word_lengths.clear();
                    for (const auto& n : v) {
                        cfg.sweep_word_lengths.push_back(
                            static_cast<std::size_t>(num(n, "sweep", k)));
                    }
                } else {
                    unknown_key("sweep", k);
                }
            }
        } else if (key == "seed") {
            cfg.seed = static_cast<std::uint64_t>(num(value, "", key));
        } else if (key == "threads") {
            cfg.threads = static_cast<int>(num(value, "", key));
        } else {
            unknown_key("(top level)", key);
        }
    }

    // Validate the overrides eagerly so errors surface at load time.
    for (CellDesign d : cfg.designs) cfg.array_config(d);
    return cfg;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_run_config(ss.str());
}

}  // namespace fetcam
