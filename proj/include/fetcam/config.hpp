#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fetcam/tcam_array.hpp"

namespace fetcam {

// Parsed run configuration. Sections of the JSON config file override the
// built-in defaults; anything absent keeps its default. Calibration entries
// apply per design before the flat device/divider/timing/tml overrides.
struct RunConfig {
    std::vector<CellDesign> designs = {CellDesign::TwoFefetSg, CellDesign::TwoFefetDg,
                                       CellDesign::OneFiveT1FeSg, CellDesign::OneFiveT1FeDg};
    std::size_t rows = 64;
    std::size_t cols = 64;
    bool driver_shared = true;
    bool early_termination = true;
    bool step2_row_gating = true;
    double step1_miss_rate = 0.9;

    std::vector<std::size_t> sweep_word_lengths = {16, 32, 64, 128};

    std::uint64_t seed = 42;
    int threads = 1;

    std::optional<std::string> device_preset;  // must name sg14 or dg14
    nlohmann::json device_overrides;
    nlohmann::json divider_overrides;
    nlohmann::json timing_overrides;
    nlohmann::json tml_overrides;
    nlohmann::json cell_overrides;
    nlohmann::json calibration;  // {"per_design": {name: {...}}, plus flat keys}

    // Assembles the full ArrayConfig for one design: family preset, divider
    // defaults, calibrated timing, then config-file overrides.
    ArrayConfig array_config(CellDesign design) const;
};

RunConfig load_run_config(const std::string& path);
RunConfig parse_run_config(const std::string& text);

// Individual override appliers (exposed for the config tests).
void apply_overrides(FeFetParams& dev, const nlohmann::json& j);
void apply_overrides(DividerParams& div, const nlohmann::json& j);
void apply_overrides(TimingParams& timing, const nlohmann::json& j);
void apply_overrides(MosfetParams& tml, const nlohmann::json& j);
void apply_overrides(CellConstants& cells, const nlohmann::json& j);

}  // namespace fetcam
