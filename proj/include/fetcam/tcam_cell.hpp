#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "fetcam/fefet_device.hpp"

namespace fetcam {

// Stored TCAM symbol. DontCare matches either query bit.
enum class TernaryBit { Zero, One, DontCare };

// Query symbol; queries carry no wildcard.
enum class SearchBit { Zero, One };

enum class CellDesign { TwoFefetSg, TwoFefetDg, OneFiveT1FeSg, OneFiveT1FeDg };

// 1.5T1Fe designs pair two cells around shared TP/TN/TML control transistors.
bool is_paired_design(CellDesign design);
DeviceKind device_kind_of(CellDesign design);

const char* design_name(CellDesign design);
std::optional<CellDesign> design_from_name(std::string_view name);

// Voltage-divider sensing parameters for the 1.5T1Fe cell; v_sel doubles as
// the search-line read voltage of the 2FeFET designs.
struct DividerParams {
    double vdd_v = 0.8;
    double v_sel_v = 2.0;
    double v_b_v = 0.25;
    double r_n_ohm = 1e6;   // TN on-resistance
    double r_p_ohm = 1e8;   // TP on-resistance
    double tml_vth_v = 0.3;
};

DividerParams divider_defaults(DeviceKind kind);

// Complementary FeFET pair of one 2FeFET cell.
struct FefetPair {
    PolarizationState left;
    PolarizationState right;
    bool operator==(const FefetPair&) const = default;
};

// 2FeFET encoding: Zero -> (HVT, LVT), One -> (LVT, HVT), DontCare -> (HVT, HVT).
FefetPair encode_pair(TernaryBit value);
// 1.5T1Fe encoding: Zero -> HVT, One -> LVT, DontCare -> MVT.
PolarizationState encode_single(TernaryBit value);
// Inverses; decode_pair rejects the unreachable (LVT, LVT) pair.
TernaryBit decode_pair(FefetPair pair);
TernaryBit decode_single(PolarizationState state);

// R_FE of the stored state at the search bias (read gate at v_sel, VDD across
// the channel).
double search_resistance(const FeFetParams& dev, PolarizationState state,
                         const DividerParams& div);

// Result of checking R_ON < R_N < R_M < R_P << R_OFF against the device's
// search-bias resistances. `violated` names the first broken inequality.
struct ResistanceCheck {
    bool ok = true;
    std::string violated;
    std::string detail;
};

ResistanceCheck check_resistance_order(const FeFetParams& dev, const DividerParams& div);

// Steady-state SL_bar voltage of the divider: search Zero pulls through TN
// (vdd * r_n / (r_fe + r_n)), search One through TP (vdd * r_fe / (r_fe + r_p)).
double divider_voltage(SearchBit search_bit, double r_fe_ohm, const DividerParams& div);

struct Match1p5 {
    bool tml_conducting;     // SL_bar above the TML threshold -> ML discharges
    double v_sl_bar_v;
    double static_current_a;  // vdd / (r_fe + active divider resistor)
};

// Single-cell 1.5T1Fe evaluation. Requires the resistance ordering to hold
// (ConfigError otherwise). A conducting TML means mismatch for this cell.
Match1p5 evaluate_match_1p5(PolarizationState stored, SearchBit search_bit,
                            const FeFetParams& dev, const DividerParams& div);

// Same evaluation from a precomputed R_FE; evaluate_match_1p5 and the array
// engine both route through this.
Match1p5 divider_match(double r_fe_ohm, SearchBit search_bit, const DividerParams& div);

struct Match2Fefet {
    bool pulls_down;            // activated FeFET conducts -> mismatch
    double path_resistance_ohm;
};

// 2FeFET cell: search Zero activates the left FeFET (SL), search One the
// right one (SL_bar). Rejects the illegal (LVT, LVT) pair.
Match2Fefet evaluate_match_2fefet(FefetPair pair, SearchBit search_bit, const FeFetParams& dev,
                                  const DividerParams& div);

}  // namespace fetcam
