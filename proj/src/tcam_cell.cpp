#include "fetcam/tcam_cell.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace fetcam {

bool is_paired_design(CellDesign design) {
    return design == CellDesign::OneFiveT1FeSg || design == CellDesign::OneFiveT1FeDg;
}

DeviceKind device_kind_of(CellDesign design) {
    return (design == CellDesign::TwoFefetSg || design == CellDesign::OneFiveT1FeSg)
               ? DeviceKind::SG
               : DeviceKind::DG;
}

const char* design_name(CellDesign design) {
    switch (design) {
        case CellDesign::TwoFefetSg: return "2SG-FeFET";
        case CellDesign::TwoFefetDg: return "2DG-FeFET";
        case CellDesign::OneFiveT1FeSg: return "1.5T1SG-Fe";
        case CellDesign::OneFiveT1FeDg: return "1.5T1DG-Fe";
    }
    return "?";
}

std::optional<CellDesign> design_from_name(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "2sg-fefet" || lower == "2sg") return CellDesign::TwoFefetSg;
    if (lower == "2dg-fefet" || lower == "2dg") return CellDesign::TwoFefetDg;
    if (lower == "1.5t1sg-fe" || lower == "1.5sg" || lower == "1p5sg") {
        return CellDesign::OneFiveT1FeSg;
    }
    if (lower == "1.5t1dg-fe" || lower == "1.5dg" || lower == "1p5dg") {
        return CellDesign::OneFiveT1FeDg;
    }
    return std::nullopt;
}

DividerParams divider_defaults(DeviceKind kind) {
    DividerParams d;
    d.v_sel_v = kind == DeviceKind::DG ? 2.0 : 0.8;
    return d;
}

FefetPair encode_pair(TernaryBit value) {
    switch (value) {
        case TernaryBit::Zero: return {PolarizationState::Hvt, PolarizationState::Lvt};
        case TernaryBit::One: return {PolarizationState::Lvt, PolarizationState::Hvt};
        case TernaryBit::DontCare: return {PolarizationState::Hvt, PolarizationState::Hvt};
    }
    throw std::logic_error("encode_pair: bad value");
}

PolarizationState encode_single(TernaryBit value) {
    switch (value) {
        case TernaryBit::Zero: return PolarizationState::Hvt;
        case TernaryBit::One: return PolarizationState::Lvt;
        case TernaryBit::DontCare: return PolarizationState::Mvt;
    }
    throw std::logic_error("encode_single: bad value");
}

TernaryBit decode_pair(FefetPair pair) {
    if (pair.left == PolarizationState::Hvt && pair.right == PolarizationState::Lvt) {
        return TernaryBit::Zero;
    }
    if (pair.left == PolarizationState::Lvt && pair.right == PolarizationState::Hvt) {
        return TernaryBit::One;
    }
    if (pair.left == PolarizationState::Hvt && pair.right == PolarizationState::Hvt) {
        return TernaryBit::DontCare;
    }
    throw std::invalid_argument("decode_pair: not a legal complementary encoding");
}

TernaryBit decode_single(PolarizationState state) {
    switch (state) {
        case PolarizationState::Hvt: return TernaryBit::Zero;
        case PolarizationState::Lvt: return TernaryBit::One;
        case PolarizationState::Mvt: return TernaryBit::DontCare;
    }
    throw std::logic_error("decode_single: bad state");
}

double search_resistance(const FeFetParams& dev, PolarizationState state,
                         const DividerParams& div) {
    return effective_resistance(dev, state, BiasPoint{div.v_sel_v, div.vdd_v}, read_gate(dev));
}

ResistanceCheck check_resistance_order(const FeFetParams& dev, const DividerParams& div) {
    const double r_on = search_resistance(dev, PolarizationState::Lvt, div);
    const double r_m = search_resistance(dev, PolarizationState::Mvt, div);
    const double r_off = search_resistance(dev, PolarizationState::Hvt, div);
    const double r_n = div.r_n_ohm;
    const double r_p = div.r_p_ohm;

    auto fail = [&](const char* name) {
        ResistanceCheck c;
        c.ok = false;
        c.violated = name;
        c.detail = "R_ON=" + std::to_string(r_on) + " R_N=" + std::to_string(r_n) +
                   " R_M=" + std::to_string(r_m) + " R_P=" + std::to_string(r_p) +
                   " R_OFF=" + std::to_string(r_off);
        return c;
    };

    if (!(r_on < r_n)) return fail("R_ON < R_N");
    if (!(r_n < r_m)) return fail("R_N < R_M");
    if (!(r_m < r_p)) return fail("R_M < R_P");
    if (!(r_p < r_off)) return fail("R_P < R_OFF");
    if (!(r_p <= r_off / 10.0)) return fail("R_P << R_OFF (requires R_P <= R_OFF/10)");
    return ResistanceCheck{};
}

double divider_voltage(SearchBit search_bit, double r_fe_ohm, const DividerParams& div) {
    if (!(r_fe_ohm > 0)) throw std::invalid_argument("divider_voltage: r_fe must be > 0");
    if (search_bit == SearchBit::Zero) {
        return div.vdd_v * div.r_n_ohm / (r_fe_ohm + div.r_n_ohm);
    }
    return div.vdd_v * r_fe_ohm / (r_fe_ohm + div.r_p_ohm);
}

Match1p5 divider_match(double r_fe_ohm, SearchBit search_bit, const DividerParams& div) {
    Match1p5 m;
    m.v_sl_bar_v = divider_voltage(search_bit, r_fe_ohm, div);
    m.tml_conducting = m.v_sl_bar_v > div.tml_vth_v;
    const double r_div = search_bit == SearchBit::Zero ? div.r_n_ohm : div.r_p_ohm;
    m.static_current_a = div.vdd_v / (r_fe_ohm + r_div);
    return m;
}

Match1p5 evaluate_match_1p5(PolarizationState stored, SearchBit search_bit,
                            const FeFetParams& dev, const DividerParams& div) {
    const ResistanceCheck check = check_resistance_order(dev, div);
    if (!check.ok) {
        throw ConfigError("evaluate_match_1p5: resistance ordering violated: " + check.violated);
    }
    return divider_match(search_resistance(dev, stored, div), search_bit, div);
}

Match2Fefet evaluate_match_2fefet(FefetPair pair, SearchBit search_bit, const FeFetParams& dev,
                                  const DividerParams& div) {
    if (pair.left == PolarizationState::Lvt && pair.right == PolarizationState::Lvt) {
        throw std::invalid_argument("evaluate_match_2fefet: illegal (LVT, LVT) pair");
    }
    const PolarizationState activated =
        search_bit == SearchBit::Zero ? pair.left : pair.right;
    Match2Fefet m;
    m.pulls_down = activated == PolarizationState::Lvt;
    m.path_resistance_ohm = search_resistance(dev, activated, div);
    return m;
}

}  // namespace fetcam
