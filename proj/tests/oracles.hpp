// Independent reference implementations the tests check the simulator
// against. These deliberately avoid the library's evaluation path: the match
// oracle is plain ternary logic, the divider oracle is exact rational
// arithmetic over the IEEE inputs.
#pragma once

#include <gmpxx.h>

#include <random>
#include <vector>

#include "fetcam/tcam_cell.hpp"

namespace oracle {

inline bool bits_equal(fetcam::TernaryBit stored, fetcam::SearchBit query) {
    return (stored == fetcam::TernaryBit::One) == (query == fetcam::SearchBit::One);
}

// A cell mismatches iff it stores a definite bit different from the query.
inline bool cell_mismatch(fetcam::TernaryBit stored, fetcam::SearchBit query) {
    return stored != fetcam::TernaryBit::DontCare && !bits_equal(stored, query);
}

inline bool row_matches(const std::vector<fetcam::TernaryBit>& stored,
                        const std::vector<fetcam::SearchBit>& query) {
    for (std::size_t i = 0; i < stored.size(); ++i) {
        if (cell_mismatch(stored[i], query[i])) return false;
    }
    return true;
}

// Exact divider voltage from rational arithmetic: every double is a rational,
// so the quotient is computed without rounding and converted once at the end.
inline double divider_voltage_rational(fetcam::SearchBit bit, double r_fe,
                                       const fetcam::DividerParams& div) {
    const mpq_class vdd(div.vdd_v);
    const mpq_class rfe(r_fe);
    if (bit == fetcam::SearchBit::Zero) {
        const mpq_class rn(div.r_n_ohm);
        return mpq_class(vdd * rn / (rfe + rn)).get_d();
    }
    const mpq_class rp(div.r_p_ohm);
    return mpq_class(vdd * rfe / (rfe + rp)).get_d();
}

inline fetcam::TernaryBit random_ternary(std::mt19937_64& rng) {
    switch (rng() % 3) {
        case 0: return fetcam::TernaryBit::Zero;
        case 1: return fetcam::TernaryBit::One;
        default: return fetcam::TernaryBit::DontCare;
    }
}

inline fetcam::SearchBit random_search_bit(std::mt19937_64& rng) {
    return rng() % 2 ? fetcam::SearchBit::One : fetcam::SearchBit::Zero;
}

inline std::vector<fetcam::TernaryBit> random_words(std::mt19937_64& rng, std::size_t count) {
    std::vector<fetcam::TernaryBit> words(count);
    for (auto& w : words) w = random_ternary(rng);
    return words;
}

inline std::vector<fetcam::SearchBit> random_query(std::mt19937_64& rng, std::size_t count) {
    std::vector<fetcam::SearchBit> q(count);
    for (auto& b : q) b = random_search_bit(rng);
    return q;
}

}  // namespace oracle
