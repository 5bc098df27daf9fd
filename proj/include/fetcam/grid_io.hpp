#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fetcam/tcam_array.hpp"

namespace fetcam {

struct TernaryGrid {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<TernaryBit> cells;  // row-major
};

// Grid file: one row per line, characters {0, 1, X}. Rectangular; blank
// lines are skipped. ParseError carries the offending line.
TernaryGrid parse_grid(std::istream& in);
TernaryGrid load_grid(const std::string& path);
void write_grid(std::ostream& out, const TernaryGrid& grid);
void save_grid(const std::string& path, const TernaryGrid& grid);

TernaryGrid grid_of(const ArrayState& state);

// Query file: one query per line, characters {0, 1}.
std::vector<std::vector<SearchBit>> parse_queries(std::istream& in);
std::vector<std::vector<SearchBit>> load_queries(const std::string& path);
void write_queries(std::ostream& out, const std::vector<std::vector<SearchBit>>& queries);
void save_queries(const std::string& path, const std::vector<std::vector<SearchBit>>& queries);

char to_char(TernaryBit bit);
char to_char(SearchBit bit);
std::string to_string(const std::vector<SearchBit>& query);

}  // namespace fetcam
