#include "fetcam/grid_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace fetcam {

namespace {

std::string strip(const std::string& line) {
    std::string s = line;
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
    std::size_t start = 0;
    while (start < s.size() && (s[start] == ' ' || s[start] == '\t')) ++start;
    return s.substr(start);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open for writing: " + path);
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open: " + path);
    return in;
}

}  // namespace

char to_char(TernaryBit bit) {
    switch (bit) {
        case TernaryBit::Zero: return '0';
        case TernaryBit::One: return '1';
        case TernaryBit::DontCare: return 'X';
    }
    return '?';
}

char to_char(SearchBit bit) { return bit == SearchBit::Zero ? '0' : '1'; }

std::string to_string(const std::vector<SearchBit>& query) {
    std::string s;
    s.reserve(query.size());
    for (SearchBit b : query) s.push_back(to_char(b));
    return s;
}

TernaryGrid parse_grid(std::istream& in) {
    TernaryGrid grid;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string row = strip(line);
        if (row.empty()) continue;
        if (grid.rows == 0) {
            grid.cols = row.size();
        } else if (row.size() != grid.cols) {
            throw ParseError("grid row has " + std::to_string(row.size()) +
                                 " cells, expected " + std::to_string(grid.cols),
                             line_no);
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            switch (row[i]) {
                case '0': grid.cells.push_back(TernaryBit::Zero); break;
                case '1': grid.cells.push_back(TernaryBit::One); break;
                case 'X': grid.cells.push_back(TernaryBit::DontCare); break;
                default:
                    throw ParseError(std::string("grid cell '") + row[i] +
                                         "' at column " + std::to_string(i + 1) +
                                         " is not one of {0, 1, X}",
                                     line_no);
            }
        }
        ++grid.rows;
    }
    if (grid.rows == 0) throw ParseError("grid file is empty");
    return grid;
}

TernaryGrid load_grid(const std::string& path) {
    auto in = open_in(path);
    return parse_grid(in);
}

void write_grid(std::ostream& out, const TernaryGrid& grid) {
    for (std::size_t r = 0; r < grid.rows; ++r) {
        for (std::size_t c = 0; c < grid.cols; ++c) out << to_char(grid.cells[r * grid.cols + c]);
        out << '\n';
    }
}

void save_grid(const std::string& path, const TernaryGrid& grid) {
    auto out = open_out(path);
    write_grid(out, grid);
}

TernaryGrid grid_of(const ArrayState& state) {
    return TernaryGrid{state.rows, state.cols, state.stored};
}

std::vector<std::vector<SearchBit>> parse_queries(std::istream& in) {
    std::vector<std::vector<SearchBit>> queries;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string row = strip(line);
        if (row.empty()) continue;
        std::vector<SearchBit> q;
        q.reserve(row.size());
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i] == '0') {
                q.push_back(SearchBit::Zero);
            } else if (row[i] == '1') {
                q.push_back(SearchBit::One);
            } else {
                throw ParseError(std::string("query symbol '") + row[i] + "' at column " +
                                     std::to_string(i + 1) + " is not one of {0, 1}",
                                 line_no);
            }
        }
        queries.push_back(std::move(q));
    }
    if (queries.empty()) throw ParseError("query file is empty");
    return queries;
}

std::vector<std::vector<SearchBit>> load_queries(const std::string& path) {
    auto in = open_in(path);
    return parse_queries(in);
}

void write_queries(std::ostream& out, const std::vector<std::vector<SearchBit>>& queries) {
    for (const auto& q : queries) out << to_string(q) << '\n';
}

void save_queries(const std::string& path, const std::vector<std::vector<SearchBit>>& queries) {
    auto out = open_out(path);
    write_queries(out, queries);
}

}  // namespace fetcam
