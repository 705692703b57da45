#pragma once

#include <string>
#include <vector>

namespace howe {

// Rectangular m x r Young diagram with at most one marked box per column.
// mark[c] is the 1-based marked row of column c+1, or 0 for unmarked.
struct MarkedDiagram {
    int rows = 0;
    int cols = 0;
    std::vector<int> mark;

    int count() const;  // |D|
    std::string ascii() const;
    bool operator==(const MarkedDiagram& o) const {
        return rows == o.rows && cols == o.cols && mark == o.mark;
    }
};

// Exactly (m+1)^r diagrams, columns running as an odometer (unmarked first).
std::vector<MarkedDiagram> marked_diagrams(int m, int r);

// Collection D_1..D_s of marked diagrams with weakly decreasing widths and
// the cross constraint: no two diagrams mark the same (row, column) box.
struct MarkedFamily {
    std::vector<MarkedDiagram> diagrams;

    int total_marks() const;                // |D|
    std::vector<int> marks_per_diagram() const;  // d_i
    std::vector<int> marks_per_column() const;   // e_j, j = 1..widths[0]
    std::vector<int> marks_per_row() const;      // f_j, j = 1..m
    bool cross_valid() const;

    // Sign between the (i,s,k)- and (s,k,i)-lexicographic orders of the mark
    // triples (diagram i, column s, row k).
    int sign_eps() const;
};

std::vector<MarkedFamily> marked_families(const std::vector<int>& widths, int m);

// Perfect pairing of {1..2l} with i_{2t-1} < i_{2t}, plus the sign of the
// permutation k -> i_k.
struct Pairing {
    std::vector<std::pair<int, int>> pairs;
    int sign = 1;
};

std::vector<Pairing> pairings(int two_l);

}  // namespace howe
