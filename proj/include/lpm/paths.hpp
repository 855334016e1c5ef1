#pragma once

#include <string>
#include <vector>

#include "lpm/posets.hpp"
#include "lpm/shapes.hpp"

namespace lpm {

// Monotone cell path from the lower-leftmost cell of a shape to its
// upper-rightmost cell; consecutive cells differ by a north step (row-1)
// or an east step (col+1). Never contains a 2x2 square.
struct NEPath {
    std::vector<Cell> cells;

    std::string step_word() const;  // over {N, E}
    friend bool operator==(const NEPath&, const NEPath&) = default;
};

// Cell path as above but allowing diagonal steps (row-1, col+1).
// Admissible within a shape when every cell lies inside it and every
// diagonal step's surrounding 2x2 cell box lies inside it (the path
// through cell centers then stays strictly interior to the region).
struct DelannoyPath {
    std::vector<Cell> cells;

    int diagonals() const;
    std::string step_word() const;  // over {N, D, E}
    friend bool operator==(const DelannoyPath&, const DelannoyPath&) = default;
};

// An NE-path with a subset of its high peaks marked.
struct MarkedPath {
    NEPath path;
    std::vector<Cell> marks;
    friend bool operator==(const MarkedPath&, const MarkedPath&) = default;
};

// All NE cell paths through the (connected) shape, ordered
// lexicographically by step word with N < E.
std::vector<NEPath> enumerate_ne_paths(const SkewShape& s);

// East-greedy path: in row i it covers the columns nu_i < j <= lambda_i
// with nu_i = lambda_{i+1} - 1 (and nu = mu in the bottom row). Its peaks
// are never high.
NEPath gamma_min(const SkewShape& s);

// Cells entered by a north step and left by an east step.
std::vector<Cell> peaks(const NEPath& p);

// Peaks of p that are not peaks of gamma_min(s); detected as the peaks
// whose south-east diagonal neighbor cell lies inside the shape.
std::vector<Cell> high_peaks(const NEPath& p, const SkewShape& s);

// All admissible Delannoy paths, ordered lexicographically by step word
// with N < D < E.
std::vector<DelannoyPath> enumerate_delannoy(const SkewShape& s);

bool is_admissible(const DelannoyPath& d, const SkewShape& s);

// Fuses each marked peak's north/east step pair into one diagonal step,
// deleting the peak cell. Throws if a mark is not a high peak of the path
// within s.
DelannoyPath insert_diagonals(const MarkedPath& m, const SkewShape& s);

// Inverse: re-expands each diagonal step through its peak cell and marks
// that cell.
MarkedPath extract_marks(const DelannoyPath& d);

// Cell support of extract_marks(d).path minus the marked cells; has
// exactly diagonals() + 1 components.
RibbonShape ribbon_of(const DelannoyPath& d);

// The path's own cells as a one-component ribbon.
RibbonShape ribbon_of(const NEPath& p);

}  // namespace lpm
