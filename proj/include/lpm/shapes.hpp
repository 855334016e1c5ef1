#pragma once

#include <compare>
#include <string>
#include <vector>

namespace lpm {

// Cell (i, j) of a diagram: row i counted 1.. from the top, column j
// counted 1.. from the left. All modules share this convention.
struct Cell {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Skew shape lambda/mu: row i holds the cells mu_i < j <= lambda_i.
// mu is stored zero-padded to the length of lambda; empty rows
// (mu_i >= lambda_i) are rejected at construction.
class SkewShape {
public:
    SkewShape(std::vector<int> lambda, std::vector<int> mu);

    // Literal grammar: "<lambda>/<mu>" or bare "<lambda>"; a part list is
    // either comma-separated integers or a digit run (one digit per part).
    static SkewShape parse(const std::string& literal);

    int rows() const { return static_cast<int>(lambda_.size()); }
    const std::vector<int>& lambda() const { return lambda_; }
    const std::vector<int>& mu() const { return mu_; }
    int row_begin(int i) const { return mu_[i - 1] + 1; }  // first column of row i
    int row_end(int i) const { return lambda_[i - 1]; }    // last column of row i

    bool contains(int row, int col) const;
    bool contains(Cell c) const { return contains(c.row, c.col); }
    long cell_count() const;
    std::vector<Cell> cells() const;  // row-major

    // Consecutive rows share a column: mu_i < lambda_{i+1} for all i < rows.
    bool connected() const;

    // Parameters of the bounding box rows x lambda_1 and of the matroid
    // whose diagram this is.
    int ground_set_size() const { return lambda_[0] + rows(); }  // n
    int rank() const { return rows(); }                          // k

    SkewShape rotated180() const;

    // Canonical literal: digit-run form when every part <= 9, comma form
    // otherwise; trailing zeros of mu dropped, "/" omitted when mu is zero.
    std::string str() const;

    friend bool operator==(const SkewShape&, const SkewShape&) = default;

private:
    std::vector<int> lambda_;
    std::vector<int> mu_;
};

// Bounding pair of monotone lattice paths, encoded by the sets of N-step
// positions. lower must lie below upper in the prefix-count order.
class LatticePathPair {
public:
    LatticePathPair(int n, std::vector<int> lower, std::vector<int> upper);

    int n() const { return n_; }
    int rank() const { return static_cast<int>(upper_.size()); }
    const std::vector<int>& lower() const { return lower_; }
    const std::vector<int>& upper() const { return upper_; }

    friend bool operator==(const LatticePathPair&, const LatticePathPair&) = default;

private:
    int n_;
    std::vector<int> lower_;
    std::vector<int> upper_;
};

struct Basis {
    std::vector<int> elements;  // sorted k-subset of 1..n
    friend bool operator==(const Basis&, const Basis&) = default;
};

// Prefix-count test: |lower ∩ [m]| <= |upper ∩ [m]| for every m = 1..n.
bool lies_below(const std::vector<int>& lower, const std::vector<int>& upper, int n);

// Region between upper (upper-left boundary) and lower (lower-right
// boundary), with empty rows and columns of the bounding box deleted.
SkewShape paths_to_shape(const LatticePathPair& p);

// Boundary pair of the shape's own bounding box; inverse of paths_to_shape
// for pairs whose region is row- and column-tight.
LatticePathPair shape_to_paths(const SkewShape& s);

// All k-subsets S with lower ⪯ S ⪯ upper in the prefix order.
std::vector<Basis> enumerate_bases(const LatticePathPair& p);

// All connected shapes in canonical position (bottom row starting at
// column 1) with at most max_rows rows and max_cols columns.
// Deterministic order: by row count, then lexicographic on (lambda, mu).
std::vector<SkewShape> enumerate_connected_shapes(int max_rows, int max_cols);

}  // namespace lpm
