#pragma once

#include <string>
#include <vector>

#include "lpm/polynomial.hpp"
#include "lpm/rational.hpp"
#include "lpm/shapes.hpp"

namespace lpm {

// Border strip with any number of connected components. Each component is
// an ordered cell list running from its lower-left cell to its upper-right
// cell, consecutive cells differing by a north step (row-1) or an east
// step (col+1); components never share an edge (corner contact at most).
class RibbonShape {
public:
    RibbonShape() = default;  // empty ribbon
    explicit RibbonShape(std::vector<std::vector<Cell>> components);

    // Splits a path-ordered cell list into contiguous runs.
    static RibbonShape from_cells(const std::vector<Cell>& path_ordered);

    const std::vector<std::vector<Cell>>& components() const { return components_; }
    long cell_count() const;
    bool empty() const { return components_.empty(); }
    std::vector<Cell> cells() const;  // concatenated, path order

    // Canonical key: one step word over {N,E} per component ("*" for a
    // single cell), components sorted, joined with "|".
    std::string signature() const;

    friend bool operator==(const RibbonShape&, const RibbonShape&) = default;

private:
    std::vector<std::vector<Cell>> components_;
};

// A ribbon's cells ordered by: right <= left within a row, below <= above
// within a column. Weakly decreasing fillings along rows and columns are
// exactly the order-preserving labelings into a chain, so cells holding
// the top value of any bounded filling form an order filter. The Hasse
// diagram of each component is a path (fence).
class FencePoset {
public:
    explicit FencePoset(const RibbonShape& ribbon);

    const std::vector<Cell>& elements() const { return cells_; }
    bool contains(Cell c) const;
    bool leq(Cell a, Cell b) const;

    // Downward closure of gens.
    std::vector<Cell> ideal_generated_by(const std::vector<Cell>& gens) const;

    // Upward-closed and contained in the poset.
    bool is_filter(const std::vector<Cell>& f) const;

private:
    int index_of(Cell c) const;  // -1 when absent

    std::vector<Cell> cells_;              // path order, components concatenated
    std::vector<int> comp_id_;             // per flat index
    std::vector<char> step_to_next_;       // 'N', 'E', or 0 at component ends
};

// Number of fillings of r with entries in 0..t, weakly decreasing along
// rows and down columns; multiplicative over components.
Integer pp_count(const RibbonShape& r, long t);

// The polynomial of degree cell_count() agreeing with pp_count at every
// t >= 0; exact interpolation at t = 0..cell_count(), memoized by
// signature. The empty ribbon gives the constant 1.
Polynomial pp_polynomial(const RibbonShape& r);

// Order polynomial: order_polynomial(r)(t) = pp_polynomial(r)(t - 1).
Polynomial order_polynomial(const RibbonShape& r);

// All upward-closed subsets of p contained in `allowed` (equivalently all
// filters of the subposet induced on `allowed` whenever the complement of
// `allowed` is an ideal). Includes the empty set; deterministic order.
std::vector<std::vector<Cell>> enumerate_filters(const FencePoset& p,
                                                 const std::vector<Cell>& allowed);

// Ribbon on the cells of r minus the filter, components re-split.
// Throws if the removed set is not an order filter of r.
RibbonShape remove_filter(const RibbonShape& r, const std::vector<Cell>& filter);

}  // namespace lpm
