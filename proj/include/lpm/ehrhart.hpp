#pragma once

#include <cstddef>
#include <vector>

#include "lpm/paths.hpp"
#include "lpm/polynomial.hpp"
#include "lpm/posets.hpp"
#include "lpm/shapes.hpp"

namespace lpm {

// Number of integer points of the t-th dilate of the base polytope of the
// matroid bounded by p. The polytope is used only through its prefix-sum
// description: 0 <= x_j <= t, sum_{j<=m} x_j within [t*|lower∩[m]|,
// t*|upper∩[m]|] for every m, total t*rank. The constraint matrix has
// consecutive ones, so this system is integral and its 0/1 points at t=1
// are exactly the basis indicators.
Integer lattice_points(const LatticePathPair& p, long t);

// Interpolation of lattice_points at t = 0..n-1.
Polynomial ehr_oracle(const SkewShape& s);

// Product of the plane-partition polynomials of the components of
// ribbon_of(d).
Polynomial ehr_snake(const DelannoyPath& d);

// Inclusion-exclusion over all admissible Delannoy paths:
// sum of (-1)^diagonals * ehr_snake.
Polynomial ehr_signed(const SkewShape& s);

// Signed sum over subsets of the high peaks of gamma:
// sum_{S ⊆ hp(gamma)} (-1)^|S| ehr_snake(insert_diagonals(gamma, S)).
Polynomial ehr_pm(const NEPath& gamma, const SkewShape& s);

// Sum of ehr_pm over all NE paths.
Polynomial ehr_grouped(const SkewShape& s);

struct PathWitness {
    NEPath path;
    std::vector<Cell> high_peaks;
    std::size_t filter_count = 0;
    Polynomial ehr_pm;  // filter-form value (plane-partition sum)
};

struct EhrhartReport {
    SkewShape shape;
    Polynomial by_oracle;
    Polynomial by_signed;
    Polynomial by_grouped;
    Polynomial by_positive;
    bool agree = false;     // all four polynomials identical
    bool positive = false;  // every coefficient of by_positive > 0
    std::vector<PathWitness> witnesses;
};

// Manifestly positive assembly: the gamma_min term enters as its
// plane-partition polynomial (argument t+1 of the order polynomial), every
// other path contributes one order polynomial per order filter of the
// cells outside the ideal generated by its high peaks. Throws if any
// summand has a negative coefficient.
Polynomial ehr_positive_total(const SkewShape& s);

// Full report: all four methods plus the per-path breakdown.
EhrhartReport ehr_positive(const SkewShape& s);

// Coefficient-wise comparison of nested shapes in a common bounding box
// (equal row counts and widths, inner cells contained in outer cells).
bool compare_shapes(const SkewShape& inner, const SkewShape& outer);

// Rectangle specialization: the filter sums collapse to removals of
// initial east-run and final north-run cells.
Polynomial ehr_uniform(int k, int n);

}  // namespace lpm
