#include "lpm/ehrhart.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpm {

namespace {

void require_connected(const SkewShape& s) {
    if (!s.connected()) {
        throw std::invalid_argument("disconnected shape: " + s.str());
    }
}

// Order filters of the cells of gamma outside the ideal generated by its
// high peaks, together with the fence poset they live in.
struct FilterContext {
    RibbonShape ribbon;
    FencePoset fence;
    std::vector<std::vector<Cell>> filters;
};

FilterContext filter_context(const NEPath& gamma, const SkewShape& s) {
    RibbonShape ribbon = ribbon_of(gamma);
    FencePoset fence(ribbon);
    const auto ideal = fence.ideal_generated_by(high_peaks(gamma, s));
    std::vector<Cell> allowed;
    for (const Cell c : fence.elements()) {
        if (!std::binary_search(ideal.begin(), ideal.end(), c)) {
            allowed.push_back(c);
        }
    }
    auto filters = enumerate_filters(fence, allowed);
    return {std::move(ribbon), std::move(fence), std::move(filters)};
}

}  // namespace

Integer lattice_points(const LatticePathPair& p, long t) {
    if (t < 0) {
        throw std::invalid_argument("negative dilation");
    }
    const int n = p.n();
    const int k = p.rank();
    std::vector<long> lcnt(n + 1, 0), ucnt(n + 1, 0);
    for (int m = 1; m <= n; ++m) {
        lcnt[m] = lcnt[m - 1] + (std::binary_search(p.lower().begin(), p.lower().end(), m) ? 1 : 0);
        ucnt[m] = ucnt[m - 1] + (std::binary_search(p.upper().begin(), p.upper().end(), m) ? 1 : 0);
    }
    // dp[s] = number of prefixes with running sum s; each step adds a
    // coordinate in 0..t and clamps the sum to [t*lcnt, t*ucnt].
    const long top = t * k;
    std::vector<Integer> dp(top + 1, Integer(0));
    dp[0] = 1;
    for (int m = 1; m <= n; ++m) {
        std::vector<Integer> prefix(top + 2, Integer(0));
        for (long s = 0; s <= top; ++s) {
            prefix[s + 1] = prefix[s] + dp[s];
        }
        std::vector<Integer> next(top + 1, Integer(0));
        const long lo = t * lcnt[m], hi = t * ucnt[m];
        for (long s2 = lo; s2 <= hi && s2 <= top; ++s2) {
            const long from_lo = std::max<long>(0, s2 - t);
            next[s2] = prefix[s2 + 1] - prefix[from_lo];
        }
        dp = std::move(next);
    }
    return dp[top];
}

Polynomial ehr_oracle(const SkewShape& s) {
    require_connected(s);
    const LatticePathPair pair = shape_to_paths(s);
    const int n = s.ground_set_size();
    std::vector<std::pair<Rational, Rational>> points;
    points.reserve(n);
    for (int t = 0; t < n; ++t) {
        points.emplace_back(Rational(t), Rational(lattice_points(pair, t)));
    }
    return interpolate(points);
}

Polynomial ehr_snake(const DelannoyPath& d) {
    return pp_polynomial(ribbon_of(d));
}

Polynomial ehr_signed(const SkewShape& s) {
    require_connected(s);
    Polynomial total;
    for (const DelannoyPath& d : enumerate_delannoy(s)) {
        const Polynomial term = ehr_snake(d);
        if (d.diagonals() % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

Polynomial ehr_pm(const NEPath& gamma, const SkewShape& s) {
    const auto hp = high_peaks(gamma, s);
    Polynomial total;
    for (std::size_t mask = 0; mask < (std::size_t{1} << hp.size()); ++mask) {
        std::vector<Cell> subset;
        for (std::size_t b = 0; b < hp.size(); ++b) {
            if (mask >> b & 1) subset.push_back(hp[b]);
        }
        const Polynomial term = ehr_snake(insert_diagonals(MarkedPath{gamma, subset}, s));
        if (subset.size() % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

Polynomial ehr_grouped(const SkewShape& s) {
    require_connected(s);
    Polynomial total;
    for (const NEPath& gamma : enumerate_ne_paths(s)) {
        total += ehr_pm(gamma, s);
    }
    return total;
}

Polynomial ehr_positive_total(const SkewShape& s) {
    require_connected(s);
    const NEPath gmin = gamma_min(s);
    Polynomial total;
    for (const NEPath& gamma : enumerate_ne_paths(s)) {
        if (gamma == gmin) {
            total += pp_polynomial(ribbon_of(gamma));
            continue;
        }
        const FilterContext ctx = filter_context(gamma, s);
        for (const auto& filter : ctx.filters) {
            const Polynomial term = order_polynomial(remove_filter(ctx.ribbon, filter));
            for (const Rational& c : term.coefficients()) {
                if (c.sign() < 0) {
                    throw std::logic_error("order-polynomial summand with a negative coefficient");
                }
            }
            total += term;
        }
    }
    return total;
}

EhrhartReport ehr_positive(const SkewShape& s) {
    require_connected(s);
    EhrhartReport report{s,  Polynomial(), Polynomial(), Polynomial(),
                         Polynomial(), false, false, {}};
    report.by_oracle = ehr_oracle(s);
    report.by_signed = ehr_signed(s);
    report.by_grouped = ehr_grouped(s);

    const NEPath gmin = gamma_min(s);
    Polynomial total;
    for (const NEPath& gamma : enumerate_ne_paths(s)) {
        PathWitness w;
        w.path = gamma;
        w.high_peaks = high_peaks(gamma, s);
        if (gamma == gmin) {
            w.filter_count = 1;
            w.ehr_pm = pp_polynomial(ribbon_of(gamma));
        } else {
            const FilterContext ctx = filter_context(gamma, s);
            w.filter_count = ctx.filters.size();
            for (const auto& filter : ctx.filters) {
                const Polynomial term = order_polynomial(remove_filter(ctx.ribbon, filter));
                for (const Rational& c : term.coefficients()) {
                    if (c.sign() < 0) {
                        throw std::logic_error(
                            "order-polynomial summand with a negative coefficient");
                    }
                }
                w.ehr_pm += term;
            }
        }
        total += w.ehr_pm;
        report.witnesses.push_back(std::move(w));
    }
    report.by_positive = std::move(total);
    report.agree = report.by_oracle == report.by_signed &&
                   report.by_signed == report.by_grouped &&
                   report.by_grouped == report.by_positive;
    report.positive = !report.by_positive.is_zero();
    for (const Rational& c : report.by_positive.coefficients()) {
        if (c.sign() <= 0) report.positive = false;
    }
    return report;
}

bool compare_shapes(const SkewShape& inner, const SkewShape& outer) {
    if (inner.rows() != outer.rows() || inner.lambda()[0] != outer.lambda()[0]) {
        throw std::invalid_argument("shapes do not share a bounding box");
    }
    for (int i = 0; i < inner.rows(); ++i) {
        if (inner.mu()[i] < outer.mu()[i] || inner.lambda()[i] > outer.lambda()[i]) {
            throw std::invalid_argument("inner shape is not contained in outer shape");
        }
    }
    require_connected(inner);
    require_connected(outer);
    return coeffwise_leq(ehr_positive_total(inner), ehr_positive_total(outer));
}

Polynomial ehr_uniform(int k, int n) {
    if (k < 1 || k > n - 1) {
        throw std::out_of_range("rank must satisfy 1 <= k <= n-1");
    }
    const SkewShape rect(std::vector<int>(k, n - k), std::vector<int>(k, 0));
    const NEPath gmin = gamma_min(rect);
    Polynomial total;
    for (const NEPath& gamma : enumerate_ne_paths(rect)) {
        if (gamma == gmin) {
            total += pp_polynomial(ribbon_of(gamma));
            continue;
        }
        const std::string word = gamma.step_word();
        std::size_t east_run = 0;
        while (east_run < word.size() && word[east_run] == 'E') ++east_run;
        std::size_t north_run = 0;
        while (north_run < word.size() && word[word.size() - 1 - north_run] == 'N') ++north_run;
        for (std::size_t i = 0; i <= east_run; ++i) {
            for (std::size_t j = 0; j <= north_run; ++j) {
                const std::vector<Cell> sub(gamma.cells.begin() + i, gamma.cells.end() - j);
                total += order_polynomial(RibbonShape::from_cells(sub));
            }
        }
    }
    return total;
}

}  // namespace lpm
