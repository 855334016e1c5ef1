#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "lpm/polynomial.hpp"
#include "lpm/posets.hpp"
#include "lpm/rational.hpp"
#include "lpm/shapes.hpp"

namespace testsupport {

// Polynomial from coefficient strings in descending degree order, the way
// the golden tables are written.
inline lpm::Polynomial poly_desc(std::vector<std::string> descending) {
    std::reverse(descending.begin(), descending.end());
    return lpm::Polynomial::from_strings(descending);
}

// Independent plane-partition counter: column-profile DP. The library
// kernel transfers along the strip; this one scans columns left to right
// with the whole column assignment as the state.
inline lpm::Integer pp_count_column_oracle(const lpm::RibbonShape& r, long t) {
    lpm::Integer total = 1;
    for (const auto& comp : r.components()) {
        std::map<int, std::vector<int>> columns;  // col -> rows, top to bottom
        for (const lpm::Cell c : comp) {
            columns[c.col].push_back(c.row);
        }
        for (auto& [col, rows] : columns) {
            std::sort(rows.begin(), rows.end());
        }
        // All weakly decreasing assignments of one column.
        auto column_states = [&](std::size_t height) {
            std::vector<std::vector<long>> states;
            std::vector<long> cur;
            auto rec = [&](auto&& self, long max_val) -> void {
                if (cur.size() == height) {
                    states.push_back(cur);
                    return;
                }
                for (long v = max_val; v >= 0; --v) {
                    cur.push_back(v);
                    self(self, v);
                    cur.pop_back();
                }
            };
            rec(rec, t);
            return states;
        };
        std::vector<lpm::Integer> dp;
        std::vector<std::vector<long>> prev_states;
        std::vector<int> prev_rows;
        for (const auto& [col, rows] : columns) {
            auto states = column_states(rows.size());
            std::vector<lpm::Integer> next(states.size(), lpm::Integer(0));
            if (dp.empty()) {
                for (auto& x : next) x = 1;
            } else {
                for (std::size_t a = 0; a < prev_states.size(); ++a) {
                    if (dp[a] == 0) continue;
                    for (std::size_t b = 0; b < states.size(); ++b) {
                        bool ok = true;
                        for (std::size_t i = 0; i < rows.size() && ok; ++i) {
                            for (std::size_t p = 0; p < prev_rows.size(); ++p) {
                                if (prev_rows[p] == rows[i] && prev_states[a][p] < states[b][i]) {
                                    ok = false;
                                    break;
                                }
                            }
                        }
                        if (ok) next[b] += dp[a];
                    }
                }
            }
            dp = std::move(next);
            prev_states = std::move(states);
            prev_rows = rows;
        }
        lpm::Integer sum = 0;
        for (const auto& x : dp) sum += x;
        total *= sum;
    }
    return total;
}

// Permutations of 1..m with exactly d descents, by brute force.
inline long eulerian_brute(int m, int d) {
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 1);
    long count = 0;
    do {
        int descents = 0;
        for (int i = 0; i + 1 < m; ++i) {
            if (perm[i] > perm[i + 1]) ++descents;
        }
        if (descents == d) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// The verification sweep: every connected shape in a 4x4 box, which
// includes every rectangle with at most 8 ground-set elements.
inline const std::vector<lpm::SkewShape>& sweep_shapes() {
    static const std::vector<lpm::SkewShape> shapes = lpm::enumerate_connected_shapes(4, 4);
    return shapes;
}

// ---- Golden fixtures ----

inline const lpm::Polynomial& total_433_1() {
    static const lpm::Polynomial p =
        poly_desc({"47/180", "109/60", "383/72", "17/2", "2851/360", "251/60", "1"});
    return p;
}

// The eleven (diagonal count, snake polynomial) rows for 433/1, listed in
// the source table's order. Step words recovered from the printed strips:
// EENNE, ENENE, EDNE, NEENE, DENE, ENNEE, ENDE, NENEE, DNEE, NEDE, DDE.
inline const std::vector<std::pair<int, lpm::Polynomial>>& delannoy_rows_433_1() {
    static const std::vector<std::pair<int, lpm::Polynomial>> rows = {
        {0, poly_desc({"13/360", "49/120", "67/36", "35/8", "2017/360", "223/60", "1"})},
        {0, poly_desc({"61/720", "61/80", "413/144", "277/48", "2357/360", "119/30", "1"})},
        {1, poly_desc({"1/6", "5/4", "11/3", "21/4", "11/3", "1"})},
        {0, poly_desc({"1/18", "17/30", "169/72", "61/12", "439/72", "77/20", "1"})},
        {1, poly_desc({"5/24", "35/24", "97/24", "133/24", "15/4", "1"})},
        {0, poly_desc({"13/360", "49/120", "67/36", "35/8", "2017/360", "223/60", "1"})},
        {1, poly_desc({"1/6", "5/4", "11/3", "21/4", "11/3", "1"})},
        {0, poly_desc({"7/144", "121/240", "307/144", "227/48", "419/72", "113/30", "1"})},
        {1, poly_desc({"1/8", "25/24", "79/24", "119/24", "43/12", "1"})},
        {1, poly_desc({"1/6", "5/4", "11/3", "21/4", "11/3", "1"})},
        {2, poly_desc({"1/2", "5/2", "9/2", "7/2", "1"})},
    };
    return rows;
}

// Per-path signed sums for 433/1 keyed by step word.
inline const std::map<std::string, lpm::Polynomial>& grouped_rows_433_1() {
    static const std::map<std::string, lpm::Polynomial> rows = {
        {"EENNE", poly_desc({"13/360", "49/120", "67/36", "35/8", "2017/360", "223/60", "1"})},
        {"ENENE", poly_desc({"61/720", "143/240", "233/144", "101/48", "467/360", "3/10", "0"})},
        {"NEENE", poly_desc({"1/18", "43/120", "8/9", "25/24", "5/9", "1/10", "0"})},
        {"ENNEE", poly_desc({"13/360", "29/120", "11/18", "17/24", "127/360", "1/20", "0"})},
        {"NENEE", poly_desc({"7/144", "17/80", "49/144", "13/48", "1/9", "1/60", "0"})},
    };
    return rows;
}

inline const lpm::Polynomial& uniform_2_4() {
    static const lpm::Polynomial p = poly_desc({"2/3", "2", "7/3", "1"});
    return p;
}

inline const lpm::Polynomial& uniform_3_6() {
    static const lpm::Polynomial p =
        poly_desc({"11/20", "11/4", "23/4", "25/4", "37/10", "1"});
    return p;
}

// Per-path totals of the positive decomposition of the 3x3 rectangle, as
// displayed: the east-greedy path plus five others, two of which agree.
inline std::vector<lpm::Polynomial> uniform_3_6_groups() {
    return {
        poly_desc({"1/20", "1/2", "23/12", "7/2", "91/30", "1"}),
        poly_desc({"2/15", "3/4", "3/2", "5/4", "11/30", "0"}),
        poly_desc({"11/120", "11/24", "19/24", "13/24", "7/60", "0"}),
        poly_desc({"11/120", "11/24", "19/24", "13/24", "7/60", "0"}),
        poly_desc({"2/15", "1/3", "1/3", "1/6", "1/30", "0"}),
        poly_desc({"1/20", "1/4", "5/12", "1/4", "1/30", "0"}),
    };
}

}  // namespace testsupport
