#include "lpm/paths.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpm {

namespace {

Cell start_cell(const SkewShape& s) { return {s.rows(), s.row_begin(s.rows())}; }
Cell end_cell(const SkewShape& s) { return {1, s.row_end(1)}; }

void require_connected(const SkewShape& s) {
    if (!s.connected()) {
        throw std::invalid_argument("disconnected shape: " + s.str());
    }
}

// The 2x2 box with lower-left cell (row, col).
bool box_in_shape(const SkewShape& s, int row, int col) {
    return s.contains(row, col) && s.contains(row - 1, col) && s.contains(row, col + 1) &&
           s.contains(row - 1, col + 1);
}

}  // namespace

std::string NEPath::step_word() const {
    std::string w;
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
        w += cells[i + 1].row < cells[i].row ? 'N' : 'E';
    }
    return w;
}

int DelannoyPath::diagonals() const {
    int d = 0;
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
        if (cells[i + 1].row < cells[i].row && cells[i + 1].col > cells[i].col) ++d;
    }
    return d;
}

std::string DelannoyPath::step_word() const {
    std::string w;
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
        const bool up = cells[i + 1].row < cells[i].row;
        const bool right = cells[i + 1].col > cells[i].col;
        w += up && right ? 'D' : (up ? 'N' : 'E');
    }
    return w;
}

std::vector<NEPath> enumerate_ne_paths(const SkewShape& s) {
    require_connected(s);
    const Cell goal = end_cell(s);
    std::vector<NEPath> out;
    std::vector<Cell> path{start_cell(s)};
    auto dfs = [&](auto&& self) -> void {
        const Cell cur = path.back();
        if (cur == goal) {
            out.push_back(NEPath{path});
            return;
        }
        for (const Cell next : {Cell{cur.row - 1, cur.col}, Cell{cur.row, cur.col + 1}}) {
            if (!s.contains(next)) continue;
            path.push_back(next);
            self(self);
            path.pop_back();
        }
    };
    dfs(dfs);
    return out;
}

NEPath gamma_min(const SkewShape& s) {
    require_connected(s);
    const int l = s.rows();
    std::vector<Cell> cells;
    for (int i = l; i >= 1; --i) {
        const int from = i == l ? s.row_begin(l) : s.lambda()[i];  // lambda_{i+1}
        for (int j = from; j <= s.row_end(i); ++j) {
            cells.push_back({i, j});
        }
    }
    return NEPath{std::move(cells)};
}

std::vector<Cell> peaks(const NEPath& p) {
    std::vector<Cell> out;
    for (std::size_t i = 1; i + 1 < p.cells.size(); ++i) {
        const bool entered_north = p.cells[i].row == p.cells[i - 1].row - 1;
        const bool left_east = p.cells[i + 1].col == p.cells[i].col + 1;
        if (entered_north && left_east) out.push_back(p.cells[i]);
    }
    return out;
}

std::vector<Cell> high_peaks(const NEPath& p, const SkewShape& s) {
    std::vector<Cell> out;
    for (const Cell c : peaks(p)) {
        if (s.contains(c.row + 1, c.col + 1)) out.push_back(c);
    }
    return out;
}

std::vector<DelannoyPath> enumerate_delannoy(const SkewShape& s) {
    require_connected(s);
    const Cell goal = end_cell(s);
    std::vector<DelannoyPath> out;
    std::vector<Cell> path{start_cell(s)};
    auto dfs = [&](auto&& self) -> void {
        const Cell cur = path.back();
        if (cur == goal) {
            out.push_back(DelannoyPath{path});
            return;
        }
        // Step order N < D < E gives lexicographic output.
        const Cell north{cur.row - 1, cur.col};
        const Cell diag{cur.row - 1, cur.col + 1};
        const Cell east{cur.row, cur.col + 1};
        for (const Cell next : {north, diag, east}) {
            if (!s.contains(next)) continue;
            if (next == diag && !box_in_shape(s, cur.row, cur.col)) continue;
            path.push_back(next);
            self(self);
            path.pop_back();
        }
    };
    dfs(dfs);
    return out;
}

bool is_admissible(const DelannoyPath& d, const SkewShape& s) {
    if (d.cells.empty() || d.cells.front() != start_cell(s) || d.cells.back() != end_cell(s)) {
        return false;
    }
    for (std::size_t i = 0; i < d.cells.size(); ++i) {
        if (!s.contains(d.cells[i])) return false;
        if (i + 1 == d.cells.size()) continue;
        const Cell a = d.cells[i], b = d.cells[i + 1];
        const bool up = b.row == a.row - 1;
        const bool right = b.col == a.col + 1;
        if (!up && !right) return false;
        if (up && right && !box_in_shape(s, a.row, a.col)) return false;
    }
    return true;
}

DelannoyPath insert_diagonals(const MarkedPath& m, const SkewShape& s) {
    const auto hp = high_peaks(m.path, s);
    for (const Cell c : m.marks) {
        if (std::find(hp.begin(), hp.end(), c) == hp.end()) {
            throw std::invalid_argument("marked cell is not a high peak of the path");
        }
    }
    std::vector<Cell> cells;
    for (const Cell c : m.path.cells) {
        if (std::find(m.marks.begin(), m.marks.end(), c) == m.marks.end()) {
            cells.push_back(c);
        }
    }
    return DelannoyPath{std::move(cells)};
}

MarkedPath extract_marks(const DelannoyPath& d) {
    std::vector<Cell> cells, marks;
    for (std::size_t i = 0; i < d.cells.size(); ++i) {
        if (i > 0) {
            const Cell a = d.cells[i - 1], b = d.cells[i];
            if (b.row == a.row - 1 && b.col == a.col + 1) {
                const Cell peak{a.row - 1, a.col};
                cells.push_back(peak);
                marks.push_back(peak);
            }
        }
        cells.push_back(d.cells[i]);
    }
    return MarkedPath{NEPath{std::move(cells)}, std::move(marks)};
}

RibbonShape ribbon_of(const DelannoyPath& d) {
    const MarkedPath m = extract_marks(d);
    std::vector<Cell> rest;
    for (const Cell c : m.path.cells) {
        if (std::find(m.marks.begin(), m.marks.end(), c) == m.marks.end()) {
            rest.push_back(c);
        }
    }
    return RibbonShape::from_cells(rest);
}

RibbonShape ribbon_of(const NEPath& p) {
    return RibbonShape::from_cells(p.cells);
}

}  // namespace lpm
