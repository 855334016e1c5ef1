#include "lpm/posets.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace lpm {

namespace {

char step_between(Cell a, Cell b) {
    if (b.row == a.row - 1 && b.col == a.col) return 'N';
    if (b.row == a.row && b.col == a.col + 1) return 'E';
    return 0;
}

}  // namespace

RibbonShape::RibbonShape(std::vector<std::vector<Cell>> components)
    : components_(std::move(components)) {
    for (const auto& comp : components_) {
        if (comp.empty()) {
            throw std::invalid_argument("ribbon with an empty component");
        }
        for (std::size_t i = 0; i + 1 < comp.size(); ++i) {
            if (step_between(comp[i], comp[i + 1]) == 0) {
                throw std::invalid_argument("component cells are not a monotone strip");
            }
        }
    }
}

RibbonShape RibbonShape::from_cells(const std::vector<Cell>& path_ordered) {
    std::vector<std::vector<Cell>> comps;
    for (const Cell& c : path_ordered) {
        if (comps.empty() || step_between(comps.back().back(), c) == 0) {
            comps.push_back({c});
        } else {
            comps.back().push_back(c);
        }
    }
    return RibbonShape(std::move(comps));
}

long RibbonShape::cell_count() const {
    long total = 0;
    for (const auto& comp : components_) {
        total += static_cast<long>(comp.size());
    }
    return total;
}

std::vector<Cell> RibbonShape::cells() const {
    std::vector<Cell> out;
    out.reserve(cell_count());
    for (const auto& comp : components_) {
        out.insert(out.end(), comp.begin(), comp.end());
    }
    return out;
}

std::string RibbonShape::signature() const {
    std::vector<std::string> words;
    words.reserve(components_.size());
    for (const auto& comp : components_) {
        if (comp.size() == 1) {
            words.emplace_back("*");
            continue;
        }
        std::string w;
        for (std::size_t i = 0; i + 1 < comp.size(); ++i) {
            w += step_between(comp[i], comp[i + 1]);
        }
        words.push_back(std::move(w));
    }
    std::sort(words.begin(), words.end());
    std::string out;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i > 0) out += "|";
        out += words[i];
    }
    return out;
}

FencePoset::FencePoset(const RibbonShape& ribbon) {
    int comp = 0;
    for (const auto& cells : ribbon.components()) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            cells_.push_back(cells[i]);
            comp_id_.push_back(comp);
            step_to_next_.push_back(i + 1 < cells.size() ? step_between(cells[i], cells[i + 1])
                                                         : 0);
        }
        ++comp;
    }
}

int FencePoset::index_of(Cell c) const {
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (cells_[i] == c) return static_cast<int>(i);
    }
    return -1;
}

bool FencePoset::contains(Cell c) const { return index_of(c) >= 0; }

bool FencePoset::leq(Cell a, Cell b) const {
    const int ia = index_of(a), ib = index_of(b);
    if (ia < 0 || ib < 0) {
        throw std::invalid_argument("cell is not an element of the poset");
    }
    if (comp_id_[ia] != comp_id_[ib]) return false;
    if (ia == ib) return true;
    // Along the fence path, a <= b iff the steps from a forward to b are
    // all N, or the steps from b forward to a are all E.
    if (ia < ib) {
        for (int i = ia; i < ib; ++i) {
            if (step_to_next_[i] != 'N') return false;
        }
        return true;
    }
    for (int i = ib; i < ia; ++i) {
        if (step_to_next_[i] != 'E') return false;
    }
    return true;
}

std::vector<Cell> FencePoset::ideal_generated_by(const std::vector<Cell>& gens) const {
    std::vector<char> in(cells_.size(), 0);
    std::vector<int> stack;
    for (const Cell& g : gens) {
        const int i = index_of(g);
        if (i < 0) {
            throw std::invalid_argument("generator outside the poset");
        }
        if (!in[i]) {
            in[i] = 1;
            stack.push_back(i);
        }
    }
    while (!stack.empty()) {
        const int i = stack.back();
        stack.pop_back();
        // Hasse neighbors below i: the next cell after an E step, the
        // previous cell before an N step.
        if (step_to_next_[i] == 'E' && !in[i + 1]) {
            in[i + 1] = 1;
            stack.push_back(i + 1);
        }
        if (i > 0 && comp_id_[i - 1] == comp_id_[i] && step_to_next_[i - 1] == 'N' && !in[i - 1]) {
            in[i - 1] = 1;
            stack.push_back(i - 1);
        }
    }
    std::vector<Cell> out;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (in[i]) out.push_back(cells_[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool FencePoset::is_filter(const std::vector<Cell>& f) const {
    std::vector<char> in(cells_.size(), 0);
    for (const Cell& c : f) {
        const int i = index_of(c);
        if (i < 0) return false;
        in[i] = 1;
    }
    for (std::size_t i = 0; i + 1 < cells_.size(); ++i) {
        if (comp_id_[i] != comp_id_[i + 1]) continue;
        if (step_to_next_[i] == 'N' && in[i] && !in[i + 1]) return false;  // cells_[i] <= next
        if (step_to_next_[i] == 'E' && in[i + 1] && !in[i]) return false;  // next <= cells_[i]
    }
    return true;
}

Integer pp_count(const RibbonShape& r, long t) {
    if (t < 0) {
        throw std::invalid_argument("negative bound for plane partition entries");
    }
    Integer total = 1;
    for (const auto& comp : r.components()) {
        // Transfer along the strip; state = value at the current cell.
        std::vector<Integer> f(t + 1, Integer(1));
        for (std::size_t i = 0; i + 1 < comp.size(); ++i) {
            std::vector<Integer> g(t + 1);
            if (step_between(comp[i], comp[i + 1]) == 'E') {
                // next value <= current value: suffix sums
                Integer acc = 0;
                for (long v = t; v >= 0; --v) {
                    acc += f[v];
                    g[v] = acc;
                }
            } else {
                // next value >= current value: prefix sums
                Integer acc = 0;
                for (long v = 0; v <= t; ++v) {
                    acc += f[v];
                    g[v] = acc;
                }
            }
            f = std::move(g);
        }
        Integer sum = 0;
        for (const Integer& x : f) sum += x;
        total *= sum;
    }
    return total;
}

Polynomial pp_polynomial(const RibbonShape& r) {
    static std::mutex cache_mutex;
    static std::unordered_map<std::string, Polynomial> cache;

    const std::string key = r.signature();
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        const auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const long deg = r.cell_count();
    std::vector<std::pair<Rational, Rational>> points;
    points.reserve(deg + 1);
    for (long t = 0; t <= deg; ++t) {
        points.emplace_back(Rational(t), Rational(pp_count(r, t)));
    }
    Polynomial p = interpolate(points);
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(key, std::move(p)).first->second;
}

Polynomial order_polynomial(const RibbonShape& r) {
    return pp_polynomial(r).shifted(Rational(-1));
}

std::vector<std::vector<Cell>> enumerate_filters(const FencePoset& p,
                                                 const std::vector<Cell>& allowed) {
    std::vector<char> allow;
    for (const Cell& c : p.elements()) {
        allow.push_back(std::find(allowed.begin(), allowed.end(), c) != allowed.end() ? 1 : 0);
    }
    const auto& cells = p.elements();
    std::vector<std::vector<Cell>> result;
    std::vector<char> chosen(cells.size(), 0);
    // Scan in path order; the constraint couples consecutive cells of a
    // component only: after an N step membership may not drop, after an E
    // step it may not rise. Excluding first keeps the order deterministic
    // with the empty filter leading.
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == cells.size()) {
            std::vector<Cell> f;
            for (std::size_t j = 0; j < cells.size(); ++j) {
                if (chosen[j]) f.push_back(cells[j]);
            }
            std::sort(f.begin(), f.end());
            result.push_back(std::move(f));
            return;
        }
        const bool linked = i > 0 && p.leq(cells[i - 1], cells[i]);
        const bool linked_rev = i > 0 && p.leq(cells[i], cells[i - 1]);
        for (int take = 0; take <= 1; ++take) {
            if (take && !allow[i]) continue;
            if (i > 0) {
                if (linked && chosen[i - 1] && !take) continue;      // prev <= cur
                if (linked_rev && take && !chosen[i - 1]) continue;  // cur <= prev
            }
            chosen[i] = static_cast<char>(take);
            self(self, i + 1);
        }
        chosen[i] = 0;
    };
    rec(rec, 0);
    return result;
}

RibbonShape remove_filter(const RibbonShape& r, const std::vector<Cell>& filter) {
    const FencePoset poset(r);
    if (!poset.is_filter(filter)) {
        throw std::invalid_argument("removed set is not an order filter of the ribbon");
    }
    std::vector<Cell> rest;
    for (const Cell& c : r.cells()) {
        if (std::find(filter.begin(), filter.end(), c) == filter.end()) {
            rest.push_back(c);
        }
    }
    return RibbonShape::from_cells(rest);
}

}  // namespace lpm
