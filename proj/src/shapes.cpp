#include "lpm/shapes.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace lpm {

namespace {

std::vector<int> parse_parts(const std::string& text) {
    std::vector<int> parts;
    if (text.empty()) {
        throw std::invalid_argument("empty part list in shape literal");
    }
    if (text.find(',') != std::string::npos) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const auto comma = text.find(',', pos);
            const auto piece = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                           : comma - pos);
            if (piece.empty() || !std::all_of(piece.begin(), piece.end(),
                                              [](unsigned char c) { return std::isdigit(c); })) {
                throw std::invalid_argument("malformed shape literal: " + text);
            }
            try {
                parts.push_back(std::stoi(std::string(piece)));
            } catch (const std::out_of_range&) {
                throw std::invalid_argument("part out of range in shape literal: " + text);
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    } else {
        for (const char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                throw std::invalid_argument("malformed shape literal: " + text);
            }
            parts.push_back(c - '0');
        }
    }
    return parts;
}

bool weakly_decreasing(const std::vector<int>& v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] > v[i - 1]) return false;
    }
    return true;
}

bool all_at_most_nine(const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x <= 9; });
}

std::string parts_str(const std::vector<int>& v, bool run_form) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!run_form && i > 0) out += ",";
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace

SkewShape::SkewShape(std::vector<int> lambda, std::vector<int> mu)
    : lambda_(std::move(lambda)), mu_(std::move(mu)) {
    if (lambda_.empty()) {
        throw std::invalid_argument("shape with no rows");
    }
    if (mu_.size() > lambda_.size()) {
        throw std::invalid_argument("mu has more rows than lambda");
    }
    mu_.resize(lambda_.size(), 0);
    if (!weakly_decreasing(lambda_) || lambda_.back() < 1) {
        throw std::invalid_argument("lambda is not a partition of positive parts");
    }
    if (!weakly_decreasing(mu_) || mu_.back() < 0) {
        throw std::invalid_argument("mu is not a partition");
    }
    for (std::size_t i = 0; i < lambda_.size(); ++i) {
        if (mu_[i] >= lambda_[i]) {
            throw std::invalid_argument("empty row: mu_" + std::to_string(i + 1) +
                                        " >= lambda_" + std::to_string(i + 1));
        }
    }
}

SkewShape SkewShape::parse(const std::string& literal) {
    const auto slash = literal.find('/');
    if (literal.find('/', slash + 1) != std::string::npos) {
        throw std::invalid_argument("malformed shape literal: " + literal);
    }
    std::vector<int> lambda = parse_parts(slash == std::string::npos ? literal
                                                                     : literal.substr(0, slash));
    std::vector<int> mu;
    if (slash != std::string::npos) {
        mu = parse_parts(literal.substr(slash + 1));
    }
    return SkewShape(std::move(lambda), std::move(mu));
}

bool SkewShape::contains(int row, int col) const {
    return row >= 1 && row <= rows() && col > mu_[row - 1] && col <= lambda_[row - 1];
}

long SkewShape::cell_count() const {
    long total = 0;
    for (int i = 0; i < rows(); ++i) {
        total += lambda_[i] - mu_[i];
    }
    return total;
}

std::vector<Cell> SkewShape::cells() const {
    std::vector<Cell> out;
    out.reserve(cell_count());
    for (int i = 1; i <= rows(); ++i) {
        for (int j = row_begin(i); j <= row_end(i); ++j) {
            out.push_back({i, j});
        }
    }
    return out;
}

bool SkewShape::connected() const {
    for (int i = 0; i + 1 < rows(); ++i) {
        if (mu_[i] >= lambda_[i + 1]) return false;
    }
    return true;
}

SkewShape SkewShape::rotated180() const {
    const int width = lambda_[0];
    const int l = rows();
    std::vector<int> lam(l), mu(l);
    for (int i = 0; i < l; ++i) {
        lam[i] = width - mu_[l - 1 - i];
        mu[i] = width - lambda_[l - 1 - i];
    }
    return SkewShape(std::move(lam), std::move(mu));
}

std::string SkewShape::str() const {
    std::vector<int> mu_trimmed = mu_;
    while (!mu_trimmed.empty() && mu_trimmed.back() == 0) {
        mu_trimmed.pop_back();
    }
    const bool run = all_at_most_nine(lambda_) && all_at_most_nine(mu_trimmed);
    std::string out = parts_str(lambda_, run);
    if (!mu_trimmed.empty()) {
        out += "/" + parts_str(mu_trimmed, run);
    }
    return out;
}

LatticePathPair::LatticePathPair(int n, std::vector<int> lower, std::vector<int> upper)
    : n_(n), lower_(std::move(lower)), upper_(std::move(upper)) {
    if (n_ < 1) {
        throw std::invalid_argument("path pair on empty ground set");
    }
    auto check = [this](const std::vector<int>& v, const char* name) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] < 1 || v[i] > n_ || (i > 0 && v[i] <= v[i - 1])) {
                throw std::invalid_argument(std::string(name) +
                                            " is not a sorted subset of 1..n");
            }
        }
    };
    check(lower_, "lower");
    check(upper_, "upper");
    if (!lies_below(lower_, upper_, n_)) {
        throw std::invalid_argument("lower path does not lie below upper path");
    }
}

bool lies_below(const std::vector<int>& lower, const std::vector<int>& upper, int n) {
    if (lower.size() != upper.size()) {
        throw std::invalid_argument("paths with different numbers of north steps");
    }
    if ((!lower.empty() && lower.back() > n) || (!upper.empty() && upper.back() > n)) {
        throw std::invalid_argument("step position beyond ground set");
    }
    std::size_t li = 0, ui = 0;
    for (int m = 1; m <= n; ++m) {
        if (li < lower.size() && lower[li] == m) ++li;
        if (ui < upper.size() && upper[ui] == m) ++ui;
        if (li > ui) return false;
    }
    return true;
}

SkewShape paths_to_shape(const LatticePathPair& p) {
    const int k = p.rank();
    if (k == 0) {
        throw std::invalid_argument("region between the paths is empty");
    }
    // Row i of the region spans columns mu_i < j <= lambda_i where the
    // bounds are the east-step counts before the (k-i+1)-th north step of
    // the upper and lower paths respectively.
    std::vector<int> lambda(k), mu(k);
    for (int i = 1; i <= k; ++i) {
        const int y = k - i + 1;
        lambda[i - 1] = p.lower()[y - 1] - y;
        mu[i - 1] = p.upper()[y - 1] - y;
    }
    // Drop empty rows of the bounding box.
    std::vector<int> lam2, mu2;
    for (int i = 0; i < k; ++i) {
        if (lambda[i] > mu[i]) {
            lam2.push_back(lambda[i]);
            mu2.push_back(mu[i]);
        }
    }
    if (lam2.empty()) {
        throw std::invalid_argument("region between the paths is empty");
    }
    // Drop empty columns. Rows are intervals, so an empty column lies
    // entirely left or right of every row; deleting it shifts the right
    // block one step left.
    const int width = lam2[0];
    std::vector<bool> used(width + 1, false);
    for (std::size_t i = 0; i < lam2.size(); ++i) {
        for (int j = mu2[i] + 1; j <= lam2[i]; ++j) {
            used[j] = true;
        }
    }
    std::vector<int> shift(width + 1, 0);
    int dropped = 0;
    for (int j = 1; j <= width; ++j) {
        if (!used[j]) ++dropped;
        shift[j] = dropped;
    }
    for (std::size_t i = 0; i < lam2.size(); ++i) {
        lam2[i] -= shift[lam2[i]];
        mu2[i] -= shift[mu2[i]];
    }
    return SkewShape(std::move(lam2), std::move(mu2));
}

LatticePathPair shape_to_paths(const SkewShape& s) {
    const int k = s.rank();
    const int n = s.ground_set_size();
    std::vector<int> lower(k), upper(k);
    for (int y = 1; y <= k; ++y) {
        lower[y - 1] = s.lambda()[k - y] + y;
        upper[y - 1] = s.mu()[k - y] + y;
    }
    return LatticePathPair(n, std::move(lower), std::move(upper));
}

std::vector<Basis> enumerate_bases(const LatticePathPair& p) {
    const int n = p.n();
    const int k = p.rank();
    std::vector<int> lcnt(n + 1, 0), ucnt(n + 1, 0);
    for (int m = 1; m <= n; ++m) {
        lcnt[m] = lcnt[m - 1] + (std::binary_search(p.lower().begin(), p.lower().end(), m) ? 1 : 0);
        ucnt[m] = ucnt[m - 1] + (std::binary_search(p.upper().begin(), p.upper().end(), m) ? 1 : 0);
    }
    std::vector<Basis> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int m, int count) -> void {
        if (m > n) {
            if (count == k) out.push_back(Basis{current});
            return;
        }
        // Prune: stay within the prefix bounds and keep k reachable.
        for (int take = 1; take >= 0; --take) {
            const int c = count + take;
            if (c > ucnt[m] || c < lcnt[m]) continue;
            if (c > k || c + (n - m) < k) continue;
            if (take) current.push_back(m);
            self(self, m + 1, c);
            if (take) current.pop_back();
        }
    };
    rec(rec, 1, 0);
    return out;
}

std::vector<SkewShape> enumerate_connected_shapes(int max_rows, int max_cols) {
    if (max_rows < 1 || max_cols < 1) {
        throw std::invalid_argument("box bounds must be at least 1");
    }
    std::vector<SkewShape> out;
    std::vector<int> lambda, mu;
    // mu is chosen bottom-up so that mu_l = 0 (canonical position) and
    // mu_i < min(lambda_i, lambda_{i+1}) keeps rows non-empty and connected.
    auto rec_mu = [&](auto&& self, int i) -> void {
        const int l = static_cast<int>(lambda.size());
        if (i < 0) {
            std::vector<int> m(mu.rbegin(), mu.rend());
            out.emplace_back(lambda, std::move(m));
            return;
        }
        int lo = mu.empty() ? 0 : mu.back();
        int hi = lambda[i] - 1;
        if (i + 1 < l) hi = std::min(hi, lambda[i + 1] - 1);
        if (i == l - 1) hi = 0;
        for (int v = lo; v <= hi; ++v) {
            mu.push_back(v);
            self(self, i - 1);
            mu.pop_back();
        }
    };
    auto rec_lambda = [&](auto&& self, int rows_left, int max_part) -> void {
        if (!lambda.empty()) {
            mu.clear();
            rec_mu(rec_mu, static_cast<int>(lambda.size()) - 1);
        }
        if (rows_left == 0) return;
        for (int part = max_part; part >= 1; --part) {
            lambda.push_back(part);
            self(self, rows_left - 1, part);
            lambda.pop_back();
        }
    };
    rec_lambda(rec_lambda, max_rows, max_cols);
    // Deterministic order: by row count, then lexicographically.
    std::stable_sort(out.begin(), out.end(), [](const SkewShape& a, const SkewShape& b) {
        if (a.rows() != b.rows()) return a.rows() < b.rows();
        if (a.lambda() != b.lambda()) return a.lambda() < b.lambda();
        return a.mu() < b.mu();
    });
    return out;
}

}  // namespace lpm
