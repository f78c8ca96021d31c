#include "hess/hessenberg.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace hess {

HessenbergFunction::HessenbergFunction(std::vector<int> values) : values_(std::move(values)) {
    const int n = size();
    if (n < 1) throw std::invalid_argument("hessenberg function must be nonempty");
    int prev = 0;
    for (int i = 1; i <= n; ++i) {
        const int v = values_[static_cast<size_t>(i) - 1];
        if (v < 0 || v > n) {
            throw std::invalid_argument("hessenberg values must lie in 0.." + std::to_string(n));
        }
        if (i > 1 && v < prev) {
            throw std::invalid_argument("hessenberg function must be nondecreasing");
        }
        prev = v;
    }
}

HessenbergFunction HessenbergFunction::parse(std::string_view text) {
    if (text.rfind("h=", 0) == 0) text.remove_prefix(2);
    std::vector<int> vals;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        int value = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || p != tok.data() + tok.size()) {
            throw std::invalid_argument("cannot parse hessenberg entry '" + std::string(tok) + "'");
        }
        vals.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return HessenbergFunction(std::move(vals));
}

HessenbergFunction HessenbergFunction::full(int n) {
    return HessenbergFunction(std::vector<int>(static_cast<size_t>(n), n));
}

HessenbergFunction HessenbergFunction::diagonal(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) v[static_cast<size_t>(i) - 1] = i;
    return HessenbergFunction(std::move(v));
}

HessenbergFunction HessenbergFunction::zero(int n) {
    return HessenbergFunction(std::vector<int>(static_cast<size_t>(n), 0));
}

std::string HessenbergFunction::to_string() const {
    std::string out;
    for (int i = 1; i <= size(); ++i) {
        if (i > 1) out += ',';
        out += std::to_string((*this)(i));
    }
    return out;
}

HessenbergSpace::HessenbergSpace(int n, std::set<std::pair<int, int>> cells)
    : n_(n), cells_(std::move(cells)) {
    if (n < 1) throw std::invalid_argument("window size must be positive");
    for (const auto& [r, c] : cells_) {
        if (r < 1 || r > n || c < 1 || c > n) {
            throw std::invalid_argument("cell outside the n x n grid");
        }
    }
}

HessenbergSpace HessenbergSpace::from_function(const HessenbergFunction& h) {
    const int n = h.size();
    std::set<std::pair<int, int>> cells;
    for (int c = 1; c <= n; ++c)
        for (int r = 1; r <= h(c); ++r) cells.emplace(r, c);
    return HessenbergSpace(n, std::move(cells));
}

HessenbergSpace HessenbergSpace::corner(Corner c, int n) {
    if (c.i < 1 || c.i > n || c.j < 1 || c.j > n) {
        throw std::invalid_argument("corner outside the n x n grid");
    }
    std::set<std::pair<int, int>> cells;
    for (int r = 1; r <= c.i; ++r)
        for (int col = c.j; col <= n; ++col) cells.emplace(r, col);
    return HessenbergSpace(n, std::move(cells));
}

bool HessenbergSpace::subset_of(const HessenbergSpace& other) const {
    if (n_ != other.n_) throw std::invalid_argument("containment needs equal window sizes");
    return std::includes(other.cells_.begin(), other.cells_.end(), cells_.begin(), cells_.end());
}

HessenbergSpace HessenbergSpace::union_with(const HessenbergSpace& other) const {
    if (n_ != other.n_) throw std::invalid_argument("union needs equal window sizes");
    std::set<std::pair<int, int>> cells = cells_;
    cells.insert(other.cells_.begin(), other.cells_.end());
    return HessenbergSpace(n_, std::move(cells));
}

bool HessenbergSpace::borel_stable() const { return is_borel_stable(cells_, n_); }

std::vector<int> HessenbergSpace::column_heights() const {
    std::vector<int> heights(static_cast<size_t>(n_), 0);
    for (const auto& [r, c] : cells_) {
        heights[static_cast<size_t>(c) - 1] = std::max(heights[static_cast<size_t>(c) - 1], r);
    }
    return heights;
}

HessenbergFunction HessenbergSpace::to_function() const {
    HessenbergFunction h(column_heights());
    if (from_function(h) != *this) {
        throw std::invalid_argument("cell set is not a staircase space");
    }
    return h;
}

bool is_borel_stable(const std::set<std::pair<int, int>>& cells, int n) {
    for (const auto& [r, c] : cells) {
        if (r < 1 || r > n || c < 1 || c > n) {
            throw std::invalid_argument("cell outside the n x n grid");
        }
        if (r > 1 && !cells.count({r - 1, c})) return false;
        if (c < n && !cells.count({r, c + 1})) return false;
    }
    return true;
}

HessenbergFunction minimize_nilpotent(const HessenbergFunction& h) {
    std::vector<int> v = h.values();
    const int n = h.size();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = n; i >= 1; --i) {
            if (v[static_cast<size_t>(i) - 1] != i) continue;
            if (i > 1 && v[static_cast<size_t>(i) - 2] > i - 1) continue;
            v[static_cast<size_t>(i) - 1] = i - 1;
            changed = true;
        }
    }
    return HessenbergFunction(std::move(v));
}

bool is_minimal_nilpotent(const HessenbergFunction& h) {
    const int n = h.size();
    for (int i = 1; i <= n; ++i) {
        if (h(i) == i && (i == 1 || h(i - 1) <= i - 1)) return false;
    }
    return true;
}

std::vector<Corner> corners(const HessenbergFunction& h) {
    std::vector<Corner> out;
    for (int j = 1; j <= h.size(); ++j) {
        if (h(j) > h(j - 1)) out.push_back(Corner{h(j), j});
    }
    return out;
}

HessenbergFunction corner_function(Corner c, int n) {
    if (c.i < 1 || c.i > n || c.j < 1 || c.j > n) {
        throw std::invalid_argument("corner outside the n x n grid");
    }
    std::vector<int> v(static_cast<size_t>(n), 0);
    for (int k = c.j; k <= n; ++k) v[static_cast<size_t>(k) - 1] = c.i;
    return HessenbergFunction(std::move(v));
}

} // namespace hess
