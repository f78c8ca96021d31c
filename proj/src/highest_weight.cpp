#include "hess/highest_weight.hpp"

#include <algorithm>
#include <stdexcept>

namespace hess {

namespace {

void check_corner(Corner c, int n) {
    if (c.i < 1 || c.i > n || c.j < 1 || c.j > n) {
        throw std::invalid_argument("corner outside the n x n grid");
    }
    if (c.i == c.j) {
        throw std::invalid_argument("diagonal corner (i = j) has no corner permutation; "
                                    "such corners never occur for minimal functions");
    }
}

void check_minimal(const HessenbergFunction& h) {
    if (!is_minimal_nilpotent(h)) {
        throw std::invalid_argument("hessenberg function is not minimal in its equivalence "
                                    "class; apply minimize_nilpotent first");
    }
}

} // namespace

std::pair<int, int> conjugate_highest(const Permutation& s) {
    const Permutation inv = s.inverse();
    return {inv(1), inv(s.size())};
}

bool cell_in_variety(const Permutation& s, const HessenbergFunction& h) {
    if (s.size() != h.size()) throw std::invalid_argument("window sizes differ");
    const auto [k, l] = conjugate_highest(s);
    return k <= h(l);
}

Permutation corner_permutation(Corner c, int n) {
    check_corner(c, n);
    std::vector<int> images(static_cast<size_t>(n), 0);
    images[static_cast<size_t>(c.j) - 1] = n;
    images[static_cast<size_t>(c.i) - 1] = 1;
    int next = n - 1;
    for (int pos = 1; pos <= n; ++pos) {
        if (images[static_cast<size_t>(pos) - 1] == 0) images[static_cast<size_t>(pos) - 1] = next--;
    }
    return Permutation(std::move(images));
}

std::vector<int> corner_factorization(Corner c, int n) {
    check_corner(c, n);
    std::vector<int> word;
    const int first_block_end = c.j < c.i ? c.j - 1 : c.j - 2;
    for (int t = 1; t <= first_block_end; ++t) word.push_back(t);
    for (int t = n - 1; t >= c.i; --t) word.push_back(t);
    return word;
}

int corner_dimension(Corner c, int n) {
    check_corner(c, n);
    const int full = n * (n - 1) / 2;
    return c.j < c.i ? full - (c.j - 1 + n - c.i) : full - (c.j - 2 + n - c.i);
}

DecompositionReport decompose(const HessenbergFunction& h) {
    check_minimal(h);
    const int n = h.size();
    DecompositionReport report;
    report.n = n;
    for (Corner c : corners(h)) {
        Permutation w = corner_permutation(c, n);
        report.components.push_back(Component{c, w, corner_dimension(c, n)});
    }
    report.pure = true;
    for (const Component& comp : report.components) {
        if (comp.dimension != report.components.front().dimension) report.pure = false;
    }
    if (n <= 8) {
        for_each_permutation(n, [&](const Permutation& s) {
            if (cell_in_variety(s, h)) report.cell_set.push_back(s);
        });
    }
    return report;
}

bool is_pure_banded(const HessenbergFunction& h) {
    check_minimal(h);
    const std::vector<Corner> cs = corners(h);
    if (cs.size() <= 1) return true;
    const int offset = cs.front().j - cs.front().i;
    return std::all_of(cs.begin(), cs.end(), [&](Corner c) { return c.j - c.i == offset; });
}

std::vector<Permutation> brute_force_components(const HessenbergFunction& h) {
    const int n = h.size();
    if (n > 7) throw std::invalid_argument("brute-force component scan limited to n <= 7");
    std::vector<Permutation> members;
    for_each_permutation(n, [&](const Permutation& s) {
        if (cell_in_variety(s, h)) members.push_back(s);
    });
    // Longest first; an element is maximal iff no already kept element lies
    // above it (dominators of a non-maximal element are themselves dominated
    // by a maximal one).
    std::stable_sort(members.begin(), members.end(), [](const Permutation& a, const Permutation& b) {
        return a.length() > b.length();
    });
    std::vector<Permutation> maxima;
    for (const Permutation& s : members) {
        bool dominated = false;
        for (const Permutation& m : maxima) {
            if (!(s == m) && bruhat_leq(s, m)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) maxima.push_back(s);
    }
    std::sort(maxima.begin(), maxima.end());
    return maxima;
}

} // namespace hess
