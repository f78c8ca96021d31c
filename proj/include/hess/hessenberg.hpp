#pragma once

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hess {

// Nondecreasing map {1..n} -> {0..n}; the shape datum of a staircase space.
class HessenbergFunction {
public:
    explicit HessenbergFunction(std::vector<int> values);

    static HessenbergFunction parse(std::string_view text); // "2,3,4,4", optional "h=" prefix
    static HessenbergFunction full(int n);     // h(i) = n
    static HessenbergFunction diagonal(int n); // h(i) = i
    static HessenbergFunction zero(int n);     // h(i) = 0

    int size() const { return static_cast<int>(values_.size()); }

    // h(i); by convention h(0) = 0.
    int operator()(int i) const { return i == 0 ? 0 : values_[static_cast<size_t>(i) - 1]; }

    const std::vector<int>& values() const { return values_; }
    std::string to_string() const; // "2,3,4,4"

    bool operator==(const HessenbergFunction& rhs) const = default;
    bool operator<(const HessenbergFunction& rhs) const { return values_ < rhs.values_; }

private:
    std::vector<int> values_;
};

// The upper-right rectangle H_ij = {(k,l) : k <= i, l >= j}, named by its
// lower-left cell.
struct Corner {
    int i = 0; // row
    int j = 0; // column
    friend auto operator<=>(const Corner&, const Corner&) = default;
};

// Set of matrix cells closed under moving up and moving right (stable under
// the upper-triangular bracket); always the staircase of some function.
class HessenbergSpace {
public:
    HessenbergSpace(int n, std::set<std::pair<int, int>> cells);

    static HessenbergSpace from_function(const HessenbergFunction& h);
    static HessenbergSpace corner(Corner c, int n);

    int size() const { return n_; }
    const std::set<std::pair<int, int>>& cells() const { return cells_; }
    bool contains_cell(int r, int c) const { return cells_.count({r, c}) > 0; }

    bool subset_of(const HessenbergSpace& other) const;
    HessenbergSpace union_with(const HessenbergSpace& other) const;
    bool borel_stable() const;

    // Column heights; only valid as a function when the space is a staircase.
    std::vector<int> column_heights() const;
    HessenbergFunction to_function() const;

    bool operator==(const HessenbergSpace& rhs) const = default;

private:
    int n_;
    std::set<std::pair<int, int>> cells_;
};

bool is_borel_stable(const std::set<std::pair<int, int>>& cells, int n);

// Repeatedly lowers every h(i) = i to i - 1 where the result stays
// nondecreasing, until no move applies. The output is the unique minimal
// function defining the same variety for every nilpotent operator.
HessenbergFunction minimize_nilpotent(const HessenbergFunction& h);
bool is_minimal_nilpotent(const HessenbergFunction& h);

// Corners of the staircase: {(h(j), j) : h(j) > h(j-1)}, by column. The
// corner rectangles form the unique maximal decomposition of the space.
std::vector<Corner> corners(const HessenbergFunction& h);

// h_ij: 0 before column j, then constant i.
HessenbergFunction corner_function(Corner c, int n);

} // namespace hess
