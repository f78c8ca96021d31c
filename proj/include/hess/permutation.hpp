#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hess {

// Element of S_n in one-line notation, 1-indexed: (*this)(i) = w(i).
// As a matrix, column i holds the basis vector e_{w(i)}.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    static Permutation longest_element(int n); // [n, n-1, ..., 1]
    static Permutation parse(std::string_view text); // "2,3,1"

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<size_t>(i) - 1]; }

    Permutation inverse() const;

    // (u.compose(v))(i) = u(v(i)); the product of the permutation matrices.
    Permutation compose(const Permutation& v) const;

    // w * s_{jk}: swaps columns j and k. Requires 1 <= j < k <= n.
    Permutation right_transposition(int j, int k) const;

    // Inversion count; equals the minimal adjacent-transposition word length.
    int length() const;

    const std::vector<int>& images() const { return images_; }
    std::string to_string() const;

    bool operator==(const Permutation& rhs) const = default;
    bool operator<(const Permutation& rhs) const { return images_ < rhs.images_; }

private:
    std::vector<int> images_;
};

// v <= w in the Bruhat order, decided by the rank-count criterion:
// for all i,j: #{k <= i : v(k) >= j} <= #{k <= i : w(k) >= j}.
bool bruhat_leq(const Permutation& v, const Permutation& w);

// Matrix positions strictly above and strictly left of a nonzero entry of w:
// {(r,c) : r < w(c) and c < w^{-1}(r)}, sorted. There are exactly length(w)
// of them; they are the free coordinates of the chart over the cell of w.
std::vector<std::pair<int, int>> free_positions(const Permutation& w);

// A Schubert cell chart: base permutation plus its free coordinate set.
struct CellParam {
    Permutation base;
    std::vector<std::pair<int, int>> free;
};

CellParam cell_param(const Permutation& w);

// Lexicographic enumeration of S_n. Refuses n > 10.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);
std::vector<Permutation> all_permutations(int n);

} // namespace hess
