#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hess/permutation.hpp"

namespace hess {

// Crystallographic root system with roots stored as integer coordinate
// vectors over the simple roots. Supported: A1-A4, B2-B4, C2-C4, D4, G2, F4.
// Root indices list the positive roots first (by height, then coordinates),
// followed by their negatives in the same order.
class RootSystem {
public:
    static RootSystem build(std::string_view label); // e.g. "B3"
    static RootSystem build(char type, int rank);

    const std::string& label() const { return label_; }
    char type() const { return type_; }
    int rank() const { return rank_; }
    int num_positive() const { return n_positive_; }
    int num_roots() const { return 2 * n_positive_; }

    const std::vector<int>& coords(int root) const { return roots_[static_cast<size_t>(root)]; }
    int index_of(const std::vector<int>& coords) const; // -1 when not a root
    bool is_positive(int root) const { return root < n_positive_; }
    int negate(int root) const;
    int simple(int i) const { return simple_[static_cast<size_t>(i) - 1]; } // alpha_i, 1-based
    int highest() const { return highest_; } // theta

    // 2(a_i, a_j) / (a_j, a_j) for simple roots, 1-based indices.
    int cartan(int i, int j) const;
    long long bilinear(int a, int b) const;
    long long norm2(int root) const { return bilinear(root, root); }
    bool is_long(int root) const { return norm2(root) == norm2(highest_); }

    // 2(a, b) / (b, b); an integer for any pair of roots.
    int coroot_pairing(int a, int b) const;
    // Reflection of root a in root t.
    int reflect(int a, int t) const;

    // a - b is a nonnegative integer combination of simple roots.
    bool succeq(int a, int b) const;

    std::vector<int> support(int root) const;              // 1-based, sorted
    std::vector<int> neighborhood_support(int root) const; // support + Dynkin neighbors

private:
    RootSystem() = default;

    std::string label_;
    char type_ = 0;
    int rank_ = 0;
    std::vector<std::vector<int>> cartan_;
    std::vector<long long> d_; // (a_i, a_i)/2, short roots normalized to 1
    std::vector<std::vector<int>> roots_;
    int n_positive_ = 0;
    int highest_ = -1;
    std::map<std::vector<int>, int> index_;
    std::vector<int> simple_;
};

// Root span plus toral directions, the data of a bracket-stable subspace.
struct GeneralHessenbergSpace {
    std::set<int> roots; // root indices
    std::set<int> toral; // 1-based simple indices
    bool operator==(const GeneralHessenbergSpace&) const = default;
};

// Minimal bracket-closed space containing the root vector of alpha. For
// positive alpha: the positive roots above alpha in the root order and no
// toral part. For negative alpha: the negatives above alpha, the positives
// whose support meets the Dynkin neighborhood of supp(alpha), and the toral
// directions of supp(alpha).
GeneralHessenbergSpace h_alpha(const RootSystem& rs, int alpha);

// Fixpoint of the closure rules: a root plus a positive root stays in when
// the sum is a root; a negative simple root brings in its toral direction;
// a toral direction brings in every positive root pairing nontrivially
// with it.
GeneralHessenbergSpace bracket_closure(const RootSystem& rs, const std::set<int>& seed);

class WeylGroup {
public:
    // Breadth-first generation by simple reflections; length is the
    // generation depth. The Bruhat order is the transitive closure of the
    // covers u -> u*t, t a reflection, with length rising by one. Group
    // size is capped at 1152.
    static WeylGroup enumerate(const RootSystem& rs);

    int size() const { return static_cast<int>(action_.size()); }
    int identity() const { return 0; }
    int length(int e) const { return length_[static_cast<size_t>(e)]; }
    int max_length() const;
    const std::vector<int>& word(int e) const { return word_[static_cast<size_t>(e)]; }
    int apply(int e, int root) const { return action_[static_cast<size_t>(e)][static_cast<size_t>(root)]; }
    int inverse(int e) const { return inverse_[static_cast<size_t>(e)]; }
    int multiply(int a, int b) const; // (ab)(r) = a(b(r))
    bool bruhat_leq(int u, int w) const;

    // {w : w(alpha) = theta}, equivalently w^{-1} theta = alpha.
    std::vector<int> coset_elements(const RootSystem& rs, int alpha) const;

private:
    WeylGroup() = default;

    int lookup(const std::vector<std::uint16_t>& action) const;

    std::vector<std::vector<std::uint16_t>> action_;
    std::vector<int> length_;
    std::vector<int> inverse_;
    std::vector<std::vector<int>> word_;
    std::map<std::vector<std::uint16_t>, int> index_;
    size_t down_words_ = 0;
    std::vector<std::uint64_t> down_; // down_[w] = bitset of {u : u <= w}
};

// Elements of the list with no other list element strictly above them.
std::vector<int> bruhat_maximal(const WeylGroup& w, const std::vector<int>& elements);

// The unique Bruhat-maximum among {w : w^{-1} theta = alpha}. Rejects alpha
// whose length differs from theta's (the orbit misses theta).
int max_coset_rep(const RootSystem& rs, const WeylGroup& w, int alpha);

// {u : u^{-1} theta in h_alpha(alpha)} equals {u : u <= max_coset_rep(alpha)}.
bool verify_highest_weight_theorem(const RootSystem& rs, const WeylGroup& w, int alpha);

// Reads the word of e as a product of adjacent transpositions in S_n; the
// standard identification for type A_{n-1} systems.
Permutation weyl_to_permutation(const WeylGroup& w, int e, int n);

} // namespace hess
