#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hess/hessenberg.hpp"
#include "hess/permutation.hpp"

namespace hess {

// n x n matrix over the prime field F_q, q <= 13, entries reduced to [0, q).
class FqMatrix {
public:
    FqMatrix(int n, int q); // zero matrix

    static FqMatrix from_rows(const std::vector<std::vector<int>>& rows, int q);
    static FqMatrix identity(int n, int q);
    static FqMatrix unit(int n, int q, int i, int j); // E_ij
    static FqMatrix e1n(int n, int q);
    static FqMatrix regular_nilpotent(int n, int q);  // ones on the superdiagonal
    static FqMatrix semisimple_example(int n, int q); // diag(1,...,1,0)
    static FqMatrix jordan_nilpotent(const std::vector<int>& blocks, int q);

    int n() const { return n_; }
    int q() const { return q_; }
    int at(int r, int c) const { return a_[static_cast<size_t>(r - 1) * n_ + (c - 1)]; }
    void set(int r, int c, int value);

    FqMatrix multiply(const FqMatrix& rhs) const;
    bool is_zero() const;
    bool is_nilpotent() const; // X^n = 0
    FqMatrix inverse() const;  // throws on singular input
    FqMatrix conjugate_by(const FqMatrix& g) const; // g^{-1} X g

    bool operator==(const FqMatrix& rhs) const = default;

private:
    int n_;
    int q_;
    std::vector<int> a_; // row-major
};

// A full flag stored in its Schubert chart: cell label plus the values of
// the free coordinates, listed in free_positions(cell) order.
struct FqFlag {
    Permutation cell;
    std::vector<int> assignment;
};

// [i]_q = 1 + q + ... + q^{i-1}.
std::uint64_t q_integer(int i, int q);
// Points of projective m-space: 1 + q + ... + q^m.
std::uint64_t projective_count(int m, int q);
// Number of full flags over F_q, the product of [i]_q for i = 1..n.
// Throws budget_error past 10^6.
std::uint64_t flag_count(int n, int q);

// Streams every flag exactly once: cells in (length, one-line) order, free
// entries counted lexicographically. Budget-guarded like flag_count.
void for_each_flag(int n, int q, const std::function<void(const FqFlag&)>& fn);

// The invertible matrix whose column spans realize the flag: the cell's
// permutation matrix with the assigned free entries filled in.
FqMatrix realize(const FqFlag& flag, int q);

// X V_i inside V_{h(i)} for every i, decided by reduction against echelon
// bases of the V_i; V_0 = 0.
bool hessenberg_member(const FqFlag& flag, const FqMatrix& X, const HessenbergFunction& h);

std::uint64_t point_count(const FqMatrix& X, const HessenbergFunction& h);

// For X = E_1n: membership must depend only on the cell label, and the
// point count must equal the sum of q^length over member cells.
bool verify_cell_union(const HessenbergFunction& h, int q);

// Whether some Schubert cell contains both a member and a non-member flag,
// witnessing that the variety is not a union of cells.
bool verify_not_cell_union(const FqMatrix& X, const HessenbergFunction& h);

struct SemisimpleCheck {
    std::uint64_t predicted = 0;
    std::uint64_t actual = 0;
    std::uint64_t flags_with_en = 0;          // e_n in V_{n-1}
    std::uint64_t flags_fixed_hyperplane = 0; // V_{n-1} = <e_1,...,e_{n-1}>
    bool match() const { return predicted == actual; }
};

// X = diag(1,..,1,0) with h = (n-1,...,n-1,n). The members split into the
// two disjoint classes above; predicted = F(n-1,q) * (1 + P(n-2,q)).
SemisimpleCheck verify_semisimple_example(int n, int q);

// Member flag sets of (X,h) and (X,h2) identical flag-by-flag. X must be
// nilpotent; anything else violates the equivalence hypothesis.
bool verify_equivalence(const FqMatrix& X, const HessenbergFunction& h,
                        const HessenbergFunction& h2);

} // namespace hess
