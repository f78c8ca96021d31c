#pragma once

#include <utility>
#include <vector>

#include "hess/hessenberg.hpp"
#include "hess/permutation.hpp"

namespace hess {

// Conjugating the top-right matrix unit by s moves it to position
// (k,l) = (s^{-1}(1), s^{-1}(n)).
std::pair<int, int> conjugate_highest(const Permutation& s);

// Whether the permutation flag of s lies in the variety of (E_1n, h):
// s^{-1}(1) <= h(s^{-1}(n)).
bool cell_in_variety(const Permutation& s, const HessenbergFunction& h);

// The Bruhat-largest permutation whose conjugate of E_1n lands in H_ij:
// w(j) = n, w(i) = 1, remaining columns filled left to right with
// n-1, n-2, ..., 2. Rejects i = j.
Permutation corner_permutation(Corner c, int n);

// Adjacent-transposition letters t (meaning s_{t,t+1}) such that multiplying
// them into the longest element, left to right, yields corner_permutation
// with the length dropping by one at every step.
std::vector<int> corner_factorization(Corner c, int n);

// C(n,2) - (j-1+n-i) for j < i, C(n,2) - (j-2+n-i) for j > i; equals
// length(corner_permutation(c, n)).
int corner_dimension(Corner c, int n);

struct Component {
    Corner corner;
    Permutation w;
    int dimension = 0;
};

struct DecompositionReport {
    int n = 0;
    std::vector<Component> components; // ordered by corner column
    bool pure = true;                  // all component dimensions equal
    std::vector<Permutation> cell_set; // filled when n <= 8; lexicographic
};

// Component data of the variety of (E_1n, h). Requires h minimal; rejects
// non-minimal input instead of silently minimizing.
DecompositionReport decompose(const HessenbergFunction& h);

// All corners on a single diagonal j = i + k or j = i - k. Requires h
// minimal; agrees with the equal-dimension verdict of decompose.
bool is_pure_banded(const HessenbergFunction& h);

// Scans all of S_n for members and keeps the Bruhat-maximal ones. n <= 7.
std::vector<Permutation> brute_force_components(const HessenbergFunction& h);

} // namespace hess
