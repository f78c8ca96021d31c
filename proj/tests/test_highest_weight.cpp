#include "doctest.h"

#include <map>
#include <stdexcept>
#include <set>

#include "hess/highest_weight.hpp"
#include "test_oracles.hpp"

using namespace hess;

namespace {

std::set<Permutation> members_of(const HessenbergFunction& h) {
    std::set<Permutation> out;
    for_each_permutation(h.size(), [&](const Permutation& s) {
        if (cell_in_variety(s, h)) out.insert(s);
    });
    return out;
}

} // namespace

TEST_SUITE("hwdecomp") {

TEST_CASE("conjugate highest") {
    CHECK(conjugate_highest(Permutation::identity(4)) == std::pair<int, int>{1, 4});
    CHECK(conjugate_highest(Permutation({2, 1, 3})) == std::pair<int, int>{2, 3});
    CHECK(conjugate_highest(Permutation::longest_element(5)) == std::pair<int, int>{5, 1});
}

TEST_CASE("cell in variety") {
    const HessenbergFunction h({0, 1, 2});
    CHECK(cell_in_variety(Permutation({2, 1, 3}), h));
    CHECK_FALSE(cell_in_variety(Permutation({2, 3, 1}), h));
    for_each_permutation(3, [](const Permutation& s) {
        CHECK(cell_in_variety(s, HessenbergFunction::full(3)));
    });
    CHECK_THROWS_AS(cell_in_variety(Permutation::identity(4), h), std::invalid_argument);
}

TEST_CASE("corner permutation") {
    CHECK(corner_permutation({4, 1}, 5) == Permutation({5, 4, 3, 1, 2}));
    for (int n = 2; n <= 6; ++n) {
        CHECK(corner_permutation({n, 1}, n) == Permutation::longest_element(n));
    }
    CHECK(corner_permutation({1, 2}, 3) == Permutation({1, 3, 2})); // s_2
    CHECK(corner_permutation({2, 3}, 3) == Permutation({2, 1, 3})); // s_1
    CHECK_THROWS_AS(corner_permutation({2, 2}, 3), std::invalid_argument);
    CHECK_THROWS_AS(corner_permutation({0, 1}, 3), std::invalid_argument);
}

TEST_CASE("corner factorization") {
    CHECK(corner_factorization({5, 1}, 5).empty());
    CHECK(corner_factorization({4, 1}, 5) == std::vector<int>{4});
    // multiplying the word into w_0 must shorten stepwise and land on the
    // corner permutation
    for (int n = 2; n <= 6; ++n) {
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                Permutation p = Permutation::longest_element(n);
                for (int letter : corner_factorization({i, j}, n)) {
                    const Permutation next = p.right_transposition(letter, letter + 1);
                    CHECK(next.length() == p.length() - 1);
                    p = next;
                }
                CHECK(p == corner_permutation({i, j}, n));
            }
        }
    }
    CHECK_THROWS_AS(corner_factorization({3, 3}, 4), std::invalid_argument);
}

TEST_CASE("corner dimension") {
    CHECK(corner_dimension({4, 1}, 5) == 9);
    CHECK(corner_dimension({5, 4}, 5) == 7);
    for (int n = 2; n <= 6; ++n) CHECK(corner_dimension({n, 1}, n) == n * (n - 1) / 2);
    CHECK_THROWS_AS(corner_dimension({2, 2}, 4), std::invalid_argument);
}

TEST_CASE("decompose examples") {
    SUBCASE("two simple reflections at n = 3") {
        const DecompositionReport rep = decompose(HessenbergFunction({0, 1, 2}));
        REQUIRE(rep.components.size() == 2);
        CHECK(rep.components[0].corner == Corner{1, 2});
        CHECK(rep.components[0].w == Permutation({1, 3, 2}));
        CHECK(rep.components[0].dimension == 1);
        CHECK(rep.components[1].corner == Corner{2, 3});
        CHECK(rep.components[1].w == Permutation({2, 1, 3}));
        CHECK(rep.components[1].dimension == 1);
        CHECK(rep.pure);
        CHECK(rep.cell_set == std::vector<Permutation>{Permutation({1, 2, 3}),
                                                       Permutation({1, 3, 2}),
                                                       Permutation({2, 1, 3})});
    }
    SUBCASE("the non-pure union at n = 5") {
        const DecompositionReport rep = decompose(HessenbergFunction({4, 4, 4, 5, 5}));
        REQUIRE(rep.components.size() == 2);
        CHECK(rep.components[0].corner == Corner{4, 1});
        CHECK(rep.components[0].dimension == 9);
        CHECK(rep.components[1].corner == Corner{5, 4});
        CHECK(rep.components[1].dimension == 7);
        CHECK_FALSE(rep.pure);
    }
    SUBCASE("full function gives the whole flag variety") {
        const DecompositionReport rep = decompose(HessenbergFunction::full(4));
        REQUIRE(rep.components.size() == 1);
        CHECK(rep.components[0].corner == Corner{4, 1});
        CHECK(rep.components[0].w == Permutation::longest_element(4));
        CHECK(rep.components[0].dimension == 6);
        CHECK(rep.pure);
        CHECK(rep.cell_set.size() == 24);
    }
    SUBCASE("non-minimal input is rejected") {
        CHECK_THROWS_AS(decompose(HessenbergFunction({1, 2, 3})), std::invalid_argument);
    }
}

TEST_CASE("cell set is the union of the lower Bruhat intervals, n <= 6") {
    for (int n = 2; n <= 6; ++n) {
        testing::for_each_hessenberg_values(n, [&](const std::vector<int>& values) {
            const HessenbergFunction h(values);
            if (!is_minimal_nilpotent(h)) return;
            const DecompositionReport rep = decompose(h);
            const std::set<Permutation> cells(rep.cell_set.begin(), rep.cell_set.end());
            for_each_permutation(n, [&](const Permutation& s) {
                bool below = false;
                for (const Component& c : rep.components) below = below || bruhat_leq(s, c.w);
                CHECK(below == (cells.count(s) > 0));
            });
        });
    }
}

TEST_CASE("corner permutation is the unique Bruhat maximum of its region, n <= 6") {
    for (int n = 2; n <= 6; ++n) {
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                const Permutation top = corner_permutation({i, j}, n);
                const Permutation top_inv = top.inverse();
                CHECK(top_inv(1) <= i);
                CHECK(top_inv(n) >= j);
                for_each_permutation(n, [&](const Permutation& s) {
                    const Permutation inv = s.inverse();
                    if (inv(1) <= i && inv(n) >= j) CHECK(bruhat_leq(s, top));
                });
            }
        }
    }
}

TEST_CASE("containment and union laws for corner varieties, n <= 6") {
    for (int n = 2; n <= 6; ++n) {
        std::map<std::pair<int, int>, std::set<Permutation>> cell_sets;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (i != j) cell_sets[{i, j}] = members_of(corner_function({i, j}, n));
        for (const auto& [a, sa] : cell_sets) {
            for (const auto& [b, sb] : cell_sets) {
                // containment of varieties is containment of corners
                const bool contained = std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
                CHECK(contained == (a.first <= b.first && a.second >= b.second));
                // the union of the spaces cuts out the union of the members
                const HessenbergSpace joined =
                    HessenbergSpace::corner({a.first, a.second}, n)
                        .union_with(HessenbergSpace::corner({b.first, b.second}, n));
                std::set<Permutation> expect = sa;
                expect.insert(sb.begin(), sb.end());
                CHECK(members_of(joined.to_function()) == expect);
            }
        }
    }
}

TEST_CASE("banded purity agrees with equal dimensions, n <= 6") {
    for (int n = 2; n <= 6; ++n) {
        testing::for_each_hessenberg_values(n, [&](const std::vector<int>& values) {
            const HessenbergFunction h(values);
            if (!is_minimal_nilpotent(h)) return;
            CHECK(is_pure_banded(h) == decompose(h).pure);
        });
    }
    CHECK(is_pure_banded(HessenbergFunction({2, 3, 4, 4})));
    CHECK_FALSE(is_pure_banded(HessenbergFunction({4, 4, 4, 5, 5})));
    CHECK(is_pure_banded(corner_function({2, 3}, 4)));
    CHECK_THROWS_AS(is_pure_banded(HessenbergFunction({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("brute force components") {
    CHECK(brute_force_components(HessenbergFunction({0, 1, 2})) ==
          std::vector<Permutation>{Permutation({1, 3, 2}), Permutation({2, 1, 3})});
    for (int n = 2; n <= 5; ++n) {
        CHECK(brute_force_components(HessenbergFunction::full(n)) ==
              std::vector<Permutation>{Permutation::longest_element(n)});
    }
    const std::vector<Permutation> comps =
        brute_force_components(HessenbergFunction({4, 4, 4, 5, 5}));
    CHECK(std::set<Permutation>(comps.begin(), comps.end()) ==
          std::set<Permutation>{corner_permutation({4, 1}, 5), corner_permutation({5, 4}, 5)});
    CHECK_THROWS_AS(brute_force_components(HessenbergFunction::full(8)), std::invalid_argument);
}

} // TEST_SUITE
