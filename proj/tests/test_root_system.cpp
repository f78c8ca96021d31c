#include "doctest.h"

#include <map>
#include <set>

#include "hess/errors.hpp"
#include "hess/highest_weight.hpp"
#include "hess/root_system.hpp"

using namespace hess;

namespace {

// Lower Bruhat interval from scratch: products of subwords of word(w).
std::set<int> subword_interval(const WeylGroup& w, int e) {
    const std::vector<int>& word = w.word(e);
    const size_t k = word.size();
    std::set<int> out;
    for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
        int p = w.identity();
        for (size_t t = 0; t < k; ++t) {
            if (mask & (size_t{1} << t)) {
                // locate the simple reflection s_{word[t]} as a group element
                // (its word is the single letter)
                int s = -1;
                for (int cand = 0; cand < w.size(); ++cand) {
                    if (w.length(cand) == 1 && w.word(cand) == std::vector<int>{word[t]}) {
                        s = cand;
                        break;
                    }
                }
                p = w.multiply(p, s);
            }
        }
        out.insert(p);
    }
    return out;
}

} // namespace

TEST_SUITE("rootsys") {

TEST_CASE("building the supported systems") {
    const std::map<std::string, int> positive_counts{
        {"A1", 1}, {"A2", 3},  {"A3", 6},  {"A4", 10}, {"B2", 4}, {"B3", 9}, {"B4", 16},
        {"C2", 4}, {"C3", 9},  {"C4", 16}, {"D4", 12}, {"G2", 6}, {"F4", 24}};
    const std::map<std::string, std::vector<int>> highest_coords{
        {"A1", {1}},          {"A2", {1, 1}},       {"A3", {1, 1, 1}},
        {"A4", {1, 1, 1, 1}}, {"B2", {1, 2}},       {"B3", {1, 2, 2}},
        {"B4", {1, 2, 2, 2}}, {"C2", {2, 1}},       {"C3", {2, 2, 1}},
        {"C4", {2, 2, 2, 1}}, {"D4", {1, 2, 1, 1}}, {"G2", {3, 2}},
        {"F4", {2, 3, 4, 2}}};
    for (const auto& [label, count] : positive_counts) {
        const RootSystem rs = RootSystem::build(label);
        CHECK(rs.num_positive() == count);
        CHECK(rs.coords(rs.highest()) == highest_coords.at(label));
        CHECK(rs.is_long(rs.highest()));
        // theta dominates every root
        for (int r = 0; r < rs.num_roots(); ++r) CHECK(rs.succeq(rs.highest(), r));
        // every root has connected support and definite sign
        for (int r = 0; r < rs.num_roots(); ++r) {
            CHECK(rs.coords(rs.negate(r)) != rs.coords(r));
            CHECK(rs.index_of(rs.coords(r)) == r);
        }
    }
    CHECK_THROWS_AS(RootSystem::build("E6"), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::build("D3"), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::build("A5"), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::build("B1"), std::invalid_argument);
}

TEST_CASE("root order") {
    const RootSystem a2 = RootSystem::build("A2");
    const int theta = a2.highest();
    const int a1 = a2.simple(1), s2 = a2.simple(2);
    CHECK(a2.succeq(theta, a1));
    CHECK_FALSE(a2.succeq(a1, s2));
    CHECK(a2.succeq(a1, a1));
    const RootSystem g2 = RootSystem::build("G2");
    CHECK(g2.norm2(g2.simple(1)) < g2.norm2(g2.simple(2))); // alpha_1 short
    CHECK_FALSE(g2.is_long(g2.simple(1)));
    CHECK(g2.is_long(g2.simple(2)));
}

TEST_CASE("support and neighborhood") {
    const RootSystem a3 = RootSystem::build("A3");
    CHECK(a3.support(a3.simple(1)) == std::vector<int>{1});
    CHECK(a3.neighborhood_support(a3.simple(1)) == std::vector<int>{1, 2});
    const RootSystem a2 = RootSystem::build("A2");
    CHECK(a2.neighborhood_support(a2.highest()) == std::vector<int>{1, 2});
    for (const char* label : {"A4", "B3", "C4", "D4", "G2", "F4"}) {
        const RootSystem rs = RootSystem::build(label);
        CHECK(static_cast<int>(rs.support(rs.highest()).size()) == rs.rank());
    }
}

TEST_CASE("h_alpha shapes") {
    const RootSystem a2 = RootSystem::build("A2");
    const int theta = a2.highest();

    const GeneralHessenbergSpace top = h_alpha(a2, theta);
    CHECK(top.roots == std::set<int>{theta});
    CHECK(top.toral.empty());

    const GeneralHessenbergSpace whole = h_alpha(a2, a2.negate(theta));
    CHECK(static_cast<int>(whole.roots.size()) == a2.num_roots());
    CHECK(whole.toral == std::set<int>{1, 2});

    const GeneralHessenbergSpace above_simple = h_alpha(a2, a2.simple(1));
    CHECK(above_simple.roots == std::set<int>{a2.simple(1), theta});
    CHECK(above_simple.toral.empty());
}

TEST_CASE("bracket closure examples") {
    const RootSystem a2 = RootSystem::build("A2");
    const int theta = a2.highest();
    CHECK(bracket_closure(a2, {theta}) == GeneralHessenbergSpace{{theta}, {}});
    CHECK(bracket_closure(a2, {a2.simple(1)}) ==
          GeneralHessenbergSpace{{a2.simple(1), theta}, {}});
    const GeneralHessenbergSpace from_neg = bracket_closure(a2, {a2.negate(a2.simple(1))});
    CHECK(from_neg.toral == std::set<int>{1});
    CHECK(from_neg.roots ==
          std::set<int>{a2.negate(a2.simple(1)), a2.simple(1), a2.simple(2), theta});
}

TEST_CASE("h_alpha equals bracket closure, rank <= 3") {
    for (const char* label : {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "G2"}) {
        const RootSystem rs = RootSystem::build(label);
        for (int alpha = 0; alpha < rs.num_roots(); ++alpha) {
            CHECK(h_alpha(rs, alpha) == bracket_closure(rs, {alpha}));
        }
    }
}

TEST_CASE("h_alpha is minimal: deleting any root breaks closure, rank <= 3") {
    for (const char* label : {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "G2"}) {
        const RootSystem rs = RootSystem::build(label);
        for (int alpha = 0; alpha < rs.num_roots(); ++alpha) {
            const GeneralHessenbergSpace space = h_alpha(rs, alpha);
            for (int removed : space.roots) {
                if (removed == alpha) continue;
                std::set<int> seed = space.roots;
                seed.erase(removed);
                CHECK(bracket_closure(rs, seed).roots != seed);
            }
        }
    }
}

TEST_CASE("weyl group enumeration") {
    const std::map<std::string, std::pair<int, int>> sizes{
        {"A2", {6, 3}},   {"A3", {24, 6}},  {"A4", {120, 10}}, {"B2", {8, 4}},
        {"B3", {48, 9}},  {"B4", {384, 16}}, {"C3", {48, 9}},  {"C4", {384, 16}},
        {"G2", {12, 6}},  {"D4", {192, 12}}, {"F4", {1152, 24}}};
    for (const auto& [label, expect] : sizes) {
        const RootSystem rs = RootSystem::build(label);
        const WeylGroup w = WeylGroup::enumerate(rs);
        CHECK(w.size() == expect.first);
        CHECK(w.max_length() == expect.second);
        CHECK(w.length(w.identity()) == 0);
        for (int e = 0; e < w.size(); ++e) {
            CHECK(static_cast<int>(w.word(e).size()) == w.length(e));
            CHECK(w.multiply(e, w.inverse(e)) == w.identity());
        }
    }
}

TEST_CASE("bruhat order matches the subword oracle on A2, B2, G2") {
    for (const char* label : {"A2", "B2", "G2"}) {
        const RootSystem rs = RootSystem::build(label);
        const WeylGroup w = WeylGroup::enumerate(rs);
        for (int e = 0; e < w.size(); ++e) {
            const std::set<int> interval = subword_interval(w, e);
            for (int u = 0; u < w.size(); ++u) {
                CHECK(w.bruhat_leq(u, e) == (interval.count(u) > 0));
            }
        }
    }
}

TEST_CASE("maximal coset representatives") {
    SUBCASE("A2") {
        const RootSystem rs = RootSystem::build("A2");
        const WeylGroup w = WeylGroup::enumerate(rs);
        CHECK(max_coset_rep(rs, w, rs.highest()) == w.identity());
        const int rep = max_coset_rep(rs, w, rs.simple(1));
        CHECK(w.word(rep) == std::vector<int>{2});
    }
    SUBCASE("A3 has a two-element stabilizer") {
        const RootSystem rs = RootSystem::build("A3");
        const WeylGroup w = WeylGroup::enumerate(rs);
        CHECK(w.coset_elements(rs, rs.highest()).size() == 2);
        const int rep = max_coset_rep(rs, w, rs.simple(1));
        CHECK(w.length(rep) == 3);
        CHECK(weyl_to_permutation(w, rep, 4) == Permutation({1, 4, 3, 2}));
    }
    SUBCASE("short roots are rejected in B2") {
        const RootSystem rs = RootSystem::build("B2");
        const WeylGroup w = WeylGroup::enumerate(rs);
        CHECK_THROWS_AS(max_coset_rep(rs, w, rs.simple(2)), std::invalid_argument);
    }
    SUBCASE("coset size equals the stabilizer size") {
        for (const char* label : {"A3", "B3", "G2"}) {
            const RootSystem rs = RootSystem::build(label);
            const WeylGroup w = WeylGroup::enumerate(rs);
            const size_t stab = w.coset_elements(rs, rs.highest()).size();
            for (int alpha = 0; alpha < rs.num_roots(); ++alpha) {
                if (!rs.is_long(alpha)) continue;
                CHECK(w.coset_elements(rs, alpha).size() == stab);
            }
        }
    }
}

TEST_CASE("highest weight theorem on small systems") {
    for (const char* label : {"A1", "A2", "A3", "B2", "C3", "G2"}) {
        const RootSystem rs = RootSystem::build(label);
        const WeylGroup w = WeylGroup::enumerate(rs);
        for (int alpha = 0; alpha < rs.num_roots(); ++alpha) {
            if (!rs.is_long(alpha)) continue;
            CHECK(verify_highest_weight_theorem(rs, w, alpha));
        }
        // alpha = -theta puts every cell in the variety
        const int bottom = rs.negate(rs.highest());
        CHECK(max_coset_rep(rs, w, bottom) ==
              [&] {
                  int longest = 0;
                  for (int e = 0; e < w.size(); ++e)
                      if (w.length(e) > w.length(longest)) longest = e;
                  return longest;
              }());
    }
}

TEST_CASE("type A bridge to corner permutations, n <= 4") {
    for (int n = 2; n <= 4; ++n) {
        const RootSystem rs = RootSystem::build('A', n - 1);
        const WeylGroup w = WeylGroup::enumerate(rs);
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                std::vector<int> coords(static_cast<size_t>(n) - 1, 0);
                if (i < j) {
                    for (int t = i; t < j; ++t) coords[static_cast<size_t>(t) - 1] = 1;
                } else {
                    for (int t = j; t < i; ++t) coords[static_cast<size_t>(t) - 1] = -1;
                }
                const int alpha = rs.index_of(coords);
                REQUIRE(alpha >= 0);
                const Permutation p = weyl_to_permutation(w, max_coset_rep(rs, w, alpha), n);
                CHECK(p == corner_permutation(Corner{i, j}, n));
            }
        }
    }
}

} // TEST_SUITE
