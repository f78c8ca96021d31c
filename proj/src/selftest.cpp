#include "hess/selftest.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "hess/fq.hpp"
#include "hess/hessenberg.hpp"
#include "hess/highest_weight.hpp"
#include "hess/permutation.hpp"
#include "hess/root_system.hpp"

namespace hess::selftest {

namespace {

void for_each_hessenberg(int n, const std::function<void(const HessenbergFunction&)>& fn) {
    std::vector<int> values(static_cast<size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int pos, int minimum) {
        if (pos == n) {
            fn(HessenbergFunction(values));
            return;
        }
        for (int v = minimum; v <= n; ++v) {
            values[static_cast<size_t>(pos)] = v;
            rec(pos + 1, v);
        }
    };
    rec(0, 0);
    (void)rec;
}

std::uint64_t q_pow(int q, int e) {
    std::uint64_t out = 1;
    for (int t = 0; t < e; ++t) out *= static_cast<std::uint64_t>(q);
    return out;
}

std::string perm_set_string(const std::set<Permutation>& s) {
    std::string out = "{";
    for (const Permutation& w : s) {
        if (out.size() > 1) out += "; ";
        out += w.to_string();
    }
    return out + "}";
}

bool criterion1(std::string& detail) {
    const HessenbergFunction h = minimize_nilpotent(HessenbergFunction::diagonal(3));
    const DecompositionReport rep = decompose(h);
    std::set<Permutation> got;
    bool dims_ok = true;
    for (const Component& c : rep.components) {
        got.insert(c.w);
        dims_ok = dims_ok && c.dimension == 1;
    }
    const std::set<Permutation> want{Permutation({2, 1, 3}), Permutation({1, 3, 2})};
    detail = "minimal h=" + h.to_string() + ", components " + perm_set_string(got);
    return got == want && dims_ok && rep.pure;
}

bool criterion2(std::string& detail) {
    const HessenbergFunction h({4, 4, 4, 5, 5});
    const DecompositionReport rep = decompose(h);
    std::multiset<int> dims;
    for (const Component& c : rep.components) dims.insert(c.dimension);
    bool ok = dims == std::multiset<int>{7, 9} && !rep.pure;
    std::ostringstream os;
    os << "dims {9,7} pure=false";
    for (int q : {2, 3}) {
        const std::uint64_t count = point_count(FqMatrix::e1n(5, q), h);
        std::uint64_t interval_sum = 0;
        for_each_permutation(5, [&](const Permutation& s) {
            for (const Component& c : rep.components) {
                if (bruhat_leq(s, c.w)) {
                    interval_sum += q_pow(q, s.length());
                    return;
                }
            }
        });
        ok = ok && count == interval_sum;
        os << "; q=" << q << " count=" << count << " expected=" << interval_sum;
    }
    detail = os.str();
    return ok;
}

bool criterion3(std::string& detail) {
    int checked = 0;
    for (int n = 2; n <= 8; ++n) {
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                const Corner c{i, j};
                if (corner_dimension(c, n) != corner_permutation(c, n).length()) {
                    detail = "mismatch at n=" + std::to_string(n) + " corner (" +
                             std::to_string(i) + "," + std::to_string(j) + ")";
                    return false;
                }
                ++checked;
            }
        }
    }
    detail = std::to_string(checked) + " corners checked";
    return true;
}

bool criterion4(std::string& detail) {
    int checked = 0;
    for (int n = 2; n <= 8; ++n) {
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                const Corner c{i, j};
                Permutation p = Permutation::longest_element(n);
                for (int letter : corner_factorization(c, n)) {
                    const Permutation next = p.right_transposition(letter, letter + 1);
                    if (next.length() != p.length() - 1) {
                        detail = "letter does not shorten at n=" + std::to_string(n);
                        return false;
                    }
                    p = next;
                }
                if (!(p == corner_permutation(c, n))) {
                    detail = "product mismatch at n=" + std::to_string(n) + " corner (" +
                             std::to_string(i) + "," + std::to_string(j) + ")";
                    return false;
                }
                ++checked;
            }
        }
    }
    detail = std::to_string(checked) + " factorizations checked";
    return true;
}

bool criterion5(std::string& detail) {
    int checked = 0;
    bool ok = true;
    for (int n = 2; n <= 6 && ok; ++n) {
        for_each_hessenberg(n, [&](const HessenbergFunction& h) {
            if (!ok) return;
            const std::vector<Permutation> brute = brute_force_components(h);
            const DecompositionReport rep = decompose(minimize_nilpotent(h));
            std::set<Permutation> from_corners;
            for (const Component& c : rep.components) from_corners.insert(c.w);
            if (std::set<Permutation>(brute.begin(), brute.end()) != from_corners) {
                detail = "mismatch at n=" + std::to_string(n) + " h=" + h.to_string();
                ok = false;
            }
            ++checked;
        });
    }
    if (ok) detail = std::to_string(checked) + " functions checked";
    return ok;
}

bool criterion6(std::string& detail) {
    int checked = 0;
    bool ok = true;
    for (int n = 1; n <= 4 && ok; ++n) {
        for (int q : {2, 3, 5}) {
            if (!ok) break;
            const FqMatrix x = FqMatrix::e1n(n, q);
            for_each_hessenberg(n, [&](const HessenbergFunction& h) {
                if (!ok) return;
                std::uint64_t cells = 0;
                for_each_permutation(n, [&](const Permutation& s) {
                    if (cell_in_variety(s, h)) cells += q_pow(q, s.length());
                });
                if (point_count(x, h) != cells) {
                    detail = "count mismatch at n=" + std::to_string(n) + " q=" +
                             std::to_string(q) + " h=" + h.to_string();
                    ok = false;
                }
                ++checked;
            });
        }
    }
    if (ok) detail = std::to_string(checked) + " point counts checked";
    return ok;
}

bool criterion7(std::string& detail) {
    int checked = 0;
    bool ok = true;
    for (int n = 2; n <= 4 && ok; ++n) {
        for (int q : {2, 3}) {
            if (!ok) break;
            const std::vector<FqMatrix> ops{FqMatrix::e1n(n, q), FqMatrix::regular_nilpotent(n, q)};
            for (const FqMatrix& x : ops) {
                if (!ok) break;
                for_each_hessenberg(n, [&](const HessenbergFunction& h) {
                    if (!ok) return;
                    if (!verify_equivalence(x, h, minimize_nilpotent(h))) {
                        detail = "member sets differ at n=" + std::to_string(n) + " q=" +
                                 std::to_string(q) + " h=" + h.to_string();
                        ok = false;
                    }
                    ++checked;
                });
            }
        }
    }
    if (ok) detail = std::to_string(checked) + " equivalences checked";
    return ok;
}

bool criterion8(std::string& detail) {
    std::ostringstream os;
    for (int n : {3, 4}) {
        for (int q : {2, 3}) {
            const SemisimpleCheck check = verify_semisimple_example(n, q);
            const std::uint64_t fibered = projective_count(n - 2, q) * flag_count(n - 1, q);
            const std::uint64_t small_flag = flag_count(n - 1, q);
            os << "n=" << n << " q=" << q << " actual=" << check.actual
               << " predicted=" << check.predicted << "; ";
            if (!check.match() || check.flags_with_en != fibered ||
                check.flags_fixed_hyperplane != small_flag ||
                check.flags_with_en + check.flags_fixed_hyperplane != check.actual) {
                detail = os.str() + "FAILED";
                return false;
            }
        }
    }
    detail = os.str();
    return true;
}

bool criterion9(std::string& detail) {
    const std::vector<std::string> systems{"A1", "A2", "A3", "A4", "B2", "B3", "B4",
                                           "C3", "C4", "D4", "G2", "F4"};
    int checked = 0;
    for (const std::string& label : systems) {
        const RootSystem rs = RootSystem::build(label);
        const WeylGroup w = WeylGroup::enumerate(rs);
        const size_t stabilizer = w.coset_elements(rs, rs.highest()).size();
        for (int alpha = 0; alpha < rs.num_roots(); ++alpha) {
            if (!rs.is_long(alpha)) continue;
            const std::vector<int> coset = w.coset_elements(rs, alpha);
            const std::vector<int> maxima = bruhat_maximal(w, coset);
            bool ok = coset.size() == stabilizer && maxima.size() == 1;
            if (ok) {
                for (int u : coset) ok = ok && w.bruhat_leq(u, maxima.front());
            }
            ok = ok && verify_highest_weight_theorem(rs, w, alpha);
            if (!ok) {
                detail = "failure in " + label + " at root index " + std::to_string(alpha);
                return false;
            }
            ++checked;
        }
    }
    detail = std::to_string(checked) + " roots checked across 12 systems";
    return true;
}

bool criterion10(std::string& detail) {
    const std::vector<std::string> systems{"A1", "A2", "A3", "A4", "B2", "B3", "B4",
                                           "C2", "C3", "C4", "D4", "G2", "F4"};
    int checked = 0;
    for (const std::string& label : systems) {
        const RootSystem rs = RootSystem::build(label);
        for (int alpha = 0; alpha < rs.num_roots(); ++alpha) {
            if (!(h_alpha(rs, alpha) == bracket_closure(rs, {alpha}))) {
                detail = "closure mismatch in " + label + " at root index " + std::to_string(alpha);
                return false;
            }
            ++checked;
        }
    }
    detail = std::to_string(checked) + " roots checked across 13 systems";
    return true;
}

bool criterion11(std::string& detail) {
    int checked = 0;
    for (int n = 2; n <= 5; ++n) {
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
                const Permutation from_weyl =
                    weyl_to_permutation(w, max_coset_rep(rs, w, alpha), n);
                if (!(from_weyl == corner_permutation(Corner{i, j}, n))) {
                    detail = "bridge mismatch at n=" + std::to_string(n) + " (i,j)=(" +
                             std::to_string(i) + "," + std::to_string(j) + ")";
                    return false;
                }
                ++checked;
            }
        }
    }
    detail = std::to_string(checked) + " corners matched";
    return true;
}

struct Criterion {
    const char* name;
    double budget_ms;
    bool (*run)(std::string&);
};

const Criterion kCriteria[] = {
    {"n=3 worked example decomposes into the two simple reflections", 1.0, criterion1},
    {"non-pure example at n=5 with point-count cross-check", 1000.0, criterion2},
    {"corner dimension formula equals permutation length, n <= 8", 1000.0, criterion3},
    {"corner factorization shortens the longest element stepwise, n <= 8", 1000.0, criterion4},
    {"brute-force components equal corner decomposition, n <= 6", 120000.0, criterion5},
    {"cell-union point counts over F_q, n <= 4, q in {2,3,5}", 60000.0, criterion6},
    {"minimization preserves member flags for nilpotent operators", 60000.0, criterion7},
    {"semisimple example: counts and two-class split", 60000.0, criterion8},
    {"highest weight theorem for every long root, all supported types", 300000.0, criterion9},
    {"h_alpha equals bracket closure for every root", 60000.0, criterion10},
    {"type A maximal coset elements match corner permutations", 1000.0, criterion11},
};

} // namespace

CriterionResult run_criterion(int id) {
    if (id < 1 || id > static_cast<int>(std::size(kCriteria))) {
        throw std::invalid_argument("criterion id must be 1..11");
    }
    const Criterion& c = kCriteria[static_cast<size_t>(id) - 1];
    CriterionResult result;
    result.id = id;
    result.name = c.name;
    result.budget_ms = c.budget_ms;
    const auto start = std::chrono::steady_clock::now();
    const bool verdict = c.run(result.detail);
    const auto stop = std::chrono::steady_clock::now();
    result.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    result.pass = verdict && result.elapsed_ms <= result.budget_ms;
    if (verdict && !result.pass) result.detail += " (over time budget)";
    return result;
}

std::vector<CriterionResult> run_all() {
    std::vector<int> ids;
    for (int id = 1; id <= static_cast<int>(std::size(kCriteria)); ++id) ids.push_back(id);
    return run_selected(ids);
}

std::vector<CriterionResult> run_selected(const std::vector<int>& ids) {
    std::vector<CriterionResult> out;
    out.reserve(ids.size());
    for (int id : ids) out.push_back(run_criterion(id));
    return out;
}

bool all_pass(const std::vector<CriterionResult>& results) {
    for (const CriterionResult& r : results) {
        if (!r.pass) return false;
    }
    return true;
}

void print_results(const std::vector<CriterionResult>& results, std::ostream& out) {
    for (const CriterionResult& r : results) {
        out << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.name << "  ["
            << r.elapsed_ms << " ms";
        if (!r.detail.empty()) out << "; " << r.detail;
        out << "]\n";
    }
}

} // namespace hess::selftest
