#include "hess/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "hess/errors.hpp"

namespace hess {

namespace {

constexpr int kWeylCeiling = 1152;

std::vector<int> add_coords(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

int height(const std::vector<int>& coords) {
    return std::accumulate(coords.begin(), coords.end(), 0);
}

} // namespace

RootSystem RootSystem::build(std::string_view label) {
    if (label.size() < 2) throw std::invalid_argument("root system label must look like 'B3'");
    const char type = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
    int rank = 0;
    for (size_t i = 1; i < label.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(label[i]))) {
            throw std::invalid_argument("root system label must look like 'B3'");
        }
        rank = rank * 10 + (label[i] - '0');
    }
    return build(type, rank);
}

RootSystem RootSystem::build(char type, int rank) {
    const bool supported = (type == 'A' && rank >= 1 && rank <= 4) ||
                           (type == 'B' && rank >= 2 && rank <= 4) ||
                           (type == 'C' && rank >= 2 && rank <= 4) ||
                           (type == 'D' && rank == 4) ||
                           (type == 'G' && rank == 2) ||
                           (type == 'F' && rank == 4);
    if (!supported) {
        throw std::invalid_argument("unsupported root system (supported: A1-A4, B2-B4, "
                                    "C2-C4, D4, G2, F4)");
    }

    RootSystem rs;
    rs.type_ = type;
    rs.rank_ = rank;
    rs.label_ = std::string(1, type) + std::to_string(rank);

    const size_t r = static_cast<size_t>(rank);
    rs.cartan_.assign(r, std::vector<int>(r, 0));
    rs.d_.assign(r, 1);
    auto chain_edge = [&](int i, int j) { // 0-based, single bond
        rs.cartan_[static_cast<size_t>(i)][static_cast<size_t>(j)] = -1;
        rs.cartan_[static_cast<size_t>(j)][static_cast<size_t>(i)] = -1;
    };
    for (size_t i = 0; i < r; ++i) rs.cartan_[i][i] = 2;
    switch (type) {
    case 'A':
        for (int i = 0; i + 1 < rank; ++i) chain_edge(i, i + 1);
        break;
    case 'B': // last simple root short
        for (int i = 0; i + 2 < rank; ++i) chain_edge(i, i + 1);
        rs.cartan_[r - 2][r - 1] = -2;
        rs.cartan_[r - 1][r - 2] = -1;
        for (size_t i = 0; i + 1 < r; ++i) rs.d_[i] = 2;
        break;
    case 'C': // last simple root long
        for (int i = 0; i + 2 < rank; ++i) chain_edge(i, i + 1);
        rs.cartan_[r - 2][r - 1] = -1;
        rs.cartan_[r - 1][r - 2] = -2;
        rs.d_[r - 1] = 2;
        break;
    case 'D': // center node 2
        chain_edge(0, 1);
        chain_edge(2, 1);
        chain_edge(3, 1);
        break;
    case 'G': // alpha_1 short
        rs.cartan_[0][1] = -1;
        rs.cartan_[1][0] = -3;
        rs.d_[1] = 3;
        break;
    case 'F': // alpha_1, alpha_2 long
        chain_edge(0, 1);
        chain_edge(2, 3);
        rs.cartan_[1][2] = -2;
        rs.cartan_[2][1] = -1;
        rs.d_[0] = rs.d_[1] = 2;
        break;
    default:
        break;
    }

    // Orbit of the simple roots under the simple reflections is all of Phi.
    std::set<std::vector<int>> seen;
    std::deque<std::vector<int>> queue;
    for (int i = 0; i < rank; ++i) {
        std::vector<int> e(r, 0);
        e[static_cast<size_t>(i)] = 1;
        seen.insert(e);
        queue.push_back(std::move(e));
    }
    while (!queue.empty()) {
        const std::vector<int> beta = std::move(queue.front());
        queue.pop_front();
        for (int j = 0; j < rank; ++j) {
            int pairing = 0;
            for (int k = 0; k < rank; ++k) {
                pairing += beta[static_cast<size_t>(k)] * rs.cartan_[static_cast<size_t>(k)][static_cast<size_t>(j)];
            }
            std::vector<int> image = beta;
            image[static_cast<size_t>(j)] -= pairing;
            if (seen.insert(image).second) queue.push_back(std::move(image));
        }
    }

    std::vector<std::vector<int>> positives;
    for (const auto& root : seen) {
        const bool nonneg = std::all_of(root.begin(), root.end(), [](int v) { return v >= 0; });
        const bool nonpos = std::all_of(root.begin(), root.end(), [](int v) { return v <= 0; });
        if (!nonneg && !nonpos) throw std::logic_error("generated root with mixed signs");
        if (nonneg) positives.push_back(root);
    }
    std::sort(positives.begin(), positives.end(), [](const auto& a, const auto& b) {
        const int ha = height(a), hb = height(b);
        return ha != hb ? ha < hb : a < b;
    });

    rs.n_positive_ = static_cast<int>(positives.size());
    rs.roots_ = positives;
    for (const auto& root : positives) {
        std::vector<int> neg(root.size());
        for (size_t i = 0; i < root.size(); ++i) neg[i] = -root[i];
        rs.roots_.push_back(std::move(neg));
    }
    for (int i = 0; i < rs.num_roots(); ++i) rs.index_[rs.roots_[static_cast<size_t>(i)]] = i;

    rs.simple_.resize(r);
    for (int i = 0; i < rank; ++i) {
        std::vector<int> e(r, 0);
        e[static_cast<size_t>(i)] = 1;
        rs.simple_[static_cast<size_t>(i)] = rs.index_.at(e);
    }

    // theta: the unique positive root dominating every positive root.
    rs.highest_ = -1;
    for (int cand = 0; cand < rs.n_positive_; ++cand) {
        bool dominates = true;
        for (int other = 0; other < rs.n_positive_ && dominates; ++other) {
            dominates = rs.succeq(cand, other);
        }
        if (dominates) {
            if (rs.highest_ >= 0) throw std::logic_error("highest root is not unique");
            rs.highest_ = cand;
        }
    }
    if (rs.highest_ < 0) throw std::logic_error("no highest root found");
    return rs;
}

int RootSystem::index_of(const std::vector<int>& coords) const {
    const auto it = index_.find(coords);
    return it == index_.end() ? -1 : it->second;
}

int RootSystem::negate(int root) const {
    return root < n_positive_ ? root + n_positive_ : root - n_positive_;
}

int RootSystem::cartan(int i, int j) const {
    return cartan_[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1];
}

long long RootSystem::bilinear(int a, int b) const {
    const auto& ca = coords(a);
    const auto& cb = coords(b);
    long long acc = 0;
    for (int i = 0; i < rank_; ++i) {
        for (int j = 0; j < rank_; ++j) {
            acc += static_cast<long long>(ca[static_cast<size_t>(i)]) * cb[static_cast<size_t>(j)] *
                   d_[static_cast<size_t>(j)] * cartan_[static_cast<size_t>(i)][static_cast<size_t>(j)];
        }
    }
    return acc;
}

int RootSystem::coroot_pairing(int a, int b) const {
    const long long num = 2 * bilinear(a, b);
    const long long den = norm2(b);
    if (num % den != 0) throw std::logic_error("coroot pairing is not integral");
    return static_cast<int>(num / den);
}

int RootSystem::reflect(int a, int t) const {
    const int pairing = coroot_pairing(a, t);
    std::vector<int> image = coords(a);
    const auto& ct = coords(t);
    for (size_t i = 0; i < image.size(); ++i) image[i] -= pairing * ct[i];
    const int idx = index_of(image);
    if (idx < 0) throw std::logic_error("reflection left the root system");
    return idx;
}

bool RootSystem::succeq(int a, int b) const {
    const auto& ca = coords(a);
    const auto& cb = coords(b);
    for (size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] < cb[i]) return false;
    }
    return true;
}

std::vector<int> RootSystem::support(int root) const {
    std::vector<int> out;
    const auto& c = coords(root);
    for (int i = 1; i <= rank_; ++i) {
        if (c[static_cast<size_t>(i) - 1] != 0) out.push_back(i);
    }
    return out;
}

std::vector<int> RootSystem::neighborhood_support(int root) const {
    const std::vector<int> supp = support(root);
    std::set<int> out(supp.begin(), supp.end());
    for (int i : supp) {
        for (int j = 1; j <= rank_; ++j) {
            if (j != i && cartan(j, i) != 0) out.insert(j);
        }
    }
    return {out.begin(), out.end()};
}

GeneralHessenbergSpace h_alpha(const RootSystem& rs, int alpha) {
    if (alpha < 0 || alpha >= rs.num_roots()) throw std::invalid_argument("root index out of range");
    GeneralHessenbergSpace out;
    if (rs.is_positive(alpha)) {
        for (int beta = 0; beta < rs.num_positive(); ++beta) {
            if (rs.succeq(beta, alpha)) out.roots.insert(beta);
        }
        return out;
    }
    for (int beta = rs.num_positive(); beta < rs.num_roots(); ++beta) {
        if (rs.succeq(beta, alpha)) out.roots.insert(beta);
    }
    const std::vector<int> nb = rs.neighborhood_support(alpha);
    const std::set<int> nbset(nb.begin(), nb.end());
    for (int beta = 0; beta < rs.num_positive(); ++beta) {
        for (int i : rs.support(beta)) {
            if (nbset.count(i)) {
                out.roots.insert(beta);
                break;
            }
        }
    }
    for (int i : rs.support(alpha)) out.toral.insert(i);
    return out;
}

GeneralHessenbergSpace bracket_closure(const RootSystem& rs, const std::set<int>& seed) {
    for (int r : seed) {
        if (r < 0 || r >= rs.num_roots()) throw std::invalid_argument("root index out of range");
    }
    GeneralHessenbergSpace out;
    out.roots = seed;
    bool changed = true;
    while (changed) {
        changed = false;
        const std::vector<int> snapshot(out.roots.begin(), out.roots.end());
        for (int beta : snapshot) {
            for (int gamma = 0; gamma < rs.num_positive(); ++gamma) {
                const int sum = rs.index_of(add_coords(rs.coords(beta), rs.coords(gamma)));
                if (sum >= 0 && out.roots.insert(sum).second) changed = true;
            }
        }
        for (int i = 1; i <= rs.rank(); ++i) {
            if (out.roots.count(rs.negate(rs.simple(i))) && out.toral.insert(i).second) {
                changed = true;
            }
        }
        for (int i : out.toral) {
            for (int gamma = 0; gamma < rs.num_positive(); ++gamma) {
                if (rs.bilinear(gamma, rs.simple(i)) != 0 && out.roots.insert(gamma).second) {
                    changed = true;
                }
            }
        }
    }
    return out;
}

WeylGroup WeylGroup::enumerate(const RootSystem& rs) {
    const int nroots = rs.num_roots();
    const int rank = rs.rank();

    std::vector<std::vector<std::uint16_t>> srefl(static_cast<size_t>(rank));
    for (int j = 1; j <= rank; ++j) {
        auto& table = srefl[static_cast<size_t>(j) - 1];
        table.resize(static_cast<size_t>(nroots));
        for (int r = 0; r < nroots; ++r) {
            table[static_cast<size_t>(r)] = static_cast<std::uint16_t>(rs.reflect(r, rs.simple(j)));
        }
    }

    WeylGroup g;
    std::vector<std::uint16_t> id(static_cast<size_t>(nroots));
    for (int r = 0; r < nroots; ++r) id[static_cast<size_t>(r)] = static_cast<std::uint16_t>(r);
    g.action_.push_back(id);
    g.length_.push_back(0);
    g.word_.push_back({});
    g.index_[id] = 0;

    for (size_t head = 0; head < g.action_.size(); ++head) {
        for (int j = 1; j <= rank; ++j) {
            const auto& table = srefl[static_cast<size_t>(j) - 1];
            std::vector<std::uint16_t> child(static_cast<size_t>(nroots));
            for (int r = 0; r < nroots; ++r) {
                child[static_cast<size_t>(r)] = g.action_[head][table[static_cast<size_t>(r)]];
            }
            if (g.index_.count(child)) continue;
            if (static_cast<int>(g.action_.size()) >= kWeylCeiling) {
                throw budget_error("Weyl group exceeds the 1152-element ceiling");
            }
            g.index_[child] = static_cast<int>(g.action_.size());
            g.length_.push_back(g.length_[head] + 1);
            std::vector<int> word = g.word_[head];
            word.push_back(j);
            g.word_.push_back(std::move(word));
            g.action_.push_back(std::move(child));
        }
    }

    const int size = static_cast<int>(g.action_.size());
    g.inverse_.resize(static_cast<size_t>(size));
    for (int e = 0; e < size; ++e) {
        std::vector<std::uint16_t> inv(static_cast<size_t>(nroots));
        for (int r = 0; r < nroots; ++r) inv[g.action_[static_cast<size_t>(e)][static_cast<size_t>(r)]] = static_cast<std::uint16_t>(r);
        g.inverse_[static_cast<size_t>(e)] = g.index_.at(inv);
    }

    // Covers u -> u*t for every reflection t with a length gap of one, then
    // downsets along the covers; BFS ids are already sorted by length.
    std::vector<std::vector<std::uint16_t>> trefl(static_cast<size_t>(rs.num_positive()));
    for (int p = 0; p < rs.num_positive(); ++p) {
        auto& table = trefl[static_cast<size_t>(p)];
        table.resize(static_cast<size_t>(nroots));
        for (int r = 0; r < nroots; ++r) table[static_cast<size_t>(r)] = static_cast<std::uint16_t>(rs.reflect(r, p));
    }
    std::vector<std::vector<int>> parents(static_cast<size_t>(size));
    std::vector<std::uint16_t> scratch(static_cast<size_t>(nroots));
    for (int u = 0; u < size; ++u) {
        for (int p = 0; p < rs.num_positive(); ++p) {
            const auto& table = trefl[static_cast<size_t>(p)];
            for (int r = 0; r < nroots; ++r) {
                scratch[static_cast<size_t>(r)] = g.action_[static_cast<size_t>(u)][table[static_cast<size_t>(r)]];
            }
            const int w = g.index_.at(scratch);
            if (g.length_[static_cast<size_t>(w)] == g.length_[static_cast<size_t>(u)] + 1) {
                parents[static_cast<size_t>(w)].push_back(u);
            }
        }
    }
    g.down_words_ = static_cast<size_t>((size + 63) / 64);
    g.down_.assign(static_cast<size_t>(size) * g.down_words_, 0);
    for (int e = 0; e < size; ++e) {
        auto* row = g.down_.data() + static_cast<size_t>(e) * g.down_words_;
        row[static_cast<size_t>(e) / 64] |= std::uint64_t{1} << (static_cast<size_t>(e) % 64);
        for (int u : parents[static_cast<size_t>(e)]) {
            const auto* prow = g.down_.data() + static_cast<size_t>(u) * g.down_words_;
            for (size_t t = 0; t < g.down_words_; ++t) row[t] |= prow[t];
        }
    }
    return g;
}

int WeylGroup::max_length() const {
    return *std::max_element(length_.begin(), length_.end());
}

int WeylGroup::lookup(const std::vector<std::uint16_t>& action) const {
    return index_.at(action);
}

int WeylGroup::multiply(int a, int b) const {
    const auto& fa = action_[static_cast<size_t>(a)];
    const auto& fb = action_[static_cast<size_t>(b)];
    std::vector<std::uint16_t> out(fa.size());
    for (size_t r = 0; r < fa.size(); ++r) out[r] = fa[fb[r]];
    return lookup(out);
}

bool WeylGroup::bruhat_leq(int u, int w) const {
    const auto* row = down_.data() + static_cast<size_t>(w) * down_words_;
    return (row[static_cast<size_t>(u) / 64] >> (static_cast<size_t>(u) % 64)) & 1;
}

std::vector<int> WeylGroup::coset_elements(const RootSystem& rs, int alpha) const {
    std::vector<int> out;
    for (int e = 0; e < size(); ++e) {
        if (apply(e, alpha) == rs.highest()) out.push_back(e);
    }
    return out;
}

std::vector<int> bruhat_maximal(const WeylGroup& w, const std::vector<int>& elements) {
    std::vector<int> out;
    for (int e : elements) {
        bool dominated = false;
        for (int other : elements) {
            if (other != e && w.bruhat_leq(e, other)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(e);
    }
    return out;
}

int max_coset_rep(const RootSystem& rs, const WeylGroup& w, int alpha) {
    if (!rs.is_long(alpha)) {
        throw std::invalid_argument("no solution: the root has a different length than the "
                                    "highest root, so no Weyl element carries it there");
    }
    const std::vector<int> coset = w.coset_elements(rs, alpha);
    if (coset.empty()) throw std::logic_error("orbit of the highest root misses a long root");
    const std::vector<int> maxima = bruhat_maximal(w, coset);
    if (maxima.size() != 1) throw std::logic_error("coset has no unique Bruhat maximum");
    return maxima.front();
}

bool verify_highest_weight_theorem(const RootSystem& rs, const WeylGroup& w, int alpha) {
    const int rep = max_coset_rep(rs, w, alpha);
    const GeneralHessenbergSpace space = h_alpha(rs, alpha);
    for (int u = 0; u < w.size(); ++u) {
        const int conj = w.apply(w.inverse(u), rs.highest()); // u^{-1} theta
        const bool in_space = space.roots.count(conj) > 0;
        if (in_space != w.bruhat_leq(u, rep)) return false;
    }
    return true;
}

Permutation weyl_to_permutation(const WeylGroup& w, int e, int n) {
    Permutation p = Permutation::identity(n);
    for (int letter : w.word(e)) {
        if (letter < 1 || letter >= n) throw std::invalid_argument("word letter out of range for S_n");
        p = p.right_transposition(letter, letter + 1);
    }
    return p;
}

} // namespace hess
