#include "hess/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace hess {

namespace {

void check_index(int i, int n, const char* what) {
    if (i < 1 || i > n) {
        throw std::invalid_argument(std::string(what) + " out of range 1.." + std::to_string(n));
    }
}

} // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = size();
    if (n < 1) {
        throw std::invalid_argument("permutation window must be nonempty");
    }
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : images_) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v)]) {
            throw std::invalid_argument("one-line notation must list each of 1.." +
                                        std::to_string(n) + " exactly once");
        }
        seen[static_cast<size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::longest_element(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = n - i;
    return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<int> vals;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        // trim spaces
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        int value = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || p != tok.data() + tok.size()) {
            throw std::invalid_argument("cannot parse permutation entry '" + std::string(tok) + "'");
        }
        vals.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Permutation(std::move(vals));
}

Permutation Permutation::inverse() const {
    const int n = size();
    std::vector<int> inv(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) inv[static_cast<size_t>((*this)(i)) - 1] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& v) const {
    const int n = size();
    if (v.size() != n) throw std::invalid_argument("composition needs equal window sizes");
    std::vector<int> out(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) out[static_cast<size_t>(i) - 1] = (*this)(v(i));
    return Permutation(std::move(out));
}

Permutation Permutation::right_transposition(int j, int k) const {
    const int n = size();
    check_index(j, n, "transposition index j");
    check_index(k, n, "transposition index k");
    if (j >= k) throw std::invalid_argument("transposition needs j < k");
    std::vector<int> out = images_;
    std::swap(out[static_cast<size_t>(j) - 1], out[static_cast<size_t>(k) - 1]);
    return Permutation(std::move(out));
}

int Permutation::length() const {
    const int n = size();
    int count = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if ((*this)(i) > (*this)(j)) ++count;
    return count;
}

std::string Permutation::to_string() const {
    std::string out;
    for (int i = 1; i <= size(); ++i) {
        if (i > 1) out += ',';
        out += std::to_string((*this)(i));
    }
    return out;
}

bool bruhat_leq(const Permutation& v, const Permutation& w) {
    const int n = v.size();
    if (w.size() != n) throw std::invalid_argument("Bruhat comparison needs equal window sizes");
    // cv[j] = #{k <= i : v(k) >= j}, updated as i grows.
    std::vector<int> cv(static_cast<size_t>(n) + 1, 0), cw(static_cast<size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= v(i); ++j) ++cv[static_cast<size_t>(j)];
        for (int j = 1; j <= w(i); ++j) ++cw[static_cast<size_t>(j)];
        for (int j = 1; j <= n; ++j)
            if (cv[static_cast<size_t>(j)] > cw[static_cast<size_t>(j)]) return false;
    }
    return true;
}

std::vector<std::pair<int, int>> free_positions(const Permutation& w) {
    const int n = w.size();
    const Permutation inv = w.inverse();
    std::vector<std::pair<int, int>> out;
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c)
            if (r < w(c) && c < inv(r)) out.emplace_back(r, c);
    return out;
}

CellParam cell_param(const Permutation& w) { return CellParam{w, free_positions(w)}; }

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
    if (n < 1) throw std::invalid_argument("window size must be positive");
    if (n > 10) throw std::invalid_argument("refusing to enumerate S_n beyond n = 10");
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        fn(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    for_each_permutation(n, [&](const Permutation& w) { out.push_back(w); });
    return out;
}

} // namespace hess
