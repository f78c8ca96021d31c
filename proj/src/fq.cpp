#include "hess/fq.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hess/errors.hpp"
#include "hess/highest_weight.hpp"

namespace hess {

namespace {

constexpr std::uint64_t kFlagBudget = 1'000'000;

void check_q(int q) {
    if (q != 2 && q != 3 && q != 5 && q != 7 && q != 11 && q != 13) {
        throw std::invalid_argument("q must be a prime at most 13");
    }
}

int inv_mod(int a, int q) {
    a %= q;
    for (int x = 1; x < q; ++x) {
        if (a * x % q == 1) return x;
    }
    throw std::invalid_argument("no inverse mod q");
}

int sub_mul_mod(int v, int coef, int b, int q) { return ((v - coef * b) % q + q) % q; }

// Row-style echelon data for a growing list of column vectors, each new
// vector normalized to pivot 1 at a fresh coordinate.
struct Echelon {
    std::vector<std::vector<int>> rows;
    std::vector<int> pivots;
    int q;

    explicit Echelon(int q_) : q(q_) {}

    void reduce(std::vector<int>& v, int count) const {
        for (int t = 0; t < count; ++t) {
            const int coef = v[static_cast<size_t>(pivots[static_cast<size_t>(t)])];
            if (coef == 0) continue;
            const auto& row = rows[static_cast<size_t>(t)];
            for (size_t r = 0; r < v.size(); ++r) v[r] = sub_mul_mod(v[r], coef, row[r], q);
        }
    }

    // Returns false when v reduces to zero (already in the span).
    bool insert(std::vector<int> v) {
        reduce(v, static_cast<int>(rows.size()));
        int p = -1;
        for (size_t r = 0; r < v.size(); ++r) {
            if (v[r] != 0) {
                p = static_cast<int>(r);
                break;
            }
        }
        if (p < 0) return false;
        const int scale = inv_mod(v[static_cast<size_t>(p)], q);
        for (int& x : v) x = x * scale % q;
        rows.push_back(std::move(v));
        pivots.push_back(p);
        return true;
    }
};

std::vector<int> column(const FqMatrix& m, int c) {
    std::vector<int> v(static_cast<size_t>(m.n()));
    for (int r = 1; r <= m.n(); ++r) v[static_cast<size_t>(r) - 1] = m.at(r, c);
    return v;
}

std::vector<int> apply_matrix(const FqMatrix& x, const std::vector<int>& v) {
    const int n = x.n();
    std::vector<int> out(static_cast<size_t>(n), 0);
    for (int r = 1; r <= n; ++r) {
        int acc = 0;
        for (int c = 1; c <= n; ++c) acc += x.at(r, c) * v[static_cast<size_t>(c) - 1];
        out[static_cast<size_t>(r) - 1] = acc % x.q();
    }
    return out;
}

} // namespace

FqMatrix::FqMatrix(int n, int q) : n_(n), q_(q), a_(static_cast<size_t>(n) * n, 0) {
    if (n < 1) throw std::invalid_argument("matrix size must be positive");
    check_q(q);
}

FqMatrix FqMatrix::from_rows(const std::vector<std::vector<int>>& rows, int q) {
    const int n = static_cast<int>(rows.size());
    FqMatrix m(n, q);
    for (int r = 1; r <= n; ++r) {
        if (static_cast<int>(rows[static_cast<size_t>(r) - 1].size()) != n) {
            throw std::invalid_argument("matrix rows must be square");
        }
        for (int c = 1; c <= n; ++c) m.set(r, c, rows[static_cast<size_t>(r) - 1][static_cast<size_t>(c) - 1]);
    }
    return m;
}

FqMatrix FqMatrix::identity(int n, int q) {
    FqMatrix m(n, q);
    for (int i = 1; i <= n; ++i) m.set(i, i, 1);
    return m;
}

FqMatrix FqMatrix::unit(int n, int q, int i, int j) {
    FqMatrix m(n, q);
    if (i < 1 || i > n || j < 1 || j > n) throw std::invalid_argument("unit position out of range");
    m.set(i, j, 1);
    return m;
}

FqMatrix FqMatrix::e1n(int n, int q) { return unit(n, q, 1, n); }

FqMatrix FqMatrix::regular_nilpotent(int n, int q) {
    FqMatrix m(n, q);
    for (int i = 1; i < n; ++i) m.set(i, i + 1, 1);
    return m;
}

FqMatrix FqMatrix::semisimple_example(int n, int q) {
    FqMatrix m(n, q);
    for (int i = 1; i < n; ++i) m.set(i, i, 1);
    return m;
}

FqMatrix FqMatrix::jordan_nilpotent(const std::vector<int>& blocks, int q) {
    int n = 0;
    for (int b : blocks) {
        if (b < 1) throw std::invalid_argument("jordan block sizes must be positive");
        n += b;
    }
    FqMatrix m(n, q);
    int offset = 0;
    for (int b : blocks) {
        for (int i = 1; i < b; ++i) m.set(offset + i, offset + i + 1, 1);
        offset += b;
    }
    return m;
}

void FqMatrix::set(int r, int c, int value) {
    a_[static_cast<size_t>(r - 1) * n_ + (c - 1)] = ((value % q_) + q_) % q_;
}

FqMatrix FqMatrix::multiply(const FqMatrix& rhs) const {
    if (rhs.n_ != n_ || rhs.q_ != q_) throw std::invalid_argument("matrix shapes differ");
    FqMatrix out(n_, q_);
    for (int r = 1; r <= n_; ++r) {
        for (int c = 1; c <= n_; ++c) {
            int acc = 0;
            for (int k = 1; k <= n_; ++k) acc += at(r, k) * rhs.at(k, c);
            out.set(r, c, acc % q_);
        }
    }
    return out;
}

bool FqMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](int v) { return v == 0; });
}

bool FqMatrix::is_nilpotent() const {
    FqMatrix p = *this;
    for (int k = 1; k < n_; ++k) p = p.multiply(*this);
    return p.is_zero();
}

FqMatrix FqMatrix::inverse() const {
    // Gauss-Jordan on [A | I].
    std::vector<std::vector<int>> aug(static_cast<size_t>(n_), std::vector<int>(static_cast<size_t>(2 * n_), 0));
    for (int r = 1; r <= n_; ++r) {
        for (int c = 1; c <= n_; ++c) aug[static_cast<size_t>(r) - 1][static_cast<size_t>(c) - 1] = at(r, c);
        aug[static_cast<size_t>(r) - 1][static_cast<size_t>(n_ + r) - 1] = 1;
    }
    for (int col = 0; col < n_; ++col) {
        int pivot = -1;
        for (int r = col; r < n_; ++r) {
            if (aug[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) throw std::invalid_argument("matrix is singular");
        std::swap(aug[static_cast<size_t>(col)], aug[static_cast<size_t>(pivot)]);
        const int scale = inv_mod(aug[static_cast<size_t>(col)][static_cast<size_t>(col)], q_);
        for (int& v : aug[static_cast<size_t>(col)]) v = v * scale % q_;
        for (int r = 0; r < n_; ++r) {
            if (r == col) continue;
            const int coef = aug[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (coef == 0) continue;
            for (int c = 0; c < 2 * n_; ++c) {
                aug[static_cast<size_t>(r)][static_cast<size_t>(c)] = sub_mul_mod(
                    aug[static_cast<size_t>(r)][static_cast<size_t>(c)], coef,
                    aug[static_cast<size_t>(col)][static_cast<size_t>(c)], q_);
            }
        }
    }
    FqMatrix out(n_, q_);
    for (int r = 1; r <= n_; ++r)
        for (int c = 1; c <= n_; ++c) out.set(r, c, aug[static_cast<size_t>(r) - 1][static_cast<size_t>(n_ + c) - 1]);
    return out;
}

FqMatrix FqMatrix::conjugate_by(const FqMatrix& g) const {
    return g.inverse().multiply(*this).multiply(g);
}

std::uint64_t q_integer(int i, int q) {
    std::uint64_t acc = 0, pw = 1;
    for (int t = 0; t < i; ++t) {
        acc += pw;
        pw *= static_cast<std::uint64_t>(q);
    }
    return acc;
}

std::uint64_t projective_count(int m, int q) { return q_integer(m + 1, q); }

std::uint64_t flag_count(int n, int q) {
    if (n < 1) throw std::invalid_argument("window size must be positive");
    check_q(q);
    std::uint64_t total = 1;
    for (int i = 1; i <= n; ++i) {
        total *= q_integer(i, q);
        if (total > kFlagBudget) {
            throw budget_error("flag enumeration budget exceeded (over 10^6 flags)");
        }
    }
    return total;
}

void for_each_flag(int n, int q, const std::function<void(const FqFlag&)>& fn) {
    flag_count(n, q); // budget guard
    std::vector<Permutation> cells = all_permutations(n);
    std::stable_sort(cells.begin(), cells.end(), [](const Permutation& a, const Permutation& b) {
        const int la = a.length(), lb = b.length();
        return la != lb ? la < lb : a < b;
    });
    for (const Permutation& w : cells) {
        const auto free = free_positions(w);
        FqFlag flag{w, std::vector<int>(free.size(), 0)};
        while (true) {
            fn(flag);
            int d = static_cast<int>(flag.assignment.size()) - 1;
            while (d >= 0 && flag.assignment[static_cast<size_t>(d)] == q - 1) {
                flag.assignment[static_cast<size_t>(d)] = 0;
                --d;
            }
            if (d < 0) break;
            ++flag.assignment[static_cast<size_t>(d)];
        }
    }
}

FqMatrix realize(const FqFlag& flag, int q) {
    const int n = flag.cell.size();
    const auto free = free_positions(flag.cell);
    if (flag.assignment.size() != free.size()) {
        throw std::invalid_argument("assignment size must match the cell's free positions");
    }
    FqMatrix m(n, q);
    for (int c = 1; c <= n; ++c) m.set(flag.cell(c), c, 1);
    for (size_t t = 0; t < free.size(); ++t) m.set(free[t].first, free[t].second, flag.assignment[t]);
    return m;
}

bool hessenberg_member(const FqFlag& flag, const FqMatrix& X, const HessenbergFunction& h) {
    const int n = flag.cell.size();
    if (X.n() != n || h.size() != n) throw std::invalid_argument("window sizes differ");
    const int q = X.q();
    const FqMatrix g = realize(flag, q);

    Echelon ech(q);
    std::vector<std::vector<int>> cols;
    cols.reserve(static_cast<size_t>(n));
    for (int c = 1; c <= n; ++c) {
        cols.push_back(column(g, c));
        ech.insert(cols.back());
    }
    // h nondecreasing and the V_i nested, so X g_i in V_{h(i)} suffices.
    for (int i = 1; i <= n; ++i) {
        std::vector<int> y = apply_matrix(X, cols[static_cast<size_t>(i) - 1]);
        ech.reduce(y, h(i));
        if (std::any_of(y.begin(), y.end(), [](int v) { return v != 0; })) return false;
    }
    return true;
}

std::uint64_t point_count(const FqMatrix& X, const HessenbergFunction& h) {
    if (X.n() != h.size()) throw std::invalid_argument("window sizes differ");
    std::uint64_t count = 0;
    for_each_flag(h.size(), X.q(), [&](const FqFlag& f) {
        if (hessenberg_member(f, X, h)) ++count;
    });
    return count;
}

bool verify_cell_union(const HessenbergFunction& h, int q) {
    const int n = h.size();
    const FqMatrix X = FqMatrix::e1n(n, q);
    bool consistent = true;
    std::uint64_t scanned = 0;
    for_each_flag(n, q, [&](const FqFlag& f) {
        const bool member = hessenberg_member(f, X, h);
        if (member != cell_in_variety(f.cell, h)) consistent = false;
        if (member) ++scanned;
    });
    std::uint64_t by_cells = 0;
    for_each_permutation(n, [&](const Permutation& s) {
        if (cell_in_variety(s, h)) {
            std::uint64_t pw = 1;
            for (int t = 0; t < s.length(); ++t) pw *= static_cast<std::uint64_t>(q);
            by_cells += pw;
        }
    });
    return consistent && scanned == by_cells;
}

bool verify_not_cell_union(const FqMatrix& X, const HessenbergFunction& h) {
    std::map<Permutation, std::pair<bool, bool>> seen;
    for_each_flag(h.size(), X.q(), [&](const FqFlag& f) {
        auto& [member, nonmember] = seen[f.cell];
        (hessenberg_member(f, X, h) ? member : nonmember) = true;
    });
    for (const auto& [cell, flags] : seen) {
        if (flags.first && flags.second) return true;
    }
    return false;
}

SemisimpleCheck verify_semisimple_example(int n, int q) {
    if (n < 2) throw std::invalid_argument("semisimple example needs n >= 2");
    const FqMatrix X = FqMatrix::semisimple_example(n, q);
    std::vector<int> hv(static_cast<size_t>(n), n - 1);
    hv.back() = n;
    const HessenbergFunction h{hv};

    SemisimpleCheck out;
    out.predicted = flag_count(n - 1, q) * (1 + projective_count(n - 2, q));
    for_each_flag(n, q, [&](const FqFlag& f) {
        if (!hessenberg_member(f, X, h)) return;
        ++out.actual;
        const FqMatrix g = realize(f, q);
        bool fixed_hyperplane = true;
        Echelon ech(q);
        for (int c = 1; c <= n - 1; ++c) {
            if (g.at(n, c) != 0) fixed_hyperplane = false;
            ech.insert(column(g, c));
        }
        if (fixed_hyperplane) {
            ++out.flags_fixed_hyperplane;
            return;
        }
        std::vector<int> en(static_cast<size_t>(n), 0);
        en.back() = 1;
        ech.reduce(en, n - 1);
        if (std::all_of(en.begin(), en.end(), [](int v) { return v == 0; })) ++out.flags_with_en;
    });
    return out;
}

bool verify_equivalence(const FqMatrix& X, const HessenbergFunction& h,
                        const HessenbergFunction& h2) {
    if (h.size() != h2.size() || X.n() != h.size()) {
        throw std::invalid_argument("window sizes differ");
    }
    if (!X.is_nilpotent()) {
        throw std::invalid_argument("equivalence check requires a nilpotent operator");
    }
    bool equal = true;
    for_each_flag(h.size(), X.q(), [&](const FqFlag& f) {
        if (hessenberg_member(f, X, h) != hessenberg_member(f, X, h2)) equal = false;
    });
    return equal;
}

} // namespace hess
