#include "tokenhom/snf.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

namespace tokenhom {

using boost::multiprecision::cpp_int;

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("multiply: shape mismatch");
    IntMatrix out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            long long aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j) {
                long long prod, sum;
                if (__builtin_mul_overflow(aik, b.at(k, j), &prod) ||
                    __builtin_add_overflow(out.at(i, j), prod, &sum))
                    throw std::overflow_error("multiply: overflow");
                out.at(i, j) = sum;
            }
        }
    return out;
}

BigMatrix multiply(const BigMatrix& a, const BigMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("multiply: shape mismatch");
    BigMatrix out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const BigInt& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

std::vector<long long> SnfResult::nontrivial_factors() const {
    std::vector<long long> out;
    for (long long d : factors)
        if (d > 1) out.push_back(d);
    return out;
}

namespace {

// 64-bit integer with overflow-checked arithmetic; the dense reduction is
// templated over this and cpp_int.
struct SafeInt64 {
    long long v = 0;
    SafeInt64() = default;
    SafeInt64(long long x) : v(x) {}

    friend SafeInt64 operator+(SafeInt64 a, SafeInt64 b) {
        long long r;
        if (__builtin_add_overflow(a.v, b.v, &r)) throw std::overflow_error("snf: add");
        return r;
    }
    friend SafeInt64 operator-(SafeInt64 a, SafeInt64 b) {
        long long r;
        if (__builtin_sub_overflow(a.v, b.v, &r)) throw std::overflow_error("snf: sub");
        return r;
    }
    friend SafeInt64 operator*(SafeInt64 a, SafeInt64 b) {
        long long r;
        if (__builtin_mul_overflow(a.v, b.v, &r)) throw std::overflow_error("snf: mul");
        return r;
    }
    friend SafeInt64 operator/(SafeInt64 a, SafeInt64 b) {
        if (b.v == 0) throw std::domain_error("snf: divide by zero");
        if (a.v == std::numeric_limits<long long>::min() && b.v == -1)
            throw std::overflow_error("snf: div");
        return a.v / b.v;
    }
    friend SafeInt64 operator%(SafeInt64 a, SafeInt64 b) { return a.v % b.v; }
    SafeInt64 operator-() const {
        if (v == std::numeric_limits<long long>::min()) throw std::overflow_error("snf: neg");
        return -v;
    }
    friend bool operator==(SafeInt64 a, SafeInt64 b) { return a.v == b.v; }
    friend auto operator<=>(SafeInt64 a, SafeInt64 b) { return a.v <=> b.v; }
};

SafeInt64 abs_val(SafeInt64 x) { return x.v < 0 ? -x : x; }
cpp_int abs_val(const cpp_int& x) { return x < 0 ? cpp_int(-x) : x; }

long long to_int64(SafeInt64 x) { return x.v; }
long long to_int64(const cpp_int& x) {
    if (x > std::numeric_limits<long long>::max() ||
        x < std::numeric_limits<long long>::min())
        throw std::overflow_error("snf: result exceeds 64 bits");
    return static_cast<long long>(x);
}

template <class T>
struct DenseMat {
    int rows = 0, cols = 0;
    std::vector<T> a;
    DenseMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, T(0)) {}
    T& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const T& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static DenseMat identity(int n) {
        DenseMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }
    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < cols; ++c) std::swap(at(i, c), at(j, c));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < rows; ++r) std::swap(at(r, i), at(r, j));
    }
    // row_r -= q * row_p
    void row_op(int r, int p, const T& q) {
        for (int c = 0; c < cols; ++c)
            if (!(at(p, c) == T(0))) at(r, c) = at(r, c) - q * at(p, c);
    }
    // col_c -= q * col_p
    void col_op(int c, int p, const T& q) {
        for (int r = 0; r < rows; ++r)
            if (!(at(r, p) == T(0))) at(r, c) = at(r, c) - q * at(r, p);
    }
    void negate_row(int r) {
        for (int c = 0; c < cols; ++c) at(r, c) = -at(r, c);
    }
};

// Quotient with minimal-magnitude remainder (|a - q*b| <= |b|/2). Balanced
// division keeps the Euclidean passes short and the transform entries small.
template <class T>
T balanced_quot(const T& a, const T& b) {
    T q = a / b;
    T r = a - q * b;
    if (abs_val(r) + abs_val(r) > abs_val(b)) {
        if ((r < T(0)) == (b < T(0)))
            q = q + T(1);
        else
            q = q - T(1);
    }
    return q;
}

template <class T>
struct DenseSnf {
    std::vector<T> factors;
    std::optional<DenseMat<T>> u, v;
};

template <class T>
DenseSnf<T> dense_snf(DenseMat<T> m, bool want_transforms) {
    DenseSnf<T> out;
    if (want_transforms) {
        out.u = DenseMat<T>::identity(m.rows);
        out.v = DenseMat<T>::identity(m.cols);
    }
    int limit = std::min(m.rows, m.cols);
    for (int p = 0; p < limit; ++p) {
        for (;;) {
            // move the minimum-absolute-value entry of the trailing submatrix
            // to the pivot; re-selecting after every pass keeps growth down
            int pr = -1, pc = -1;
            for (int r = p; r < m.rows; ++r)
                for (int c = p; c < m.cols; ++c)
                    if (!(m.at(r, c) == T(0)) &&
                        (pr < 0 || abs_val(m.at(r, c)) < abs_val(m.at(pr, pc)))) {
                        pr = r;
                        pc = c;
                    }
            if (pr < 0) goto done;
            m.swap_rows(p, pr);
            m.swap_cols(p, pc);
            if (out.u) out.u->swap_rows(p, pr);
            if (out.v) out.v->swap_cols(p, pc);

            bool reduced = true;
            for (int r = p + 1; r < m.rows; ++r) {
                if (m.at(r, p) == T(0)) continue;
                T q = balanced_quot(m.at(r, p), m.at(p, p));
                m.row_op(r, p, q);
                if (out.u) out.u->row_op(r, p, q);
                if (!(m.at(r, p) == T(0))) reduced = false;
            }
            if (!reduced) continue;
            for (int c = p + 1; c < m.cols; ++c) {
                if (m.at(p, c) == T(0)) continue;
                T q = balanced_quot(m.at(p, c), m.at(p, p));
                m.col_op(c, p, q);
                if (out.v) out.v->col_op(c, p, q);
                if (!(m.at(p, c) == T(0))) reduced = false;
            }
            if (!reduced) continue;
            break;
        }
        if (m.at(p, p) < T(0)) {
            m.negate_row(p);
            if (out.u) out.u->negate_row(p);
        }
        out.factors.push_back(m.at(p, p));
    }
done:
    // Divisibility fixup on the diagonal: for each out-of-order pair apply
    // the 2x2 Bezout transform diag(a, b) -> diag(gcd, lcm). Doing this after
    // full diagonalization keeps the large multipliers confined to two rows.
    for (size_t i = 0; i < out.factors.size(); ++i)
        for (size_t j = i + 1; j < out.factors.size(); ++j) {
            T a = out.factors[i], b = out.factors[j];
            if (b % a == T(0)) continue;
            // extended gcd: g = s*a + t*b
            T old_r = a, r = b, old_s = T(1), s = T(0), old_t = T(0), t = T(1);
            while (!(r == T(0))) {
                T q = old_r / r;
                T tmp = old_r - q * r;
                old_r = r, r = tmp;
                tmp = old_s - q * s;
                old_s = s, s = tmp;
                tmp = old_t - q * t;
                old_t = t, t = tmp;
            }
            T g = old_r, bs = old_s, bt = old_t;  // g = bs*a + bt*b
            // rows i, j of U <- [[bs, bt], [-b/g, a/g]] * rows
            if (out.u) {
                int ri = static_cast<int>(i), rj = static_cast<int>(j);
                for (int c = 0; c < out.u->cols; ++c) {
                    T x = out.u->at(ri, c), y = out.u->at(rj, c);
                    out.u->at(ri, c) = bs * x + bt * y;
                    out.u->at(rj, c) = (a / g) * y - (b / g) * x;
                }
            }
            // cols i, j of V <- cols * [[1, -bt*b/g], [1, bs*a/g]]
            if (out.v) {
                int ci = static_cast<int>(i), cj = static_cast<int>(j);
                for (int r2 = 0; r2 < out.v->rows; ++r2) {
                    T x = out.v->at(r2, ci), y = out.v->at(r2, cj);
                    out.v->at(r2, ci) = x + y;
                    out.v->at(r2, cj) = (bs * (a / g)) * y - (bt * (b / g)) * x;
                }
            }
            out.factors[i] = g;
            out.factors[j] = (a / g) * b;
            if (out.factors[j] < T(0)) {
                out.factors[j] = -out.factors[j];
                if (out.u) out.u->negate_row(static_cast<int>(j));
            }
        }
    return out;
}

template <class T>
DenseMat<T> to_dense(const IntMatrix& m) {
    DenseMat<T> out(m.rows, m.cols);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) out.at(r, c) = T(m.at(r, c));
    return out;
}

BigInt to_big(SafeInt64 x) { return x.v; }
const BigInt& to_big(const BigInt& x) { return x; }

template <class T>
BigMatrix from_dense(const DenseMat<T>& m) {
    BigMatrix out(m.rows, m.cols);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) out.at(r, c) = to_big(m.at(r, c));
    return out;
}

template <class T>
SnfResult run_dense(const IntMatrix& m, bool want_transforms) {
    auto dense = dense_snf(to_dense<T>(m), want_transforms);
    SnfResult result;
    for (const T& d : dense.factors) result.factors.push_back(to_int64(d));
    result.rank = static_cast<int>(result.factors.size());
    if (want_transforms) {
        result.u = from_dense(*dense.u);
        result.v = from_dense(*dense.v);
    }
    return result;
}

// Sparse pass: repeatedly eliminate +-1 pivots (chosen by Markowitz cost),
// which covers nearly everything for boundary matrices. Returns the number
// of unit pivots eliminated and leaves the irreducible core in `rows`.
struct SparseState {
    std::vector<std::map<int, long long>> rows;
    std::vector<std::set<int>> col_rows;
    std::vector<char> row_active, col_active;
};

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("snf: sparse mul");
    return r;
}

long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("snf: sparse sub");
    return r;
}

int sparse_unit_pass(SparseState& s) {
    int units = 0;
    for (;;) {
        // best +-1 pivot by (nnz_row - 1) * (nnz_col - 1)
        int pr = -1, pc = -1;
        long long best_cost = -1;
        for (int r = 0; r < static_cast<int>(s.rows.size()); ++r) {
            if (!s.row_active[r]) continue;
            for (const auto& [c, val] : s.rows[r]) {
                if (val != 1 && val != -1) continue;
                long long cost = static_cast<long long>(s.rows[r].size() - 1) *
                                 (static_cast<long long>(s.col_rows[c].size()) - 1);
                if (pr < 0 || cost < best_cost) {
                    pr = r;
                    pc = c;
                    best_cost = cost;
                }
            }
        }
        if (pr < 0) break;
        long long pivot = s.rows[pr].at(pc);
        std::vector<int> column(s.col_rows[pc].begin(), s.col_rows[pc].end());
        for (int r : column) {
            if (r == pr) continue;
            long long factor = checked_mul(s.rows[r].at(pc), pivot);  // pivot = +-1
            for (const auto& [c, val] : s.rows[pr]) {
                auto it = s.rows[r].find(c);
                long long next = checked_sub(it == s.rows[r].end() ? 0 : it->second,
                                             checked_mul(factor, val));
                if (next == 0) {
                    if (it != s.rows[r].end()) {
                        s.rows[r].erase(it);
                        s.col_rows[c].erase(r);
                    }
                } else {
                    if (it == s.rows[r].end()) {
                        s.rows[r].emplace(c, next);
                        s.col_rows[c].insert(r);
                    } else {
                        it->second = next;
                    }
                }
            }
        }
        // retire the pivot row and column
        for (const auto& [c, val] : s.rows[pr]) s.col_rows[c].erase(pr);
        s.rows[pr].clear();
        s.row_active[pr] = 0;
        s.col_active[pc] = 0;
        ++units;
    }
    return units;
}

SnfResult run_hybrid(const IntMatrix& m) {
    SparseState s;
    s.rows.resize(m.rows);
    s.col_rows.resize(m.cols);
    s.row_active.assign(m.rows, 1);
    s.col_active.assign(m.cols, 1);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            if (m.at(r, c) != 0) {
                s.rows[r].emplace(c, m.at(r, c));
                s.col_rows[c].insert(r);
            }
    int units = sparse_unit_pass(s);

    // densify the remaining core
    std::vector<int> live_cols;
    for (int c = 0; c < m.cols; ++c)
        if (s.col_active[c] && !s.col_rows[c].empty()) live_cols.push_back(c);
    std::vector<int> col_pos(m.cols, -1);
    for (size_t i = 0; i < live_cols.size(); ++i) col_pos[live_cols[i]] = static_cast<int>(i);
    std::vector<int> live_rows;
    for (int r = 0; r < m.rows; ++r)
        if (s.row_active[r] && !s.rows[r].empty()) live_rows.push_back(r);

    IntMatrix core(static_cast<int>(live_rows.size()), static_cast<int>(live_cols.size()));
    for (size_t i = 0; i < live_rows.size(); ++i)
        for (const auto& [c, val] : s.rows[live_rows[i]])
            core.at(static_cast<int>(i), col_pos[c]) = val;

    SnfResult core_result;
    try {
        core_result = run_dense<SafeInt64>(core, false);
    } catch (const std::overflow_error&) {
        core_result = run_dense<cpp_int>(core, false);
    }

    SnfResult result;
    result.rank = units + core_result.rank;
    result.factors.assign(units, 1);
    result.factors.insert(result.factors.end(), core_result.factors.begin(),
                          core_result.factors.end());
    return result;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m, bool want_transforms) {
    if (want_transforms) {
        try {
            return run_dense<SafeInt64>(m, true);
        } catch (const std::overflow_error&) {
            return run_dense<cpp_int>(m, true);
        }
    }
    try {
        return run_hybrid(m);
    } catch (const std::overflow_error&) {
        return run_dense<cpp_int>(m, false);
    }
}

int rational_rank(const IntMatrix& m) {
    // fraction-free Gaussian elimination (Bareiss)
    DenseMat<cpp_int> a = to_dense<cpp_int>(m);
    int rank = 0;
    cpp_int prev = 1;
    for (int col = 0; col < a.cols && rank < a.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < a.rows; ++r)
            if (a.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        a.swap_rows(rank, pivot);
        for (int r = rank + 1; r < a.rows; ++r) {
            for (int c = col + 1; c < a.cols; ++c)
                a.at(r, c) = (a.at(rank, col) * a.at(r, c) -
                              a.at(r, col) * a.at(rank, c)) / prev;
            a.at(r, col) = 0;
        }
        prev = a.at(rank, col);
        ++rank;
    }
    return rank;
}

}  // namespace tokenhom
