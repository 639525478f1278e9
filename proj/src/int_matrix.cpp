#include "cmtk/int_matrix.hpp"

#include <algorithm>
#include <cstdlib>

#include "cmtk/errors.hpp"

namespace cmtk {

SparseIntMatrix SparseIntMatrix::multiply(const SparseIntMatrix& other) const {
    if (cols_ != other.rows()) throw user_error("matrix multiply: shape mismatch");
    SparseIntMatrix out(rows_, other.cols());
    for (int r = 0; r < rows_; ++r)
        for (auto& [k, v] : row_[r])
            for (auto& [c, w] : other.row(k)) out.add_to(r, c, v * w);
    return out;
}

namespace {

// Working copy for the Smith reduction. Finalized pivot rows/columns are
// deactivated in place instead of being permuted to the corner.
struct Work {
    SparseIntMatrix m;
    std::vector<bool> row_active, col_active;

    explicit Work(const SparseIntMatrix& src)
        : m(src), row_active(src.rows(), true), col_active(src.cols(), true) {}

    // smallest |entry| over the active submatrix; ties by (row, col)
    bool find_pivot(int& pi, int& pj) {
        bool found = false;
        mpz_class best;
        for (int r = 0; r < m.rows(); ++r) {
            if (!row_active[r]) continue;
            for (auto& [c, v] : m.row(r)) {
                if (!col_active[c]) continue;
                mpz_class a = abs(v);
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = r;
                    pj = c;
                    if (best == 1) return true;
                }
            }
        }
        return found;
    }

    void row_op(int dst, int src, const mpz_class& q) {
        // row dst -= q * row src
        if (q == 0) return;
        std::vector<std::pair<int, mpz_class>> deltas;
        for (auto& [c, v] : m.row(src)) deltas.emplace_back(c, -q * v);
        for (auto& [c, d] : deltas) m.add_to(dst, c, d);
    }
    void col_op(int dst, int src, const mpz_class& q) {
        // col dst -= q * col src
        if (q == 0) return;
        std::vector<std::pair<int, mpz_class>> deltas;
        for (int r : m.column_rows(src)) deltas.emplace_back(r, -q * m.get(r, src));
        for (auto& [r, d] : deltas) m.add_to(r, dst, d);
    }
};

// quotient rounded to nearest, so the remainder has at most half the pivot's
// magnitude; keeps entry growth in check
mpz_class round_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    // floor division leaves 0 <= r < b (b > 0) or b < r <= 0 (b < 0); in both
    // cases stepping q up by one flips the remainder to the other side
    if (2 * abs(r) > abs(b)) q += 1;
    return q;
}

} // namespace

SmithResult smith_normal_form(const SparseIntMatrix& src) {
    Work w(src);
    SmithResult res;

    int pi, pj;
    while (w.find_pivot(pi, pj)) {
        for (;;) {
            // clear the pivot column
            bool dirty = false;
            for (;;) {
                int target = -1;
                for (int r : w.m.column_rows(pj))
                    if (r != pi && w.row_active[r]) {
                        target = r;
                        break;
                    }
                if (target < 0) break;
                mpz_class piv = w.m.get(pi, pj);
                mpz_class q = round_div(w.m.get(target, pj), piv);
                w.row_op(target, pi, q);
                mpz_class rem = w.m.get(target, pj);
                if (rem != 0) {
                    // remainder is strictly smaller than the pivot: promote it
                    pi = target;
                    dirty = true;
                }
            }
            // clear the pivot row
            for (;;) {
                int target = -1;
                for (auto& [c, v] : w.m.row(pi))
                    if (c != pj && w.col_active[c]) {
                        target = c;
                        break;
                    }
                if (target < 0) break;
                mpz_class piv = w.m.get(pi, pj);
                mpz_class q = round_div(w.m.get(pi, target), piv);
                w.col_op(target, pj, q);
                if (w.m.get(pi, target) != 0) {
                    pj = target;
                    dirty = true;
                }
            }
            if (dirty) continue; // column may have refilled while clearing the row

            // divisibility: the pivot must divide every remaining active entry
            mpz_class piv = w.m.get(pi, pj);
            int bad_row = -1;
            for (int r = 0; r < w.m.rows() && bad_row < 0; ++r) {
                if (!w.row_active[r] || r == pi) continue;
                for (auto& [c, v] : w.m.row(r)) {
                    if (!w.col_active[c] || c == pj) continue;
                    if (v % piv != 0) {
                        bad_row = r;
                        break;
                    }
                }
            }
            if (bad_row < 0) break;
            w.row_op(pi, bad_row, mpz_class(-1)); // pull the offending row in and repeat
        }
        mpz_class piv = abs(w.m.get(pi, pj));
        res.invariant_factors.push_back(piv);
        w.row_active[pi] = false;
        w.col_active[pj] = false;
    }

    res.rank = int(res.invariant_factors.size());
    // The in-loop divisibility fix makes factors emerge in divisibility
    // order; normalize defensively anyway.
    auto& f = res.invariant_factors;
    for (size_t i = 0; i + 1 < f.size(); ++i)
        for (size_t j = i + 1; j < f.size(); ++j)
            if (f[j] % f[i] != 0) {
                mpz_class g = gcd(f[i], f[j]);
                mpz_class l = f[i] / g * f[j];
                f[i] = g;
                f[j] = l;
            }
    std::sort(f.begin(), f.end());
    return res;
}

int rank_over_q(const SparseIntMatrix& m) {
    // dense fraction-free style elimination with rationals
    int R = m.rows(), C = m.cols();
    std::vector<std::vector<mpq_class>> a(R);
    for (int r = 0; r < R; ++r) {
        a[r].assign(C, mpq_class(0));
        for (auto& [c, v] : m.row(r)) a[r][c] = mpq_class(v);
    }
    int rank = 0;
    for (int c = 0; c < C && rank < R; ++c) {
        int piv = -1;
        for (int r = rank; r < R; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[rank]);
        mpq_class inv = 1 / a[rank][c];
        for (int cc = c; cc < C; ++cc) a[rank][cc] *= inv;
        for (int r = 0; r < R; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            mpq_class f = a[r][c];
            for (int cc = c; cc < C; ++cc) a[r][cc] -= f * a[rank][cc];
        }
        ++rank;
    }
    return rank;
}

namespace {
long mod_pow(long b, long e, long p) {
    long r = 1 % p;
    b %= p;
    if (b < 0) b += p;
    while (e) {
        if (e & 1) r = (long)((__int128)r * b % p);
        b = (long)((__int128)b * b % p);
        e >>= 1;
    }
    return r;
}
} // namespace

int rank_mod_p(const SparseIntMatrix& m, long p) {
    int R = m.rows(), C = m.cols();
    std::vector<std::vector<long>> a(R);
    for (int r = 0; r < R; ++r) {
        a[r].assign(C, 0);
        for (auto& [c, v] : m.row(r)) {
            mpz_class red = v % (long)p;
            long x = red.get_si();
            if (x < 0) x += p;
            a[r][c] = x;
        }
    }
    int rank = 0;
    for (int c = 0; c < C && rank < R; ++c) {
        int piv = -1;
        for (int r = rank; r < R; ++r)
            if (a[r][c]) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[rank]);
        long inv = mod_pow(a[rank][c], p - 2, p);
        for (int cc = c; cc < C; ++cc) a[rank][cc] = (long)((__int128)a[rank][cc] * inv % p);
        for (int r = 0; r < R; ++r) {
            if (r == rank || !a[r][c]) continue;
            long f = a[r][c];
            for (int cc = c; cc < C; ++cc) {
                long t = a[r][cc] - (long)((__int128)f * a[rank][cc] % p);
                a[r][cc] = t < 0 ? t + p : t;
            }
        }
        ++rank;
    }
    return rank;
}

} // namespace cmtk
