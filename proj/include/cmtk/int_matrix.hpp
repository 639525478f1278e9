#pragma once

#include <gmpxx.h>

#include <map>
#include <set>
#include <vector>

namespace cmtk {

// Sparse integer matrix with arbitrary-precision entries. Rows are ordered
// column->value maps; a per-column set of occupied rows keeps column
// operations cheap. Zero entries are never stored.
class SparseIntMatrix {
  public:
    SparseIntMatrix(int rows, int cols) : rows_(rows), cols_(cols), row_(rows), col_rows_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    mpz_class get(int r, int c) const {
        auto it = row_[r].find(c);
        return it == row_[r].end() ? mpz_class(0) : it->second;
    }
    void set(int r, int c, const mpz_class& v) {
        if (v == 0) {
            if (row_[r].erase(c)) col_rows_[c].erase(r);
        } else {
            row_[r][c] = v;
            col_rows_[c].insert(r);
        }
    }
    void add_to(int r, int c, const mpz_class& delta) {
        if (delta == 0) return;
        auto it = row_[r].find(c);
        if (it == row_[r].end()) {
            row_[r][c] = delta;
            col_rows_[c].insert(r);
        } else {
            it->second += delta;
            if (it->second == 0) {
                row_[r].erase(it);
                col_rows_[c].erase(r);
            }
        }
    }

    const std::map<int, mpz_class>& row(int r) const { return row_[r]; }
    const std::set<int>& column_rows(int c) const { return col_rows_[c]; }

    long long nonzeros() const {
        long long n = 0;
        for (auto& r : row_) n += (long long)r.size();
        return n;
    }

    // this * other (used by tests to assert boundary-of-boundary vanishes)
    SparseIntMatrix multiply(const SparseIntMatrix& other) const;

  private:
    int rows_, cols_;
    std::vector<std::map<int, mpz_class>> row_;
    std::vector<std::set<int>> col_rows_;
};

struct SmithResult {
    std::vector<mpz_class> invariant_factors; // d1 | d2 | ... | dr, all positive
    int rank = 0;                             // = number of invariant factors
};

// Smith normal form by elimination with minimum-absolute-value pivoting.
// Returns the full list of invariant factors including leading 1s.
SmithResult smith_normal_form(const SparseIntMatrix& m);

// Rank over the rationals (exact).
int rank_over_q(const SparseIntMatrix& m);
// Rank over F_p, p a prime < 2^31.
int rank_mod_p(const SparseIntMatrix& m, long p);

} // namespace cmtk
