#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "monolab/errors.hpp"
#include "monolab/intpoly.hpp"

namespace monolab {

// Row-major integer matrix.
class IntMatrix {
public:
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, mpz_class(0)) {
        if (rows <= 0 || cols <= 0) raise(errc::bad_input, "matrix dimensions must be positive");
    }
    IntMatrix(int rows, int cols, std::vector<mpz_class> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (rows <= 0 || cols <= 0 || e_.size() != static_cast<size_t>(rows) * cols)
            raise(errc::bad_input, "matrix entries/dimension mismatch");
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    mpz_class& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const mpz_class& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const std::vector<mpz_class>& entries() const { return e_; }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

private:
    int rows_, cols_;
    std::vector<mpz_class> e_;
};

inline int cmpabs(const mpz_class& a, const mpz_class& b) {
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

// Row-style Hermite normal form: integer row operations only, pivots
// positive, entries above each pivot reduced into [0, pivot), zero rows
// sunk to the bottom. Row span over Z is preserved.
inline IntMatrix hnf(IntMatrix m) {
    int n = m.rows(), d = m.cols();
    int r = 0;
    for (int c = 0; c < d && r < n; ++c) {
        // clear column c below row r down to a single nonzero entry
        while (true) {
            int piv = -1;
            for (int i = r; i < n; ++i)
                if (m.at(i, c) != 0 && (piv < 0 || cmpabs(m.at(i, c), m.at(piv, c)) < 0)) piv = i;
            if (piv < 0) break;
            bool others = false;
            for (int i = r; i < n; ++i) {
                if (i == piv || m.at(i, c) == 0) continue;
                others = true;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), m.at(i, c).get_mpz_t(), m.at(piv, c).get_mpz_t());
                for (int j = 0; j < d; ++j) m.at(i, j) -= q * m.at(piv, j);
            }
            if (!others) {
                // move pivot row into place, make positive, reduce above
                if (piv != r)
                    for (int j = 0; j < d; ++j) swap(m.at(piv, j), m.at(r, j));
                if (m.at(r, c) < 0)
                    for (int j = 0; j < d; ++j) m.at(r, j) = -m.at(r, j);
                for (int i = 0; i < r; ++i) {
                    mpz_class q;
                    mpz_fdiv_q(q.get_mpz_t(), m.at(i, c).get_mpz_t(), m.at(r, c).get_mpz_t());
                    if (q != 0)
                        for (int j = 0; j < d; ++j) m.at(i, j) -= q * m.at(r, j);
                }
                ++r;
                break;
            }
        }
    }
    return m;
}

// --- exact rational linear algebra ----------------------------------------

// Row-major rational matrix, just enough for the solves this project needs.
class RatMatrix {
public:
    RatMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, mpq_class(0)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    mpq_class& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const mpq_class& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    // Reduced row echelon form in place; returns pivot columns.
    std::vector<int> rref() {
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int piv = -1;
            for (int i = r; i < rows_; ++i)
                if (at(i, c) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) continue;
            if (piv != r)
                for (int j = 0; j < cols_; ++j) std::swap(at(piv, j), at(r, j));
            mpq_class inv = mpq_class(1) / at(r, c);
            for (int j = c; j < cols_; ++j) at(r, j) *= inv;
            for (int i = 0; i < rows_; ++i) {
                if (i == r || at(i, c) == 0) continue;
                mpq_class f = at(i, c);
                for (int j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

private:
    int rows_, cols_;
    std::vector<mpq_class> e_;
};

// Solves A x = b exactly; returns nullopt when inconsistent. A may be any
// shape; when the solution is not unique the free variables are set to 0.
inline std::optional<std::vector<mpq_class>> solve_linear(const RatMatrix& A,
                                                          const std::vector<mpq_class>& b) {
    int n = A.rows(), m = A.cols();
    RatMatrix aug(n, m + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, m) = b[i];
    }
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == m) return std::nullopt; // 0 = 1 row
    std::vector<mpq_class> x(m, mpq_class(0));
    for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(static_cast<int>(k), m);
    return x;
}

// Basis of the nullspace of A (columns of A are the unknowns).
inline std::vector<std::vector<mpq_class>> nullspace(RatMatrix A) {
    int m = A.cols();
    auto pivots = A.rref();
    std::vector<bool> is_pivot(m, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<mpq_class>> basis;
    for (int free = 0; free < m; ++free) {
        if (is_pivot[free]) continue;
        std::vector<mpq_class> v(m, mpq_class(0));
        v[free] = 1;
        for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -A.at(static_cast<int>(k), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace monolab
