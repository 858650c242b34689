#pragma once

#include "ocoh/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

namespace ocoh {

using Vec = std::vector<Rational>;

inline bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

inline Vec zero_vec(int n) { return Vec(static_cast<size_t>(n)); }

inline Vec& add_scaled(Vec& dst, const Rational& c, const Vec& src) {
    for (size_t i = 0; i < dst.size(); ++i) dst[i] += c * src[i];
    return dst;
}

/// Sparse matrix over Rational. No stored zero entries.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative shape");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, Rational(1));
        return m;
    }

    static Matrix from_rows(const std::vector<Vec>& rows, int cols) {
        Matrix m(static_cast<int>(rows.size()), cols);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(rows[i].size()) != cols)
                throw std::invalid_argument("Matrix::from_rows: ragged input");
            for (int j = 0; j < cols; ++j) m.set(static_cast<int>(i), j, rows[i][j]);
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, const Rational& v) {
        check_index(r, c);
        if (v.is_zero())
            data_[r].erase(c);
        else
            data_[r][c] = v;
    }

    void add_to(int r, int c, const Rational& v) {
        check_index(r, c);
        auto it = data_[r].find(c);
        if (it == data_[r].end()) {
            if (!v.is_zero()) data_[r][c] = v;
            return;
        }
        it->second += v;
        if (it->second.is_zero()) data_[r].erase(it);
    }

    Rational at(int r, int c) const {
        check_index(r, c);
        auto it = data_[r].find(c);
        return it == data_[r].end() ? Rational(0) : it->second;
    }

    const std::map<int, Rational>& row(int r) const { return data_[r]; }

    size_t nnz() const {
        size_t n = 0;
        for (const auto& r : data_) n += r.size();
        return n;
    }

    bool is_zero() const { return nnz() == 0; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (const auto& [c, v] : data_[r]) t.set(c, r, v);
        return t;
    }

    Vec apply(const Vec& x) const {
        if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("Matrix::apply: size mismatch");
        Vec y = zero_vec(rows_);
        for (int r = 0; r < rows_; ++r)
            for (const auto& [c, v] : data_[r]) y[r] += v * x[c];
        return y;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Matrix::operator*: shape mismatch");
        Matrix p(rows_, o.cols_);
        for (int r = 0; r < rows_; ++r)
            for (const auto& [k, v] : data_[r])
                for (const auto& [c, w] : o.data_[k]) p.add_to(r, c, v * w);
        return p;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    void check_index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::invalid_argument("Matrix: index out of range");
    }

    int rows_, cols_;
    std::vector<std::map<int, Rational>> data_;
};

namespace detail {

/// Integer row echelon form, fraction-free: cross-multiplication updates with
/// content (gcd) normalization per row, pivots picked by a Markowitz sparsity
/// score. Only ever exact integer arithmetic.
struct Echelon {
    int cols = 0;
    int rank = 0;
    std::vector<std::map<int, mpz_class>> rows; // echelon rows, sorted by pivot column
    std::vector<int> pivot_cols;                // pivot column of rows[i]
};

inline void normalize_content(std::map<int, mpz_class>& row) {
    mpz_class g = 0;
    for (const auto& [c, v] : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1)
        for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

/// pivot_col_limit restricts pivot choice to columns < limit (used by solve to
/// keep the augmented column pivot-free); -1 means no restriction.
inline Echelon echelon_form(const Matrix& m, int pivot_col_limit = -1) {
    const int limit = pivot_col_limit < 0 ? m.cols() : pivot_col_limit;
    std::vector<std::map<int, mpz_class>> work;
    work.reserve(static_cast<size_t>(m.rows()));
    for (int r = 0; r < m.rows(); ++r) {
        std::map<int, mpz_class> row;
        mpz_class lcm = 1;
        for (const auto& [c, v] : m.row(r)) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.den().get_mpz_t());
        for (const auto& [c, v] : m.row(r)) row[c] = v.num() * (lcm / v.den());
        normalize_content(row);
        if (!row.empty()) work.push_back(std::move(row));
    }

    Echelon out;
    out.cols = m.cols();
    std::vector<bool> used(work.size(), false);
    size_t remaining = work.size();

    while (remaining > 0) {
        // count column occupancy among unused rows, then pick the nonzero entry
        // minimizing (row_nnz - 1) * (col_count - 1); ties break deterministically
        std::map<int, int> col_count;
        for (size_t i = 0; i < work.size(); ++i) {
            if (used[i]) continue;
            for (const auto& [c, v] : work[i])
                if (c < limit) ++col_count[c];
        }
        long best_score = -1;
        size_t best_row = 0;
        int best_col = -1;
        for (size_t i = 0; i < work.size(); ++i) {
            if (used[i]) continue;
            for (const auto& [c, v] : work[i]) {
                if (c >= limit) continue;
                long score = static_cast<long>(work[i].size() - 1) * (col_count[c] - 1);
                if (best_col < 0 || score < best_score ||
                    (score == best_score && (c < best_col || (c == best_col && i < best_row)))) {
                    best_score = score;
                    best_row = i;
                    best_col = c;
                }
            }
        }
        if (best_col < 0) break; // only augmented-column entries remain

        used[best_row] = true;
        --remaining;
        const auto pivot_row = work[best_row];
        const mpz_class p = pivot_row.at(best_col);
        out.rows.push_back(pivot_row);
        out.pivot_cols.push_back(best_col);

        for (size_t i = 0; i < work.size(); ++i) {
            if (used[i]) continue;
            auto it = work[i].find(best_col);
            if (it == work[i].end()) continue;
            const mpz_class c = it->second;
            std::map<int, mpz_class> next;
            for (const auto& [col, v] : work[i]) {
                mpz_class nv = p * v;
                auto pit = pivot_row.find(col);
                if (pit != pivot_row.end()) nv -= c * pit->second;
                if (nv != 0) next[col] = std::move(nv);
            }
            for (const auto& [col, v] : pivot_row) {
                if (work[i].count(col)) continue;
                mpz_class nv = -c * v;
                if (nv != 0) next[col] = std::move(nv);
            }
            normalize_content(next);
            if (next.empty()) {
                used[i] = true;
                --remaining;
                work[i].clear();
            } else {
                work[i] = std::move(next);
            }
        }
    }

    // leftover unused rows are either empty or live purely in the augmented block
    for (size_t i = 0; i < work.size(); ++i) {
        if (!used[i] && !work[i].empty()) {
            out.rows.push_back(work[i]);
            out.pivot_cols.push_back(work[i].begin()->first);
        }
    }

    // rows stay in pivot-selection order: row k can only reference pivot
    // columns of rows selected after it, so back-substitution runs bottom-up
    out.rank = 0;
    for (int pc : out.pivot_cols)
        if (pc < limit) ++out.rank;
    return out;
}

} // namespace detail

inline int rank(const Matrix& m) { return detail::echelon_form(m).rank; }

/// A linear subspace of k^ambient_dim, held as an independent basis.
class Subspace {
public:
    Subspace() : ambient_dim_(0) {}
    Subspace(int ambient_dim, std::vector<Vec> basis) : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
        for (const auto& v : basis_)
            if (static_cast<int>(v.size()) != ambient_dim_)
                throw std::invalid_argument("Subspace: basis vector of wrong length");
        if (!basis_.empty()) {
            Matrix m = Matrix::from_rows(basis_, ambient_dim_);
            if (rank(m) != static_cast<int>(basis_.size()))
                throw std::invalid_argument("Subspace: basis is linearly dependent");
        }
    }

    int ambient_dim() const { return ambient_dim_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Vec>& basis() const { return basis_; }

private:
    int ambient_dim_;
    std::vector<Vec> basis_;
};

/// Basis of { v : m v = 0 }; each returned vector is re-verified against m.
inline Subspace kernel_basis(const Matrix& m) {
    auto ech = detail::echelon_form(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int pc : ech.pivot_cols) is_pivot[pc] = true;

    std::vector<Vec> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec x = zero_vec(m.cols());
        x[f] = Rational(1);
        for (int i = static_cast<int>(ech.rows.size()) - 1; i >= 0; --i) {
            const int pc = ech.pivot_cols[i];
            Rational s(0);
            for (const auto& [c, v] : ech.rows[i])
                if (c != pc) s += Rational(mpz_class(v)) * x[c];
            x[pc] = -s / Rational(mpz_class(ech.rows[i].at(pc)));
        }
        if (!is_zero_vec(m.apply(x))) throw std::logic_error("kernel_basis: verification failed");
        basis.push_back(std::move(x));
    }
    return Subspace(m.cols(), std::move(basis));
}

/// Some x with m x = b, if b lies in the image of m. The result is re-verified.
inline std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (int r = 0; r < m.rows(); ++r) {
        for (const auto& [c, v] : m.row(r)) aug.set(r, c, v);
        aug.set(r, m.cols(), b[r]);
    }
    auto ech = detail::echelon_form(aug, m.cols());
    for (size_t i = 0; i < ech.rows.size(); ++i)
        if (ech.pivot_cols[i] >= m.cols()) return std::nullopt; // row (0 ... 0 | nonzero)

    Vec x = zero_vec(m.cols());
    for (int i = static_cast<int>(ech.rows.size()) - 1; i >= 0; --i) {
        const int pc = ech.pivot_cols[i];
        Rational s(0);
        for (const auto& [c, v] : ech.rows[i]) {
            if (c == pc) continue;
            Rational coef = Rational(mpz_class(v));
            s += (c == m.cols()) ? -coef : coef * x[c];
        }
        x[pc] = -s / Rational(mpz_class(ech.rows[i].at(pc)));
    }
    if (m.apply(x) != b) throw std::logic_error("solve: verification failed");
    return x;
}

/// dim(cycles) - dim(boundaries), after verifying boundaries lie inside cycles.
inline int quotient_dim(const Subspace& cycles, const Subspace& boundaries) {
    if (cycles.ambient_dim() != boundaries.ambient_dim())
        throw std::invalid_argument("quotient_dim: ambient dimensions differ");
    std::vector<Vec> all = cycles.basis();
    for (const auto& v : boundaries.basis()) all.push_back(v);
    Matrix stacked = Matrix::from_rows(all, cycles.ambient_dim());
    if (rank(stacked) != cycles.dim())
        throw std::logic_error("quotient_dim: boundaries not contained in cycles");
    return cycles.dim() - boundaries.dim();
}

} // namespace ocoh
