#pragma once

#include <cassert>
#include <optional>
#include <string>
#include <vector>

#include "conedim/polynomial.hpp"
#include "conedim/rational.hpp"

namespace conedim {

// Dense matrix over Q. Row-major, value semantics.
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, Rational(0)) {}
    RationalMatrix(size_t rows, size_t cols, std::vector<Rational> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != rows_ * cols_)
            throw DimensionMismatch("entry count does not match matrix shape");
    }

    static RationalMatrix identity(size_t n) {
        RationalMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
        if (rows.empty()) return RationalMatrix();
        RationalMatrix m(rows.size(), rows[0].size());
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw DimensionMismatch("ragged row list");
            for (size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const {
        for (const auto& x : e_) if (x != 0) return false;
        return true;
    }

    Rational& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const Rational& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    std::vector<Rational> row(size_t i) const {
        return std::vector<Rational>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
    }

    bool operator==(const RationalMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const RationalMatrix& o) const { return !(*this == o); }

    RationalMatrix operator+(const RationalMatrix& o) const {
        require_same_shape(o);
        RationalMatrix r = *this;
        for (size_t k = 0; k < e_.size(); ++k) r.e_[k] += o.e_[k];
        return r;
    }
    RationalMatrix operator-(const RationalMatrix& o) const {
        require_same_shape(o);
        RationalMatrix r = *this;
        for (size_t k = 0; k < e_.size(); ++k) r.e_[k] -= o.e_[k];
        return r;
    }
    RationalMatrix operator*(const Rational& a) const {
        RationalMatrix r = *this;
        for (auto& x : r.e_) x *= a;
        return r;
    }
    RationalMatrix operator*(const RationalMatrix& o) const {
        if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
        RationalMatrix r(rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                const Rational& a = at(i, k);
                if (a == 0) continue;
                for (size_t j = 0; j < o.cols_; ++j) {
                    const Rational& b = o.at(k, j);
                    if (b != 0) r.at(i, j) += a * b;
                }
            }
        return r;
    }

    std::vector<Rational> apply(const std::vector<Rational>& v) const {
        if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
        std::vector<Rational> r(rows_, Rational(0));
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
        return r;
    }

    RationalMatrix transpose() const {
        RationalMatrix r(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    Rational trace() const {
        Rational t(0);
        for (size_t i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
        return t;
    }

    RationalMatrix pow(unsigned k) const {
        RationalMatrix acc = identity(rows_), base = *this;
        while (k) {
            if (k & 1u) acc = acc * base;
            base = base * base;
            k >>= 1u;
        }
        return acc;
    }

    std::string str() const {
        std::string out;
        for (size_t i = 0; i < rows_; ++i) {
            out += i ? "; " : "[";
            for (size_t j = 0; j < cols_; ++j) {
                if (j) out += " ";
                out += to_string(at(i, j));
            }
        }
        return out + "]";
    }

private:
    void require_same_shape(const RationalMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionMismatch("matrix shape mismatch");
    }
    size_t rows_, cols_;
    std::vector<Rational> e_;
};

// In-place Gauss-Jordan to reduced row echelon form; returns pivot columns.
inline std::vector<size_t> rref_inplace(RationalMatrix& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t sel = r;
        while (sel < m.rows() && m.at(sel, c) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != r)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
        Rational inv = Rational(1) / m.at(r, c);
        for (size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rational f = m.at(i, c);
            for (size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline size_t rank(RationalMatrix m) { return rref_inplace(m).size(); }

// Basis of the right kernel {x : Mx = 0}, one vector per row.
inline RationalMatrix nullspace(RationalMatrix m) {
    size_t n = m.cols();
    std::vector<size_t> pivots = rref_inplace(m);
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> rows;
    for (size_t fc = 0; fc < n; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rational> v(n, Rational(0));
        v[fc] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, fc);
        rows.push_back(std::move(v));
    }
    if (rows.empty()) return RationalMatrix(0, n);
    return RationalMatrix::from_rows(rows);
}

inline Rational det(RationalMatrix m) {
    if (!m.is_square()) throw DimensionMismatch("determinant of non-square matrix");
    size_t n = m.rows();
    Rational d(1);
    for (size_t c = 0; c < n; ++c) {
        size_t sel = c;
        while (sel < n && m.at(sel, c) == 0) ++sel;
        if (sel == n) return Rational(0);
        if (sel != c) {
            for (size_t j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(c, j));
            d = -d;
        }
        d *= m.at(c, c);
        Rational inv = Rational(1) / m.at(c, c);
        for (size_t i = c + 1; i < n; ++i) {
            if (m.at(i, c) == 0) continue;
            Rational f = m.at(i, c) * inv;
            for (size_t j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return d;
}

inline std::optional<RationalMatrix> try_inverse(const RationalMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("inverse of non-square matrix");
    size_t n = m.rows();
    RationalMatrix aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    if (rref_inplace(aug).size() != n) return std::nullopt;
    RationalMatrix inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

inline RationalMatrix inverse(const RationalMatrix& m) {
    auto inv = try_inverse(m);
    if (!inv) throw DomainError("SingularMatrix", "matrix is not invertible");
    return *inv;
}

// Solve A x = b; nullopt when inconsistent. Free variables are set to zero.
inline std::optional<std::vector<Rational>> solve(const RationalMatrix& a,
                                                  const std::vector<Rational>& b) {
    if (b.size() != a.rows()) throw DimensionMismatch("solve shape mismatch");
    RationalMatrix aug(a.rows(), a.cols() + 1);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    std::vector<size_t> pivots = rref_inplace(aug);
    for (size_t r = 0; r < pivots.size(); ++r)
        if (pivots[r] == a.cols()) return std::nullopt;
    std::vector<Rational> x(a.cols(), Rational(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols());
    return x;
}

// Faddeev-LeVerrier: exact monic characteristic polynomial det(xI - M).
inline Polynomial charpoly(const RationalMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("charpoly of non-square matrix");
    size_t n = m.rows();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    RationalMatrix a = m;
    for (size_t k = 1; k <= n; ++k) {
        if (k > 1) a = m * a;
        Rational ck = -a.trace() / Rational(static_cast<long>(k));
        c[n - k] = ck;
        for (size_t i = 0; i < n; ++i) a.at(i, i) += ck;
    }
    return Polynomial(std::move(c));
}

// Evaluate a polynomial at a square matrix (Horner).
inline RationalMatrix eval_at_matrix(const Polynomial& p, const RationalMatrix& m) {
    size_t n = m.rows();
    RationalMatrix acc(n, n);
    for (int k = p.degree(); k >= 0; --k) {
        acc = acc * m;
        Rational a = p.coeff(k);
        if (a != 0)
            for (size_t i = 0; i < n; ++i) acc.at(i, i) += a;
    }
    return acc;
}

inline bool is_nilpotent_matrix(const RationalMatrix& m) {
    return m.pow(static_cast<unsigned>(m.rows())).is_zero();
}

} // namespace conedim
