#pragma once

#include <vector>

#include "conedim/matrix.hpp"

namespace conedim::lie {

// Subspace of Q^n in canonical form: rows of `basis` are a reduced row
// echelon basis with zero rows dropped, so equal subspaces compare equal.
class Subspace {
public:
    Subspace() : ambient_(0) {}
    explicit Subspace(size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

    static Subspace span(size_t ambient_dim, const std::vector<std::vector<Rational>>& vectors) {
        Subspace s(ambient_dim);
        if (vectors.empty()) return s;
        RationalMatrix m = RationalMatrix::from_rows(vectors);
        if (m.cols() != ambient_dim) throw DimensionMismatch("spanning vectors of wrong length");
        s.basis_ = canonicalize(m);
        return s;
    }
    static Subspace span_rows(const RationalMatrix& m) {
        Subspace s(m.cols());
        s.basis_ = canonicalize(m);
        return s;
    }
    static Subspace full(size_t n) { return span_rows(RationalMatrix::identity(n)); }

    size_t ambient_dim() const { return ambient_; }
    size_t dim() const { return basis_.rows(); }
    const RationalMatrix& basis() const { return basis_; }
    std::vector<Rational> basis_vector(size_t i) const { return basis_.row(i); }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    bool contains(const std::vector<Rational>& v) const {
        // Reduce v against the echelon basis.
        std::vector<Rational> w = v;
        for (size_t r = 0; r < basis_.rows(); ++r) {
            size_t lead = 0;
            while (lead < ambient_ && basis_.at(r, lead) == 0) ++lead;
            if (lead == ambient_) continue;
            if (w[lead] != 0) {
                Rational f = w[lead]; // pivot is 1
                for (size_t j = 0; j < ambient_; ++j) w[j] -= f * basis_.at(r, j);
            }
        }
        for (const auto& x : w)
            if (x != 0) return false;
        return true;
    }
    bool contains(const Subspace& o) const {
        for (size_t i = 0; i < o.dim(); ++i)
            if (!contains(o.basis_vector(i))) return false;
        return true;
    }

    Subspace sum(const Subspace& o) const {
        std::vector<std::vector<Rational>> rows;
        for (size_t i = 0; i < dim(); ++i) rows.push_back(basis_vector(i));
        for (size_t i = 0; i < o.dim(); ++i) rows.push_back(o.basis_vector(i));
        return span(ambient_, rows);
    }

    // Intersection via the kernel of the stacked-coefficients map.
    Subspace intersect(const Subspace& o) const {
        if (dim() == 0 || o.dim() == 0) return Subspace(ambient_);
        // x = a^T basis = b^T obasis; solve [basis^T | -obasis^T] (a;b) = 0.
        RationalMatrix m(ambient_, dim() + o.dim());
        for (size_t j = 0; j < dim(); ++j)
            for (size_t i = 0; i < ambient_; ++i) m.at(i, j) = basis_.at(j, i);
        for (size_t j = 0; j < o.dim(); ++j)
            for (size_t i = 0; i < ambient_; ++i) m.at(i, dim() + j) = -o.basis_.at(j, i);
        RationalMatrix ker = nullspace(m);
        std::vector<std::vector<Rational>> rows;
        for (size_t r = 0; r < ker.rows(); ++r) {
            std::vector<Rational> v(ambient_, Rational(0));
            for (size_t j = 0; j < dim(); ++j)
                for (size_t i = 0; i < ambient_; ++i) v[i] += ker.at(r, j) * basis_.at(j, i);
            rows.push_back(std::move(v));
        }
        return span(ambient_, rows);
    }

    // Coordinates of v in the row basis; nullopt when v is outside.
    std::optional<std::vector<Rational>> coordinates(const std::vector<Rational>& v) const {
        if (dim() == 0) {
            for (const auto& x : v)
                if (x != 0) return std::nullopt;
            return std::vector<Rational>{};
        }
        return solve(basis_.transpose(), v);
    }

    // Complete the basis to all of Q^n with unit vectors (greedy).
    std::vector<std::vector<Rational>> complement_basis() const {
        std::vector<std::vector<Rational>> current;
        for (size_t i = 0; i < dim(); ++i) current.push_back(basis_vector(i));
        std::vector<std::vector<Rational>> out;
        size_t have = dim();
        for (size_t j = 0; j < ambient_ && have < ambient_; ++j) {
            std::vector<Rational> e(ambient_, Rational(0));
            e[j] = 1;
            auto trial = current;
            trial.push_back(e);
            if (rank(RationalMatrix::from_rows(trial)) > have) {
                current.push_back(e);
                out.push_back(std::move(e));
                ++have;
            }
        }
        return out;
    }

    // Complement of `inner` within this subspace, drawn from this basis.
    std::vector<std::vector<Rational>> complement_within(const Subspace& inner) const {
        std::vector<std::vector<Rational>> current;
        for (size_t i = 0; i < inner.dim(); ++i) current.push_back(inner.basis_vector(i));
        std::vector<std::vector<Rational>> out;
        size_t have = inner.dim();
        for (size_t i = 0; i < dim() && have < dim(); ++i) {
            auto trial = current;
            trial.push_back(basis_vector(i));
            if (rank(RationalMatrix::from_rows(trial)) > have) {
                current.push_back(basis_vector(i));
                out.push_back(basis_vector(i));
                ++have;
            }
        }
        return out;
    }

private:
    static RationalMatrix canonicalize(RationalMatrix m) {
        size_t r = rref_inplace(m).size();
        RationalMatrix out(r, m.cols());
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
        return out;
    }

    size_t ambient_;
    RationalMatrix basis_;
};

} // namespace conedim::lie
