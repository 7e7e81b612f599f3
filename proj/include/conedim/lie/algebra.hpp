#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conedim/lie/subspace.hpp"
#include "conedim/matrix.hpp"

namespace conedim::lie {

// Structural annotations for inputs whose invariants are not derivable from
// the structure constants alone (Levi data, georank, compact dimensions).
struct StructuralAnnotations {
    bool simply_connected = true;
    int max_compact_dim = 0;
    std::optional<Subspace> levi_noncompact;
    std::optional<std::pair<int, int>> levi_georank; // (real rank r, centre Q-rank z)
    std::vector<std::vector<Rational>> split_torus;  // coordinate vectors, ad-semisimple
};

// Lie algebra over Q given by structure constants on a fixed basis.
// Brackets are stored for i < j only; antisymmetry is implicit.
class LieAlgebra {
public:
    using BracketTable = std::map<std::pair<size_t, size_t>, std::vector<Rational>>;

    LieAlgebra() : dim_(0) {}

    size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return names_; }
    const BracketTable& table() const { return table_; }
    const std::optional<StructuralAnnotations>& annotations() const { return ann_; }
    void set_annotations(StructuralAnnotations a) { ann_ = std::move(a); }

    std::vector<Rational> bracket_basis(size_t i, size_t j) const {
        if (i == j) return zero();
        bool flip = i > j;
        if (flip) std::swap(i, j);
        auto it = table_.find({i, j});
        if (it == table_.end()) return zero();
        std::vector<Rational> v = it->second;
        if (flip)
            for (auto& x : v) x = -x;
        return v;
    }

    std::vector<Rational> bracket(const std::vector<Rational>& x,
                                  const std::vector<Rational>& y) const {
        std::vector<Rational> r = zero();
        for (size_t i = 0; i < dim_; ++i) {
            if (x[i] == 0) continue;
            for (size_t j = 0; j < dim_; ++j) {
                if (y[j] == 0 || i == j) continue;
                std::vector<Rational> b = bracket_basis(i, j);
                Rational c = x[i] * y[j];
                for (size_t k = 0; k < dim_; ++k)
                    if (b[k] != 0) r[k] += c * b[k];
            }
        }
        return r;
    }

    // ad(x): column j holds the coordinates of [x, e_j].
    RationalMatrix ad(const std::vector<Rational>& x) const {
        RationalMatrix m(dim_, dim_);
        for (size_t j = 0; j < dim_; ++j) {
            std::vector<Rational> col = bracket(x, unit(j));
            for (size_t i = 0; i < dim_; ++i) m.at(i, j) = col[i];
        }
        return m;
    }
    RationalMatrix ad_basis(size_t i) const { return ad(unit(i)); }

    std::vector<Rational> unit(size_t i) const {
        std::vector<Rational> v = zero();
        v[i] = 1;
        return v;
    }
    std::vector<Rational> zero() const { return std::vector<Rational>(dim_, Rational(0)); }

    // Validation entry point: checks the Jacobi identity on all basis
    // triples and returns the canonical object.
    static LieAlgebra validate(size_t dim, const BracketTable& raw,
                               std::vector<std::string> names = {}) {
        LieAlgebra g;
        g.dim_ = dim;
        if (names.empty())
            for (size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
        if (names.size() != dim)
            throw DimensionMismatch("basis name count does not match dimension");
        g.names_ = std::move(names);
        for (const auto& [key, coords] : raw) {
            auto [i, j] = key;
            if (i >= dim || j >= dim)
                throw DimensionMismatch("bracket index out of range");
            if (coords.size() != dim)
                throw DimensionMismatch("bracket value has wrong length");
            if (i == j) {
                for (const auto& c : coords)
                    if (c != 0) throw JacobiViolation("[e,e] must vanish");
                continue;
            }
            std::vector<Rational> v = coords;
            size_t a = i, b = j;
            if (a > b) {
                std::swap(a, b);
                for (auto& c : v) c = -c;
            }
            bool nonzero = false;
            for (const auto& c : v) nonzero = nonzero || (c != 0);
            if (nonzero) g.table_[{a, b}] = std::move(v);
        }
        g.check_jacobi();
        return g;
    }

    // The Jacobi residual for a basis triple (zero when the identity holds).
    std::vector<Rational> jacobi_residual(size_t i, size_t j, size_t k) const {
        std::vector<Rational> r = bracket(bracket_basis(i, j), unit(k));
        std::vector<Rational> s = bracket(bracket_basis(j, k), unit(i));
        std::vector<Rational> t = bracket(bracket_basis(k, i), unit(j));
        for (size_t a = 0; a < dim_; ++a) r[a] += s[a] + t[a];
        return r;
    }

private:
    void check_jacobi() const {
        for (size_t i = 0; i < dim_; ++i)
            for (size_t j = i + 1; j < dim_; ++j)
                for (size_t k = j + 1; k < dim_; ++k) {
                    std::vector<Rational> res = jacobi_residual(i, j, k);
                    for (const auto& c : res)
                        if (c != 0) {
                            std::string msg = "triple (" + names_[i] + "," + names_[j] + "," +
                                              names_[k] + ") residual (";
                            for (size_t a = 0; a < dim_; ++a)
                                msg += (a ? "," : "") + to_string(res[a]);
                            throw JacobiViolation(msg + ")");
                        }
                }
    }

    size_t dim_;
    std::vector<std::string> names_;
    BracketTable table_;
    std::optional<StructuralAnnotations> ann_;
};

// Span of [a, b] for subspaces a, b.
inline Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
    std::vector<std::vector<Rational>> rows;
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < b.dim(); ++j)
            rows.push_back(g.bracket(a.basis_vector(i), b.basis_vector(j)));
    return Subspace::span(g.dim(), rows);
}

inline bool is_ideal(const LieAlgebra& g, const Subspace& s) {
    return s.contains(bracket_span(g, Subspace::full(g.dim()), s));
}

// Matrix of ad(x) restricted to an invariant subspace, in the subspace basis.
inline RationalMatrix restrict_ad(const LieAlgebra& g, const std::vector<Rational>& x,
                                  const Subspace& v) {
    RationalMatrix m(v.dim(), v.dim());
    for (size_t j = 0; j < v.dim(); ++j) {
        std::vector<Rational> img = g.bracket(x, v.basis_vector(j));
        auto coords = v.coordinates(img);
        if (!coords)
            throw DomainError("NotInvariant", "subspace is not invariant under ad x");
        for (size_t i = 0; i < v.dim(); ++i) m.at(i, j) = (*coords)[i];
    }
    return m;
}

// Induced algebra on a subalgebra, with the projection of coordinates.
inline LieAlgebra restrict_to_subalgebra(const LieAlgebra& g, const Subspace& h) {
    LieAlgebra::BracketTable table;
    for (size_t i = 0; i < h.dim(); ++i)
        for (size_t j = i + 1; j < h.dim(); ++j) {
            std::vector<Rational> br = g.bracket(h.basis_vector(i), h.basis_vector(j));
            auto coords = h.coordinates(br);
            if (!coords) throw DomainError("NotASubalgebra", "bracket escapes the subspace");
            table[{i, j}] = *coords;
        }
    return LieAlgebra::validate(h.dim(), table);
}

} // namespace conedim::lie
