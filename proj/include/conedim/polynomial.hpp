#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "conedim/rational.hpp"

namespace conedim {

// Univariate polynomial over Q, coefficients lowest degree first, trailing
// zeros stripped. The zero polynomial has an empty coefficient vector and
// degree() == -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Polynomial constant(const Rational& a) { return Polynomial({a}); }
    static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rational(0);
    }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial operator+(const Polynomial& o) const {
        std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return Polynomial(std::move(r));
    }
    Polynomial operator-(const Polynomial& o) const {
        std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
        return Polynomial(std::move(r));
    }
    Polynomial operator-() const {
        std::vector<Rational> r = c_;
        for (auto& a : r) a = -a;
        return Polynomial(std::move(r));
    }
    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return Polynomial();
        std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return Polynomial(std::move(r));
    }
    Polynomial operator*(const Rational& a) const {
        std::vector<Rational> r = c_;
        for (auto& x : r) x *= a;
        return Polynomial(std::move(r));
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        std::vector<Rational> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
        return Polynomial(std::move(r));
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return *this * (Rational(1) / leading());
    }

    // Euclidean division; denominator-heavy but exact.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        if (d.is_zero()) throw DomainError("DivisionByZero", "polynomial division by zero");
        std::vector<Rational> rem = c_;
        std::vector<Rational> quo;
        int dd = d.degree();
        if (degree() >= dd) quo.assign(degree() - dd + 1, Rational(0));
        while (static_cast<int>(rem.size()) - 1 >= dd) {
            int k = static_cast<int>(rem.size()) - 1 - dd;
            Rational f = rem.back() / d.leading();
            quo[k] = f;
            for (int i = 0; i <= dd; ++i) rem[k + i] -= f * d.coeff(i);
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
        }
        return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            Rational a = coeff(k);
            if (a == 0) continue;
            if (!out.empty()) out += (a > 0) ? " + " : " - ";
            else if (a < 0) out += "-";
            Rational mag = rabs(a);
            bool unit = (mag == 1) && k > 0;
            if (!unit) out += to_string(mag);
            if (k > 0) {
                if (!unit) out += "*";
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

inline Polynomial squarefree_part(const Polynomial& p) {
    if (p.degree() <= 0) return p.monic();
    Polynomial g = gcd(p, p.derivative());
    return p.divmod(g).first.monic();
}

// Yun's algorithm: p = prod f_i^i with the f_i squarefree and pairwise
// coprime; returned as (f_i, i) for nonconstant f_i.
inline std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p) {
    std::vector<std::pair<Polynomial, int>> out;
    if (p.degree() <= 0) return out;
    Polynomial a = p.monic();
    Polynomial g = gcd(a, a.derivative());
    if (g.degree() == 0) {
        out.emplace_back(a, 1);
        return out;
    }
    Polynomial w = a.divmod(g).first;
    Polynomial y = a.derivative().divmod(g).first;
    Polynomial z = y - w.derivative();
    int i = 1;
    while (!(w.degree() == 0)) {
        Polynomial f = gcd(w, z);
        if (f.degree() > 0) out.emplace_back(f.monic(), i);
        w = w.divmod(f).first;
        y = z.divmod(f).first;
        z = y - w.derivative();
        ++i;
    }
    return out;
}

// Extended Euclid: returns (u, v) with u*a + v*b = gcd (monic).
inline std::pair<Polynomial, Polynomial> extended_gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial r0 = a, r1 = b;
    Polynomial s0 = Polynomial::constant(Rational(1)), s1;
    Polynomial t0, t1 = Polynomial::constant(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = r1; r1 = r;
        Polynomial s2 = s0 - q * s1;
        s0 = s1; s1 = s2;
        Polynomial t2 = t0 - q * t1;
        t0 = t1; t1 = t2;
    }
    if (!r0.is_zero()) {
        Rational lc = r0.leading();
        s0 = s0 * (Rational(1) / lc);
        t0 = t0 * (Rational(1) / lc);
    }
    return {s0, t0};
}

} // namespace conedim
