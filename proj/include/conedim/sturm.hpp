#pragma once

#include <string>
#include <vector>

#include "conedim/polynomial.hpp"

namespace conedim {

// Sturm chain of p (with p squarefree-ized first, so counts are counts of
// distinct real roots).
inline std::vector<Polynomial> sturm_chain(const Polynomial& p) {
    std::vector<Polynomial> chain;
    Polynomial p0 = squarefree_part(p);
    if (p0.degree() <= 0) return chain;
    chain.push_back(p0);
    chain.push_back(p0.derivative());
    while (chain.back().degree() > 0) {
        Polynomial r = chain[chain.size() - 2].divmod(chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

inline int sign_variations_at(const std::vector<Polynomial>& chain, const Rational& x) {
    int var = 0, last = 0;
    for (const auto& q : chain) {
        int s = sgn(q.eval(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

inline int sign_variations_at_infinity(const std::vector<Polynomial>& chain, bool plus) {
    int var = 0, last = 0;
    for (const auto& q : chain) {
        if (q.is_zero()) continue;
        int s = sgn(q.leading());
        if (!plus && (q.degree() % 2 == 1)) s = -s;
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

// Number of distinct real roots in the open interval (a, b).
inline int count_real_roots_in(const Polynomial& p, const Rational& a, const Rational& b) {
    Polynomial sf = squarefree_part(p);
    if (sf.degree() <= 0) return 0;
    auto chain = sturm_chain(sf);
    int count = sign_variations_at(chain, a) - sign_variations_at(chain, b);
    // Sturm counts roots in (a, b]; drop b if it is a root.
    if (sf.eval(b) == 0) --count;
    return count;
}

inline int count_real_roots_positive(const Polynomial& p) {
    Polynomial sf = squarefree_part(p);
    if (sf.degree() <= 0) return 0;
    auto chain = sturm_chain(sf);
    int count = sign_variations_at(chain, Rational(0)) - sign_variations_at_infinity(chain, true);
    return count;
}

inline int count_real_roots_negative(const Polynomial& p) {
    Polynomial sf = squarefree_part(p);
    if (sf.degree() <= 0) return 0;
    auto chain = sturm_chain(sf);
    int count = sign_variations_at_infinity(chain, false) - sign_variations_at(chain, Rational(0));
    // (-inf, 0]: drop the root at 0 if present.
    if (sf.eval(Rational(0)) == 0) --count;
    return count;
}

// Exact classification of where the roots of a rational polynomial lie.
// Counts are with multiplicity; the invariant
//   zero + real_pos + real_neg + 2*(imag_pairs + other_pairs) = degree
// always holds.
struct RootLocationCertificate {
    int degree = 0;
    int zero_multiplicity = 0;
    int real_positive = 0;
    int real_negative = 0;
    int pure_imaginary_pairs = 0;
    int other_complex_pairs = 0;
    std::string method_trace;

    bool counts_consistent() const {
        return zero_multiplicity + real_positive + real_negative +
                   2 * (pure_imaginary_pairs + other_complex_pairs) ==
               degree;
    }
    bool all_roots_pure_imaginary() const {
        return zero_multiplicity + 2 * pure_imaginary_pairs == degree;
    }
    bool all_roots_real() const {
        return zero_multiplicity + real_positive + real_negative == degree;
    }
    bool has_nonzero_real_part() const {
        return real_positive + real_negative + other_complex_pairs > 0;
    }
};

// Real and imaginary parts of p(i*mu) as real polynomials in mu.
inline std::pair<Polynomial, Polynomial> split_at_imaginary_axis(const Polynomial& p) {
    std::vector<Rational> re(p.coeffs().size(), Rational(0));
    std::vector<Rational> im(p.coeffs().size(), Rational(0));
    for (int k = 0; k <= p.degree(); ++k) {
        Rational a = p.coeff(k);
        switch (k % 4) {
            case 0: re[k] = a; break;
            case 1: im[k] = a; break;
            case 2: re[k] = -a; break;
            case 3: im[k] = -a; break;
        }
    }
    return {Polynomial(std::move(re)), Polynomial(std::move(im))};
}

inline RootLocationCertificate root_location_certificate(const Polynomial& p) {
    if (p.is_zero()) throw DomainError("ZeroPolynomial", "certificate of the zero polynomial");
    RootLocationCertificate cert;
    cert.degree = p.degree();

    // Strip the root at zero.
    std::vector<Rational> cs = p.coeffs();
    int zero_mult = 0;
    while (zero_mult < static_cast<int>(cs.size()) && cs[zero_mult] == 0) ++zero_mult;
    cert.zero_multiplicity = zero_mult;
    Polynomial q(std::vector<Rational>(cs.begin() + zero_mult, cs.end()));
    cert.method_trace = "deg " + std::to_string(cert.degree) + "; zero^" + std::to_string(zero_mult);

    for (const auto& [f, mult] : squarefree_decomposition(q)) {
        int pos = count_real_roots_positive(f);
        int neg = count_real_roots_negative(f);
        // Pure imaginary pairs of the squarefree factor: common positive real
        // roots mu of Re f(i mu) and Im f(i mu), each giving the pair +-i*mu.
        auto [re, im] = split_at_imaginary_axis(f);
        Polynomial g = gcd(re, im);
        int imag = (g.degree() > 0) ? count_real_roots_positive(g) : 0;
        int other2 = f.degree() - pos - neg - 2 * imag;
        cert.real_positive += mult * pos;
        cert.real_negative += mult * neg;
        cert.pure_imaginary_pairs += mult * imag;
        cert.other_complex_pairs += mult * (other2 / 2);
        cert.method_trace += "; sf deg " + std::to_string(f.degree()) + "^" + std::to_string(mult) +
                             " sturm(+)=" + std::to_string(pos) + " sturm(-)=" + std::to_string(neg) +
                             " imag=" + std::to_string(imag);
    }
    return cert;
}

// Exact test that every root lies on the imaginary axis, implemented without
// the certificate machinery: strip x^m, require only even-degree terms, then
// require all roots of r (where q(x) = r(x^2)) real and negative.
inline bool all_roots_pure_imaginary(const Polynomial& p) {
    if (p.is_zero()) throw DomainError("ZeroPolynomial", "pure-imaginary test of zero polynomial");
    std::vector<Rational> cs = p.coeffs();
    size_t m = 0;
    while (m < cs.size() && cs[m] == 0) ++m;
    std::vector<Rational> q(cs.begin() + m, cs.end());
    for (size_t k = 1; k < q.size(); k += 2)
        if (q[k] != 0) return false;
    std::vector<Rational> r;
    for (size_t k = 0; k < q.size(); k += 2) r.push_back(q[k]);
    Polynomial rp{std::move(r)};
    if (rp.degree() <= 0) return true;
    if (rp.eval(Rational(0)) == 0) return false; // cannot happen after stripping x^m
    // Repeated roots are fine; compare distinct counts on the squarefree part.
    Polynomial sf = squarefree_part(rp);
    return count_real_roots_negative(sf) == sf.degree();
}

inline bool all_roots_real(const Polynomial& p) {
    RootLocationCertificate c = root_location_certificate(p);
    return c.all_roots_real();
}

} // namespace conedim
