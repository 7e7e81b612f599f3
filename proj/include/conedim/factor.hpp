#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "conedim/polynomial.hpp"
#include "conedim/rational.hpp"

namespace conedim {
namespace detail {

// ---------------------------------------------------------------------------
// Dense integer polynomials, lowest degree first.
// ---------------------------------------------------------------------------

using ZPoly = std::vector<BigInt>;

inline void ztrim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}
inline int zdeg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

inline ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

inline BigInt zcontent(const ZPoly& f) {
    BigInt g(0);
    for (const auto& c : f) g = boost::multiprecision::gcd(g, c);
    return g;
}

inline ZPoly zprimitive(ZPoly f) {
    BigInt g = zcontent(f);
    if (g > 1)
        for (auto& c : f) c /= g;
    if (!f.empty() && f.back() < 0)
        for (auto& c : f) c = -c;
    return f;
}

// Exact division test: returns quotient when divisor divides evenly over Z.
inline bool zdivide_exact(const ZPoly& f, const ZPoly& d, ZPoly& quo) {
    ZPoly rem = f;
    ztrim(rem);
    quo.assign(rem.size() >= d.size() ? rem.size() - d.size() + 1 : 0, BigInt(0));
    while (zdeg(rem) >= zdeg(d)) {
        if (rem.back() % d.back() != 0) return false;
        BigInt q = rem.back() / d.back();
        int k = zdeg(rem) - zdeg(d);
        quo[k] = q;
        for (int i = 0; i <= zdeg(d); ++i) rem[k + i] -= q * d[i];
        ztrim(rem);
    }
    return rem.empty();
}

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x] for a small prime p (fits in int64).
// ---------------------------------------------------------------------------

using PPoly = std::vector<long long>;

inline void ptrim(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}
inline long long pinv(long long a, long long p) {
    long long t = 0, newt = 1, r = p, newr = ((a % p) + p) % p;
    while (newr != 0) {
        long long q = r / newr;
        long long tmpt = t - q * newt;
        t = newt;
        newt = tmpt;
        long long tmpr = r - q * newr;
        r = newr;
        newr = tmpr;
    }
    return ((t % p) + p) % p;
}

inline PPoly pmod_of(const ZPoly& f, long long p) {
    PPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i)
        r[i] = static_cast<long long>(((f[i] % p) + p) % p);
    ptrim(r);
    return r;
}

inline PPoly pmul(const PPoly& a, const PPoly& b, long long p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    ptrim(r);
    return r;
}

inline PPoly prem(PPoly f, const PPoly& d, long long p) {
    ptrim(f);
    long long lcinv = pinv(d.back(), p);
    while (static_cast<int>(f.size()) >= static_cast<int>(d.size()) && !f.empty()) {
        long long q = (f.back() * lcinv) % p;
        size_t k = f.size() - d.size();
        for (size_t i = 0; i < d.size(); ++i)
            f[k + i] = ((f[k + i] - q * d[i]) % p + p) % p;
        ptrim(f);
    }
    return f;
}

inline PPoly pquot(PPoly f, const PPoly& d, long long p) {
    ptrim(f);
    PPoly quo(f.size() >= d.size() ? f.size() - d.size() + 1 : 0, 0);
    long long lcinv = pinv(d.back(), p);
    while (static_cast<int>(f.size()) >= static_cast<int>(d.size()) && !f.empty()) {
        long long q = (f.back() * lcinv) % p;
        size_t k = f.size() - d.size();
        quo[k] = q;
        for (size_t i = 0; i < d.size(); ++i)
            f[k + i] = ((f[k + i] - q * d[i]) % p + p) % p;
        ptrim(f);
    }
    return quo;
}

inline PPoly pgcd(PPoly a, PPoly b, long long p) {
    ptrim(a); ptrim(b);
    while (!b.empty()) {
        PPoly r = prem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        long long inv = pinv(a.back(), p);
        for (auto& c : a) c = (c * inv) % p;
    }
    return a;
}

inline PPoly pderiv(const PPoly& f, long long p) {
    PPoly r;
    for (size_t i = 1; i < f.size(); ++i) r.push_back((f[i] * static_cast<long long>(i % p)) % p);
    ptrim(r);
    return r;
}

inline PPoly ppowmod(PPoly base, BigInt e, const PPoly& mod, long long p) {
    PPoly acc{1};
    base = prem(std::move(base), mod, p);
    while (e > 0) {
        if ((e & 1) != 0) acc = prem(pmul(acc, base, p), mod, p);
        base = prem(pmul(base, base, p), mod, p);
        e >>= 1;
    }
    return acc;
}

// Berlekamp factorization of a squarefree monic f over F_p, p odd.
inline std::vector<PPoly> berlekamp(const PPoly& f, long long p) {
    int n = static_cast<int>(f.size()) - 1;
    if (n <= 1) return {f};
    // Rows of Q: x^{ip} mod f.
    std::vector<PPoly> xp(n);
    PPoly xpow = ppowmod(PPoly{0, 1}, BigInt(p), f, p);
    PPoly cur{1};
    for (int i = 0; i < n; ++i) {
        xp[i] = cur;
        cur = prem(pmul(cur, xpow, p), f, p);
    }
    // Nullspace of (Q - I)^T over F_p via Gaussian elimination.
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < static_cast<int>(xp[i].size()); ++j) m[j][i] = xp[i][j];
        m[i][i] = ((m[i][i] - 1) % p + p) % p;
    }
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < n && r < n; ++c) {
        int sel = r;
        while (sel < n && m[sel][c] == 0) ++sel;
        if (sel == n) continue;
        std::swap(m[sel], m[r]);
        long long inv = pinv(m[r][c], p);
        for (int j = 0; j < n; ++j) m[r][j] = (m[r][j] * inv) % p;
        for (int i = 0; i < n; ++i) {
            if (i == r || m[i][c] == 0) continue;
            long long fct = m[i][c];
            for (int j = 0; j < n; ++j) m[i][j] = ((m[i][j] - fct * m[r][j]) % p + p) % p;
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<PPoly> basis;
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int fc = 0; fc < n; ++fc) {
        if (is_pivot[fc]) continue;
        PPoly v(n, 0);
        v[fc] = 1;
        for (int rr = 0; rr < static_cast<int>(pivot_col.size()); ++rr)
            v[pivot_col[rr]] = ((-m[rr][fc]) % p + p) % p;
        ptrim(v);
        basis.push_back(std::move(v));
    }
    size_t target = basis.size(); // number of irreducible factors
    std::vector<PPoly> factors{f};
    if (target <= 1) return factors;
    for (const auto& v : basis) {
        if (factors.size() >= target) break;
        if (v.size() <= 1) continue; // constant direction separates nothing
        std::vector<PPoly> next;
        for (const auto& g : factors) {
            if (static_cast<int>(g.size()) - 1 <= 1) { next.push_back(g); continue; }
            PPoly rest = g;
            for (long long s = 0; s < p && static_cast<int>(rest.size()) - 1 > 0; ++s) {
                PPoly vs = v;
                if (vs.empty()) vs.push_back(0);
                vs[0] = ((vs[0] - s) % p + p) % p;
                ptrim(vs);
                if (vs.empty()) continue;
                PPoly h = pgcd(rest, vs, p);
                if (static_cast<int>(h.size()) - 1 > 0 &&
                    static_cast<int>(h.size()) < static_cast<int>(rest.size())) {
                    next.push_back(h);
                    rest = pquot(rest, h, p);
                }
            }
            if (static_cast<int>(rest.size()) - 1 > 0) next.push_back(rest);
        }
        factors = std::move(next);
    }
    return factors;
}

// Hensel lift: given f = g*h mod q (g monic... here both normalized with
// lc(g) invertible), lift to f = g*h mod q^2. Classic quadratic step using
// the Bezout pair s*g + t*h = 1 mod q, lifted alongside.
struct HenselPair {
    ZPoly g, h, s, t;
};

inline ZPoly zmod_coeffs(const ZPoly& f, const BigInt& q) {
    ZPoly r = f;
    for (auto& c : r) {
        c %= q;
        if (c < 0) c += q;
    }
    ztrim(r);
    return r;
}

inline ZPoly zsym(const ZPoly& f, const BigInt& q) {
    ZPoly r = zmod_coeffs(f, q);
    BigInt half = q / 2;
    for (auto& c : r)
        if (c > half) c -= q;
    ztrim(r);
    return r;
}

inline ZPoly zadd(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), BigInt(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    ztrim(r);
    return r;
}
inline ZPoly zsub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), BigInt(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    ztrim(r);
    return r;
}

// Division with remainder mod q by a monic divisor.
inline void zdivmod_monic_mod(const ZPoly& f, const ZPoly& d, const BigInt& q, ZPoly& quo,
                              ZPoly& rem) {
    rem = zmod_coeffs(f, q);
    quo.assign(rem.size() >= d.size() ? rem.size() - d.size() + 1 : 0, BigInt(0));
    while (zdeg(rem) >= zdeg(d)) {
        BigInt c = rem.back();
        int k = zdeg(rem) - zdeg(d);
        quo[k] = c;
        for (int i = 0; i <= zdeg(d); ++i) {
            rem[k + i] -= c * d[i];
            rem[k + i] %= q;
            if (rem[k + i] < 0) rem[k + i] += q;
        }
        ztrim(rem);
    }
    ztrim(quo);
}

inline void hensel_step(const ZPoly& f, HenselPair& p, const BigInt& q) {
    BigInt q2 = q * q;
    // e = f - g*h
    ZPoly e = zmod_coeffs(zsub(f, zmul(p.g, p.h)), q2);
    ZPoly se = zmod_coeffs(zmul(p.s, e), q2);
    ZPoly quo, rem;
    zdivmod_monic_mod(se, p.h, q2, quo, rem);
    ZPoly g1 = zmod_coeffs(zadd(zadd(p.g, zmul(p.t, e)), zmul(quo, p.g)), q2);
    ZPoly h1 = zmod_coeffs(zadd(p.h, rem), q2);
    // Lift the Bezout pair: b = s*g1 + t*h1 - 1
    ZPoly b = zmod_coeffs(zsub(zadd(zmul(p.s, g1), zmul(p.t, h1)), ZPoly{BigInt(1)}), q2);
    ZPoly sb = zmod_coeffs(zmul(p.s, b), q2);
    ZPoly quo2, rem2;
    zdivmod_monic_mod(sb, h1, q2, quo2, rem2);
    ZPoly s1 = zmod_coeffs(zsub(p.s, rem2), q2);
    ZPoly t1 = zmod_coeffs(zsub(zsub(p.t, zmul(p.t, b)), zmul(quo2, g1)), q2);
    p.g = g1; p.h = h1; p.s = s1; p.t = t1;
}

inline ZPoly from_ppoly(const PPoly& f) {
    ZPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = f[i];
    return r;
}

// Lift the modular factorization of a monic f from mod p to mod p^(2^k) >= bound,
// by a factor-tree of pairwise Hensel steps. All modular factors monic.
inline std::vector<ZPoly> hensel_lift_tree(const ZPoly& f, std::vector<PPoly> mod_factors,
                                           long long p, const BigInt& bound, BigInt& modulus_out) {
    struct Node {
        ZPoly poly;                  // product of the leaves below, mod current modulus
        std::vector<size_t> leaves;  // indices into the factor list
    };
    // Recursive split of f into two halves, lift each pair.
    BigInt modulus = p;
    while (modulus < bound) modulus *= modulus;

    std::vector<ZPoly> lifted(mod_factors.size());

    // recursive lambda
    auto rec = [&](auto&& self, const ZPoly& target, size_t lo, size_t hi) -> void {
        if (hi - lo == 1) {
            lifted[lo] = zmod_coeffs(target, modulus);
            return;
        }
        size_t mid = lo + (hi - lo) / 2;
        PPoly gp{1}, hp{1};
        for (size_t i = lo; i < mid; ++i) gp = pmul(gp, mod_factors[i], p);
        for (size_t i = mid; i < hi; ++i) hp = pmul(hp, mod_factors[i], p);
        // Bezout pair mod p via extended Euclid in F_p[x].
        PPoly r0 = gp, r1 = hp, s0{1}, s1{}, t0{}, t1{1};
        while (!r1.empty()) {
            PPoly qd = pquot(r0, r1, p);
            PPoly r2 = prem(r0, r1, p);
            auto comb = [&](const PPoly& a0, const PPoly& a1) {
                PPoly mq = pmul(qd, a1, p);
                PPoly res(std::max(a0.size(), mq.size()), 0);
                for (size_t i = 0; i < a0.size(); ++i) res[i] = a0[i];
                for (size_t i = 0; i < mq.size(); ++i) res[i] = ((res[i] - mq[i]) % p + p) % p;
                ptrim(res);
                return res;
            };
            PPoly s2 = comb(s0, s1), t2 = comb(t0, t1);
            r0 = std::move(r1); r1 = std::move(r2);
            s0 = std::move(s1); s1 = std::move(s2);
            t0 = std::move(t1); t1 = std::move(t2);
        }
        long long inv = pinv(r0.empty() ? 1 : r0.back(), p);
        for (auto& c : s0) c = (c * inv) % p;
        for (auto& c : t0) c = (c * inv) % p;

        HenselPair pair{from_ppoly(gp), from_ppoly(hp), from_ppoly(s0), from_ppoly(t0)};
        BigInt q = p;
        while (q < modulus) {
            hensel_step(target, pair, q);
            q *= q;
        }
        self(self, zmod_coeffs(pair.g, modulus), lo, mid);
        self(self, zmod_coeffs(pair.h, modulus), mid, hi);
    };
    rec(rec, zmod_coeffs(f, modulus), 0, mod_factors.size());
    modulus_out = modulus;
    return lifted;
}

inline BigInt mignotte_bound(const ZPoly& f) {
    // 2^n * ||f||_2 * |lc|, generously rounded up.
    BigInt norm2(0);
    for (const auto& c : f) norm2 += c * c;
    BigInt s(1);
    while (s * s < norm2) s += s / 2 + 1;
    BigInt b = (BigInt(1) << (zdeg(f) + 1)) * (s + 1) * boost::multiprecision::abs(f.back());
    return 2 * b + 1;
}

// Factor a squarefree primitive polynomial over Z (degree >= 1).
inline std::vector<ZPoly> factor_squarefree_z(const ZPoly& f0) {
    ZPoly f = f0;
    if (zdeg(f) <= 1) return {f};
    static const long long primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41,
                                       43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    long long p = 0;
    PPoly fp;
    for (long long cand : primes) {
        if (f.back() % cand == 0) continue;
        fp = pmod_of(f, cand);
        if (static_cast<int>(fp.size()) - 1 != zdeg(f)) continue;
        PPoly g = pgcd(fp, pderiv(fp, cand), cand);
        if (static_cast<int>(g.size()) - 1 == 0) {
            p = cand;
            break;
        }
    }
    if (p == 0) throw FactorizationBudget("no small prime with squarefree reduction");

    // Monic normalization mod p.
    long long lcinv = pinv(fp.back(), p);
    PPoly fmon = fp;
    for (auto& c : fmon) c = (c * lcinv) % p;
    std::vector<PPoly> mod_factors = berlekamp(fmon, p);
    if (mod_factors.size() == 1) return {f};

    // Monic model: F(x) = lc^{n-1} f(x/lc), i.e. F[i] = f[i] * lc^{n-1-i}.
    // Factors of F pull back to factors of f via g(x) -> primitive(g(lc*x)).
    BigInt lc = f.back();
    {
        int n = zdeg(f);
        ZPoly F(n + 1);
        for (int i = 0; i < n; ++i) {
            BigInt e(1);
            for (int k = 0; k < n - 1 - i; ++k) e *= lc;
            F[i] = f[i] * e;
        }
        F[n] = 1;

        PPoly Fp = pmod_of(F, p);
        std::vector<PPoly> Fp_factors = berlekamp(Fp, p);
        BigInt bound = mignotte_bound(F);
        BigInt modulus;
        std::vector<ZPoly> lifted = hensel_lift_tree(F, Fp_factors, p, bound, modulus);

        // Recombine subsets; translate back via g(x) -> primitive(g(lc*x)).
        std::vector<bool> used(lifted.size(), false);
        std::vector<ZPoly> result;
        ZPoly remaining = f;
        size_t live = lifted.size();
        for (size_t take = 1; take <= live && live > 0; ++take) {
            bool progress = true;
            while (progress) {
                progress = false;
                std::vector<size_t> idx;
                for (size_t i = 0; i < lifted.size(); ++i)
                    if (!used[i]) idx.push_back(i);
                if (take > idx.size()) break;
                // iterate over combinations of `idx` of size `take`
                std::vector<size_t> c(take);
                for (size_t i = 0; i < take; ++i) c[i] = i;
                while (true) {
                    ZPoly prod{BigInt(1)};
                    for (size_t i = 0; i < take; ++i) prod = zmul(prod, lifted[idx[c[i]]]);
                    prod = zsym(prod, modulus);
                    // candidate factor of F; translate to factor of f.
                    ZPoly cand(prod.size());
                    BigInt e(1);
                    for (int i = zdeg(prod); i >= 0; --i) {
                        cand[i] = prod[i] * e;
                        e *= lc;
                    }
                    cand = zprimitive(cand);
                    ZPoly quo;
                    if (zdeg(cand) >= 1 && zdivide_exact(remaining, cand, quo)) {
                        result.push_back(cand);
                        remaining = zprimitive(quo);
                        for (size_t i = 0; i < take; ++i) used[idx[c[i]]] = true;
                        live -= take;
                        progress = true;
                        break;
                    }
                    // next combination
                    int i = static_cast<int>(take) - 1;
                    while (i >= 0 && c[i] == idx.size() - take + i) --i;
                    if (i < 0) break;
                    ++c[i];
                    for (size_t j = i + 1; j < take; ++j) c[j] = c[j - 1] + 1;
                }
            }
        }
        if (zdeg(remaining) >= 1) result.push_back(zprimitive(remaining));
        return result;
    }
}

} // namespace detail

// Irreducible factorization over Q: monic irreducible factors with
// multiplicities. Exact; supported up to degree 12 (desk-scale algebras).
inline std::vector<std::pair<Polynomial, int>> factor_rational(const Polynomial& p) {
    if (p.is_zero()) throw DomainError("ZeroPolynomial", "factorization of zero");
    if (p.degree() > 12)
        throw FactorizationBudget("irreducible factorization supported up to degree 12, got " +
                                  std::to_string(p.degree()));
    std::vector<std::pair<Polynomial, int>> out;
    if (p.degree() == 0) return out;

    // Strip x^m.
    std::vector<Rational> cs = p.coeffs();
    int zero_mult = 0;
    while (zero_mult < static_cast<int>(cs.size()) && cs[zero_mult] == 0) ++zero_mult;
    if (zero_mult > 0) out.emplace_back(Polynomial::x(), zero_mult);
    Polynomial q(std::vector<Rational>(cs.begin() + zero_mult, cs.end()));

    for (const auto& [sf, mult] : squarefree_decomposition(q)) {
        // Clear denominators -> primitive integer polynomial.
        BigInt lcm(1);
        for (const auto& c : sf.coeffs())
            lcm = lcm / boost::multiprecision::gcd(lcm, den(c)) * den(c);
        detail::ZPoly zf(sf.coeffs().size());
        for (size_t i = 0; i < zf.size(); ++i) zf[i] = num(sf.coeff(static_cast<int>(i)) * Rational(lcm));
        zf = detail::zprimitive(zf);
        for (const auto& irr : detail::factor_squarefree_z(zf)) {
            std::vector<Rational> rc(irr.size());
            for (size_t i = 0; i < irr.size(); ++i) rc[i] = Rational(irr[i]);
            out.emplace_back(Polynomial(std::move(rc)).monic(), mult);
        }
    }
    return out;
}

} // namespace conedim
