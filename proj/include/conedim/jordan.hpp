#pragma once

#include <utility>

#include "conedim/matrix.hpp"
#include "conedim/polynomial.hpp"

namespace conedim {

// Exact Jordan-Chevalley decomposition over Q: M = S + N with S semisimple
// (squarefree minimal polynomial), N nilpotent, S*N = N*S, and S a polynomial
// in M. Newton iteration against the squarefree part of the characteristic
// polynomial; all arithmetic rational.
struct JordanChevalley {
    RationalMatrix semisimple;
    RationalMatrix nilpotent;
};

inline JordanChevalley jordan_chevalley(const RationalMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("jordan_chevalley of non-square matrix");
    size_t n = m.rows();
    Polynomial p = charpoly(m);
    Polynomial s = squarefree_part(p);
    // a = (s')^{-1} mod s; s and s' are coprime since s is squarefree.
    auto [u, v] = extended_gcd(s.derivative(), s);
    (void)v;
    RationalMatrix S = m;
    RationalMatrix sS = eval_at_matrix(s, S);
    int guard = 0;
    while (!sS.is_zero()) {
        if (++guard > 16)
            throw DomainError("JordanChevalleyDiverged", "Newton iteration failed to stabilize");
        RationalMatrix corr = sS * eval_at_matrix(u, S);
        S = S - corr;
        sS = eval_at_matrix(s, S);
    }
    RationalMatrix N = m - S;
    if (!N.pow(static_cast<unsigned>(n)).is_zero())
        throw DomainError("JordanChevalleyInvalid", "nilpotent part failed the nilpotency check");
    return {S, N};
}

} // namespace conedim
