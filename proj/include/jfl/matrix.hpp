// Small exact linear algebra over the rationals and the integers:
// just enough for Gram matrices of rank <= 12 (inverse, inertia,
// Smith normal form with transform tracking).
#pragma once

#include "jfl/numeric.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace jfl {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

inline RatMat rat_identity(std::size_t n) {
    RatMat m(n, RatVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline RatMat rat_mul(const RatMat& a, const RatMat& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    RatMat c(n, RatVec(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

inline RatVec rat_mul_vec(const RatMat& a, const RatVec& v) {
    RatVec r(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    return r;
}

inline RatMat rat_transpose(const RatMat& a) {
    std::size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
    RatMat t(m, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) t[j][i] = a[i][j];
    return t;
}

inline Rational rat_dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("rat_dot: size mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline RatMat rat_inverse(RatMat a) {
    std::size_t n = a.size();
    RatMat inv = rat_identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::domain_error("rat_inverse: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rational d = a[col][col];
        for (std::size_t j = 0; j < n; ++j) { a[col][j] /= d; inv[col][j] /= d; }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (std::size_t j = 0; j < n; ++j) { a[i][j] -= f * a[col][j]; inv[i][j] -= f * inv[col][j]; }
        }
    }
    return inv;
}

inline Rational rat_det(RatMat a) {
    std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) { std::swap(a[piv], a[col]); det = -det; }
        det *= a[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a[i][col] == 0) continue;
            Rational f = a[i][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    return det;
}

struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};

// Sylvester inertia of a symmetric rational matrix by congruence reduction.
inline Inertia rat_inertia(RatMat a) {
    std::size_t n = a.size();
    Inertia sig;
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && a[i][i] != 0) { p = i; break; }
        if (p == n) {
            // all remaining diagonal entries vanish; find an off-diagonal pivot
            std::size_t i0 = n, j0 = n;
            for (std::size_t i = 0; i < n && i0 == n; ++i) {
                if (done[i]) continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (!done[j] && j != i && a[i][j] != 0) { i0 = i; j0 = j; break; }
            }
            if (i0 == n) {
                for (std::size_t i = 0; i < n; ++i)
                    if (!done[i]) ++sig.zero;
                return sig;
            }
            // congruence: row/col i0 += row/col j0 turns the diagonal nonzero
            for (std::size_t j = 0; j < n; ++j) a[i0][j] += a[j0][j];
            for (std::size_t i = 0; i < n; ++i) a[i][i0] += a[i][j0];
            p = i0;
        }
        Rational d = a[p][p];
        if (d > 0) ++sig.positive; else ++sig.negative;
        done[p] = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || a[i][p] == 0) continue;
            Rational f = a[i][p] / d;
            for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[p][j];
            for (std::size_t j = 0; j < n; ++j) a[j][i] -= f * a[j][p];
        }
    }
    return sig;
}

struct SmithResult {
    IntVec divisors;   // s_1 | s_2 | ... (all positive), length = rank of the matrix
    IntMat left_inv;   // P^{-1} where P A Q = diag(divisors); columns generate Z^n / A Z^n
};

// Smith normal form of a nonsingular integer matrix, tracking P^{-1} so the
// cyclic generators of Z^n / A Z^n can be read off its columns.
inline SmithResult smith_normal_form(IntMat a) {
    std::size_t n = a.size();
    IntMat pinv(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) pinv[i][i] = 1;

    // row op A <- E A is matched by Pinv <- Pinv E^{-1}
    auto row_swap = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        for (std::size_t k = 0; k < n; ++k) std::swap(pinv[k][i], pinv[k][j]);
    };
    auto row_add = [&](std::size_t i, std::size_t j, const Int& c) {  // row i += c * row j
        for (std::size_t k = 0; k < n; ++k) a[i][k] += c * a[j][k];
        for (std::size_t k = 0; k < n; ++k) pinv[k][j] -= c * pinv[k][i];
    };
    auto row_neg = [&](std::size_t i) {
        for (std::size_t k = 0; k < n; ++k) a[i][k] = -a[i][k];
        for (std::size_t k = 0; k < n; ++k) pinv[k][i] = -pinv[k][i];
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < n; ++k) std::swap(a[k][i], a[k][j]);
    };
    auto col_add = [&](std::size_t i, std::size_t j, const Int& c) {  // col i += c * col j
        for (std::size_t k = 0; k < n; ++k) a[k][i] += c * a[k][j];
    };

    for (std::size_t t = 0; t < n; ++t) {
        // move a nonzero entry of minimal absolute value to (t,t)
        while (true) {
            std::size_t bi = n, bj = n;
            Int best = 0;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (a[i][j] == 0) continue;
                    Int v = abs(a[i][j]);
                    if (bi == n || v < best) { best = v; bi = i; bj = j; }
                }
            if (bi == n) throw std::domain_error("smith_normal_form: singular matrix");
            if (bi != t) row_swap(t, bi);
            if (bj != t) col_swap(t, bj);
            if (a[t][t] < 0) row_neg(t);
            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (a[i][t] == 0) continue;
                row_add(i, t, -floor_div(a[i][t], a[t][t]));
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a[t][j] == 0) continue;
                col_add(j, t, -floor_div(a[t][j], a[t][t]));
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // enforce divisibility of the trailing block by the pivot
            bool fixed = true;
            for (std::size_t i = t + 1; i < n && fixed; ++i)
                for (std::size_t j = t + 1; j < n && fixed; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        row_add(t, i, 1);
                        fixed = false;
                    }
            if (fixed) break;
        }
    }
    SmithResult r;
    r.left_inv = pinv;
    for (std::size_t i = 0; i < n; ++i) r.divisors.push_back(a[i][i]);
    return r;
}

}  // namespace jfl
