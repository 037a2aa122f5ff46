// The signature (2, 2+N) lattice L_2 = 2U + L(-1) in the basis order
// (e, e_1, b_1..b_N, f_1, f), with the divisor bookkeeping div(l), l* and
// the orbit keys of the Eichler criterion.
#pragma once

#include "jfl/lattice.hpp"

#include <optional>

namespace jfl {

struct OrbitKey {
    Rational norm;               // (l, l) in L_2
    std::vector<Rational> cls;   // fractional basis coordinates of l* mod L_2

    bool operator==(const OrbitKey& o) const { return norm == o.norm && cls == o.cls; }
    bool operator<(const OrbitKey& o) const {
        if (norm != o.norm) return norm < o.norm;
        return cls < o.cls;
    }
};

struct HyperbolicLattice {
    Lattice base;   // positive definite L of rank N
    IntMat gram;    // (N+4) x (N+4)

    explicit HyperbolicLattice(Lattice l) : base(std::move(l)) {
        int n = base.rank();
        IntMat s = base.gram_int();
        int m = n + 4;
        gram.assign(m, IntVec(m, 0));
        gram[0][m - 1] = gram[m - 1][0] = 1;      // (e, f) = 1
        gram[1][m - 2] = gram[m - 2][1] = 1;      // (e1, f1) = 1
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) gram[2 + i][2 + j] = -s[i][j];
    }

    int dim() const { return static_cast<int>(gram.size()); }

    Inertia signature() const {
        RatMat g(dim(), RatVec(dim()));
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < dim(); ++j) g[i][j] = Rational(gram[i][j]);
        return rat_inertia(g);
    }

    Rational pair(const RatVec& a, const RatVec& b) const {
        Rational s = 0;
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < dim(); ++j) s += a[i] * Rational(gram[i][j]) * b[j];
        return s;
    }

    Rational norm_of(const RatVec& a) const { return pair(a, a); }

    bool in_dual(const RatVec& v) const {
        for (int i = 0; i < dim(); ++i) {
            Rational s = 0;
            for (int j = 0; j < dim(); ++j) s += Rational(gram[i][j]) * v[j];
            if (rat_den(s) != 1) return false;
        }
        return true;
    }
};

inline bool is_primitive(const IntVec& l) {
    Int g = 0;
    for (auto& v : l) g = boost::multiprecision::gcd(g, v);
    return g == 1;
}

// div(l): the positive generator of the ideal ((l,h) | h in L_2)
inline Int vector_div(const HyperbolicLattice& h, const IntVec& l) {
    bool nonzero = false;
    for (auto& v : l)
        if (v != 0) nonzero = true;
    if (!nonzero) throw std::domain_error("vector_div: zero vector");
    Int g = 0;
    for (int i = 0; i < h.dim(); ++i) {
        Int s = 0;
        for (int j = 0; j < h.dim(); ++j) s += h.gram[i][j] * l[j];
        g = boost::multiprecision::gcd(g, s);
    }
    return g;
}

inline RatVec l_star(const HyperbolicLattice& h, const IntVec& l) {
    Int d = vector_div(h, l);
    RatVec out(h.dim());
    for (int i = 0; i < h.dim(); ++i) out[i] = Rational(l[i], d);
    return out;
}

// Orbit key of a primitive vector under the stable orthogonal group:
// ((l,l), class of l* in the discriminant group), per the Eichler criterion.
inline OrbitKey classify_orbit(const HyperbolicLattice& h, const IntVec& l) {
    if (!is_primitive(l)) throw std::domain_error("classify_orbit: vector not primitive");
    OrbitKey key;
    RatVec lr(h.dim());
    for (int i = 0; i < h.dim(); ++i) lr[i] = Rational(l[i]);
    key.norm = h.norm_of(lr);
    RatVec ls = l_star(h, l);
    key.cls.resize(h.dim());
    for (int i = 0; i < h.dim(); ++i) key.cls[i] = rat_frac(ls[i]);
    return key;
}

// Eichler transvection t(u, a) for isotropic u and a orthogonal to u:
// v -> v - (a,v) u + (u,v) a - (a,a)/2 (u,v) u.  Integral and fixes D(L_2).
inline IntMat transvection(const HyperbolicLattice& h, const IntVec& u, const IntVec& a) {
    RatVec ur(h.dim()), ar(h.dim());
    for (int i = 0; i < h.dim(); ++i) { ur[i] = Rational(u[i]); ar[i] = Rational(a[i]); }
    if (h.norm_of(ur) != 0) throw std::domain_error("transvection: u must be isotropic");
    if (h.pair(ur, ar) != 0) throw std::domain_error("transvection: a must be orthogonal to u");
    Rational aa2 = h.norm_of(ar) / 2;
    if (rat_den(aa2) != 1) throw std::logic_error("transvection: (a,a)/2 not integral");
    int m = h.dim();
    IntMat t(m, IntVec(m, 0));
    for (int col = 0; col < m; ++col) {
        RatVec v(m, 0);
        v[col] = 1;
        Rational av = h.pair(ar, v), uv = h.pair(ur, v);
        for (int row = 0; row < m; ++row) {
            Rational entry = (row == col ? Rational(1) : Rational(0));
            entry += -av * Rational(u[row]) + uv * Rational(a[row]) - aa2 * uv * Rational(u[row]);
            if (rat_den(entry) != 1) throw std::logic_error("transvection: non-integral entry");
            t[row][col] = rat_num(entry);
        }
    }
    return t;
}

inline IntVec apply_int_matrix(const IntMat& m, const IntVec& v) {
    IntVec out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

inline bool preserves_gram(const HyperbolicLattice& h, const IntMat& m) {
    int n = h.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Int s = 0;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) s += m[k][i] * h.gram[k][l] * m[l][j];
            if (s != h.gram[i][j]) return false;
        }
    return true;
}

inline HyperbolicLattice parse_hyperbolic(const std::string& text) {
    // "2U+D4(-1)" and friends
    auto plus = text.find('+');
    if (plus == std::string::npos || text.substr(0, plus) != "2U")
        throw std::invalid_argument("parse_hyperbolic: expected '2U+<base>(-1)' in '" + text + "'");
    std::string rest = text.substr(plus + 1);
    if (rest.size() < 4 || rest.substr(rest.size() - 4) != "(-1)")
        throw std::invalid_argument("parse_hyperbolic: expected trailing '(-1)' in '" + text + "'");
    return HyperbolicLattice(parse_lattice(rest.substr(0, rest.size() - 4)));
}

}  // namespace jfl
