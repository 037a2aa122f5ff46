// The integral Heisenberg group H(L) of a lattice: elements [x, y : r]
// with x, y in L and r + B(x,y)/2 integral, together with the SL(2,Z)
// action by conjugation.
#pragma once

#include "jfl/lattice.hpp"

#include <array>

namespace jfl {

struct HeisenbergElement {
    Lattice lattice;
    IntVec x;  // basis coordinates
    IntVec y;
    Rational r;

    HeisenbergElement(Lattice l, IntVec x_, IntVec y_, Rational r_)
        : lattice(std::move(l)), x(std::move(x_)), y(std::move(y_)), r(std::move(r_)) {
        if (static_cast<int>(x.size()) != lattice.rank() || static_cast<int>(y.size()) != lattice.rank())
            throw std::invalid_argument("HeisenbergElement: coordinate size mismatch");
        if (rat_den(r + pair_xy() / 2) != 1)
            throw std::domain_error("HeisenbergElement: r + B(x,y)/2 must be integral");
    }

    RatVec x_ambient() const { return ambient(x); }
    RatVec y_ambient() const { return ambient(y); }

    Rational pair_xy() const { return lattice.bilinear(x_ambient(), y_ambient()); }
    Rational norm_x() const { return lattice.norm(x_ambient()); }

    bool is_identity() const {
        if (r != 0) return false;
        for (auto& v : x) if (v != 0) return false;
        for (auto& v : y) if (v != 0) return false;
        return true;
    }

private:
    RatVec ambient(const IntVec& c) const {
        RatVec v(lattice.rank());
        for (std::size_t i = 0; i < c.size(); ++i) v[i] = Rational(c[i]);
        return lattice.from_coords(v);
    }
};

// [x,y:r] . [x',y':r'] = [x+x', y+y', r+r' + (B(x,y') - B(x',y))/2]
inline HeisenbergElement heisenberg_mul(const HeisenbergElement& a, const HeisenbergElement& b) {
    if (!(a.lattice == b.lattice)) throw std::invalid_argument("heisenberg_mul: lattice mismatch");
    IntVec x(a.x), y(a.y);
    for (std::size_t i = 0; i < x.size(); ++i) { x[i] += b.x[i]; y[i] += b.y[i]; }
    Rational cross = a.lattice.bilinear(a.x_ambient(), b.y_ambient()) -
                     a.lattice.bilinear(b.x_ambient(), a.y_ambient());
    return HeisenbergElement(a.lattice, std::move(x), std::move(y), a.r + b.r + cross / 2);
}

inline HeisenbergElement heisenberg_inverse(const HeisenbergElement& g) {
    IntVec x(g.x), y(g.y);
    for (auto& v : x) v = -v;
    for (auto& v : y) v = -v;
    return HeisenbergElement(g.lattice, std::move(x), std::move(y), -g.r);
}

using SL2 = std::array<std::array<long long, 2>, 2>;

inline long long sl2_det(const SL2& a) { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }

// A . [x,y:r] = [d x - c y, a y - b x : r]
inline HeisenbergElement sl2_act(const SL2& m, const HeisenbergElement& g) {
    if (sl2_det(m) != 1) throw std::domain_error("sl2_act: determinant must be 1");
    IntVec x(g.x.size()), y(g.y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = Int(m[1][1]) * g.x[i] - Int(m[1][0]) * g.y[i];
        y[i] = Int(m[0][0]) * g.y[i] - Int(m[0][1]) * g.x[i];
    }
    return HeisenbergElement(g.lattice, std::move(x), std::move(y), g.r);
}

inline SL2 sl2_mul(const SL2& a, const SL2& b) {
    SL2 c{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return c;
}

}  // namespace jfl
