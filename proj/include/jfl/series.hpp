// Sparse exact Fourier expansions
//
//   phi(tau, z) = sum f(n, e) q^n exp(2 pi i (e . z)),    q = exp(2 pi i tau)
//
// stored as a map from (q-exponent, elliptic exponent vector) to a nonzero
// rational coefficient.  Representation invariants:
//
//  * q-exponents lie on the 1/24 grid and are stored as integer multiples
//    of 1/24 (the global denominator generated by eta and theta); any
//    operation that would leave the grid throws.
//  * elliptic exponents are stored in ambient Euclidean coordinates over a
//    single per-series denominator `eden`, kept minimal after every
//    operation; the pairing with z is the plain dot product, and any
//    lattice-dual interpretation happens in support_report via the form
//    scale and the projection onto the lattice span.
//  * `trunc24` is the exclusive cutoff below which the expansion is known
//    exactly.  Truncations propagate pessimistically: products are valid
//    below min(trunc_a + val_b, trunc_b + val_a), quotients below
//    min(trunc_num - val_den, trunc_den + val_num - 2 val_den), and the
//    Heisenberg slash lowers the cutoff by the most negative computed
//    q-shift.
//
// All values are immutable in use and all operations are pure.
#pragma once

#include "jfl/heisenberg.hpp"
#include "jfl/lattice.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace jfl {

struct DivisionRemainder : std::runtime_error {
    explicit DivisionRemainder(const std::string& m) : std::runtime_error("DivisionRemainder: " + m) {}
};
struct PhaseNotReal : std::runtime_error {
    explicit PhaseNotReal(const std::string& m) : std::runtime_error("PhaseNotReal: " + m) {}
};
struct MixedCongruence : std::runtime_error {
    explicit MixedCongruence(const std::string& m) : std::runtime_error("MixedCongruence: " + m) {}
};
struct NotProportional : std::runtime_error {
    explicit NotProportional(const std::string& m) : std::runtime_error("NotProportional: " + m) {}
};

constexpr long long kQDen = 24;  // global q-exponent denominator

struct TermKey {
    long long q = 0;          // exponent numerator over 24
    std::vector<int> e;       // elliptic exponent numerators over the series eden

    auto operator<=>(const TermKey&) const = default;
};

struct SeriesMeta {
    Rational weight = 0;
    Rational index = 0;
    std::string lattice;                     // descriptor, may be empty
    std::optional<long long> congruence24;   // q-class mod 1 when known
};

struct FourierSeries {
    int vars = 0;
    long long trunc24 = 0;   // exclusive cutoff (units of 1/24)
    int eden = 1;
    std::map<TermKey, Rational> terms;
    SeriesMeta meta;

    static FourierSeries zero(int vars, long long trunc24) {
        FourierSeries s;
        s.vars = vars;
        s.trunc24 = trunc24;
        return s;
    }

    static FourierSeries one(int vars, long long trunc24) {
        FourierSeries s = zero(vars, trunc24);
        if (trunc24 > 0) s.terms[{0, std::vector<int>(vars, 0)}] = 1;
        return s;
    }

    bool empty() const { return terms.empty(); }

    // lowest q-exponent; trunc when the series has no terms
    long long val24() const { return terms.empty() ? trunc24 : terms.begin()->first.q; }

    void insert(long long q24, std::vector<int> e, const Rational& c) {
        if (c == 0 || q24 >= trunc24) return;
        TermKey k{q24, std::move(e)};
        auto [it, fresh] = terms.emplace(std::move(k), c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    Rational coeff(long long q24, const std::vector<int>& e_over_eden, int their_eden) const {
        if (their_eden == eden) {
            auto it = terms.find(TermKey{q24, e_over_eden});
            return it == terms.end() ? Rational(0) : it->second;
        }
        std::vector<int> e(e_over_eden.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            long long v = static_cast<long long>(e_over_eden[i]) * eden;
            if (v % their_eden) return 0;  // not on this series' grid
            e[i] = static_cast<int>(v / their_eden);
        }
        auto it = terms.find(TermKey{q24, e});
        return it == terms.end() ? Rational(0) : it->second;
    }

    // reduce eden to the minimal common denominator
    void normalize_eden() {
        if (eden == 1) return;
        long long g = eden;
        for (auto& [k, c] : terms) {
            (void)c;
            for (int v : k.e) g = gcd_ll(g, v);
            if (g == 1) return;
        }
        std::map<TermKey, Rational> out;
        for (auto& [k, c] : terms) {
            TermKey nk{k.q, k.e};
            for (auto& v : nk.e) v = static_cast<int>(v / g);
            out.emplace(std::move(nk), c);
        }
        terms = std::move(out);
        eden = static_cast<int>(eden / g);
    }

    void drop_above_trunc() { terms.erase(terms.lower_bound(TermKey{trunc24, {}}), terms.end()); }
};

inline void require_same_shape(const FourierSeries& a, const FourierSeries& b, const char* op) {
    if (a.vars != b.vars)
        throw std::invalid_argument(std::string(op) + ": elliptic dimension mismatch");
}

inline std::vector<int> rescale_exps(const std::vector<int>& e, long long factor) {
    std::vector<int> out(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        long long v = e[i] * factor;
        if (v > std::numeric_limits<int>::max() || v < std::numeric_limits<int>::min())
            throw std::overflow_error("elliptic exponent overflow");
        out[i] = static_cast<int>(v);
    }
    return out;
}

inline FourierSeries add(const FourierSeries& a, const FourierSeries& b) {
    require_same_shape(a, b, "add");
    if (a.meta.weight != b.meta.weight || a.meta.index != b.meta.index)
        throw std::invalid_argument("add: weight/index metadata mismatch");
    FourierSeries r = FourierSeries::zero(a.vars, std::min(a.trunc24, b.trunc24));
    r.meta = a.meta;
    r.meta.congruence24.reset();
    r.eden = static_cast<int>(lcm_ll(a.eden, b.eden));
    long long fa = r.eden / a.eden, fb = r.eden / b.eden;
    for (auto& [k, c] : a.terms) r.insert(k.q, rescale_exps(k.e, fa), c);
    for (auto& [k, c] : b.terms) r.insert(k.q, rescale_exps(k.e, fb), c);
    r.normalize_eden();
    return r;
}

inline FourierSeries scale(const FourierSeries& a, const Rational& c) {
    FourierSeries r = a;
    if (c == 0) {
        r.terms.clear();
        return r;
    }
    for (auto& [k, v] : r.terms) {
        (void)k;
        v *= c;
    }
    return r;
}

inline FourierSeries sub(const FourierSeries& a, const FourierSeries& b) { return add(a, scale(b, -1)); }

inline FourierSeries mul(const FourierSeries& a, const FourierSeries& b) {
    require_same_shape(a, b, "mul");
    long long trunc = std::min(a.trunc24 + b.val24(), b.trunc24 + a.val24());
    FourierSeries r = FourierSeries::zero(a.vars, trunc);
    r.meta.weight = a.meta.weight + b.meta.weight;
    r.meta.index = a.meta.index + b.meta.index;
    r.meta.lattice = a.meta.lattice == b.meta.lattice ? a.meta.lattice
                     : (a.meta.lattice.empty() ? b.meta.lattice
                                               : (b.meta.lattice.empty() ? a.meta.lattice : std::string()));
    r.eden = static_cast<int>(lcm_ll(a.eden, b.eden));
    long long fa = r.eden / a.eden, fb = r.eden / b.eden;
    if (a.terms.empty() || b.terms.empty()) return r;
    long long bval = b.val24();
    for (auto& [ka, ca] : a.terms) {
        if (ka.q + bval >= trunc) break;  // map is q-sorted
        std::vector<int> ea = rescale_exps(ka.e, fa);
        for (auto& [kb, cb] : b.terms) {
            long long q = ka.q + kb.q;
            if (q >= trunc) break;
            std::vector<int> e(static_cast<std::size_t>(r.vars));
            for (int i = 0; i < r.vars; ++i) e[i] = ea[i] + static_cast<int>(kb.e[i] * fb);
            r.insert(q, std::move(e), ca * cb);
        }
    }
    r.normalize_eden();
    return r;
}

inline FourierSeries pow(const FourierSeries& a, long long n) {
    if (n < 0) throw std::domain_error("pow: negative exponent");
    if (n == 0) {
        FourierSeries r = FourierSeries::one(a.vars, a.trunc24);
        return r;
    }
    FourierSeries acc = a;
    FourierSeries out;
    bool have = false;
    long long e = n;
    while (e) {
        if (e & 1) {
            out = have ? mul(out, acc) : acc;
            have = true;
        }
        e >>= 1;
        if (e) acc = mul(acc, acc);
    }
    return out;
}

// ---- slice polynomials -----------------------------------------------------

using SlicePoly = std::map<std::vector<int>, Rational>;  // Laurent polynomial in the elliptic variables

inline std::map<long long, SlicePoly> slices_of(const FourierSeries& s, long long factor = 1) {
    std::map<long long, SlicePoly> out;
    for (auto& [k, c] : s.terms) out[k.q][rescale_exps(k.e, factor)] = c;
    return out;
}

inline SlicePoly slice_mul(const SlicePoly& a, const SlicePoly& b) {
    SlicePoly r;
    for (auto& [ea, ca] : a)
        for (auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            auto [it, fresh] = r.emplace(std::move(e), ca * cb);
            if (!fresh) {
                it->second += ca * cb;
                if (it->second == 0) r.erase(it);
            }
        }
    return r;
}

inline void slice_sub_inplace(SlicePoly& a, const SlicePoly& b) {
    for (auto& [e, c] : b) {
        auto [it, fresh] = a.emplace(e, -c);
        if (!fresh) {
            it->second -= c;
            if (it->second == 0) a.erase(it);
        }
    }
}

// Exact division of Laurent polynomials.  Both are shifted into N^m and
// reduced by leading terms in lex order; a nonzero remainder throws.
inline SlicePoly slice_divide(const SlicePoly& num, const SlicePoly& den) {
    if (den.empty()) throw DivisionRemainder("slice divisor is zero");
    if (num.empty()) return {};
    std::size_t m = num.begin()->first.size();
    std::vector<int> num_min(m, 0), den_min(m, 0);
    auto mins = [m](const SlicePoly& p, std::vector<int>& lo) {
        lo.assign(m, std::numeric_limits<int>::max());
        for (auto& [e, c] : p) {
            (void)c;
            for (std::size_t i = 0; i < m; ++i) lo[i] = std::min(lo[i], e[i]);
        }
    };
    mins(num, num_min);
    mins(den, den_min);
    auto shifted = [m](const SlicePoly& p, const std::vector<int>& lo) {
        SlicePoly out;
        for (auto& [e, c] : p) {
            std::vector<int> f(m);
            for (std::size_t i = 0; i < m; ++i) f[i] = e[i] - lo[i];
            out.emplace(std::move(f), c);
        }
        return out;
    };
    SlicePoly f = shifted(num, num_min), g = shifted(den, den_min);
    const auto& gl = *g.rbegin();  // lex-leading term of the divisor
    SlicePoly q;
    while (!f.empty()) {
        const auto& fl = *f.rbegin();
        std::vector<int> d(m);
        for (std::size_t i = 0; i < m; ++i) {
            d[i] = fl.first[i] - gl.first[i];
            if (d[i] < 0) throw DivisionRemainder("slice not divisible");
        }
        Rational c = fl.second / gl.second;
        SlicePoly piece;
        piece.emplace(d, c);
        q.emplace(d, c);
        slice_sub_inplace(f, slice_mul(piece, g));
    }
    SlicePoly out;
    for (auto& [e, c] : q) {
        std::vector<int> s(m);
        for (std::size_t i = 0; i < m; ++i) s[i] = e[i] + num_min[i] - den_min[i];
        out.emplace(std::move(s), c);
    }
    return out;
}

// q-adic long division.  The lowest slice of the denominator must divide
// every successive numerator slice exactly.
inline FourierSeries divide(const FourierSeries& num, const FourierSeries& den) {
    require_same_shape(num, den, "divide");
    if (den.empty()) throw DivisionRemainder("division by zero series");
    long long vd = den.val24();
    int eden = static_cast<int>(lcm_ll(num.eden, den.eden));
    FourierSeries r = FourierSeries::zero(num.vars, 0);
    r.meta.weight = num.meta.weight - den.meta.weight;
    r.meta.index = num.meta.index - den.meta.index;
    r.meta.lattice = num.meta.lattice;
    r.eden = eden;
    if (num.empty()) {
        r.trunc24 = num.trunc24 - vd;
        return r;
    }
    long long vn = num.val24();
    long long vq = vn - vd;
    r.trunc24 = std::min(num.trunc24 - vd, den.trunc24 + vq - vd);

    auto nsl = slices_of(num, eden / num.eden);
    auto dsl = slices_of(den, eden / den.eden);
    const SlicePoly& d0 = dsl.at(vd);
    std::map<long long, SlicePoly> qsl;
    for (long long q = vq; q < r.trunc24; ++q) {
        SlicePoly rhs;
        if (auto it = nsl.find(q + vd); it != nsl.end()) rhs = it->second;
        for (auto& [qq, qp] : qsl) {
            auto it = dsl.find(q + vd - qq);
            if (it == dsl.end()) continue;
            slice_sub_inplace(rhs, slice_mul(qp, it->second));
        }
        if (rhs.empty()) continue;
        qsl[q] = slice_divide(rhs, d0);
    }
    for (auto& [q, p] : qsl)
        for (auto& [e, c] : p) r.insert(q, e, c);
    r.normalize_eden();
    return r;
}

// ---- exponent substitutions ------------------------------------------------

// Apply a rational linear map to the elliptic exponents: e -> T e.
// Collapsing terms are summed; used for pullbacks, projections and
// orthogonal substitutions.
inline FourierSeries map_exponents(const FourierSeries& s, const RatMat& t) {
    int new_vars = static_cast<int>(t.size());
    for (auto& row : t)
        if (static_cast<int>(row.size()) != s.vars)
            throw std::invalid_argument("map_exponents: shape mismatch");
    // common denominator of all image exponents: entries of T contribute
    // their denominators on top of the series' own grid
    long long den = 1;
    for (auto& row : t)
        for (auto& v : row) den = lcm_ll(den, to_ll(rat_den(v)));
    den *= s.eden;
    FourierSeries r = FourierSeries::zero(new_vars, s.trunc24);
    r.meta = s.meta;
    r.meta.lattice.clear();
    r.eden = static_cast<int>(den);
    for (auto& [k, c] : s.terms) {
        std::vector<int> e(new_vars);
        for (int i = 0; i < new_vars; ++i) {
            Rational v = 0;
            for (int j = 0; j < s.vars; ++j)
                if (k.e[j] != 0) v += t[i][j] * Rational(k.e[j], s.eden);
            Rational scaled = v * den;
            if (rat_den(scaled) != 1) throw std::logic_error("map_exponents: denominator bookkeeping failed");
            e[i] = static_cast<int>(to_ll(rat_num(scaled)));
        }
        r.insert(k.q, std::move(e), c);
    }
    r.normalize_eden();
    return r;
}

// Substitute z = E z' for an embedding matrix E (ambient x sub) with
// independent columns; exponents map by E^T.
inline FourierSeries pullback(const FourierSeries& s, const RatMat& embedding) {
    if (static_cast<int>(embedding.size()) != s.vars)
        throw std::invalid_argument("pullback: embedding rows must match ambient dimension");
    RatMat et = rat_transpose(embedding);
    // column independence: rank of E equals number of columns
    RatMat g = rat_mul(et, embedding);
    if (rat_det(g) == 0) throw std::invalid_argument("pullback: embedding columns not independent");
    FourierSeries r = map_exponents(s, et);
    return r;
}

// Axis-aligned pullback: set the j-th elliptic variable (0-based) to zero.
inline FourierSeries set_zero(const FourierSeries& s, int coord) {
    if (coord < 0 || coord >= s.vars) throw std::invalid_argument("set_zero: coordinate out of range");
    FourierSeries r = FourierSeries::zero(s.vars - 1, s.trunc24);
    r.meta = s.meta;
    r.meta.lattice.clear();
    r.eden = s.eden;
    for (auto& [k, c] : s.terms) {
        std::vector<int> e;
        e.reserve(k.e.size() - 1);
        for (int i = 0; i < s.vars; ++i)
            if (i != coord) e.push_back(k.e[i]);
        r.insert(k.q, std::move(e), c);
    }
    r.normalize_eden();
    return r;
}

// Normalized derivative pullback along one coordinate: the factor (2 pi i)^order
// is divided out, so order 1 sums e_j f(n,e) and order 2 sums e_j^2 f(n,e).
inline FourierSeries quasi_pullback(const FourierSeries& s, int coord, int order) {
    if (coord < 0 || coord >= s.vars) throw std::invalid_argument("quasi_pullback: coordinate out of range");
    if (order != 1 && order != 2) throw std::invalid_argument("quasi_pullback: order must be 1 or 2");
    FourierSeries r = FourierSeries::zero(s.vars - 1, s.trunc24);
    r.meta = s.meta;
    r.meta.weight += order;
    r.meta.lattice.clear();
    r.eden = s.eden;
    for (auto& [k, c] : s.terms) {
        Rational f(k.e[coord], s.eden);
        if (order == 2) f *= f;
        if (f == 0) continue;
        std::vector<int> e;
        e.reserve(k.e.size() - 1);
        for (int i = 0; i < s.vars; ++i)
            if (i != coord) e.push_back(k.e[i]);
        r.insert(k.q, std::move(e), f * c);
    }
    r.normalize_eden();
    return r;
}

// Exponent substitution by an isometry: e -> g^T e.
inline FourierSeries orthogonal_slash(const FourierSeries& s, const OrthMap& g) {
    if (static_cast<int>(g.matrix.size()) != s.vars)
        throw std::invalid_argument("orthogonal_slash: dimension mismatch");
    return map_exponents(s, rat_transpose(g.matrix));
}

// Canonicalize exponents of a series living on a non-full lattice by
// projecting onto span(L); terms falling together are summed.
inline FourierSeries project_onto(const FourierSeries& s, const Lattice& l) {
    if (l.ambient_dim != s.vars) throw std::invalid_argument("project_onto: dimension mismatch");
    FourierSeries r = map_exponents(s, l.projection());
    r.meta.lattice = l.descriptor;
    return r;
}

// ---- Heisenberg slash ------------------------------------------------------

// One term image under |[x,y:r] at index t over the given lattice form.
// Returns (q24', e', sign); throws PhaseNotReal when the phase is not +-1.
struct TermImage {
    long long q24;
    std::vector<Rational> e;
    int sign;
};

inline TermImage heisenberg_term_image(long long q24, const std::vector<int>& e, int eden,
                                       const HeisenbergElement& g, const Rational& t) {
    const Lattice& l = g.lattice;
    RatVec xa = g.x_ambient(), ya = g.y_ambient();
    Rational bxx = l.norm(xa);
    Rational bxy = l.bilinear(xa, ya);
    Rational ex = 0, ey = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        Rational ei(e[i], eden);
        ex += ei * xa[i];
        ey += ei * ya[i];
    }
    Rational phase = ey + t * (bxy / 2 + g.r);
    Rational two_phase = 2 * phase;
    if (rat_den(two_phase) != 1)
        throw PhaseNotReal("phase exponent " + rat_str(phase) + " not in (1/2) Z");
    int sign = (rat_num(two_phase) % 2 == 0) ? 1 : -1;
    Rational qshift = ex + t * bxx / 2;
    Rational q_new = Rational(q24, kQDen) + qshift;
    Rational q_scaled = q_new * kQDen;
    if (rat_den(q_scaled) != 1)
        throw std::domain_error("heisenberg_slash: q-denominator exceeds the 1/24 grid");
    TermImage img;
    img.q24 = to_ll(rat_num(q_scaled));
    img.sign = sign;
    img.e.resize(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) img.e[i] = Rational(e[i], eden) + t * l.form_scale * xa[i];
    return img;
}

// (phi |_t [x,y:r])(tau,z) term map: (n,e) -> (n + e.x + t B(x,x)/2, e + t S x)
// with sign (-1)^{2(e.y + t(B(x,y)/2 + r))}.  The truncation of the result is
// lowered by the most negative q-shift among the computed terms; this is the
// right bound for the weak forms handled here, whose tails shift upward.
inline FourierSeries heisenberg_slash(const FourierSeries& s, const HeisenbergElement& g,
                                      const Rational& t) {
    if (g.lattice.ambient_dim != s.vars)
        throw std::invalid_argument("heisenberg_slash: lattice ambient dimension mismatch");
    const Lattice& l = g.lattice;
    RatVec xa = g.x_ambient(), ya = g.y_ambient();
    Rational const_phase = t * (l.bilinear(xa, ya) / 2 + g.r);
    Rational const_qshift = t * l.norm(xa) / 2;
    // exponent shift t S x on the common grid
    long long eden = s.eden;
    RatVec eshift(s.vars);
    for (int i = 0; i < s.vars; ++i) {
        eshift[i] = t * l.form_scale * xa[i];
        eden = lcm_ll(eden, to_ll(rat_den(eshift[i])));
    }
    std::vector<long long> eshift_num(s.vars);
    for (int i = 0; i < s.vars; ++i) eshift_num[i] = to_ll(rat_num(eshift[i] * eden));

    std::vector<std::tuple<long long, std::vector<int>, Rational>> imgs;
    long long min_shift = 0;
    long long f = eden / s.eden;
    for (auto& [k, c] : s.terms) {
        Rational ex = 0, ey = 0;
        for (int i = 0; i < s.vars; ++i) {
            if (!k.e[i]) continue;
            Rational ei(k.e[i], s.eden);
            ex += ei * xa[i];
            ey += ei * ya[i];
        }
        Rational two_phase = 2 * (ey + const_phase);
        if (rat_den(two_phase) != 1)
            throw PhaseNotReal("phase exponent " + rat_str(two_phase / 2) + " not in (1/2) Z");
        int sign = (rat_num(two_phase) % 2 == 0) ? 1 : -1;
        Rational q_scaled = (ex + const_qshift) * kQDen;
        if (rat_den(q_scaled) != 1)
            throw std::domain_error("heisenberg_slash: q-denominator exceeds the 1/24 grid");
        long long q_new = k.q + to_ll(rat_num(q_scaled));
        min_shift = std::min(min_shift, q_new - k.q);
        std::vector<int> e(static_cast<std::size_t>(s.vars));
        for (int i = 0; i < s.vars; ++i)
            e[i] = static_cast<int>(k.e[i] * f + eshift_num[i]);
        imgs.emplace_back(q_new, std::move(e), sign > 0 ? c : -c);
    }
    FourierSeries r = FourierSeries::zero(s.vars, s.trunc24 + min_shift);
    r.meta = s.meta;
    r.meta.congruence24.reset();
    r.eden = static_cast<int>(eden);
    for (auto& [q, ev, c] : imgs) r.insert(q, std::move(ev), c);
    r.normalize_eden();
    return r;
}

// ---- inspection ------------------------------------------------------------

// Verifies all q-exponents share one class mod Z and returns it as c/24 in [0,1).
inline Rational q_shift_character(FourierSeries& s) {
    if (s.terms.empty()) return 0;
    long long c = ((s.terms.begin()->first.q % kQDen) + kQDen) % kQDen;
    for (auto& [k, v] : s.terms) {
        (void)v;
        if (((k.q % kQDen) + kQDen) % kQDen != c)
            throw MixedCongruence("q-exponents fall in distinct classes mod Z");
    }
    s.meta.congruence24 = c;
    return Rational(c, kQDen);
}

enum class FormClass { Empty, Singular, Cusp, Holomorphic, Weak, Bound };

struct SupportReport {
    Rational min_hyp = 0;
    Rational max_hyp = 0;
    FormClass klass = FormClass::Empty;
    std::vector<TermKey> min_terms;  // terms attaining min_hyp

    std::string class_name() const {
        switch (klass) {
            case FormClass::Empty: return "empty";
            case FormClass::Singular: return "singular";
            case FormClass::Cusp: return "cusp";
            case FormClass::Holomorphic: return "holomorphic";
            case FormClass::Weak: return "weak";
            case FormClass::Bound: return "bound(" + rat_str(min_hyp) + ")";
        }
        return "?";
    }
};

// Hyperbolic norm of a term: 2 n t - (e, P S^{-1} P e) with S the scaled
// Euclidean form and P the projection onto span(L) (identity when no lattice
// is given).  Index 0 series with no elliptic support are classified by the
// q-valuation instead (h = 2n).
inline SupportReport support_report(const FourierSeries& s, const Lattice* l, const Rational& t) {
    SupportReport rep;
    if (s.terms.empty()) return rep;
    Rational scale = l ? l->form_scale : Rational(1);
    std::optional<RatMat> proj;
    if (l && l->rank() < l->ambient_dim) proj = l->projection();
    bool first = true;
    bool all_q_nonneg = true;
    for (auto& [k, c] : s.terms) {
        (void)c;
        if (k.q < 0) all_q_nonneg = false;
        Rational h;
        if (t == 0) {
            h = Rational(2 * k.q, kQDen);
        } else {
            Rational ee = 0;
            if (proj) {
                RatVec e(s.vars);
                for (int i = 0; i < s.vars; ++i) e[i] = Rational(k.e[i], s.eden);
                RatVec pe = rat_mul_vec(*proj, e);
                ee = rat_dot(pe, pe);
            } else {
                for (int i = 0; i < s.vars; ++i) ee += Rational(k.e[i], s.eden) * Rational(k.e[i], s.eden);
            }
            h = Rational(2 * k.q, kQDen) * t - ee / scale;
        }
        if (first || h < rep.min_hyp) {
            rep.min_hyp = h;
            rep.min_terms.clear();
        }
        if (h == rep.min_hyp) rep.min_terms.push_back(k);
        if (first || h > rep.max_hyp) rep.max_hyp = h;
        first = false;
    }
    if (rep.min_hyp == 0 && rep.max_hyp == 0)
        rep.klass = FormClass::Singular;
    else if (rep.min_hyp > 0)
        rep.klass = FormClass::Cusp;
    else if (rep.min_hyp >= 0)
        rep.klass = FormClass::Holomorphic;
    else if (all_q_nonneg)
        rep.klass = FormClass::Weak;
    else
        rep.klass = FormClass::Bound;
    return rep;
}

inline FourierSeries restrict_trunc(const FourierSeries& s, long long trunc24) {
    FourierSeries r = s;
    r.trunc24 = std::min(r.trunc24, trunc24);
    r.drop_above_trunc();
    return r;
}

inline bool equal_on_common_range(const FourierSeries& a, const FourierSeries& b) {
    long long t = std::min(a.trunc24, b.trunc24);
    FourierSeries ra = restrict_trunc(a, t), rb = restrict_trunc(b, t);
    ra.normalize_eden();
    rb.normalize_eden();
    return ra.vars == rb.vars && ra.eden == rb.eden && ra.terms == rb.terms;
}

// Returns alpha with a = alpha * b on the common truncation.
inline Rational proportionality(const FourierSeries& a, const FourierSeries& b) {
    require_same_shape(a, b, "proportionality");
    long long t = std::min(a.trunc24, b.trunc24);
    FourierSeries ra = restrict_trunc(a, t), rb = restrict_trunc(b, t);
    if (rb.empty()) {
        if (ra.empty()) throw NotProportional("both series vanish on the compared range");
        throw NotProportional("reference series vanishes on the compared range");
    }
    if (ra.empty()) return 0;
    auto& [k0, c0] = *rb.terms.begin();
    Rational alpha = ra.coeff(k0.q, k0.e, rb.eden) / c0;
    if (!equal_on_common_range(ra, scale(rb, alpha)))
        throw NotProportional("series are not proportional on the compared range");
    return alpha;
}

}  // namespace jfl
