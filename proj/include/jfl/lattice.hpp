// Positive definite even lattices in ambient Euclidean coordinates.
//
// A lattice carries its basis vectors and a form scale s, the bilinear form
// being B(u,w) = s * (u . w).  This houses the root lattice models D_N and
// A_N with the standard scalar product as well as N A_1 = (Z^N, 2(.,.)).
#pragma once

#include "jfl/matrix.hpp"
#include "jfl/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace jfl {

enum class RootKind { A, D, ScaledA1 };

struct Lattice {
    int ambient_dim = 0;
    RatMat basis;          // rows are basis vectors in ambient coordinates
    Rational form_scale = 1;
    std::string descriptor;  // text form like "D4", "A7(2)", "4A1"

    int rank() const { return static_cast<int>(basis.size()); }

    Rational bilinear(const RatVec& u, const RatVec& w) const { return form_scale * rat_dot(u, w); }
    Rational norm(const RatVec& u) const { return bilinear(u, u); }

    RatMat gram() const {
        int r = rank();
        RatMat g(r, RatVec(r));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) g[i][j] = bilinear(basis[i], basis[j]);
        return g;
    }

    Rational det_gram() const { return rat_det(gram()); }

    IntMat gram_int() const {
        RatMat g = gram();
        IntMat out(g.size(), IntVec(g.size()));
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = 0; j < g.size(); ++j) {
                if (rat_den(g[i][j]) != 1) throw std::domain_error("lattice: Gram matrix not integral");
                out[i][j] = rat_num(g[i][j]);
            }
        return out;
    }

    void validate_even_positive() const {
        if (rank() == 0) throw std::domain_error("lattice: empty basis");
        IntMat g = gram_int();
        for (std::size_t i = 0; i < g.size(); ++i)
            if (g[i][i] % 2 != 0) throw std::domain_error("lattice: Gram diagonal not even");
        RatMat gr = gram();
        Inertia in = rat_inertia(gr);
        if (in.negative || in.zero) throw std::domain_error("lattice: Gram not positive definite");
    }

    // rows are the dual basis vectors d_j with B(d_j, b_k) = delta_{jk}
    RatMat dual_basis() const { return rat_mul(rat_inverse(gram()), basis); }

    // orthogonal projection of ambient space onto span(L)
    RatMat projection() const {
        RatMat bt = rat_transpose(basis);
        RatMat bbt = rat_mul(basis, bt);
        return rat_mul(rat_mul(bt, rat_inverse(bbt)), basis);
    }

    // basis coordinates of an ambient vector; empty if v is not in span(L)
    std::optional<RatVec> coords_of(const RatVec& v) const {
        RatMat d = dual_basis();
        RatVec c(rank());
        for (int i = 0; i < rank(); ++i) c[i] = form_scale * rat_dot(v, d[i]);
        // verify sum c_i b_i == v
        for (int j = 0; j < ambient_dim; ++j) {
            Rational s = 0;
            for (int i = 0; i < rank(); ++i) s += c[i] * basis[i][j];
            if (s != v[j]) return std::nullopt;
        }
        return c;
    }

    bool contains(const RatVec& v) const {
        auto c = coords_of(v);
        if (!c) return false;
        for (auto& x : *c)
            if (rat_den(x) != 1) return false;
        return true;
    }

    bool in_dual(const RatVec& v) const {
        if (!coords_of(v)) return false;
        for (int i = 0; i < rank(); ++i)
            if (rat_den(bilinear(v, basis[i])) != 1) return false;
        return true;
    }

    RatVec from_coords(const RatVec& c) const {
        RatVec v(ambient_dim, 0);
        for (int i = 0; i < rank(); ++i)
            for (int j = 0; j < ambient_dim; ++j) v[j] += c[i] * basis[i][j];
        return v;
    }

    bool operator==(const Lattice& o) const {
        return ambient_dim == o.ambient_dim && basis == o.basis && form_scale == o.form_scale;
    }
};

// Exact branch-and-bound enumeration of a positive definite rational form,
// Fincke-Pohst style but with rational pivot tests instead of square roots.
class QuadFormEnumerator {
public:
    explicit QuadFormEnumerator(const RatMat& gram) : n_(static_cast<int>(gram.size())) {
        // q_ii = pivot, q_ij (j>i) = reduced entries: Q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2
        RatMat g = gram;
        q_.assign(n_, RatVec(n_, 0));
        for (int i = 0; i < n_; ++i) {
            for (int j = i; j < n_; ++j) {
                Rational v = g[i][j];
                for (int k = 0; k < i; ++k) v -= q_[k][k] * q_[k][i] * q_[k][j];
                if (j == i) {
                    if (v <= 0) throw std::domain_error("QuadFormEnumerator: form not positive definite");
                    q_[i][i] = v;
                } else {
                    q_[i][j] = v / q_[i][i];
                }
            }
        }
    }

    // Minimum of Q(c + offset) over integer c, with a minimizing c returned.
    std::pair<Rational, std::vector<long long>> min_on_coset(const RatVec& offset) const {
        Rational best = eval(round_near(offset), offset);
        std::vector<long long> argmin = round_near(offset);
        std::vector<long long> c(n_, 0);
        dfs_min(n_ - 1, 0, offset, c, best, argmin);
        return {best, argmin};
    }

    // All integer c with Q(c + offset) <= bound.
    std::vector<std::pair<std::vector<long long>, Rational>> enumerate(const RatVec& offset,
                                                                       const Rational& bound) const {
        std::vector<std::pair<std::vector<long long>, Rational>> out;
        std::vector<long long> c(n_, 0);
        dfs_all(n_ - 1, 0, offset, c, bound, out);
        return out;
    }

private:
    int n_;
    RatMat q_;

    std::vector<long long> round_near(const RatVec& offset) const {
        std::vector<long long> c(n_);
        for (int i = 0; i < n_; ++i) c[i] = to_ll(rat_floor(-offset[i] + Rational(1, 2)));
        return c;
    }

    Rational eval(const std::vector<long long>& c, const RatVec& offset) const {
        RatVec x(n_);
        for (int i = 0; i < n_; ++i) x[i] = Rational(c[i]) + offset[i];
        Rational s = 0;
        for (int i = 0; i < n_; ++i) {
            Rational y = x[i];
            for (int j = i + 1; j < n_; ++j) y += q_[i][j] * x[j];
            s += q_[i][i] * y * y;
        }
        return s;
    }

    // center of the level-i scan given fixed x_{i+1..}
    Rational center(int i, const RatVec& offset, const std::vector<long long>& c) const {
        Rational t = -offset[i];
        for (int j = i + 1; j < n_; ++j) t -= q_[i][j] * (Rational(c[j]) + offset[j]);
        return t;
    }

    template <class Fn>
    void scan_level(int i, const Rational& partial, const Rational& limit, const RatVec& offset,
                    std::vector<long long>& c, Fn&& body) const {
        Rational ctr = center(i, offset, c);
        long long c0 = to_ll(rat_floor(ctr));
        for (long long v = c0;; --v) {
            Rational y = Rational(v) - ctr;
            Rational term = q_[i][i] * y * y;
            if (partial + term > limit) break;
            c[i] = v;
            body(partial + term);
        }
        for (long long v = c0 + 1;; ++v) {
            Rational y = Rational(v) - ctr;
            Rational term = q_[i][i] * y * y;
            if (partial + term > limit) break;
            c[i] = v;
            body(partial + term);
        }
    }

    void dfs_min(int i, const Rational& partial, const RatVec& offset, std::vector<long long>& c,
                 Rational& best, std::vector<long long>& argmin) const {
        scan_level(i, partial, best, offset, c, [&](const Rational& acc) {
            if (i == 0) {
                if (acc < best) { best = acc; argmin = c; }
            } else {
                dfs_min(i - 1, acc, offset, c, best, argmin);
            }
        });
    }

    void dfs_all(int i, const Rational& partial, const RatVec& offset, std::vector<long long>& c,
                 const Rational& bound,
                 std::vector<std::pair<std::vector<long long>, Rational>>& out) const {
        scan_level(i, partial, bound, offset, c, [&](const Rational& acc) {
            if (i == 0)
                out.emplace_back(c, acc);
            else
                dfs_all(i - 1, acc, offset, c, bound, out);
        });
    }
};

inline Lattice root_lattice(RootKind kind, int n, const Rational& rescale = 1) {
    if (n <= 0) throw std::domain_error("root_lattice: N must be positive");
    if (rescale <= 0) throw std::domain_error("root_lattice: rescale must be positive");
    Lattice l;
    std::ostringstream name;
    switch (kind) {
        case RootKind::D: {
            if (n > 64) throw std::domain_error("root_lattice: rank too large");
            l.ambient_dim = n;
            if (n == 1) {
                l.basis = {{Rational(2)}};
            } else {
                // <e2+e1, e2-e1, e3-e2, ..., eN-e_{N-1}>
                l.basis.assign(n, RatVec(n, 0));
                l.basis[0][0] = 1; l.basis[0][1] = 1;
                for (int i = 1; i < n; ++i) { l.basis[i][i - 1] = -1; l.basis[i][i] = 1; }
            }
            l.form_scale = rescale;
            name << "D" << n;
            break;
        }
        case RootKind::A: {
            l.ambient_dim = n + 1;
            l.basis.assign(n, RatVec(n + 1, 0));
            for (int i = 0; i < n; ++i) { l.basis[i][i] = -1; l.basis[i][i + 1] = 1; }
            l.form_scale = rescale;
            name << "A" << n;
            break;
        }
        case RootKind::ScaledA1: {
            l.ambient_dim = n;
            l.basis.assign(n, RatVec(n, 0));
            for (int i = 0; i < n; ++i) l.basis[i][i] = 1;
            l.form_scale = 2 * rescale;
            if (n == 1)
                name << "A1";
            else
                name << n << "A1";
            break;
        }
    }
    if (rescale != 1) name << "(" << rat_str(rescale) << ")";
    l.descriptor = name.str();
    l.validate_even_positive();
    return l;
}

struct DiscriminantClass {
    std::vector<long long> coords;  // component in each cyclic factor
    RatVec representative;          // ambient vector, minimal norm in its coset
    Rational min_norm;
};

struct DiscriminantGroup {
    std::vector<Int> orders;        // elementary divisors > 1
    std::vector<RatVec> generators; // dual vectors generating the cyclic factors
    std::vector<DiscriminantClass> classes;  // all |D(L)| classes

    Int size() const {
        Int s = 1;
        for (auto& o : orders) s *= o;
        return s;
    }
};

inline Rational coset_min_norm(const Lattice& l, const RatVec& rep);
inline RatVec coset_min_vector(const Lattice& l, const RatVec& rep);

inline DiscriminantGroup discriminant_group(const Lattice& l) {
    SmithResult snf = smith_normal_form(l.gram_int());
    RatMat dual = l.dual_basis();
    DiscriminantGroup g;
    std::vector<std::pair<Int, RatVec>> factors;  // (order, generator) incl. trivial ones
    int r = l.rank();
    for (int i = 0; i < r; ++i) {
        RatVec gen(l.ambient_dim, 0);
        for (int k = 0; k < r; ++k)
            for (int j = 0; j < l.ambient_dim; ++j)
                gen[j] += Rational(snf.left_inv[k][i]) * dual[k][j];
        factors.emplace_back(snf.divisors[i], gen);
        if (snf.divisors[i] > 1) {
            g.orders.push_back(snf.divisors[i]);
            g.generators.push_back(gen);
        }
    }
    // enumerate every class, reducing each representative to minimal norm
    std::vector<long long> idx(g.orders.size(), 0);
    while (true) {
        RatVec rep(l.ambient_dim, 0);
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (int j = 0; j < l.ambient_dim; ++j)
                rep[j] += Rational(idx[i]) * g.generators[i][j];
        DiscriminantClass cls;
        cls.coords = idx;
        cls.representative = coset_min_vector(l, rep);
        cls.min_norm = l.norm(cls.representative);
        g.classes.push_back(std::move(cls));
        std::size_t p = 0;
        while (p < idx.size()) {
            if (++idx[p] < g.orders[p]) break;
            idx[p] = 0;
            ++p;
        }
        if (p == idx.size()) break;
    }
    return g;
}

inline std::pair<Rational, RatVec> coset_minimum(const Lattice& l, const RatVec& rep) {
    if (!l.in_dual(rep)) throw std::domain_error("coset_min_norm: representative not in the dual lattice");
    auto x0 = l.coords_of(rep);
    QuadFormEnumerator en(l.gram());
    auto [norm, c] = en.min_on_coset(*x0);
    RatVec coords(*x0);
    for (int i = 0; i < l.rank(); ++i) coords[i] += Rational(c[i]);
    return {norm, l.from_coords(coords)};
}

inline Rational coset_min_norm(const Lattice& l, const RatVec& rep) { return coset_minimum(l, rep).first; }
inline RatVec coset_min_vector(const Lattice& l, const RatVec& rep) { return coset_minimum(l, rep).second; }

inline Rational max_min_norm(const Lattice& l) {
    DiscriminantGroup g = discriminant_group(l);
    Rational best = 0;
    for (auto& c : g.classes) best = std::max(best, c.min_norm);
    return best;
}

// Generators of the pairing ideal (scale) and the norm ideal.
inline std::pair<Rational, Rational> scale_and_norm(const Lattice& l) {
    IntMat g = l.gram_int();
    Int s = 0, n = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) {
            s = boost::multiprecision::gcd(s, g[i][j]);
            n = boost::multiprecision::gcd(n, i == j ? g[i][i] : 2 * g[i][j]);
        }
    return {Rational(s), Rational(n)};
}

// An isometry of the ambient Euclidean space (M^T M = 1).
struct OrthMap {
    RatMat matrix;

    explicit OrthMap(RatMat m) : matrix(std::move(m)) {
        RatMat mt = rat_transpose(matrix);
        if (rat_mul(mt, matrix) != rat_identity(matrix.size()))
            throw std::domain_error("OrthMap: matrix is not orthogonal");
    }

    RatVec apply(const RatVec& v) const { return rat_mul_vec(matrix, v); }

    bool stabilizes(const Lattice& l) const {
        for (auto& b : l.basis)
            if (!l.contains(apply(b))) return false;
        return true;
    }

    OrthMap then(const OrthMap& second) const { return OrthMap(rat_mul(second.matrix, matrix)); }
};

inline OrthMap reflection(const RatVec& r) {
    Rational rr = rat_dot(r, r);
    if (rr == 0) throw std::domain_error("reflection: zero vector");
    std::size_t n = r.size();
    RatMat m = rat_identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] -= 2 * r[i] * r[j] / rr;
    return OrthMap(std::move(m));
}

inline OrthMap coordinate_swap(std::size_t dim, std::size_t i, std::size_t j) {
    RatMat m = rat_identity(dim);
    std::swap(m[i], m[j]);
    return OrthMap(std::move(m));
}

// ---- lattice descriptors -------------------------------------------------

// Grammar: "D4", "A2", "A7(2)", "4A1", "A1"; "A1" is the rank one model
// (Z, 2x^2).  "2U+D4(-1)" is handled by the hyperbolic module.
inline Lattice parse_lattice(const std::string& text) {
    std::string s = text;
    Rational rescale = 1;
    auto paren = s.find('(');
    if (paren != std::string::npos) {
        if (s.back() != ')') throw std::invalid_argument("parse_lattice: bad rescale in '" + text + "'");
        rescale = rat_parse(s.substr(paren + 1, s.size() - paren - 2));
        s = s.substr(0, paren);
    }
    if (s.size() >= 3 && s.substr(s.size() - 2) == "A1" && (std::isdigit(s[0]) != 0)) {
        long long n = std::stoll(s.substr(0, s.size() - 2));
        return root_lattice(RootKind::ScaledA1, static_cast<int>(n), rescale);
    }
    if (s == "A1") return root_lattice(RootKind::ScaledA1, 1, rescale);
    if (s.size() >= 2 && (s[0] == 'A' || s[0] == 'D')) {
        long long n = std::stoll(s.substr(1));
        return root_lattice(s[0] == 'A' ? RootKind::A : RootKind::D, static_cast<int>(n), rescale);
    }
    throw std::invalid_argument("parse_lattice: unknown descriptor '" + text + "'");
}

}  // namespace jfl
