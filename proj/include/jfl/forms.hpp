// Constructors for the named forms: eta powers, the odd Jacobi theta
// function, lattice theta products, Eisenstein series, phi_{0,1}, the
// theta block families over N A_1 / D_N / A_N, the D_4 triality thetas,
// the index raising Hecke operator and phi_{0,D4}.
#pragma once

#include "jfl/series.hpp"

#include <functional>
#include <sstream>

namespace jfl {

struct ConstructionMismatch : std::runtime_error {
    explicit ConstructionMismatch(const std::string& m)
        : std::runtime_error("ConstructionMismatch: " + m) {}
};
struct RouteMismatch : std::runtime_error {
    explicit RouteMismatch(const std::string& m) : std::runtime_error("RouteMismatch: " + m) {}
};
struct UnknownFormKey : std::runtime_error {
    explicit UnknownFormKey(const std::string& m) : std::runtime_error("unknown form key: " + m) {}
};

struct Precision {
    long long q24 = 72;  // exclusive cutoff, units of 1/24

    static Precision from_rational(const Rational& q) {
        Rational scaled = q * kQDen;
        if (rat_den(scaled) != 1)
            throw std::invalid_argument("Precision: denominator must divide 24");
        if (scaled <= 0) throw std::invalid_argument("Precision: cutoff must be positive");
        return Precision{to_ll(rat_num(scaled))};
    }
    static Precision q(long long n) { return Precision{n * kQDen}; }

    Precision plus(long long extra24) const { return Precision{q24 + extra24}; }
};

// ---- small exponent plumbing -------------------------------------------

inline FourierSeries append_vars(const FourierSeries& s, int extra) {
    FourierSeries r = FourierSeries::zero(s.vars + extra, s.trunc24);
    r.meta = s.meta;
    r.eden = s.eden;
    for (auto& [k, c] : s.terms) {
        std::vector<int> e = k.e;
        e.resize(k.e.size() + static_cast<std::size_t>(extra), 0);
        r.insert(k.q, std::move(e), c);
    }
    return r;
}

// place a one variable series on axis j of an m variable space
inline FourierSeries on_axis(const FourierSeries& s, int m, int axis) {
    if (s.vars != 1) throw std::invalid_argument("on_axis: series must have one variable");
    RatMat t(m, RatVec(1, 0));
    t[axis][0] = 1;
    return map_exponents(s, t);
}

// substitute z -> (z, u) for an ambient vector u, i.e. exponents e -> e*u
inline FourierSeries on_vector(const FourierSeries& s, const RatVec& u) {
    if (s.vars != 1) throw std::invalid_argument("on_vector: series must have one variable");
    RatMat t(u.size(), RatVec(1));
    for (std::size_t i = 0; i < u.size(); ++i) t[i][0] = u[i];
    return map_exponents(s, t);
}

inline FourierSeries promote(const FourierSeries& s, int m) {
    if (s.vars != 0) throw std::invalid_argument("promote: series must have no elliptic variables");
    return append_vars(s, m);
}

inline FourierSeries mul_monomial(const FourierSeries& s, long long q24_shift, std::vector<int> e_num,
                                  int e_den, const Rational& c) {
    FourierSeries mono = FourierSeries::zero(s.vars, std::numeric_limits<long long>::max() / 4);
    mono.eden = e_den;
    mono.terms[{q24_shift, std::move(e_num)}] = c;
    return mul(s, mono);
}

// ---- eta and theta -----------------------------------------------------

inline FourierSeries euler_product(Precision prec) {
    FourierSeries acc = FourierSeries::one(0, prec.q24);
    for (long long n = 1; n * kQDen < prec.q24; ++n) {
        FourierSeries f = FourierSeries::one(0, prec.q24);
        f.terms[{n * kQDen, {}}] = -1;
        acc = mul(acc, f);
    }
    return acc;
}

// eta^a = q^{a/24} prod (1-q^n)^a; negative powers by exact series inversion
inline FourierSeries eta_power(long long a, Precision prec) {
    FourierSeries r;
    if (a == 0) {
        r = FourierSeries::one(0, prec.q24);
    } else if (a > 0) {
        long long t = std::max<long long>(prec.q24 - a, 0);
        if (t == 0) {
            r = FourierSeries::zero(0, prec.q24);
        } else {
            FourierSeries unit = pow(euler_product(Precision{t}), a);
            r = mul_monomial(unit, a, {}, 1, 1);
        }
    } else {
        long long t = prec.q24 - a;  // -a > 0
        FourierSeries unit = pow(euler_product(Precision{t}), -a);
        FourierSeries inv = divide(FourierSeries::one(0, t), unit);
        r = mul_monomial(inv, a, {}, 1, 1);
    }
    r = restrict_trunc(r, prec.q24);
    r.meta.weight = Rational(a, 2);
    r.meta.index = 0;
    return r;
}

inline FourierSeries eisenstein_series(int k, Precision prec) {
    if (k < 4 || k % 2) throw std::domain_error("eisenstein_series: weight must be even and >= 4");
    FourierSeries r = FourierSeries::one(0, prec.q24);
    Rational factor = Rational(-2 * k) / bernoulli_number(static_cast<unsigned>(k));
    for (long long n = 1; n * kQDen < prec.q24; ++n)
        r.terms[{n * kQDen, {}}] = factor * Rational(sigma_k(n, static_cast<unsigned>(k - 1)));
    r.meta.weight = k;
    r.meta.index = 0;
    return r;
}

enum class ThetaRoute { Sum, Product };

// The odd Jacobi theta function, q^{1/8}(r^{1/2} - r^{-1/2}) + ...
inline FourierSeries jacobi_theta(Precision prec, ThetaRoute route = ThetaRoute::Sum) {
    FourierSeries r;
    if (route == ThetaRoute::Sum) {
        r = FourierSeries::zero(1, prec.q24);
        r.eden = 2;
        for (long long n = 1; 3 * n * n < prec.q24; n += 2) {
            int cp = (n % 4 == 1) ? 1 : -1;
            r.insert(3 * n * n, {static_cast<int>(n)}, cp);
            r.insert(3 * n * n, {static_cast<int>(-n)}, -cp);
        }
    } else {
        // - q^{1/8} r^{-1/2} prod (1 - q^{n-1} r)(1 - q^n r^{-1})(1 - q^n)
        long long t = prec.q24;  // unit-part precision
        FourierSeries acc = FourierSeries::one(1, t);
        auto factor = [&](long long q24, int e) {
            FourierSeries f = FourierSeries::one(1, t);
            f.insert(q24, {e}, -1);
            acc = mul(acc, f);
        };
        for (long long n = 1; (n - 1) * kQDen < t; ++n) {
            factor((n - 1) * kQDen, 1);
            if (n * kQDen < t) {
                factor(n * kQDen, -1);
                factor(n * kQDen, 0);
            }
        }
        r = restrict_trunc(mul_monomial(acc, 3, {-1}, 2, -1), prec.q24);
    }
    r.meta.weight = Rational(1, 2);
    r.meta.index = Rational(1, 2);
    r.meta.lattice = "A1";
    return r;
}

// classical theta constants with characteristic, used for phi_{0,1}
inline FourierSeries theta_const_series(int which, Precision prec) {
    FourierSeries r = FourierSeries::zero(1, prec.q24);
    switch (which) {
        case 2:
            r.eden = 2;
            for (long long n = 1; 3 * n * n < prec.q24; n += 2) {
                r.insert(3 * n * n, {static_cast<int>(n)}, 1);
                r.insert(3 * n * n, {static_cast<int>(-n)}, 1);
            }
            break;
        case 3:
        case 4:
            r.eden = 1;
            r.insert(0, {0}, 1);
            for (long long n = 1; 12 * n * n < prec.q24; ++n) {
                Rational c = (which == 4 && n % 2) ? -1 : 1;
                r.insert(12 * n * n, {static_cast<int>(n)}, c);
                r.insert(12 * n * n, {static_cast<int>(-n)}, c);
            }
            break;
        default:
            throw std::invalid_argument("theta_const_series: which must be 2, 3 or 4");
    }
    r.meta.weight = Rational(1, 2);
    r.meta.index = Rational(1, 2);
    return r;
}

enum class Phi01Route { ThetaQuotient, Eisenstein };

// Jacobi-Eisenstein series e_{k,1} for k in {4,6}, by Cohen's numbers:
// f(n,r) = H(k-1, 4n-r^2) / H(k-1, 0), a function of 4n-r^2 alone.
inline FourierSeries eisenstein_jacobi(int k, Precision prec) {
    if (k != 4 && k != 6) throw std::domain_error("eisenstein_jacobi: k must be 4 or 6");
    unsigned r = static_cast<unsigned>(k - 1);
    Rational h0 = cohen_H(r, 0);
    FourierSeries s = FourierSeries::zero(1, prec.q24);
    s.eden = 1;
    for (long long n = 0; n * kQDen < prec.q24; ++n)
        for (long long l = 0; l * l <= 4 * n; ++l) {
            Rational c = cohen_H(r, 4 * n - l * l) / h0;
            if (c == 0) continue;
            s.insert(n * kQDen, {static_cast<int>(l)}, c);
            if (l) s.insert(n * kQDen, {static_cast<int>(-l)}, c);
        }
    s.meta.weight = k;
    s.meta.index = 1;
    s.meta.lattice = "A1";
    return s;
}

// The weak Jacobi form of weight 0 and index 1, q^0 slice r + 10 + 1/r.
inline FourierSeries phi_0_1(Precision prec, Phi01Route route = Phi01Route::ThetaQuotient) {
    FourierSeries out;
    if (route == Phi01Route::ThetaQuotient) {
        // 4 [ (th2(z)/th2(0))^2 + (th3(z)/th3(0))^2 + (th4(z)/th4(0))^2 ]
        Precision inner = prec.plus(12);
        FourierSeries sum;
        for (int i = 2; i <= 4; ++i) {
            FourierSeries th = theta_const_series(i, inner);
            FourierSeries num = mul(th, th);
            FourierSeries den = promote(set_zero(num, 0), 1);
            FourierSeries quot = divide(num, den);
            sum = (i == 2) ? quot : add(sum, quot);
        }
        out = restrict_trunc(scale(sum, 4), prec.q24);
    } else {
        Precision inner = prec.plus(24);
        FourierSeries e4 = promote(eisenstein_series(4, inner), 1);
        FourierSeries e6 = promote(eisenstein_series(6, inner), 1);
        FourierSeries num = sub(mul(mul(e4, e4), eisenstein_jacobi(4, inner)),
                                mul(e6, eisenstein_jacobi(6, inner)));
        FourierSeries delta = promote(eta_power(24, inner), 1);
        out = restrict_trunc(divide(scale(num, Rational(1, 144)), delta), prec.q24);
    }
    out.meta.weight = 0;
    out.meta.index = 1;
    out.meta.lattice = "A1";
    return out;
}

// builds both routes and insists they agree termwise
inline FourierSeries phi_0_1_checked(Precision prec) {
    FourierSeries a = phi_0_1(prec, Phi01Route::ThetaQuotient);
    FourierSeries b = phi_0_1(prec, Phi01Route::Eisenstein);
    if (!equal_on_common_range(a, b))
        throw ConstructionMismatch("phi_{0,1} theta-quotient and Eisenstein routes disagree");
    return a;
}

inline FourierSeries phi_12_A1(Precision prec) {
    FourierSeries r = mul(promote(eta_power(24, prec), 1), phi_0_1(prec));
    r.meta.lattice = "A1";
    return restrict_trunc(r, prec.q24);
}

// theta_L = prod_j theta(tau, (z, eps_j)) over the ambient coordinates;
// weight m/2, index 1 w.r.t. the unscaled Euclidean form (so 1/s in general).
inline FourierSeries theta_L(const Lattice& l, Precision prec, bool project = false) {
    FourierSeries th = jacobi_theta(prec);
    FourierSeries acc = on_axis(th, l.ambient_dim, 0);
    for (int j = 1; j < l.ambient_dim; ++j) acc = mul(acc, on_axis(th, l.ambient_dim, j));
    if (project && l.rank() < l.ambient_dim) acc = project_onto(acc, l);
    acc.meta.weight = Rational(l.ambient_dim, 2);
    acc.meta.index = 1 / l.form_scale;
    acc.meta.lattice = l.descriptor;
    return acc;
}

// phi (x) phi_{0,1}: multiply by phi_{0,1}(tau, t z_{N+1}) in a fresh variable.
inline FourierSeries tensor_phi01(const FourierSeries& phi, long long t, Precision prec) {
    if (t <= 0) throw std::domain_error("tensor_phi01: t must be positive");
    if (phi.meta.index != Rational(t) * t && !(phi.meta.index == 0 && phi.vars == 0))
        throw std::invalid_argument("tensor_phi01: index metadata must be t^2");
    FourierSeries p01 = phi_0_1(prec);
    RatMat scale_t{{Rational(t)}};
    p01 = map_exponents(p01, scale_t);  // phi01(tau, t z)
    int m = phi.vars + 1;
    FourierSeries r = mul(append_vars(phi, 1), on_axis(p01, m, m - 1));
    r.meta.weight = phi.meta.weight;
    r.meta.index = phi.meta.index == 0 ? Rational(t) * t : phi.meta.index;
    r.meta.lattice = root_lattice(RootKind::ScaledA1, m).descriptor;
    return r;
}

// Graft phi_{0,1} onto an unused coordinate kappa (0-based).
inline FourierSeries graft_phi01(const FourierSeries& phi, int kappa, Precision prec) {
    int m = std::max(phi.vars, kappa + 1);
    FourierSeries base = phi.vars < m ? append_vars(phi, m - phi.vars) : phi;
    if (kappa < phi.vars)
        for (auto& [k, c] : phi.terms) {
            (void)c;
            if (k.e[kappa] != 0)
                throw std::invalid_argument("graft_phi01: coordinate already carries exponents");
        }
    FourierSeries r = mul(base, on_axis(phi_0_1(prec), m, kappa));
    r.meta.weight = phi.meta.weight;
    r.meta.index = phi.meta.index;
    return r;
}

// ---- theta block families -----------------------------------------------

enum class NA1Kind { Rho, Psi };

// rho_{6-N} = eta^{12-3N} theta_{NA1},  psi_{12-2N} = rho^2
inline FourierSeries theta_block_NA1(int n, NA1Kind kind, Precision prec) {
    if (n < 1 || n > 4) throw std::domain_error("theta_block_NA1: N must be in 1..4");
    Lattice l = root_lattice(RootKind::ScaledA1, n);
    // rho has valuation 1/2, so the square needs factors up to prec - 1/2 only
    Precision inner = kind == NA1Kind::Psi ? Precision{std::max<long long>(prec.q24 - 12, 1)} : prec;
    FourierSeries rho = mul(promote(eta_power(12 - 3 * n, inner), n), theta_L(l, inner));
    rho.meta.weight = 6 - n;
    rho.meta.index = Rational(1, 2);
    rho.meta.lattice = l.descriptor;
    if (kind == NA1Kind::Rho) return restrict_trunc(rho, prec.q24);
    FourierSeries psi = restrict_trunc(mul(rho, rho), prec.q24);
    psi.meta.lattice = l.descriptor;
    return psi;
}

// psi_{12-N, D_N} = eta^{24-3N} theta_{D_N}
inline FourierSeries theta_block_DN(int n, Precision prec) {
    if (n < 1 || n > 8) throw std::domain_error("theta_block_DN: N must be in 1..8");
    Lattice l = root_lattice(RootKind::D, n);
    FourierSeries r = mul(promote(eta_power(24 - 3 * n, prec), n), theta_L(l, prec));
    r.meta.weight = 12 - n;
    r.meta.index = 1;
    r.meta.lattice = l.descriptor;
    return r;
}

enum class ANKind { Theta1, Psi };

// theta^{(1)}_{A_N} = eta^{-1} theta_{A_N},  psi_{11-N} = eta^{21-3N} theta_{A_N}
inline FourierSeries theta_block_AN(int n, ANKind kind, Precision prec, bool project = true) {
    if (n < 1 || n > 7) throw std::domain_error("theta_block_AN: N must be in 1..7");
    Lattice l = root_lattice(RootKind::A, n);
    long long eta_pow = kind == ANKind::Theta1 ? -1 : 21 - 3 * n;
    FourierSeries r = mul(promote(eta_power(eta_pow, prec.plus(kQDen)), n + 1), theta_L(l, prec.plus(kQDen)));
    r = restrict_trunc(r, prec.q24);
    if (project) r = project_onto(r, l);
    r.meta.weight = kind == ANKind::Theta1 ? Rational(n, 2) : Rational(11 - n);
    r.meta.index = 1;
    r.meta.lattice = l.descriptor;
    return r;
}

// ---- D_4 triality ---------------------------------------------------------

inline RatVec d4_vector_v() { return {Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(-1, 2)}; }

inline OrthMap d4_sigma_eps1() { return reflection({1, 0, 0, 0}); }
inline OrthMap d4_sigma_v() { return reflection(d4_vector_v()); }
// sigma_{eps1} sigma_v sigma_{eps1}, the third diagram transposition
inline OrthMap d4_sigma_conj() {
    OrthMap a = d4_sigma_eps1(), b = d4_sigma_v();
    return a.then(b).then(a);
}

struct TrialityThetas {
    FourierSeries th1, th2, th3;  // theta_{D4}, theta^{(2)}, theta^{(3)}
};

// Sub-product of one-variable thetas at linear forms given in the basis
// coordinates of the lattice (coefficients per basis vector).
inline FourierSeries theta_factor_product(const Lattice& l, const std::vector<std::vector<int>>& factors,
                                          Precision prec) {
    RatMat dual = l.dual_basis();
    FourierSeries th = jacobi_theta(prec);
    FourierSeries acc;
    bool first = true;
    for (auto& a : factors) {
        RatVec u(l.ambient_dim, 0);
        for (int k = 0; k < l.rank(); ++k)
            for (int j = 0; j < l.ambient_dim; ++j) u[j] += Rational(a[k]) * dual[k][j];
        FourierSeries f = on_vector(th, u);
        acc = first ? f : mul(acc, f);
        first = false;
    }
    return acc;
}

// theta^{(2)} = theta_{D4} | sigma_{eps1} sigma_v sigma_{eps1} and
// theta^{(3)} = theta_{D4} | sigma_v, each checked against its explicit
// coordinate factorization.
inline TrialityThetas triality_thetas(Precision prec) {
    Lattice d4 = root_lattice(RootKind::D, 4);
    TrialityThetas t;
    t.th1 = theta_L(d4, prec);
    t.th2 = orthogonal_slash(t.th1, d4_sigma_conj());
    t.th3 = orthogonal_slash(t.th1, d4_sigma_v());
    t.th2.meta = t.th1.meta;
    t.th3.meta = t.th1.meta;

    const std::vector<std::vector<int>> f1 = {{1, -1, 0, 0}, {1, 1, -1, 0}, {0, 0, 1, -1}, {0, 0, 0, 1}};
    const std::vector<std::vector<int>> f2 = {{0, 1, 0, 0}, {0, -1, 1, 0}, {1, 0, -1, 1}, {1, 0, 0, -1}};
    const std::vector<std::vector<int>> f3 = {{1, 0, 0, 0}, {1, 0, -1, 0}, {0, -1, 0, 1}, {0, -1, 1, -1}};
    if (!equal_on_common_range(t.th1, theta_factor_product(d4, f1, prec)))
        throw RouteMismatch("theta_{D4} disagrees with its coordinate factorization");
    if (!equal_on_common_range(t.th2, theta_factor_product(d4, f2, prec)))
        throw RouteMismatch("theta^{(2)}_{D4} disagrees with its coordinate factorization");
    if (!equal_on_common_range(t.th3, theta_factor_product(d4, f3, prec)))
        throw RouteMismatch("theta^{(3)}_{D4} disagrees with its coordinate factorization");
    return t;
}

// ---- Hecke operator and phi_{0,D4} ----------------------------------------

// Index raising operator at level 2 on integral-q forms of index 1:
//   (phi | T_-(2))(n, l) = 2 [ c(2n, l) + 2^{k-1} c(n/2, l/2) ],
// the overall power of two pinned by the q^0 slice of phi_{0,D4}.
inline FourierSeries hecke_T_minus_2(const FourierSeries& phi, int weight, Precision prec) {
    if (phi.meta.index != 1) throw std::invalid_argument("hecke_T_minus_2: index 1 input required");
    for (auto& [k, c] : phi.terms) {
        (void)c;
        if (k.q % kQDen) throw std::domain_error("hecke_T_minus_2: input must have integral q-exponents");
    }
    FourierSeries r = FourierSeries::zero(phi.vars, std::min(phi.trunc24 / 2, prec.q24));
    r.eden = phi.eden;
    Rational two_pow = boost::multiprecision::pow(Int(2), static_cast<unsigned>(weight - 1));
    for (auto& [k, c] : phi.terms) {
        long long m = k.q / kQDen;
        if (m % 2 == 0) r.insert((m / 2) * kQDen, k.e, 2 * c);  // c(2n, l) part at n = m/2
        if (2 * m * kQDen < r.trunc24)                          // c(n/2, l/2) part at n = 2m
            r.insert(2 * m * kQDen, rescale_exps(k.e, 2), 2 * two_pow * c);
    }
    r.normalize_eden();
    r.meta.weight = phi.meta.weight;
    r.meta.index = 2 * phi.meta.index;
    r.meta.lattice = phi.meta.lattice;
    return r;
}

// phi_{0,D4} = - (2^{-1} psi_{8,D4} | T_-(2)) / psi_{8,D4}:
// weight 0, weak, f(0,0) = 16, q^0 slice 16 + sum s_j^{+-1}.
inline FourierSeries phi_0_D4(Precision prec) {
    Precision inner{2 * prec.q24 + 2 * kQDen};
    FourierSeries psi = theta_block_DN(4, inner);
    FourierSeries tpsi = hecke_T_minus_2(psi, 8, Precision{inner.q24 / 2});
    FourierSeries quot = divide(scale(tpsi, Rational(-1, 2)), psi);
    quot = restrict_trunc(quot, prec.q24);
    quot.meta.weight = 0;
    quot.meta.index = 1;
    quot.meta.lattice = "D4";
    return quot;
}

// ---- named form registry ---------------------------------------------------

inline std::vector<std::string> registry_keys() {
    return {"eta:<a>",  "delta:12",    "e:4",         "e:6",        "e:4,1",      "e:6,1",
            "theta",    "theta:<lat>", "theta1:A<n>", "rho:<k>,<lat>", "psi:<k>,<lat>",
            "psi2:<k>,<lat>", "phi:0,1",  "phi:12,A1",   "phi0:D4",     "triality:1|2|3"};
}

// every concrete instance of the named families, optionally filtered by substring
inline std::vector<std::string> registry_list(const std::string& pattern = "") {
    std::vector<std::string> keys = {"theta", "delta:12", "e:4", "e:6", "e:4,1", "e:6,1",
                                     "phi:0,1", "phi:12,A1", "phi0:D4",
                                     "triality:1", "triality:2", "triality:3"};
    auto na1 = [](int n) { return root_lattice(RootKind::ScaledA1, n).descriptor; };
    for (int n = 1; n <= 4; ++n) {
        keys.push_back("theta:" + na1(n));
        keys.push_back("rho:" + std::to_string(6 - n) + "," + na1(n));
        keys.push_back("psi:" + std::to_string(12 - 2 * n) + "," + na1(n));
    }
    for (int n = 1; n <= 8; ++n) {
        keys.push_back("theta:D" + std::to_string(n));
        keys.push_back("psi:" + std::to_string(12 - n) + ",D" + std::to_string(n));
        keys.push_back("psi2:" + std::to_string(12 - n) + ",D" + std::to_string(n));
    }
    for (int n = 2; n <= 7; ++n) {
        keys.push_back("theta:A" + std::to_string(n));
        keys.push_back("theta1:A" + std::to_string(n));
        keys.push_back("psi:" + std::to_string(11 - n) + ",A" + std::to_string(n));
        keys.push_back("psi2:" + std::to_string(11 - n) + ",A" + std::to_string(n));
    }
    if (pattern.empty()) return keys;
    std::vector<std::string> out;
    for (auto& k : keys)
        if (k.find(pattern) != std::string::npos) out.push_back(k);
    return out;
}

inline FourierSeries build_form(const std::string& key, Precision prec) {
    auto colon = key.find(':');
    std::string head = key.substr(0, colon == std::string::npos ? key.size() : colon);
    std::string rest = colon == std::string::npos ? "" : key.substr(colon + 1);
    auto split_args = [&]() {
        std::vector<std::string> parts;
        std::istringstream is(rest);
        std::string p;
        while (std::getline(is, p, ',')) parts.push_back(p);
        return parts;
    };

    FourierSeries s;
    if (head == "theta" && rest.empty()) {
        s = jacobi_theta(prec);
    } else if (head == "eta") {
        s = eta_power(std::stoll(rest), prec);
    } else if (head == "delta" && rest == "12") {
        s = eta_power(24, prec);
    } else if (head == "e") {
        auto parts = split_args();
        if (parts.size() == 1)
            s = eisenstein_series(std::stoi(parts[0]), prec);
        else if (parts.size() == 2 && parts[1] == "1")
            s = eisenstein_jacobi(std::stoi(parts[0]), prec);
        else
            throw UnknownFormKey(key);
    } else if (head == "theta" || head == "theta1") {
        Lattice l = parse_lattice(rest);
        if (head == "theta1") {
            if (rest.size() < 2 || rest[0] != 'A') throw UnknownFormKey(key);
            s = theta_block_AN(l.rank(), ANKind::Theta1, prec);
        } else {
            s = theta_L(l, prec, /*project=*/l.rank() < l.ambient_dim);
        }
    } else if (head == "rho" || head == "psi" || head == "psi2") {
        auto parts = split_args();
        if (parts.size() != 2) throw UnknownFormKey(key);
        int k = std::stoi(parts[0]);
        Lattice l = parse_lattice(parts[1]);
        bool scaled_a1 = parts[1].find("A1") != std::string::npos;
        int n = l.rank();
        auto base = [&]() -> FourierSeries {
            if (head == "rho") {
                if (!scaled_a1 || k != 6 - n) throw UnknownFormKey(key);
                return theta_block_NA1(n, NA1Kind::Rho, prec);
            }
            FourierSeries f;
            if (scaled_a1) {
                if (k != 12 - 2 * n) throw UnknownFormKey(key);
                f = theta_block_NA1(n, NA1Kind::Psi, prec);
            } else if (parts[1][0] == 'D') {
                if (k != 12 - n) throw UnknownFormKey(key);
                f = theta_block_DN(n, prec);
            } else {
                if (k != 11 - n) throw UnknownFormKey(key);
                f = theta_block_AN(n, ANKind::Psi, prec);
            }
            return f;
        };
        s = base();
        if (head == "psi2") {
            // the psi blocks all have valuation q^1
            FourierSeries f = restrict_trunc(s, std::max<long long>(prec.q24 - kQDen, 1));
            s = restrict_trunc(mul(f, f), prec.q24);
            s.meta.lattice = l.descriptor;
        }
    } else if (head == "phi") {
        if (rest == "0,1")
            s = phi_0_1_checked(prec);
        else if (rest == "12,A1")
            s = phi_12_A1(prec);
        else
            throw UnknownFormKey(key);
    } else if (head == "phi0" && rest == "D4") {
        s = phi_0_D4(prec);
    } else if (head == "triality") {
        TrialityThetas t = triality_thetas(prec);
        s = rest == "1" ? t.th1 : rest == "2" ? t.th2 : rest == "3" ? t.th3 : throw UnknownFormKey(key);
    } else {
        throw UnknownFormKey(key);
    }
    s = restrict_trunc(s, prec.q24);
    q_shift_character(s);
    return s;
}

}  // namespace jfl
