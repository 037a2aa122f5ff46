#include "jfl/checks.hpp"
#include "jfl/forms.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace jfl;

namespace {

Rational coeff_q(const FourierSeries& s, long long n) { return s.coeff(n * kQDen, {}, 1); }

FourierSeries slice0(const FourierSeries& s) {
    FourierSeries r = FourierSeries::zero(s.vars, 1);
    r.eden = s.eden;
    for (auto& [k, c] : s.terms)
        if (k.q == 0) r.insert(0, k.e, c);
    r.normalize_eden();
    return r;
}

}  // namespace

TEST_CASE("eta powers") {
    FourierSeries delta = eta_power(24, Precision::q(8));
    REQUIRE(coeff_q(delta, 1) == 1);
    REQUIRE(coeff_q(delta, 2) == -24);
    REQUIRE(coeff_q(delta, 3) == 252);
    REQUIRE(coeff_q(delta, 4) == -1472);
    REQUIRE(coeff_q(delta, 5) == 4830);
    REQUIRE(coeff_q(delta, 6) == -6048);
    REQUIRE(coeff_q(delta, 7) == -16744);

    REQUIRE(equal_on_common_range(eta_power(0, Precision::q(3)), FourierSeries::one(0, 3 * kQDen)));

    // eta^3 equals the odd-square sum expansion
    REQUIRE(equal_on_common_range(eta_power(3, Precision::q(6)), eta_cube_sum(Precision::q(6))));

    // negative powers invert exactly
    FourierSeries prod = mul(eta_power(-24, Precision::q(6)), eta_power(24, Precision::q(6)));
    REQUIRE(equal_on_common_range(prod, FourierSeries::one(0, prod.trunc24)));
    REQUIRE(eta_power(-1, Precision::q(4)).val24() == -1);
}

TEST_CASE("eisenstein series") {
    FourierSeries e4 = eisenstein_series(4, Precision::q(6));
    REQUIRE(coeff_q(e4, 0) == 1);
    REQUIRE(coeff_q(e4, 1) == 240);
    REQUIRE(coeff_q(e4, 2) == 2160);
    FourierSeries e6 = eisenstein_series(6, Precision::q(6));
    REQUIRE(coeff_q(e6, 1) == -504);
    // independent oracle: -2k/B_k sigma_{k-1}(n) with B_4 = -1/30, B_6 = 1/42
    for (long long n = 1; n < 6; ++n) {
        REQUIRE(coeff_q(e4, n) == Rational(-8) / Rational(-1, 30) * Rational(sigma_k(n, 3)));
        REQUIRE(coeff_q(e6, n) == Rational(-12) / Rational(1, 42) * Rational(sigma_k(n, 5)));
    }
    REQUIRE_THROWS_AS(eisenstein_series(5, Precision::q(4)), std::domain_error);
    REQUIRE_THROWS_AS(eisenstein_series(2, Precision::q(4)), std::domain_error);

    FourierSeries lhs = sub(pow(eisenstein_series(4, Precision::q(10)), 3),
                            pow(eisenstein_series(6, Precision::q(10)), 2));
    REQUIRE(equal_on_common_range(lhs, scale(eta_power(24, Precision::q(10)), 1728)));
}

TEST_CASE("jacobi theta expansions") {
    FourierSeries sum = jacobi_theta(Precision::q(6), ThetaRoute::Sum);
    FourierSeries prod = jacobi_theta(Precision::q(6), ThetaRoute::Product);
    REQUIRE(equal_on_common_range(sum, prod));
    REQUIRE(sum.coeff(3, {1}, 2) == 1);
    REQUIRE(sum.coeff(3, {-1}, 2) == -1);
    REQUIRE(set_zero(sum, 0).empty());  // theta is odd
}

TEST_CASE("lattice theta products") {
    Lattice d4 = root_lattice(RootKind::D, 4);
    FourierSeries th = theta_L(d4, Precision::q(2));
    REQUIRE(th.meta.weight == 2);
    REQUIRE(th.meta.index == 1);
    REQUIRE(support_report(th, &d4, 1).klass == FormClass::Singular);

    Lattice na1 = root_lattice(RootKind::ScaledA1, 2);
    FourierSeries thn = theta_L(na1, Precision::q(2));
    REQUIRE(thn.meta.index == Rational(1, 2));
    REQUIRE(support_report(thn, &na1, Rational(1, 2)).klass == FormClass::Singular);

    // D_1 is a single theta factor
    REQUIRE(equal_on_common_range(theta_L(root_lattice(RootKind::D, 1), Precision::q(3)),
                                  jacobi_theta(Precision::q(3))));
}

TEST_CASE("jacobi eisenstein series by Cohen numbers") {
    FourierSeries e41 = eisenstein_jacobi(4, Precision::q(4));
    REQUIRE(e41.coeff(0, {0}, 1) == 1);
    REQUIRE(e41.coeff(kQDen, {2}, 1) == 1);
    REQUIRE(e41.coeff(kQDen, {1}, 1) == 56);
    REQUIRE(e41.coeff(kQDen, {0}, 1) == 126);
    FourierSeries e61 = eisenstein_jacobi(6, Precision::q(4));
    REQUIRE(e61.coeff(kQDen, {2}, 1) == 1);
    REQUIRE(e61.coeff(kQDen, {1}, 1) == -88);
    REQUIRE(e61.coeff(kQDen, {0}, 1) == -330);

    // coefficients depend only on 4n - r^2
    for (auto* s : {&e41, &e61}) {
        std::map<long long, Rational> by_disc;
        for (auto& [k, c] : s->terms) {
            long long disc = 4 * (k.q / kQDen) - 1LL * k.e[0] * k.e[0];
            auto [it, fresh] = by_disc.emplace(disc, c);
            if (!fresh) REQUIRE(it->second == c);
        }
    }

    // (e4^2 e_{4,1} - e6 e_{6,1})/144 = Delta * phi_{0,1}, pinning the normalization
    Precision p4 = Precision::q(4);
    FourierSeries e4 = promote(eisenstein_series(4, p4), 1);
    FourierSeries e6 = promote(eisenstein_series(6, p4), 1);
    FourierSeries lhs = scale(sub(mul(mul(e4, e4), eisenstein_jacobi(4, p4)),
                                  mul(e6, eisenstein_jacobi(6, p4))),
                              Rational(1, 144));
    FourierSeries rhs = mul(promote(eta_power(24, p4), 1), phi_0_1(p4, Phi01Route::ThetaQuotient));
    REQUIRE(equal_on_common_range(lhs, rhs));
}

TEST_CASE("phi_{0,1}") {
    FourierSeries a = phi_0_1(Precision::q(4), Phi01Route::ThetaQuotient);
    FourierSeries b = phi_0_1(Precision::q(4), Phi01Route::Eisenstein);
    REQUIRE(equal_on_common_range(a, b));
    REQUIRE(equal_on_common_range(phi_0_1_checked(Precision::q(3)), restrict_trunc(a, 3 * kQDen)));

    // phi_{0,1} = phi_{12,A1} / Delta by q-adic division
    FourierSeries quot = divide(phi_12_A1(Precision::q(4)), promote(eta_power(24, Precision::q(4)), 1));
    REQUIRE(equal_on_common_range(quot, a));

    FourierSeries q0 = slice0(a);
    REQUIRE(q0.terms.size() == 3);
    REQUIRE(q0.coeff(0, {0}, 1) == 10);
    REQUIRE(q0.coeff(0, {1}, 1) == 1);
    REQUIRE(q0.coeff(0, {-1}, 1) == 1);

    FourierSeries at0 = set_zero(a, 0);
    REQUIRE(at0.terms.size() == 1);
    REQUIRE(at0.coeff(0, {}, 1) == 12);

    // eta^6 phi_{0,1} starts q^{1/4}(r + 10 + 1/r)
    FourierSeries e6p = mul(promote(eta_power(6, Precision::q(4)), 1), a);
    REQUIRE(e6p.val24() == 6);
    REQUIRE(e6p.coeff(6, {0}, 1) == 10);
    REQUIRE(e6p.coeff(6, {1}, 1) == 1);
    REQUIRE(e6p.coeff(6, {-1}, 1) == 1);
}

TEST_CASE("tensor with phi_{0,1}") {
    FourierSeries psi = theta_block_NA1(1, NA1Kind::Psi, Precision::q(3));
    FourierSeries t = tensor_phi01(psi, 1, Precision::q(3));
    REQUIRE(t.vars == 2);
    REQUIRE(t.meta.weight == psi.meta.weight);
    REQUIRE(t.meta.index == psi.meta.index);
    REQUIRE(proportionality(set_zero(t, 1), psi) == 12);

    // tensor over the constant 1 produces phi_{0,1} itself
    FourierSeries one = FourierSeries::one(0, 3 * kQDen);
    FourierSeries t0 = tensor_phi01(one, 1, Precision::q(3));
    REQUIRE(equal_on_common_range(t0, phi_0_1(Precision::q(3))));

    FourierSeries wrong = psi;
    wrong.meta.index = 3;
    REQUIRE_THROWS_AS(tensor_phi01(wrong, 1, Precision::q(3)), std::invalid_argument);
}

TEST_CASE("graft with phi_{0,1}") {
    FourierSeries psi7 = theta_block_DN(7, Precision::q(2));
    FourierSeries sq = restrict_trunc(mul(restrict_trunc(psi7, 2 * kQDen), restrict_trunc(psi7, 2 * kQDen)),
                                      3 * kQDen);
    sq.meta.index = 1;
    FourierSeries g = graft_phi01(sq, 7, Precision::q(3));
    REQUIRE(g.vars == 8);
    REQUIRE(proportionality(set_zero(g, 7), sq) == 12);
    // support bound (8-N)/2 for D_8(2)
    Lattice d82 = root_lattice(RootKind::D, 8, 2);
    SupportReport rep = support_report(g, &d82, 1);
    REQUIRE(rep.min_hyp >= 0);
    REQUIRE(rep.min_hyp == 0);

    REQUIRE_THROWS_AS(graft_phi01(g, 7, Precision::q(3)), std::invalid_argument);
}

TEST_CASE("theta block families") {
    FourierSeries psi10 = theta_block_NA1(1, NA1Kind::Psi, Precision::q(3));
    REQUIRE(psi10.val24() == kQDen);
    REQUIRE(psi10.coeff(kQDen, {0}, 1) == -2);
    REQUIRE(psi10.coeff(kQDen, {1}, 1) == 1);
    REQUIRE(psi10.coeff(kQDen, {-1}, 1) == 1);

    Lattice na4 = root_lattice(RootKind::ScaledA1, 4);
    FourierSeries psi4 = theta_block_NA1(4, NA1Kind::Psi, Precision::q(3));
    SupportReport rep = support_report(psi4, &na4, 1);
    REQUIRE(rep.klass == FormClass::Holomorphic);
    REQUIRE(rep.min_hyp == 0);

    // rho slashed by [x,y:r] picks up (-1)^{r + sum(x_j + y_j + x_j y_j)}
    FourierSeries rho = theta_block_NA1(2, NA1Kind::Rho, Precision::q(8));
    Lattice na2 = root_lattice(RootKind::ScaledA1, 2);
    for (auto [x0, y0, r0] : {std::tuple<int, int, int>{1, 0, 0}, {0, 1, 1}, {1, 1, 0}}) {
        HeisenbergElement g(na2, {x0, 0}, {y0, y0}, r0);
        int nu = na1_theta_character(g.x, g.y, g.r);
        FourierSeries s = restrict_trunc(heisenberg_slash(rho, g, Rational(1, 2)), 2 * kQDen);
        REQUIRE(proportionality(s, restrict_trunc(rho, 2 * kQDen)) == nu);
    }

    FourierSeries psi8d8 = theta_block_DN(8, Precision::q(2));
    REQUIRE(psi8d8.meta.weight == 4);
    REQUIRE(equal_on_common_range(psi8d8, theta_L(root_lattice(RootKind::D, 8), Precision::q(2))));

    // the qp1 step of the D chain with alpha exactly 1
    FourierSeries psi7d5 = theta_block_DN(5, Precision::q(2));
    FourierSeries psi8d4 = theta_block_DN(4, Precision::q(2));
    REQUIRE(proportionality(quasi_pullback(psi7d5, 4, 1), psi8d4) == 1);

    REQUIRE_THROWS_AS(theta_block_DN(9, Precision::q(2)), std::domain_error);
    REQUIRE_THROWS_AS(theta_block_NA1(5, NA1Kind::Psi, Precision::q(2)), std::domain_error);
}

TEST_CASE("A_N blocks and the singular theta^{(1)}_{A_2}") {
    Lattice a2 = root_lattice(RootKind::A, 2);
    FourierSeries t1 = theta_block_AN(2, ANKind::Theta1, Precision::q(3));
    SupportReport rep = support_report(t1, &a2, 1);
    // holomorphic with min_hyp 0; the eta^{-1} levels cancel against deeper
    // theta shells, so the support is singular
    REQUIRE(rep.min_hyp == 0);
    REQUIRE(rep.klass == FormClass::Singular);

    // raw theta_{A_2} has the projected norm gap (n1+n2+n3)^2 / 12
    FourierSeries raw = theta_L(a2, Precision::q(2), /*project=*/false);
    RatMat proj = a2.projection();
    for (auto& [k, c] : raw.terms) {
        (void)c;
        long long nsum = 0;
        for (int j = 0; j < 3; ++j) nsum += 2LL * k.e[j] / raw.eden;
        RatVec e(3);
        for (int j = 0; j < 3; ++j) e[j] = Rational(k.e[j], raw.eden);
        RatVec pe = rat_mul_vec(proj, e);
        Rational gap = Rational(2 * k.q, kQDen) - rat_dot(pe, pe);
        REQUIRE(gap == Rational(nsum * nsum, 12));
        REQUIRE(gap >= Rational(1, 12));
    }

    FourierSeries psi9 = theta_block_AN(2, ANKind::Psi, Precision::q(3));
    REQUIRE(psi9.meta.weight == 9);
    REQUIRE(support_report(psi9, &a2, 1).klass == FormClass::Cusp);
}

TEST_CASE("triality thetas") {
    TrialityThetas t = triality_thetas(Precision::q(3));  // throws RouteMismatch on disagreement
    Lattice d4 = root_lattice(RootKind::D, 4);
    SupportReport r1 = support_report(t.th1, &d4, 1);
    SupportReport r2 = support_report(t.th2, &d4, 1);
    SupportReport r3 = support_report(t.th3, &d4, 1);
    REQUIRE(r1.klass == FormClass::Singular);
    REQUIRE(r2.klass == FormClass::Singular);
    REQUIRE(r3.klass == FormClass::Singular);
    // the slashed thetas have half-integral exponents in the spinor classes
    REQUIRE(t.th2.eden == 2);
    REQUIRE(t.th3.eden == 2);
    REQUIRE(!equal_on_common_range(t.th2, t.th1));
    REQUIRE(!equal_on_common_range(t.th3, t.th1));
}

TEST_CASE("hecke operator T_-(2)") {
    FourierSeries zero = FourierSeries::zero(4, 8 * kQDen);
    zero.meta.index = 1;
    REQUIRE(hecke_T_minus_2(zero, 8, Precision::q(4)).empty());

    FourierSeries psi = theta_block_DN(4, Precision::q(8));
    FourierSeries t = hecke_T_minus_2(psi, 8, Precision::q(4));
    REQUIRE(t.meta.index == 2);
    REQUIRE(t.val24() == kQDen);  // c'(1, l) = 2 c(2, l)
    for (auto& [k, c] : t.terms) {
        (void)c;
        REQUIRE(k.q % kQDen == 0);
    }

    FourierSeries frac = jacobi_theta(Precision::q(4));
    frac.meta.index = 1;
    REQUIRE_THROWS_AS(hecke_T_minus_2(frac, 8, Precision::q(2)), std::domain_error);
}

TEST_CASE("phi_{0,D4}") {
    FourierSeries p = phi_0_D4(Precision::q(3));
    REQUIRE(p.meta.weight == 0);
    REQUIRE(p.meta.index == 1);
    // q^0 slice is 16 + sum s_j + s_j^{-1}
    FourierSeries q0 = slice0(p);
    REQUIRE(q0.terms.size() == 9);
    REQUIRE(q0.coeff(0, {0, 0, 0, 0}, 1) == 16);
    for (int j = 0; j < 4; ++j) {
        std::vector<int> e(4, 0);
        e[j] = 1;
        REQUIRE(q0.coeff(0, e, 1) == 1);
        e[j] = -1;
        REQUIRE(q0.coeff(0, e, 1) == 1);
    }
    // integral q-support and hyperbolic norms >= -1
    for (auto& [k, c] : p.terms) {
        (void)c;
        REQUIRE(k.q % kQDen == 0);
    }
    Lattice d4 = root_lattice(RootKind::D, 4);
    SupportReport rep = support_report(p, &d4, 1);
    REQUIRE(rep.min_hyp == -1);
    REQUIRE(rep.klass == FormClass::Weak);

    // deeper coefficients, frozen from an independent rebuild of the
    // whole pipeline (theta products, eta^12, Hecke, q-adic division)
    REQUIRE(p.eden == 2);
    REQUIRE(p.coeff(kQDen, {0, 0, 0, 0}, 2) == 640);
    REQUIRE(p.coeff(kQDen, {1, 1, 1, -1}, 2) == -128);  // the v class at q^1
    REQUIRE(p.coeff(2 * kQDen, {0, 0, 0, 0}, 2) == 8832);
    REQUIRE(p.coeff(2 * kQDen, {2, 0, 0, 0}, 2) == 2570);
    REQUIRE(p.coeff(2 * kQDen, {2, 2, 0, 0}, 2) == 640);
    REQUIRE(p.coeff(2 * kQDen, {1, 1, 1, 1}, 2) == -2560);
    // norm-zero terms in the trivial class share one coefficient
    REQUIRE(p.coeff(2 * kQDen, {2, 2, 2, 2}, 2) == 16);
    REQUIRE(p.coeff(2 * kQDen, {4, 0, 0, 0}, 2) == 16);
    long long q1_terms = 0, q2_terms = 0;
    for (auto& [k, co] : p.terms) {
        (void)co;
        if (k.q == kQDen) ++q1_terms;
        if (k.q == 2 * kQDen) ++q2_terms;
    }
    REQUIRE(q1_terms == 81);
    REQUIRE(q2_terms == 217);
}

TEST_CASE("form registry") {
    Precision p = Precision::q(2);
    REQUIRE(equal_on_common_range(build_form("theta:D4", p), theta_L(root_lattice(RootKind::D, 4), p)));
    REQUIRE(equal_on_common_range(build_form("psi:10,A1", p), theta_block_NA1(1, NA1Kind::Psi, p)));
    REQUIRE(equal_on_common_range(build_form("delta:12", p), eta_power(24, p)));
    REQUIRE(build_form("phi:0,1", p).meta.index == 1);
    FourierSeries p2 = build_form("psi2:11,D1", Precision::q(3));
    REQUIRE(p2.meta.weight == 22);
    REQUIRE(p2.val24() == 2 * kQDen);
    REQUIRE_THROWS_AS(build_form("nosuch", p), UnknownFormKey);
    REQUIRE_THROWS_AS(build_form("psi:9,D4", p), UnknownFormKey);  // weight/lattice mismatch

    // congruence classes recorded by the registry match the eta/theta factor counts
    auto cls = [&](const std::string& key) {
        FourierSeries s = build_form(key, Precision::q(3));
        return s.meta.congruence24 ? *s.meta.congruence24 : -1;
    };
    REQUIRE(cls("eta:1") == 1);
    REQUIRE(cls("theta") == 3);
    REQUIRE(cls("psi:8,D4") == 0);     // 12/24 + 4 * 3/24
    REQUIRE(cls("rho:5,A1") == 12);    // 9/24 + 3/24
    REQUIRE(cls("theta:A2") == 9);     // 3 * 3/24
    REQUIRE(cls("phi0:D4") == 0);
}

TEST_CASE("every listed registry key builds") {
    auto keys = registry_list();
    REQUIRE(keys.size() > 50);
    for (auto& k : keys) {
        FourierSeries s = build_form(k, Precision::q(2));
        REQUIRE(s.trunc24 == 2 * kQDen);
    }
    REQUIRE(registry_list("D4").size() >= 4);
    REQUIRE(registry_list("zzz").empty());
}
