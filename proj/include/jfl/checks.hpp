// Cross-cutting identity checks shared by the command line verifier and the
// acceptance suite: theta expansions, eta^3, phi_{0,1} slices, Heisenberg
// characters and the bigraded ring index identity.
#pragma once

#include "jfl/forms.hpp"

#include <random>

namespace jfl {

struct CheckItem {
    std::string name;
    bool ok = false;
    std::string detail;
};

inline CheckItem check_item(std::string name, bool ok, std::string detail = "") {
    return CheckItem{std::move(name), ok, std::move(detail)};
}

// eta^3 = sum_{n > 0 odd} (-4|n) n q^{n^2/8}
inline FourierSeries eta_cube_sum(Precision prec) {
    FourierSeries r = FourierSeries::zero(0, prec.q24);
    for (long long n = 1; 3 * n * n < prec.q24; n += 2)
        r.insert(3 * n * n, {}, Rational((n % 4 == 1 ? 1 : -1) * n));
    r.meta.weight = Rational(3, 2);
    return r;
}

// nu([x,y:r]) = e^{pi i t ((x,x) + (y,y) - (x,y) + 2r)}, reduced to a sign.
inline int heisenberg_nu_sign(const HeisenbergElement& g, const Rational& t) {
    RatVec xa = g.x_ambient(), ya = g.y_ambient();
    const Lattice& l = g.lattice;
    Rational m = t * (l.norm(xa) + l.norm(ya) - l.bilinear(xa, ya) + 2 * g.r);
    if (rat_den(m) != 1) throw std::domain_error("heisenberg_nu_sign: character not binary");
    return rat_num(m) % 2 == 0 ? 1 : -1;
}

// The N A_1 character of the theta product, (-1)^{r + sum x_j + y_j + x_j y_j}.
inline int na1_theta_character(const IntVec& x, const IntVec& y, const Rational& r) {
    if (rat_den(r) != 1) throw std::domain_error("na1_theta_character: r must be integral");
    Int m = rat_num(r);
    for (std::size_t j = 0; j < x.size(); ++j) m += x[j] + y[j] + x[j] * y[j];
    return m % 2 == 0 ? 1 : -1;
}

// Slash theta_{NA1} by [x,y:r] through the series kernel and verify every
// surviving term against the closed-form coefficients of nu * theta_{NA1}.
// Requires at least one surviving term so the check cannot pass vacuously.
inline bool check_theta_slash_character(const FourierSeries& theta, const HeisenbergElement& g,
                                        std::string* why = nullptr) {
    const Rational t(1, 2);  // index of theta_{NA1}
    int nu = heisenberg_nu_sign(g, t);
    if (nu != na1_theta_character(g.x, g.y, g.r)) {
        if (why) *why = "character closed forms disagree";
        return false;
    }
    FourierSeries s = heisenberg_slash(theta, g, t);
    if (s.empty()) {
        if (why) *why = "no surviving terms; raise the input precision";
        return false;
    }
    for (auto& [k, c] : s.terms) {
        Rational expect = nu;
        long long qq = 0;
        for (int j = 0; j < s.vars; ++j) {
            long long num = 2LL * k.e[j];
            if (num % s.eden) {
                if (why) *why = "image exponent off the half-odd grid";
                return false;
            }
            long long n = num / s.eden;
            if (n % 2 == 0) {
                if (why) *why = "image exponent even";
                return false;
            }
            long long nm4 = ((n % 4) + 4) % 4;
            expect *= (nm4 == 1) ? 1 : -1;
            qq += 3 * n * n;
        }
        if (qq != k.q || c != expect) {
            if (why) *why = "term mismatch at q24=" + std::to_string(k.q);
            return false;
        }
    }
    return true;
}

// Exhaustive character check over the box |x_j|, |y_j| <= box, r in {0, 1}.
inline CheckItem check_heisenberg_box(int nvars, int box, Precision theta_prec,
                                      long long sample = 0, unsigned seed = 7) {
    Lattice na1 = root_lattice(RootKind::ScaledA1, nvars);
    FourierSeries theta = theta_L(na1, theta_prec);
    long long side = 2 * box + 1;
    long long total = 1;
    for (int i = 0; i < 2 * nvars; ++i) total *= side;

    std::mt19937 rng(seed);
    std::vector<long long> picks;
    if (sample > 0) {
        std::uniform_int_distribution<long long> dist(0, total - 1);
        for (long long i = 0; i < sample; ++i) picks.push_back(dist(rng));
        std::sort(picks.begin(), picks.end());
        picks.erase(std::unique(picks.begin(), picks.end()), picks.end());
    }

    long long tested = 0;
    for (long long idx = 0; idx < total; ++idx) {
        if (sample > 0 && !std::binary_search(picks.begin(), picks.end(), idx)) continue;
        long long code = idx;
        IntVec x(nvars), y(nvars);
        for (int i = 0; i < nvars; ++i) { x[i] = code % side - box; code /= side; }
        for (int i = 0; i < nvars; ++i) { y[i] = code % side - box; code /= side; }
        for (long long r = 0; r <= 1; ++r) {
            HeisenbergElement g(na1, x, y, Rational(r));
            std::string why;
            if (!check_theta_slash_character(theta, g, &why)) {
                std::string name = "heisenberg character " + na1.descriptor + " box " +
                                   std::to_string(box);
                return check_item(name, false, "failed at x/y index " + std::to_string(idx) + ": " + why);
            }
            ++tested;
        }
    }
    std::string name = "heisenberg character " + na1.descriptor + " box " + std::to_string(box) +
                       (sample > 0 ? " (sampled)" : " (exhaustive)");
    return check_item(name, true, std::to_string(tested) + " elements");
}

// Remark (e): the bigraded ring index identity, checked on random rational data.
inline CheckItem check_index_identity(int count, unsigned seed = 11) {
    std::mt19937 rng(seed);
    auto rnd_rat = [&](int lo, int hi, int den_max) {
        std::uniform_int_distribution<int> num(lo, hi), den(1, den_max);
        return Rational(num(rng), den(rng));
    };
    for (int i = 0; i < count; ++i) {
        Rational k1 = abs(rnd_rat(-12, 12, 4)), k2 = abs(rnd_rat(-12, 12, 4));
        Rational t1 = abs(rnd_rat(1, 9, 3)) + Rational(1, 7), t2 = abs(rnd_rat(1, 9, 3)) + Rational(1, 5);
        std::uniform_int_distribution<int> dim_dist(1, 4);
        int dim = dim_dist(rng);
        RatVec x(dim), y(dim);
        for (int j = 0; j < dim; ++j) { x[j] = rnd_rat(-6, 6, 5); y[j] = rnd_rat(-6, 6, 5); }
        RatVec xy(dim), ty_tx(dim);
        for (int j = 0; j < dim; ++j) { xy[j] = x[j] + y[j]; ty_tx[j] = t1 * y[j] - t2 * x[j]; }
        Rational lhs = k1 + k2 - rat_dot(xy, xy) / (2 * (t1 + t2));
        Rational rhs = (k1 - rat_dot(x, x) / (2 * t1)) + (k2 - rat_dot(y, y) / (2 * t2)) +
                       rat_dot(ty_tx, ty_tx) / (2 * t1 * t2 * (t1 + t2));
        if (lhs != rhs)
            return check_item("bigraded index identity", false, "failed at sample " + std::to_string(i));
    }
    return check_item("bigraded index identity", true, std::to_string(count) + " random samples");
}

// The quick identity bundle behind `verify identities`; each check carries
// its own natural range.
inline std::vector<CheckItem> identities_report() {
    std::vector<CheckItem> items;

    Precision p6 = Precision::q(6);
    items.push_back(check_item("theta triple product = theta sum",
                               equal_on_common_range(jacobi_theta(p6, ThetaRoute::Sum),
                                                     jacobi_theta(p6, ThetaRoute::Product)),
                               "q < 6"));
    items.push_back(check_item("eta^3 sum expansion",
                               equal_on_common_range(eta_power(3, p6), eta_cube_sum(p6)), "q < 6"));
    items.push_back(check_item(
        "d theta / dz at 0 = eta^3",
        equal_on_common_range(quasi_pullback(jacobi_theta(p6), 0, 1), eta_power(3, p6)), "normalized"));

    {
        Precision p4 = Precision::q(4);
        FourierSeries a = phi_0_1(p4, Phi01Route::ThetaQuotient);
        FourierSeries b = phi_0_1(p4, Phi01Route::Eisenstein);
        items.push_back(check_item("phi_{0,1} construction routes", equal_on_common_range(a, b), "q < 4"));
        FourierSeries q0 = FourierSeries::zero(1, kQDen);
        q0.insert(0, {-1}, 1);
        q0.insert(0, {0}, 10);
        q0.insert(0, {1}, 1);
        items.push_back(check_item("phi_{0,1} q^0 slice = r + 10 + 1/r",
                                   equal_on_common_range(restrict_trunc(a, kQDen), q0), ""));
        FourierSeries at0 = set_zero(a, 0);
        items.push_back(check_item("phi_{0,1}(tau, 0) = 12",
                                   !at0.empty() && at0.terms.begin()->first.q == 0 &&
                                       at0.terms.begin()->second == 12 && at0.terms.size() == 1,
                                   ""));
    }

    {
        Precision p10 = Precision::q(10);
        FourierSeries lhs = sub(pow(eisenstein_series(4, p10), 3), pow(eisenstein_series(6, p10), 2));
        items.push_back(check_item("e4^3 - e6^2 = 1728 Delta",
                                   equal_on_common_range(lhs, scale(eta_power(24, p10), 1728)), "q < 10"));
    }

    items.push_back(check_index_identity(100));
    items.push_back(check_heisenberg_box(1, 2, Precision::q(2)));
    items.push_back(check_heisenberg_box(2, 1, Precision::q(2)));
    return items;
}

}  // namespace jfl
