// Exact rational arithmetic helpers and the bits of elementary number
// theory used by the form constructors: Bernoulli numbers/polynomials,
// divisor sums, Kronecker symbols and Cohen's H function.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace jfl {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Int rat_floor(const Rational& q) { return floor_div(rat_num(q), rat_den(q)); }

inline Int rat_ceil(const Rational& q) { return -rat_floor(-q); }

// Fractional part in [0,1).
inline Rational rat_frac(const Rational& q) { return q - Rational(rat_floor(q)); }

inline long long to_ll(const Int& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::overflow_error("integer does not fit in long long");
    return static_cast<long long>(v);
}

inline long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { long long t = a % b; a = b; b = t; }
    return a;
}

inline long long lcm_ll(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_ll(a, b) * b;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Int r = 1;
    for (unsigned i = 0; i < k; ++i) { r *= n - i; r /= i + 1; }
    return r;
}

// B_0 = 1, B_1 = -1/2, B_2 = 1/6, ...  (the convention with B_1 = -1/2,
// so that e_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n has B_4 = -1/30).
inline Rational bernoulli_number(unsigned n) {
    static std::vector<Rational> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    while (cache.size() <= n) {
        unsigned m = static_cast<unsigned>(cache.size());
        if (m == 0) { cache.emplace_back(1); continue; }
        // sum_{j=0}^{m} C(m+1,j) B_j = 0
        Rational s = 0;
        for (unsigned j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * cache[j];
        cache.push_back(-s / Rational(m + 1));
    }
    return cache[n];
}

// B_n(x) = sum_k C(n,k) B_k x^{n-k}
inline Rational bernoulli_poly(unsigned n, const Rational& x) {
    Rational s = 0, xp = 1;
    // accumulate from k = n down to 0 so powers of x build up once
    for (int k = static_cast<int>(n); k >= 0; --k) {
        s += Rational(binomial(n, static_cast<unsigned>(k))) * bernoulli_number(static_cast<unsigned>(k)) * xp;
        if (k > 0) xp *= x;
    }
    return s;
}

inline std::vector<std::pair<long long, int>> factorize(long long n) {
    if (n < 0) n = -n;
    std::vector<std::pair<long long, int>> out;
    for (long long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline int moebius(long long n) {
    if (n <= 0) throw std::domain_error("moebius: n must be positive");
    int m = 1;
    for (auto& [p, e] : factorize(n)) {
        if (e > 1) return 0;
        (void)p;
        m = -m;
    }
    return m;
}

inline Int sigma_k(long long n, unsigned k) {
    if (n <= 0) throw std::domain_error("sigma_k: n must be positive");
    Int s = 0;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        s += boost::multiprecision::pow(Int(d), k);
        long long e = n / d;
        if (e != d) s += boost::multiprecision::pow(Int(e), k);
    }
    return s;
}

// Kronecker symbol (a|n), defined for all integers.
inline int kronecker(long long a, long long n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) sign = -sign;
    }
    int t = 0;
    while (n % 2 == 0) { n /= 2; ++t; }
    if (t > 0) {
        if (a % 2 == 0) return 0;
        long long am8 = ((a % 8) + 8) % 8;
        if (t % 2 == 1 && (am8 == 3 || am8 == 5)) sign = -sign;
    }
    a %= n;
    if (a < 0) a += n;
    // Jacobi symbol (a|n) for odd positive n
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long nm8 = n % 8;
            if (nm8 == 3 || nm8 == 5) sign = -sign;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) sign = -sign;
        a %= n;
    }
    return n == 1 ? sign : 0;
}

// Generalized Bernoulli number B_{n,chi_D} for the Kronecker character mod |D|.
inline Rational bernoulli_chi(unsigned n, long long D) {
    long long m = D < 0 ? -D : D;
    if (m == 0) throw std::domain_error("bernoulli_chi: D must be nonzero");
    Rational s = 0;
    for (long long a = 1; a <= m; ++a) {
        int chi = kronecker(D, a);
        if (chi) s += Rational(chi) * bernoulli_poly(n, Rational(a, m));
    }
    return s * Rational(boost::multiprecision::pow(Int(m), n - 1));
}

// L(1-n, chi_D) = -B_{n,chi_D}/n
inline Rational dirichlet_L_neg(unsigned n, long long D) {
    return -bernoulli_chi(n, D) / Rational(n);
}

inline bool is_fundamental_discriminant(long long D) {
    if (D == 1) return true;
    long long m4 = ((D % 4) + 4) % 4;
    auto squarefree = [](long long v) {
        for (auto& [p, e] : factorize(v)) { (void)p; if (e > 1) return false; }
        return true;
    };
    if (m4 == 1) return squarefree(D);
    if (m4 == 0) {
        long long q = D / 4;
        long long qm4 = ((q % 4) + 4) % 4;
        return (qm4 == 2 || qm4 == 3) && squarefree(q);
    }
    return false;
}

// Write D0 = D f^2 with D fundamental; requires D0 = 0,1 mod 4.
inline void split_discriminant(long long D0, long long& D, long long& f) {
    if (((D0 % 4) + 4) % 4 != 0 && ((D0 % 4) + 4) % 4 != 1)
        throw std::domain_error("split_discriminant: not a discriminant");
    long long s = 1;
    for (auto& [p, e] : factorize(D0)) {
        (void)p;
        for (int i = 0; i + 1 < e; i += 2) s *= p;
    }
    // s^2 | D0; peel factors of s until the cofactor is fundamental
    for (long long g = s; g >= 1; --g) {
        if (s % g) continue;
        long long cand = D0 / (g * g);
        if ((((cand % 4) + 4) % 4 == 0 || ((cand % 4) + 4) % 4 == 1) && is_fundamental_discriminant(cand)) {
            D = cand;
            f = g;
            return;
        }
    }
    throw std::logic_error("split_discriminant: no fundamental part found");
}

// Cohen's function H(r, N) for r >= 1, N >= 0.
inline Rational cohen_H(unsigned r, long long N) {
    if (N < 0) return 0;
    if (N == 0) return -bernoulli_number(2 * r) / Rational(2 * r);
    long long D0 = (r % 2 == 0) ? N : -N;
    long long m4 = ((D0 % 4) + 4) % 4;
    if (m4 == 2 || m4 == 3) return 0;
    long long D, f;
    split_discriminant(D0, D, f);
    Rational s = 0;
    for (long long d = 1; d <= f; ++d) {
        if (f % d) continue;
        int mu = moebius(d);
        if (!mu) continue;
        int chi = kronecker(D, d);
        if (!chi) continue;
        s += Rational(mu * chi) * Rational(boost::multiprecision::pow(Int(d), r - 1)) *
             Rational(sigma_k(f / d, 2 * r - 1));
    }
    return dirichlet_L_neg(r, D) * s;
}

// Canonical string form of a rational: "p/q" reduced, or "p" when integral.
inline std::string rat_str(const Rational& q) { return q.str(); }

inline Rational rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rat_parse: empty string");
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
    }
}

}  // namespace jfl
