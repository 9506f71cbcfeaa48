#include "nfbertrand/splitting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>

#include <gmpxx.h>

#include "nfbertrand/errors.hpp"
#include "nfbertrand/field.hpp"

namespace nfb {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return u64(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while (!(d & 1)) d >>= 1, ++s;
    // deterministic for 64-bit with these witnesses
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// ---- polynomial arithmetic over F_p -----------------------------------
// coefficients ascending, trailing (leading) coefficient nonzero

using Poly = std::vector<u64>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return int(f.size()) - 1; }

Poly make_monic(Poly f, u64 p) {
    trim(f);
    if (f.empty()) return f;
    u64 lc = f.back();
    if (lc == 1) return f;
    u64 inv = powmod(lc, p - 2, p);
    for (auto& c : f) c = mulmod(c, inv, p);
    return f;
}

Poly mul(const Poly& a, const Poly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + u128(a[i]) * b[j]) % p;
    }
    trim(r);
    return r;
}

// remainder of a by monic-or-not b
Poly mod(Poly a, const Poly& b, u64 p) {
    trim(a);
    int db = degree(b);
    u64 inv = powmod(b.back(), p - 2, p);
    while (degree(a) >= db) {
        u64 q = mulmod(a.back(), inv, p);
        int shift = degree(a) - db;
        for (int i = 0; i <= db; ++i) {
            u64 t = mulmod(q, b[i], p);
            u64& c = a[i + shift];
            c = (c >= t) ? c - t : c + p - t;
        }
        trim(a);
    }
    return a;
}

Poly gcd(Poly a, Poly b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, p);
}

Poly divide_exact(const Poly& a, const Poly& b, u64 p) {
    Poly rem = a, q(std::max<int>(degree(a) - degree(b) + 1, 0), 0);
    trim(rem);
    int db = degree(b);
    u64 inv = powmod(b.back(), p - 2, p);
    while (degree(rem) >= db) {
        u64 c = mulmod(rem.back(), inv, p);
        int shift = degree(rem) - db;
        q[shift] = c;
        for (int i = 0; i <= db; ++i) {
            u64 t = mulmod(c, b[i], p);
            u64& rc = rem[i + shift];
            rc = (rc >= t) ? rc - t : rc + p - t;
        }
        trim(rem);
    }
    trim(q);
    return q;
}

Poly derivative(const Poly& f, u64 p) {
    Poly d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(mulmod(f[i], i % p, p));
    trim(d);
    return d;
}

Poly mulmod_poly(const Poly& a, const Poly& b, const Poly& m, u64 p) {
    return mod(mul(a, b, p), m, p);
}

Poly powmod_poly(Poly base, const mpz_class& e, const Poly& m, u64 p) {
    Poly r{1};
    base = mod(std::move(base), m, p);
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = mulmod_poly(r, base, m, p);
        base = mulmod_poly(base, base, m, p);
        k >>= 1;
    }
    return r;
}

// f(x^(1/p)): coefficients at indices divisible by p (valid in char p)
Poly shrink(const Poly& f, u64 p) {
    Poly g;
    for (std::size_t i = 0; i < f.size(); i += p) g.push_back(f[i]);
    trim(g);
    return g;
}

void squarefree_decompose(const Poly& f, u64 p, int outer_mult,
                          std::vector<std::pair<Poly, int>>& out) {
    if (degree(f) < 1) return;
    Poly fp = derivative(f, p);
    if (fp.empty()) {
        squarefree_decompose(shrink(f, p), p, outer_mult * int(p), out);
        return;
    }
    Poly c = gcd(f, fp, p);
    Poly w = divide_exact(f, c, p);
    int i = 1;
    while (degree(w) > 0) {
        Poly y = gcd(w, c, p);
        Poly z = divide_exact(w, y, p);
        if (degree(z) > 0) out.emplace_back(make_monic(z, p), outer_mult * i);
        w = std::move(y);
        c = divide_exact(c, w, p);
        ++i;
    }
    if (degree(c) > 0) squarefree_decompose(shrink(c, p), p, outer_mult * int(p), out);
}

// equal-degree splitting of a squarefree product of degree-d irreducibles
void equal_degree(const Poly& g, int d, u64 p, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (degree(g) == d) {
        out.push_back(g);
        return;
    }
    if (d == 1 && p < 1000) {
        // deterministic root search
        for (u64 r = 0; r < p; ++r) {
            u64 v = 0;
            for (auto it = g.rbegin(); it != g.rend(); ++it) v = (mulmod(v, r, p) + *it) % p;
            if (v == 0) out.push_back(r == 0 ? Poly{0, 1} : Poly{p - r, 1});
        }
        return;
    }
    // Cantor-Zassenhaus
    while (true) {
        Poly u(degree(g), 0);
        for (auto& c : u) c = rng() % p;
        u.push_back(1);
        Poly t;
        if (p == 2) {
            // trace map u + u^2 + ... + u^(2^(d-1))
            Poly acc = mod(u, g, p), term = acc;
            for (int i = 1; i < d; ++i) {
                term = mulmod_poly(term, term, g, p);
                Poly s(std::max(acc.size(), term.size()), 0);
                for (std::size_t j = 0; j < s.size(); ++j) {
                    u64 a = j < acc.size() ? acc[j] : 0;
                    u64 b = j < term.size() ? term[j] : 0;
                    s[j] = a ^ b;
                }
                trim(s);
                acc = std::move(s);
            }
            t = gcd(acc, g, p);
        } else {
            mpz_class e;
            mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
            e = (e - 1) / 2;
            Poly w = powmod_poly(u, e, g, p);
            if (w.empty()) continue;
            w[0] = (w[0] + p - 1) % p; // w - 1
            trim(w);
            t = gcd(w, g, p);
        }
        if (degree(t) > 0 && degree(t) < degree(g)) {
            equal_degree(t, d, p, rng, out);
            equal_degree(divide_exact(g, t, p), d, p, rng, out);
            return;
        }
    }
}

std::vector<std::pair<Poly, int>> factor_squarefree(const Poly& f, u64 p, std::mt19937_64& rng) {
    std::vector<std::pair<Poly, int>> irreducibles;
    Poly rest = f;
    Poly x{0, 1};
    Poly h = mod(x, rest, p); // x^(p^d) mod rest, built incrementally
    int d = 0;
    while (degree(rest) >= 1) {
        ++d;
        if (2 * d > degree(rest)) {
            irreducibles.emplace_back(rest, degree(rest));
            break;
        }
        h = powmod_poly(h, mpz_class(static_cast<unsigned long>(p)), rest, p);
        Poly hx = h;
        // h - x
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = (hx[1] + p - 1) % p;
        trim(hx);
        Poly g = gcd(hx, rest, p);
        if (degree(g) > 0) {
            std::vector<Poly> parts;
            equal_degree(g, d, p, rng, parts);
            for (auto& q : parts) irreducibles.emplace_back(make_monic(std::move(q), p), d);
            rest = divide_exact(rest, g, p);
            h = mod(h, rest, p);
        }
    }
    return irreducibles;
}

Poly reduce_int_poly(const std::vector<std::int64_t>& poly, u64 p) {
    Poly f;
    f.reserve(poly.size());
    for (auto c : poly) {
        std::int64_t r = c % std::int64_t(p);
        if (r < 0) r += std::int64_t(p);
        f.push_back(u64(r));
    }
    trim(f);
    return f;
}

mpz_class resultant(const std::vector<mpz_class>& f, const std::vector<mpz_class>& g) {
    // Sylvester matrix determinant via fraction-free Bareiss
    int n = int(f.size()) - 1, m = int(g.size()) - 1;
    int size = n + m;
    std::vector<std::vector<mpz_class>> M(size, std::vector<mpz_class>(size, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) M[i][i + j] = f[n - j];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) M[m + i][i + j] = g[m - j];

    int sign = 1;
    mpz_class prev = 1;
    for (int k = 0; k + 1 < size; ++k) {
        if (M[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < size; ++i)
                if (M[i][k] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            std::swap(M[k], M[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < size; ++i)
            for (int j = k + 1; j < size; ++j)
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
        prev = M[k][k];
    }
    return sign * M[size - 1][size - 1];
}

mpz_class poly_disc_mpz(const std::vector<std::int64_t>& poly) {
    if (poly.size() < 2 || poly.back() != 1)
        throw validation_error("poly_discriminant: polynomial must be monic of degree >= 1");
    int d = int(poly.size()) - 1;
    std::vector<mpz_class> f(poly.begin(), poly.end());
    std::vector<mpz_class> fp;
    for (int i = 1; i <= d; ++i) fp.push_back(mpz_class(std::int64_t(i)) * f[i]);
    while (!fp.empty() && fp.back() == 0) fp.pop_back();
    if (fp.empty()) return 0;
    mpz_class res = resultant(f, fp);
    int sign = ((std::int64_t(d) * (d - 1) / 2) % 2 == 0) ? 1 : -1;
    return sign * res;
}

} // namespace

int kronecker(std::int64_t D, std::uint64_t n) {
    if (n == 0) return (D == 1 || D == -1) ? 1 : 0;
    int result = 1;
    auto dmod8 = int(((D % 8) + 8) % 8);
    while (n % 2 == 0) {
        n /= 2;
        if (D % 2 == 0) return 0;
        if (dmod8 == 3 || dmod8 == 5) result = -result;
    }
    if (n == 1) return result;
    u64 a = u64(((D % std::int64_t(n)) + std::int64_t(n)) % std::int64_t(n));
    u64 nn = n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            if (nn % 8 == 3 || nn % 8 == 5) result = -result;
        }
        std::swap(a, nn);
        if (a % 4 == 3 && nn % 4 == 3) result = -result;
        a %= nn;
    }
    return nn == 1 ? result : 0;
}

SplittingRecord split_quadratic(std::int64_t D, std::int64_t p) {
    if (!is_fundamental_discriminant(D))
        throw validation_error("split_quadratic: " + std::to_string(D) + " is not a fundamental discriminant");
    if (p < 2 || !miller_rabin(u64(p)))
        throw validation_error("split_quadratic: " + std::to_string(p) + " is not prime");
    SplittingRecord rec;
    rec.prime = p;
    switch (kronecker(D, u64(p))) {
        case 1: rec.factors = {{1, 1}, {1, 1}}; break;
        case -1: rec.factors = {{1, 2}}; break;
        default: rec.factors = {{2, 1}}; break;
    }
    return rec;
}

std::vector<PolyFactor> factor_mod_p(const std::vector<std::int64_t>& poly, std::int64_t p,
                                     std::uint64_t seed) {
    if (p < 2 || !miller_rabin(u64(p)))
        throw validation_error("factor_mod_p: modulus is not prime");
    if (poly.empty() || poly.back() != 1)
        throw validation_error("factor_mod_p: polynomial must be monic");
    Poly f = reduce_int_poly(poly, u64(p));
    if (degree(f) < 1) throw computation_error("factor_mod_p: polynomial vanishes mod p");

    // per-prime deterministic stream regardless of call order
    std::mt19937_64 rng(seed ^ (u64(p) * 0x9E3779B97F4A7C15ull));

    std::vector<std::pair<Poly, int>> squarefree;
    squarefree_decompose(f, u64(p), 1, squarefree);

    std::vector<PolyFactor> out;
    for (auto& [part, mult] : squarefree) {
        for (auto& [irr, deg] : factor_squarefree(part, u64(p), rng)) {
            (void)deg;
            out.push_back({irr, mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
        if (a.coeffs.size() != b.coeffs.size()) return a.coeffs.size() < b.coeffs.size();
        if (a.multiplicity != b.multiplicity) return a.multiplicity < b.multiplicity;
        return std::lexicographical_compare(a.coeffs.begin(), a.coeffs.end(), b.coeffs.begin(),
                                            b.coeffs.end());
    });
    return out;
}

std::string poly_discriminant(const std::vector<std::int64_t>& poly) {
    return poly_disc_mpz(poly).get_str();
}

bool disc_divisible_by_p2(const std::vector<std::int64_t>& poly, std::int64_t p) {
    mpz_class disc = poly_disc_mpz(poly);
    mpz_class p2 = mpz_class(p) * p;
    return mpz_divisible_p(disc.get_mpz_t(), p2.get_mpz_t());
}

SplittingRecord split_monogenic(const std::vector<std::int64_t>& poly, std::int64_t p,
                                std::uint64_t seed) {
    SplittingRecord rec;
    rec.prime = p;
    rec.reliable = !disc_divisible_by_p2(poly, p);
    for (const auto& factor : factor_mod_p(poly, p, seed))
        rec.factors.emplace_back(factor.multiplicity, int(factor.coeffs.size()) - 1);
    std::sort(rec.factors.begin(), rec.factors.end(),
              [](auto a, auto b) { return a.second != b.second ? a.second < b.second : a.first < b.first; });
    if (rec.degree() != int(poly.size()) - 1)
        throw computation_error("split_monogenic: factor degrees do not sum to deg f at p=" +
                                std::to_string(p));
    return rec;
}

SplittingRecord split_prime(const NumberField& field, std::int64_t p, std::uint64_t seed) {
    if (auto it = field.splitting_overrides.find(p); it != field.splitting_overrides.end()) {
        SplittingRecord rec;
        rec.prime = p;
        rec.factors = it->second;
        if (rec.degree() != field.degree)
            throw validation_error("splitting override at p=" + std::to_string(p) +
                                   " violates sum e_i f_i = d for field '" + field.label + "'");
        return rec;
    }
    if (field.degree == 1) {
        SplittingRecord rec;
        rec.prime = p;
        rec.factors = {{1, 1}};
        return rec;
    }
    if (field.degree == 2) return split_quadratic(field.discriminant, p);
    if (field.polynomial.empty())
        throw computation_error("field '" + field.label +
                                "' needs a defining polynomial for splitting in degree >= 3");
    return split_monogenic(field.polynomial, p, seed);
}

} // namespace nfb
