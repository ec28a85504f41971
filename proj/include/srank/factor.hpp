#pragma once

// Factorization of univariate rational polynomials: Yun squarefree
// decomposition, Berlekamp factorization modulo a small prime, linear Hensel
// lifting, and exhaustive recombination against the Mignotte bound.

#include "srank/polynomial.hpp"

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace srank {

struct Factorization {
    Rational content;                                    // leading coefficient of the input
    std::vector<std::pair<QPolynomial, unsigned>> factors; // monic irreducibles with multiplicity

    /// content · Π f^e.
    [[nodiscard]] QPolynomial expand() const {
        QPolynomial p = QPolynomial::constant(content);
        for (const auto &[f, e] : factors)
            p = p * f.pow(e);
        return p;
    }
    /// Distinct irreducible factors in report order.
    [[nodiscard]] std::vector<QPolynomial> distinct() const {
        std::vector<QPolynomial> out;
        for (const auto &fe : factors)
            out.push_back(fe.first);
        return out;
    }
};

namespace detail {

using ZPoly = std::vector<Integer>; // lowest degree first, trimmed

inline void trim(ZPoly &a) {
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

inline int deg(const ZPoly &a) { return static_cast<int>(a.size()) - 1; }

inline ZPoly zmul(const ZPoly &a, const ZPoly &b) {
    if (a.empty() || b.empty())
        return {};
    ZPoly c(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    trim(c);
    return c;
}

inline Integer zcontent(const ZPoly &a) {
    Integer g = 0;
    for (const auto &x : a)
        g = gcd(g, x);
    return g;
}

/// Primitive part with positive leading coefficient.
inline ZPoly primitive(ZPoly a) {
    Integer g = zcontent(a);
    if (g == 0)
        return a;
    if (a.back() < 0)
        g = -g;
    for (auto &x : a)
        x /= g;
    return a;
}

/// Exact quotient a / b over the integers; false if b does not divide a.
inline bool zdivides(const ZPoly &a, const ZPoly &b, ZPoly &quot) {
    if (b.empty())
        return false;
    if (deg(a) < deg(b)) {
        quot.clear();
        return a.empty();
    }
    ZPoly r = a;
    quot.assign(a.size() - b.size() + 1, Integer(0));
    for (int i = deg(a) - deg(b); i >= 0; --i) {
        const Integer &top = r[i + deg(b)];
        if (top == 0)
            continue;
        if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t()))
            return false;
        Integer t = top / b.back();
        quot[i] = t;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] -= t * b[j];
    }
    for (const auto &x : r)
        if (x != 0)
            return false;
    trim(quot);
    return true;
}

/// Reduce coefficients into [0, m).
inline ZPoly zmod(ZPoly a, const Integer &m) {
    for (auto &x : a) {
        x %= m;
        if (x < 0)
            x += m;
    }
    trim(a);
    return a;
}

/// Reduce into the symmetric range (-m/2, m/2].
inline ZPoly zsymmetric(ZPoly a, const Integer &m) {
    Integer half = m / 2;
    for (auto &x : a) {
        x %= m;
        if (x < 0)
            x += m;
        if (x > half)
            x -= m;
    }
    trim(a);
    return a;
}

// --- arithmetic in F_p[x] with p < 2^31 ------------------------------------

using Fp = std::int64_t;
using PPoly = std::vector<Fp>;

inline void ptrim(PPoly &a) {
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

inline Fp pmodv(Fp a, Fp p) {
    a %= p;
    return a < 0 ? a + p : a;
}

inline Fp pinv(Fp a, Fp p) {
    // Fermat: a^(p-2)
    Fp result = 1, base = pmodv(a, p);
    for (Fp e = p - 2; e > 0; e >>= 1) {
        if (e & 1)
            result = result * base % p;
        base = base * base % p;
    }
    return result;
}

inline PPoly to_fp(const ZPoly &a, Fp p) {
    PPoly out;
    out.reserve(a.size());
    Integer pm = p;
    for (const auto &x : a) {
        Integer r = x % pm;
        if (r < 0)
            r += pm;
        out.push_back(r.get_si());
    }
    ptrim(out);
    return out;
}

inline ZPoly from_fp(const PPoly &a) {
    ZPoly out;
    for (auto x : a)
        out.emplace_back(static_cast<long>(x));
    return out;
}

inline PPoly padd(const PPoly &a, const PPoly &b, Fp p) {
    PPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        c[i] = (c[i] + b[i]) % p;
    ptrim(c);
    return c;
}

inline PPoly psub(const PPoly &a, const PPoly &b, Fp p) {
    PPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        c[i] = pmodv(c[i] - b[i], p);
    ptrim(c);
    return c;
}

inline PPoly pmul(const PPoly &a, const PPoly &b, Fp p) {
    if (a.empty() || b.empty())
        return {};
    PPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    ptrim(c);
    return c;
}

inline std::pair<PPoly, PPoly> pdivmod(const PPoly &a, const PPoly &b, Fp p) {
    if (b.empty())
        throw std::domain_error("division by zero polynomial mod p");
    if (a.size() < b.size())
        return {{}, a};
    PPoly r = a, q(a.size() - b.size() + 1, 0);
    Fp inv = pinv(b.back(), p);
    for (int i = static_cast<int>(a.size() - b.size()); i >= 0; --i) {
        Fp t = r[i + b.size() - 1] * inv % p;
        q[i] = t;
        if (t == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = pmodv(r[i + j] - t * b[j], p);
    }
    r.resize(b.size() - 1);
    ptrim(r);
    ptrim(q);
    return {q, r};
}

inline PPoly pmonic(PPoly a, Fp p) {
    if (a.empty())
        return a;
    Fp inv = pinv(a.back(), p);
    for (auto &x : a)
        x = x * inv % p;
    return a;
}

inline PPoly pgcd(PPoly a, PPoly b, Fp p) {
    while (!b.empty()) {
        auto r = pdivmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return pmonic(a, p);
}

/// Extended gcd for coprime a, b: returns (s, t) with s·a + t·b = 1.
inline std::pair<PPoly, PPoly> pxgcd(const PPoly &a, const PPoly &b, Fp p) {
    PPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = pdivmod(r0, r1, p);
        r0 = std::move(r1);
        r1 = std::move(r);
        auto s2 = psub(s0, pmul(q, s1, p), p);
        auto t2 = psub(t0, pmul(q, t1, p), p);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1)
        throw InternalError("pxgcd: inputs not coprime mod p");
    Fp inv = pinv(r0[0], p);
    for (auto &x : s0)
        x = x * inv % p;
    for (auto &x : t0)
        x = x * inv % p;
    return {s0, t0};
}

inline PPoly pderiv(const PPoly &a, Fp p) {
    PPoly d;
    for (std::size_t i = 1; i < a.size(); ++i)
        d.push_back(static_cast<Fp>(i) % p * a[i] % p);
    ptrim(d);
    return d;
}

/// Left null space of a square matrix over F_p, rows as vectors.
inline std::vector<PPoly> pleft_kernel(std::vector<std::vector<Fp>> m, Fp p) {
    // Transpose, then ordinary right kernel by Gauss-Jordan.
    const std::size_t n = m.size();
    std::vector<std::vector<Fp>> a(n, std::vector<Fp>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[j][i] = m[i][j];
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < n; ++c) {
        std::size_t q = r;
        while (q < n && a[q][c] == 0)
            ++q;
        if (q == n)
            continue;
        std::swap(a[q], a[r]);
        Fp inv = pinv(a[r][c], p);
        for (auto &x : a[r])
            x = x * inv % p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            Fp f = a[i][c];
            for (std::size_t j = 0; j < n; ++j)
                a[i][j] = pmodv(a[i][j] - f * a[r][j], p);
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<PPoly> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        PPoly v(n, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = pmodv(-a[i][f], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Berlekamp factorization of a monic squarefree polynomial over F_p.
inline std::vector<PPoly> berlekamp(const PPoly &f, Fp p) {
    const std::size_t n = f.size() - 1;
    if (n <= 1)
        return {f};
    // Row i of Q holds x^(i·p) mod f.
    std::vector<std::vector<Fp>> q(n, std::vector<Fp>(n, 0));
    PPoly xp{1};
    PPoly xpow_p;
    {
        // x^p mod f by square-and-multiply.
        PPoly result{1}, base{0, 1};
        for (Fp e = p; e > 0; e >>= 1) {
            if (e & 1)
                result = pdivmod(pmul(result, base, p), f, p).second;
            base = pdivmod(pmul(base, base, p), f, p).second;
        }
        xpow_p = result;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < xp.size(); ++j)
            q[i][j] = xp[j];
        q[i][i] = pmodv(q[i][i] - 1, p);
        xp = pdivmod(pmul(xp, xpow_p, p), f, p).second;
    }
    auto basis = pleft_kernel(q, p);
    const std::size_t count = basis.size();
    std::vector<PPoly> factors{f};
    for (auto &v : basis) {
        ptrim(v);
        if (v.size() <= 1)
            continue; // constants split nothing
        for (std::size_t idx = 0; idx < factors.size() && factors.size() < count; ++idx) {
            for (Fp s = 0; s < p && factors.size() < count; ++s) {
                const PPoly &u = factors[idx];
                if (u.size() <= 2)
                    break;
                PPoly vs = v;
                vs[0] = pmodv(vs[0] - s, p);
                ptrim(vs);
                PPoly g = pgcd(u, vs, p);
                if (g.size() > 1 && g.size() < u.size()) {
                    PPoly other = pmonic(pdivmod(u, g, p).first, p);
                    factors[idx] = g;
                    factors.push_back(other);
                }
            }
        }
        if (factors.size() == count)
            break;
    }
    if (factors.size() != count)
        throw InternalError("berlekamp: failed to split into the predicted factor count");
    return factors;
}

/// Lifts f ≡ g·h (mod p), with f monic modulo p^k, to a factorization modulo p^k.
inline std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly &f, const PPoly &g, const PPoly &h, Fp p,
                                           unsigned k) {
    auto [s, t] = pxgcd(g, h, p);
    ZPoly G = from_fp(g), H = from_fp(h);
    Integer m = p;
    for (unsigned j = 1; j < k; ++j) {
        ZPoly gh = zmul(G, H);
        ZPoly e(std::max(f.size(), gh.size()), Integer(0));
        for (std::size_t i = 0; i < f.size(); ++i)
            e[i] += f[i];
        for (std::size_t i = 0; i < gh.size(); ++i)
            e[i] -= gh[i];
        for (auto &x : e) {
            if (!mpz_divisible_p(x.get_mpz_t(), m.get_mpz_t()))
                throw InternalError("hensel_pair: residual not divisible by modulus");
            x /= m;
        }
        trim(e);
        PPoly ep = to_fp(e, p);
        PPoly tau = pdivmod(pmul(t, ep, p), g, p).second;
        PPoly sigma = pdivmod(psub(ep, pmul(tau, h, p), p), g, p).first;
        for (std::size_t i = 0; i < tau.size(); ++i) {
            if (G.size() <= i)
                G.resize(i + 1, Integer(0));
            G[i] += m * Integer(static_cast<long>(tau[i]));
        }
        for (std::size_t i = 0; i < sigma.size(); ++i) {
            if (H.size() <= i)
                H.resize(i + 1, Integer(0));
            H[i] += m * Integer(static_cast<long>(sigma[i]));
        }
        m *= p;
    }
    return {G, H};
}

inline std::vector<ZPoly> hensel_lift(const ZPoly &f, const std::vector<PPoly> &factors, Fp p,
                                      unsigned k, const Integer &modulus) {
    if (factors.size() == 1)
        return {zmod(f, modulus)};
    PPoly rest{1};
    for (std::size_t i = 1; i < factors.size(); ++i)
        rest = pmul(rest, factors[i], p);
    auto [g, h] = hensel_pair(f, factors[0], rest, p, k);
    std::vector<PPoly> tail(factors.begin() + 1, factors.end());
    auto lifted = hensel_lift(zmod(h, modulus), tail, p, k, modulus);
    lifted.insert(lifted.begin(), zmod(g, modulus));
    return lifted;
}

inline bool is_prime(Fp n) {
    if (n < 2)
        return false;
    for (Fp d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

/// Irreducible factors of a primitive squarefree integer polynomial of positive degree.
inline std::vector<ZPoly> zassenhaus(ZPoly f) {
    const int n = deg(f);
    if (n == 1)
        return {primitive(f)};
    // Pick, among the first few admissible primes, one giving the fewest modular factors.
    ZPoly df;
    for (std::size_t i = 1; i < f.size(); ++i)
        df.push_back(f[i] * static_cast<long>(i));
    Fp best_p = 0;
    std::vector<PPoly> best;
    int tried = 0;
    for (Fp p = 3; tried < 5 && p < 5000; p += 2) {
        if (!is_prime(p))
            continue;
        PPoly fp = to_fp(f, p);
        if (static_cast<int>(fp.size()) - 1 != n)
            continue;
        if (pgcd(fp, to_fp(df, p), p).size() != 1)
            continue;
        ++tried;
        auto fac = berlekamp(pmonic(fp, p), p);
        if (best_p == 0 || fac.size() < best.size()) {
            best_p = p;
            best = std::move(fac);
        }
        if (best.size() == 1)
            break;
    }
    if (best_p == 0)
        throw InternalError("zassenhaus: no admissible prime found");
    if (best.size() == 1)
        return {primitive(f)};
    const Fp p = best_p;

    // Mignotte-style bound on coefficients of lc·g for any factor g.
    Integer norm2 = 0;
    for (const auto &x : f)
        norm2 += x * x;
    Integer norm = sqrt(norm2) + 1;
    Integer lc = abs(f.back());
    Integer bound = 2 * lc * norm;
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n));
    unsigned k = 1;
    Integer modulus = p;
    while (modulus <= bound) {
        modulus *= p;
        ++k;
    }

    // Monic target modulo p^k.
    Integer lc_inv;
    mpz_invert(lc_inv.get_mpz_t(), Integer(f.back()).get_mpz_t(), modulus.get_mpz_t());
    ZPoly monic_f = f;
    for (auto &x : monic_f)
        x *= lc_inv;
    monic_f = zmod(monic_f, modulus);
    auto lifted = hensel_lift(monic_f, best, p, k, modulus);

    std::vector<ZPoly> result;
    ZPoly rest = f;
    std::size_t s = 1;
    while (2 * s <= lifted.size()) {
        bool found = false;
        std::vector<std::size_t> idx(s);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            ZPoly g{rest.back()};
            for (auto i : idx)
                g = zmod(zmul(g, lifted[i]), modulus);
            g = primitive(zsymmetric(g, modulus));
            ZPoly quot;
            if (deg(g) > 0 && zdivides(rest, g, quot)) {
                result.push_back(g);
                rest = quot;
                for (auto it = idx.rbegin(); it != idx.rend(); ++it)
                    lifted.erase(lifted.begin() + static_cast<std::ptrdiff_t>(*it));
                found = true;
                break;
            }
            // Next s-combination of lifted indices.
            std::size_t pos = s;
            while (pos > 0 && idx[pos - 1] == lifted.size() - s + pos - 1)
                --pos;
            if (pos == 0)
                break;
            ++idx[pos - 1];
            for (std::size_t j = pos; j < s; ++j)
                idx[j] = idx[j - 1] + 1;
        }
        if (!found)
            ++s;
    }
    if (deg(rest) > 0)
        result.push_back(primitive(rest));
    return result;
}

/// Monic squarefree factors a_i with f = Π a_i^i (Yun).
inline std::vector<std::pair<QPolynomial, unsigned>> squarefree_decomposition(const QPolynomial &f) {
    std::vector<std::pair<QPolynomial, unsigned>> out;
    QPolynomial m = f.monic();
    if (m.degree() <= 0)
        return out;
    QPolynomial dm = m.derivative();
    QPolynomial a0 = gcd(m, dm);
    QPolynomial b = (m / a0).monic();
    QPolynomial c = dm / a0;
    QPolynomial d = c - b.derivative();
    for (unsigned i = 1; b.degree() > 0; ++i) {
        QPolynomial a = gcd(b, d);
        if (a.degree() > 0)
            out.emplace_back(a, i);
        b = (b / a).monic();
        c = d / a;
        d = c - b.derivative();
    }
    return out;
}

inline ZPoly clear_denominators(const QPolynomial &f) {
    Integer l = 1;
    for (const auto &q : f.coefficients())
        l = lcm(l, Integer(q.get_den()));
    ZPoly z;
    for (const auto &q : f.coefficients()) {
        Rational s = q * l;
        z.push_back(s.get_num());
    }
    return primitive(z);
}

inline QPolynomial to_monic_rational(const ZPoly &z) {
    std::vector<Rational> c;
    for (const auto &x : z)
        c.emplace_back(x);
    return QPolynomial(std::move(c)).monic();
}

} // namespace detail

/// Complete factorization over the rationals into monic irreducibles.
inline Factorization factor_rational(const QPolynomial &p) {
    if (p.is_zero())
        throw std::invalid_argument("factor_rational: zero polynomial");
    Factorization out;
    out.content = p.leading();
    for (const auto &[part, mult] : detail::squarefree_decomposition(p)) {
        for (const auto &z : detail::zassenhaus(detail::clear_denominators(part)))
            out.factors.emplace_back(detail::to_monic_rational(z), mult);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto &a, const auto &b) { return a.first < b.first; });
    return out;
}

inline bool is_irreducible(const QPolynomial &p) {
    if (p.degree() <= 0)
        return false;
    auto f = factor_rational(p);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

} // namespace srank
