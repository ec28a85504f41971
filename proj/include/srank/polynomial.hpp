#pragma once

#include "srank/linalg.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace srank {

/// Univariate polynomial over the rationals, coefficients lowest degree first.
/// The zero polynomial has no coefficients; otherwise the last one is nonzero.
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    QPolynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static QPolynomial constant(const Rational &a) { return QPolynomial(std::vector<Rational>{a}); }
    static QPolynomial x() { return QPolynomial({Rational(0), Rational(1)}); }
    /// x^n.
    static QPolynomial monomial(std::size_t n, const Rational &a = 1) {
        std::vector<Rational> c(n + 1, Rational(0));
        c[n] = a;
        return QPolynomial(std::move(c));
    }

    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] const std::vector<Rational> &coefficients() const { return c_; }
    [[nodiscard]] Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    [[nodiscard]] Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
    [[nodiscard]] bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    [[nodiscard]] QPolynomial monic() const {
        if (is_zero())
            return *this;
        return (1 / leading()) * *this;
    }

    [[nodiscard]] QPolynomial derivative() const {
        std::vector<Rational> d;
        for (std::size_t i = 1; i < c_.size(); ++i)
            d.push_back(c_[i] * Rational(static_cast<long>(i)));
        return QPolynomial(std::move(d));
    }

    [[nodiscard]] Rational operator()(const Rational &x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    friend bool operator==(const QPolynomial &, const QPolynomial &) = default;

    friend QPolynomial operator+(const QPolynomial &a, const QPolynomial &b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i)
            c[i] += b.c_[i];
        return QPolynomial(std::move(c));
    }
    friend QPolynomial operator-(const QPolynomial &a, const QPolynomial &b) {
        return a + Rational(-1) * b;
    }
    friend QPolynomial operator*(const Rational &s, const QPolynomial &a) {
        if (s == 0)
            return {};
        std::vector<Rational> c = a.c_;
        for (auto &x : c)
            x *= s;
        return QPolynomial(std::move(c));
    }
    friend QPolynomial operator*(const QPolynomial &a, const QPolynomial &b) {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return QPolynomial(std::move(c));
    }

    /// Euclidean division: a = q·b + r with deg r < deg b.
    friend std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial &a, const QPolynomial &b) {
        if (b.is_zero())
            throw std::domain_error("polynomial division by zero");
        if (a.degree() < b.degree())
            return {QPolynomial(), a};
        std::vector<Rational> r = a.c_;
        std::vector<Rational> q(a.c_.size() - b.c_.size() + 1, Rational(0));
        const Rational inv = 1 / b.leading();
        for (int i = a.degree() - b.degree(); i >= 0; --i) {
            Rational t = r[i + b.degree()] * inv;
            q[i] = t;
            if (t == 0)
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] -= t * b.c_[j];
        }
        r.resize(b.c_.size() - 1);
        return {QPolynomial(std::move(q)), QPolynomial(std::move(r))};
    }
    friend QPolynomial operator%(const QPolynomial &a, const QPolynomial &b) { return divmod(a, b).second; }
    friend QPolynomial operator/(const QPolynomial &a, const QPolynomial &b) { return divmod(a, b).first; }

    [[nodiscard]] QPolynomial pow(unsigned e) const {
        QPolynomial result = constant(1), base = *this;
        while (e) {
            if (e & 1u)
                result = result * base;
            base = base * base;
            e >>= 1u;
        }
        return result;
    }

    /// Human-readable form, e.g. "x^2 - 3/2*x + 1".
    [[nodiscard]] std::string str() const {
        if (is_zero())
            return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const Rational &a = c_[i];
            if (a == 0)
                continue;
            Rational mag = abs(a);
            if (out.empty())
                out += a < 0 ? "-" : "";
            else
                out += a < 0 ? " - " : " + ";
            bool unit = (mag == 1);
            if (!unit || i == 0)
                out += to_string(mag);
            if (i > 0) {
                if (!unit)
                    out += "*";
                out += "x";
                if (i > 1)
                    out += "^" + std::to_string(i);
            }
        }
        return out;
    }

    /// Lexicographic order on (degree, coefficients from the top); used to
    /// report primes in a deterministic order.
    friend bool operator<(const QPolynomial &a, const QPolynomial &b) {
        if (a.degree() != b.degree())
            return a.degree() < b.degree();
        for (int i = a.degree(); i >= 0; --i)
            if (a.c_[i] != b.c_[i])
                return a.c_[i] < b.c_[i];
        return false;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Monic greatest common divisor (zero if both are zero).
inline QPolynomial gcd(QPolynomial a, QPolynomial b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline QPolynomial lcm(const QPolynomial &a, const QPolynomial &b) {
    if (a.is_zero() || b.is_zero())
        return {};
    return ((a * b) / gcd(a, b)).monic();
}

/// p(M) by Horner's rule.
inline QMatrix evaluate(const QPolynomial &p, const QMatrix &m) {
    if (!m.square())
        throw std::invalid_argument("evaluate: non-square matrix");
    const std::size_t n = m.rows();
    QMatrix acc(n, n);
    const auto &c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * m;
        for (std::size_t i = 0; i < n; ++i)
            acc(i, i) += *it;
    }
    return acc;
}

/// Monic minimal polynomial: the first linear dependency among the flattened
/// powers I, M, M², ...
inline QPolynomial minimal_polynomial(const QMatrix &m) {
    if (!m.square())
        throw std::invalid_argument("minimal_polynomial: non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return QPolynomial::constant(1);
    // Track each stored power together with its expression in the monomial basis.
    const std::size_t len = n * n;
    struct Row {
        QVector v;       // reduced flattened power
        QVector combo;   // coefficients over x^0..x^k
        std::size_t pivot;
    };
    std::vector<Row> basis;
    QMatrix power = QMatrix::identity(n);
    for (std::size_t k = 0; k <= n; ++k) {
        QVector v = power.data();
        QVector combo(k + 1, Rational(0));
        combo[k] = 1;
        for (const auto &row : basis) {
            Rational c = v[row.pivot];
            if (c == 0)
                continue;
            for (std::size_t j = 0; j < len; ++j)
                if (row.v[j] != 0)
                    v[j] -= c * row.v[j];
            for (std::size_t j = 0; j < row.combo.size(); ++j)
                combo[j] -= c * row.combo[j];
        }
        std::size_t p = 0;
        while (p < len && v[p] == 0)
            ++p;
        if (p == len)
            return QPolynomial(std::move(combo)).monic();
        Rational inv = 1 / v[p];
        for (auto &x : v)
            x *= inv;
        for (auto &x : combo)
            x *= inv;
        basis.push_back({std::move(v), std::move(combo), p});
        power = power * m;
    }
    throw InternalError("minimal_polynomial: no dependency within degree n");
}

/// Characteristic polynomial det(xI - M) via the Faddeev-LeVerrier recursion.
inline QPolynomial characteristic_polynomial(const QMatrix &m) {
    if (!m.square())
        throw std::invalid_argument("characteristic_polynomial: non-square matrix");
    const std::size_t n = m.rows();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    QMatrix mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        for (std::size_t i = 0; i < n; ++i)
            mk(i, i) += c[n - k + 1];
        QMatrix am = m * mk;
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            tr += am(i, i);
        c[n - k] = -tr / Rational(static_cast<long>(k));
    }
    return QPolynomial(std::move(c));
}

} // namespace srank
