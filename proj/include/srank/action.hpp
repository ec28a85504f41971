#pragma once

// Linear algebra of a finitely generated algebra acting on Q^n from the right,
// given by generator matrices: spinning, stable subspaces, restriction,
// quotients, intertwiners and simple-submodule extraction. Both QG-modules and
// the joint (G, x)-action of Q[x]G-modules are handled through this layer.

#include "srank/factor.hpp"
#include "srank/linalg.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace srank {

using Action = std::vector<QMatrix>;

/// A subspace of Q^n given by its RREF row basis (no zero rows).
struct ModuleSpace {
    QMatrix basis;
    std::size_t ambient_dim = 0;

    [[nodiscard]] std::size_t dimension() const { return basis.rows(); }
    [[nodiscard]] bool is_zero() const { return basis.rows() == 0; }

    static ModuleSpace from_rows(const QMatrix &rows, std::size_t ambient) {
        return {rows.rows() ? row_basis(rows) : QMatrix(0, ambient), ambient};
    }
    static ModuleSpace whole(std::size_t n) { return {QMatrix::identity(n), n}; }
    static ModuleSpace zero(std::size_t n) { return {QMatrix(0, n), n}; }

    friend bool operator==(const ModuleSpace &, const ModuleSpace &) = default;
};

inline std::vector<std::size_t> pivot_columns(const QMatrix &rref_basis) {
    std::vector<std::size_t> piv;
    for (std::size_t i = 0; i < rref_basis.rows(); ++i) {
        std::size_t j = 0;
        while (j < rref_basis.cols() && rref_basis(i, j) == 0)
            ++j;
        piv.push_back(j);
    }
    return piv;
}

/// Smallest subspace containing the rows of `vectors` and stable under every
/// generator, by iterated application with echelon absorption.
inline ModuleSpace spin(std::span<const QMatrix> gens, std::size_t dim, const QMatrix &vectors) {
    EchelonBasis eb(dim);
    std::vector<QVector> queue;
    for (std::size_t i = 0; i < vectors.rows(); ++i) {
        QVector v = vectors.row_vector(i);
        if (eb.add(v))
            queue.push_back(std::move(v));
    }
    for (std::size_t head = 0; head < queue.size() && eb.size() < dim; ++head) {
        for (const auto &g : gens) {
            QVector w = vec_mul<Rational>(queue[head], g);
            if (eb.add(w))
                queue.push_back(std::move(w));
        }
    }
    if (eb.size() == dim)
        return ModuleSpace::whole(dim);
    return {eb.to_rref(), dim};
}

inline ModuleSpace spin_vector(std::span<const QMatrix> gens, const QVector &v) {
    return spin(gens, v.size(), row_matrix(v));
}

/// Whether `space` is mapped into itself by every generator.
inline bool is_stable(std::span<const QMatrix> gens, const ModuleSpace &space) {
    if (space.is_zero())
        return true;
    EchelonBasis eb(space.ambient_dim);
    for (std::size_t i = 0; i < space.basis.rows(); ++i)
        eb.add(space.basis.row_vector(i));
    for (const auto &g : gens) {
        QMatrix img = space.basis * g;
        for (std::size_t i = 0; i < img.rows(); ++i)
            if (!eb.contains(img.row_vector(i)))
                return false;
    }
    return true;
}

/// Coordinates of rows of `vectors` in an RREF basis; throws if some row is
/// not in the span.
inline QMatrix coordinates(const QMatrix &rref_basis, const QMatrix &vectors) {
    const auto piv = pivot_columns(rref_basis);
    QMatrix c(vectors.rows(), rref_basis.rows());
    for (std::size_t i = 0; i < vectors.rows(); ++i)
        for (std::size_t k = 0; k < piv.size(); ++k)
            c(i, k) = vectors(i, piv[k]);
    if (!(c * rref_basis == vectors))
        throw ValidationError("vector does not lie in the subspace");
    return c;
}

/// Matrix R with B·M = R·B for an M-stable subspace with RREF basis B.
inline QMatrix restrict_matrix(const QMatrix &rref_basis, const QMatrix &m) {
    return coordinates(rref_basis, rref_basis * m);
}

inline Action restrict_action(std::span<const QMatrix> gens, const ModuleSpace &space) {
    Action out;
    for (const auto &g : gens)
        out.push_back(restrict_matrix(space.basis, g));
    return out;
}

struct QuotientAction {
    Action action;       // induced generator matrices on the quotient
    QMatrix projection;  // n × (n - s): v ↦ v·projection
    QMatrix lift;        // (n - s) × n: quotient coordinates back to complement vectors
};

/// Induced action on Q^n / space, in coordinates of the non-pivot columns.
inline QuotientAction quotient_action(std::span<const QMatrix> gens, const ModuleSpace &space) {
    if (!is_stable(gens, space))
        throw ValidationError("quotient: subspace is not stable under the action");
    const std::size_t n = space.ambient_dim, s = space.dimension();
    const auto piv = pivot_columns(space.basis);
    std::vector<bool> is_piv(n, false);
    for (auto p : piv)
        is_piv[p] = true;
    std::vector<std::size_t> comp;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_piv[j])
            comp.push_back(j);
    QMatrix proj(n, n - s);
    for (std::size_t j = 0; j < comp.size(); ++j)
        proj(comp[j], j) = 1;
    for (std::size_t k = 0; k < piv.size(); ++k)
        for (std::size_t j = 0; j < comp.size(); ++j)
            proj(piv[k], j) = -space.basis(k, comp[j]);
    QMatrix lift(n - s, n);
    for (std::size_t j = 0; j < comp.size(); ++j)
        lift(j, comp[j]) = 1;
    QuotientAction q{{}, proj, lift};
    for (const auto &g : gens) {
        QMatrix induced = lift * g * proj;
        if (!(g * proj == proj * induced))
            throw InternalError("quotient projection is not equivariant");
        q.action.push_back(std::move(induced));
    }
    return q;
}

/// Basis of {X : ρ_src(g)·X = X·ρ_dst(g) for every generator g}.
inline std::vector<QMatrix> hom_space(std::span<const QMatrix> src, std::span<const QMatrix> dst) {
    if (src.size() != dst.size())
        throw ValidationError("hom_space: actions have different generator counts");
    const std::size_t d1 = src.empty() ? 0 : src[0].rows();
    const std::size_t d2 = dst.empty() ? 0 : dst[0].rows();
    const std::size_t unknowns = d1 * d2;
    if (unknowns == 0)
        return {};
    // Solve generator by generator, restricting to the kernel found so far.
    QMatrix basis = QMatrix::identity(unknowns); // rows: current solution vectors
    for (std::size_t s = 0; s < src.size() && basis.rows() > 0; ++s) {
        const QMatrix &a = src[s], &b = dst[s];
        // Column k of `eqs` = residual of the k-th current basis element.
        QMatrix eqs(unknowns, basis.rows());
        for (std::size_t k = 0; k < basis.rows(); ++k) {
            QMatrix x(d1, d2, basis.row_vector(k));
            QMatrix r = a * x - x * b;
            for (std::size_t t = 0; t < unknowns; ++t)
                eqs(t, k) = r.data()[t];
        }
        QMatrix ker = kernel(eqs);
        basis = ker.rows() ? row_basis(ker * basis) : QMatrix(0, unknowns);
    }
    std::vector<QMatrix> out;
    for (std::size_t k = 0; k < basis.rows(); ++k)
        out.emplace_back(d1, d2, basis.row_vector(k));
    return out;
}

inline std::size_t hom_dimension(std::span<const QMatrix> src, std::span<const QMatrix> dst) {
    return hom_space(src, dst).size();
}

/// Entries uniform in {-2,...,2}, redrawn if all zero. Uses raw mt19937_64
/// output so sequences are identical on every platform.
inline QVector random_small_vector(std::size_t n, std::mt19937_64 &rng) {
    QVector v(n);
    if (n == 0)
        return v;
    do {
        for (auto &x : v)
            x = static_cast<long>(rng() % 5) - 2;
    } while (is_zero_vector<Rational>(v));
    return v;
}

struct SimpleSearchOptions {
    std::uint64_t seed = 0;
    std::size_t random_probes = 8;  // random algebra elements tried after the given probes
    std::size_t max_fixed_probes = 16;
};

/// Basis (rows, in the module's own coordinates) of a simple submodule of a
/// semisimple module given by `gens`. Candidate vectors come from kernels of
/// irreducible factors f(a) for algebra elements a (the `probes`, then random
/// combinations); a proper spin is recursed into. The whole module is declared
/// simple when End is one-dimensional, when Norton's test certifies it, or
/// when no candidate produces a proper submodule.
inline QMatrix find_simple_submodule(std::span<const QMatrix> gens, std::span<const QMatrix> probes,
                                     const SimpleSearchOptions &opt = {}) {
    const std::size_t n = gens.empty() ? 0 : gens[0].rows();
    if (n == 0)
        throw std::invalid_argument("find_simple_submodule: zero module");
    const QMatrix whole = QMatrix::identity(n);
    if (n == 1 || hom_dimension(gens, gens) == 1)
        return whole;
    std::mt19937_64 rng(opt.seed);

    std::vector<QMatrix> candidates;
    for (std::size_t i = 0; i < probes.size() && candidates.size() < opt.max_fixed_probes; ++i)
        candidates.push_back(probes[i]);
    candidates.insert(candidates.end(), gens.begin(), gens.end());
    std::vector<QMatrix> pool(probes.begin(), probes.end());
    pool.insert(pool.end(), gens.begin(), gens.end());
    for (std::size_t r = 0; r < opt.random_probes && !pool.empty(); ++r) {
        QMatrix a(n, n);
        for (const auto &p : pool) {
            long c = static_cast<long>(rng() % 5) - 2;
            if (c != 0)
                a = a + Rational(c) * p;
        }
        candidates.push_back(std::move(a));
    }

    Action dual;
    for (const auto &g : gens)
        dual.push_back(g.transpose());

    for (const auto &a : candidates) {
        auto factors = factor_rational(minimal_polynomial(a)).distinct();
        for (const auto &f : factors) {
            QMatrix fa = evaluate(f, a);
            QMatrix null = left_kernel(fa);
            std::vector<QVector> tries;
            for (std::size_t i = 0; i < null.rows() && i < 3; ++i)
                tries.push_back(null.row_vector(i));
            for (int t = 0; t < 2 && null.rows() > 1; ++t) {
                QVector coeff = random_small_vector(null.rows(), rng);
                tries.push_back(vec_mul<Rational>(coeff, null));
            }
            for (const auto &v : tries) {
                ModuleSpace u = spin_vector(gens, v);
                if (u.dimension() < n) {
                    Action sub = restrict_action(gens, u);
                    Action sub_probes;
                    for (const auto &p : probes)
                        sub_probes.push_back(restrict_matrix(u.basis, p));
                    SimpleSearchOptions next = opt;
                    next.seed = opt.seed + 1;
                    return find_simple_submodule(sub, sub_probes, next) * u.basis;
                }
            }
            if (null.rows() == static_cast<std::size_t>(f.degree())) {
                // Norton: the kernel is one line over Q[a]/(f); the module is simple
                // iff both it and the dual are generated by that line.
                QMatrix dual_null = kernel(fa);
                if (dual_null.rows() > 0 && spin(dual, n, dual_null.row_block(0, 1)).dimension() == n)
                    return whole;
            }
        }
    }
    return whole;
}

/// Intertwiner basis between submodules, each restricted to its own coordinates.
inline std::size_t hom_dimension_between(std::span<const QMatrix> gens, const ModuleSpace &a,
                                         const ModuleSpace &b) {
    return hom_dimension(restrict_action(gens, a), restrict_action(gens, b));
}

} // namespace srank
