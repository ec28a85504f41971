#pragma once

#include "srank/action.hpp"
#include "srank/check.hpp"
#include "srank/representation.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace srank {

/// One homogeneous component H ≅ S^t of a semisimple module.
struct IsotypicComponent {
    ModuleSpace space;
    QMatrix simple_basis;              // a simple submodule S ⊆ H, ambient coordinates
    std::size_t simple_dimension = 0;  // dim_Q S
    std::size_t multiplicity = 0;      // t
    std::size_t endomorphism_dimension = 0; // dim_Q End(S)

    /// dim of S over its endomorphism division ring.
    [[nodiscard]] std::size_t endomorphism_rank() const { return simple_dimension / endomorphism_dimension; }
    /// Minimal number of generators of S^t: ceil(t / endomorphism_rank).
    [[nodiscard]] std::size_t generators_needed() const {
        const std::size_t k = endomorphism_rank();
        return (multiplicity + k - 1) / k;
    }
};

struct DecompositionReport {
    std::vector<IsotypicComponent> components;
    std::size_t special_rank = 0;            // max multiplicity
    std::optional<std::size_t> witness;      // component achieving it
    std::size_t generator_rank = 0;          // max generators_needed
    std::size_t nns_bound = 0;               // nns(G, Q)
    bool dimension_bound_ok = true;          // dim ≤ r·|G|·nns
};

struct DecompositionOptions {
    bool cross_check = true;
    std::uint64_t seed = 0;
};

/// Refines `pieces` until every central matrix has a minimal polynomial with a
/// single irreducible factor on each piece. Pieces are split into the kernels
/// of f^e(z) for the primary factors f^e of the restricted minimal polynomial,
/// so non-semisimple central elements are handled too.
inline std::vector<ModuleSpace> split_by_central(std::span<const QMatrix> central,
                                                 std::vector<ModuleSpace> pieces) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto &z : central) {
            std::vector<ModuleSpace> next;
            for (auto &piece : pieces) {
                QMatrix r = restrict_matrix(piece.basis, z);
                auto fac = factor_rational(minimal_polynomial(r));
                if (fac.factors.size() <= 1) {
                    next.push_back(std::move(piece));
                    continue;
                }
                changed = true;
                for (const auto &[f, e] : fac.factors) {
                    QMatrix ker = left_kernel(evaluate(f.pow(e), r));
                    next.push_back(ModuleSpace::from_rows(ker * piece.basis, piece.ambient_dim));
                }
            }
            pieces = std::move(next);
        }
    }
    return pieces;
}

/// Class-sum matrices in class order, followed by the weighted sum Σ (k+1)·C_k.
inline std::vector<QMatrix> central_elements(const Representation &rep) {
    std::vector<QMatrix> out;
    QMatrix combo(rep.dimension(), rep.dimension());
    long k = 1;
    for (const auto &cls : conjugacy_classes(*rep.group()).classes) {
        out.push_back(rep.sum_matrix(cls));
        combo = combo + Rational(k++) * out.back();
    }
    out.push_back(std::move(combo));
    return out;
}

/// Non-identity element matrices (BFS order, at most `cap`) for simple searches.
inline std::vector<QMatrix> probe_elements(const Representation &rep, std::size_t cap = 16) {
    std::vector<QMatrix> probes;
    for (std::size_t i = 1; i < rep.group()->order() && probes.size() < cap; ++i)
        probes.push_back(rep.element_matrix(i));
    return probes;
}

namespace detail {
/// Simple submodule, multiplicity and End-dimension of a homogeneous piece.
inline IsotypicComponent analyse_homogeneous(std::span<const QMatrix> gens, std::span<const QMatrix> probes,
                                             ModuleSpace piece, const DecompositionOptions &opt) {
    Action sub = restrict_action(gens, piece);
    Action sub_probes;
    for (const auto &p : probes)
        sub_probes.push_back(restrict_matrix(piece.basis, p));
    QMatrix simple_local = find_simple_submodule(sub, sub_probes, {opt.seed});
    ModuleSpace simple_space = spin(sub, piece.dimension(), simple_local);
    Action simple_action = restrict_action(sub, simple_space);

    IsotypicComponent c;
    c.simple_dimension = simple_space.dimension();
    if (piece.dimension() % c.simple_dimension != 0)
        throw InternalError("homogeneous piece of dimension " + std::to_string(piece.dimension()) +
                            " is not a multiple of its simple dimension " +
                            std::to_string(c.simple_dimension));
    c.multiplicity = piece.dimension() / c.simple_dimension;
    c.endomorphism_dimension = hom_dimension(simple_action, simple_action);
    if (opt.cross_check) {
        const std::size_t h = hom_dimension(simple_action, sub);
        if (h % c.endomorphism_dimension != 0 || h / c.endomorphism_dimension != c.multiplicity)
            throw InternalError("multiplicity cross-check failed: dim Hom(S,H)/dim End(S) = " +
                                std::to_string(h) + "/" + std::to_string(c.endomorphism_dimension) +
                                " but dim H/dim S = " + std::to_string(c.multiplicity));
    }
    c.simple_basis = row_basis(simple_space.basis * piece.basis);
    c.space = std::move(piece);
    return c;
}
} // namespace detail

/// Rational isotypic decomposition by class-sum splitting; each component is
/// measured by extracting one simple submodule.
inline DecompositionReport isotypic_decomposition(const Representation &rep,
                                                  const DecompositionOptions &opt = {}) {
    DecompositionReport report;
    report.nns_bound = nns(*rep.group(), FieldSpec::rationals());
    const std::size_t d = rep.dimension();
    if (d == 0)
        return report;
    auto central = central_elements(rep);
    auto pieces = split_by_central(central, {ModuleSpace::whole(d)});
    auto probes = probe_elements(rep);
    // a generator-free group still needs one matrix to carry the dimension
    Action gens(rep.generators().begin(), rep.generators().end());
    if (gens.empty())
        gens.push_back(QMatrix::identity(d));
    for (auto &piece : pieces)
        report.components.push_back(detail::analyse_homogeneous(gens, probes, std::move(piece), opt));
    for (std::size_t j = 0; j < report.components.size(); ++j) {
        const auto &c = report.components[j];
        if (c.multiplicity > report.special_rank) {
            report.special_rank = c.multiplicity;
            report.witness = j;
        }
        report.generator_rank = std::max(report.generator_rank, c.generators_needed());
    }
    report.dimension_bound_ok = d <= report.special_rank * rep.group()->order() * report.nns_bound;
    return report;
}

struct RankResult {
    std::size_t rank = 0;
    std::optional<std::size_t> witness; // component index
};

/// Maximum isotypic multiplicity t(j); 0 for the zero module.
inline RankResult special_rank(const DecompositionReport &dec) { return {dec.special_rank, dec.witness}; }
inline RankResult special_rank(const Representation &rep) { return special_rank(isotypic_decomposition(rep)); }

/// Least r such that every submodule is generated by r elements:
/// max over components of ceil(t / dim_{End S} S).
inline std::size_t generator_rank(const Representation &rep) {
    return isotypic_decomposition(rep).generator_rank;
}

/// The submodule `space` as a representation in its own coordinates.
inline Representation submodule_representation(const Representation &rep, const ModuleSpace &space) {
    if (!is_stable(rep.generators(), space))
        throw ValidationError("submodule: subspace is not stable under the action");
    return Representation(rep.group(), space.dimension(), restrict_action(rep.generators(), space));
}

struct QuotientResult {
    Representation module;
    QMatrix projection; // ambient → quotient coordinates, v ↦ v·projection
};

inline QuotientResult quotient(const Representation &rep, const ModuleSpace &sub) {
    auto q = quotient_action(rep.generators(), sub);
    return {Representation(rep.group(), rep.dimension() - sub.dimension(), std::move(q.action)),
            std::move(q.projection)};
}

/// a = a₁ + … + a_n with aᵢ the first basis vector of the i-th simple; the
/// simples must be independent and pairwise non-isomorphic. The result is
/// verified to spin to their direct sum.
inline QVector cyclic_generator(const Representation &rep, const std::vector<ModuleSpace> &simples) {
    const std::size_t d = rep.dimension();
    if (simples.empty())
        return QVector(d, Rational(0));
    QMatrix stacked(0, d);
    std::vector<Action> actions;
    for (const auto &s : simples) {
        if (s.is_zero())
            throw ValidationError("cyclic_generator: zero summand");
        stacked = vstack(stacked, s.basis);
        actions.push_back(restrict_action(rep.generators(), s));
    }
    if (rank(stacked) != stacked.rows())
        throw ValidationError("cyclic_generator: summands are not independent");
    for (std::size_t i = 0; i < simples.size(); ++i)
        for (std::size_t j = i + 1; j < simples.size(); ++j)
            if (hom_dimension(actions[i], actions[j]) != 0)
                throw ValidationError("cyclic_generator: summands " + std::to_string(i) + " and " +
                                      std::to_string(j) + " are isomorphic");
    QVector a(d, Rational(0));
    for (const auto &s : simples)
        for (std::size_t k = 0; k < d; ++k)
            a[k] += s.basis(0, k);
    if (spin_vector(rep.generators(), a) != ModuleSpace::from_rows(stacked, d))
        throw InternalError("cyclic_generator: generator does not spin to the direct sum");
    return a;
}

struct GeneratorSearchResult {
    std::size_t k = 0;
    bool budget_exhausted = false;
};

/// Smallest k such that k random vectors (entries in {-2..2}) spin to the
/// whole module in one of `trials` attempts. Deterministic in `seed`.
inline GeneratorSearchResult min_generators_randomized(const Representation &rep, std::size_t trials,
                                                       std::uint64_t seed = 0) {
    if (trials == 0)
        throw std::invalid_argument("min_generators_randomized: trials must be >= 1");
    const std::size_t d = rep.dimension();
    if (d == 0)
        return {0, false};
    std::mt19937_64 rng(seed);
    for (std::size_t k = 1; k <= d; ++k)
        for (std::size_t t = 0; t < trials; ++t) {
            QMatrix vs(0, d);
            for (std::size_t i = 0; i < k; ++i)
                vs = vstack(vs, row_matrix(random_small_vector(d, rng)));
            if (spin(rep.generators(), d, vs).dimension() == d)
                return {k, false};
        }
    return {d, true};
}

struct Theorem1Report {
    DecompositionReport decomposition;
    std::size_t dimension = 0;
    std::size_t group_order = 0;
    std::vector<Check> checks;
    [[nodiscard]] bool passed() const { return all_pass(checks); }
};

/// Checks the structure statements for a rational module: direct sum of
/// homogeneous components, multiplicities bounded by and attaining r, component
/// count at most nns(G, Q), and dim ≤ r·|G|·nns.
inline Theorem1Report verify_theorem1(const Representation &rep, const DecompositionOptions &opt = {}) {
    Theorem1Report out;
    out.decomposition = isotypic_decomposition(rep, opt);
    const auto &dec = out.decomposition;
    const std::size_t d = rep.dimension();
    out.dimension = d;
    out.group_order = rep.group()->order();

    QMatrix stacked(0, d);
    bool stable = true;
    std::size_t dim_sum = 0;
    for (const auto &c : dec.components) {
        stacked = vstack(stacked, c.space.basis);
        stable = stable && is_stable(rep.generators(), c.space);
        dim_sum += c.space.dimension();
    }
    const std::size_t stacked_rank = d ? rank(stacked) : 0;
    Check direct = compare_eq("components form a direct sum equal to A", "Theorem 1 (i)",
                              static_cast<long long>(stacked_rank), static_cast<long long>(d),
                              "rank of stacked component bases vs dim A; sum of dims " + std::to_string(dim_sum));
    direct.pass = direct.pass && dim_sum == d && stable;
    out.checks.push_back(direct);

    std::size_t max_t = 0;
    bool attained = dec.components.empty() && dec.special_rank == 0;
    for (const auto &c : dec.components) {
        max_t = std::max(max_t, c.multiplicity);
        attained = attained || c.multiplicity == dec.special_rank;
    }
    Check mult = compare_le("every multiplicity t(j) is at most r", "Theorem 1 (ii)",
                            static_cast<long long>(max_t), static_cast<long long>(dec.special_rank),
                            attained ? "attained" : "not attained");
    mult.pass = mult.pass && attained;
    out.checks.push_back(mult);

    out.checks.push_back(compare_le("number of homogeneous components n is at most nns(G, Q)",
                                    "Theorem 1 (iii)", static_cast<long long>(dec.components.size()),
                                    static_cast<long long>(dec.nns_bound)));
    out.checks.push_back(compare_le("dim A <= r*|G|*nns(G, Q)", "Theorem 1 (dimension bound)",
                                    static_cast<long long>(d),
                                    static_cast<long long>(dec.special_rank * out.group_order * dec.nns_bound),
                                    std::to_string(dec.special_rank) + "*" + std::to_string(out.group_order) +
                                        "*" + std::to_string(dec.nns_bound)));
    return out;
}

} // namespace srank
