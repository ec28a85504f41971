#pragma once

// Torsion-free ZG-lattices: rationalization, rank transfer to QG, integral
// spinning with HNF canonical bases, and randomized generator searches over
// the integral group ring. The searches only ever produce upper bounds.

#include "srank/decomposition.hpp"
#include "srank/hnf.hpp"

#include <optional>
#include <random>
#include <vector>

namespace srank {

/// A ZG-lattice Z^d with one integer matrix per generator (right action).
class Lattice {
public:
    Lattice(GroupPtr group, std::size_t rank, std::vector<ZMatrix> action)
        : group_(std::move(group)), rank_(rank), action_(std::move(action)) {
        if (action_.size() != group_->generator_count())
            throw ValidationError("lattice: expected one action matrix per generator");
        for (const auto &m : action_)
            if (m.rows() != rank_ || m.cols() != rank_)
                throw ValidationError("lattice: action matrix has wrong shape");
    }

    [[nodiscard]] const GroupPtr &group() const { return group_; }
    [[nodiscard]] std::size_t rank() const { return rank_; }
    [[nodiscard]] const std::vector<ZMatrix> &action() const { return action_; }

private:
    GroupPtr group_;
    std::size_t rank_;
    std::vector<ZMatrix> action_;
};

/// A ZG-submodule given by its HNF basis.
struct ZSubmodule {
    ZMatrix basis;
    std::size_t ambient_rank = 0;

    [[nodiscard]] std::size_t rank() const { return basis.rows(); }
    [[nodiscard]] bool is_zero() const { return basis.rows() == 0; }
    friend bool operator==(const ZSubmodule &, const ZSubmodule &) = default;
};

/// The same matrices viewed over the rationals: A ⊗ Q.
inline Representation rationalize(const Lattice &lat) {
    std::vector<QMatrix> gens;
    for (const auto &m : lat.action())
        gens.push_back(to_rational(m));
    return Representation(lat.group(), lat.rank(), std::move(gens));
}

/// Validated like a representation; inverses of group elements are powers of
/// integer matrices, so they are integral automatically.
inline ValidationResult validate(const Lattice &lat) { return validate(rationalize(lat)); }

inline void ensure_valid(const Lattice &lat) {
    auto v = validate(lat);
    if (!v.ok)
        throw ValidationError(v.message);
}

/// Special rank over ZG, which coincides with the rational special rank.
inline std::size_t special_rank_integral(const Lattice &lat) { return special_rank(rationalize(lat)).rank; }

/// Integral span of `vectors` closed under the action, re-normalized to HNF
/// until stable.
inline ZSubmodule zspin(const Lattice &lat, const ZMatrix &vectors) {
    if (vectors.rows() > 0 && vectors.cols() != lat.rank())
        throw ValidationError("zspin: vector length differs from lattice rank");
    ZMatrix current = vectors.rows() ? hnf(vectors) : ZMatrix(0, lat.rank());
    while (current.rows() > 0) {
        ZMatrix all = current;
        for (const auto &g : lat.action())
            all = vstack(all, current * g);
        ZMatrix next = hnf(all);
        if (next == current)
            break;
        current = std::move(next);
    }
    return {current, lat.rank()};
}

/// The Q-span of a ZG-submodule as a QG-module in its own coordinates.
inline Representation rational_span(const Lattice &lat, const ZSubmodule &sub) {
    auto rep = rationalize(lat);
    return submodule_representation(rep, ModuleSpace::from_rows(to_rational(sub.basis), lat.rank()));
}

struct ExperimentTrace {
    std::size_t k = 0;
    std::size_t attempts = 0;
    bool success = false;
};

struct GeneratorExperiment {
    std::optional<std::size_t> upper_bound;   // smallest k that succeeded
    ZMatrix generators;                       // the successful generating set
    std::size_t rational_special_rank = 0;    // max multiplicity of sub ⊗ Q
    std::size_t rational_generator_rank = 0;  // generator count of sub ⊗ Q: a true lower bound
    bool budget_exhausted = false;
    std::vector<ExperimentTrace> trace;
};

/// Randomized search for small ZG-generating sets of `sub`: for k = 1, 2, …
/// up to `max_k` (default: the Z-rank of sub), try `budget` sets of k random
/// {-2..2}-combinations of the HNF rows. Reports the smallest success.
inline GeneratorExperiment generator_experiment(const Lattice &lat, const ZSubmodule &sub, std::size_t budget,
                                                std::uint64_t seed = 0,
                                                std::optional<std::size_t> max_k = std::nullopt) {
    if (budget == 0)
        throw std::invalid_argument("generator_experiment: budget must be >= 1");
    GeneratorExperiment out;
    if (sub.is_zero()) {
        out.upper_bound = 0;
        out.generators = ZMatrix(0, lat.rank());
        return out;
    }
    {
        auto dec = isotypic_decomposition(rational_span(lat, sub));
        out.rational_special_rank = dec.special_rank;
        out.rational_generator_rank = dec.generator_rank;
    }
    std::mt19937_64 rng(seed);
    const std::size_t m = sub.rank();
    const std::size_t limit = max_k.value_or(m);
    for (std::size_t k = 1; k <= limit; ++k) {
        ExperimentTrace tr{k, 0, false};
        for (std::size_t attempt = 0; attempt < budget; ++attempt) {
            ++tr.attempts;
            ZMatrix cand(k, lat.rank());
            for (std::size_t i = 0; i < k; ++i) {
                ZVector coeff(m, Integer(0));
                bool nonzero = false;
                while (!nonzero) {
                    for (auto &c : coeff) {
                        c = static_cast<long>(rng() % 5) - 2;
                        nonzero = nonzero || c != 0;
                    }
                }
                auto row = vec_mul<Integer>(coeff, sub.basis);
                for (std::size_t j = 0; j < lat.rank(); ++j)
                    cand(i, j) = row[j];
            }
            if (zspin(lat, cand) == sub) {
                tr.success = true;
                out.upper_bound = k;
                out.generators = std::move(cand);
                break;
            }
        }
        out.trace.push_back(tr);
        if (tr.success)
            return out;
    }
    out.budget_exhausted = true;
    return out;
}

} // namespace srank
