#pragma once

#include "srank/linalg.hpp"
#include "srank/perm_group.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace srank {

using GroupPtr = std::shared_ptr<const PermGroup>;

/// A finite-dimensional right QG-module: one d×d matrix per generator, acting
/// on row vectors. Matrices for every group element are derived eagerly along
/// the group's BFS tree; the value is immutable afterwards.
class Representation {
public:
    Representation(GroupPtr group, std::size_t dim, std::vector<QMatrix> generator_matrices)
        : group_(std::move(group)), dim_(dim), gens_(std::move(generator_matrices)) {
        if (!group_)
            throw std::invalid_argument("representation without group");
        if (gens_.size() != group_->generator_count())
            throw ValidationError("expected " + std::to_string(group_->generator_count()) +
                                  " action matrices, got " + std::to_string(gens_.size()));
        for (const auto &m : gens_)
            if (m.rows() != dim_ || m.cols() != dim_)
                throw ValidationError("action matrix is not " + std::to_string(dim_) + "x" +
                                      std::to_string(dim_));
        elements_.reserve(group_->order());
        elements_.push_back(QMatrix::identity(dim_));
        for (std::size_t i = 1; i < group_->order(); ++i)
            elements_.push_back(elements_[group_->parent(i)] * gens_[group_->parent_generator(i)]);
    }

    [[nodiscard]] const GroupPtr &group() const { return group_; }
    [[nodiscard]] std::size_t dimension() const { return dim_; }
    [[nodiscard]] const std::vector<QMatrix> &generators() const { return gens_; }
    [[nodiscard]] const QMatrix &element_matrix(std::size_t i) const { return elements_.at(i); }
    [[nodiscard]] const std::vector<QMatrix> &element_matrices() const { return elements_; }

    /// Σ ρ(g) over a set of element indices.
    [[nodiscard]] QMatrix sum_matrix(const std::vector<std::size_t> &indices) const {
        QMatrix s(dim_, dim_);
        for (auto i : indices)
            s = s + elements_[i];
        return s;
    }

private:
    GroupPtr group_;
    std::size_t dim_;
    std::vector<QMatrix> gens_;
    std::vector<QMatrix> elements_;
};

struct ValidationResult {
    bool ok = true;
    std::string message;
    /// Offending element pair (g, h) with ρ(g)ρ(h) ≠ ρ(gh), when applicable.
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// Homomorphism check: every generator matrix invertible; ρ(g)ρ(h) = ρ(gh) for
/// all pairs when |G| ≤ 200, otherwise for 1000 pairs drawn with a fixed seed
/// plus every (element, generator) and (element, generator inverse) pair.
inline ValidationResult validate(const Representation &rep) {
    const PermGroup &g = *rep.group();
    for (std::size_t s = 0; s < rep.generators().size(); ++s) {
        if (rank(rep.generators()[s]) != rep.dimension())
            return {false, "action matrix of generator " + std::to_string(s + 1) + " is not invertible",
                    std::nullopt};
        std::size_t idx = g.generator_index(s);
        if (!(rep.element_matrix(idx) == rep.generators()[s]))
            return {false, "generator " + std::to_string(s + 1) + " disagrees with its word in the others",
                    std::make_pair(idx, std::size_t{0})};
    }
    auto check = [&](std::size_t a, std::size_t b) -> std::optional<ValidationResult> {
        if (rep.element_matrix(a) * rep.element_matrix(b) == rep.element_matrix(g.mul(a, b)))
            return std::nullopt;
        return ValidationResult{false,
                                "homomorphism violated at element pair (" + std::to_string(a) + ", " +
                                    std::to_string(b) + ")",
                                std::make_pair(a, b)};
    };
    const std::size_t n = g.order();
    if (n <= 200) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (auto bad = check(a, b))
                    return *bad;
        return {};
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t s = 0; s < g.generator_count(); ++s) {
            std::size_t x = g.generator_index(s);
            if (auto bad = check(a, x))
                return *bad;
            if (auto bad = check(a, g.inverse(x)))
                return *bad;
        }
    std::mt19937_64 rng(0);
    for (int t = 0; t < 1000; ++t)
        if (auto bad = check(rng() % n, rng() % n))
            return *bad;
    return {};
}

inline void ensure_valid(const Representation &rep) {
    auto v = validate(rep);
    if (!v.ok)
        throw ValidationError(v.message);
}

/// Right multiplication on the basis {e_x : x ∈ G}: e_x·g = e_{xg}.
inline Representation regular_representation(GroupPtr group) {
    const std::size_t n = group->order();
    std::vector<QMatrix> gens;
    for (std::size_t s = 0; s < group->generator_count(); ++s) {
        std::size_t gi = group->generator_index(s);
        QMatrix m(n, n);
        for (std::size_t x = 0; x < n; ++x)
            m(x, group->mul(x, gi)) = 1;
        gens.push_back(std::move(m));
    }
    return Representation(std::move(group), n, std::move(gens));
}

/// Natural permutation module on the points: e_i·g = e_{g(i)}.
inline Representation permutation_representation(GroupPtr group) {
    const std::size_t n = group->degree();
    std::vector<QMatrix> gens;
    for (const auto &p : group->generators()) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, p[i]) = 1;
        gens.push_back(std::move(m));
    }
    return Representation(std::move(group), n, std::move(gens));
}

inline Representation trivial_representation(GroupPtr group, std::size_t dim) {
    std::vector<QMatrix> gens(group->generator_count(), QMatrix::identity(dim));
    return Representation(std::move(group), dim, std::move(gens));
}

/// Block-diagonal action on A ⊕ B.
inline Representation direct_sum(const Representation &a, const Representation &b) {
    if (a.group() != b.group() && a.group()->generators() != b.group()->generators())
        throw ValidationError("direct_sum: representations of different groups");
    std::vector<QMatrix> gens;
    for (std::size_t s = 0; s < a.generators().size(); ++s)
        gens.push_back(block_diagonal(a.generators()[s], b.generators()[s]));
    return Representation(a.group(), a.dimension() + b.dimension(), std::move(gens));
}

inline Representation direct_power(const Representation &a, std::size_t copies) {
    Representation out(a.group(), 0, std::vector<QMatrix>(a.generators().size(), QMatrix(0, 0)));
    for (std::size_t i = 0; i < copies; ++i)
        out = direct_sum(out, a);
    return out;
}

inline bool same_group(const Representation &a, const Representation &b) {
    return a.group() == b.group() || a.group()->generators() == b.group()->generators();
}

} // namespace srank
