#pragma once

#include "srank/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace srank {

/// A permutation of {0..n-1} as an image array. Products compose left to
/// right: (g*h)(i) = h(g(i)), matching right actions.
using Permutation = std::vector<std::uint32_t>;

inline Permutation perm_identity(std::size_t n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0u);
    return p;
}

inline Permutation perm_mul(const Permutation &g, const Permutation &h) {
    Permutation out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        out[i] = h[g[i]];
    return out;
}

inline Permutation perm_inverse(const Permutation &g) {
    Permutation out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        out[g[i]] = static_cast<std::uint32_t>(i);
    return out;
}

/// Thrown when enumeration would exceed the configured order cap.
class OrderCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Finite permutation group with an eagerly enumerated element list.
/// Element 0 is always the identity. Immutable after construction.
class PermGroup {
public:
    static constexpr std::size_t default_order_cap = 2000;

    /// Generators given as 0-based image arrays.
    PermGroup(std::size_t degree, std::vector<Permutation> generators,
              std::size_t order_cap = default_order_cap)
        : degree_(degree), gens_(std::move(generators)) {
        for (const auto &g : gens_) {
            if (g.size() != degree_)
                throw ValidationError("generator length differs from degree");
            std::vector<bool> seen(degree_, false);
            for (auto x : g) {
                if (x >= degree_ || seen[x])
                    throw ValidationError("generator is not a bijection on the points");
                seen[x] = true;
            }
        }
        enumerate(order_cap);
    }

    /// Generators given as 1-based image arrays (the file format).
    static PermGroup from_images(std::size_t degree, const std::vector<std::vector<long>> &images,
                                 std::size_t order_cap = default_order_cap) {
        std::vector<Permutation> gens;
        for (const auto &img : images) {
            Permutation p;
            for (long x : img) {
                if (x < 1 || static_cast<std::size_t>(x) > degree)
                    throw ValidationError("generator image " + std::to_string(x) + " out of range 1.." +
                                          std::to_string(degree));
                p.push_back(static_cast<std::uint32_t>(x - 1));
            }
            gens.push_back(std::move(p));
        }
        return PermGroup(degree, std::move(gens), order_cap);
    }

    [[nodiscard]] std::size_t degree() const { return degree_; }
    [[nodiscard]] std::size_t order() const { return elements_.size(); }
    [[nodiscard]] const std::vector<Permutation> &generators() const { return gens_; }
    [[nodiscard]] std::size_t generator_count() const { return gens_.size(); }
    [[nodiscard]] const std::vector<Permutation> &elements() const { return elements_; }
    [[nodiscard]] const Permutation &element(std::size_t i) const { return elements_.at(i); }

    [[nodiscard]] std::size_t index_of(const Permutation &p) const {
        auto it = index_.find(p);
        if (it == index_.end())
            throw std::out_of_range("permutation is not a group element");
        return it->second;
    }

    [[nodiscard]] std::size_t mul(std::size_t a, std::size_t b) const {
        return index_of(perm_mul(elements_[a], elements_[b]));
    }
    [[nodiscard]] std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    [[nodiscard]] std::size_t element_order(std::size_t a) const { return orders_[a]; }
    /// Index of generator i as an element.
    [[nodiscard]] std::size_t generator_index(std::size_t i) const { return index_of(gens_.at(i)); }

    /// BFS spanning tree: element i = element(parent(i)) * generator(parent_generator(i)).
    [[nodiscard]] std::size_t parent(std::size_t i) const { return parent_[i]; }
    [[nodiscard]] std::size_t parent_generator(std::size_t i) const { return parent_gen_[i]; }

    [[nodiscard]] std::size_t power(std::size_t a, std::size_t m) const {
        Permutation result = perm_identity(degree_), base = elements_[a];
        for (; m > 0; m >>= 1) {
            if (m & 1)
                result = perm_mul(result, base);
            base = perm_mul(base, base);
        }
        return index_of(result);
    }

    /// Least common multiple of element orders.
    [[nodiscard]] std::size_t exponent() const {
        std::size_t e = 1;
        for (auto o : orders_)
            e = std::lcm(e, o);
        return e;
    }

    [[nodiscard]] bool is_abelian() const {
        for (const auto &g : gens_)
            for (const auto &h : gens_)
                if (perm_mul(g, h) != perm_mul(h, g))
                    return false;
        return true;
    }

private:
    void enumerate(std::size_t cap) {
        Permutation id = perm_identity(degree_);
        elements_.push_back(id);
        index_.emplace(id, 0);
        parent_.push_back(0);
        parent_gen_.push_back(0);
        for (std::size_t head = 0; head < elements_.size(); ++head) {
            for (std::size_t s = 0; s < gens_.size(); ++s) {
                Permutation y = perm_mul(elements_[head], gens_[s]);
                if (index_.count(y))
                    continue;
                if (elements_.size() >= cap)
                    throw OrderCapExceeded("group order exceeds cap of " + std::to_string(cap));
                index_.emplace(y, elements_.size());
                elements_.push_back(std::move(y));
                parent_.push_back(head);
                parent_gen_.push_back(s);
            }
        }
        inverse_.resize(elements_.size());
        orders_.resize(elements_.size());
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            inverse_[i] = index_of(perm_inverse(elements_[i]));
            std::size_t o = 1;
            Permutation x = elements_[i];
            while (x != id) {
                x = perm_mul(x, elements_[i]);
                ++o;
            }
            orders_[i] = o;
        }
    }

    std::size_t degree_;
    std::vector<Permutation> gens_;
    std::vector<Permutation> elements_;
    std::map<Permutation, std::size_t> index_;
    std::vector<std::size_t> parent_, parent_gen_, inverse_, orders_;
};

/// A characteristic-0 coefficient field, described by the exponents m for
/// which ξ ↦ ξ^m (ξ a primitive n-th root of unity) fixes the field. The set H
/// is taken as the definition of the field; no further Galois check is made.
struct FieldSpec {
    enum class Kind { Rationals, SplittingField, FixedField };
    Kind kind = Kind::Rationals;
    std::size_t modulus = 0;             // FixedField only
    std::vector<std::size_t> exponents;  // FixedField only

    static FieldSpec rationals() { return {}; }
    static FieldSpec splitting() { return {Kind::SplittingField, 0, {}}; }
    static FieldSpec fixed(std::size_t n, std::vector<std::size_t> h) {
        return {Kind::FixedField, n, std::move(h)};
    }

    [[nodiscard]] std::string name() const {
        switch (kind) {
        case Kind::Rationals:
            return "rationals";
        case Kind::SplittingField:
            return "splitting";
        case Kind::FixedField: {
            std::string s = "fixed(" + std::to_string(modulus) + ";";
            for (std::size_t i = 0; i < exponents.size(); ++i)
                s += (i ? "," : "") + std::to_string(exponents[i]);
            return s + ")";
        }
        }
        return "?";
    }
};

/// Modulus n and exponent subgroup H of (Z/n)^× realizing `field` for `group`.
struct ResolvedField {
    std::size_t modulus;
    std::vector<std::size_t> exponents;
};

inline ResolvedField resolve_field(const PermGroup &group, const FieldSpec &field) {
    const std::size_t e = group.exponent();
    switch (field.kind) {
    case FieldSpec::Kind::Rationals: {
        ResolvedField r{e, {1}};
        for (std::size_t m = 2; m < e; ++m)
            if (std::gcd(m, e) == 1)
                r.exponents.push_back(m);
        return r;
    }
    case FieldSpec::Kind::SplittingField:
        return {e, {1}};
    case FieldSpec::Kind::FixedField: {
        const std::size_t n = field.modulus;
        if (n == 0)
            throw ValidationError("field modulus must be positive");
        if (n % e != 0)
            throw ValidationError("field modulus " + std::to_string(n) +
                                  " is not a multiple of the group exponent " + std::to_string(e));
        std::set<std::size_t> h;
        for (auto m : field.exponents) {
            std::size_t r = m % n;
            if (n == 1)
                r = 1;
            if (std::gcd(r, n) != 1)
                throw ValidationError("exponent " + std::to_string(m) + " is not a unit modulo " +
                                      std::to_string(n));
            h.insert(r);
        }
        if (!h.count(1))
            throw ValidationError("exponent set must contain 1");
        for (auto a : h)
            for (auto b : h)
                if (!h.count(a * b % n))
                    throw ValidationError("exponent set is not closed under multiplication modulo " +
                                          std::to_string(n));
        return {n, {h.begin(), h.end()}};
    }
    }
    throw std::logic_error("unknown field kind");
}

/// A partition of the group elements (indices) into classes; classes are
/// ordered by their smallest element, so the identity class comes first.
struct ConjClassSet {
    std::vector<std::vector<std::size_t>> classes;
    std::vector<std::size_t> representatives;

    [[nodiscard]] std::size_t size() const { return classes.size(); }
    [[nodiscard]] std::vector<std::size_t> class_sizes() const {
        std::vector<std::size_t> s;
        for (const auto &c : classes)
            s.push_back(c.size());
        return s;
    }
};

namespace detail {
/// Orbits of the closure of the given moves on element indices.
template <class Moves> ConjClassSet orbit_partition(std::size_t order, Moves &&moves) {
    ConjClassSet out;
    std::vector<bool> seen(order, false);
    for (std::size_t a = 0; a < order; ++a) {
        if (seen[a])
            continue;
        std::vector<std::size_t> orbit{a};
        seen[a] = true;
        for (std::size_t head = 0; head < orbit.size(); ++head)
            for (std::size_t b : moves(orbit[head]))
                if (!seen[b]) {
                    seen[b] = true;
                    orbit.push_back(b);
                }
        std::sort(orbit.begin(), orbit.end());
        out.representatives.push_back(orbit.front());
        out.classes.push_back(std::move(orbit));
    }
    return out;
}
} // namespace detail

inline ConjClassSet conjugacy_classes(const PermGroup &g) {
    return detail::orbit_partition(g.order(), [&](std::size_t a) {
        std::vector<std::size_t> next;
        for (std::size_t s = 0; s < g.generator_count(); ++s) {
            std::size_t x = g.generator_index(s);
            next.push_back(g.mul(g.mul(g.inverse(x), a), x));
        }
        return next;
    });
}

/// Classes of a ~ b iff x⁻¹ a x = b^m for some x ∈ G and admissible m.
inline ConjClassSet f_conjugacy_classes(const PermGroup &g, const FieldSpec &field) {
    const ResolvedField rf = resolve_field(g, field);
    return detail::orbit_partition(g.order(), [&](std::size_t a) {
        std::vector<std::size_t> next;
        for (std::size_t s = 0; s < g.generator_count(); ++s) {
            std::size_t x = g.generator_index(s);
            next.push_back(g.mul(g.mul(g.inverse(x), a), x));
        }
        const std::size_t o = g.element_order(a);
        for (auto m : rf.exponents)
            next.push_back(g.power(a, m % o));
        return next;
    });
}

/// Number of pairwise non-isomorphic simple FG-modules (Berman–Witt count;
/// every element is regular in characteristic 0).
inline std::size_t nns(const PermGroup &g, const FieldSpec &field) {
    return f_conjugacy_classes(g, field).size();
}

/// One 0/1 coefficient vector over the elements per conjugacy class.
inline std::vector<std::vector<int>> class_sums(const PermGroup &g) {
    std::vector<std::vector<int>> sums;
    for (const auto &cls : conjugacy_classes(g).classes) {
        std::vector<int> v(g.order(), 0);
        for (auto i : cls)
            v[i] = 1;
        sums.push_back(std::move(v));
    }
    return sums;
}

} // namespace srank
