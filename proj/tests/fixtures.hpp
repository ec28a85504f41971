#pragma once

#include "srank/catalog.hpp"

#include <map>
#include <random>
#include <string>

namespace fixture {

using namespace srank;

inline const std::vector<std::string> kGroups = {"S3", "C2", "C4", "D4", "Q8", "A4"};

/// Catalog entries are parsed once per test binary.
inline const CatalogEntry &entry(const std::string &name) {
    static std::map<std::string, CatalogEntry> cache;
    auto it = cache.find(name);
    if (it == cache.end())
        it = cache.emplace(name, load_catalog(name)).first;
    return it->second;
}

inline const Representation &rep(const std::string &group, const std::string &name) {
    return entry(group).representation(name);
}

/// Stable subspace spun from 1..3 random vectors.
inline ModuleSpace random_submodule(const Representation &r, std::mt19937_64 &rng) {
    const std::size_t d = r.dimension();
    const std::size_t k = 1 + rng() % 3;
    QMatrix vs(0, d);
    for (std::size_t i = 0; i < k; ++i)
        vs = vstack(vs, row_matrix(random_small_vector(d, rng)));
    return spin(r.generators(), d, vs);
}

/// Random stable subspace of a given stable subspace.
inline ModuleSpace random_submodule_of(const Representation &r, const ModuleSpace &c, std::mt19937_64 &rng) {
    if (c.is_zero())
        return c;
    const std::size_t k = 1 + rng() % 2;
    QMatrix vs(0, r.dimension());
    for (std::size_t i = 0; i < k; ++i)
        vs = vstack(vs, row_matrix(vec_mul<Rational>(random_small_vector(c.dimension(), rng), c.basis)));
    return spin(r.generators(), r.dimension(), vs);
}

} // namespace fixture
