#pragma once

// Shipped example groups and representations (catalog/<NAME>.json).

#include "srank/io.hpp"

#include <algorithm>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#ifndef SRANK_CATALOG_DIR
#define SRANK_CATALOG_DIR "catalog"
#endif

namespace srank {

struct CatalogEntry {
    std::string name;
    GroupPtr group;
    std::vector<std::pair<std::string, Representation>> representations; // file order

    [[nodiscard]] const Representation &representation(const std::string &rep) const {
        for (const auto &[n, r] : representations)
            if (n == rep)
                return r;
        std::string avail;
        for (const auto &[n, r] : representations)
            avail += (avail.empty() ? "" : ", ") + n;
        throw ValidationError("catalog entry " + name + " has no representation '" + rep + "' (available: " + avail +
                              ")");
    }
};

inline std::string catalog_dir() {
    if (const char *env = std::getenv("SRANK_CATALOG"))
        return env;
    return SRANK_CATALOG_DIR;
}

inline std::vector<std::string> catalog_names(const std::string &dir = catalog_dir()) {
    std::vector<std::string> names;
    std::error_code ec;
    for (const auto &e : std::filesystem::directory_iterator(dir, ec))
        if (e.path().extension() == ".json")
            names.push_back(e.path().stem().string());
    std::sort(names.begin(), names.end());
    return names;
}

/// Loads and validates every representation of a catalog group.
inline CatalogEntry load_catalog(const std::string &name, const std::string &dir = catalog_dir()) {
    auto names = catalog_names(dir);
    if (std::find(names.begin(), names.end(), name) == names.end()) {
        std::string avail;
        for (const auto &n : names)
            avail += (avail.empty() ? "" : ", ") + n;
        throw ValidationError("unknown catalog entry '" + name + "' (available: " + avail + ")");
    }
    auto j = io::read_json_file((std::filesystem::path(dir) / (name + ".json")).string());
    CatalogEntry entry{name, io::read_group(io::require(j, "group", name)), {}};
    const auto &reps = io::require(j, "representations", name);
    for (auto it = reps.begin(); it != reps.end(); ++it) {
        Representation r = io::read_representation_body(it.value(), entry.group);
        auto v = validate(r);
        if (!v.ok)
            throw ValidationError(name + ":" + it.key() + ": " + v.message);
        entry.representations.emplace_back(it.key(), std::move(r));
    }
    return entry;
}

} // namespace srank
