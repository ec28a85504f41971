#pragma once

// JSON input and output. Rationals travel as "a" / "a/b" strings (plain JSON
// integers are accepted on input); permutations as 1-based image arrays.
// Output uses ordered_json so reports are byte-identical across runs.

#include "srank/dedekind.hpp"
#include "srank/integral.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace srank::io {

using json = nlohmann::ordered_json;

inline json parse_json_text(const std::string &text, const std::string &origin = "input") {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(origin + ": " + e.what());
    }
}

inline json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), path);
}

inline const json &require(const json &j, const char *key, const std::string &where) {
    if (!j.is_object())
        throw ParseError(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(where + ": missing field \"" + key + "\"");
    return *it;
}

inline std::size_t read_count(const json &j, const std::string &where) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw ParseError(where + ": expected a non-negative integer");
    return j.get<std::size_t>();
}

inline Rational read_rational(const json &j) {
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(Integer(j.dump()));
    throw ParseError("expected a rational as string or integer, got " + j.dump());
}

inline Integer read_integer(const json &j) {
    Rational q = read_rational(j);
    if (!is_integral(q))
        throw ParseError("expected an integer, got " + to_string(q));
    return q.get_num();
}

template <class T, class Read>
Matrix<T> read_matrix(const json &j, std::size_t n, const std::string &where, Read &&read) {
    if (!j.is_array())
        throw ParseError(where + ": expected a matrix (array of rows)");
    if (j.size() != n)
        throw ValidationError(where + ": expected " + std::to_string(n) + " rows, got " + std::to_string(j.size()));
    Matrix<T> m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!j[i].is_array())
            throw ParseError(where + ": row " + std::to_string(i + 1) + " is not an array");
        if (j[i].size() != n)
            throw ValidationError(where + ": row " + std::to_string(i + 1) + " has " + std::to_string(j[i].size()) +
                                  " entries, expected " + std::to_string(n));
        for (std::size_t c = 0; c < n; ++c)
            m(i, c) = read(j[i][c]);
    }
    return m;
}

inline QMatrix read_qmatrix(const json &j, std::size_t n, const std::string &where) {
    return read_matrix<Rational>(j, n, where, read_rational);
}

inline ZMatrix read_zmatrix(const json &j, std::size_t n, const std::string &where) {
    return read_matrix<Integer>(j, n, where, read_integer);
}

inline GroupPtr read_group(const json &j, std::size_t order_cap = PermGroup::default_order_cap) {
    const std::size_t degree = read_count(require(j, "degree", "group"), "group.degree");
    const auto &gens = require(j, "generators", "group");
    if (!gens.is_array())
        throw ParseError("group.generators: expected an array");
    std::vector<std::vector<long>> images;
    for (const auto &g : gens) {
        if (!g.is_array())
            throw ParseError("group.generators: each generator must be an image array");
        std::vector<long> img;
        for (const auto &x : g) {
            if (!x.is_number_integer())
                throw ParseError("group.generators: images must be integers");
            img.push_back(x.get<long>());
        }
        images.push_back(std::move(img));
    }
    try {
        return std::make_shared<const PermGroup>(PermGroup::from_images(degree, images, order_cap));
    } catch (const OrderCapExceeded &e) {
        throw ValidationError(e.what());
    }
}

/// "rationals", "splitting", or "fixed:n:e1,e2,..." (CLI shorthand).
inline FieldSpec parse_field_string(const std::string &s) {
    if (s == "rationals" || s == "Q")
        return FieldSpec::rationals();
    if (s == "splitting")
        return FieldSpec::splitting();
    if (s.rfind("fixed:", 0) == 0) {
        auto rest = s.substr(6);
        auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw ParseError("field spec '" + s + "': expected fixed:n:e1,e2,...");
        auto number = [&](const std::string &t) -> std::size_t {
            if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError("field spec '" + s + "': '" + t + "' is not a non-negative integer");
            return std::stoul(t);
        };
        std::size_t n = number(rest.substr(0, colon));
        std::vector<std::size_t> h;
        std::stringstream ss(rest.substr(colon + 1));
        for (std::string item; std::getline(ss, item, ',');)
            h.push_back(number(item));
        return FieldSpec::fixed(n, std::move(h));
    }
    throw ParseError("unknown field spec '" + s + "' (use rationals, splitting or fixed:n:e1,e2,...)");
}

/// {"type": "rationals" | "splitting" | {"modulus": n, "exponents": [...]}},
/// or the bare type value.
inline FieldSpec read_field(const json &j) {
    const json &t = j.is_object() && j.contains("type") ? j["type"] : j;
    if (t.is_string()) {
        auto s = t.get<std::string>();
        if (s != "rationals" && s != "splitting")
            throw ParseError("field type must be \"rationals\", \"splitting\" or an object");
        return parse_field_string(s);
    }
    if (t.is_object()) {
        std::size_t n = read_count(require(t, "modulus", "field"), "field.modulus");
        const auto &e = require(t, "exponents", "field");
        if (!e.is_array())
            throw ParseError("field.exponents: expected an array");
        std::vector<std::size_t> h;
        for (const auto &x : e)
            h.push_back(read_count(x, "field.exponents"));
        return FieldSpec::fixed(n, std::move(h));
    }
    throw ParseError("malformed field spec " + j.dump());
}

inline std::vector<QMatrix> read_action(const json &j, std::size_t dim, std::size_t count, const std::string &where) {
    if (!j.is_array())
        throw ParseError(where + ": expected one matrix per generator");
    if (j.size() != count)
        throw ValidationError(where + ": expected " + std::to_string(count) + " matrices, got " +
                              std::to_string(j.size()));
    std::vector<QMatrix> out;
    for (std::size_t s = 0; s < j.size(); ++s)
        out.push_back(read_qmatrix(j[s], dim, where + "[" + std::to_string(s + 1) + "]"));
    return out;
}

/// {"dimension": d, "action": [...]} against an already parsed group, or
/// {"construct": "regular" | "permutation" | "trivial"} for derived modules.
inline Representation read_representation_body(const json &j, const GroupPtr &group) {
    if (j.is_object() && j.contains("construct")) {
        auto kind = j["construct"].get<std::string>();
        if (kind == "regular")
            return regular_representation(group);
        if (kind == "permutation")
            return permutation_representation(group);
        if (kind == "trivial")
            return trivial_representation(group, j.contains("dimension") ? read_count(j["dimension"], "dimension") : 1);
        throw ParseError("unknown construct '" + kind + "'");
    }
    const std::size_t d = read_count(require(j, "dimension", "module"), "module.dimension");
    const auto &a = require(j, "action", "module");
    return Representation(group, d, read_action(a, d, group->generator_count(), "module.action"));
}

/// {"group": ..., "dimension": d, "action": [...]}
inline Representation read_module(const json &j) {
    return read_representation_body(j, read_group(require(j, "group", "module")));
}

inline Lattice read_lattice(const json &j) {
    auto group = read_group(require(j, "group", "lattice"));
    const std::size_t d = read_count(require(j, "dimension", "lattice"), "lattice.dimension");
    const auto &a = require(j, "action", "lattice");
    if (!a.is_array())
        throw ParseError("lattice.action: expected one matrix per generator");
    if (a.size() != group->generator_count())
        throw ValidationError("lattice.action: expected " + std::to_string(group->generator_count()) + " matrices");
    std::vector<ZMatrix> mats;
    for (std::size_t s = 0; s < a.size(); ++s)
        mats.push_back(read_zmatrix(a[s], d, "lattice.action[" + std::to_string(s + 1) + "]"));
    return Lattice(group, d, std::move(mats));
}

/// Module JSON plus "x_action".
inline DxGModule read_dx_module(const json &j) {
    auto rep = read_module(j);
    auto t = read_qmatrix(require(j, "x_action", "module"), rep.dimension(), "module.x_action");
    return DxGModule(std::move(rep), std::move(t));
}

// ---- output ----------------------------------------------------------------

inline json to_json(const Rational &q) { return to_string(q); }

inline json to_json(const QMatrix &m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(to_string(m(i, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json to_json(const ZMatrix &m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(m(i, c).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json to_json(const QPolynomial &p) {
    json coeffs = json::array();
    for (int i = 0; i <= p.degree(); ++i)
        coeffs.push_back(to_string(p.coeff(i)));
    return {{"text", p.str()}, {"coefficients", coeffs}};
}

inline json to_json(const Check &c) {
    json j = {{"name", c.name}, {"anchor", c.anchor}, {"lhs", c.lhs},
              {"relation", c.relation}, {"rhs", c.rhs}, {"pass", c.pass}};
    if (!c.note.empty())
        j["note"] = c.note;
    return j;
}

inline json to_json(const std::vector<Check> &checks) {
    json a = json::array();
    for (const auto &c : checks)
        a.push_back(to_json(c));
    return a;
}

inline json to_json(const IsotypicComponent &c) {
    return {{"dimension", c.space.dimension()},
            {"simple_dimension", c.simple_dimension},
            {"multiplicity", c.multiplicity},
            {"endomorphism_dimension", c.endomorphism_dimension},
            {"generators_needed", c.generators_needed()}};
}

inline json to_json(const DecompositionReport &r) {
    json comps = json::array();
    for (const auto &c : r.components)
        comps.push_back(to_json(c));
    json j = {{"components", comps}, {"special_rank", r.special_rank}};
    j["witness_component"] = r.witness ? json(*r.witness) : json(nullptr);
    j["generator_rank"] = r.generator_rank;
    j["nns_bound"] = r.nns_bound;
    return j;
}

inline json to_json(const PrimeComponentReport &p) {
    json pieces = json::array();
    for (const auto &h : p.pieces) {
        json s = to_json(h.socle);
        pieces.push_back({{"dimension", h.space.dimension()},
                          {"socle_dimension", h.socle.space.dimension()},
                          {"socle_simple_dimension", h.socle.simple_dimension},
                          {"socle_count", h.socle.multiplicity},
                          {"socle_generators_needed", h.socle.generators_needed()}});
    }
    return {{"prime", to_json(p.prime)},
            {"component_dimension", p.component.dimension()},
            {"layer_dimensions", p.layer_dims},
            {"pieces", pieces}};
}

inline json to_json(const DedekindRank &r) {
    json primes = json::array();
    for (const auto &p : r.primes)
        primes.push_back(to_json(p));
    json j = {{"primes", primes}, {"special_rank", r.rank}, {"generator_rank", r.generator_rank}};
    if (r.witness)
        j["witness"] = {{"prime", r.primes[r.witness->first].prime.str()}, {"piece", r.witness->second}};
    else
        j["witness"] = nullptr;
    return j;
}

} // namespace srank::io
