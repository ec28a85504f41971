// srank: command-line front end. Every command builds one JSON report; text
// mode renders the same tree, so both modes carry identical numbers.
//
// Exit codes: 0 all checks pass, 1 some check failed, 2 parse error,
// 3 validation error, 4 internal error.

#include "srank/catalog.hpp"
#include "srank/io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

using namespace srank;
using io::json;

namespace {

struct Job {
    std::string command;
    std::string input;
    std::string catalog;
    std::string rep = "regular";
    std::string field = "rationals";
    std::uint64_t seed = 0;
    std::size_t budget = 200;
    std::size_t trials = 50;
    bool json_out = false;
    bool timing = false;
    std::string out;
};

json job_echo(const Job &job) {
    json j = {{"command", job.command}};
    if (!job.input.empty())
        j["input"] = job.input;
    if (!job.catalog.empty())
        j["catalog"] = job.catalog;
    j["field"] = job.field;
    j["seed"] = job.seed;
    if (job.command == "integral")
        j["budget"] = job.budget;
    if (job.command == "oracle")
        j["trials"] = job.trials;
    return j;
}

/// NAME or NAME:rep
std::pair<std::string, std::string> split_catalog(const Job &job) {
    auto colon = job.catalog.find(':');
    if (colon == std::string::npos)
        return {job.catalog, job.rep};
    return {job.catalog.substr(0, colon), job.catalog.substr(colon + 1)};
}

void require_source(const Job &job) {
    if (job.input.empty() == job.catalog.empty())
        throw ParseError("exactly one of --input or --catalog is required");
}

GroupPtr load_group(const Job &job) {
    require_source(job);
    if (!job.catalog.empty())
        return load_catalog(split_catalog(job).first).group;
    auto j = io::read_json_file(job.input);
    return io::read_group(j.contains("group") ? j["group"] : j);
}

Representation load_module(const Job &job) {
    require_source(job);
    if (!job.catalog.empty()) {
        auto [name, rep] = split_catalog(job);
        return load_catalog(name).representation(rep);
    }
    auto rep = io::read_module(io::read_json_file(job.input));
    ensure_valid(rep);
    return rep;
}

Lattice load_lattice(const Job &job) {
    require_source(job);
    if (!job.catalog.empty()) {
        auto rep = load_module(job);
        std::vector<ZMatrix> mats;
        for (const auto &m : rep.generators()) {
            for (const auto &x : m.data())
                if (!is_integral(x))
                    throw ValidationError("catalog representation has non-integral entries; not a lattice");
            mats.push_back(to_integer(m));
        }
        return Lattice(rep.group(), rep.dimension(), std::move(mats));
    }
    auto lat = io::read_lattice(io::read_json_file(job.input));
    ensure_valid(lat);
    return lat;
}

/// Catalog modules get T = 0.
DxGModule load_dx(const Job &job) {
    require_source(job);
    if (!job.catalog.empty()) {
        auto rep = load_module(job);
        const std::size_t d = rep.dimension();
        return DxGModule(std::move(rep), QMatrix(d, d));
    }
    auto m = io::read_dx_module(io::read_json_file(job.input));
    ensure_valid(m);
    return m;
}

void require_rationals(const Job &job) {
    if (io::parse_field_string(job.field).kind != FieldSpec::Kind::Rationals)
        throw ValidationError("command '" + job.command + "' decomposes over the rationals only; --field applies to nns");
}

struct Outcome {
    json result;
    std::vector<Check> checks;
};

Outcome run_nns(const Job &job) {
    auto g = load_group(job);
    auto field = io::parse_field_string(job.field);
    auto cls = f_conjugacy_classes(*g, field);
    auto sizes = cls.class_sizes();
    return {{{"group_order", g->order()},
             {"exponent", g->exponent()},
             {"field", field.name()},
             {"nns", cls.classes.size()},
             {"class_sizes", sizes},
             {"conjugacy_classes", conjugacy_classes(*g).classes.size()}},
            {}};
}

Outcome run_decompose(const Job &job) {
    require_rationals(job);
    auto rep = load_module(job);
    auto dec = isotypic_decomposition(rep, {true, job.seed});
    json r = {{"dimension", rep.dimension()}, {"group_order", rep.group()->order()}};
    r["decomposition"] = io::to_json(dec);
    return {r, {}};
}

Outcome run_rank(const Job &job) {
    require_rationals(job);
    auto rep = load_module(job);
    auto dec = isotypic_decomposition(rep, {true, job.seed});
    json r = {{"dimension", rep.dimension()},
              {"special_rank", dec.special_rank},
              {"witness_component", dec.witness ? json(*dec.witness) : json(nullptr)},
              {"generator_rank", dec.generator_rank}};
    if (dec.witness) {
        const auto &c = dec.components[*dec.witness];
        r["witness"] = {{"simple_dimension", c.simple_dimension}, {"multiplicity", c.multiplicity}};
    }
    return {r, {}};
}

Outcome run_verify1(const Job &job) {
    require_rationals(job);
    auto rep = load_module(job);
    auto rep1 = verify_theorem1(rep, {true, job.seed});
    json r = {{"dimension", rep1.dimension}, {"group_order", rep1.group_order}};
    r["decomposition"] = io::to_json(rep1.decomposition);
    return {r, rep1.checks};
}

Outcome run_integral(const Job &job) {
    auto lat = load_lattice(job);
    const std::size_t d = lat.rank();
    auto dec = isotypic_decomposition(rationalize(lat), {true, job.seed});
    const std::size_t sr_int = special_rank_integral(lat);
    auto whole = zspin(lat, ZMatrix::identity(d));
    json r = {{"rank_Z", d},
              {"special_rank_integral", sr_int},
              {"special_rank_rational", dec.special_rank},
              {"generator_rank_rational", dec.generator_rank},
              {"classical_rank", d},
              {"nns_rationals", dec.nns_bound}};
    r["classical_rank_note"] = "classical rank and nns are reported side by side; no inequality between them is asserted";
    std::vector<Check> checks;
    checks.push_back(compare_eq("special rank over ZG equals special rank of A (x) Q", "Theorem 2",
                                static_cast<long long>(sr_int), static_cast<long long>(dec.special_rank)));
    if (d > 0) {
        auto ex = generator_experiment(lat, whole, job.budget, job.seed);
        json trace = json::array();
        for (const auto &t : ex.trace)
            trace.push_back({{"k", t.k}, {"attempts", t.attempts}, {"success", t.success}});
        json e = {{"upper_bound", ex.upper_bound ? json(*ex.upper_bound) : json(nullptr)},
                  {"rational_lower_bound", ex.rational_generator_rank},
                  {"budget_exhausted", ex.budget_exhausted},
                  {"trace", trace}};
        if (ex.upper_bound)
            e["generators"] = io::to_json(ex.generators);
        r["experiment"] = e;
        if (ex.upper_bound) {
            Check c = compare_le("generating set found is no smaller than the rational lower bound",
                                 "Theorem 2 (experiment)", static_cast<long long>(ex.rational_generator_rank),
                                 static_cast<long long>(*ex.upper_bound), "upper-bound search only");
            checks.push_back(c);
            checks.push_back(compare_eq("found generators regenerate the lattice", "Theorem 2 (experiment)",
                                        zspin(lat, ex.generators) == whole ? 1 : 0, 1));
        }
    }
    return {r, checks};
}

json prime_table(const DxGModule &m, const DedekindRank &rank, std::vector<Check> *frattini) {
    json primes = io::to_json(rank).at("primes");
    for (std::size_t i = 0; i < rank.primes.size(); ++i) {
        const auto &pr = rank.primes[i];
        for (std::size_t j = 0; j < pr.pieces.size(); ++j) {
            auto f = frattini_layer_check(m, pr.prime, pr.pieces[j].space);
            primes[i]["pieces"][j]["top_dimension"] = f.top_dimension;
            if (frattini) {
                Check c = compare_eq("socle and top dimensions agree for piece " + std::to_string(j) + " at P = (" +
                                         pr.prime.str() + ")",
                                     "Lemma 8", static_cast<long long>(f.socle_dimension),
                                     static_cast<long long>(f.top_dimension));
                frattini->push_back(c);
            }
        }
    }
    return primes;
}

Outcome run_dedekind(const Job &job) {
    require_rationals(job);
    auto m = load_dx(job);
    auto rank = special_rank_dedekind(m, {true, job.seed});
    json r = {{"dimension", m.dimension()}};
    json polys = json::array();
    for (const auto &p : assassinator(m))
        polys.push_back(p.str());
    r["assassinator"] = polys;
    r["primes"] = prime_table(m, rank, nullptr);
    r["special_rank"] = rank.rank;
    r["generator_rank"] = rank.generator_rank;
    r["witness"] = io::to_json(rank).at("witness");
    return {r, {}};
}

Outcome run_verify3(const Job &job) {
    require_rationals(job);
    auto m = load_dx(job);
    auto rep3 = verify_theorem3(m, {true, job.seed});
    std::vector<Check> checks = rep3.checks;
    json r = {{"dimension", m.dimension()}, {"nns_bound", rep3.nns_bound}, {"nns_note", kNnsSubstitutionNote}};
    r["primes"] = prime_table(m, rep3.rank, &checks);
    r["special_rank"] = rep3.rank.rank;
    r["witness"] = io::to_json(rep3.rank).at("witness");
    return {r, checks};
}

Outcome run_oracle(const Job &job) {
    require_rationals(job);
    auto rep = load_module(job);
    auto dec = isotypic_decomposition(rep, {true, job.seed});
    auto search = min_generators_randomized(rep, job.trials, job.seed);
    json r = {{"dimension", rep.dimension()},
              {"special_rank", dec.special_rank},
              {"generator_rank", dec.generator_rank},
              {"oracle_generators", search.k},
              {"budget_exhausted", search.budget_exhausted}};
    std::vector<Check> checks;
    checks.push_back(compare_eq("randomized generator count equals max multiplicity r", "Corollary 2",
                                static_cast<long long>(search.k), static_cast<long long>(dec.special_rank)));
    checks.push_back(compare_eq("randomized generator count equals max ceil(t/k) over components",
                                "generator count", static_cast<long long>(search.k),
                                static_cast<long long>(dec.generator_rank)));
    return {r, checks};
}

Outcome dispatch(const Job &job) {
    if (job.command == "nns")
        return run_nns(job);
    if (job.command == "decompose")
        return run_decompose(job);
    if (job.command == "rank")
        return run_rank(job);
    if (job.command == "verify1")
        return run_verify1(job);
    if (job.command == "integral")
        return run_integral(job);
    if (job.command == "dedekind")
        return run_dedekind(job);
    if (job.command == "verify3")
        return run_verify3(job);
    if (job.command == "oracle")
        return run_oracle(job);
    throw ParseError("unknown command " + job.command);
}

void render_text(std::ostream &os, const json &j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    for (auto it = j.begin(); it != j.end(); ++it) {
        const json &v = it.value();
        if (v.is_object()) {
            os << pad << it.key() << ":\n";
            render_text(os, v, indent + 1);
        } else if (v.is_array() && !v.empty() && v[0].is_object()) {
            os << pad << it.key() << ":\n";
            for (std::size_t i = 0; i < v.size(); ++i) {
                os << pad << "  [" << i << "]\n";
                render_text(os, v[i], indent + 2);
            }
        } else {
            os << pad << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
    }
}

void render_checks(std::ostream &os, const std::vector<Check> &checks) {
    if (checks.empty())
        return;
    os << "checks:\n";
    for (const auto &c : checks) {
        os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.anchor << ": " << c.name << ": " << c.lhs << " "
           << c.relation << " " << c.rhs;
        if (!c.note.empty())
            os << "  (" << c.note << ")";
        os << "\n";
    }
}

int run(const Job &job) {
    auto start = std::chrono::steady_clock::now();
    Outcome out = dispatch(job);
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const bool pass = all_pass(out.checks);

    std::ostringstream text;
    if (job.json_out) {
        json report = {{"schema", 1}, {"job", job_echo(job)}, {"result", out.result}};
        report["checks"] = io::to_json(out.checks);
        report["passed"] = pass;
        if (job.timing)
            report["timing_ms"] = ms;
        text << report.dump(2) << "\n";
    } else {
        text << "srank " << job.command << "\n";
        render_text(text, job_echo(job), 1);
        text << "result:\n";
        render_text(text, out.result, 1);
        render_checks(text, out.checks);
        text << "passed: " << (pass ? "true" : "false") << "\n";
        text << "elapsed: " << static_cast<long long>(ms) << " ms\n";
    }
    if (job.out.empty()) {
        std::cout << text.str();
    } else {
        std::ofstream f(job.out);
        if (!f)
            throw ParseError("cannot write " + job.out);
        f << text.str();
    }
    return pass ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Special rank of modules over group rings"};
    app.require_subcommand(1);
    Job job;
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"nns", "count F-conjugacy classes (simple FG-module types)"},
        {"decompose", "rational isotypic decomposition"},
        {"rank", "special rank with witness component"},
        {"verify1", "check the structure theorem for rational modules"},
        {"integral", "integral lattice: rank transfer and generator experiment"},
        {"dedekind", "Q[x]G-module: primes, layers, homogeneous pieces, rank"},
        {"verify3", "check the structure theorem for Q[x]G-modules"},
        {"oracle", "randomized generator search against the computed ranks"},
    };
    for (const auto &[name, help] : commands) {
        auto *sub = app.add_subcommand(name, help);
        sub->add_option("--input,-i", job.input, "input JSON file");
        sub->add_option("--catalog,-c", job.catalog, "catalog entry NAME or NAME:rep");
        sub->add_option("--rep", job.rep, "catalog representation name")->capture_default_str();
        sub->add_option("--field", job.field, "rationals | splitting | fixed:n:e1,e2,...")->capture_default_str();
        sub->add_option("--seed", job.seed, "random seed")->capture_default_str();
        sub->add_option("--budget", job.budget, "attempts per k in generator experiments")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
        sub->add_option("--trials", job.trials, "trials per k for the randomized oracle")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
        sub->add_flag("--json", job.json_out, "emit a JSON report");
        sub->add_flag("--timing", job.timing, "include timing in the JSON report");
        sub->add_option("--out,-o", job.out, "write the report to a file");
        sub->callback([&job, name = name] { job.command = name; });
    }
    app.add_subcommand("catalog", "list shipped catalog entries")->callback([&job] { job.command = "catalog"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (job.command == "catalog") {
            for (const auto &n : catalog_names()) {
                auto e = load_catalog(n);
                std::cout << n << " (order " << e.group->order() << "):";
                for (const auto &[r, rep] : e.representations)
                    std::cout << " " << r;
                std::cout << "\n";
            }
            return 0;
        }
        return run(job);
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError &e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument &e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 3;
    } catch (const InternalError &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
