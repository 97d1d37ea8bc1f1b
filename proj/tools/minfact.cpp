#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "minfact/constellation.hpp"
#include "minfact/enumerate.hpp"
#include "minfact/errors.hpp"
#include "minfact/formula.hpp"
#include "minfact/identities.hpp"
#include "minfact/rtype.hpp"

namespace {

using minfact::RamificationType;

enum class Format { json, csv, text };

struct RunConfig {
    std::string subcommand;
    std::string type_literal;
    bool brute = false;
    bool orbits = false;
    int n_max = 5;
    std::uint64_t bound = 10'000'000;
    int threads = 1;
    Format format = Format::json;
    std::uint64_t seed = 0;  // reserved for sampling features
};

std::string count_text(minfact::u128 v) { return minfact::to_string(v); }

RamificationType parse_and_validate(const std::string& literal) {
    RamificationType t = minfact::parse_type(literal);
    const auto rep = minfact::validate(t);
    if (!rep.ok) {
        std::string msg = "invalid ramification type " + minfact::describe(t) + ":";
        for (const auto& v : rep.violations) msg += "\n  " + v;
        throw std::invalid_argument(msg);
    }
    return t;
}

int run_count(const RunConfig& cfg) {
    const RamificationType t = parse_and_validate(cfg.type_literal);
    minfact::ReportOptions opts{cfg.brute, cfg.orbits, cfg.threads};
    const auto rep = minfact::make_count_report(t, opts);
    if (cfg.format == Format::text) {
        std::cout << "type                  " << minfact::describe(t) << "\n"
                  << "closed factorizations " << count_text(rep.closed_factorizations) << "\n"
                  << "closed constellations " << count_text(rep.closed_constellations) << "\n";
        if (rep.brute_factorizations)
            std::cout << "brute factorizations  " << count_text(*rep.brute_factorizations)
                      << "\n";
        if (rep.orbit_constellations)
            std::cout << "orbit constellations  " << count_text(*rep.orbit_constellations)
                      << "\n";
        std::cout << "agree                 " << (rep.agree ? "yes" : "no") << "\n";
    } else {
        std::cout << minfact::to_json(rep).dump() << "\n";
    }
    return rep.agree ? 0 : 1;
}

int run_enumerate(const RunConfig& cfg) {
    const RamificationType t = parse_and_validate(cfg.type_literal);
    minfact::enumerate_minimal_factorizations(t, [](const minfact::Factorization& f) {
        std::cout << minfact::to_json(f).dump() << "\n";
    });
    return 0;
}

int run_verify(const RunConfig& cfg) {
    const auto sweep = minfact::admissible_types(cfg.n_max, cfg.bound);
    std::uint64_t disagreements = 0;

    if (cfg.format == Format::csv)
        std::cout << "n,a,p,closed_factorizations,closed_constellations,"
                     "brute_factorizations,orbit_constellations,agree\n";

    for (const auto& t : sweep.types) {
        minfact::ReportOptions opts{true, cfg.orbits, cfg.threads};
        const auto rep = minfact::make_count_report(t, opts);
        if (!rep.agree) ++disagreements;
        switch (cfg.format) {
            case Format::json:
                std::cout << minfact::to_json(rep).dump() << "\n";
                break;
            case Format::csv: {
                auto join = [](const std::vector<int>& v) {
                    std::string s;
                    for (size_t i = 0; i < v.size(); ++i)
                        s += (i ? " " : "") + std::to_string(v[i]);
                    return s;
                };
                std::cout << t.n << ",\"" << join(t.a) << "\",\"" << join(t.p) << "\","
                          << count_text(rep.closed_factorizations) << ","
                          << count_text(rep.closed_constellations) << ","
                          << (rep.brute_factorizations ? count_text(*rep.brute_factorizations)
                                                       : "")
                          << ","
                          << (rep.orbit_constellations ? count_text(*rep.orbit_constellations)
                                                       : "")
                          << "," << (rep.agree ? "true" : "false") << "\n";
                break;
            }
            case Format::text:
                std::cout << minfact::describe(t) << ": closed "
                          << count_text(rep.closed_factorizations) << ", brute "
                          << (rep.brute_factorizations ? count_text(*rep.brute_factorizations)
                                                       : "-")
                          << (cfg.orbits
                                  ? ", orbits " + (rep.orbit_constellations
                                                       ? count_text(*rep.orbit_constellations)
                                                       : "-")
                                  : "")
                          << (rep.agree ? "" : "  MISMATCH") << "\n";
                break;
        }
    }

    nlohmann::ordered_json summary;
    summary["checked"] = sweep.types.size();
    summary["skipped"] = sweep.skipped.size();
    summary["disagreements"] = disagreements;
    for (const auto& s : sweep.skipped)
        std::cerr << "skipped " << minfact::describe(s.type) << " (estimated "
                  << minfact::to_string(s.estimate) << " candidate tuples)\n";
    if (cfg.format == Format::json)
        std::cout << summary.dump() << "\n";
    else if (cfg.format == Format::csv)
        std::cerr << summary.dump() << "\n";
    else
        std::cout << "checked " << sweep.types.size() << " types, skipped "
                  << sweep.skipped.size() << ", disagreements " << disagreements << "\n";
    return disagreements == 0 ? 0 : 1;
}

int run_identities(const RunConfig& cfg) {
    const auto results = minfact::identities::run_all_grids();
    std::uint64_t failures = 0;
    for (const auto& r : results) failures += r.failures;
    if (cfg.format == Format::text) {
        for (const auto& r : results) {
            std::cout << r.name << ": checked " << r.checked << ", failures " << r.failures;
            if (r.failures) std::cout << " (first at " << r.first_failure << ")";
            std::cout << "  [" << r.grid << "]\n";
        }
        std::cout << (failures == 0 ? "all identities hold exactly\n"
                                    : "identity failures detected\n");
    } else {
        for (const auto& r : results) {
            nlohmann::ordered_json j;
            j["identity"] = r.name;
            j["grid"] = r.grid;
            j["checked"] = r.checked;
            j["failures"] = r.failures;
            if (r.failures) j["first_failure"] = r.first_failure;
            std::cout << j.dump() << "\n";
        }
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"exact counts of minimal transitive cycle factorizations and their "
                 "polygon gluings"};
    app.require_subcommand(1);

    std::string format_name = "json";
    auto add_format = [&](CLI::App* cmd, const std::string& choices) {
        cmd->add_option("--format", format_name, "output format: " + choices)
            ->check(CLI::IsMember(std::vector<std::string>{"json", "csv", "text"}));
    };

    auto* count = app.add_subcommand("count", "closed-form counts for one type, with "
                                              "optional brute-force and orbit recounts");
    count->add_option("--type", cfg.type_literal,
                      "type literal, e.g. {\"n\":5,\"a\":[4,4],\"p\":[1,1]}")
        ->required();
    count->add_flag("--brute", cfg.brute, "re-count factorizations by exhaustive search");
    count->add_flag("--orbits", cfg.orbits,
                    "re-count constellations by conjugation orbits");
    count->add_option("--threads", cfg.threads, "worker threads for counting")
        ->envname("HURWITZ_THREADS");
    add_format(count, "json|text");

    auto* enumerate = app.add_subcommand(
        "enumerate", "stream every minimal factorization of one type as JSON lines");
    enumerate->add_option("--type", cfg.type_literal, "type literal")->required();

    auto* verify = app.add_subcommand(
        "verify", "sweep all admissible types up to --n-max and compare closed counts "
                  "against brute force");
    verify->add_option("--n-max", cfg.n_max, "largest degree n to sweep")->required();
    verify->add_option("--bound", cfg.bound,
                       "skip types whose candidate-tuple estimate exceeds this");
    verify->add_flag("--orbits", cfg.orbits, "also recount constellations by orbits");
    verify->add_option("--threads", cfg.threads, "worker threads for counting")
        ->envname("HURWITZ_THREADS");
    add_format(verify, "json|csv|text");

    auto* identities = app.add_subcommand(
        "identities", "check the exact summation identities on their full grids");
    add_format(identities, "json|text");

    app.add_option("--seed", cfg.seed, "reserved for sampling features")
        ->group("");  // hidden until something consumes it

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // bad usage is always exit 2; --help is 0
    }

    cfg.format = format_name == "csv" ? Format::csv
                : format_name == "text" ? Format::text
                                        : Format::json;
    try {
        if (count->parsed()) return run_count(cfg);
        if (enumerate->parsed()) return run_enumerate(cfg);
        if (verify->parsed()) return run_verify(cfg);
        if (identities->parsed()) return run_identities(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
