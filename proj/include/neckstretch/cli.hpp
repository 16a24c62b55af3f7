#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "neckstretch/capacities.hpp"
#include "neckstretch/enumerator.hpp"
#include "neckstretch/json_io.hpp"
#include "neckstretch/spectrum.hpp"
#include "neckstretch/validate.hpp"

namespace neckstretch::cli {

// Exit statuses: 0 success, 1 domain errors, 2 parse errors. Output is
// deterministic byte-for-byte for fixed inputs: JSON uses insertion-ordered
// objects with a fixed 2-space indent, CSV uses fixed columns, and no
// environment state is consulted.

struct parse_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline Rational parse_rational(const std::string& text, const std::string& flag) {
    try {
        return Rational::parse(text);
    } catch (const std::exception& e) {
        throw parse_failure(flag + ": " + e.what());
    }
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline json class_to_json(const HomologyClass& c) {
    json j;
    j["k"] = c.k;
    j["l"] = c.l;
    return j;
}

inline DomainShape parse_domain(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw parse_failure("--domain: expected kind:params, got '" + text + "'");
    const std::string kind = text.substr(0, colon);
    const std::string params = text.substr(colon + 1);
    if (kind == "ball") return Ball(parse_rational(params, "--domain"));
    if (kind == "polydisk") {
        const auto comma = params.find(',');
        if (comma == std::string::npos) throw parse_failure("--domain: polydisk expects r,s");
        return Polydisk(parse_rational(params.substr(0, comma), "--domain"),
                        parse_rational(params.substr(comma + 1), "--domain"));
    }
    throw parse_failure("--domain: unknown shape '" + kind + "'");
}

inline json feasibility_to_json(const Rational& R, long long d, const FeasibilityResult& res) {
    json out;
    out["schema"] = schema_version;
    out["R"] = R.str();
    out["d"] = d;
    out["feasible"] = res.feasible;
    if (res.config) {
        json cfg;
        cfg["m"] = res.config->m;
        cfg["d_prime"] = res.config->d_prime;
        cfg["s"] = res.config->s;
        cfg["sign_mode"] = sign_consistency_name(res.config->sign_mode);
        cfg["area_bound"] = res.config->area_bound.str();
        out["config"] = std::move(cfg);
        if (res.config->sign_mode == SignConsistency::all_negative)
            out["building"] = building_to_json(assemble_witness_building(*res.config));
    }
    if (res.certificate) {
        json cert;
        cert["binding"] = {{"m", res.certificate->m},
                           {"d_prime", res.certificate->d_prime},
                           {"s", res.certificate->s}};
        cert["slack"] = res.certificate->slack.str();
        cert["inequality"] = res.certificate->inequality;
        cert["frontier"] = res.certificate->frontier;
        cert["all_positive"] = res.certificate->positive_case;
        out["certificate"] = std::move(cert);
    }
    return out;
}

inline json fiber_limits_to_json(const Rational& R, const std::vector<FiberLimitConfig>& configs) {
    json out;
    out["schema"] = schema_version;
    out["R"] = R.str();
    out["configs"] = json::array();
    for (const auto& cfg : configs) {
        json jc;
        if (cfg.kind == FiberLimitConfig::Kind::closed) {
            jc["kind"] = "closed";
        } else {
            jc["kind"] = "broken";
            jc["case"] = cfg.broken_case;
            jc["degree0_class"] = class_to_json(cfg.degree0_class);
            jc["degree1_class"] = class_to_json(cfg.degree1_class);
            jc["excluded"] = cfg.exclusion ? json(*cfg.exclusion) : json(nullptr);
        }
        jc["building"] = building_to_json(cfg.building);
        out["configs"].push_back(std::move(jc));
    }
    return out;
}

/// check-building accepts either a single building object or any object
/// with a "configs" array of entries carrying "building".
inline std::vector<BuildingSpec> buildings_in_file(const json& doc) {
    std::vector<BuildingSpec> out;
    if (doc.is_object() && doc.contains("components")) {
        out.push_back(building_from_json(doc));
        return out;
    }
    if (doc.is_object() && doc.contains("configs") && doc.at("configs").is_array()) {
        for (const auto& entry : doc.at("configs"))
            if (entry.is_object() && entry.contains("building"))
                out.push_back(building_from_json(entry.at("building")));
        if (!out.empty()) return out;
    }
    throw parse_failure("file contains no building objects");
}

} // namespace detail

/// Runs one CLI invocation against the given streams; returns the exit
/// status. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact bookkeeping for stretched-limit buildings of the polydisk P(1,2)"};
    app.require_subcommand(1);

    std::string r_text, domain_text = "polydisk:1,2", window_text = "-1.5,0.5", format = "json";
    std::string building_path;
    std::vector<std::string> disabled_rules;
    long long d_value = 1, k_max = 100, max_degree = 12;
    double period = 1.0;
    int grid = 256;

    auto* fiber = app.add_subcommand("fiber-limits", "limit configurations in the fiber class");
    fiber->add_option("--R", r_text, "line area R as p/q")->required();
    fiber->add_option("--format", format)->check(CLI::IsMember({"json"}));
    fiber->add_option("--disable-rule", disabled_rules, "toggle a geometric rule off");

    auto* feas = app.add_subcommand("feasible", "degree-d feasibility search");
    feas->add_option("--R", r_text, "line area R as p/q")->required();
    feas->add_option("--d", d_value, "degree")->required();
    feas->add_option("--format", format)->check(CLI::IsMember({"json"}));
    feas->add_option("--disable-rule", disabled_rules, "toggle a geometric rule off");

    auto* wit = app.add_subcommand("witness", "least degree excluding an embedding into B(R)");
    wit->add_option("--R", r_text, "line area R as p/q")->required();
    wit->add_option("--format", format)->check(CLI::IsMember({"json"}));

    auto* bnd = app.add_subcommand("bound", "sharp embedding bound for P(1,2)");
    bnd->add_option("--max-degree", max_degree, "schedule length");
    bnd->add_option("--format", format)->check(CLI::IsMember({"json"}));

    auto* cap = app.add_subcommand("capacities", "classical capacity table and bounds");
    cap->add_option("--domain", domain_text, "polydisk:r,s or ball:a");
    cap->add_option("--k-max", k_max, "largest capacity index");
    cap->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* spect = app.add_subcommand("spectrum", "asymptotic operator spectrum");
    spect->add_option("--T", period, "orbit period")->required();
    spect->add_option("--grid", grid, "node count (rounded up to odd)");
    spect->add_option("--window", window_text, "eigenvalue window a,b");
    spect->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* chk = app.add_subcommand("check-building", "validate a building file");
    chk->add_option("file", building_path, "building JSON path")->required();

    try {
        std::vector<const char*> argv;
        argv.push_back("neckstretch");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        RulesRegistry rules;
        for (const auto& id : disabled_rules) rules.set_enabled(id, false);

        if (fiber->parsed()) {
            const Rational R = detail::parse_rational(r_text, "--R");
            out << detail::dump(detail::fiber_limits_to_json(R, enumerate_fiber_limits(R, rules)));
        } else if (feas->parsed()) {
            const Rational R = detail::parse_rational(r_text, "--R");
            out << detail::dump(
                detail::feasibility_to_json(R, d_value, degree_d_feasibility(R, d_value, rules)));
        } else if (wit->parsed()) {
            const Rational R = detail::parse_rational(r_text, "--R");
            const WitnessResult res = witness_degree(R);
            json j;
            j["schema"] = schema_version;
            j["R"] = R.str();
            switch (res.status) {
                case WitnessResult::Status::found: j["witness_degree"] = res.degree; break;
                case WitnessResult::Status::none: j["witness_degree"] = nullptr; break;
                case WitnessResult::Status::not_needed: j["witness_degree"] = "not-needed"; break;
            }
            out << detail::dump(j);
        } else if (bnd->parsed()) {
            const EmbeddingBound res = embedding_bound_polydisk12(max_degree);
            json j;
            j["schema"] = schema_version;
            j["target"] = "polydisk:1,2";
            j["bound"] = res.bound.str();
            j["schedule"] = json::array();
            for (const auto& [deg, frontier] : res.schedule)
                j["schedule"].push_back({std::to_string(deg), frontier.str()});
            j["sharp"] = res.sharp;
            j["inclusion"] = res.inclusion.str();
            out << detail::dump(j);
        } else if (cap->parsed()) {
            const DomainShape shape = detail::parse_domain(domain_text);
            if (k_max < 1) throw std::invalid_argument("capacities: --k-max must be >= 1");
            if (format == "csv") {
                out << "k,c_k,d_k,ratio\n";
                for (long long k = 0; k <= k_max; ++k) {
                    const Rational ck = ech_capacity(shape, k);
                    const long long dk = ball_weight(k);
                    out << k << ',' << ck.str() << ',' << dk << ','
                        << (k == 0 ? std::string("-") : (ck / Rational(dk)).str()) << '\n';
                }
            } else {
                json j;
                j["schema"] = schema_version;
                j["domain"] = domain_text;
                j["k_max"] = k_max;
                j["rows"] = json::array();
                for (long long k = 0; k <= k_max; ++k) {
                    const Rational ck = ech_capacity(shape, k);
                    const long long dk = ball_weight(k);
                    json row;
                    row["k"] = k;
                    row["c"] = ck.str();
                    row["d"] = dk;
                    row["ratio"] = k == 0 ? json(nullptr) : json((ck / Rational(dk)).str());
                    j["rows"].push_back(std::move(row));
                }
                if (std::holds_alternative<Polydisk>(shape)) {
                    const auto& p = std::get<Polydisk>(shape);
                    const Radical vol = volume_bound(p);
                    json bounds;
                    bounds["volume"] = vol.str();
                    bounds["volume_decimal"] = vol.decimal();
                    bounds["inclusion"] = inclusion_bound(p).str();
                    const auto folding = folding_bound(p);
                    bounds["folding"] = folding ? json(folding->str()) : json(nullptr);
                    bounds["ech"] = ech_bound(p, k_max).str();
                    j["bounds"] = std::move(bounds);
                }
                out << detail::dump(j);
            }
        } else if (spect->parsed()) {
            const auto comma = window_text.find(',');
            if (comma == std::string::npos) throw parse_failure("--window: expected a,b");
            SpectrumWindow window;
            try {
                window.lo = std::stod(window_text.substr(0, comma));
                window.hi = std::stod(window_text.substr(comma + 1));
            } catch (const std::exception&) {
                throw parse_failure("--window: expected numbers a,b");
            }
            AsymptoticOperatorSpec op{period, grid};
            const auto points = asymptotic_operator_spectrum(op, window);
            if (format == "csv") {
                out << "eigenvalue,winding,multiplicity\n";
                for (const auto& p : points)
                    out << detail::format_double(p.eigenvalue) << ',' << p.winding << ','
                        << p.multiplicity << '\n';
            } else {
                json j;
                j["schema"] = schema_version;
                j["T"] = period;
                j["grid"] = grid;
                j["nodes"] = neckstretch::detail::odd_node_count(grid);
                j["window"] = {window.lo, window.hi};
                j["spectrum"] = json::array();
                for (const auto& p : points) {
                    json jp;
                    jp["eigenvalue"] = p.eigenvalue;
                    jp["winding"] = p.winding;
                    jp["multiplicity"] = p.multiplicity;
                    j["spectrum"].push_back(std::move(jp));
                }
                out << detail::dump(j);
            }
        } else if (chk->parsed()) {
            std::ifstream file(building_path);
            if (!file) throw domain_error("check-building: cannot open '" + building_path + "'");
            json doc;
            try {
                doc = json::parse(file);
            } catch (const nlohmann::json::parse_error& e) {
                throw parse_failure(std::string("check-building: ") + e.what());
            }
            const auto buildings = detail::buildings_in_file(doc);
            bool all_ok = true;
            for (std::size_t i = 0; i < buildings.size(); ++i) {
                const ValidationReport report = validate_building(buildings[i]);
                for (const auto& check : report.checks) {
                    if (!check.pass) {
                        all_ok = false;
                        err << "check-building: building " << i << ": " << check.rule
                            << " rule violated: " << check.detail << "\n";
                    }
                }
            }
            json j;
            j["schema"] = schema_version;
            j["file"] = building_path;
            j["buildings"] = buildings.size();
            j["valid"] = all_ok;
            out << detail::dump(j);
            if (!all_ok) return 1;
        }
        return 0;
    } catch (const parse_failure& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace neckstretch::cli
