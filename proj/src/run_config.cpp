#include "lplab/run_config.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "lplab/io.hpp"
#include "lplab/presets.hpp"
#include "lplab/special.hpp"
#include "lplab/verifiers.hpp"

namespace lplab {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string cell;
    while (std::getline(in, cell, sep)) out.push_back(trim(cell));
    return out;
}

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw std::runtime_error("config: " + key + " is not a number: '" + v + "'");
    }
}

std::int64_t parse_int(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const long long x = std::stoll(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw std::runtime_error("config: " + key + " is not an integer: '" + v + "'");
    }
}

std::vector<double> parse_doubles(const std::string& key, const std::string& v) {
    std::vector<double> out;
    for (const auto& cell : split(v, ',')) out.push_back(parse_double(key, cell));
    return out;
}

std::vector<int> parse_ints(const std::string& key, const std::string& v) {
    std::vector<int> out;
    for (const auto& cell : split(v, ','))
        out.push_back(static_cast<int>(parse_int(key, cell)));
    return out;
}

MeanSpec parse_mean(const std::string& v) {
    if (v == "-inf") return MeanSpec::minus_inf();
    if (v == "inf" || v == "+inf") return MeanSpec::plus_inf();
    const double a = parse_double("alpha", v);
    return a == 0.0 ? MeanSpec::zero() : MeanSpec::finite(a);
}

/// "lp:<p>:<res>", "minkowski:<lambda>", "classical",
/// or "pairs:a1:b1:a2:b2:..."
CoefficientSet parse_coefficients(const std::string& v) {
    const auto parts = split(v, ':');
    if (parts.empty()) throw std::runtime_error("config: empty coefficient set");
    if (parts[0] == "classical") return CoefficientSet::classical();
    if (parts[0] == "minkowski" && parts.size() == 2)
        return CoefficientSet::minkowski(parse_double("m", parts[1]));
    if (parts[0] == "lp" && parts.size() == 3)
        return CoefficientSet::lp_curve(parse_double("m", parts[1]),
                                        static_cast<int>(parse_int("m", parts[2])));
    if (parts[0] == "pairs" && parts.size() >= 3 && parts.size() % 2 == 1) {
        std::vector<std::pair<double, double>> pairs;
        for (std::size_t i = 1; i + 1 < parts.size(); i += 2)
            pairs.emplace_back(parse_double("m", parts[i]), parse_double("m", parts[i + 1]));
        return CoefficientSet::explicit_pairs(std::move(pairs));
    }
    throw std::runtime_error("config: bad coefficient set '" + v + "'");
}

std::string strip_suffix(const std::string& path, const std::string& suffix) {
    if (path.size() > suffix.size() &&
        path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0)
        return path.substr(0, path.size() - suffix.size());
    return path;
}

GridFunction require_fn(const RunConfig& cfg, const std::string& key) {
    if (!cfg.has(key)) throw std::runtime_error("config: missing input file for '" + key + "'");
    return read_grid_function(strip_suffix(cfg.get(key), ".json")).fn;
}

DiscreteSet require_set(const RunConfig& cfg, const std::string& key) {
    if (!cfg.has(key)) throw std::runtime_error("config: missing input file for '" + key + "'");
    return read_set(cfg.get(key));
}

std::uint64_t resolve_seed(const RunConfig& cfg) {
    if (cfg.get("seed_source") == "flag" && cfg.has("seed"))
        return static_cast<std::uint64_t>(parse_int("seed", cfg.get("seed")));
    if (const char* env = std::getenv("LPLAB_SEED"))
        return static_cast<std::uint64_t>(parse_int("LPLAB_SEED", env));
    if (cfg.has("seed")) return static_cast<std::uint64_t>(parse_int("seed", cfg.get("seed")));
    return 1;
}

struct BuiltRun {
    std::vector<VerificationReport> reports;
    std::optional<GridFunction> profile;
};

BuiltRun build_verify(const RunConfig& cfg, std::uint64_t seed) {
    const std::string target = cfg.get("target");
    if (target.empty()) throw std::runtime_error("config: verify needs a target");

    if (cfg.has("preset")) {
        std::string name = cfg.get("preset");
        if (!is_preset(name) && is_preset(target + "-" + name)) name = target + "-" + name;
        if (!is_preset(name)) throw std::runtime_error("unknown preset: " + cfg.get("preset"));
        PresetRun pr = run_preset(name, seed);
        return {std::move(pr.reports), std::move(pr.profile)};
    }

    const auto p = [&](const std::string& key, double fallback) {
        return cfg.has(key) ? parse_double(key, cfg.get(key)) : fallback;
    };
    const auto i = [&](const std::string& key, std::int64_t fallback) {
        return cfg.has(key) ? parse_int(key, cfg.get(key)) : fallback;
    };

    if (target == "bm")
        return {{verify_bm(require_set(cfg, "K"), require_set(cfg, "L"), p("lambda", 0.5),
                           i("samples", 100000), RandomSource(seed))},
                std::nullopt};
    if (target == "lp_bm")
        return {{verify_lp_bm(require_set(cfg, "K"), require_set(cfg, "L"), p("p", 2.0),
                              static_cast<int>(i("lambda_resolution", 1001)),
                              i("samples", 100000), RandomSource(seed))},
                std::nullopt};
    if (target == "pl")
        return {{verify_pl(require_fn(cfg, "f"), require_fn(cfg, "g"), require_fn(cfg, "h"),
                           p("lambda", 0.5))},
                std::nullopt};
    if (target == "bbl")
        return {{verify_bbl(require_fn(cfg, "f"), require_fn(cfg, "g"), require_fn(cfg, "h"),
                            p("lambda", 0.5), parse_mean(cfg.get("alpha", "0")))},
                std::nullopt};
    if (target == "thm15") {
        Thm15Config t;
        t.p = p("p", 2.0);
        t.s = p("s", 1.0);
        t.mu = p("mu", 1.0);
        t.omega = p("omega", 1.0);
        t.f = require_fn(cfg, "f");
        t.g = require_fn(cfg, "g");
        if (cfg.has("resolutions")) t.resolutions = parse_ints("resolutions", cfg.get("resolutions"));
        if (cfg.has("lambda_resolutions"))
            t.lambda_resolutions = parse_ints("lambda_resolutions", cfg.get("lambda_resolutions"));
        BuiltRun run{{verify_thm15(t)}, std::nullopt};
        const int res = t.resolutions.back();
        const int lres = t.lambda_resolution_for(t.resolutions.size() - 1);
        run.profile = construct_h_thm15(t, thm15_out_grid(t, res, lres), lres);
        return run;
    }
    if (target == "lp_minkowski") {
        std::vector<double> eps = {0.1, 0.05, 0.025, 0.0125};
        if (cfg.has("epsilons")) eps = parse_doubles("epsilons", cfg.get("epsilons"));
        return {{verify_lp_minkowski(require_fn(cfg, "f"), require_fn(cfg, "g"), p("p", 2.0),
                                     SParam(p("s", 1.0)), eps,
                                     static_cast<int>(i("resolution", 257)),
                                     static_cast<int>(i("lambda_resolution", 513)))},
                std::nullopt};
    }
    if (target == "lemma31") {
        const std::string cond = cfg.get("condition", "convex");
        if (cond != "convex" && cond != "origin")
            throw std::runtime_error("config: condition must be convex or origin");
        return {{check_lemma31(require_fn(cfg, "f"), require_fn(cfg, "g"),
                               parse_coefficients(cfg.get("m", "classical")), SParam(p("s", 1.0)),
                               cond == "convex" ? Lemma31Condition::convex_M
                                                : Lemma31Condition::origin_supports)},
                std::nullopt};
    }
    if (target == "lemma32")
        return {{check_lemma32(require_fn(cfg, "f"), require_fn(cfg, "g"),
                               parse_coefficients(cfg.get("m", "classical")),
                               static_cast<int>(i("s", 1)), i("samples", 100000),
                               RandomSource(seed))},
                std::nullopt};
    if (target == "lift_volume") {
        const GridFunction f = cfg.has("f") ? require_fn(cfg, "f") : indicator_fn(0.0, 1.0, 129);
        const int s = static_cast<int>(i("s", 1));
        const LiftedBody body(f, s);
        const McEstimate est = lift_volume(body, i("samples", 1000000), RandomSource(seed));
        VerificationReport r;
        r.name = "lift_volume_identity";
        Digest d;
        d.add("s", static_cast<double>(s)).add("seed", std::to_string(seed));
        r.inputs_digest = d.hex();
        r.metadata["s"] = std::to_string(s);
        r.metadata["samples"] = std::to_string(est.samples);
        r.metadata["seed"] = std::to_string(seed);
        const double expected = kappa(static_cast<double>(s)) * f.integrate();
        r.set_outcome(est.estimate, expected,
                      3.0 * est.stderr_ + 1e-12 * std::max(1.0, expected));
        if (r.verdict == Verdict::holds && r.margin > r.tolerance) r.verdict = Verdict::violated;
        return {{r}, std::nullopt};
    }
    throw std::runtime_error("unknown verifier: " + target);
}

BuiltRun build_sweep(const RunConfig& cfg, std::uint64_t seed) {
    std::vector<std::pair<std::string, std::vector<std::string>>> ranges;
    for (const auto& [key, value] : cfg.kv) {
        if (key.rfind("range.", 0) != 0) continue;
        auto values = split(value, ',');
        if (values.empty() || (values.size() == 1 && values[0].empty()))
            throw std::runtime_error("config: empty range for " + key);
        ranges.emplace_back(key.substr(6), std::move(values));
    }
    if (ranges.empty()) throw std::runtime_error("config: sweep needs at least one range.<param>");

    BuiltRun out;
    std::vector<std::size_t> idx(ranges.size(), 0);
    for (;;) {
        RunConfig step = cfg;
        for (std::size_t k = 0; k < ranges.size(); ++k)
            step.set(ranges[k].first, ranges[k].second[idx[k]]);
        BuiltRun one = build_verify(step, seed);
        for (auto& r : one.reports) {
            for (std::size_t k = 0; k < ranges.size(); ++k)
                r.metadata["sweep_" + ranges[k].first] = ranges[k].second[idx[k]];
            out.reports.push_back(std::move(r));
        }
        std::size_t k = ranges.size();
        while (k > 0 && ++idx[k - 1] == ranges[k - 1].second.size()) idx[--k] = 0;
        if (k == 0) break;
    }
    return out;
}

void write_json_reports(const std::vector<VerificationReport>& rs, std::ostream& os) {
    if (rs.size() == 1) {
        os << rs.front().to_json() << "\n";
        return;
    }
    os << "[\n";
    for (std::size_t i = 0; i < rs.size(); ++i)
        os << rs[i].to_json() << (i + 1 < rs.size() ? ",\n" : "\n");
    os << "]\n";
}

void write_csv_reports(const std::vector<VerificationReport>& rs, std::ostream& os) {
    // union of metadata keys, so rows stay aligned across verifiers
    std::set<std::string> keys;
    for (const auto& r : rs)
        for (const auto& [k, v] : r.metadata) keys.insert(k);
    os << "name,lhs,rhs,margin,tolerance,verdict,inputs_digest";
    for (const auto& k : keys) os << "," << k;
    os << "\n";
    for (const auto& r : rs) {
        os << r.name << "," << format_double(r.lhs) << "," << format_double(r.rhs) << ","
           << format_double(r.margin) << "," << format_double(r.tolerance) << ","
           << verdict_name(r.verdict) << "," << r.inputs_digest;
        for (const auto& k : keys) {
            const auto it = r.metadata.find(k);
            os << "," << (it == r.metadata.end() ? "" : it->second);
        }
        os << "\n";
    }
}

void emit(const std::vector<VerificationReport>& rs, const RunConfig& cfg, std::ostream& out) {
    const std::string format = cfg.get("format", "json");
    if (format != "json" && format != "csv")
        throw std::runtime_error("config: format must be json or csv");
    std::ostringstream buffer;
    if (format == "json")
        write_json_reports(rs, buffer);
    else
        write_csv_reports(rs, buffer);
    if (cfg.has("output")) {
        std::ofstream file(cfg.get("output"));
        if (!file) throw std::runtime_error("cannot open for writing: " + cfg.get("output"));
        file << buffer.str();
        for (const auto& r : rs)
            out << r.name << ": " << verdict_name(r.verdict) << " (margin "
                << format_double(r.margin) << ")\n";
    } else {
        out << buffer.str();
    }
}

} // namespace

RunConfig RunConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config: " + path);
    RunConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected key = value");
        cfg.set(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
    return cfg;
}

std::string RunConfig::get(const std::string& key, const std::string& fallback) const {
    const auto it = kv.find(key);
    return it == kv.end() ? fallback : it->second;
}

int run_config(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        const std::string command = cfg.get("command", "verify");
        const std::uint64_t seed = resolve_seed(cfg);

        if (command == "demo" && (cfg.get("list") == "true" || !cfg.has("preset"))) {
            for (const auto& p : preset_catalog()) out << p.name << "  " << p.description << "\n";
            return 0;
        }

        BuiltRun run;
        if (command == "demo") {
            PresetRun pr = run_preset(cfg.get("preset"), seed);
            run = {std::move(pr.reports), std::move(pr.profile)};
        } else if (command == "verify") {
            run = build_verify(cfg, seed);
        } else if (command == "sweep") {
            run = build_sweep(cfg, seed);
        } else {
            throw std::runtime_error("unknown command: " + command);
        }

        emit(run.reports, cfg, out);
        if (cfg.has("emit_profile")) {
            if (!run.profile) throw std::runtime_error("no constructed profile for this run");
            write_profile_csv(*run.profile, cfg.get("emit_profile"));
        }
        for (const auto& r : run.reports)
            if (!r.passed()) return 2;
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace lplab
