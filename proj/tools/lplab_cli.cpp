#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "lplab/run_config.hpp"

int main(int argc, char** argv) {
    CLI::App app{"numerical verification of Brunn-Minkowski type inequalities"};
    app.set_help_flag("--help", "print help");  // keeps --h free for the h input
    app.require_subcommand(1);

    std::string config_path;
    std::map<std::string, std::string> flags;
    bool list = false;

    auto add_common = [&](CLI::App* sub) {
        sub->set_help_flag("--help", "print help");
        sub->add_option("--config", config_path, "flat key = value config file; flags win");
        for (const char* key :
             {"target", "preset", "f", "g", "h", "K", "L", "p", "s", "lambda", "mu", "omega",
              "alpha", "samples", "resolutions", "lambda_resolution", "lambda_resolutions",
              "epsilons", "resolution", "m", "condition", "output", "format"})
            sub->add_option_function<std::string>(
                std::string("--") + key,
                [&flags, key](const std::string& v) { flags[key] = v; });
        sub->add_option_function<std::string>("--seed", [&flags](const std::string& v) {
            flags["seed"] = v;
            flags["seed_source"] = "flag";
        });
        sub->add_option_function<std::string>(
            "--emit-profile", [&flags](const std::string& v) { flags["emit_profile"] = v; },
            "write the constructed function as a per-node CSV");
    };

    CLI::App* verify = app.add_subcommand("verify", "run one verifier");
    CLI::App* sweep = app.add_subcommand("sweep", "cross-product of range.<param> values");
    CLI::App* demo = app.add_subcommand("demo", "run or list the preset catalog");
    add_common(verify);
    add_common(sweep);
    add_common(demo);
    demo->add_flag("--list", list, "print the preset catalog");
    for (CLI::App* sub : {verify, sweep, demo})
        sub->add_option_function<std::string>(
            "--range", [&flags](const std::string& v) {
                const auto eq = v.find('=');
                if (eq == std::string::npos) throw CLI::ValidationError("--range wants key=v1,v2,...");
                flags["range." + v.substr(0, eq)] = v.substr(eq + 1);
            },
            "sweep range, key=v1,v2,... (repeatable)");

    CLI11_PARSE(app, argc, argv);

    lplab::RunConfig cfg;
    if (!config_path.empty()) {
        try {
            cfg = lplab::RunConfig::from_file(config_path);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 1;
        }
    }
    for (const auto& [k, v] : flags) cfg.set(k, v);
    cfg.set("command", app.get_subcommands().front()->get_name());
    if (list) cfg.set("list", "true");

    return lplab::run_config(cfg, std::cout, std::cerr);
}
