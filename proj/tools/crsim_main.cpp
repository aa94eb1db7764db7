/*
 * Copyright (c) 2026 crsim authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "crsim/errors.hpp"
#include "crsim/harness.hpp"
#include "crsim/specfun.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

void write_table(const crsim::ResultTable& table, const std::string& path)
{
    if (path.empty()) {
        table.write_csv(std::cout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw crsim::ConfigError("cannot open output file '" + path + "'");
    table.write_csv(out);
}

int run_config(crsim::harness::ExperimentConfig cfg, const std::string& out_override)
{
    if (!out_override.empty())
        cfg.output_path = out_override;
    const auto table = crsim::harness::run_experiment(cfg);
    write_table(table, cfg.output_path);
    if (!cfg.output_path.empty())
        std::cerr << "wrote " << table.rows.size() << " rows to " << cfg.output_path << "\n";
    return kExitOk;
}

double eval_specfun(const std::string& name, const std::vector<double>& args)
{
    using namespace crsim::specfun;
    const auto need = [&](std::size_t n) {
        if (args.size() != n)
            throw crsim::ConfigError("specfun " + name + ": expected " + std::to_string(n) +
                                     " argument(s)");
    };
    if (name == "bessel_i0") {
        need(1);
        return bessel_i0(args[0]);
    }
    if (name == "bessel_i1") {
        need(1);
        return bessel_i1(args[0]);
    }
    if (name == "marcum_q1") {
        need(2);
        return marcum_q1(args[0], args[1]);
    }
    if (name == "exp_integral_e1" || name == "e1") {
        need(1);
        return exp_integral_e1(args[0]);
    }
    if (name == "laguerre_half") {
        need(1);
        return laguerre_half(args[0]);
    }
    if (name == "harmonic") {
        need(1);
        return harmonic(static_cast<std::int64_t>(args[0]));
    }
    throw crsim::ConfigError("unknown specfun '" + name + "'");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"crsim: underlay spectrum-sharing capacity simulator"};
    app.require_subcommand(1);

    std::string config_path;
    auto* run = app.add_subcommand("run", "run an experiment described by a config file");
    run->add_option("config", config_path, "key = value config file")->required();

    std::string figure_id;
    std::uint64_t seed_override = 0;
    std::uint64_t runs_override = 0;
    std::string out_override;
    auto* figure = app.add_subcommand("figure", "run a built-in figure preset");
    figure->add_option("id", figure_id, "figure id (see list-figures)")->required();
    figure->add_option("--seed", seed_override, "override the preset seed");
    figure->add_option("--runs", runs_override, "override the preset run count");
    figure->add_option("--out", out_override, "output CSV path (default: stdout)");

    auto* list = app.add_subcommand("list-figures", "list the available figure presets");

    std::string fn_name;
    std::vector<double> fn_args;
    auto* specfun = app.add_subcommand("specfun", "evaluate a special function (debug aid)");
    specfun->add_option("name", fn_name, "function name")->required();
    specfun->add_option("args", fn_args, "numeric arguments");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed())
            return run_config(crsim::harness::ExperimentConfig::from_file(config_path), "");
        if (figure->parsed()) {
            auto cfg = crsim::harness::ExperimentConfig::preset(figure_id);
            if (seed_override)
                cfg.seed = seed_override;
            if (runs_override)
                cfg.runs = runs_override;
            return run_config(cfg, out_override);
        }
        if (list->parsed()) {
            for (const auto& id : crsim::harness::figure_ids())
                std::cout << id << "\n";
            std::cout << "patterns\n";
            return kExitOk;
        }
        if (specfun->parsed()) {
            std::printf("%.17g\n", eval_specfun(fn_name, fn_args));
            return kExitOk;
        }
    } catch (const crsim::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const crsim::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitOk;
}
