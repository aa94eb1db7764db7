/*
 * Copyright (c) 2026 crsim authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "crsim/harness.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <tuple>

#include "crsim/errors.hpp"
#include "crsim/espar.hpp"
#include "crsim/multiuser.hpp"
#include "crsim/parallel.hpp"

namespace crsim::harness {

namespace {

// Stream layout: one purpose per pipeline stage, a sub-index per sweep
// point, and block indices below. Purposes are spaced far enough apart that
// no two stages can collide for any realistic run count.
enum StreamPurpose : std::uint64_t {
    kStreamLosPhases = 1,
    kStreamCalibration = 2,
    kStreamMeasurement = 3,
    kStreamDistribution = 4,
    kStreamHeldOut = 5,
    kStreamScaling = 6,
};

std::uint64_t make_stream(StreamPurpose purpose, std::uint64_t sub)
{
    return (static_cast<std::uint64_t>(purpose) << 44) + (sub << 32);
}

std::string trim(const std::string& s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

double parse_double(const std::string& key, const std::string& value)
{
    if (value == "inf")
        return std::numeric_limits<double>::infinity();
    if (value == "-inf")
        return -std::numeric_limits<double>::infinity();
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size())
            throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid numeric value for " + key + ": '" + value + "'");
    }
}

// K-factor given in dB; -inf denotes a pure Rayleigh link (K = 0).
double k_db_to_linear(double k_db)
{
    if (std::isinf(k_db) && k_db < 0.0)
        return 0.0;
    return db_to_linear(k_db);
}

struct ScenarioKFactors {
    double k_s, k_sp, k_ps;
};

ScenarioKFactors scenario_k_factors(const std::string& name, double k_linear)
{
    // An X-Y name means: interference links faded as X, secondary link as Y.
    if (name == "rician_rician")
        return {k_linear, k_linear, k_linear};
    if (name == "rician_rayleigh")
        return {0.0, k_linear, k_linear};
    if (name == "rayleigh_rayleigh")
        return {0.0, 0.0, 0.0};
    if (name == "rayleigh_rician")
        return {k_linear, 0.0, 0.0};
    if (name == "awgn")
        return {1e12, 1e12, 1e12};
    throw ConfigError("unknown scenario '" + name + "'");
}

const std::vector<std::string> kSweepScenarios = {
    "rayleigh_rician", "rayleigh_rayleigh", "rician_rician", "rician_rayleigh", "awgn"};

struct CommonChannelParams {
    double k_linear;
    double gbar_s, gbar_sp, gbar_ps, gbar_p;
};

CommonChannelParams channel_params(const ExperimentConfig& cfg)
{
    CommonChannelParams p;
    p.k_linear = k_db_to_linear(cfg.get_double("channel.k_db", 10.0));
    p.gbar_s = db_to_linear(cfg.get_double("channel.gbar_s_db", 0.0));
    p.gbar_sp = db_to_linear(cfg.get_double("channel.gbar_sp_db", 0.0));
    p.gbar_ps = db_to_linear(cfg.get_double("channel.gbar_ps_db", 0.0));
    p.gbar_p = db_to_linear(cfg.get_double("channel.gbar_p_db", 10.0));
    return p;
}

channels::SystemSpec make_system(const CommonChannelParams& p, const ScenarioKFactors& k)
{
    channels::SystemSpec sys;
    sys.su_su = {k.k_s, p.gbar_s, 0.0};
    sys.su_pu = {k.k_sp, p.gbar_sp, 0.0};
    sys.pu_su = {k.k_ps, p.gbar_ps, 0.0};
    sys.pu_tx_power = p.gbar_p;
    return sys;
}

std::vector<double> q_av_sweep_db(const ExperimentConfig& cfg)
{
    const double lo = cfg.get_double("constraints.q_av_db_min", -10.0);
    const double hi = cfg.get_double("constraints.q_av_db_max", 20.0);
    const double step = cfg.get_double("constraints.q_av_db_step", 2.0);
    if (!(step > 0.0) || hi < lo)
        throw ConfigError("invalid sweep bounds: constraints.q_av_db_min/max/step");
    std::vector<double> grid;
    for (double q = lo; q <= hi + 1e-9; q += step)
        grid.push_back(q);
    return grid;
}

std::vector<double> rho_list(const ExperimentConfig& cfg)
{
    const std::string text = cfg.get_string("constraints.rho", "inf,1.2");
    std::vector<double> rhos;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const double rho = parse_double("constraints.rho", trim(item));
        if (rho < 1.0)
            throw ConfigError("constraints.rho: peak cap below average cap (rho < 1)");
        rhos.push_back(rho);
    }
    if (rhos.empty())
        throw ConfigError("constraints.rho: empty list");
    return rhos;
}

capacity::McContext stage_context(const ExperimentConfig& cfg, StreamPurpose purpose,
                                  std::uint64_t sub)
{
    capacity::McContext ctx;
    ctx.seed = cfg.seed;
    ctx.stream_base = make_stream(purpose, sub);
    ctx.workers = cfg.workers;
    return ctx;
}

void echo_config(ResultTable& table, const ExperimentConfig& cfg)
{
    table.metadata.emplace_back("version", kVersion);
    table.metadata.emplace_back("experiment", cfg.id);
    table.metadata.emplace_back("seed", std::to_string(cfg.seed));
    table.metadata.emplace_back("runs", std::to_string(cfg.runs));
    for (const auto& [key, value] : cfg.params)
        table.metadata.emplace_back(key, value);
}

void check_known_keys(const ExperimentConfig& cfg, const std::set<std::string>& allowed)
{
    for (const auto& [key, value] : cfg.params)
        if (!allowed.count(key))
            throw ConfigError("unknown config key '" + key + "' for experiment " + cfg.id);
}

const std::set<std::string> kChannelKeys = {"channel.k_db", "channel.gbar_s_db",
                                            "channel.gbar_sp_db", "channel.gbar_ps_db",
                                            "channel.gbar_p_db"};

std::set<std::string> with_channel_keys(std::set<std::string> extra)
{
    extra.insert(kChannelKeys.begin(), kChannelKeys.end());
    return extra;
}

// ---------------------------------------------------------------------------
// Distribution exports (Figs. 7, 10, 12 and the gain trace of Fig. 11)

ResultTable run_fig7(const ExperimentConfig& cfg)
{
    check_known_keys(cfg, with_channel_keys({"rab.m_t"}));
    const auto p = channel_params(cfg);
    const int m_t = static_cast<int>(cfg.get_int("rab.m_t", 2));
    if (m_t < 1)
        throw ConfigError("rab.m_t must be >= 1");
    ResultTable table;
    table.schema = {"sample_index", "re", "im", "abs"};
    const double amp = std::sqrt(p.k_linear * p.gbar_sp / ((p.k_linear + 1.0) * m_t));
    Philox rng = substream(cfg.seed, make_stream(kStreamDistribution, 0));
    for (std::uint64_t i = 0; i < cfg.runs; ++i) {
        std::complex<double> sum = 0.0;
        for (int l = 0; l < m_t; ++l)
            sum += std::polar(1.0, rng.angle());
        const std::complex<double> u = amp * sum;
        table.add_row({static_cast<std::int64_t>(i), u.real(), u.imag(), std::abs(u)});
    }
    return table;
}

rab::LinkEnsemble make_ensemble(const ExperimentConfig& cfg, const channels::SystemSpec& sys,
                                int m_t, int m_r, rab::ReceiveMode mode)
{
    rab::RabConfig rc;
    rc.m_t = m_t;
    rc.m_r = m_r;
    rc.receive_mode = mode;
    Philox phase_rng = substream(cfg.seed, make_stream(kStreamLosPhases, 0));
    return {rc, sys, phase_rng};
}

ResultTable run_fig10(const ExperimentConfig& cfg)
{
    check_known_keys(cfg, with_channel_keys({"rab.m"}));
    const auto p = channel_params(cfg);
    const int m = static_cast<int>(cfg.get_int("rab.m", 5));
    const auto sys = make_system(p, scenario_k_factors("rician_rician", p.k_linear));
    const auto ens = make_ensemble(cfg, sys, m, m, rab::ReceiveMode::random);
    ResultTable table;
    table.schema = {"sample_index", "re", "im", "abs"};
    Philox rng = substream(cfg.seed, make_stream(kStreamDistribution, 1));
    for (std::uint64_t i = 0; i < cfg.runs; ++i) {
        const auto gains = ens.sample_links(rng);
        table.add_row({static_cast<std::int64_t>(i), gains.h_sp.real(), gains.h_sp.imag(),
                       std::abs(gains.h_sp)});
    }
    return table;
}

ResultTable run_fig11(const ExperimentConfig& cfg)
{
    check_known_keys(cfg, with_channel_keys({"rab.m"}));
    const auto p = channel_params(cfg);
    const int m = static_cast<int>(cfg.get_int("rab.m", 5));
    const auto sys = make_system(p, scenario_k_factors("rician_rician", p.k_linear));
    const auto ens = make_ensemble(cfg, sys, m, m, rab::ReceiveMode::random);
    ResultTable table;
    table.schema = {"slot", "abs_before", "abs_after"};
    Philox rng = substream(cfg.seed, make_stream(kStreamDistribution, 2));
    for (std::uint64_t i = 0; i < cfg.runs; ++i) {
        const double before = std::abs(channels::sample_rician(sys.su_pu, rng));
        const double after = std::abs(ens.sample_links(rng).h_sp);
        table.add_row({static_cast<std::int64_t>(i), before, after});
    }
    return table;
}

ResultTable run_fig12(const ExperimentConfig& cfg)
{
    check_known_keys(cfg, with_channel_keys({"rab.m"}));
    const auto p = channel_params(cfg);
    const int m = static_cast<int>(cfg.get_int("rab.m", 5));
    const auto sys = make_system(p, scenario_k_factors("rician_rician", p.k_linear));
    const auto ens = make_ensemble(cfg, sys, m, m, rab::ReceiveMode::smart);
    ResultTable table;
    table.schema = {"sample_index", "re", "im", "abs"};
    Philox rng = substream(cfg.seed, make_stream(kStreamDistribution, 3));
    for (std::uint64_t i = 0; i < cfg.runs; ++i) {
        const auto gains = ens.sample_links(rng);
        table.add_row({static_cast<std::int64_t>(i), gains.h_s.real(), gains.h_s.imag(),
                       std::abs(gains.h_s)});
    }
    return table;
}

// ---------------------------------------------------------------------------
// Capacity sweeps (Figs. 8, 9, 13)

ResultTable run_fig8(const ExperimentConfig& cfg)
{
    check_known_keys(cfg, with_channel_keys({"constraints.q_av_db_min", "constraints.q_av_db_max",
                                             "constraints.q_av_db_step", "constraints.rho"}));
    const auto p = channel_params(cfg);
    const auto grid = q_av_sweep_db(cfg);
    const auto rhos = rho_list(cfg);
    ResultTable table;
    table.schema = {"q_av_db", "scenario", "rho", "capacity_bps_hz", "std_err_bps_hz"};
    std::uint64_t sub = 0;
    for (const double rho : rhos) {
        for (const auto& scenario : kSweepScenarios) {
            const capacity::TripleSampler sampler{
                make_system(p, scenario_k_factors(scenario, p.k_linear)), std::nullopt};
            for (const double q_db : grid) {
                capacity::InterferenceConstraints c;
                c.q_av = db_to_linear(q_db);
                c.q_p = std::isinf(rho) ? std::numeric_limits<double>::infinity() : rho * c.q_av;
                const auto policy = capacity::solve_lambda(
                    sampler, c, std::max<std::uint64_t>(cfg.runs, 10000),
                    stage_context(cfg, kStreamCalibration, sub));
                const auto est = capacity::ergodic_capacity_mc(
                    sampler, policy, cfg.runs, stage_context(cfg, kStreamMeasurement, sub));
                table.add_row({q_db, scenario, rho, est.capacity, est.std_err});
                ++sub;
            }
        }
    }
    return table;
}

ResultTable run_fig9(const ExperimentConfig& cfg)
{
    check_known_keys(cfg, with_channel_keys({"constraints.q_av_db_min", "constraints.q_av_db_max",
                                             "constraints.q_av_db_step",
                                             "sweep.gbar_s_db_list"}));
    auto p = channel_params(cfg);
    const auto grid = q_av_sweep_db(cfg);
    const auto gbar_s_list = cfg.get_int_list("sweep.gbar_s_db_list", {0, 10, 20});
    ResultTable table;
    table.schema = {"q_av_db", "gbar_s_db", "capacity_bps_hz", "awgn_bps_hz", "ratio",
                    "std_err_bps_hz"};
    std::uint64_t sub = 0;
    for (const int gbar_s_db : gbar_s_list) {
        p.gbar_s = db_to_linear(gbar_s_db);
        const capacity::TripleSampler sampler{
            make_system(p, scenario_k_factors("rayleigh_rician", p.k_linear)), std::nullopt};
        for (const double q_db : grid) {
            capacity::InterferenceConstraints c;
            c.q_av = db_to_linear(q_db);
            const auto policy = capacity::solve_lambda(
                sampler, c, std::max<std::uint64_t>(cfg.runs, 10000),
                stage_context(cfg, kStreamCalibration, sub));
            const auto est = capacity::ergodic_capacity_mc(
                sampler, policy, cfg.runs, stage_context(cfg, kStreamMeasurement, sub));
            const double awgn =
                capacity::awgn_capacity(c.q_av, p.gbar_s, p.gbar_sp, p.gbar_ps, p.gbar_p);
            table.add_row({q_db, static_cast<std::int64_t>(gbar_s_db), est.capacity, awgn,
                           est.capacity / awgn, est.std_err});
            ++sub;
        }
    }
    return table;
}

ResultTable run_fig13(const ExperimentConfig& cfg)
{
    check_known_keys(cfg, with_channel_keys({"constraints.q_av_db", "rab.m_list"}));
    const auto p = channel_params(cfg);
    const auto m_list = cfg.get_int_list("rab.m_list", {1, 2, 3, 5, 8});
    capacity::InterferenceConstraints c;
    c.q_av = db_to_linear(cfg.get_double("constraints.q_av_db", 0.0));
    ResultTable table;
    table.schema = {"m", "scenario", "mode", "capacity_bps_hz", "std_err_bps_hz"};
    struct Case {
        const char* scenario;
        const char* mode;
        rab::ReceiveMode receive;
    };
    const Case cases[] = {{"rician_rayleigh", "random", rab::ReceiveMode::random},
                          {"rician_rician", "smart", rab::ReceiveMode::smart}};
    std::uint64_t sub = 0;
    for (const auto& cs : cases) {
        const auto sys = make_system(p, scenario_k_factors(cs.scenario, p.k_linear));
        for (const int m : m_list) {
            rab::RabConfig rc;
            rc.m_t = m;
            rc.m_r = m;
            rc.receive_mode = cs.receive;
            Philox phase_rng = substream(cfg.seed, make_stream(kStreamLosPhases, sub));
            const capacity::TripleSampler sampler{sys,
                                                  rab::LinkEnsemble(rc, sys, phase_rng)};
            const auto policy = capacity::solve_lambda(
                sampler, c, std::max<std::uint64_t>(cfg.runs, 10000),
                stage_context(cfg, kStreamCalibration, sub));
            const auto est = capacity::ergodic_capacity_mc(
                sampler, policy, cfg.runs, stage_context(cfg, kStreamMeasurement, sub));
            table.add_row({static_cast<std::int64_t>(m), cs.scenario, cs.mode, est.capacity,
                           est.std_err});
            ++sub;
        }
    }
    return table;
}

// ---------------------------------------------------------------------------
// Multiuser scaling (Figs. 14-16)

ResultTable run_scaling(const ExperimentConfig& cfg,
                        const std::vector<std::tuple<std::string, int, rab::ReceiveMode>>& curves)
{
    const auto p = channel_params(cfg);
    const auto n_list = cfg.get_int_list("multiuser.n_list", {2, 4, 8, 16, 32, 64, 128, 256, 512});
    const double q_p = db_to_linear(cfg.get_double("multiuser.q_p_db", 10.0));
    ResultTable table;
    std::uint64_t sub = 0;
    for (const auto& [scenario, m, mode] : curves) {
        multiuser::PacNetwork net;
        net.pair_spec = make_system(p, scenario_k_factors(scenario, p.k_linear));
        net.q_p = q_p;
        if (m > 1) {
            rab::RabConfig rc;
            rc.m_t = m;
            rc.m_r = m;
            rc.receive_mode = mode;
            net.rab_config = rc;
        }
        auto part = multiuser::capacity_scaling_experiment(
            scenario, net, n_list, cfg.runs, stage_context(cfg, kStreamScaling, sub));
        if (table.schema.empty())
            table.schema = part.schema;
        for (auto& row : part.rows)
            table.rows.push_back(std::move(row));
        sub += 64;
    }
    return table;
}

const std::set<std::string> kScalingKeys = {"multiuser.n_list", "multiuser.q_p_db"};

ResultTable run_fig14(const ExperimentConfig& cfg)
{
    check_known_keys(cfg, with_channel_keys(kScalingKeys));
    return run_scaling(cfg, {{"rayleigh_rayleigh", 1, rab::ReceiveMode::random},
                             {"rician_rayleigh", 1, rab::ReceiveMode::random},
                             {"rayleigh_rician", 1, rab::ReceiveMode::random},
                             {"rician_rician", 1, rab::ReceiveMode::random}});
}

ResultTable run_fig15(const ExperimentConfig& cfg)
{
    check_known_keys(cfg, with_channel_keys(kScalingKeys));
    return run_scaling(cfg, {{"rayleigh_rayleigh", 1, rab::ReceiveMode::random},
                             {"rician_rayleigh", 2, rab::ReceiveMode::random},
                             {"rayleigh_rician", 2, rab::ReceiveMode::random}});
}

ResultTable run_fig16(const ExperimentConfig& cfg)
{
    check_known_keys(cfg, with_channel_keys(kScalingKeys));
    return run_scaling(cfg, {{"rayleigh_rayleigh", 1, rab::ReceiveMode::random},
                             {"rician_rayleigh", 1, rab::ReceiveMode::random},
                             {"rician_rayleigh", 2, rab::ReceiveMode::random}});
}

// ---------------------------------------------------------------------------
// Basis-pattern export

ResultTable run_patterns(const ExperimentConfig& cfg)
{
    check_known_keys(cfg, {"espar.elements", "espar.radius_wavelengths", "espar.grid_size"});
    espar::EsparGeometry geom;
    geom.num_elements = static_cast<int>(cfg.get_int("espar.elements", 5));
    geom.radius_wavelengths = cfg.get_double("espar.radius_wavelengths", 0.25);
    const int grid = static_cast<int>(cfg.get_int("espar.grid_size", 256));
    const auto basis = espar::orthonormal_basis(geom, grid);
    ResultTable table;
    table.schema = {"theta_rad", "pattern_index", "re", "im"};
    for (Eigen::Index n = 0; n < basis.patterns.rows(); ++n)
        for (Eigen::Index i = 0; i < basis.grid.size(); ++i)
            table.add_row({basis.grid(i), static_cast<std::int64_t>(n),
                           basis.patterns(n, i).real(), basis.patterns(n, i).imag()});
    return table;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value)
{
    try {
        std::size_t pos = 0;
        const auto v = std::stoull(value, &pos);
        if (pos != value.size())
            throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid integer value for " + key + ": '" + value + "'");
    }
}

void parse_config_line(ExperimentConfig& cfg, std::string& section, const std::string& raw,
                       int line_no)
{
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#' || line[0] == ';')
        return;
    if (line.front() == '[' && line.back() == ']') {
        section = trim(line.substr(1, line.size() - 2));
        if (section.empty())
            throw ConfigError("empty section name at line " + std::to_string(line_no));
        return;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
        throw ConfigError("expected 'key = value' at line " + std::to_string(line_no));
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty())
        throw ConfigError("empty key at line " + std::to_string(line_no));
    if (section.empty())
        throw ConfigError("key '" + key + "' outside any section at line " +
                          std::to_string(line_no));
    const std::string full = section + "." + key;
    if (full == "experiment.id")
        cfg.id = value;
    else if (full == "experiment.seed")
        cfg.seed = parse_u64(full, value);
    else if (full == "experiment.runs")
        cfg.runs = parse_u64(full, value);
    else if (full == "experiment.out")
        cfg.output_path = value;
    else if (full == "experiment.workers")
        cfg.workers = static_cast<int>(parse_u64(full, value));
    else
        cfg.params[full] = value;
}

} // namespace

ExperimentConfig ExperimentConfig::from_text(const std::string& text)
{
    ExperimentConfig cfg;
    std::string section;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line))
        parse_config_line(cfg, section, line, ++line_no);
    if (cfg.id.empty())
        throw ConfigError("config is missing experiment.id");
    if (cfg.runs < 1000)
        throw ConfigError("experiment.runs must be >= 1000");
    return cfg;
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_text(ss.str());
}

ExperimentConfig ExperimentConfig::preset(const std::string& id)
{
    const auto ids = figure_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end() && id != "patterns")
        throw ConfigError("unknown experiment id '" + id + "'");
    ExperimentConfig cfg;
    cfg.id = id;
    if (id == "fig11")
        cfg.runs = 1000; // gain-versus-time trace
    return cfg;
}

double ExperimentConfig::get_double(const std::string& key, double fallback) const
{
    const auto it = params.find(key);
    return it == params.end() ? fallback : parse_double(key, it->second);
}

std::int64_t ExperimentConfig::get_int(const std::string& key, std::int64_t fallback) const
{
    const auto it = params.find(key);
    if (it == params.end())
        return fallback;
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(it->second, &pos);
        if (pos != it->second.size())
            throw std::invalid_argument(it->second);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid integer value for " + key + ": '" + it->second + "'");
    }
}

std::string ExperimentConfig::get_string(const std::string& key, const std::string& fallback) const
{
    const auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

std::vector<int> ExperimentConfig::get_int_list(const std::string& key,
                                                const std::vector<int>& fallback) const
{
    const auto it = params.find(key);
    if (it == params.end())
        return fallback;
    std::vector<int> out;
    std::stringstream ss(it->second);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(trim(item)));
        } catch (const std::exception&) {
            throw ConfigError("invalid integer list for " + key + ": '" + it->second + "'");
        }
    }
    if (out.empty())
        throw ConfigError("empty list for " + key);
    return out;
}

std::vector<std::string> figure_ids()
{
    return {"fig7", "fig8", "fig9", "fig10", "fig11", "fig12", "fig13", "fig14", "fig15", "fig16"};
}

ResultTable run_experiment(const ExperimentConfig& cfg)
{
    using Runner = std::function<ResultTable(const ExperimentConfig&)>;
    static const std::map<std::string, Runner> runners = {
        {"fig7", run_fig7},   {"fig8", run_fig8},   {"fig9", run_fig9},
        {"fig10", run_fig10}, {"fig11", run_fig11}, {"fig12", run_fig12},
        {"fig13", run_fig13}, {"fig14", run_fig14}, {"fig15", run_fig15},
        {"fig16", run_fig16}, {"patterns", run_patterns}};
    const auto it = runners.find(cfg.id);
    if (it == runners.end())
        throw ConfigError("unknown experiment id '" + cfg.id + "'");
    ResultTable table = it->second(cfg);
    ResultTable with_meta;
    with_meta.schema = std::move(table.schema);
    with_meta.rows = std::move(table.rows);
    echo_config(with_meta, cfg);
    return with_meta;
}

} // namespace crsim::harness
