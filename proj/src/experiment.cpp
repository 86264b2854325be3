// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The onebit-mimo authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "onebit/experiment.hpp"
#include "onebit/analysis.hpp"
#include "onebit/analytic.hpp"
#include "onebit/estimation.hpp"
#include "onebit/mc_engine.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace onebit
{

using nlohmann::json;

std::string to_string(Command c)
{
    switch (c)
    {
    case Command::Validate:
        return "validate";
    case Command::SweepPt:
        return "sweep-pt";
    case Command::SweepM:
        return "sweep-m";
    case Command::Nmse:
        return "nmse";
    case Command::PowerScaling:
        return "power-scaling";
    case Command::AntennaRatio:
        return "antenna-ratio";
    case Command::EnergyEfficiency:
        return "energy-efficiency";
    case Command::RatioBounds:
        return "ratio-bounds";
    }
    return "?";
}

Command parse_command(std::string_view s)
{
    for (auto c : {Command::Validate, Command::SweepPt, Command::SweepM, Command::Nmse, Command::PowerScaling,
                   Command::AntennaRatio, Command::EnergyEfficiency, Command::RatioBounds})
        if (to_string(c) == s)
            return c;
    throw ConfigError("unknown command '" + std::string(s) + "'");
}

std::vector<double> default_pt_grid()
{
    std::vector<double> g;
    for (int p = -30; p <= 20; p += 2)
        g.push_back(p);
    return g;
}

namespace
{

std::vector<double> default_rho_grid()
{
    std::vector<double> g;
    for (int db = 60; db <= 120; db += 5)
        g.push_back(std::pow(10.0, db / 10.0));
    return g;
}

std::vector<double> default_fs_grid()
{
    std::vector<double> g;
    for (int mhz = 10; mhz <= 400; mhz += 5)
        g.push_back(mhz * 1e6);
    return g;
}

// Grids and lists with command-specific defaults filled in.
struct Resolved
{
    std::vector<double> pt;
    std::vector<double> m;
    std::vector<double> fs;
    std::vector<double> rho;
    std::vector<PilotScheme> pilots;
    int trials;
};

Resolved resolve(const ExperimentSpec &s)
{
    Resolved r;
    const double pt0 = s.scenario.transmit_power_dbm;
    const double m0 = s.scenario.M;
    switch (s.command)
    {
    case Command::Validate:
        r.pt = s.pt_dbm_grid.empty() ? std::vector<double>{-10, 0, 10} : s.pt_dbm_grid;
        r.m = s.m_grid.empty() ? std::vector<double>{m0} : s.m_grid;
        break;
    case Command::SweepPt:
    case Command::AntennaRatio:
    case Command::RatioBounds:
        r.pt = s.pt_dbm_grid.empty() ? default_pt_grid() : s.pt_dbm_grid;
        r.m = s.m_grid.empty() ? std::vector<double>{m0} : s.m_grid;
        break;
    case Command::SweepM:
        r.pt = s.pt_dbm_grid.empty() ? std::vector<double>{pt0} : s.pt_dbm_grid;
        r.m = s.m_grid.empty() ? std::vector<double>{16, 32, 64, 96, 128, 160, 192, 224, 256} : s.m_grid;
        break;
    case Command::PowerScaling:
        r.m = s.m_grid.empty() ? std::vector<double>{16, 32, 64, 128, 256, 512, 1024, 2048, 4096} : s.m_grid;
        break;
    case Command::Nmse:
        r.m = s.m_grid.empty() ? std::vector<double>{m0} : s.m_grid;
        break;
    case Command::EnergyEfficiency:
        r.pt = s.pt_dbm_grid.empty() ? std::vector<double>{pt0} : s.pt_dbm_grid;
        break;
    }
    r.fs = s.fs_grid_hz.empty() ? default_fs_grid() : s.fs_grid_hz;
    r.rho = s.rho_p_grid.empty() ? default_rho_grid() : s.rho_p_grid;
    const bool both = s.command == Command::Validate || s.command == Command::Nmse;
    r.pilots = !s.pilots.empty() ? s.pilots
               : both            ? std::vector<PilotScheme>{PilotScheme::Reuse, PilotScheme::Orthogonal}
                                 : std::vector<PilotScheme>{PilotScheme::Reuse};
    if (s.trials)
        r.trials = *s.trials;
    else
        r.trials = (s.command == Command::Validate || s.command == Command::Nmse) ? 1000 : 0;
    return r;
}

template <class T> void require_nonempty(const std::vector<T> &v, const char *name)
{
    if (v.empty())
        throw ConfigError(std::string(name) + " must not be empty");
}

// Shortest round-trippable formatting is overkill for CSV; 12 significant
// digits are stable across runs and keep files readable.
std::string num(double v)
{
    if (!std::isfinite(v))
        return std::isnan(v) ? "" : (v > 0 ? "inf" : "-inf");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

class Csv
{
  public:
    explicit Csv(std::initializer_list<const char *> header)
    {
        bool first = true;
        for (const char *h : header)
        {
            out_ << (first ? "" : ",") << h;
            first = false;
        }
        out_ << '\n';
        columns_ = header.size();
    }

    template <class... T> void row(const T &...cells)
    {
        static_assert(sizeof...(T) > 0);
        std::size_t i = 0;
        ((out_ << (i++ ? "," : "") << cell(cells)), ...);
        if (i != columns_)
            throw std::logic_error("csv row width mismatch");
        out_ << '\n';
    }

    std::string str() const { return out_.str(); }

  private:
    static std::string cell(double v) { return num(v); }
    static std::string cell(int v) { return std::to_string(v); }
    static std::string cell(const std::string &v) { return v; }
    static std::string cell(const char *v) { return v; }

    std::ostringstream out_;
    std::size_t columns_ = 0;
};

std::string empty() { return {}; }

json config_json(const NetworkConfig &c)
{
    json bs = json::array();
    for (const auto &p : c.bs_positions)
        bs.push_back({p[0], p[1], p[2]});
    return {{"L", c.L},
            {"K", c.K},
            {"M", c.M},
            {"bs_positions", bs},
            {"user_ring_radius", c.user_ring_radius},
            {"pathloss_exponent", c.pathloss_exponent},
            {"pathloss_ref", c.pathloss_ref},
            {"noise_power_dbm", c.noise_power_dbm},
            {"pilot_snr", c.pilot_snr},
            {"transmit_power_dbm", c.transmit_power_dbm},
            {"placement", to_string(c.placement)},
            {"seed", c.seed}};
}

json ee_json(const EEParams &e)
{
    return {{"pa_efficiency", e.pa_efficiency}, {"p_tf", e.p_tf}, {"p_lpf", e.p_lpf},
            {"p_lna", e.p_lna},                 {"p_lo", e.p_lo}, {"p_m", e.p_m},
            {"conv_energy_fj", e.conv_energy_fj}, {"b_fullres", e.b_fullres}};
}

template <class T> T get(const json &j, const char *key)
{
    try
    {
        return j.at(key).get<T>();
    }
    catch (const json::exception &e)
    {
        throw ConfigError(std::string("config key '") + key + "': " + e.what());
    }
}

template <class T> void read_if(const json &j, const char *key, T &out)
{
    if (j.contains(key))
        out = get<T>(j, key);
}

template <class T, class F> void read_list_if(const json &j, const char *key, std::vector<T> &out, F &&parse)
{
    if (!j.contains(key))
        return;
    out.clear();
    for (const auto &s : get<std::vector<std::string>>(j, key))
        out.push_back(parse(s));
}

const std::set<std::string> &known_keys()
{
    static const std::set<std::string> keys = {
        "command",   "L",          "K",           "M",          "bs_positions", "user_ring_radius",
        "pathloss_exponent", "pathloss_ref", "noise_power_dbm", "pilot_snr", "transmit_power_dbm", "placement",
        "seed",      "pt_dbm_grid", "m_grid",     "fs_grid_hz", "rho_p_grid",   "architectures",
        "precoders", "pilots",     "trials",      "dac_model",  "m_conv",       "epsilon",
        "kappa_max", "e_t_mw",     "e_p_mw",      "ee",         "out"};
    return keys;
}

ExperimentSpec spec_from_json(const json &j, Command command)
{
    if (!j.is_object())
        throw ConfigError("config must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!known_keys().count(it.key()))
            throw ConfigError("unknown config key '" + it.key() + "'");

    ExperimentSpec s;
    s.command = command;
    if (j.contains("command") && parse_command(get<std::string>(j, "command")) != command)
        throw ConfigError("config command '" + get<std::string>(j, "command") + "' does not match subcommand '" +
                          to_string(command) + "'");

    NetworkConfig &c = s.scenario;
    read_if(j, "L", c.L);
    read_if(j, "K", c.K);
    read_if(j, "M", c.M);
    if (j.contains("bs_positions"))
    {
        c.bs_positions.clear();
        for (const auto &p : get<std::vector<std::vector<double>>>(j, "bs_positions"))
        {
            if (p.size() != 3 && p.size() != 2)
                throw ConfigError("bs_positions entries must have 2 or 3 coordinates");
            c.bs_positions.push_back({p[0], p[1], p.size() == 3 ? p[2] : 0.0});
        }
    }
    else if (c.L != 4)
        throw ConfigError("bs_positions is required when L differs from the default 4");
    read_if(j, "user_ring_radius", c.user_ring_radius);
    read_if(j, "pathloss_exponent", c.pathloss_exponent);
    read_if(j, "pathloss_ref", c.pathloss_ref);
    read_if(j, "noise_power_dbm", c.noise_power_dbm);
    read_if(j, "pilot_snr", c.pilot_snr);
    read_if(j, "transmit_power_dbm", c.transmit_power_dbm);
    if (j.contains("placement"))
        c.placement = parse_placement(get<std::string>(j, "placement"));
    read_if(j, "seed", c.seed);
    s.seed = c.seed;

    read_if(j, "pt_dbm_grid", s.pt_dbm_grid);
    read_if(j, "m_grid", s.m_grid);
    read_if(j, "fs_grid_hz", s.fs_grid_hz);
    read_if(j, "rho_p_grid", s.rho_p_grid);
    read_list_if(j, "architectures", s.architectures, parse_architecture);
    read_list_if(j, "precoders", s.precoders, parse_precoder);
    read_list_if(j, "pilots", s.pilots, parse_pilot_scheme);
    if (j.contains("trials"))
        s.trials = get<int>(j, "trials");
    if (j.contains("dac_model"))
        s.dac_model = parse_dac_model(get<std::string>(j, "dac_model"));
    read_if(j, "m_conv", s.m_conv);
    read_if(j, "epsilon", s.epsilon);
    read_if(j, "kappa_max", s.kappa_max);
    read_if(j, "e_t_mw", s.e_t_mw);
    read_if(j, "e_p_mw", s.e_p_mw);
    read_if(j, "out", s.out);
    if (j.contains("ee"))
    {
        const json &e = j.at("ee");
        static const std::set<std::string> ee_keys = {"pa_efficiency", "p_tf", "p_lpf", "p_lna",
                                                      "p_lo",          "p_m",  "conv_energy_fj", "b_fullres"};
        if (!e.is_object())
            throw ConfigError("ee must be an object");
        for (auto it = e.begin(); it != e.end(); ++it)
            if (!ee_keys.count(it.key()))
                throw ConfigError("unknown ee key '" + it.key() + "'");
        read_if(e, "pa_efficiency", s.ee.pa_efficiency);
        read_if(e, "p_tf", s.ee.p_tf);
        read_if(e, "p_lpf", s.ee.p_lpf);
        read_if(e, "p_lna", s.ee.p_lna);
        read_if(e, "p_lo", s.ee.p_lo);
        read_if(e, "p_m", s.ee.p_m);
        read_if(e, "conv_energy_fj", s.ee.conv_energy_fj);
        read_if(e, "b_fullres", s.ee.b_fullres);
    }
    return s;
}

} // namespace

void ExperimentSpec::validate() const
{
    scenario.validate();
    if (trials && *trials < 0)
        throw ConfigError("trials must be non-negative");
    require_nonempty(architectures, "architectures");
    require_nonempty(precoders, "precoders");
    if (!(epsilon >= 0.0) || !(kappa_max >= 1.0) || !(m_conv > scenario.K))
        throw ConfigError("need epsilon >= 0, kappa_max >= 1 and m_conv > K");
    if (!(e_t_mw > 0.0) || !(e_p_mw > 0.0))
        throw ConfigError("e_t_mw and e_p_mw must be positive");
    if (!(ee.pa_efficiency > 0.0 && ee.pa_efficiency <= 1.0) || !(ee.conv_energy_fj > 0.0) || ee.b_fullres < 1 ||
        !(ee.p_tf > 0.0 && ee.p_lpf > 0.0 && ee.p_lna > 0.0 && ee.p_lo > 0.0 && ee.p_m > 0.0))
        throw ConfigError("ee parameters must be positive (pa_efficiency in (0, 1])");
    if (out.empty())
        throw ConfigError("out must be a file path");

    const Resolved r = resolve(*this);
    const bool zf = std::find(precoders.begin(), precoders.end(), PrecoderKind::ZF) != precoders.end();
    for (double m : r.m)
    {
        if (!(m >= 1.0) || m != std::floor(m))
            throw ConfigError("m_grid entries must be positive integers");
        if (zf && command != Command::Nmse && !(m > scenario.K))
            throw ConfigError("ZF needs M > K for every grid point");
    }
    for (double v : r.pt)
        if (!std::isfinite(v))
            throw ConfigError("pt_dbm_grid entries must be finite");
    for (double v : r.fs)
        if (!(v > 0.0))
            throw ConfigError("fs_grid_hz entries must be positive");
    for (double v : r.rho)
        if (!(v > 0.0))
            throw ConfigError("rho_p_grid entries must be positive");
}

ExperimentSpec spec_from_json_text(const std::string &text, Command command)
{
    json j;
    try
    {
        j = json::parse(text);
    }
    catch (const json::parse_error &e)
    {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    return spec_from_json(j, command);
}

ExperimentSpec load_spec(const std::string &path, Command command)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return spec_from_json_text(buf.str(), command);
}

namespace
{
json spec_json(const ExperimentSpec &s)
{
    const Resolved r = resolve(s);
    json j = config_json(s.scenario);
    j["command"] = to_string(s.command);
    j["seed"] = s.seed;
    auto names = [](const auto &v) {
        json a = json::array();
        for (const auto &x : v)
            a.push_back(to_string(x));
        return a;
    };
    j["pt_dbm_grid"] = r.pt;
    j["m_grid"] = r.m;
    j["fs_grid_hz"] = r.fs;
    j["rho_p_grid"] = r.rho;
    j["architectures"] = names(s.architectures);
    j["precoders"] = names(s.precoders);
    j["pilots"] = names(r.pilots);
    j["trials"] = r.trials;
    j["dac_model"] = to_string(s.dac_model);
    j["m_conv"] = s.m_conv;
    j["epsilon"] = s.epsilon;
    j["kappa_max"] = s.kappa_max;
    j["e_t_mw"] = s.e_t_mw;
    j["e_p_mw"] = s.e_p_mw;
    j["ee"] = ee_json(s.ee);
    j["out"] = s.out;
    return j;
}
} // namespace

std::string spec_to_json(const ExperimentSpec &spec)
{
    return spec_json(spec).dump(2);
}

namespace
{

struct Output
{
    std::string csv;
    json results = json::object();
};

std::vector<RegimeKey> selected_regimes(const ExperimentSpec &s, const std::vector<PilotScheme> &pilots)
{
    std::vector<RegimeKey> keys;
    for (auto a : s.architectures)
        for (auto p : s.precoders)
            for (auto pl : pilots)
                keys.push_back({a, p, pl});
    return keys;
}

McOptions mc_options(const ExperimentSpec &s, int trials)
{
    McOptions o;
    o.trials = trials;
    o.seed = s.seed;
    o.dac_model = s.dac_model;
    return o;
}

Output run_validate(const ExperimentSpec &s, const Resolved &r, const Scenario &base)
{
    Csv csv({"regime", "architecture", "precoder", "pilots", "pt_dbm", "m", "k", "l", "cell", "user", "ds", "cu",
             "qn", "iui", "tn", "gamma_mc", "rate_mc", "mc_stderr", "gamma_cf", "rate_cf", "rel_err"});
    double worst = 0.0;
    for (double m : r.m)
        for (double pt : r.pt)
        {
            const Scenario sc = base.with_antennas(static_cast<int>(m)).with_transmit_power_dbm(pt);
            for (const auto &key : selected_regimes(s, r.pilots))
            {
                const UserTerms cf = closed_form_sqinr(sc, key);
                std::optional<RateReport> mc;
                if (r.trials > 0)
                    mc = mc_sqinr(sc, key, mc_options(s, r.trials));
                for (int j = 0; j < sc.L(); ++j)
                    for (int k = 0; k < sc.K(); ++k)
                    {
                        const double g_cf = cf(j, k).gamma();
                        const double r_cf = cf(j, k).rate();
                        if (mc)
                        {
                            const auto &b = mc->at(j, k);
                            const double rel = b.rate() / r_cf - 1.0;
                            worst = std::max(worst, std::abs(rel));
                            csv.row(key.name(), to_string(key.architecture), to_string(key.precoder),
                                    to_string(key.pilots), pt, sc.M(), sc.K(), sc.L(), j, k, b.ds, b.cu, b.qn, b.iui,
                                    b.tn, b.gamma(), b.rate(), mc->stderr_at(j, k).rate, g_cf, r_cf, rel);
                        }
                        else
                        {
                            const std::string e;
                            csv.row(key.name(), to_string(key.architecture), to_string(key.precoder),
                                    to_string(key.pilots), pt, sc.M(), sc.K(), sc.L(), j, k, e, e, e, e, e, e, e, e,
                                    g_cf, r_cf, e);
                        }
                    }
            }
        }
    Output o{csv.str()};
    if (r.trials > 0)
        o.results["max_abs_rel_err"] = worst;
    return o;
}

Output run_sweep(const ExperimentSpec &s, const Resolved &r, const Scenario &base)
{
    Csv csv({"regime", "architecture", "precoder", "pilots", "pt_dbm", "m", "k", "l", "rate_cf", "rate_mc",
             "sum_rate"});
    const double users = static_cast<double>(base.L()) * base.K();
    for (const auto &key : selected_regimes(s, r.pilots))
        for (double m : r.m)
            for (double pt : r.pt)
            {
                const Scenario sc = base.with_antennas(static_cast<int>(m)).with_transmit_power_dbm(pt);
                const double sum = closed_form_sum_rate(sc, key);
                std::string rate_mc;
                if (r.trials > 0)
                    rate_mc = num(mc_sqinr(sc, key, mc_options(s, r.trials)).sum_rate / users);
                csv.row(key.name(), to_string(key.architecture), to_string(key.precoder), to_string(key.pilots), pt,
                        sc.M(), sc.K(), sc.L(), sum / users, rate_mc, sum);
            }
    return {csv.str()};
}

Output run_nmse(const ExperimentSpec &s, const Resolved &r, const Scenario &base)
{
    Csv csv({"regime", "rho_p", "cell", "user", "gamma_cf", "gamma_mc"});
    const Scenario sc = base.with_antennas(static_cast<int>(r.m.front()));
    for (auto adc : {AdcResolution::OneBit, AdcResolution::FullRes})
        for (auto pilots : r.pilots)
        {
            const EstimationRegime regime{adc, pilots};
            for (double rho : r.rho)
            {
                const Scenario x = sc.with_pilot_snr(rho);
                const CellUserTable cf = nmse_closed_form(x, regime);
                std::optional<CellUserTable> mc;
                if (r.trials > 0)
                    mc = mc_nmse(x, regime, r.trials, s.seed);
                for (int j = 0; j < x.L(); ++j)
                    for (int k = 0; k < x.K(); ++k)
                        csv.row(to_string(regime), rho, j, k, cf(j, k), mc ? num((*mc)(j, k)) : empty());
            }
        }
    return {csv.str()};
}

Output run_power_scaling(const ExperimentSpec &s, const Resolved &r, const Scenario &base)
{
    Csv csv({"case", "architecture", "precoder", "m", "pt_dbm", "rho_p", "sum_rate", "limit_sum_rate"});
    for (auto scaling : {PowerScalingCase::FixedTraining, PowerScalingCase::JointScaling})
        for (auto a : s.architectures)
            for (auto p : s.precoders)
            {
                const double limit = power_scaled_limit(base, p, a, scaling, s.e_t_mw, s.e_p_mw).rate.sum();
                for (double m : r.m)
                {
                    if (p == PrecoderKind::ZF && !(m > base.K()))
                        continue;
                    const Scenario sc = power_scaled_scenario(base, scaling, m, s.e_t_mw, s.e_p_mw);
                    csv.row(to_string(scaling), to_string(a), to_string(p), m, sc.config.transmit_power_dbm,
                            sc.pilot_snr(), closed_form_sum_rate(sc, {a, p, PilotScheme::Reuse}, m), limit);
                }
            }
    return {csv.str()};
}

Output run_antenna_ratio(const ExperimentSpec &s, const Resolved &r, const Scenario &base)
{
    Csv csv({"pt_dbm", "m_conv", "precoder", "kappa", "kappa_tilde", "epsilon"});
    for (auto p : s.precoders)
        for (double pt : r.pt)
        {
            const auto res = antenna_ratio_search(base.with_transmit_power_dbm(pt), p, s.m_conv, s.epsilon,
                                                  s.kappa_max);
            csv.row(pt, s.m_conv, to_string(p), res.kappa, res.kappa_tilde, s.epsilon);
        }
    return {csv.str()};
}

Output run_energy_efficiency(const ExperimentSpec &s, const Resolved &r, const Scenario &base)
{
    Csv csv({"f_s_hz", "architecture", "precoder", "m", "sum_rate", "ee"});
    Output o;
    json thresholds = json::object();
    const Scenario sc = base.with_transmit_power_dbm(r.pt.front());
    for (auto p : s.precoders)
    {
        const auto res = antenna_ratio_search(sc, p, s.m_conv, s.epsilon, s.kappa_max);
        const int m_conv = static_cast<int>(std::ceil(s.m_conv - 1e-9));
        struct Arm
        {
            Architecture a;
            int m;
        };
        const Arm arms[] = {{Architecture::OneBit, res.m_onebit},
                            {Architecture::Mixed, res.m_mixed},
                            {Architecture::Conventional, m_conv}};
        // Thresholds use the integer antenna ratios actually deployed.
        const double kappa = static_cast<double>(res.m_onebit) / m_conv;
        const double kappa_tilde = static_cast<double>(res.m_mixed) / m_conv;
        auto guarded = [](auto &&f) -> json {
            try
            {
                return f();
            }
            catch (const RegimeInapplicableError &)
            {
                return nullptr;
            }
        };
        thresholds[to_string(p)] = {
            {"kappa", kappa},
            {"kappa_tilde", kappa_tilde},
            {"m_onebit", res.m_onebit},
            {"m_mixed", res.m_mixed},
            {"m_conventional", m_conv},
            {"onebit_vs_conventional_hz", guarded([&] { return onebit_vs_conventional_crossover(kappa, s.ee); })},
            {"mixed_vs_conventional_hz",
             guarded([&] { return mixed_vs_conventional_crossover(kappa_tilde, s.ee); })},
            {"onebit_vs_mixed_hz", guarded([&] { return onebit_vs_mixed_crossover(kappa, kappa_tilde, s.ee); })}};

        for (const auto &arm : arms)
        {
            if (std::find(s.architectures.begin(), s.architectures.end(), arm.a) == s.architectures.end())
                continue;
            const double sum = closed_form_sum_rate(sc, {arm.a, p, PilotScheme::Reuse}, arm.m);
            for (double fs : r.fs)
                csv.row(fs, to_string(arm.a), to_string(p), arm.m, sum,
                        energy_efficiency(sum, sc.L(), sc.transmit_mw(), arm.m, s.ee, arm.a, fs));
        }
    }
    o.csv = csv.str();
    o.results["crossover_frequencies_hz"] = thresholds;
    return o;
}

Output run_ratio_bounds(const ExperimentSpec &, const Resolved &r, const Scenario &base)
{
    Csv csv({"bound", "pt_dbm", "cell", "user", "value", "lower", "upper", "ok"});
    const BoundReport rep = sqinr_ratio_bounds_check(base.with_antennas(static_cast<int>(r.m.front())), r.pt);
    for (const auto &c : rep.checks)
        csv.row(c.bound, c.pt_dbm, c.cell, c.user, c.value, c.lower, c.upper, c.ok ? 1 : 0);
    Output o{csv.str()};
    o.results["checks"] = rep.checks.size();
    o.results["violations"] = rep.violations();
    return o;
}

void write_atomically(const std::string &path, const std::string &content)
{
    const std::string tmp = path + ".partial";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f)
            throw ConfigError("cannot write output file '" + path + "'");
        f << content;
        f.flush();
        if (!f)
        {
            f.close();
            std::filesystem::remove(tmp);
            throw NumericalError("failed while writing '" + path + "'");
        }
    }
    std::filesystem::rename(tmp, path);
}

} // namespace

int run(const ExperimentSpec &spec, std::ostream &err)
{
    try
    {
        spec.validate();
        const Resolved r = resolve(spec);
        const Scenario base = build_scenario(spec.scenario);

        Output o;
        switch (spec.command)
        {
        case Command::Validate:
            o = run_validate(spec, r, base);
            break;
        case Command::SweepPt:
        case Command::SweepM:
            o = run_sweep(spec, r, base);
            break;
        case Command::Nmse:
            o = run_nmse(spec, r, base);
            break;
        case Command::PowerScaling:
            o = run_power_scaling(spec, r, base);
            break;
        case Command::AntennaRatio:
            o = run_antenna_ratio(spec, r, base);
            break;
        case Command::EnergyEfficiency:
            o = run_energy_efficiency(spec, r, base);
            break;
        case Command::RatioBounds:
            o = run_ratio_bounds(spec, r, base);
            break;
        }

        json meta;
        meta["software"] = "onebit-lab";
        meta["version"] = kVersion;
        meta["command"] = to_string(spec.command);
        meta["seed"] = spec.seed;
        meta["trials"] = r.trials;
        meta["config"] = spec_json(spec);
        meta["design"] = {
            {"dac_model", to_string(spec.dac_model)},
            {"placement", to_string(spec.scenario.placement)},
            {"pilot_matrix", "identity"},
            {"onebit_dac_power_scaling", "P_t/M"},
            {"unquantized_power_scaling", "statistical: P_t/(M tbar) (MRT), P_t(M-K)/(K zeta) (ZF)"},
            {"rng", "splitmix64(master_seed, trial) -> mt19937_64"},
            {"pa_efficiency", spec.ee.pa_efficiency},
            {"antenna_ratio_search", "bisection on closed forms, reuse pilots"}};
        meta["results"] = o.results;

        const std::string meta_path = spec.out + ".meta.json";
        try
        {
            write_atomically(spec.out, o.csv);
            write_atomically(meta_path, meta.dump(2) + "\n");
        }
        catch (...)
        {
            std::error_code ec;
            std::filesystem::remove(spec.out, ec);
            std::filesystem::remove(meta_path, ec);
            throw;
        }
        return 0;
    }
    catch (const ConfigError &e)
    {
        err << "config error: " << e.what() << '\n';
        return 2;
    }
    catch (const DomainError &e)
    {
        err << "config error: " << e.what() << '\n';
        return 2;
    }
    catch (const NumericalError &e)
    {
        err << "numerical failure: " << e.what() << '\n';
        return 3;
    }
    catch (const RegimeInapplicableError &e)
    {
        err << "numerical failure: " << e.what() << '\n';
        return 3;
    }
    catch (const std::filesystem::filesystem_error &e)
    {
        err << "config error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace onebit
