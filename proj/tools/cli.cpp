// SPDX-License-Identifier: Apache-2.0
//
// rama - two-user multiple access for reconfigurable mmWave antennas
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "cli.hpp"

#include "rama/error.hpp"
#include "rama/transceiver.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#ifndef RAMA_VERSION
#define RAMA_VERSION "0.0.0"
#endif

namespace rama::cli
{

namespace
{
constexpr std::string_view echo_prefix = "# config: ";

std::string trim(std::string_view s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string &s, char sep = ',')
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
    {
        auto t = trim(item);
        if (!t.empty())
            out.push_back(t);
    }
    return out;
}

double to_double(const std::string &key, const std::string &text)
{
    double v = 0.0;
    auto t = trim(text);
    // from_chars rejects a leading '+'
    std::string_view sv = t;
    if (!sv.empty() && sv.front() == '+')
        sv.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), v);
    if (ec != std::errc{} || ptr != sv.data() + sv.size() || sv.empty() || !std::isfinite(v))
        throw ConfigError(key, "expected a real number, got '" + text + "'");
    return v;
}

std::uint64_t to_uint(const std::string &key, const std::string &text)
{
    std::uint64_t v = 0;
    auto t = trim(text);
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty())
        throw ConfigError(key, "expected a non-negative integer, got '" + text + "'");
    return v;
}

std::vector<double> to_doubles(const std::string &key, const std::string &text)
{
    std::vector<double> out;
    for (const auto &item : split_list(text))
        out.push_back(to_double(key, item));
    return out;
}

std::string join_doubles(const std::vector<double> &v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
    {
        if (i)
            s += ',';
        s += format_double(v[i]);
    }
    return s;
}

std::string join_schemes(const std::vector<Scheme> &v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
    {
        if (i)
            s += ',';
        s += to_string(v[i]);
    }
    return s;
}

std::vector<Scheme> to_schemes(const std::string &key, const std::string &text)
{
    std::vector<Scheme> out;
    try
    {
        out = parse_schemes(text);
    }
    catch (const Error &e)
    {
        throw ConfigError(key, e.what());
    }
    if (out.empty())
        throw ConfigError(key, "at least one scheme required");
    return out;
}

void write_header(std::ostream &os, const std::string &command, const KeyValues &cfg)
{
    os << "# ramasim " << RAMA_VERSION << '\n';
    os << "# prng: " << Rng::algorithm << '\n';
    os << echo_prefix << "version = " << config_schema_version << '\n';
    os << echo_prefix << "command = " << command << '\n';
    for (const auto &[k, v] : cfg)
        os << echo_prefix << k << " = " << v << '\n';
}
} // namespace

KeyValues parse_key_values(std::string_view text)
{
    std::vector<std::string> lines;
    {
        std::string buf(text);
        std::stringstream ss(buf);
        std::string line;
        while (std::getline(ss, line))
            lines.push_back(line);
    }

    const bool is_echo = std::any_of(lines.begin(), lines.end(),
                                     [](const std::string &l) { return l.starts_with(echo_prefix); });

    KeyValues kv;
    for (std::size_t i = 0; i < lines.size(); ++i)
    {
        std::string_view line = lines[i];
        if (is_echo)
        {
            if (!line.starts_with(echo_prefix))
                continue;
            line.remove_prefix(echo_prefix.size());
        }
        auto t = trim(line);
        if (t.empty() || t.front() == '#')
            continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(i + 1), "expected 'key = value'");
        auto key = trim(std::string_view(t).substr(0, eq));
        auto value = trim(std::string_view(t).substr(eq + 1));
        if (key.empty())
            throw ConfigError("line " + std::to_string(i + 1), "empty key");
        if (kv.contains(key))
            throw ConfigError(key, "duplicate key");
        kv[key] = value;
    }
    return kv;
}

std::string format_double(double v)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::string format_csv(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    std::string s(buf);
    return s == "-0" ? "0" : s;
}

const std::vector<std::string> &region_keys()
{
    static const std::vector<std::string> keys{"g1-db", "g2-db", "schemes", "n", "alpha"};
    return keys;
}

const std::vector<std::string> &sweep_keys()
{
    static const std::vector<std::string> keys{"schemes", "x-axis", "grid",    "splits",
                                               "anchor-db", "alpha", "samples", "seed"};
    return keys;
}

const std::vector<std::string> &signal_check_keys()
{
    static const std::vector<std::string> keys{"constellation", "order", "scheme", "splits", "power"};
    return keys;
}

RegionParams parse_region(const KeyValues &kv)
{
    RegionParams p;
    if (kv.contains("g1-db"))
        p.g1_db = to_double("g1-db", kv.at("g1-db"));
    if (kv.contains("g2-db"))
        p.g2_db = to_double("g2-db", kv.at("g2-db"));
    if (kv.contains("schemes"))
        p.schemes = to_schemes("schemes", kv.at("schemes"));
    if (kv.contains("n"))
    {
        auto n = to_uint("n", kv.at("n"));
        if (n < 2)
            throw ConfigError("n", "grid resolution must be >= 2");
        p.n = static_cast<std::size_t>(n);
    }
    if (kv.contains("alpha"))
    {
        p.alpha = to_double("alpha", kv.at("alpha"));
        if (!(p.alpha > 0.0 && p.alpha < 1.0))
            throw ConfigError("alpha", "must lie in (0, 1)");
    }
    return p;
}

KeyValues echo(const RegionParams &p)
{
    return {{"g1-db", format_double(p.g1_db)},
            {"g2-db", format_double(p.g2_db)},
            {"schemes", join_schemes(p.schemes)},
            {"n", std::to_string(p.n)},
            {"alpha", format_double(p.alpha)}};
}

SweepParams parse_sweep(const KeyValues &kv)
{
    SweepParams p;
    SweepConfig &c = p.sweep;
    if (kv.contains("schemes"))
        c.schemes = to_schemes("schemes", kv.at("schemes"));
    if (kv.contains("x-axis"))
    {
        try
        {
            c.x_axis = parse_x_axis(kv.at("x-axis"));
        }
        catch (const Error &)
        {
            throw ConfigError("x-axis", "expected symmetric or ratio, got '" + kv.at("x-axis") + "'");
        }
    }

    std::string grid = kv.contains("grid") ? trim(kv.at("grid")) : std::string("default");
    if (grid == "default")
    {
        c.grid_db = default_grid(c.x_axis);
        p.grid_text = c.x_axis == XAxis::SymmetricSnrDb ? "-10:40:1" : "0:40:1";
    }
    else if (grid.find(':') != std::string::npos)
    {
        auto parts = split_list(grid, ':');
        if (parts.size() != 3)
            throw ConfigError("grid", "range must be start:stop:step");
        double a = to_double("grid", parts[0]), b = to_double("grid", parts[1]), s = to_double("grid", parts[2]);
        try
        {
            c.grid_db = make_grid(a, b, s);
        }
        catch (const Error &)
        {
            throw ConfigError("grid", "range needs start <= stop and step > 0");
        }
        p.grid_text = format_double(a) + ":" + format_double(b) + ":" + format_double(s);
    }
    else
    {
        c.grid_db = to_doubles("grid", grid);
        p.grid_text = join_doubles(c.grid_db);
    }

    if (kv.contains("splits"))
        c.splits = to_doubles("splits", kv.at("splits"));
    if (kv.contains("anchor-db"))
        c.anchor_db = to_double("anchor-db", kv.at("anchor-db"));
    if (kv.contains("alpha"))
        c.alpha = to_double("alpha", kv.at("alpha"));
    if (kv.contains("samples"))
        p.samples = to_uint("samples", kv.at("samples"));
    if (kv.contains("seed"))
        p.seed = to_uint("seed", kv.at("seed"));

    if (p.samples > 0)
        c.fading = FadingConfig{p.samples, p.seed};

    try
    {
        c.validate();
    }
    catch (const Error &e)
    {
        // validation messages start with the field name
        std::string msg = e.what();
        auto colon = msg.find(": ");
        std::string rest = msg.substr(colon + 2);
        auto field_end = rest.find(':');
        throw ConfigError(rest.substr(0, field_end), trim(rest.substr(field_end + 1)));
    }
    return p;
}

KeyValues echo(const SweepParams &p)
{
    return {{"schemes", join_schemes(p.sweep.schemes)},
            {"x-axis", to_string(p.sweep.x_axis)},
            {"grid", p.grid_text},
            {"splits", join_doubles(p.sweep.splits)},
            {"anchor-db", format_double(p.sweep.anchor_db)},
            {"alpha", format_double(p.sweep.alpha)},
            {"samples", std::to_string(p.samples)},
            {"seed", std::to_string(p.seed)}};
}

SignalCheckParams parse_signal_check(const KeyValues &kv)
{
    SignalCheckParams p;
    if (kv.contains("constellation"))
    {
        const auto &v = kv.at("constellation");
        if (v == "psk")
            p.constellation = Modulation::PSK;
        else if (v == "qam")
            p.constellation = Modulation::QAM;
        else
            throw ConfigError("constellation", "expected psk or qam, got '" + v + "'");
    }
    if (kv.contains("order"))
    {
        auto o = to_uint("order", kv.at("order"));
        if (o > 1u << 20)
            throw ConfigError("order", "unreasonably large");
        p.order = static_cast<int>(o);
    }
    try
    {
        (void)make_constellation(p.constellation, p.order);
    }
    catch (const Error &e)
    {
        throw ConfigError("order", e.what());
    }

    if (kv.contains("scheme"))
    {
        const auto &v = kv.at("scheme");
        if (v == "rama1")
            p.scheme = ChainCheck::Rama1;
        else if (v == "rama2")
            p.scheme = ChainCheck::Rama2;
        else
            throw ConfigError("scheme", "expected rama1 or rama2, got '" + v + "'");
    }
    if (p.scheme == ChainCheck::Rama1 && p.constellation != Modulation::PSK)
        throw ConfigError("scheme", std::string(to_string(ErrorKind::PskRequired)) +
                                        ": rama1 uses equal power division and needs a PSK constellation");

    if (kv.contains("splits"))
        p.splits = to_doubles("splits", kv.at("splits"));
    if (p.splits.empty())
        throw ConfigError("splits", "at least one split required");
    for (double s : p.splits)
        if (!(s >= 0.0 && s <= 1.0))
            throw ConfigError("splits", "values must lie in [0, 1]");

    if (kv.contains("power"))
        p.power = to_double("power", kv.at("power"));
    if (!(p.power > 0.0))
        throw ConfigError("power", "must be positive");
    return p;
}

KeyValues echo(const SignalCheckParams &p)
{
    return {{"constellation", to_string(p.constellation)},
            {"order", std::to_string(p.order)},
            {"scheme", p.scheme == ChainCheck::Rama1 ? "rama1" : "rama2"},
            {"splits", join_doubles(p.splits)},
            {"power", format_double(p.power)}};
}

std::string write_region_csv(const RegionParams &p)
{
    const LinkBudget lb = from_db(p.g1_db, p.g2_db);
    SchemeParams sp;
    sp.alpha = p.alpha;

    std::ostringstream os;
    write_header(os, "region", echo(p));
    os << "scheme,r1_bits,r2_bits\n";
    for (Scheme s : p.schemes)
    {
        RateRegion region = trace_region(s, lb, p.n, sp);
        for (const auto &pt : region.frontier)
            os << to_string(s) << ',' << format_csv(pt.r1) << ',' << format_csv(pt.r2) << '\n';
    }
    return os.str();
}

std::string write_sweep_csv(const SweepParams &p)
{
    SweepResult res = run_sweep(p.sweep);

    std::ostringstream os;
    write_header(os, "sweep", echo(p));
    os << "x_db,scheme,split,sum_rate_bits,stderr\n";
    for (const auto &row : res.rows)
        os << format_csv(row.x_db) << ',' << to_string(row.scheme) << ',' << format_csv(row.split) << ','
           << format_csv(row.mean_sum_rate) << ',' << format_csv(row.std_error) << '\n';
    return os.str();
}

std::vector<CheckLine> run_signal_check(const SignalCheckParams &p)
{
    const Constellation c = make_constellation(p.constellation, p.order);
    const auto pts = c.points();
    const std::size_t pairs = pts.size() * pts.size();
    const double pairs_d = static_cast<double>(pairs);

    std::vector<CheckLine> lines;

    if (p.scheme == ChainCheck::Rama1)
    {
        const double amp = std::sqrt(0.5 * p.power);
        double err_tsa1 = 0, err_tsa2 = 0, err_budget = 0, avg = 0;
        for (Symbol s1 : pts)
            for (Symbol s2 : pts)
            {
                TxSignal tx = rama1_transmit(s1, s2, p.power);
                err_tsa1 = std::max(err_tsa1, std::abs(tx.tsa1 - amp * s1));
                err_tsa2 = std::max(err_tsa2, std::abs(tx.tsa2 - amp * s2));
                err_budget = std::max(err_budget, std::abs(tx.power() - p.power));
                avg += tx.power();
            }
        lines.push_back({"rama1_tsa1_direct", -1.0, pairs, err_tsa1});
        lines.push_back({"rama1_tsa2_equivalence", -1.0, pairs, err_tsa2});
        lines.push_back({"rama1_symbol_power", -1.0, pairs, err_budget});
        lines.push_back({"rama1_average_power", -1.0, pairs, std::abs(avg / pairs_d - p.power)});
    }
    else
    {
        for (double split : p.splits)
        {
            const auto alloc = PowerAllocation::from_fraction(p.power, split);
            const double a1 = std::sqrt(alloc.p1()), a2 = std::sqrt(alloc.p2());
            double err_tsa1 = 0, err_tsa2 = 0, err_rf = 0, avg_rf = 0;
            for (Symbol s1 : pts)
                for (Symbol s2 : pts)
                {
                    Rama2Chain chain = rama2_chain(s1, s2, alloc);
                    err_tsa1 = std::max(err_tsa1, std::abs(chain.tx.tsa1 - a1 * s1));
                    err_tsa2 = std::max(err_tsa2, std::abs(chain.tx.tsa2 - a2 * s2));
                    double expect = alloc.p1() * std::norm(s1) + alloc.p2() * std::norm(s2);
                    err_rf = std::max(err_rf, std::abs(std::norm(chain.rf_output) - expect));
                    avg_rf += std::norm(chain.rf_output);
                }
            lines.push_back({"rama2_tsa1_direct", split, pairs, err_tsa1});
            lines.push_back({"rama2_tsa2_equivalence", split, pairs, err_tsa2});
            lines.push_back({"rama2_rf_symbol_power", split, pairs, err_rf});
            lines.push_back({"rama2_rf_average_power", split, pairs, std::abs(avg_rf / pairs_d - p.power)});
        }
    }

    // Superposition reference: same average power p for every split.
    for (double split : p.splits)
    {
        const auto alloc = PowerAllocation::from_fraction(p.power, split);
        double avg = 0;
        for (Symbol s1 : pts)
            for (Symbol s2 : pts)
                avg += std::norm(superpose(s1, s2, alloc));
        lines.push_back({"superposition_average_power", split, pairs, std::abs(avg / pairs_d - p.power)});
    }
    return lines;
}

std::string write_signal_check_report(const SignalCheckParams &p, const std::vector<CheckLine> &lines)
{
    std::ostringstream os;
    write_header(os, "signal-check", echo(p));
    os << "check,split,pairs,max_abs_error,result\n";
    double worst = 0.0;
    bool ok = true;
    for (const auto &l : lines)
    {
        os << l.check << ',' << (l.split < 0 ? std::string("-") : format_csv(l.split)) << ',' << l.pairs << ','
           << format_csv(l.max_abs_error) << ',' << (l.pass() ? "pass" : "fail") << '\n';
        worst = std::max(worst, l.max_abs_error);
        ok = ok && l.pass();
    }
    os << "# max_abs_error = " << format_csv(worst) << '\n';
    os << "# result = " << (ok ? "pass" : "fail") << '\n';
    return os.str();
}

namespace
{
struct Command
{
    Command(CLI::App *a, std::string n, const std::vector<std::string> *k) : app(a), name(std::move(n)), keys(k) {}

    CLI::App *app;
    std::string name;
    const std::vector<std::string> *keys;
    std::map<std::string, std::string> flag_values;
    std::map<std::string, CLI::Option *> flags;
};

void add_flags(Command &cmd)
{
    static const std::map<std::string, std::string> help{
        {"g1-db", "p*|h1|^2/sigma1^2 in dB"},
        {"g2-db", "p*|h2|^2/sigma2^2 in dB"},
        {"schemes", "comma list of noma, reconfig_noma, rama1, rama2, oma"},
        {"n", "grid resolution per swept parameter"},
        {"alpha", "power-division factor for reconfig_noma, in (0,1)"},
        {"x-axis", "symmetric or ratio"},
        {"grid", "dB grid: start:stop:step, a comma list, or 'default'"},
        {"splits", "comma list of p1/p fractions"},
        {"anchor-db", "ratio mode: p*|h2|^2/sigma2^2 in dB"},
        {"samples", "Rayleigh realizations per grid point (0 = no fading)"},
        {"seed", "base PRNG seed; grid point k uses seed + k"},
        {"constellation", "psk or qam"},
        {"order", "constellation order"},
        {"scheme", "rama1 or rama2"},
        {"power", "total transmit power p"}};
    for (const auto &k : *cmd.keys)
        cmd.flags[k] = cmd.app->add_option("--" + k, cmd.flag_values[k], help.at(k));
}

KeyValues resolve(const Command &cmd, const std::string &config_path)
{
    KeyValues kv;
    if (!config_path.empty())
    {
        std::ifstream in(config_path);
        if (!in)
            throw ConfigError("config", "cannot read '" + config_path + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        KeyValues file = parse_key_values(ss.str());

        auto v = file.find("version");
        if (v == file.end())
            throw ConfigError("version", "missing (expected " + std::to_string(config_schema_version) + ")");
        if (v->second != std::to_string(config_schema_version))
            throw ConfigError("version", "unsupported config version '" + v->second + "'");
        file.erase(v);

        auto c = file.find("command");
        if (c != file.end())
        {
            if (c->second != cmd.name)
                throw ConfigError("command", "config is for '" + c->second + "', not '" + cmd.name + "'");
            file.erase(c);
        }
        for (const auto &[k, val] : file)
        {
            if (std::find(cmd.keys->begin(), cmd.keys->end(), k) == cmd.keys->end())
                throw ConfigError(k, "unknown key for '" + cmd.name + "'");
            kv[k] = val;
        }
    }
    for (const auto &[k, opt] : cmd.flags)
        if (opt->count() > 0)
            kv[k] = cmd.flag_values.at(k);
    return kv;
}

int emit(const std::string &text, const std::string &out_path, std::ostream &out, std::ostream &err)
{
    if (out_path.empty())
    {
        out << text;
        return exit_ok;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f)
    {
        err << "ramasim: out: cannot write '" << out_path << "'\n";
        return exit_runtime;
    }
    f << text;
    f.close();
    if (!f)
    {
        err << "ramasim: out: write to '" << out_path << "' failed\n";
        return exit_runtime;
    }
    return exit_ok;
}
} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Two-user downlink multiple access over reconfigurable mmWave antennas", "ramasim"};
    app.set_version_flag("--version", RAMA_VERSION);
    app.require_subcommand(1);

    std::string config_path, out_path;

    Command region{app.add_subcommand("region", "trace achievable rate-region frontiers"), "region", &region_keys()};
    Command sweep{app.add_subcommand("sweep", "sum rate versus channel sweeps"), "sweep", &sweep_keys()};
    Command check{app.add_subcommand("signal-check", "verify the RAMA transmit chains exhaustively"),
                  "signal-check", &signal_check_keys()};

    for (Command *cmd : {&region, &sweep, &check})
    {
        add_flags(*cmd);
        cmd->app->add_option("--config", config_path, "key = value file, or a previous output file");
        cmd->app->add_option("--out", out_path, "output path (default: stdout)");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try
    {
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp &)
    {
        out << app.help();
        return exit_ok;
    }
    catch (const CLI::CallForAllHelp &)
    {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    }
    catch (const CLI::CallForVersion &)
    {
        out << RAMA_VERSION << '\n';
        return exit_ok;
    }
    catch (const CLI::ParseError &e)
    {
        err << "ramasim: " << e.what() << '\n';
        return exit_validation;
    }

    Command *cmd = region.app->parsed() ? &region : sweep.app->parsed() ? &sweep : &check;

    std::string text;
    int status = exit_ok;
    try
    {
        KeyValues kv = resolve(*cmd, config_path);
        if (cmd == &region)
        {
            text = write_region_csv(parse_region(kv));
        }
        else if (cmd == &sweep)
        {
            text = write_sweep_csv(parse_sweep(kv));
        }
        else
        {
            auto params = parse_signal_check(kv);
            auto lines = run_signal_check(params);
            text = write_signal_check_report(params, lines);
            bool ok = std::all_of(lines.begin(), lines.end(), [](const CheckLine &l) { return l.pass(); });
            status = ok ? exit_ok : exit_runtime;
        }
    }
    catch (const ConfigError &e)
    {
        err << "ramasim: " << e.what() << '\n';
        return exit_validation;
    }
    catch (const std::exception &e)
    {
        err << "ramasim: " << e.what() << '\n';
        return exit_runtime;
    }

    int wrote = emit(text, out_path, out, err);
    return wrote != exit_ok ? wrote : status;
}

} // namespace rama::cli
