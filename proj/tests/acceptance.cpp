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

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include "cli.hpp"

#include "rama/constellations.hpp"
#include "rama/montecarlo.hpp"
#include "rama/rates.hpp"
#include "rama/region.hpp"
#include "rama/transceiver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

using namespace rama;

namespace
{
struct Outcome
{
    bool pass;
    std::string detail;
};

struct Criterion
{
    int id;
    std::string title;
    double time_limit_s; // <= 0: no limit
    std::function<Outcome()> body;
};

std::string fmt(const char *f, double a, double b = 0, double c = 0, double d = 0)
{
    char buf[256];
    std::snprintf(buf, sizeof(buf), f, a, b, c, d);
    return buf;
}

// 1. asymmetric anchor
Outcome asymmetric_anchor()
{
    const auto lb = from_db(30, 0);
    const double noma = r2_at_r1(trace_region(Scheme::NOMA, lb, 1000), 8.0);
    const double rama2 = r2_at_r1(trace_region(Scheme::RAMA_II, lb, 1000), 8.0);
    bool ok = std::abs(noma - 0.672) <= 0.01 && std::abs(rama2 - 0.803) <= 0.01;
    return {ok, fmt("NOMA r2(8) = %.4f (0.672 +- 0.01), RAMA-II r2(8) = %.4f (0.803 +- 0.01)", noma, rama2)};
}

// 2. symmetric anchor
Outcome symmetric_anchor()
{
    const auto lb = from_db(15, 15);
    const double corner = 5.0279;
    auto oma = trace_region(Scheme::OMA, lb, 1000);
    auto noma = trace_region(Scheme::NOMA, lb, 1000);
    auto rama2 = trace_region(Scheme::RAMA_II, lb, 1000);

    double corner_err = 0;
    for (const auto *r : {&oma, &noma, &rama2})
        corner_err = std::max({corner_err, std::abs(r->max_r1() - corner), std::abs(r->max_r2() - corner)});

    double gap = 0;
    for (const auto &pt : oma.frontier)
        gap = std::max(gap, std::abs(r2_at_r1(noma, pt.r1) - pt.r2));
    for (const auto &pt : noma.frontier)
        gap = std::max(gap, std::abs(r2_at_r1(oma, pt.r1) - pt.r2));

    bool ok = corner_err <= 0.001 && gap <= 1e-3;
    return {ok, fmt("max corner error %.2e (<= 1e-3), max |NOMA - OMA| %.2e (<= 1e-3), %g OMA frontier points",
                    corner_err, gap, static_cast<double>(oma.frontier.size()))};
}

// 3. Case I property suite
Outcome case1_suite()
{
    std::mt19937_64 gen(20240301);
    std::uniform_real_distribution<double> udb(-20.0, 40.0), uf(0.0, 1.0);
    int strict_fail = 0;
    double worst_identity = 0;
    for (int k = 0; k < 100000; ++k)
    {
        const double x = db_to_linear(udb(gen));
        if (!(rama1_sum_symmetric(x) > noma_sum_symmetric(x)))
            ++strict_fail;
        auto r = noma_rates(PowerAllocation::from_fraction(1.0, uf(gen)), LinkBudget(1.0, x, x));
        worst_identity = std::max(worst_identity, std::abs(r.sum() - std::log2(1.0 + x)));
    }
    bool ok = strict_fail == 0 && worst_identity <= 1e-10;
    return {ok, fmt("1e5 draws: %g strict-dominance failures, max |NOMA sum - log2(1+pg)| = %.2e (<= 1e-10)",
                    strict_fail, worst_identity)};
}

// 4. Case II property suite
Outcome case2_suite()
{
    std::mt19937_64 gen(20240302);
    std::uniform_real_distribution<double> udb(-20.0, 40.0);
    std::uniform_real_distribution<double> usplit(0.0, 0.5);
    int fails = 0;
    for (int k = 0; k < 100000; ++k)
    {
        double a = udb(gen), b = udb(gen);
        auto lb = from_db(std::max(a, b), std::min(a, b));
        double f = 0.5 - usplit(gen); // (0, 0.5]
        auto alloc = PowerAllocation::from_fraction(1.0, f);
        if (noma_rates(alloc, lb).sum() > rama1_rates(1.0, lb).sum())
            ++fails;
    }

    // split 0.75 with a large gain ratio
    int noma_wins = 0;
    double best_margin = 0;
    for (double ratio_db = 30.0; ratio_db <= 60.0; ratio_db += 1.0)
        for (double weak_db : {-10.0, 0.0, 10.0})
        {
            auto lb = from_db(weak_db + ratio_db, weak_db);
            double margin = noma_rates(PowerAllocation::from_fraction(1.0, 0.75), lb).sum() -
                            rama1_rates(1.0, lb).sum();
            if (margin > 0)
            {
                ++noma_wins;
                best_margin = std::max(best_margin, margin);
            }
        }
    bool ok = fails == 0 && noma_wins > 0;
    return {ok, fmt("1e5 draws with p1/p in (0,0.5]: %g violations; split 0.75, ratio >= 30 dB: NOMA ahead in %g "
                    "cases (max margin %.3f bits)",
                    fails, noma_wins, best_margin)};
}

// 5. signal-chain exactness
Outcome signal_chain()
{
    const double p = 1.0;
    double worst = 0, worst_power = 0;

    auto psk = make_psk(8);
    const double amp = std::sqrt(0.5 * p);
    double avg1 = 0;
    for (auto s1 : psk.points())
        for (auto s2 : psk.points())
        {
            auto tx = rama1_transmit(s1, s2, p);
            worst = std::max(worst, std::abs(tx.tsa2 - amp * s2));
            avg1 += tx.power();
        }
    worst_power = std::max(worst_power, std::abs(avg1 / 64.0 - p));

    auto qam = make_qam(16);
    for (double f : {0.1, 0.3, 0.5, 0.7, 0.9})
    {
        auto alloc = PowerAllocation::from_fraction(p, f);
        double avg_rf = 0, avg_sc = 0;
        for (auto s1 : qam.points())
            for (auto s2 : qam.points())
            {
                auto chain = rama2_chain(s1, s2, alloc);
                worst = std::max(worst, std::abs(chain.tx.tsa2 - std::sqrt(alloc.p2()) * s2));
                avg_rf += std::norm(chain.rf_output);
                avg_sc += std::norm(superpose(s1, s2, alloc));
            }
        worst_power = std::max({worst_power, std::abs(avg_rf / 256.0 - p), std::abs(avg_sc / 256.0 - p)});
    }
    bool ok = worst <= 1e-12 && worst_power <= 1e-12;
    return {ok, fmt("max TSA-2 error %.2e, max average-power error %.2e (both <= 1e-12)", worst, worst_power)};
}

// 6. reconfigurable-NOMA penalty
Outcome reconfig_penalty()
{
    std::mt19937_64 gen(20240306);
    std::uniform_real_distribution<double> udb(-20.0, 40.0), uf(0.0, 1.0);
    int fails = 0, drawn = 0;
    while (drawn < 10000)
    {
        double f = uf(gen), alpha = uf(gen);
        if (f <= 0.0 || f >= 1.0 || alpha <= 0.0 || alpha >= 1.0)
            continue;
        ++drawn;
        auto lb = from_db(udb(gen), udb(gen));
        auto alloc = PowerAllocation::from_fraction(1.0, f);
        auto n = noma_rates(alloc, lb);
        auto r = reconfig_noma_rates(alloc, lb, alpha);
        if (!(r.r1 < n.r1 && r.r2 < n.r2))
            ++fails;
    }
    return {fails == 0, fmt("1e4 (alloc, gains, alpha) draws: %g cases not strictly below NOMA", fails)};
}

// 7. sum-rate sweep ordering
Outcome sweep_ordering()
{
    SweepConfig sym;
    sym.grid_db = default_grid(XAxis::SymmetricSnrDb);
    auto s = run_sweep(sym);

    SweepConfig ratio = sym;
    ratio.x_axis = XAxis::GainRatioDb;
    ratio.grid_db = default_grid(XAxis::GainRatioDb);
    auto r = run_sweep(ratio);

    auto table = [](const SweepResult &res) {
        std::map<std::pair<double, double>, std::map<Scheme, double>> t;
        for (const auto &row : res.rows)
            t[{row.x_db, row.split}][row.scheme] = row.mean_sum_rate;
        return t;
    };

    int violations = 0;
    for (auto &[key, v] : table(s))
        violations += v.at(Scheme::RAMA_I) < v.at(Scheme::NOMA);
    for (auto &[key, v] : table(r))
        if (key.second <= 0.5)
            violations += v.at(Scheme::RAMA_I) < v.at(Scheme::NOMA);

    int non_monotone = 0;
    for (double split : sym.splits)
    {
        double prev = -1.0;
        for (double x : sym.grid_db)
        {
            auto &v = table(s).at({x, split});
            double gap = v.at(Scheme::RAMA_I) - v.at(Scheme::NOMA);
            non_monotone += !(gap > prev);
            prev = gap;
        }
    }
    bool ok = violations == 0 && non_monotone == 0;
    return {ok, fmt("%g ordering violations over %g rows, %g non-increasing gap steps", violations,
                    static_cast<double>(s.rows.size() + r.rows.size()), non_monotone)};
}

// 8. determinism
Outcome determinism()
{
    namespace fs = std::filesystem;
    auto dir = fs::temp_directory_path();
    auto slurp = [](const fs::path &p) {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };

    std::ostringstream sink;
    bool ok = true;
    int files = 0;
    for (const auto &args : std::vector<std::vector<std::string>>{
             {"sweep", "--samples", "2000", "--seed", "42", "--grid", "-10:40:5", "--schemes", "noma,rama1,rama2,oma"},
             {"region", "--g1-db", "30", "--g2-db", "0", "--schemes", "oma,noma,rama2,rama1", "--n", "200"}})
    {
        auto a = dir / "rama_accept_a.csv", b = dir / "rama_accept_b.csv";
        auto args_a = args, args_b = args;
        args_a.insert(args_a.end(), {"--out", a.string()});
        args_b.insert(args_b.end(), {"--out", b.string()});
        ok = ok && cli::run(args_a, sink, sink) == 0 && cli::run(args_b, sink, sink) == 0;
        ok = ok && !slurp(a).empty() && slurp(a) == slurp(b);
        ++files;
        fs::remove(a);
        fs::remove(b);
    }
    return {ok, fmt("%g command pairs produced byte-identical files", files)};
}
} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "asymmetric anchor r2(r1 = 8) at 30/0 dB", 1.0, asymmetric_anchor},
        {2, "symmetric anchor at 15 dB: corners and OMA = NOMA", 5.0, symmetric_anchor},
        {3, "Case I: RAMA-I beats NOMA on symmetric channels", 2.0, case1_suite},
        {4, "Case II: RAMA-I >= NOMA for p1/p <= 0.5", 2.0, case2_suite},
        {5, "signal-chain exactness (8-PSK RAMA-I, 16-QAM RAMA-II)", 1.0, signal_chain},
        {6, "reconfigurable-NOMA penalty", 1.0, reconfig_penalty},
        {7, "sum-rate sweep ordering and growing gap", 1.0, sweep_ordering},
        {8, "determinism of CSV output", 0.0, determinism}};

    int failed = 0;
    for (const auto &c : criteria)
    {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try
        {
            o = c.body();
        }
        catch (const std::exception &e)
        {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = c.time_limit_s <= 0 || secs < c.time_limit_s;
        bool pass = o.pass && in_time;
        failed += !pass;

        std::printf("[%s] %d. %s: %s; %.3f s", pass ? "PASS" : "FAIL", c.id, c.title.c_str(), o.detail.c_str(),
                    secs);
        if (c.time_limit_s > 0)
            std::printf(" (limit %.0f s)", c.time_limit_s);
        std::printf("\n");
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
