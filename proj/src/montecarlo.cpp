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

#include "rama/montecarlo.hpp"
#include "rama/channel.hpp"
#include "rama/error.hpp"

#include <algorithm>
#include <cmath>

namespace rama
{

std::string to_string(XAxis a)
{
    return a == XAxis::SymmetricSnrDb ? "symmetric" : "ratio";
}

XAxis parse_x_axis(const std::string &name)
{
    if (name == "symmetric")
        return XAxis::SymmetricSnrDb;
    if (name == "ratio")
        return XAxis::GainRatioDb;
    throw Error(ErrorKind::Validation, "x-axis: expected symmetric or ratio, got '" + name + "'");
}

void SweepConfig::validate() const
{
    auto fail = [](const std::string &msg) { throw Error(ErrorKind::Validation, msg); };

    if (schemes.empty())
        fail("schemes: at least one scheme required");
    if (grid_db.empty())
        fail("grid: must not be empty");
    for (std::size_t i = 0; i < grid_db.size(); ++i)
    {
        if (!std::isfinite(grid_db[i]))
            fail("grid: values must be finite");
        if (i > 0 && !(grid_db[i] > grid_db[i - 1]))
            fail("grid: values must be strictly increasing");
    }
    if (splits.empty())
        fail("splits: at least one split required");
    for (double s : splits)
        if (!(s >= 0.0 && s <= 1.0))
            fail("splits: values must lie in [0, 1]");
    if (!std::isfinite(anchor_db))
        fail("anchor-db: must be finite");
    if (!(alpha > 0.0 && alpha < 1.0))
        fail("alpha: must lie in (0, 1)");
    if (fading && fading->num_samples < 1)
        fail("samples: must be >= 1");
}

std::vector<double> make_grid(double start_db, double stop_db, double step_db)
{
    if (!(step_db > 0.0) || !std::isfinite(start_db) || !std::isfinite(stop_db) || stop_db < start_db)
        throw Error(ErrorKind::Validation, "grid: need start <= stop and step > 0");

    std::vector<double> g;
    const double tol = 1e-9 * step_db;
    for (std::size_t k = 0;; ++k)
    {
        double x = start_db + static_cast<double>(k) * step_db;
        if (x > stop_db + tol)
            break;
        g.push_back(x);
    }
    return g;
}

std::vector<double> default_grid(XAxis axis)
{
    return axis == XAxis::SymmetricSnrDb ? make_grid(-10.0, 40.0, 1.0) : make_grid(0.0, 40.0, 1.0);
}

namespace
{
// Welford running mean/variance
struct Accumulator
{
    std::uint64_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x)
    {
        ++n;
        double d = x - mean;
        mean += d / static_cast<double>(n);
        m2 += d * (x - mean);
    }

    double std_error() const
    {
        if (n < 2)
            return 0.0;
        return std::sqrt(m2 / static_cast<double>(n - 1) / static_cast<double>(n));
    }
};

LinkBudget grid_budget(const SweepConfig &cfg, double x_db)
{
    if (cfg.x_axis == XAxis::SymmetricSnrDb)
        return from_db(x_db, x_db);
    return from_db(x_db + cfg.anchor_db, cfg.anchor_db);
}
} // namespace

SweepResult run_sweep(const SweepConfig &cfg)
{
    cfg.validate();

    SweepResult result;
    const std::size_t per_point = cfg.schemes.size() * cfg.splits.size();
    result.rows.reserve(cfg.grid_db.size() * per_point);

    std::vector<PowerAllocation> allocs;
    allocs.reserve(cfg.splits.size());
    for (double s : cfg.splits)
        allocs.push_back(PowerAllocation::from_fraction(1.0, s));

    SchemeParams params;
    params.alpha = cfg.alpha;

    std::vector<Accumulator> acc(per_point);
    for (std::size_t gi = 0; gi < cfg.grid_db.size(); ++gi)
    {
        const double x = cfg.grid_db[gi];
        const LinkBudget mean_lb = grid_budget(cfg, x);
        std::fill(acc.begin(), acc.end(), Accumulator{});

        auto evaluate = [&](const LinkBudget &lb) {
            std::size_t slot = 0;
            for (Scheme s : cfg.schemes)
                for (const auto &a : allocs)
                    acc[slot++].add(scheme_rates(s, a, lb, params).sum());
        };

        if (!cfg.fading)
        {
            evaluate(mean_lb);
        }
        else
        {
            Rng rng(cfg.fading->seed + gi);
            for (std::uint64_t k = 0; k < cfg.fading->num_samples; ++k)
            {
                ChannelState ch = sample_rayleigh(rng, mean_lb.gamma1(), mean_lb.gamma2(), 1.0);
                evaluate(from_channel(ch, 1.0));
            }
        }

        std::size_t slot = 0;
        for (Scheme s : cfg.schemes)
            for (double split : cfg.splits)
            {
                const auto &a = acc[slot++];
                result.rows.push_back({x, s, split, a.mean, cfg.fading ? a.std_error() : 0.0});
            }
    }
    return result;
}

} // namespace rama
