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

#include "rama/region.hpp"
#include "rama/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rama
{

double RateRegion::max_r1() const
{
    return frontier.empty() ? 0.0 : frontier.back().r1;
}

double RateRegion::max_r2() const
{
    return frontier.empty() ? 0.0 : frontier.front().r2;
}

namespace
{
// (r1 desc, r2 desc): scanning in this order, a point survives iff its r2
// beats every point already seen
bool before(const RatePair &a, const RatePair &b)
{
    if (a.r1 != b.r1)
        return a.r1 > b.r1;
    return a.r2 > b.r2;
}

void keep_if_undominated(std::vector<RatePair> &desc_out, const RatePair &pt)
{
    if (desc_out.empty() || pt.r2 > desc_out.back().r2)
        desc_out.push_back(pt);
}

// Frontier of front (r1 ascending) united with row, in one linear merge.
std::vector<RatePair> merge_frontier(const std::vector<RatePair> &front, std::vector<RatePair> row)
{
    std::sort(row.begin(), row.end(), before);
    std::vector<RatePair> out;
    out.reserve(front.size() + row.size());
    auto f = front.rbegin();
    auto r = row.begin();
    while (f != front.rend() || r != row.end())
    {
        if (r == row.end() || (f != front.rend() && !before(*r, *f)))
            keep_if_undominated(out, *f++);
        else
            keep_if_undominated(out, *r++);
    }
    std::reverse(out.begin(), out.end());
    return out;
}
} // namespace

std::vector<RatePair> pareto_filter(std::span<const RatePair> points)
{
    std::vector<RatePair> sorted(points.begin(), points.end());
    std::stable_sort(sorted.begin(), sorted.end(), before);

    std::vector<RatePair> out;
    for (const auto &pt : sorted)
        keep_if_undominated(out, pt);
    std::reverse(out.begin(), out.end());
    return out;
}

namespace
{
double grid_point(std::size_t k, std::size_t n)
{
    if (k + 1 == n)
        return 1.0;
    return static_cast<double>(k) / static_cast<double>(n - 1);
}
} // namespace

RateRegion trace_region(Scheme scheme, const LinkBudget &lb, std::size_t n, const SchemeParams &params)
{
    if (n < 2)
        throw Error(ErrorKind::InvalidParameter, "grid resolution must be >= 2, got " + std::to_string(n));

    RateRegion region;
    region.scheme = scheme;
    region.grid_resolution = n;

    const double p = lb.p();
    std::vector<RatePair> pts;

    switch (scheme)
    {
    case Scheme::NOMA:
    case Scheme::ReconfigNOMA:
    case Scheme::RAMA_II:
        pts.reserve(n);
        for (std::size_t k = 0; k < n; ++k)
            pts.push_back(scheme_rates(scheme, PowerAllocation::from_fraction(p, grid_point(k, n)), lb, params));
        break;
    case Scheme::RAMA_I:
        pts.push_back(rama1_rates(p, lb));
        break;
    case Scheme::OMA:
    {
        // 2n - 1 points per axis: the n-point grid plus its midpoints
        const std::size_t m = 2 * n - 1;
        std::vector<RatePair> front, row(m);
        for (std::size_t j = 0; j < m; ++j)
        {
            const double beta = grid_point(j, m);
            for (std::size_t k = 0; k < m; ++k)
                row[k] = oma_rates(PowerAllocation::from_fraction(p, grid_point(k, m)), lb, beta);
            front = merge_frontier(front, row);
        }
        region.frontier = std::move(front);
        return region;
    }
    default:
        throw Error(ErrorKind::UnknownScheme, "cannot trace region for this scheme");
    }

    region.frontier = pareto_filter(pts);
    return region;
}

double r2_at_r1(const RateRegion &region, double r1_target)
{
    const auto &f = region.frontier;
    if (f.empty())
        throw Error(ErrorKind::OutOfRange, "empty frontier");

    const double top = f.back().r1;
    const double slack = 1e-12 * std::max(1.0, top);
    if (!(r1_target >= 0.0) || r1_target > top + slack)
        throw Error(ErrorKind::OutOfRange,
                    "r1 target " + std::to_string(r1_target) + " outside [0, " + std::to_string(top) + "]");

    if (r1_target <= f.front().r1)
        return f.front().r2;
    if (r1_target >= top)
        return f.back().r2;

    auto hi = std::lower_bound(f.begin(), f.end(), r1_target,
                               [](const RatePair &pt, double v) { return pt.r1 < v; });
    auto lo = std::prev(hi);
    const double t = (r1_target - lo->r1) / (hi->r1 - lo->r1);
    return lo->r2 + t * (hi->r2 - lo->r2);
}

} // namespace rama
