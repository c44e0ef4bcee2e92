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

#ifndef RAMA_REGION_HPP
#define RAMA_REGION_HPP

#include "rama/rates.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace rama
{

// Pareto frontier of an achievable-rate region. Points are sorted with r1
// strictly increasing and r2 strictly decreasing.
struct RateRegion
{
    Scheme scheme = Scheme::NOMA;
    std::vector<RatePair> frontier;
    std::size_t grid_resolution = 0;

    double max_r1() const;
    double max_r2() const;
};

inline constexpr std::size_t default_grid_resolution = 1000;

// Frontier of the region traced by sweeping the scheme's free parameters on
// a uniform grid with n points per axis (endpoints included):
//   NOMA, ReconfigNOMA, RAMA-II: p1/p in [0, 1]
//   OMA: (beta, p1/p) on a (2n - 1) x (2n - 1) grid, then Pareto-filtered.
//        The extra midpoints keep the corner discretization error of the
//        frontier near 0.6/n bits/s/Hz instead of 1.25/n.
//   RAMA-I: the single equal-split point
RateRegion trace_region(Scheme scheme, const LinkBudget &lb, std::size_t n = default_grid_resolution,
                        const SchemeParams &params = {});

// Keeps the points not dominated by any other, sorted by r1. Exact duplicates
// collapse to one point.
std::vector<RatePair> pareto_filter(std::span<const RatePair> points);

// Largest achievable r2 given r1 = r1_target, by linear interpolation along the
// frontier. The region is downward closed, so targets below the first frontier
// point return its r2.
double r2_at_r1(const RateRegion &region, double r1_target);

} // namespace rama

#endif
