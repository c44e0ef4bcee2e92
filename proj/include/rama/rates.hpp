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

#ifndef RAMA_RATES_HPP
#define RAMA_RATES_HPP

#include "rama/channel.hpp"
#include "rama/transceiver.hpp"

#include <string>
#include <vector>

namespace rama
{

enum class Scheme
{
    NOMA,
    ReconfigNOMA,
    RAMA_I,
    RAMA_II,
    OMA
};

// Short names used on the command line and in CSV files:
// noma, reconfig_noma, rama1, rama2, oma.
std::string to_string(Scheme s);
Scheme parse_scheme(const std::string &name);
std::vector<Scheme> parse_schemes(const std::string &comma_list);

// Achievable rates in bits/s/Hz.
struct RatePair
{
    double r1 = 0.0;
    double r2 = 0.0;
    Scheme scheme = Scheme::NOMA;

    double sum() const { return r1 + r2; }
};

// log2(1 + snr), accurate for small snr
double capacity(double snr);

// Superposition coding with SIC at the stronger user (order_users decides
// which one; as written for gamma1 >= gamma2):
//   R1 = log2(1 + p1 g1),  R2 = log2(1 + p2 g2 / (p1 g2 + 1))
// p1 <= p2 is a fairness policy and is not enforced.
RatePair noma_rates(const PowerAllocation &alloc, const LinkBudget &lb);

// NOMA through a reconfigurable antenna that hands alpha of the superposed
// signal power to user 1's beam and 1 - alpha to user 2's.
RatePair reconfig_noma_rates(const PowerAllocation &alloc, const LinkBudget &lb, double alpha);

// Partial CSI: equal power p/2 per beam, no inter-user interference.
RatePair rama1_rates(double p, const LinkBudget &lb);

// Full CSI: R_i = log2(1 + p_i g_i).
RatePair rama2_rates(const PowerAllocation &alloc, const LinkBudget &lb);

// OFDMA with bandwidth fraction beta for user 1. The rate of a user with
// vanishing bandwidth is its continuous limit, 0.
RatePair oma_rates(const PowerAllocation &alloc, const LinkBudget &lb, double beta);

// Closed-form sum rates for a symmetric channel with per-user SNR p_gamma.
double noma_sum_symmetric(double p_gamma);  // log2(1 + pg), independent of the split
double rama1_sum_symmetric(double p_gamma); // log2(1 + pg + pg^2/4)

// Exact two-sided comparison for an asymmetric channel (gamma1 >= gamma2):
// RAMA-I's sum rate is at least NOMA's whenever
//   (1 + p1 g1)(1 + p2 g2) <= (1 + p g1/2)(1 + p g2/2)
struct Case2Bound
{
    double lhs;
    double rhs;
    bool holds() const { return lhs <= rhs; }
};

Case2Bound case2_bound(const PowerAllocation &alloc, const LinkBudget &lb);
bool case2_holds(const PowerAllocation &alloc, const LinkBudget &lb);

// Sufficient (not tight) version of the above: p1/p <= 1/2.
bool case2_sufficient(const PowerAllocation &alloc);

// Extra knobs for schemes that need them.
struct SchemeParams
{
    double alpha = 0.5; // ReconfigNOMA power division
    double beta = -1.0; // OMA bandwidth fraction; negative means "equal to p1/p"
};

RatePair scheme_rates(Scheme s, const PowerAllocation &alloc, const LinkBudget &lb,
                      const SchemeParams &params = {});

} // namespace rama

#endif
