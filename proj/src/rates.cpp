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

#include "rama/rates.hpp"
#include "rama/error.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace rama
{

std::string to_string(Scheme s)
{
    switch (s)
    {
    case Scheme::NOMA:
        return "noma";
    case Scheme::ReconfigNOMA:
        return "reconfig_noma";
    case Scheme::RAMA_I:
        return "rama1";
    case Scheme::RAMA_II:
        return "rama2";
    case Scheme::OMA:
        return "oma";
    }
    throw Error(ErrorKind::UnknownScheme, "unhandled scheme value");
}

Scheme parse_scheme(const std::string &name)
{
    for (Scheme s : {Scheme::NOMA, Scheme::ReconfigNOMA, Scheme::RAMA_I, Scheme::RAMA_II, Scheme::OMA})
        if (to_string(s) == name)
            return s;
    throw Error(ErrorKind::UnknownScheme, "'" + name + "' (expected noma, reconfig_noma, rama1, rama2 or oma)");
}

std::vector<Scheme> parse_schemes(const std::string &comma_list)
{
    std::vector<Scheme> out;
    std::stringstream ss(comma_list);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos)
            continue;
        out.push_back(parse_scheme(item.substr(b, e - b + 1)));
    }
    return out;
}

double capacity(double snr)
{
    return std::log1p(snr) / std::numbers::ln2;
}

namespace
{
// SIC with the strong user decoding (and removing) the weak user's signal.
// share_u scales the power reaching user u (1 for plain NOMA).
RatePair sic_rates(const PowerAllocation &alloc, const LinkBudget &lb, double share1, double share2, Scheme tag)
{
    auto [strong, weak] = order_users(lb);
    auto share = [&](User u) { return u == User::One ? share1 : share2; };

    const double g_s = lb.gamma(strong), g_w = lb.gamma(weak);
    double r_strong = capacity(share(strong) * alloc.power(strong) * g_s);
    double r_weak = capacity(share(weak) * alloc.power(weak) * g_w / (share(weak) * alloc.power(strong) * g_w + 1.0));

    RatePair r;
    r.scheme = tag;
    (strong == User::One ? r.r1 : r.r2) = r_strong;
    (weak == User::One ? r.r1 : r.r2) = r_weak;
    return r;
}

double oma_user_rate(double bandwidth, double snr)
{
    if (bandwidth <= 0.0)
        return 0.0;
    return bandwidth * capacity(snr / bandwidth);
}
} // namespace

RatePair noma_rates(const PowerAllocation &alloc, const LinkBudget &lb)
{
    return sic_rates(alloc, lb, 1.0, 1.0, Scheme::NOMA);
}

RatePair reconfig_noma_rates(const PowerAllocation &alloc, const LinkBudget &lb, double alpha)
{
    if (!(alpha > 0.0 && alpha < 1.0))
        throw Error(ErrorKind::InvalidSplit, "power-division factor must lie in (0, 1)");
    return sic_rates(alloc, lb, alpha, 1.0 - alpha, Scheme::ReconfigNOMA);
}

RatePair rama1_rates(double p, const LinkBudget &lb)
{
    if (!(p >= 0.0))
        throw Error(ErrorKind::InvalidParameter, "total power must be >= 0");
    return {capacity(0.5 * p * lb.gamma1()), capacity(0.5 * p * lb.gamma2()), Scheme::RAMA_I};
}

RatePair rama2_rates(const PowerAllocation &alloc, const LinkBudget &lb)
{
    return {capacity(alloc.p1() * lb.gamma1()), capacity(alloc.p2() * lb.gamma2()), Scheme::RAMA_II};
}

RatePair oma_rates(const PowerAllocation &alloc, const LinkBudget &lb, double beta)
{
    if (!(beta >= 0.0 && beta <= 1.0))
        throw Error(ErrorKind::InvalidParameter, "bandwidth fraction must lie in [0, 1]");
    return {oma_user_rate(beta, alloc.p1() * lb.gamma1()), oma_user_rate(1.0 - beta, alloc.p2() * lb.gamma2()),
            Scheme::OMA};
}

double noma_sum_symmetric(double p_gamma)
{
    if (!(p_gamma >= 0.0))
        throw Error(ErrorKind::InvalidParameter, "p_gamma must be >= 0");
    return capacity(p_gamma);
}

double rama1_sum_symmetric(double p_gamma)
{
    if (!(p_gamma >= 0.0))
        throw Error(ErrorKind::InvalidParameter, "p_gamma must be >= 0");
    return capacity(p_gamma + 0.25 * p_gamma * p_gamma);
}

Case2Bound case2_bound(const PowerAllocation &alloc, const LinkBudget &lb)
{
    if (lb.gamma1() < lb.gamma2())
        throw Error(ErrorKind::InvalidOrdering, "requires gamma1 >= gamma2");
    const double half = 0.5 * alloc.p();
    return {(1.0 + alloc.p1() * lb.gamma1()) * (1.0 + alloc.p2() * lb.gamma2()),
            (1.0 + half * lb.gamma1()) * (1.0 + half * lb.gamma2())};
}

bool case2_holds(const PowerAllocation &alloc, const LinkBudget &lb)
{
    return case2_bound(alloc, lb).holds();
}

bool case2_sufficient(const PowerAllocation &alloc)
{
    return alloc.p1() <= 0.5 * alloc.p();
}

RatePair scheme_rates(Scheme s, const PowerAllocation &alloc, const LinkBudget &lb, const SchemeParams &params)
{
    switch (s)
    {
    case Scheme::NOMA:
        return noma_rates(alloc, lb);
    case Scheme::ReconfigNOMA:
        return reconfig_noma_rates(alloc, lb, params.alpha);
    case Scheme::RAMA_I:
        return rama1_rates(alloc.p(), lb);
    case Scheme::RAMA_II:
        return rama2_rates(alloc, lb);
    case Scheme::OMA:
        return oma_rates(alloc, lb, params.beta < 0.0 ? alloc.fraction1() : params.beta);
    }
    throw Error(ErrorKind::UnknownScheme, "unhandled scheme value");
}

} // namespace rama
