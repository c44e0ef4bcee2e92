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

#include "rama/channel.hpp"
#include "rama/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace rama
{

ChannelState::ChannelState(std::complex<double> h1, std::complex<double> h2, double sigma1_sq, double sigma2_sq)
    : h1_(h1), h2_(h2), sigma1_sq_(sigma1_sq), sigma2_sq_(sigma2_sq)
{
    if (!(sigma1_sq > 0.0) || !(sigma2_sq > 0.0))
        throw Error(ErrorKind::InvalidParameter, "noise powers must be positive");
    if (!std::isfinite(std::norm(h1)) || !std::isfinite(std::norm(h2)))
        throw Error(ErrorKind::InvalidParameter, "channel gains must be finite");
}

LinkBudget::LinkBudget(double p, double gamma1, double gamma2) : p_(p), gamma1_(gamma1), gamma2_(gamma2)
{
    if (!(p > 0.0) || !std::isfinite(p))
        throw Error(ErrorKind::InvalidParameter, "total power must be positive and finite");
    if (!(gamma1 >= 0.0) || !(gamma2 >= 0.0) || !std::isfinite(gamma1) || !std::isfinite(gamma2))
        throw Error(ErrorKind::InvalidParameter, "normalized gains must be finite and >= 0");
}

bool LinkBudget::symmetric() const noexcept
{
    double scale = std::max(gamma1_, gamma2_);
    return std::abs(gamma1_ - gamma2_) <= 1e-9 * scale;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

LinkBudget from_db(double p_gamma1_db, double p_gamma2_db)
{
    return LinkBudget(1.0, db_to_linear(p_gamma1_db), db_to_linear(p_gamma2_db));
}

LinkBudget from_channel(const ChannelState &ch, double p)
{
    return LinkBudget(p, ch.gamma(User::One), ch.gamma(User::Two));
}

std::pair<User, User> order_users(double gamma1, double gamma2)
{
    if (gamma1 >= gamma2)
        return {User::One, User::Two};
    return {User::Two, User::One};
}

std::pair<User, User> order_users(const ChannelState &ch)
{
    return order_users(ch.gamma(User::One), ch.gamma(User::Two));
}

std::pair<User, User> order_users(const LinkBudget &lb) { return order_users(lb.gamma1(), lb.gamma2()); }

Rng::Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

double Rng::uniform()
{
    ++draws_;
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::pair<double, double> Rng::gaussian_pair()
{
    double u1 = 1.0 - uniform(); // (0, 1], keeps log finite
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(a), r * std::sin(a)};
}

std::complex<double> Rng::complex_gaussian()
{
    auto [x, y] = gaussian_pair();
    return {x * std::numbers::sqrt2 / 2.0, y * std::numbers::sqrt2 / 2.0};
}

ChannelState sample_rayleigh(Rng &rng, double mean_gain1, double mean_gain2, double sigma_sq)
{
    if (!(mean_gain1 > 0.0) || !(mean_gain2 > 0.0))
        throw Error(ErrorKind::InvalidParameter, "mean channel gains must be positive");
    if (!(sigma_sq > 0.0))
        throw Error(ErrorKind::InvalidParameter, "noise power must be positive");

    auto h1 = std::sqrt(mean_gain1) * rng.complex_gaussian();
    auto h2 = std::sqrt(mean_gain2) * rng.complex_gaussian();
    return ChannelState(h1, h2, sigma_sq, sigma_sq);
}

} // namespace rama
