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

#ifndef RAMA_CHANNEL_HPP
#define RAMA_CHANNEL_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <utility>

namespace rama
{

enum class User
{
    One = 1,
    Two = 2
};

inline User other(User u) { return u == User::One ? User::Two : User::One; }

// Per-user complex gain and noise power. Used by the symbol-level chain where
// the phase of h matters; rate formulas consume LinkBudget instead.
class ChannelState
{
  public:
    ChannelState(std::complex<double> h1, std::complex<double> h2, double sigma1_sq, double sigma2_sq);

    std::complex<double> h(User u) const { return u == User::One ? h1_ : h2_; }
    double noise_power(User u) const { return u == User::One ? sigma1_sq_ : sigma2_sq_; }

    // |h_i|^2 / sigma_i^2
    double gamma(User u) const { return std::norm(h(u)) / noise_power(u); }

  private:
    std::complex<double> h1_, h2_;
    double sigma1_sq_, sigma2_sq_;
};

// Total power p and normalized gains gamma_i = |h_i|^2/sigma_i^2. Every rate
// expression depends only on the products p_i * gamma_i.
class LinkBudget
{
  public:
    LinkBudget(double p, double gamma1, double gamma2);

    double p() const noexcept { return p_; }
    double gamma(User u) const noexcept { return u == User::One ? gamma1_ : gamma2_; }
    double gamma1() const noexcept { return gamma1_; }
    double gamma2() const noexcept { return gamma2_; }

    // p * gamma_i, the per-user SNR when all power goes to user i
    double snr(User u) const noexcept { return p_ * gamma(u); }

    bool symmetric() const noexcept;

  private:
    double p_, gamma1_, gamma2_;
};

LinkBudget from_db(double p_gamma1_db, double p_gamma2_db);
LinkBudget from_channel(const ChannelState &ch, double p);

double db_to_linear(double db);
double linear_to_db(double lin);

// Strong user first. Ties go to user 1.
std::pair<User, User> order_users(double gamma1, double gamma2);
std::pair<User, User> order_users(const ChannelState &ch);
std::pair<User, User> order_users(const LinkBudget &lb);

// Seedable generator with a fixed, documented algorithm: std::mt19937_64 for
// the raw 64-bit stream (its output sequence is fully specified by the C++
// standard), 53-bit mantissa uniforms, and Box-Muller for Gaussians. The
// distribution objects of <random> are deliberately not used because their
// output is implementation-defined.
//
// Parallel workers derive their seed as base_seed + worker_index.
class Rng
{
  public:
    static constexpr const char *algorithm = "mt19937_64/u53/box-muller";

    explicit Rng(std::uint64_t seed);

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t position() const noexcept { return draws_; } // raw 64-bit words consumed

    // Uniform on [0, 1) with 53 random bits.
    double uniform();

    // Pair of independent standard normals (Box-Muller, one pair per two uniforms).
    std::pair<double, double> gaussian_pair();

    // Circularly-symmetric complex Gaussian with E|z|^2 = 1.
    std::complex<double> complex_gaussian();

  private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
    std::uint64_t draws_ = 0;
};

// Rayleigh block: h_i ~ CN(0, mean_gain_i), both users share sigma_sq.
ChannelState sample_rayleigh(Rng &rng, double mean_gain1, double mean_gain2, double sigma_sq);

} // namespace rama

#endif
