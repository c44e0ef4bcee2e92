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

#include "rama/error.hpp"
#include "rama/transceiver.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace rama;

namespace
{
constexpr double tol = 1e-12;
}

TEST_CASE("PowerAllocation invariants")
{
    auto a = PowerAllocation::from_fraction(2.0, 0.25);
    CHECK(a.p1() == 0.5);
    CHECK(a.p2() == 1.5);
    CHECK(std::abs(a.p() - 2.0) <= tol);
    CHECK_THROWS_AS(PowerAllocation(-0.1, 1.0), Error);
    CHECK_THROWS_AS(PowerAllocation::from_fraction(1.0, 1.5), Error);
    CHECK_THROWS_AS(PowerAllocation::from_fraction(0.0, 0.5), Error);
}

TEST_CASE("superpose")
{
    auto half = PowerAllocation::from_fraction(1.0, 0.5);
    CHECK(std::abs(superpose({1, 0}, {-1, 0}, half)) <= tol);

    // oracle: sqrt(0.25) + sqrt(0.75)
    auto q = PowerAllocation(0.25, 0.75);
    Symbol x = superpose({1, 0}, {1, 0}, q);
    CHECK(x.real() == doctest::Approx(0.5 + 0.8660254037844386).epsilon(1e-15));
    CHECK(x.imag() == 0.0);

    // exhaustive 8-PSK average: cross terms cancel
    auto c = make_psk(8);
    for (double f : {0.1, 0.3, 0.5, 0.9})
    {
        auto a = PowerAllocation::from_fraction(1.0, f);
        double acc = 0;
        for (auto s1 : c.points())
            for (auto s2 : c.points())
                acc += std::norm(superpose(s1, s2, a));
        CHECK(std::abs(acc / 64.0 - 1.0) <= tol);
    }
}

TEST_CASE("reconfig_noma_split")
{
    auto eq = reconfig_noma_split({1, 0}, 0.5);
    CHECK(eq.tsa1.real() == doctest::Approx(0.7071067811865476));
    CHECK(eq.tsa2.real() == doctest::Approx(0.7071067811865476));

    auto t = reconfig_noma_split({1, 0}, 0.9);
    CHECK(t.tsa1.real() == doctest::Approx(std::sqrt(0.9)));
    CHECK(t.tsa1.real() == doctest::Approx(0.9487).epsilon(1e-4));
    CHECK(t.tsa2.real() == doctest::Approx(0.3162).epsilon(1e-4));

    for (double a : {0.0, 1.0, -0.2, 1.3})
    {
        try
        {
            reconfig_noma_split({1, 0}, a);
            FAIL("expected invalid-split");
        }
        catch (const Error &e)
        {
            CHECK(e.kind() == ErrorKind::InvalidSplit);
        }
    }

    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> u(-3, 3), ua(1e-6, 1 - 1e-6);
    for (int k = 0; k < 10000; ++k)
    {
        Symbol x{u(gen), u(gen)};
        auto s = reconfig_noma_split(x, ua(gen));
        CHECK(std::abs(s.power() - std::norm(x)) <= 1e-12 * std::max(1.0, std::norm(x)));
    }
}

TEST_CASE("rama1_transmit reproduces the direct encoding for every 8-PSK pair")
{
    auto c = make_psk(8);
    const double p = 1.0, amp = std::sqrt(0.5 * p);

    auto same = rama1_transmit(c[3], c[3], p);
    CHECK(std::abs(same.tsa1 - amp * c[3]) <= tol);
    CHECK(std::abs(same.tsa2 - amp * c[3]) <= tol);

    auto quarter = rama1_transmit(c[0], c[1], p);
    CHECK(std::abs(quarter.tsa2 - 0.7071067811865476 * std::polar(1.0, std::numbers::pi / 4)) <= tol);

    double worst = 0;
    for (auto s1 : c.points())
        for (auto s2 : c.points())
        {
            auto tx = rama1_transmit(s1, s2, p);
            worst = std::max(worst, std::abs(tx.tsa2 - amp * s2));
            CHECK(std::abs(tx.tsa1 - amp * s1) <= tol);
            CHECK(tx.power() <= p + 1e-9);
        }
    CHECK(worst <= tol);
}

TEST_CASE("rama1_transmit needs equal-modulus symbols")
{
    auto q = make_qam(16);
    try
    {
        rama1_transmit(q[0], q[5], 1.0); // corner vs inner point
        FAIL("expected psk-required");
    }
    catch (const Error &e)
    {
        CHECK(e.kind() == ErrorKind::PskRequired);
    }
    CHECK_THROWS_AS(rama1_transmit({0, 0}, {0, 0}, 1.0), Error);
}

TEST_CASE("rama2_transmit reproduces sqrt(p2) s2 for every 16-QAM pair")
{
    auto q = make_qam(16);
    for (double f : {0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 1.0})
    {
        auto a = PowerAllocation::from_fraction(1.0, f);
        double worst = 0, avg = 0;
        for (auto s1 : q.points())
            for (auto s2 : q.points())
            {
                auto chain = rama2_chain(s1, s2, a);
                worst = std::max(worst, std::abs(chain.tx.tsa2 - std::sqrt(a.p2()) * s2));
                CHECK(std::abs(chain.tx.tsa1 - std::sqrt(a.p1()) * s1) <= tol);
                CHECK(std::abs(std::norm(chain.rf_output) - (a.p1() * std::norm(s1) + a.p2() * std::norm(s2))) <=
                      tol);
                avg += std::norm(chain.rf_output);
            }
        CHECK(worst <= tol);
        CHECK(std::abs(avg / 256.0 - 1.0) <= tol);
    }

    auto all1 = rama2_transmit(q[0], q[7], PowerAllocation(1.0, 0.0));
    CHECK(all1.tsa2 == Symbol(0, 0));
    CHECK_THROWS_AS(rama2_transmit({0, 0}, q[1], PowerAllocation(0.5, 0.5)), Error);
}

TEST_CASE("receive")
{
    ChannelState unit({1, 0}, {1, 0}, 1.0, 1.0);
    CHECK(receive(Symbol{0.3, -0.2}, unit, User::One) == Symbol(0.3, -0.2));

    ChannelState ch({0.5, 0.5}, {2, -1}, 1.0, 1.0);
    auto c = make_psk(8);
    auto tx = rama1_transmit(c[1], c[6], 2.0);
    Symbol n1{0.01, -0.02};
    // user 1 sees only its own beam: sqrt(0.5 p) s1 h1 + n1
    CHECK(std::abs(receive(tx, ch, User::One, n1) - (std::sqrt(1.0) * c[1] * ch.h(User::One) + n1)) <= tol);
    CHECK(std::abs(receive(tx, ch, User::Two) - std::sqrt(1.0) * c[6] * ch.h(User::Two)) <= tol);

    // broadcast: both users see the same x
    Symbol x = superpose(c[1], c[6], PowerAllocation(0.3, 0.7));
    CHECK(receive(x, ch, User::One) == x * ch.h(User::One));
    CHECK(receive(x, ch, User::Two) == x * ch.h(User::Two));
}
