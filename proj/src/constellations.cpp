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

#include "rama/constellations.hpp"
#include "rama/error.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace rama
{

namespace
{
constexpr double two_pi = 2.0 * std::numbers::pi;

double wrap_angle(double a)
{
    a = std::fmod(a, two_pi);
    if (a < 0.0)
        a += two_pi;
    if (a >= two_pi) // fmod of a tiny negative can land exactly on 2*pi
        a = 0.0;
    return a;
}

int integer_sqrt(int n)
{
    int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    return (r * r == n) ? r : -1;
}
} // namespace

std::string to_string(Modulation m)
{
    return m == Modulation::PSK ? "psk" : "qam";
}

Modulation parse_modulation(const std::string &name)
{
    if (name == "psk")
        return Modulation::PSK;
    if (name == "qam")
        return Modulation::QAM;
    throw Error(ErrorKind::InvalidParameter, "unknown constellation '" + name + "' (expected psk or qam)");
}

Constellation::Constellation(Modulation kind, std::vector<Symbol> points)
    : kind_(kind), points_(std::move(points))
{
}

double Constellation::mean_power() const
{
    double acc = 0.0;
    for (const auto &s : points_)
        acc += std::norm(s);
    return acc / static_cast<double>(points_.size());
}

std::size_t Constellation::nearest(Symbol s) const
{
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < points_.size(); ++i)
    {
        double d = std::norm(points_[i] - s);
        if (d < best_d)
        {
            best_d = d;
            best = i;
        }
    }
    return best;
}

Constellation make_psk(int order)
{
    if (order < 2)
        throw Error(ErrorKind::InvalidOrder, "PSK order must be >= 2, got " + std::to_string(order));

    std::vector<Symbol> pts;
    pts.reserve(static_cast<std::size_t>(order));
    for (int k = 0; k < order; ++k)
    {
        // Quadrant points are placed exactly so BPSK/QPSK have no rounding residue.
        if ((4 * k) % order == 0)
        {
            static constexpr Symbol quarters[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
            pts.push_back(quarters[(4 * k) / order]);
        }
        else
        {
            pts.push_back(std::polar(1.0, two_pi * k / order));
        }
    }
    return Constellation(Modulation::PSK, std::move(pts));
}

Constellation make_qam(int order)
{
    int side = order >= 4 ? integer_sqrt(order) : -1;
    if (side < 2)
        throw Error(ErrorKind::InvalidOrder,
                    "QAM order must be a perfect square >= 4, got " + std::to_string(order));

    // mean of a^2 + b^2 over the odd grid {-(L-1), ..., L-1} is 2(L^2 - 1)/3
    const double scale = 1.0 / std::sqrt(2.0 * (side * side - 1) / 3.0);

    std::vector<Symbol> pts;
    pts.reserve(static_cast<std::size_t>(order));
    for (int row = 0; row < side; ++row)
    {
        double im = static_cast<double>(side - 1 - 2 * row);
        for (int col = 0; col < side; ++col)
        {
            double re = static_cast<double>(2 * col - (side - 1));
            pts.emplace_back(re * scale, im * scale);
        }
    }
    return Constellation(Modulation::QAM, std::move(pts));
}

Constellation make_constellation(Modulation kind, int order)
{
    return kind == Modulation::PSK ? make_psk(order) : make_qam(order);
}

Symbol SymbolRelation::apply(Symbol s1) const
{
    return s1 * s_bar * std::polar(1.0, delta_theta);
}

SymbolRelation relate(Symbol s1, Symbol s2)
{
    if (s1 == Symbol{0.0, 0.0})
        throw Error(ErrorKind::UndefinedRatio, "reference symbol s1 is zero");

    SymbolRelation rel;
    rel.s_bar = std::abs(s2) / std::abs(s1);
    rel.delta_theta = s2 == Symbol{0.0, 0.0} ? 0.0 : wrap_angle(std::arg(s2) - std::arg(s1));
    return rel;
}

SymbolRelation relate(const Constellation &c, std::size_t i, std::size_t j)
{
    if (i >= c.order() || j >= c.order())
        throw Error(ErrorKind::OutOfRange, "symbol index outside constellation");

    if (c.kind() == Modulation::PSK)
    {
        const std::size_t m = c.order();
        std::size_t steps = (j + m - i) % m;
        return SymbolRelation{two_pi * static_cast<double>(steps) / static_cast<double>(m), 1.0};
    }
    return relate(c[i], c[j]);
}

} // namespace rama
