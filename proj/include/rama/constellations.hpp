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

#ifndef RAMA_CONSTELLATIONS_HPP
#define RAMA_CONSTELLATIONS_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace rama
{

using Symbol = std::complex<double>;

enum class Modulation
{
    PSK,
    QAM
};

std::string to_string(Modulation m);
Modulation parse_modulation(const std::string &name); // "psk" or "qam"

// A finite set of unit-average-power symbols.
//
// Point order is fixed so that output produced from a constellation is
// reproducible:
//   PSK: increasing angle, point k at 2*pi*k/M
//   QAM: row-major over the L x L grid, rows from the largest imaginary
//        coordinate down, columns from the smallest real coordinate up
class Constellation
{
  public:
    Modulation kind() const noexcept { return kind_; }
    std::size_t order() const noexcept { return points_.size(); }
    std::span<const Symbol> points() const noexcept { return points_; }
    const Symbol &operator[](std::size_t i) const { return points_.at(i); }

    double mean_power() const;

    // Index of the point closest to s (Euclidean distance).
    std::size_t nearest(Symbol s) const;

  private:
    Constellation(Modulation kind, std::vector<Symbol> points);

    Modulation kind_;
    std::vector<Symbol> points_;

    friend Constellation make_psk(int order);
    friend Constellation make_qam(int order);
};

// M-PSK on the unit circle, M >= 2.
Constellation make_psk(int order);

// Square M-QAM (M = L^2 >= 4) on the odd-integer grid scaled to unit average power.
Constellation make_qam(int order);

Constellation make_constellation(Modulation kind, int order);

// Phase rotation and amplitude ratio taking s1 to s2: s2 = s1 * s_bar * exp(j*delta_theta).
struct SymbolRelation
{
    double delta_theta = 0.0; // [0, 2*pi)
    double s_bar = 1.0;       // |s2| / |s1|

    Symbol apply(Symbol s1) const;
};

SymbolRelation relate(Symbol s1, Symbol s2);

// Relation between points i and j of c. For PSK this is exact: s_bar = 1 and
// delta_theta = 2*pi*((j - i) mod M)/M.
SymbolRelation relate(const Constellation &c, std::size_t i, std::size_t j);

} // namespace rama

#endif
