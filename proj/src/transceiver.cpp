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

#include "rama/transceiver.hpp"
#include "rama/error.hpp"

#include <algorithm>
#include <cmath>

namespace rama
{

PowerAllocation::PowerAllocation(double p1, double p2) : p1_(p1), p2_(p2)
{
    if (!(p1 >= 0.0) || !(p2 >= 0.0) || !std::isfinite(p1) || !std::isfinite(p2))
        throw Error(ErrorKind::InvalidParameter, "per-user powers must be finite and >= 0");
    if (!(p1 + p2 > 0.0))
        throw Error(ErrorKind::InvalidParameter, "total power must be positive");
}

PowerAllocation PowerAllocation::from_fraction(double p, double fraction)
{
    if (!(p > 0.0) || !std::isfinite(p))
        throw Error(ErrorKind::InvalidParameter, "total power must be positive and finite");
    if (!(fraction >= 0.0 && fraction <= 1.0))
        throw Error(ErrorKind::InvalidParameter, "power fraction must lie in [0, 1]");
    double p1 = fraction * p;
    return PowerAllocation(p1, p - p1);
}

Symbol superpose(Symbol s1, Symbol s2, const PowerAllocation &alloc)
{
    return std::sqrt(alloc.p1()) * s1 + std::sqrt(alloc.p2()) * s2;
}

TxSignal reconfig_noma_split(Symbol x, double alpha)
{
    if (!(alpha > 0.0 && alpha < 1.0))
        throw Error(ErrorKind::InvalidSplit, "power-division factor must lie in (0, 1)");
    return {std::sqrt(alpha) * x, std::sqrt(1.0 - alpha) * x};
}

TxSignal rama1_transmit(Symbol s1, Symbol s2, double p)
{
    if (!(p >= 0.0))
        throw Error(ErrorKind::InvalidParameter, "total power must be >= 0");
    double a1 = std::abs(s1), a2 = std::abs(s2);
    if (a1 == 0.0 || std::abs(a1 - a2) > 1e-12 * std::max(a1, a2))
        throw Error(ErrorKind::PskRequired, "equal power division needs equal-modulus nonzero symbols");

    // s_bar is 1 here; only the phase detector output is used
    SymbolRelation rel = relate(s1, s2);
    const double amp = std::sqrt(0.5 * p);
    Symbol feed = amp * s1;
    return {feed, feed * std::polar(1.0, rel.delta_theta)};
}

Rama2Chain rama2_chain(Symbol s1, Symbol s2, const PowerAllocation &alloc)
{
    SymbolRelation rel = relate(s1, s2);
    const double p1 = alloc.p1(), p2 = alloc.p2();
    Symbol x = std::sqrt(p1 + p2 * rel.s_bar * rel.s_bar) * s1;
    Symbol tsa1 = std::sqrt(p1) * s1;
    Symbol scaled = std::sqrt(p2) * rel.s_bar * s1;
    return {x, {tsa1, scaled * std::polar(1.0, rel.delta_theta)}};
}

TxSignal rama2_transmit(Symbol s1, Symbol s2, const PowerAllocation &alloc)
{
    return rama2_chain(s1, s2, alloc).tx;
}

Symbol receive(Symbol incident, const ChannelState &ch, User user, Symbol noise)
{
    return incident * ch.h(user) + noise;
}

Symbol receive(const TxSignal &tx, const ChannelState &ch, User user, Symbol noise)
{
    return receive(tx.feed(user), ch, user, noise);
}

} // namespace rama
