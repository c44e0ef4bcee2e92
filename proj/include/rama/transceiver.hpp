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

#ifndef RAMA_TRANSCEIVER_HPP
#define RAMA_TRANSCEIVER_HPP

#include "rama/channel.hpp"
#include "rama/constellations.hpp"

namespace rama
{

// Per-user transmit powers. p1 + p2 = p.
class PowerAllocation
{
  public:
    PowerAllocation(double p1, double p2);

    // p1 = fraction * p, p2 = p - p1
    static PowerAllocation from_fraction(double p, double fraction);

    double p() const noexcept { return p1_ + p2_; }
    double p1() const noexcept { return p1_; }
    double p2() const noexcept { return p2_; }
    double power(User u) const noexcept { return u == User::One ? p1_ : p2_; }
    double fraction1() const noexcept { return p1_ / p(); }

  private:
    double p1_, p2_;
};

// Signals fed to the two tapered-slot feeds (one beam per user).
struct TxSignal
{
    Symbol tsa1;
    Symbol tsa2;

    Symbol feed(User u) const { return u == User::One ? tsa1 : tsa2; }
    double power() const { return std::norm(tsa1) + std::norm(tsa2); }
};

// sqrt(p1) s1 + sqrt(p2) s2
Symbol superpose(Symbol s1, Symbol s2, const PowerAllocation &alloc);

// Power division of one RF-chain signal x between the two feeds, alpha in (0,1).
TxSignal reconfig_noma_split(Symbol x, double alpha);

// Equal-power chain: both feeds carry sqrt(p/2) s1, feed 2 is then rotated by
// the phase difference to s2. Requires |s1| = |s2| (PSK).
TxSignal rama1_transmit(Symbol s1, Symbol s2, double p);

// Full-CSI chain. The RF chain emits x = sqrt(p1 + p2 s_bar^2) s1, which the
// beam-selection network divides into sqrt(p1) s1 and sqrt(p2) s_bar s1; feed 2
// is then rotated by exp(j delta_theta).
struct Rama2Chain
{
    Symbol rf_output; // pre-split x
    TxSignal tx;
};

Rama2Chain rama2_chain(Symbol s1, Symbol s2, const PowerAllocation &alloc);
TxSignal rama2_transmit(Symbol s1, Symbol s2, const PowerAllocation &alloc);

// y = incident * h_user + noise
Symbol receive(Symbol incident, const ChannelState &ch, User user, Symbol noise = {});

// Directional reception: user u only sees its own feed, no leakage from the other beam.
Symbol receive(const TxSignal &tx, const ChannelState &ch, User user, Symbol noise = {});

} // namespace rama

#endif
