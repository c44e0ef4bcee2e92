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

#ifndef RAMA_MONTECARLO_HPP
#define RAMA_MONTECARLO_HPP

#include "rama/rates.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rama
{

enum class XAxis
{
    SymmetricSnrDb, // p g1 = p g2 = x
    GainRatioDb     // p g2 = anchor, p g1 = x * anchor
};

std::string to_string(XAxis a);
XAxis parse_x_axis(const std::string &name); // "symmetric" or "ratio"

struct FadingConfig
{
    std::uint64_t num_samples = 1;
    std::uint64_t seed = 0;
};

struct SweepConfig
{
    std::vector<Scheme> schemes{Scheme::NOMA, Scheme::RAMA_I};
    XAxis x_axis = XAxis::SymmetricSnrDb;
    std::vector<double> grid_db;  // strictly increasing
    std::vector<double> splits{0.25, 0.5, 0.75}; // p1/p
    double anchor_db = 0.0;       // ratio mode: p g2
    double alpha = 0.5;           // ReconfigNOMA power division
    std::optional<FadingConfig> fading;

    // Throws Error(Validation) whose message starts with the offending field.
    void validate() const;
};

// Uniform dB grid start, start + step, ... up to stop (inclusive, within
// rounding).
std::vector<double> make_grid(double start_db, double stop_db, double step_db);

// -10 ... 40 dB in 1 dB steps for symmetric mode, 0 ... 40 dB for ratio mode.
std::vector<double> default_grid(XAxis axis);

struct SweepRow
{
    double x_db;
    Scheme scheme;
    double split;
    double mean_sum_rate;
    double std_error; // 0 without fading
};

struct SweepResult
{
    std::vector<SweepRow> rows; // ordered by grid point, then scheme, then split
};

// Sum rate of every (scheme, split) pair at every grid point. With fading,
// grid point k draws its realizations from Rng(seed + k) and all
// scheme/split pairs at that point share the same realizations. OMA uses a
// bandwidth fraction equal to the power split.
SweepResult run_sweep(const SweepConfig &cfg);

} // namespace rama

#endif
