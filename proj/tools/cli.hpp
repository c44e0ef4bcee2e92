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

#ifndef RAMA_TOOLS_CLI_HPP
#define RAMA_TOOLS_CLI_HPP

#include "rama/constellations.hpp"
#include "rama/montecarlo.hpp"
#include "rama/region.hpp"

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rama::cli
{

inline constexpr int config_schema_version = 1;

// Process exit codes.
enum ExitCode : int
{
    exit_ok = 0,
    exit_runtime = 1,
    exit_validation = 2
};

// Configuration problem tied to one key.
class ConfigError : public std::runtime_error
{
  public:
    ConfigError(std::string key, const std::string &msg)
        : std::runtime_error(key + ": " + msg), key_(std::move(key))
    {
    }
    const std::string &key() const noexcept { return key_; }

  private:
    std::string key_;
};

// Flat "key = value" text. '#' starts a comment line. When the text is a
// previous output file, only its "# config: key = value" echo lines are read,
// so an output can be fed back with --config to reproduce it.
using KeyValues = std::map<std::string, std::string>;
KeyValues parse_key_values(std::string_view text);

// Shortest text that parses back to the same double.
std::string format_double(double v);
// Fixed 6 significant digits, as written to CSV rows.
std::string format_csv(double v);

struct RegionParams
{
    double g1_db = 15.0;
    double g2_db = 15.0;
    std::vector<Scheme> schemes{Scheme::OMA, Scheme::NOMA, Scheme::RAMA_II};
    std::size_t n = default_grid_resolution;
    double alpha = 0.5;
};

struct SweepParams
{
    SweepConfig sweep;
    std::string grid_text; // canonical, as echoed
    std::uint64_t samples = 0;
    std::uint64_t seed = 1;
};

enum class ChainCheck
{
    Rama1,
    Rama2
};

struct SignalCheckParams
{
    Modulation constellation = Modulation::PSK;
    int order = 8;
    ChainCheck scheme = ChainCheck::Rama1;
    std::vector<double> splits{0.1, 0.3, 0.5, 0.7, 0.9};
    double power = 1.0;
};

// Key lists, typed parsing and canonical echo for each subcommand.
const std::vector<std::string> &region_keys();
const std::vector<std::string> &sweep_keys();
const std::vector<std::string> &signal_check_keys();

RegionParams parse_region(const KeyValues &kv);
SweepParams parse_sweep(const KeyValues &kv);
SignalCheckParams parse_signal_check(const KeyValues &kv);

KeyValues echo(const RegionParams &p);
KeyValues echo(const SweepParams &p);
KeyValues echo(const SignalCheckParams &p);

// Full output documents (metadata comments + CSV body).
std::string write_region_csv(const RegionParams &p);
std::string write_sweep_csv(const SweepParams &p);

struct CheckLine
{
    std::string check;
    double split; // negative when not applicable
    std::size_t pairs;
    double max_abs_error;
    bool pass() const { return max_abs_error <= 1e-12; }
};

// Exhaustive transmit-chain verification over all ordered symbol pairs.
std::vector<CheckLine> run_signal_check(const SignalCheckParams &p);
std::string write_signal_check_report(const SignalCheckParams &p, const std::vector<CheckLine> &lines);

// Entry point shared by the executable and the tests.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace rama::cli

#endif
