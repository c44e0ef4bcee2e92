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

#ifndef RAMA_ERROR_HPP
#define RAMA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rama
{

enum class ErrorKind
{
    InvalidOrder,     // constellation order not supported
    UndefinedRatio,   // amplitude ratio against a zero reference symbol
    InvalidParameter, // nonpositive gain, noise power, negative power ...
    InvalidSplit,     // power-division factor outside (0,1)
    PskRequired,      // equal power division with unequal-modulus symbols
    InvalidOrdering,  // user 1 weaker than user 2 where the opposite is required
    OutOfRange,       // lookup outside a frontier
    UnknownScheme,
    Validation        // experiment configuration; message starts with the field name
};

const char *to_string(ErrorKind kind);

// All library errors derive from std::invalid_argument so callers that only
// care about "bad input" can catch that.
class Error : public std::invalid_argument
{
  public:
    Error(ErrorKind kind, const std::string &what)
        : std::invalid_argument(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

inline const char *to_string(ErrorKind kind)
{
    switch (kind)
    {
    case ErrorKind::InvalidOrder:
        return "invalid-order";
    case ErrorKind::UndefinedRatio:
        return "undefined-ratio";
    case ErrorKind::InvalidParameter:
        return "invalid-parameter";
    case ErrorKind::InvalidSplit:
        return "invalid-split";
    case ErrorKind::PskRequired:
        return "psk-required";
    case ErrorKind::InvalidOrdering:
        return "invalid-ordering";
    case ErrorKind::OutOfRange:
        return "out-of-range";
    case ErrorKind::UnknownScheme:
        return "unknown-scheme";
    case ErrorKind::Validation:
        return "validation";
    }
    return "error";
}

} // namespace rama

#endif
