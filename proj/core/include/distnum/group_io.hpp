// Copyright 2026 The distnum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DISTNUM_GROUP_IO_HPP
#define DISTNUM_GROUP_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "distnum/perm_group.hpp"

namespace distnum {

/// Parses 1-based cycle notation such as "(1 2)(3 4 5)" or "(1,2,3)".
/// "()" and the empty string denote the identity.
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// Reads the group text format:
///
///     # comment
///     degree 6
///     (1 2)(3 4)
///     (1 2 3 4 5 6)
///
/// One generator per line. Errors carry the offending line number.
PermGroup read_group(std::istream& in, const GroupLimits& limits = {});
PermGroup parse_group(std::string_view text, const GroupLimits& limits = {});

/// Writes the same format back, one generator per line.
std::string format_group(const PermGroup& g);

}  // namespace distnum

#endif  // DISTNUM_GROUP_IO_HPP
