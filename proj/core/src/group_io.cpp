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

#include "distnum/group_io.hpp"

#include <cctype>
#include <istream>
#include <optional>
#include <sstream>

#include "distnum/errors.hpp"

namespace distnum {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') {
      throw InputError("expected '(' at column " + std::to_string(i + 1));
    }
    ++i;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip_space();
      if (i >= text.size()) throw InputError("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw InputError(std::string("unexpected character '") + text[i] + "' at column " +
                         std::to_string(i + 1));
      }
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > kMaxPointCount) throw InputError("point number too large");
        ++i;
      }
      if (value == 0) throw InputError("points are numbered from 1");
      cycle.push_back(value - 1);
    }
    if (cycle.size() >= 2) cycles.push_back(std::move(cycle));
    skip_space();
  }
  return Permutation::from_cycles(degree, cycles);
}

PermGroup read_group(std::istream& in, const GroupLimits& limits) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> degree;
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    try {
      if (!degree) {
        std::istringstream words{std::string(body)};
        std::string keyword;
        long long value = -1;
        std::string rest;
        if (!(words >> keyword >> value) || keyword != "degree" || (words >> rest)) {
          throw InputError("expected 'degree <m>'");
        }
        if (value < 0 || static_cast<std::size_t>(value) > kMaxPointCount) {
          throw InputError("degree out of range");
        }
        degree = static_cast<std::size_t>(value);
        continue;
      }
      gens.push_back(parse_cycles(body, *degree));
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!degree) throw InputError("missing 'degree <m>' header");
  return PermGroup::generate(*degree, std::move(gens), limits);
}

PermGroup parse_group(std::string_view text, const GroupLimits& limits) {
  std::istringstream in{std::string(text)};
  return read_group(in, limits);
}

std::string format_group(const PermGroup& g) {
  std::string out = "degree " + std::to_string(g.degree()) + "\n";
  for (const auto& gen : g.generators()) out += gen.to_string() + "\n";
  return out;
}

}  // namespace distnum
