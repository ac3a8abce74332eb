// Copyright 2026 The ccsurf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CCSURF_COLOR_H
#define CCSURF_COLOR_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace ccsurf {

/// Face/edge label of a 2-colex. The cyclic order r -> g -> b -> r fixes
/// which of the two remaining colors is c' and which is c''.
enum class Color : std::uint8_t { Red = 0, Green = 1, Blue = 2 };

inline constexpr std::array<Color, 3> kAllColors{Color::Red, Color::Green, Color::Blue};

constexpr Color next(Color c) { return static_cast<Color>((static_cast<int>(c) + 1) % 3); }

/// The color different from both a and b (a != b).
constexpr Color third(Color a, Color b) { return static_cast<Color>(3 - static_cast<int>(a) - static_cast<int>(b)); }

constexpr int index(Color c) { return static_cast<int>(c); }

constexpr char to_char(Color c) {
    switch (c) {
        case Color::Red:
            return 'r';
        case Color::Green:
            return 'g';
        default:
            return 'b';
    }
}

inline std::string to_string(Color c) { return std::string(1, to_char(c)); }

inline std::optional<Color> parse_color(const std::string& s) {
    if (s == "r") {
        return Color::Red;
    }
    if (s == "g") {
        return Color::Green;
    }
    if (s == "b") {
        return Color::Blue;
    }
    return std::nullopt;
}

/// (c, c', c'') for a contraction color c.
struct ColorRoles {
    Color contracted;
    Color primed;
    Color double_primed;

    static constexpr ColorRoles for_contraction(Color c) { return {c, next(c), next(next(c))}; }
};

}  // namespace ccsurf

#endif
