// SPDX-License-Identifier: Apache-2.0
//
// wetkit: planning and simulation toolkit for RF wireless energy transfer networks
// Copyright (C) 2026 The wetkit authors
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

#include "wet/ambient.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

bool wet::Rect::contains(const Position2D &p) const noexcept
{
    return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
}

wet::Position2D wet::Rect::clamp(const Position2D &p) const noexcept
{
    return {std::clamp(p.x, xmin, xmax), std::clamp(p.y, ymin, ymax)};
}

void wet::AmbientMap::validate() const
{
    if (components.empty())
        throw std::invalid_argument("ambient map has no components");
    if (!area.has_positive_extent())
        throw std::invalid_argument("ambient map area has zero extent");
    for (const auto &c : components)
    {
        if (!(c.weight >= 0.0) || !std::isfinite(c.weight))
            throw std::invalid_argument("ambient component weight must be non-negative");
        if (!(c.width > 0.0))
            throw std::invalid_argument("ambient component width must be positive");
    }
}

double wet::ambient_power(const AmbientMap &map, const Position2D &pos)
{
    if (!map.area.contains(pos))
        throw std::out_of_range("position (" + std::to_string(pos.x) + ", " + std::to_string(pos.y) +
                                ") lies outside the ambient map area");
    double total = 0.0;
    for (const auto &c : map.components)
    {
        const double dx = pos.x - c.center.x;
        const double dy = pos.y - c.center.y;
        total += c.weight * std::exp(-(dx * dx + dy * dy) / (2.0 * c.width * c.width));
    }
    return total;
}

double wet::transmit_power(const AmbientMap &map, const Position2D &pos, double cap)
{
    if (!(cap > 0.0))
        throw std::invalid_argument("transmit power cap must be positive");
    return std::min(ambient_power(map, pos), cap);
}
