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

#pragma once

#include "wet/channel.hpp"

#include <vector>

namespace wet
{
    struct Rect
    {
        double xmin = 0.0, ymin = 0.0, xmax = 0.0, ymax = 0.0;

        double width() const noexcept { return xmax - xmin; }
        double height() const noexcept { return ymax - ymin; }
        bool has_positive_extent() const noexcept { return width() > 0.0 && height() > 0.0; }
        bool contains(const Position2D &p) const noexcept;
        Position2D clamp(const Position2D &p) const noexcept;
    };

    struct GaussianComponent
    {
        double weight = 0.0; // peak available power, watts
        Position2D center;
        double width = 1.0; // isotropic standard deviation, meters
    };

    // Average ambient power available to a green power beacon, modelled as a sum of
    // isotropic Gaussian bumps over a rectangular service area.
    struct AmbientMap
    {
        std::vector<GaussianComponent> components;
        Rect area;

        void validate() const;
    };

    // Throws std::out_of_range if pos lies outside map.area.
    double ambient_power(const AmbientMap &map, const Position2D &pos);

    // Harvested ambient power is spent as transmit power, limited by the hardware cap.
    double transmit_power(const AmbientMap &map, const Position2D &pos, double cap);
}
