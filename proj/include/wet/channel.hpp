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

#include "wet/random.hpp"

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

namespace wet
{
    using cplx = std::complex<double>;
    using CVector = Eigen::VectorXcd;

    struct Position2D
    {
        double x = 0.0; // meters
        double y = 0.0; // meters

        bool operator==(const Position2D &) const = default;
    };

    double distance(const Position2D &a, const Position2D &b) noexcept;

    // Log-distance path loss with a fixed (distance independent) loss term.
    struct PathLossParams
    {
        double exponent = 2.7;
        double fixed_loss_db = 40.0;
        double reference_distance = 1.0; // meters, near-field clamp

        void validate() const;
    };

    // Rician K factor in linear scale. K = 0 is Rayleigh fading.
    struct RicianParams
    {
        double k_factor = 10.0;

        void validate() const;
    };

    // Uniform linear array. Element 0 is the phase reference; angles are measured from broadside.
    struct ArrayConfig
    {
        int n_antennas = 1;
        double element_spacing = 0.5; // wavelengths

        void validate() const;
    };

    struct TransmitterField
    {
        std::vector<Position2D> positions;
        double tx_power = 1.0; // watts per transmitter
    };

    // Linear power gain 10^(-L/10) * (max(d, d0) / d0)^(-alpha).
    double path_gain(double d, const PathLossParams &p);

    // Homogeneous Poisson point process on a disk of the given radius centered at `center`.
    std::vector<Position2D> sample_hppp(double density, double radius, Rng &rng, Position2D center = {});
    std::vector<Position2D> sample_hppp(double density, double radius, std::uint64_t seed, Position2D center = {});

    // ULA response, element m = exp(j 2 pi spacing m sin(theta)).
    CVector steering_vector(double theta, const ArrayConfig &a);

    // Angle of `source` seen from `device`. The array axis lies along y, broadside along +x,
    // so sin(theta) = (source.y - device.y) / d. Zero when the points coincide.
    double arrival_angle(const Position2D &source, const Position2D &device) noexcept;

    // Amplitude channel including path loss:
    //   h = sqrt(G(d)) * ( sqrt(K/(K+1)) a(theta) + sqrt(1/(K+1)) g ),  g ~ CN(0, I).
    // Diffuse entries are drawn in element order, so the channel for M antennas is the
    // prefix of the channel for M+1 antennas under the same generator state.
    CVector sample_channel(const Position2D &source, const Position2D &device, const ArrayConfig &a,
                           const RicianParams &r, const PathLossParams &p, Rng &rng);
    CVector sample_channel(const Position2D &source, const Position2D &device, const ArrayConfig &a,
                           const RicianParams &r, const PathLossParams &p, std::uint64_t seed);
}
