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

#include <cstdint>
#include <random>

namespace wet
{
    using Rng = std::mt19937_64;

    // SplitMix64 finalizer. Bijective on 64-bit words.
    std::uint64_t mix64(std::uint64_t x) noexcept;

    // Counter-based sub-seed: a pure function of (seed, stream, index), so draws do not
    // depend on the order in which trials or restarts are evaluated.
    std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index = 0) noexcept;

    Rng make_rng(std::uint64_t seed);

    // Named streams used across modules.
    namespace stream
    {
        inline constexpr std::uint64_t field = 1;
        inline constexpr std::uint64_t fading = 2;
        inline constexpr std::uint64_t trial = 3;
        inline constexpr std::uint64_t restart = 4;
        inline constexpr std::uint64_t devices = 5;
        inline constexpr std::uint64_t randomization = 6;
        inline constexpr std::uint64_t baseline = 7;
    }
}
