// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The onebit-mimo authors
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

#pragma once

#include <array>
#include <string>
#include <string_view>

namespace onebit
{

enum class AdcResolution
{
    OneBit,
    FullRes
};

// Reuse: every cell uses the same K pilots (pilot length K).
// Orthogonal: all K*L users get distinct pilots (pilot length K*L).
enum class PilotScheme
{
    Reuse,
    Orthogonal
};

enum class PrecoderKind
{
    MRT,
    ZF
};

// OneBit: one-bit ADCs and DACs. Mixed: full-resolution ADCs, one-bit DACs.
// Conventional: full-resolution ADCs and DACs.
enum class Architecture
{
    OneBit,
    Mixed,
    Conventional
};

struct EstimationRegime
{
    AdcResolution adc = AdcResolution::OneBit;
    PilotScheme pilots = PilotScheme::Reuse;
};

struct RegimeKey
{
    Architecture architecture = Architecture::OneBit;
    PrecoderKind precoder = PrecoderKind::MRT;
    PilotScheme pilots = PilotScheme::Reuse;

    EstimationRegime estimation() const;
    bool quantized_dac() const { return architecture != Architecture::Conventional; }
    std::string name() const;
};

inline bool operator==(const RegimeKey &a, const RegimeKey &b)
{
    return a.architecture == b.architecture && a.precoder == b.precoder && a.pilots == b.pilots;
}

AdcResolution adc_of(Architecture a);

// All 12 architecture x precoder x pilot combinations, in a fixed order.
std::array<RegimeKey, 12> all_regimes();

std::string to_string(AdcResolution v);
std::string to_string(PilotScheme v);
std::string to_string(PrecoderKind v);
std::string to_string(Architecture v);
std::string to_string(const EstimationRegime &r);

// Parsers accept the lowercase names produced by to_string; throw ConfigError otherwise.
PilotScheme parse_pilot_scheme(std::string_view s);
PrecoderKind parse_precoder(std::string_view s);
Architecture parse_architecture(std::string_view s);

} // namespace onebit
