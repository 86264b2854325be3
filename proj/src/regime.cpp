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

#include "onebit/regime.hpp"
#include "onebit/types.hpp"

namespace onebit
{

AdcResolution adc_of(Architecture a)
{
    return a == Architecture::OneBit ? AdcResolution::OneBit : AdcResolution::FullRes;
}

EstimationRegime RegimeKey::estimation() const
{
    return {adc_of(architecture), pilots};
}

std::string RegimeKey::name() const
{
    return to_string(architecture) + "_" + to_string(precoder) + "_" + to_string(pilots);
}

std::array<RegimeKey, 12> all_regimes()
{
    std::array<RegimeKey, 12> out{};
    std::size_t i = 0;
    for (auto a : {Architecture::OneBit, Architecture::Mixed, Architecture::Conventional})
        for (auto p : {PrecoderKind::MRT, PrecoderKind::ZF})
            for (auto s : {PilotScheme::Reuse, PilotScheme::Orthogonal})
                out[i++] = RegimeKey{a, p, s};
    return out;
}

std::string to_string(AdcResolution v)
{
    return v == AdcResolution::OneBit ? "onebit" : "fullres";
}

std::string to_string(PilotScheme v)
{
    return v == PilotScheme::Reuse ? "reuse" : "orthogonal";
}

std::string to_string(PrecoderKind v)
{
    return v == PrecoderKind::MRT ? "mrt" : "zf";
}

std::string to_string(Architecture v)
{
    switch (v)
    {
    case Architecture::OneBit:
        return "onebit";
    case Architecture::Mixed:
        return "mixed";
    case Architecture::Conventional:
        return "conventional";
    }
    return "?";
}

std::string to_string(const EstimationRegime &r)
{
    return to_string(r.adc) + "_" + to_string(r.pilots);
}

PilotScheme parse_pilot_scheme(std::string_view s)
{
    if (s == "reuse")
        return PilotScheme::Reuse;
    if (s == "orthogonal")
        return PilotScheme::Orthogonal;
    throw ConfigError("unknown pilot scheme '" + std::string(s) + "' (expected reuse|orthogonal)");
}

PrecoderKind parse_precoder(std::string_view s)
{
    if (s == "mrt")
        return PrecoderKind::MRT;
    if (s == "zf")
        return PrecoderKind::ZF;
    throw ConfigError("unknown precoder '" + std::string(s) + "' (expected mrt|zf)");
}

Architecture parse_architecture(std::string_view s)
{
    if (s == "onebit")
        return Architecture::OneBit;
    if (s == "mixed")
        return Architecture::Mixed;
    if (s == "conventional")
        return Architecture::Conventional;
    throw ConfigError("unknown architecture '" + std::string(s) + "' (expected onebit|mixed|conventional)");
}

} // namespace onebit
