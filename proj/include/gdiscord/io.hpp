// Copyright 2026 The gdiscord Authors
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

#ifndef GDISCORD_IO_HPP
#define GDISCORD_IO_HPP

#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "gdiscord/channels.hpp"
#include "gdiscord/discord.hpp"
#include "gdiscord/family.hpp"
#include "gdiscord/remote_prep.hpp"
#include "gdiscord/sampler.hpp"
#include "gdiscord/symplectic.hpp"

namespace gdiscord {

using json = nlohmann::json;

/// Significant digits of every serialized number.
inline constexpr int kOutputDigits = 12;

/// Shortest locale-independent decimal with at most 12 significant digits.
std::string format_number(double x);

/// x rounded to 12 significant digits, so that JSON dumps print at most 12.
double round_significant(double x);

/// A state read from JSON. `normal_form` is set when the input carried one or
/// when `cm` already is in normal form.
struct ParsedState {
  TwoModeCM cm;
  std::optional<NormalFormCM> normal_form;
};

/// Accepts {"normal_form": {"a", "b", "c", "cp"}} and/or {"cm": M} where M is
/// 16 numbers row-major or a 4x4 nested array. When both are present they must
/// agree to 1e-9. Throws ValidationError.
ParsedState parse_state(const json& j);

/// {"tau": number, "eta": number}. Throws ValidationError or
/// InvalidChannelParams.
GaussianChannel parse_channel(const json& j);

/// {"u": number | "inf", "phi": number} or {"seed_cm": [[..],[..]]}.
GaussianMeasurement parse_measurement(const json& j);

/// Parses JSON text, mapping syntax errors to ValidationError.
json parse_json_text(const std::string& text);

json to_json(const NormalFormCM& nf);
json to_json(const FamilyParams& fp);
json to_json(const ChannelClassification& c);
json to_json(const DiscordReport& r);
json to_json(const ConditionalState& s);
json to_json(const GaussianMeasurement& m);
json to_json(const OccupancyGrid& g);

/// Header a,b,c,cp,r,tau,eta,sign then one row per point.
void write_samples_csv(std::ostream& os, const SampleResult& samples);

}  // namespace gdiscord

#endif  // GDISCORD_IO_HPP
