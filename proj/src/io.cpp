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

#include "gdiscord/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <system_error>

#include "gdiscord/errors.hpp"

namespace gdiscord {

namespace {

double number_field(const json& obj, const char* key) {
  if (!obj.contains(key)) {
    throw ValidationError(std::string("missing field \"") + key + "\"");
  }
  const json& v = obj.at(key);
  if (!v.is_number()) {
    throw ValidationError(std::string("field \"") + key + "\" must be a number");
  }
  return v.get<double>();
}

Mat4 parse_matrix4(const json& j) {
  Mat4 m;
  if (j.is_array() && j.size() == 16) {
    for (int k = 0; k < 16; ++k) {
      if (!j[k].is_number()) throw ValidationError("\"cm\" entries must be numbers");
      m(k / 4, k % 4) = j[k].get<double>();
    }
    return m;
  }
  // A single row holding all 16 entries is accepted as well.
  if (j.is_array() && j.size() == 1 && j[0].is_array() && j[0].size() == 16) {
    return parse_matrix4(j[0]);
  }
  if (j.is_array() && j.size() == 4) {
    for (int r = 0; r < 4; ++r) {
      if (!j[r].is_array() || j[r].size() != 4) {
        throw ValidationError("\"cm\" must be 16 numbers or a 4x4 array");
      }
      for (int c = 0; c < 4; ++c) {
        if (!j[r][c].is_number()) throw ValidationError("\"cm\" entries must be numbers");
        m(r, c) = j[r][c].get<double>();
      }
    }
    return m;
  }
  throw ValidationError("\"cm\" must be 16 numbers or a 4x4 array");
}

json number_or_inf(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return round_significant(x);
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  // Round to 12 digits first, then print the shortest representation of the
  // rounded value so trailing zeros disappear.
  const double rounded = round_significant(x);
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), rounded);
  return std::string(buf.data(), res.ptr);
}

double round_significant(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                 std::chars_format::scientific, kOutputDigits - 1);
  double out = 0.0;
  std::from_chars(buf.data(), res.ptr, out);
  return out;
}

ParsedState parse_state(const json& j) {
  if (!j.is_object()) throw ValidationError("state JSON must be an object");
  const bool has_nf = j.contains("normal_form");
  const bool has_cm = j.contains("cm");
  if (!has_nf && !has_cm) {
    throw ValidationError("state JSON needs \"normal_form\" or \"cm\"");
  }

  std::optional<NormalFormCM> nf;
  if (has_nf) {
    const json& o = j.at("normal_form");
    if (!o.is_object()) throw ValidationError("\"normal_form\" must be an object");
    nf = NormalFormCM{number_field(o, "a"), number_field(o, "b"), number_field(o, "c"),
                      number_field(o, "cp")};
  }

  std::optional<TwoModeCM> cm;
  if (has_cm) {
    try {
      cm = TwoModeCM(parse_matrix4(j.at("cm")));
    } catch (const DomainError& e) {
      throw ValidationError(e.what());
    }
  }

  if (nf && cm) {
    const double diff = normal_form_residual(*cm, *nf);
    if (diff > 1e-9) {
      throw ValidationError("\"cm\" and \"normal_form\" disagree (max diff " +
                            format_number(diff) + ")");
    }
  }

  ParsedState out;
  out.cm = cm ? *cm : embed_normal_form(*nf);
  out.normal_form = nf;
  if (!nf) {
    // Carry the normal form along when the matrix already has that shape.
    const Mat4& m = out.cm.matrix();
    const NormalFormCM guess{m(0, 0), m(2, 2), m(0, 2), m(1, 3)};
    if (normal_form_residual(out.cm, guess) == 0.0) out.normal_form = guess;
  }
  return out;
}

GaussianChannel parse_channel(const json& j) {
  if (!j.is_object()) throw ValidationError("channel JSON must be an object");
  return {number_field(j, "tau"), number_field(j, "eta")};
}

GaussianMeasurement parse_measurement(const json& j) {
  if (!j.is_object()) throw ValidationError("measurement JSON must be an object");
  if (j.contains("seed_cm")) {
    const json& s = j.at("seed_cm");
    if (!s.is_array() || s.size() != 2 || !s[0].is_array() || !s[1].is_array() ||
        s[0].size() != 2 || s[1].size() != 2) {
      throw ValidationError("\"seed_cm\" must be a 2x2 array");
    }
    Mat2 v0;
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        if (!s[r][c].is_number()) throw ValidationError("\"seed_cm\" entries must be numbers");
        v0(r, c) = s[r][c].get<double>();
      }
    }
    return GaussianMeasurement::from_seed_cm(v0);
  }
  double u = 1.0;
  if (j.contains("u")) {
    const json& ju = j.at("u");
    if (ju.is_string() && ju.get<std::string>() == "inf") {
      u = std::numeric_limits<double>::infinity();
    } else if (ju.is_number()) {
      u = ju.get<double>();
    } else {
      throw ValidationError("field \"u\" must be a number or \"inf\"");
    }
  }
  const double phi = j.contains("phi") ? number_field(j, "phi") : 0.0;
  return {u, phi};
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

json to_json(const NormalFormCM& nf) {
  return {{"a", round_significant(nf.a)},
          {"b", round_significant(nf.b)},
          {"c", round_significant(nf.c)},
          {"cp", round_significant(nf.cp)}};
}

json to_json(const FamilyParams& fp) {
  return {{"b", round_significant(fp.b)},     {"r", round_significant(fp.r)},
          {"tau", round_significant(fp.tau)}, {"eta", round_significant(fp.eta)},
          {"sign", to_int(fp.sign)},          {"xi", round_significant(fp.xi())}};
}

json to_json(const ChannelClassification& c) {
  json j = {{"label", to_string(c.label)}};
  j["omega"] = c.omega ? json(round_significant(*c.omega)) : json(nullptr);
  j["n_bar"] = c.n_bar ? json(round_significant(*c.n_bar)) : json(nullptr);
  return j;
}

json to_json(const DiscordReport& r) {
  json j = {{"method", to_string(r.method)},
            {"S_A", round_significant(r.s_a)},
            {"S_B", round_significant(r.s_b)},
            {"S_AB", round_significant(r.s_ab)},
            {"I_AB", round_significant(r.mutual_info)},
            {"S_min_cond", round_significant(r.s_min_cond)},
            {"classical_corr", round_significant(r.classical_corr)},
            {"discord", round_significant(r.discord)}};
  if (r.witness) {
    j["u_star"] = number_or_inf(r.witness->u());
    j["phi_star"] = round_significant(r.witness->phi());
  } else {
    j["u_star"] = nullptr;
    j["phi_star"] = nullptr;
  }
  return j;
}

json to_json(const ConditionalState& s) {
  return {{"mean", {round_significant(s.mean(0)), round_significant(s.mean(1))}},
          {"cm",
           {{round_significant(s.cm(0, 0)), round_significant(s.cm(0, 1))},
            {round_significant(s.cm(1, 0)), round_significant(s.cm(1, 1))}}}};
}

json to_json(const GaussianMeasurement& m) {
  return {{"u", number_or_inf(m.u())}, {"phi", round_significant(m.phi())}};
}

json to_json(const OccupancyGrid& g) {
  return {{"a", round_significant(g.a)},
          {"b", round_significant(g.b)},
          {"extent", round_significant(g.extent)},
          {"bins", g.bins},
          {"grid", g.counts}};
}

void write_samples_csv(std::ostream& os, const SampleResult& samples) {
  os << "a,b,c,cp,r,tau,eta,sign\n";
  std::string line;
  for (const auto& p : samples.points) {
    line.clear();
    line += format_number(p.a);
    line += ',';
    line += format_number(p.b);
    line += ',';
    line += format_number(p.c);
    line += ',';
    line += format_number(p.cp);
    if (p.params) {
      line += ',';
      line += format_number(p.params->r);
      line += ',';
      line += format_number(p.params->tau);
      line += ',';
      line += format_number(p.params->eta);
      line += ',';
      line += std::to_string(to_int(p.params->sign));
    } else {
      line += ",,,,";
    }
    line += '\n';
    os << line;
  }
}

}  // namespace gdiscord
