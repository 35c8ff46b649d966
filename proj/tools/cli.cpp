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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

#include "acceptance.hpp"
#include "gdiscord/channels.hpp"
#include "gdiscord/discord.hpp"
#include "gdiscord/errors.hpp"
#include "gdiscord/family.hpp"
#include "gdiscord/io.hpp"
#include "gdiscord/remote_prep.hpp"
#include "gdiscord/sampler.hpp"
#include "gdiscord/symplectic.hpp"

namespace gdiscord::cli {

namespace {

struct Failure {
  int code;
  std::string kind;
  std::string message;
};

[[noreturn]] void fail(int code, std::string kind, std::string message) {
  throw Failure{code, std::move(kind), std::move(message)};
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  std::replace(s.begin(), s.end(), '\r', ' ');
  return s;
}

double parse_tolerance(const std::string& text, const std::string& source) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value) || value < 0.0) {
    fail(kValidation, "validation", source + " must be a non-negative number, got '" + text + "'");
  }
  return value;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(kValidation, "validation", "cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// State given as --normal-form a,b,c,cp, --input <file> or --json <text>.
struct StateInput {
  std::vector<double> normal_form;
  std::string input;
  std::string json_text;

  void add_to(CLI::App* app) {
    auto* nf = app->add_option("--normal-form", normal_form, "a,b,c,cp")
                   ->delimiter(',')
                   ->expected(4);
    auto* in = app->add_option("--input", input, "state JSON file");
    auto* js = app->add_option("--json", json_text, "inline state JSON");
    nf->excludes(in)->excludes(js);
    in->excludes(js);
  }

  ParsedState parse() const {
    if (!normal_form.empty()) {
      const NormalFormCM nf{normal_form[0], normal_form[1], normal_form[2], normal_form[3]};
      if (!std::all_of(normal_form.begin(), normal_form.end(),
                       [](double x) { return std::isfinite(x); })) {
        fail(kValidation, "validation", "normal form entries must be finite");
      }
      return {embed_normal_form(nf), nf};
    }
    if (!input.empty()) return parse_state(parse_json_text(read_file(input)));
    if (!json_text.empty()) return parse_state(parse_json_text(json_text));
    fail(kValidation, "validation", "one of --normal-form, --input or --json is required");
  }
};

void require_bona_fide(const TwoModeCM& v, double tol) {
  const auto diag = validate_bona_fide(v, tol);
  if (!diag) {
    fail(kValidation, "not_bona_fide", std::string(to_string(diag.failure)) + ": " + diag.reason);
  }
}

NormalFormCM normal_form_of(const ParsedState& s) {
  return s.normal_form ? *s.normal_form : to_normal_form(s.cm);
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int cmd_discord(const StateInput& in, double tol, std::ostream& out) {
  const ParsedState s = in.parse();
  require_bona_fide(s.cm, tol);
  ScanOptions opts;
  opts.bona_fide_tolerance = tol;
  const DiscordReport numeric = gaussian_discord_numeric(s.cm, opts);

  json j;
  j["normal_form"] = to_json(normal_form_of(s));
  j["numeric_scan"] = to_json(numeric);
  try {
    const FamilyParams fp = membership(normal_form_of(s));
    const DiscordReport closed = gaussian_discord_closed_form(fp);
    j["family"] = to_json(fp);
    j["closed_form"] = to_json(closed);
    j["agreement_delta"] = round_significant(std::abs(closed.discord - numeric.discord));
  } catch (const OutOfFamily& e) {
    j["family"] = nullptr;
    j["closed_form"] = nullptr;
    j["agreement_delta"] = nullptr;
    j["family_reason"] = one_line(e.what());
  }
  j["discord"] = round_significant(numeric.discord);
  print_json(out, j);
  return kOk;
}

int cmd_decompose(const StateInput& in, double tol, std::ostream& out) {
  const ParsedState s = in.parse();
  require_bona_fide(s.cm, tol);
  const NormalFormCM nf = normal_form_of(s);
  const FamilyParams fp = membership(nf);
  json j = to_json(fp);
  j["channel"] = to_json(classify(fp.channel()));
  j["forward_error"] = round_significant(forward_error(fp, nf));
  print_json(out, j);
  return kOk;
}

int cmd_classify(std::optional<double> tau, std::optional<double> eta,
                 const std::string& json_text, std::ostream& out) {
  GaussianChannel ch = [&] {
    if (!json_text.empty()) return parse_channel(parse_json_text(json_text));
    if (!tau || !eta) fail(kValidation, "validation", "--tau and --eta (or --json) are required");
    return GaussianChannel(*tau, *eta);
  }();
  print_json(out, to_json(classify(ch)));
  return kOk;
}

struct SampleArgs {
  double a = 0.0;
  double b = 0.0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string output;
  std::string grid;
  std::string format = "csv";
  std::size_t bins = 200;
};

int cmd_sample(const SampleArgs& args, std::ostream& out) {
  const SampleResult res = sample_family({args.a, args.b, args.n, args.seed, args.threads});
  const auto grid_json = [&] { return to_json(occupancy_grid(res.points, args.a, args.b, args.bins)); };

  std::ofstream file;
  if (!args.output.empty()) {
    file.open(args.output, std::ios::binary);
    if (!file) fail(kValidation, "validation", "cannot write '" + args.output + "'");
  }
  std::ostream& dest = args.output.empty() ? out : file;
  if (args.format == "csv") {
    write_samples_csv(dest, res);
  } else {
    dest << grid_json().dump() << "\n";
  }
  if (!args.grid.empty()) {
    std::ofstream g(args.grid, std::ios::binary);
    if (!g) fail(kValidation, "validation", "cannot write '" + args.grid + "'");
    g << grid_json().dump() << "\n";
  }
  return kOk;
}

struct ConditionArgs {
  std::string measurement;
  std::vector<double> outcome;
  std::vector<double> mean;
  std::string mode = "B";
};

int cmd_condition(const StateInput& in, const ConditionArgs& args, double tol, std::ostream& out) {
  const ParsedState s = in.parse();
  require_bona_fide(s.cm, tol);
  const GaussianMeasurement m = parse_measurement(parse_json_text(args.measurement));
  Vec4 mean = Vec4::Zero();
  if (!args.mean.empty()) mean = Vec4(args.mean[0], args.mean[1], args.mean[2], args.mean[3]);

  const bool on_a = args.mode == "A";
  const Vec2 k = !args.outcome.empty() ? Vec2(args.outcome[0], args.outcome[1])
                 : on_a                ? Vec2(mean(0), mean(1))
                                       : Vec2(mean(2), mean(3));
  const ConditionalState state =
      on_a ? conditioning_on_mode_A(s.cm, mean, m, k) : condition_on_outcome(s.cm, mean, m, k);
  const Mat2 map = conditional_mean_map(on_a ? s.cm.swapped() : s.cm, m);
  json j;
  j["measured_mode"] = on_a ? "A" : "B";
  j["measurement"] = to_json(m);
  j["outcome"] = {round_significant(k(0)), round_significant(k(1))};
  j["conditional"] = to_json(state);
  j["mean_map"] = {{round_significant(map(0, 0)), round_significant(map(0, 1))},
                   {round_significant(map(1, 0)), round_significant(map(1, 1))}};
  print_json(out, j);
  return kOk;
}

int cmd_verify(int criterion, bool invariants_only, unsigned threads, std::ostream& out) {
  verify::VerifyOptions opts;
  opts.threads = threads;
  std::vector<verify::CheckResult> results;
  if (criterion > 0) {
    results.push_back(verify::run_criterion(criterion, opts));
  } else {
    if (!invariants_only) results = verify::run_acceptance(opts);
    const auto inv = verify::run_invariants(opts);
    results.insert(results.end(), inv.begin(), inv.end());
  }
  bool ok = true;
  for (const auto& r : results) {
    verify::print_result(out, r);
    ok = ok && r.passed;
  }
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Gaussian discord of two-mode Gaussian states", "gdiscord");
  app.require_subcommand(1);
  app.set_version_flag("--version", "gdiscord 1.0.0");

  std::optional<double> tolerance_flag;
  app.add_option("--tolerance", tolerance_flag,
                 "slack on nu_minus >= 1 (default 1e-9, env GDISCORD_TOLERANCE)");

  StateInput discord_in;
  auto* discord = app.add_subcommand("discord", "Gaussian discord: closed form and numeric scan");
  discord_in.add_to(discord);

  StateInput decompose_in;
  auto* decompose = app.add_subcommand("decompose", "EPR + local channel parameters of a state");
  decompose_in.add_to(decompose);

  std::optional<double> tau;
  std::optional<double> eta;
  std::string channel_json;
  auto* classify_cmd = app.add_subcommand("classify", "canonical form of a channel (tau, eta)");
  classify_cmd->add_option("--tau", tau, "transmissivity/gain tau");
  classify_cmd->add_option("--eta", eta, "added noise eta");
  classify_cmd->add_option("--json", channel_json, "inline channel JSON {\"tau\":..,\"eta\":..}");

  SampleArgs sample_args;
  auto* sample = app.add_subcommand("sample", "random family states at fixed a, b");
  sample->add_option("--a", sample_args.a, "local variance of mode A")->required();
  sample->add_option("--b", sample_args.b, "local variance of mode B")->required();
  sample->add_option("--n", sample_args.n, "number of points")->required();
  sample->add_option("--seed", sample_args.seed, "RNG seed")->required();
  sample->add_option("--threads", sample_args.threads, "worker threads (0 = all cores)");
  sample->add_option("--output", sample_args.output, "output file (default stdout)");
  sample->add_option("--grid", sample_args.grid, "also write the occupancy grid JSON here");
  sample->add_option("--format", sample_args.format, "csv (points) or json (occupancy grid)")
      ->check(CLI::IsMember({"csv", "json"}));
  sample->add_option("--bins", sample_args.bins, "occupancy grid bins per axis")
      ->check(CLI::PositiveNumber);

  StateInput condition_in;
  ConditionArgs condition_args;
  auto* condition = app.add_subcommand("condition", "state of one mode after measuring the other");
  condition_in.add_to(condition);
  condition->add_option("--measurement", condition_args.measurement,
                        "measurement JSON {\"u\":..,\"phi\":..} or {\"seed_cm\":[[..],[..]]}")
      ->required();
  condition->add_option("--outcome", condition_args.outcome, "q,p outcome (default: mean)")
      ->delimiter(',')
      ->expected(2);
  condition->add_option("--mean", condition_args.mean, "qA,pA,qB,pB first moments (default 0)")
      ->delimiter(',')
      ->expected(4);
  condition->add_option("--mode", condition_args.mode, "measured mode")
      ->check(CLI::IsMember({"A", "B"}));

  int criterion = 0;
  bool invariants_only = false;
  unsigned verify_threads = 0;
  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance and invariant suite");
  verify_cmd->add_option("--criterion", criterion, "run a single acceptance criterion (1-9)")
      ->check(CLI::Range(1, 9));
  verify_cmd->add_flag("--invariants-only", invariants_only, "skip the acceptance criteria");
  verify_cmd->add_option("--threads", verify_threads, "sampler threads (0 = all cores)");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << one_line(e.what()) << "\n";
    return kValidation;
  }

  try {
    double tol = kBonaFideTolerance;
    if (const char* env = std::getenv("GDISCORD_TOLERANCE"); env && *env) {
      tol = parse_tolerance(env, "GDISCORD_TOLERANCE");
    }
    if (tolerance_flag) {
      if (!std::isfinite(*tolerance_flag) || *tolerance_flag < 0.0) {
        fail(kValidation, "validation", "--tolerance must be a non-negative number");
      }
      tol = *tolerance_flag;
    }

    if (discord->parsed()) return cmd_discord(discord_in, tol, out);
    if (decompose->parsed()) return cmd_decompose(decompose_in, tol, out);
    if (classify_cmd->parsed()) return cmd_classify(tau, eta, channel_json, out);
    if (sample->parsed()) return cmd_sample(sample_args, out);
    if (condition->parsed()) return cmd_condition(condition_in, condition_args, tol, out);
    return cmd_verify(criterion, invariants_only, verify_threads, out);
  } catch (const Failure& f) {
    err << "error: " << f.kind << ": " << one_line(f.message) << "\n";
    return f.code;
  } catch (const OutOfFamily& e) {
    err << "error: out_of_family: " << one_line(e.what()) << "\n";
    return kOutOfFamily;
  } catch (const NumericalFailure& e) {
    err << "error: numerical: " << one_line(e.what()) << "\n";
    return kNumerical;
  } catch (const InvalidChannelParams& e) {
    err << "error: invalid_channel: " << one_line(e.what()) << "\n";
    return kValidation;
  } catch (const NotSqueezedThermalForm& e) {
    err << "error: validation: " << one_line(e.what()) << "\n";
    return kValidation;
  } catch (const Error& e) {
    err << "error: validation: " << one_line(e.what()) << "\n";
    return kValidation;  } catch (const json::exception& e) {
    err << "error: validation: " << one_line(e.what()) << "\n";
    return kValidation;
  }
}

}  // namespace gdiscord::cli
