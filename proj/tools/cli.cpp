// Copyright 2026 The zerocenter Authors.
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

#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "zerocenter/zerocenter.hpp"

namespace zerocenter::cli {
namespace {

namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LanguageConfig load_config(const CliOptions& o) {
  LanguageConfig config;
  if (o.language == "ja") {
    config = japanese_config();
  } else if (o.language == "en") {
    config = english_config();
  } else if (o.language == "custom") {
    if (o.config_path.empty()) throw UsageError("--lang custom requires --config PATH");
    std::istringstream in(read_file(o.config_path));
    config = parse_language_config(in);
  } else {
    throw UsageError("unknown language " + o.language + " (expected ja, en or custom)");
  }
  if (!o.lexicon_path.empty()) {
    std::istringstream in(read_file(o.lexicon_path));
    for (const auto& [lemma, rule] : parse_empathy_lexicon(in))
      config.empathy_lexicon[lemma] = rule;
  }
  return config;
}

int run_resolve(const CliOptions& o, const LanguageConfig& config, std::ostream& out,
                std::ostream& err) {
  const OutputMode mode = o.format == "records" ? OutputMode::Records : OutputMode::Trace;
  for (const auto& path : o.inputs) {
    Discourse d;
    try {
      d = parse_discourse(read_file(path));
    } catch (const ParseError& e) {
      err << path << ": " << e.what() << '\n';
      return kInputError;
    }
    try {
      auto results = resolve_discourse(d, config);
      if (mode == OutputMode::Trace && o.inputs.size() > 1)
        out << "### " << d.name << " (" << path << ")\n";
      out << serialize_result(results, mode, o.verbose);
    } catch (const NoInterpretationError& e) {
      err << path << ": " << e.what() << '\n';
      if (o.verbose) {
        for (const auto& r : e.rejected())
          err << "  " << reject_reason_name(r.reason) << "  " << r.interpretation.gloss
              << "  Cb: " << r.interpretation.anchor.cb.str() << '\n';
      }
      return kResolutionError;
    } catch (const ResolutionError& e) {
      err << path << ": " << e.what() << '\n';
      return kResolutionError;
    }
  }
  return kOk;
}

struct CheckOutcome {
  std::string name;
  bool pass = false;
  std::string note;
};

CheckOutcome check_one(const fs::path& disc, const fs::path& expected,
                       const LanguageConfig& config) {
  CheckOutcome r{disc.filename().string(), false, {}};
  try {
    auto results = resolve_discourse(parse_discourse(read_file(disc.string())), config);
    std::string got = serialize_result(results, OutputMode::Records);
    std::string want = read_file(expected.string());
    if (got == want) {
      r.pass = true;
      return r;
    }
    std::istringstream g(got), w(want);
    std::string gl, wl;
    int line = 1;
    while (true) {
      bool hg = static_cast<bool>(std::getline(g, gl));
      bool hw = static_cast<bool>(std::getline(w, wl));
      if (!hg && !hw) break;
      if (hg != hw || gl != wl) break;
      ++line;
    }
    r.note = "output differs at line " + std::to_string(line);
  } catch (const std::exception& e) {
    r.note = e.what();
  }
  return r;
}

int run_check(const CliOptions& o, const LanguageConfig& config, std::ostream& out,
              std::ostream& err) {
  std::vector<std::pair<fs::path, fs::path>> fixtures;
  for (const auto& dir : o.inputs) {
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) {
      err << "not a directory: " << dir << '\n';
      return kInputError;
    }
    for (const auto& entry : fs::directory_iterator(dir)) {
      const auto& p = entry.path();
      if (p.extension() != ".disc") continue;
      auto expected = p;
      expected.replace_extension(".expected");
      if (fs::exists(expected)) fixtures.emplace_back(p, expected);
    }
  }
  std::sort(fixtures.begin(), fixtures.end());

  std::vector<std::future<CheckOutcome>> pending;
  for (const auto& [disc, expected] : fixtures)
    pending.push_back(std::async(std::launch::async, check_one, disc, expected,
                                 std::cref(config)));
  int passed = 0;
  for (auto& f : pending) {
    CheckOutcome r = f.get();
    passed += r.pass;
    out << (r.pass ? "PASS  " : "FAIL  ") << r.name;
    if (!r.note.empty()) out << "  (" << r.note << ")";
    out << '\n';
  }
  out << passed << "/" << fixtures.size() << " passed\n";
  return passed == static_cast<int>(fixtures.size()) ? kOk : kCheckFailed;
}

}  // namespace

int run(const CliOptions& options, std::ostream& out, std::ostream& err) {
  try {
    LanguageConfig config = load_config(options);
    if (options.command == CliOptions::Command::Check)
      return run_check(options, config, out, err);
    return run_resolve(options, config, out, err);
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    err << e.what() << '\n';
    return kInputError;
  } catch (const ConfigError& e) {
    err << e.what() << '\n';
    return kInputError;
  }
}

int main_with_args(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Centering-based zero pronoun resolution", "zerocenter"};
  app.require_subcommand(1);
  CliOptions o;

  auto add_language = [&](CLI::App* sub) {
    sub->add_option("--lang", o.language, "Language configuration: ja, en or custom")
        ->check(CLI::IsMember({"ja", "en", "custom"}));
    sub->add_option("--config", o.config_path, "Language config file for --lang custom");
    sub->add_option("--lexicon", o.lexicon_path, "Extra empathy lexicon (lemma<TAB>rule)");
  };

  auto* resolve = app.add_subcommand("resolve", "Resolve discourse files");
  resolve->add_option("files", o.inputs, "Discourse files")->required();
  add_language(resolve);
  resolve->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"trace", "records"}));
  resolve->add_flag("-v,--verbose", o.verbose, "Show rejected candidates");

  auto* check = app.add_subcommand("check", "Compare records output against .expected files");
  check->add_option("dirs", o.inputs, "Fixture directories")->required();
  add_language(check);
  check->add_flag("-v,--verbose", o.verbose, "Verbose");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return kUsage;
  }
  o.command = app.got_subcommand(check) ? CliOptions::Command::Check
                                        : CliOptions::Command::Resolve;
  return run(o, out, err);
}

}  // namespace zerocenter::cli
